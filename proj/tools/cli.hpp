#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "agisos/agisos.hpp"
#include "json.hpp"

namespace agisos::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidation = 2,
  kBudget = 3,
  kTheoremPrecondition = 4,
  kInternal = 5,
};

int exit_code_for(ErrorCode code) noexcept;

/// {"vertices": [[int,...],...], "apex": [int,...]?, "scale": "p/q"?}
struct SimplexDocument {
  std::vector<LatticePoint> vertices;
  std::optional<LatticePoint> apex;
  std::optional<Rational> scale;

  friend bool operator==(const SimplexDocument&, const SimplexDocument&) = default;
};

/// Throws Error(RaggedInput) or Error(InvalidArgument) on schema violations.
SimplexDocument parse_document(const nlohmann::json& j);
nlohmann::json to_json(const SimplexDocument& doc);

nlohmann::json to_json(const LatticePoint& p);
nlohmann::json to_json(const WitnessPair& w);
nlohmann::json to_json(const BinomialSquareDecomposition& d);

/// FNV-1a 64 over the canonical dump, as "fnv1a64:<16 hex digits>".
std::string digest(const nlohmann::json& j);

/// Parses "a,b,c"; throws Error(InvalidArgument).
LatticePoint parse_point(const std::string& text);

/// Full command-line entry point. Reports go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace agisos::cli

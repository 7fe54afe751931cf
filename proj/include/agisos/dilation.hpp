#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agisos/lattice.hpp"

namespace agisos {

enum class WitnessPath {
  BeadAverage,           // w = sum a_i u_i, averaged from v +- (u_i - u_j)
  GreedyBead,            // a bead v under floor(2 beta), paired with 2w - v
  SpecialInteriorPoint,  // w = (n-2) u~
  Subdivision,           // resolved inside a subsimplex using u~ as a vertex
};

std::string_view to_string(WitnessPath path) noexcept;

/// Two distinct even points of kU averaging to target.
struct WitnessPair {
  LatticePoint target;
  LatticePoint z1;
  LatticePoint z2;
  WitnessPath path = WitnessPath::BeadAverage;
  /// Number of subdivision steps taken; zero unless path == Subdivision.
  std::size_t subdivision_depth = 0;
  /// The path that produced the pair in the innermost subsimplex.
  WitnessPath resolved_by = WitnessPath::BeadAverage;
};

/// w = sum beta_i u_i with sum beta_i = k, and the split 2 beta_i = floors_i + fracs_i.
struct ScaledBarycentric {
  std::vector<Rational> beta;
  std::vector<Coord> floors;
  std::vector<Rational> fracs;

  bool is_bead() const;
  Coord floor_sum() const;
};

/// Throws Error(NotInSimplex) when w is outside every dilate of s.
ScaledBarycentric scaled_barycentric(const Simplex& s, const LatticePoint& w);

/// Copies b over the longest prefix whose sum stays <= target, puts the
/// remainder in the next slot, zeros after. Throws Error(SumTooLarge).
std::vector<Coord> greedy_bounded_sum(std::span<const Coord> b, Coord target);

/// v = sum a_i u_i is averaged from v + u_i - u_j and v - u_i + u_j, with
/// i < j the two smallest indices where a is positive. Throws Error(IsVertex).
WitnessPair bead_average_witness(const Simplex& s, Coord k, std::span<const Coord> a);

/// The bead under floor(2 beta) chosen by greedy_bounded_sum, paired with its
/// reflection through w. Throws Error(InsufficientFloorSum) when
/// sum floor(2 beta_i) < k.
WitnessPair witness_large_k(const Simplex& s, Coord k, const LatticePoint& w, const ScaledBarycentric& sb);

struct WitnessOptions {
  /// Subdivision budget; unset means the number of even points of kU.
  std::optional<std::size_t> max_depth;
  EnumerationOptions enumeration;
};

/// The k = n - 2 construction for n >= 4: bead, greedy bead, the special
/// interior point u~, or subdivision around u~ followed by recursion.
/// Throws Error(DepthExhausted) or Error(InternalInvariantViolation) on
/// defects.
WitnessPair witness_full(const Simplex& s, const LatticePoint& w, const WitnessOptions& options = {});

/// max{2, n - 2}, the smallest dilation the construction covers.
Coord dilation_threshold(const Simplex& s) noexcept;

/// Dispatches to the cheapest construction available for (s, k). Throws
/// Error(KTooSmall), Error(NotInSimplex) or Error(IsVertex).
WitnessPair mediation_witness(const Simplex& s, Coord k, const LatticePoint& w, const WitnessOptions& options = {});

/// z1 != z2, both even, both in kU, z1 + z2 = 2 target.
bool validate_witness(const Simplex& s, Coord k, const WitnessPair& pair);

struct DilationReport {
  Coord k = 0;
  std::size_t lattice_points = 0;
  std::size_t even_points = 0;
  std::size_t non_vertex_points = 0;
  std::map<WitnessPath, std::size_t> path_counts;
  std::size_t max_subdivision_depth = 0;
  /// Sorted by target.
  std::vector<WitnessPair> witnesses;
  std::vector<std::pair<LatticePoint, std::string>> failures;
};

struct VerifyOptions {
  WitnessOptions witness;
  /// Worker threads; 0 or 1 runs inline. The report does not depend on it.
  unsigned threads = 1;
};

/// Runs mediation_witness on every non-vertex lattice point of kU and checks
/// each result. Throws Error(KTooSmall) or Error(BudgetExceeded).
DilationReport verify_dilation_theorem(const Simplex& s, Coord k, const VerifyOptions& options = {});

}  // namespace agisos

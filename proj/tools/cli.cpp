#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace agisos::cli {

using nlohmann::json;

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BudgetExceeded:
      return kBudget;
    case ErrorCode::KTooSmall:
      return kTheoremPrecondition;
    case ErrorCode::DepthExhausted:
    case ErrorCode::InternalInvariantViolation:
    case ErrorCode::DecompositionFailed:
    case ErrorCode::InsufficientFloorSum:
      return kInternal;
    default:
      return kValidation;
  }
}

namespace {

LatticePoint point_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be an array of integers");
  std::vector<Coord> coords;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " has a non-integer entry");
    coords.push_back(x.get<Coord>());
  }
  return LatticePoint(std::move(coords));
}

}  // namespace

SimplexDocument parse_document(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "input must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "vertices" && key != "apex" && key != "scale") {
      throw Error(ErrorCode::InvalidArgument, "unknown key '" + key + "'");
    }
  }
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty()) {
    throw Error(ErrorCode::InvalidArgument, "'vertices' must be a non-empty array");
  }
  SimplexDocument doc;
  for (const auto& v : j["vertices"]) doc.vertices.push_back(point_from_json(v, "vertex"));
  for (const auto& v : doc.vertices) {
    if (v.size() != doc.vertices.front().size()) throw Error(ErrorCode::RaggedInput, "vertices have different lengths");
  }
  if (j.contains("apex")) {
    doc.apex = point_from_json(j["apex"], "apex");
    if (doc.apex->size() != doc.vertices.front().size()) {
      throw Error(ErrorCode::RaggedInput, "apex length differs from vertex length");
    }
  }
  if (j.contains("scale")) {
    if (!j["scale"].is_string()) throw Error(ErrorCode::InvalidArgument, "'scale' must be a string \"p/q\"");
    doc.scale = parse_rational(j["scale"].get<std::string>());
  }
  return doc;
}

json to_json(const LatticePoint& p) { return json(std::vector<Coord>(p.coords().begin(), p.coords().end())); }

json to_json(const SimplexDocument& doc) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : doc.vertices) j["vertices"].push_back(to_json(v));
  if (doc.apex) j["apex"] = to_json(*doc.apex);
  if (doc.scale) j["scale"] = to_string(*doc.scale);
  return j;
}

json to_json(const WitnessPair& w) {
  return json{{"target", to_json(w.target)},
              {"z1", to_json(w.z1)},
              {"z2", to_json(w.z2)},
              {"path", std::string(to_string(w.path))},
              {"subdivision_depth", w.subdivision_depth},
              {"resolved_by", std::string(to_string(w.resolved_by))}};
}

json to_json(const BinomialSquareDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    terms.push_back({{"coefficient", to_string(t.coefficient)}, {"plus", to_json(t.plus)}, {"minus", to_json(t.minus)}});
  }
  return json{{"root_degree", d.root_degree}, {"terms", terms}, {"rendered", d.to_string()}};
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

LatticePoint parse_point(const std::string& text) {
  std::vector<Coord> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      coords.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "malformed point '" + text + "'");
    }
  }
  if (coords.empty()) throw Error(ErrorCode::InvalidArgument, "empty point");
  return LatticePoint(std::move(coords));
}

namespace {

struct GlobalOptions {
  std::uint64_t max_box_points = 10'000'000;
  std::optional<std::size_t> max_depth;
  std::string output = "json";
  unsigned threads = 1;
  bool timing = false;

  EnumerationOptions enumeration() const { return EnumerationOptions{max_box_points}; }
  WitnessOptions witness() const { return WitnessOptions{max_depth, enumeration()}; }
};

struct Report {
  json arguments = json::object();
  json input = json::object();
  json result = json::object();
  json statistics = json::object();
};

SimplexDocument load_document(const std::string& path) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
      j = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

const LatticePoint& require_apex(const SimplexDocument& doc) {
  if (!doc.apex) throw Error(ErrorCode::InvalidArgument, "this command needs an 'apex'");
  return *doc.apex;
}

json points_json(const PointSet& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

json chain_json(const std::vector<std::pair<LatticePoint, MidpointPair>>& chain) {
  json out = json::array();
  for (const auto& [y, pair] : chain) {
    out.push_back({{"point", to_json(y)}, {"pair", json::array({to_json(pair.first), to_json(pair.second)})}});
  }
  return out;
}

json rationals_json(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

void cmd_enumerate(const SimplexDocument& doc, Coord k, const GlobalOptions& g, Report& r) {
  const Simplex s = Simplex::create(doc.vertices);
  const PointSet points = enumerate_lattice_points(s, k, g.enumeration());
  const PointSet bead_set = beads(s, k);
  json listed = json::array();
  std::size_t evens = 0, bead_count = 0, vertices = 0;
  for (const auto& p : points) {
    const bool even = p.is_even(), bead = bead_set.contains(p), vertex = is_vertex(s, k, p);
    evens += even;
    bead_count += bead;
    vertices += vertex;
    listed.push_back({{"point", to_json(p)}, {"even", even}, {"bead", bead}, {"vertex", vertex}});
  }
  r.arguments["k"] = k;
  r.result = {{"k", k}, {"count", points.size()}, {"points", listed}};
  r.statistics = {{"even_points", evens}, {"beads", bead_count}, {"vertices", vertices},
                  {"search_box", search_box_size(s, k)}};
}

void cmd_mediated(const SimplexDocument& doc, const GlobalOptions& g, Report& r) {
  const Simplex s = Simplex::create(doc.vertices);
  const PointSet all = enumerate_lattice_points(s, 1, g.enumeration());
  const PointSet maximal = maximal_mediated_set(s, g.enumeration());
  const MediationReport check = is_mediated(s, maximal);
  json certificate = json::array();
  for (const auto& [y, pair] : check.certificate.entries) {
    certificate.push_back({{"point", to_json(y)}, {"pair", json::array({to_json(pair.first), to_json(pair.second)})}});
  }
  r.result = {{"maximal_mediated_set", points_json(maximal)},
              {"size", maximal.size()},
              {"mediated", check.mediated},
              {"certificate", certificate}};
  if (doc.apex) r.result["apex_member"] = maximal.contains(*doc.apex);
  r.statistics = {{"lattice_points", all.size()}, {"deleted", all.size() - maximal.size()}};
}

void cmd_is_sos(const SimplexDocument& doc, const GlobalOptions& g, Report& r) {
  const Agiform a = make_agiform(Simplex::create(doc.vertices), require_apex(doc), doc.scale.value_or(Rational(1)));
  const SosMembership m = is_sos(a, g.enumeration());
  r.result = {{"sos", m.sos},
              {"lambda", rationals_json(a.lambda().weights)},
              {"polynomial", a.polynomial().to_string()},
              {"chain", chain_json(m.chain)}};
}

void cmd_decompose(const SimplexDocument& doc, std::optional<Coord> blowup, const GlobalOptions& g, Report& r) {
  const Agiform a = make_agiform(Simplex::create(doc.vertices), require_apex(doc), doc.scale.value_or(Rational(1)));
  const BinomialSquareDecomposition d =
      blowup ? blowup_decompose(a, *blowup, g.enumeration()) : decompose(a, g.enumeration());
  if (blowup) r.arguments["blowup"] = *blowup;
  r.result = to_json(d);
  r.result["polynomial"] = a.polynomial().to_string();
  r.result["verified"] = reproduces(a, d);
  r.statistics = {{"squares", d.terms.size()}};
}

void cmd_witness(const SimplexDocument& doc, Coord k, const std::string& point, const GlobalOptions& g, Report& r) {
  const Simplex s = Simplex::create(doc.vertices);
  const LatticePoint w = parse_point(point);
  if (w.size() != s.dimension()) throw Error(ErrorCode::InvalidArgument, "point length differs from vertex length");
  const WitnessPair pair = mediation_witness(s, k, w, g.witness());
  r.arguments["k"] = k;
  r.arguments["point"] = to_json(w);
  r.result = to_json(pair);
  r.result["valid"] = validate_witness(s, k, pair);
}

void cmd_verify(const SimplexDocument& doc, std::optional<Coord> k_opt, const GlobalOptions& g, Report& r) {
  const Simplex s = Simplex::create(doc.vertices);
  const Coord k = k_opt.value_or(dilation_threshold(s));
  VerifyOptions options{g.witness(), g.threads};
  const DilationReport report = verify_dilation_theorem(s, k, options);
  json paths = json::object();
  for (const auto& [path, count] : report.path_counts) paths[std::string(to_string(path))] = count;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
  json failures = json::array();
  for (const auto& [p, why] : report.failures) failures.push_back({{"point", to_json(p)}, {"error", why}});
  r.arguments["k"] = k;
  r.result = {{"k", k},
              {"mediated", report.failures.empty()},
              {"failures", failures},
              {"witnesses", witnesses}};
  r.statistics = {{"lattice_points", report.lattice_points},
                  {"even_points", report.even_points},
                  {"non_vertex_points", report.non_vertex_points},
                  {"path_counts", paths},
                  {"max_subdivision_depth", report.max_subdivision_depth}};
}

struct DemoFlags {
  bool check_identity = false;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
};

void cmd_demo(const std::string& name, const DemoFlags& flags, const GlobalOptions& g, Report& r) {
  r.input = {{"demo", name}};
  if (name == "horn") {
    const SparsePolynomial f = horn_form();
    r.result["polynomial"] = f.to_string();
    if (flags.check_identity || !flags.samples) {
      r.result["identity"] = f == horn_alternate();
      r.result["cyclic_symmetric"] = f.cyclic_shift() == f;
      bool powers = true;
      for (Coord k = 2; k <= 3; ++k) {
        powers = powers && f.substitute_power(k) == horn_alternate().substitute_power(k) &&
                 f.substitute_power(k).cyclic_shift() == f.substitute_power(k);
      }
      r.result["identity_after_power_substitution"] = powers;
    }
    if (flags.samples) {
      const HornSampleReport s = horn_psd_sample(*flags.samples, flags.seed);
      json minima = json::object();
      for (const auto& [k, m] : s.minimum_by_power) minima[std::to_string(k)] = to_string(m);
      r.arguments["samples"] = *flags.samples;
      r.arguments["seed"] = flags.seed;
      r.result["samples"] = {{"count", s.count},
                             {"seed", s.seed},
                             {"minimum_by_power", minima},
                             {"negative_values", s.negative_values},
                             {"all_nonnegative", s.all_nonnegative()},
                             {"at_all_ones", to_string(s.at_all_ones)},
                             {"at_equality_case", to_string(s.at_equality)}};
    }
    return;
  }
  if (name != "motzkin" && name != "hurwitz") {
    throw Error(ErrorCode::InvalidArgument, "unknown demo '" + name + "' (motzkin, hurwitz, horn)");
  }
  const Agiform a = name == "motzkin" ? motzkin() : hurwitz_h();
  const SosMembership m = is_sos(a, g.enumeration());
  r.result = {{"polynomial", a.polynomial().to_string()},
              {"sos", m.sos},
              {"maximal_mediated_set", points_json(maximal_mediated_set(a.simplex(), g.enumeration()))}};
  if (name == "hurwitz") {
    const auto reference = hurwitz_reference_decomposition();
    r.result["reference_decomposition"] = to_json(reference);
    r.result["reference_verified"] = reproduces(a, reference);
    const auto solved = decompose(a, g.enumeration());
    r.result["decomposition"] = to_json(solved);
    r.result["decomposition_verified"] = reproduces(a, solved);
  }
  const auto blowup = blowup_decompose(a, 2, g.enumeration());
  r.result["blowup"] = to_json(blowup);
  r.result["blowup_verified"] = reproduces(a, blowup);
}

bool is_point(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& x : j) {
    if (!x.is_number_integer()) return false;
  }
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (is_point(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + j[i].dump();
    return s + ")";
  }
  return j.dump();
}

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else if (value.is_array() && !is_point(value)) {
      out << pad << key << ": [" << value.size() << "]\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          std::string line;
          for (const auto& [k, v] : item.items()) {
            if (v.is_array() && !is_point(v)) {
              std::string inner;
              for (const auto& e : v) inner += (inner.empty() ? "" : " ") + scalar_text(e);
              line += (line.empty() ? "" : "  ") + k + "=" + inner;
            } else {
              line += (line.empty() ? "" : "  ") + k + "=" + scalar_text(v);
            }
          }
          out << pad << "  - " << line << '\n';
        } else {
          out << pad << "  - " << scalar_text(item) << '\n';
        }
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << '\n';
    }
  }
}

void emit(const json& doc, const GlobalOptions& g, std::ostream& out) {
  if (g.output == "text") {
    render_text(doc, out, 0);
  } else {
    out << doc.dump(2) << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sum-of-squares certificates for agiforms via mediated sets"};
  app.name("agisos");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--max-box-points", g.max_box_points, "Cap on lattice-point search box size")->capture_default_str();
  app.add_option("--max-depth", g.max_depth, "Subdivision recursion budget (default: even points of kU)");
  app.add_option("--output", g.output, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for verify-theorem")->capture_default_str();
  app.add_flag("--timing", g.timing, "Add wall-clock timing to the report");

  std::string file;
  Coord k = 1;
  std::optional<Coord> k_opt;
  std::optional<Coord> blowup;
  std::string point;
  std::string demo_name;
  DemoFlags demo;

  auto* enumerate = app.add_subcommand("enumerate", "List the lattice points of kU");
  enumerate->add_option("file", file, "Simplex JSON file ('-' for stdin)")->required();
  enumerate->add_option("--k", k, "Dilation factor")->capture_default_str();

  auto* mediated = app.add_subcommand("mediated", "Maximal mediated set with certificate");
  mediated->add_option("file", file)->required();

  auto* sos = app.add_subcommand("is-sos", "Decide whether the agiform is a sum of squares");
  sos->add_option("file", file)->required();

  auto* dec = app.add_subcommand("decompose", "Binomial-square decomposition of the agiform");
  dec->add_option("file", file)->required();
  dec->add_option("--blowup", blowup, "Decompose in the variables x_i^(1/K)");

  auto* wit = app.add_subcommand("witness", "Two distinct even points of kU averaging to a point");
  wit->add_option("file", file)->required();
  wit->add_option("--k", k, "Dilation factor")->required();
  wit->add_option("--point", point, "Target point, e.g. \"4,4,4\"")->required();

  auto* verify = app.add_subcommand("verify-theorem", "Witness every non-vertex lattice point of kU");
  verify->add_option("file", file)->required();
  verify->add_option("--k", k_opt, "Dilation factor (default: max{2, n-2})");

  auto* demo_cmd = app.add_subcommand("demo", "Named forms: motzkin, hurwitz, horn");
  demo_cmd->add_option("name", demo_name)->required()->check(CLI::IsMember({"motzkin", "hurwitz", "horn"}));
  demo_cmd->add_flag("--check-identity", demo.check_identity, "Check the Horn identity and symmetry");
  demo_cmd->add_option("--samples", demo.samples, "Random rational evaluations of the Horn form");
  demo_cmd->add_option("--seed", demo.seed, "Sampling seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kValidation;
  }

  const auto started = std::chrono::steady_clock::now();
  Report r;
  std::string command;
  try {
    if (demo_cmd->parsed()) {
      command = "demo";
      cmd_demo(demo_name, demo, g, r);
    } else {
      const SimplexDocument doc = load_document(file);
      r.input = to_json(doc);
      if (enumerate->parsed()) {
        command = "enumerate";
        cmd_enumerate(doc, k, g, r);
      } else if (mediated->parsed()) {
        command = "mediated";
        cmd_mediated(doc, g, r);
      } else if (sos->parsed()) {
        command = "is-sos";
        cmd_is_sos(doc, g, r);
      } else if (dec->parsed()) {
        command = "decompose";
        cmd_decompose(doc, blowup, g, r);
      } else if (wit->parsed()) {
        command = "witness";
        cmd_witness(doc, k, point, g, r);
      } else {
        command = "verify-theorem";
        cmd_verify(doc, k_opt, g, r);
      }
    }
  } catch (const Error& e) {
    err << "agisos: " << e.what() << '\n';
    const int code = exit_code_for(e.code());
    emit(json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"exit_code", code}}, g, out);
    return code;
  }

  json doc{{"command", command},
           {"arguments", r.arguments},
           {"input", r.input},
           {"input_digest", digest(r.input)},
           {"result", r.result}};
  if (!r.statistics.empty()) doc["statistics"] = r.statistics;
  if (g.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    doc["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  emit(doc, g, out);
  return kSuccess;
}

}  // namespace agisos::cli

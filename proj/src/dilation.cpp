#include "agisos/dilation.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "agisos/error.hpp"

namespace agisos {

using detail::checked_add;
using detail::checked_mul;

std::string_view to_string(WitnessPath path) noexcept {
  switch (path) {
    case WitnessPath::BeadAverage: return "BeadAverage";
    case WitnessPath::GreedyBead: return "GreedyBead";
    case WitnessPath::SpecialInteriorPoint: return "SpecialInteriorPoint";
    case WitnessPath::Subdivision: return "Subdivision";
  }
  return "Unknown";
}

bool ScaledBarycentric::is_bead() const {
  return std::all_of(beta.begin(), beta.end(), [](const Rational& b) { return b.get_den() == 1; });
}

Coord ScaledBarycentric::floor_sum() const {
  Coord s = 0;
  for (Coord f : floors) s = checked_add(s, f);
  return s;
}

ScaledBarycentric scaled_barycentric(const Simplex& s, const LatticePoint& w) {
  auto beta = s.coefficients(w);
  if (!beta) throw Error(ErrorCode::NotInSimplex, "point " + w.to_string() + " is outside the span of the simplex");
  ScaledBarycentric sb;
  sb.beta = std::move(*beta);
  for (const auto& b : sb.beta) {
    if (sgn(b) < 0) throw Error(ErrorCode::NotInSimplex, "point " + w.to_string() + " has a negative weight");
    const Rational twice = 2 * b;
    const BigInt f = floor(twice);
    if (!f.fits_slong_p()) throw Error(ErrorCode::Overflow, "floor of 2*beta does not fit a machine integer");
    sb.floors.push_back(f.get_si());
    sb.fracs.push_back(twice - Rational(f));
  }
  return sb;
}

std::vector<Coord> greedy_bounded_sum(std::span<const Coord> b, Coord target) {
  if (target < 0) throw Error(ErrorCode::InvalidArgument, "target sum must be non-negative");
  Coord total = 0;
  for (Coord x : b) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "bounds must be non-negative");
    total = checked_add(total, x);
  }
  if (target > total) {
    throw Error(ErrorCode::SumTooLarge,
                "target " + std::to_string(target) + " exceeds bound sum " + std::to_string(total));
  }
  std::vector<Coord> a(b.size(), 0);
  Coord partial = 0;
  std::size_t i = 0;
  // The largest prefix with partial sum <= target is copied verbatim.
  while (i < b.size() && partial + b[i] <= target) {
    a[i] = b[i];
    partial += b[i];
    ++i;
  }
  if (i < b.size()) a[i] = target - partial;
  return a;
}

namespace {

LatticePoint combination(const Simplex& s, std::span<const Coord> a) {
  LatticePoint v = LatticePoint::zero(s.dimension());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) v += s.vertex(i).scaled(a[i]);
  }
  return v;
}

[[noreturn]] void invariant_violation(const std::string& what) {
  throw Error(ErrorCode::InternalInvariantViolation, what);
}

}  // namespace

WitnessPair bead_average_witness(const Simplex& s, Coord k, std::span<const Coord> a) {
  if (a.size() != s.vertex_count()) throw Error(ErrorCode::ArityMismatch, "composition length differs from vertex count");
  Coord total = 0;
  for (Coord x : a) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "composition entries must be non-negative");
    total = checked_add(total, x);
  }
  if (total != k) throw Error(ErrorCode::InvalidArgument, "composition does not sum to k");

  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < a.size() && positive.size() < 2; ++i) {
    if (a[i] > 0) positive.push_back(i);
  }
  const LatticePoint v = combination(s, a);
  if (positive.size() < 2) throw Error(ErrorCode::IsVertex, "bead " + v.to_string() + " is a vertex of kU");

  const LatticePoint shift = s.vertex(positive[0]) - s.vertex(positive[1]);
  WitnessPair out;
  out.target = v;
  out.z1 = v + shift;
  out.z2 = v - shift;
  out.path = out.resolved_by = WitnessPath::BeadAverage;
  return out;
}

WitnessPair witness_large_k(const Simplex& s, Coord k, const LatticePoint& w, const ScaledBarycentric& sb) {
  if (sb.is_bead()) throw Error(ErrorCode::InvalidArgument, "point " + w.to_string() + " is a bead");
  if (sb.floor_sum() < k) {
    throw Error(ErrorCode::InsufficientFloorSum, "sum of floor(2 beta) is " + std::to_string(sb.floor_sum()) +
                                                     " < k = " + std::to_string(k));
  }
  const auto a = greedy_bounded_sum(sb.floors, k);
  WitnessPair out;
  out.target = w;
  out.z1 = combination(s, a);
  out.z2 = w.scaled(2) - out.z1;
  out.path = out.resolved_by = WitnessPath::GreedyBead;
  if (!contains(s, k, out.z2)) invariant_violation("reflected point " + out.z2.to_string() + " left kU");
  return out;
}

Coord dilation_threshold(const Simplex& s) noexcept {
  const auto n = static_cast<Coord>(s.vertex_count());
  return std::max<Coord>(2, n - 2);
}

namespace {

struct FullContext {
  const Simplex& original;
  Coord k;
  const WitnessOptions& options;
  std::optional<std::size_t> budget;

  std::size_t remaining_budget() {
    if (!budget) {
      budget = options.max_depth ? *options.max_depth
                                 : even_points(enumerate_lattice_points(original, k, options.enumeration)).size();
    }
    return *budget;
  }
};

WitnessPair full_step(FullContext& ctx, const Simplex& current, const LatticePoint& w, std::size_t depth) {
  const Coord k = ctx.k;
  const auto n = static_cast<Coord>(current.vertex_count());
  const ScaledBarycentric sb = scaled_barycentric(current, w);

  if (sb.is_bead()) {
    std::vector<Coord> a;
    for (const auto& b : sb.beta) a.push_back(b.get_num().get_si());
    if (depth > 0 && is_vertex(current, k, w)) invariant_violation("target became a subsimplex vertex");
    return bead_average_witness(current, k, a);
  }
  const Coord floor_sum = sb.floor_sum();
  if (floor_sum >= n - 2) return witness_large_k(current, k, w, sb);
  if (floor_sum != n - 3) invariant_violation("sum of floor(2 beta) is " + std::to_string(floor_sum));

  Rational weight_sum = 0;
  for (const auto& f : sb.fracs) {
    if (sgn(f) == 0) invariant_violation("a fractional part {2 beta_i} vanished");
    weight_sum += 1 - f;
  }
  if (weight_sum != 1) invariant_violation("weights 1 - {2 beta_i} do not sum to 1");

  // u~ = sum (1 + floor(2 beta_i)) u_i - 2w = sum (1 - {2 beta_i}) u_i.
  std::vector<Coord> d(sb.floors.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = sb.floors[i] + 1;
  const LatticePoint interior = combination(current, d) - w.scaled(2);
  if (!interior.is_even()) invariant_violation("u~ = " + interior.to_string() + " is not even");
  if (interior.coordinate_sum() != current.degree_sum()) invariant_violation("u~ is off the degree hyperplane");
  const auto interior_weights = current.coefficients(interior);
  if (!interior_weights) invariant_violation("u~ left the span of the simplex");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if ((*interior_weights)[i] != 1 - sb.fracs[i]) invariant_violation("u~ has unexpected barycentric weights");
  }

  if (w == interior.scaled(n - 2)) {
    const auto it = std::find_if(d.begin(), d.end(), [](Coord x) { return x >= 2; });
    if (it == d.end()) invariant_violation("no d_i >= 2 with w = (n-2) u~");
    const auto l = static_cast<std::size_t>(it - d.begin());
    const Rational coefficient = Rational((n - 1) * d[l], 2 * n - 3) - 1;
    if (sgn(coefficient) <= 0) invariant_violation("coefficient of u_l in (n-1) u~ - u_l is not positive");
    WitnessPair out;
    out.target = w;
    out.z1 = interior.scaled(n - 3) + current.vertex(l);
    out.z2 = interior.scaled(n - 1) - current.vertex(l);
    out.path = out.resolved_by = WitnessPath::SpecialInteriorPoint;
    return out;
  }

  if (depth >= ctx.remaining_budget()) {
    throw Error(ErrorCode::DepthExhausted, "subdivision depth " + std::to_string(depth) + " reached the budget at " +
                                               w.to_string());
  }
  for (std::size_t l = 0; l < current.vertex_count(); ++l) {
    std::optional<Simplex> sub;
    try {
      sub = current.with_vertex(l, interior);
    } catch (const Error& e) {
      invariant_violation(std::string("subsimplex failed validation: ") + e.what());
    }
    if (!contains(*sub, k, w)) continue;
    WitnessPair inner = full_step(ctx, *sub, w, depth + 1);
    if (inner.path != WitnessPath::Subdivision) {
      inner.resolved_by = inner.path;
      inner.path = WitnessPath::Subdivision;
      inner.subdivision_depth = 1;
    } else {
      ++inner.subdivision_depth;
    }
    return inner;
  }
  invariant_violation("no subsimplex contains " + w.to_string());
}

}  // namespace

WitnessPair witness_full(const Simplex& s, const LatticePoint& w, const WitnessOptions& options) {
  const auto n = static_cast<Coord>(s.vertex_count());
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "the k = n - 2 construction needs n >= 4");
  const Coord k = n - 2;
  if (!contains(s, k, w)) throw Error(ErrorCode::NotInSimplex, "point " + w.to_string() + " is outside kU");
  if (is_vertex(s, k, w)) throw Error(ErrorCode::IsVertex, "point " + w.to_string() + " is a vertex of kU");
  FullContext ctx{s, k, options, std::nullopt};
  WitnessPair out = full_step(ctx, s, w, 0);
  if (!validate_witness(s, k, out)) invariant_violation("constructed pair for " + w.to_string() + " failed validation");
  return out;
}

WitnessPair mediation_witness(const Simplex& s, Coord k, const LatticePoint& w, const WitnessOptions& options) {
  const auto n = static_cast<Coord>(s.vertex_count());
  if (k < dilation_threshold(s)) {
    throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(k) + " is below max{2, n-2} = " +
                                          std::to_string(dilation_threshold(s)));
  }
  if (!contains(s, k, w)) throw Error(ErrorCode::NotInSimplex, "point " + w.to_string() + " is outside kU");
  if (is_vertex(s, k, w)) throw Error(ErrorCode::IsVertex, "point " + w.to_string() + " is a vertex of kU");

  const ScaledBarycentric sb = scaled_barycentric(s, w);
  WitnessPair out;
  if (sb.is_bead()) {
    std::vector<Coord> a;
    for (const auto& b : sb.beta) a.push_back(b.get_num().get_si());
    out = bead_average_witness(s, k, a);
  } else if (k >= n - 1) {
    try {
      out = witness_large_k(s, k, w, sb);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InsufficientFloorSum) invariant_violation(e.what());
      throw;
    }
  } else {
    out = witness_full(s, w, options);
  }
  if (!validate_witness(s, k, out)) invariant_violation("constructed pair for " + w.to_string() + " failed validation");
  return out;
}

bool validate_witness(const Simplex& s, Coord k, const WitnessPair& pair) {
  const auto& [target, z1, z2, path, depth, resolved] = pair;
  if (z1 == z2 || !z1.is_even() || !z2.is_even()) return false;
  if (z1.size() != target.size() || z2.size() != target.size()) return false;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (z1[j] + z2[j] != 2 * target[j]) return false;
  }
  return contains(s, k, z1) && contains(s, k, z2);
}

DilationReport verify_dilation_theorem(const Simplex& s, Coord k, const VerifyOptions& options) {
  if (k < dilation_threshold(s)) {
    throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(k) + " is below max{2, n-2} = " +
                                          std::to_string(dilation_threshold(s)));
  }
  const PointSet points = enumerate_lattice_points(s, k, options.witness.enumeration);
  DilationReport report;
  report.k = k;
  report.lattice_points = points.size();
  report.even_points = even_points(points).size();

  WitnessOptions witness_options = options.witness;
  if (!witness_options.max_depth) witness_options.max_depth = report.even_points;

  std::vector<LatticePoint> targets;
  for (const auto& p : points) {
    if (!is_vertex(s, k, p)) targets.push_back(p);
  }
  report.non_vertex_points = targets.size();

  struct Outcome {
    std::optional<WitnessPair> pair;
    std::string error;
  };
  std::vector<Outcome> outcomes(targets.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        WitnessPair pair = mediation_witness(s, k, targets[i], witness_options);
        if (validate_witness(s, k, pair)) {
          outcomes[i].pair = std::move(pair);
        } else {
          outcomes[i].error = "witness failed validation";
        }
      } catch (const Error& e) {
        outcomes[i].error = e.what();
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || targets.size() < 2) {
    work(0, targets.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (targets.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < targets.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(targets.size(), begin + chunk));
    }
  }

  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (outcomes[i].pair) {
      const auto& pair = *outcomes[i].pair;
      ++report.path_counts[pair.path];
      report.max_subdivision_depth = std::max(report.max_subdivision_depth, pair.subdivision_depth);
      report.witnesses.push_back(pair);
    } else {
      report.failures.emplace_back(targets[i], outcomes[i].error);
    }
  }
  return report;
}

}  // namespace agisos

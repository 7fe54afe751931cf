#include "agisos/agiform.hpp"

#include <map>
#include <random>
#include <sstream>

#include "agisos/dilation.hpp"
#include "agisos/error.hpp"
#include "agisos/lp.hpp"

namespace agisos {

SparsePolynomial Agiform::polynomial() const {
  SparsePolynomial p(simplex_.dimension());
  for (std::size_t i = 0; i < simplex_.vertex_count(); ++i) p.add_term(simplex_.vertex(i), lambda_.weights[i]);
  p.add_term(apex_, -1);
  return p * scale_;
}

Agiform make_agiform(const Simplex& s, const LatticePoint& apex, const Rational& scale) {
  if (sgn(scale) <= 0) throw Error(ErrorCode::NonpositiveScale, "scale must be positive");
  if (!contains(s, 1, apex)) throw Error(ErrorCode::PointOutsideSimplex, "apex " + apex.to_string() + " is outside U");
  return Agiform(s, apex, barycentric_coordinates(s, apex), scale);
}

SparsePolynomial BinomialSquareDecomposition::expand() const {
  SparsePolynomial out(arity);
  for (const auto& t : terms) {
    SparsePolynomial binomial = SparsePolynomial::monomial(t.plus) - SparsePolynomial::monomial(t.minus);
    out += (binomial * binomial) * t.coefficient;
  }
  return out;
}

namespace {

std::string render_monomial(const LatticePoint& e, Coord root, std::span<const std::string> names) {
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    Rational q(e[i], root);
    q.canonicalize();
    if (q == 1) {
      factors.push_back(names[i]);
    } else if (q.get_den() == 1) {
      factors.push_back(names[i] + "^" + q.get_str());
    } else {
      factors.push_back(names[i] + "^(" + q.get_str() + ")");
    }
  }
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) out += "*" + factors[f];
  return out;
}

}  // namespace

std::string BinomialSquareDecomposition::to_string(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_variable_names(arity);
    names = fallback;
  }
  if (names.size() != arity) throw Error(ErrorCode::ArityMismatch, "wrong number of variable names");
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j) os << " + ";
    if (terms[j].coefficient != 1) os << agisos::to_string(terms[j].coefficient) << '*';
    os << '(' << render_monomial(terms[j].plus, root_degree, names) << " - "
       << render_monomial(terms[j].minus, root_degree, names) << ")^2";
  }
  return os.str();
}

SosMembership is_sos(const Agiform& a, const EnumerationOptions& options) {
  return sos_membership(a.simplex(), a.apex(), options);
}

BinomialSquareDecomposition decompose(const Agiform& a, const EnumerationOptions& options) {
  BinomialSquareDecomposition out;
  out.arity = a.simplex().dimension();
  const SparsePolynomial target = a.polynomial();
  if (target.is_zero()) return out;

  const PointSet maximal = maximal_mediated_set(a.simplex(), options);
  if (!maximal.contains(a.apex())) {
    throw Error(ErrorCode::NotSos, "apex " + a.apex().to_string() + " is outside the maximal mediated set");
  }

  struct Candidate {
    LatticePoint z1, z2, mid;
  };
  std::vector<Candidate> candidates;
  const PointSet evens = even_points(maximal);
  for (auto i = evens.begin(); i != evens.end(); ++i) {
    for (auto j = std::next(i); j != evens.end(); ++j) {
      LatticePoint mid = (*i + *j).halved();
      if (maximal.contains(mid)) candidates.push_back({*i, *j, std::move(mid)});
    }
  }

  std::map<LatticePoint, std::size_t> row_of;
  auto row = [&](const LatticePoint& p) { return row_of.try_emplace(p, row_of.size()).first->second; };
  for (const auto& [e, c] : target.terms()) row(e);
  for (const auto& c : candidates) {
    row(c.z1);
    row(c.z2);
    row(c.mid);
  }

  std::vector<std::vector<Rational>> A(row_of.size(), std::vector<Rational>(candidates.size()));
  std::vector<Rational> b(row_of.size());
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    A[row_of.at(candidates[j].z1)][j] += 1;
    A[row_of.at(candidates[j].z2)][j] += 1;
    A[row_of.at(candidates[j].mid)][j] -= 2;
  }
  for (const auto& [e, c] : target.terms()) b[row_of.at(e)] = c;

  const auto solved = lp::find_nonnegative_solution(A, b);
  if (!solved.feasible) {
    throw Error(ErrorCode::DecompositionFailed, "no non-negative combination of " + std::to_string(candidates.size()) +
                                                    " binomial squares matches the agiform");
  }
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (sgn(solved.solution[j]) == 0) continue;
    out.terms.push_back({solved.solution[j], candidates[j].z1.halved(), candidates[j].z2.halved()});
  }
  if (out.expand() != target) throw Error(ErrorCode::InternalInvariantViolation, "decomposition does not re-expand");
  return out;
}

BinomialSquareDecomposition blowup_decompose(const Agiform& a, Coord k, const EnumerationOptions& options) {
  if (k < dilation_threshold(a.simplex())) {
    throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(k) + " is below max{2, n-2} = " +
                                          std::to_string(dilation_threshold(a.simplex())));
  }
  const Agiform dilated = make_agiform(a.simplex().dilated(k), a.apex().scaled(k), a.scale());
  BinomialSquareDecomposition out = decompose(dilated, options);
  out.root_degree = k;
  if (!reproduces(a, out)) throw Error(ErrorCode::InternalInvariantViolation, "blow-up decomposition does not re-expand");
  return out;
}

bool reproduces(const Agiform& a, const BinomialSquareDecomposition& d) {
  if (d.arity != a.simplex().dimension()) return false;
  for (const auto& t : d.terms) {
    if (sgn(t.coefficient) <= 0 || t.plus == t.minus) return false;
  }
  return d.expand() == a.polynomial().substitute_power(d.root_degree);
}

Agiform motzkin() {
  return make_agiform(Simplex::create({{4, 2, 0}, {2, 4, 0}, {0, 0, 6}}), {2, 2, 2}, 3);
}

Agiform hurwitz_h() {
  return make_agiform(Simplex::create({{6, 0, 0}, {0, 6, 0}, {0, 0, 6}}), {2, 2, 2}, 3);
}

BinomialSquareDecomposition hurwitz_reference_decomposition() {
  BinomialSquareDecomposition d;
  d.arity = 3;
  d.terms = {
      {Rational(3, 2), {2, 1, 0}, {0, 1, 2}},  // x^2 y - y z^2
      {Rational(1), {3, 0, 0}, {1, 2, 0}},     // x^3 - x y^2
      {Rational(1, 2), {2, 1, 0}, {0, 3, 0}},  // x^2 y - y^3
      {Rational(1), {0, 0, 3}, {0, 2, 1}},     // z^3 - y^2 z
      {Rational(1, 2), {0, 1, 2}, {0, 3, 0}},  // y z^2 - y^3
  };
  return d;
}

namespace {

SparsePolynomial square_of(std::size_t arity, std::size_t i) {
  std::vector<Coord> e(arity, 0);
  e[i] = 2;
  return SparsePolynomial::monomial(LatticePoint(std::move(e)));
}

}  // namespace

SparsePolynomial horn_form() {
  constexpr std::size_t n = 5;
  SparsePolynomial sum(n);
  for (std::size_t j = 0; j < n; ++j) sum += square_of(n, j);
  SparsePolynomial out = sum * sum;
  for (std::size_t j = 0; j < n; ++j) out -= Rational(4) * (square_of(n, j) * square_of(n, (j + 1) % n));
  return out;
}

SparsePolynomial horn_alternate() {
  constexpr std::size_t n = 5;
  SparsePolynomial alternating(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j % 2 == 0) {
      alternating += square_of(n, j);
    } else {
      alternating -= square_of(n, j);
    }
  }
  const auto x1 = square_of(n, 0), x2 = square_of(n, 1), x4 = square_of(n, 3), x5 = square_of(n, 4);
  return alternating * alternating + Rational(4) * ((x2 - x1) * x5) + Rational(4) * (x1 * x4);
}

HornSampleReport horn_psd_sample(std::size_t count, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be at least 1");
  const SparsePolynomial f = horn_form();
  const std::vector<SparsePolynomial> forms = {f, f.substitute_power(2), f.substitute_power(3)};

  HornSampleReport report;
  report.count = count;
  report.seed = seed;
  for (Coord k = 1; k <= 3; ++k) report.minimum_by_power.emplace_back(k, Rational(0));

  // Raw engine output keeps the stream identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<Rational> point(5);
  for (std::size_t s = 0; s < count; ++s) {
    for (auto& x : point) {
      const auto num = static_cast<long>(rng() % 41) - 20;
      const auto den = static_cast<long>(rng() % 10) + 1;
      x = Rational(num, den);
      x.canonicalize();
    }
    for (std::size_t k = 0; k < forms.size(); ++k) {
      const Rational value = forms[k].evaluate(point);
      if (sgn(value) < 0) ++report.negative_values;
      auto& minimum = report.minimum_by_power[k].second;
      if (s == 0 || value < minimum) minimum = value;
    }
  }
  const std::vector<Rational> ones(5, Rational(1));
  const std::vector<Rational> equality = {1, 1, 0, 0, 0};
  report.at_all_ones = f.evaluate(ones);
  report.at_equality = f.evaluate(equality);
  return report;
}

}  // namespace agisos

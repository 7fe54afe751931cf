#include "agisos/poly.hpp"

#include <sstream>

#include "agisos/error.hpp"

namespace agisos {

bool GradedLexLess::operator()(const LatticePoint& a, const LatticePoint& b) const {
  const Coord da = a.coordinate_sum();
  const Coord db = b.coordinate_sum();
  if (da != db) return da < db;
  return a < b;
}

namespace {

void require_arity(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::ArityMismatch, "polynomials in " + std::to_string(a) + " and " + std::to_string(b) +
                                              " variables");
  }
}

void require_exponent(const LatticePoint& e) {
  for (Coord c : e.coords()) {
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent " + e.to_string());
  }
}

Rational power(const Rational& base, Coord e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

}  // namespace

SparsePolynomial SparsePolynomial::constant(std::size_t arity, const Rational& c) {
  SparsePolynomial p(arity);
  p.add_term(LatticePoint::zero(arity), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(LatticePoint exponent, const Rational& coefficient) {
  SparsePolynomial p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  std::vector<Coord> e(arity, 0);
  e[index] = 1;
  return monomial(LatticePoint(std::move(e)));
}

Rational SparsePolynomial::coefficient(const LatticePoint& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

PointSet SparsePolynomial::support() const {
  PointSet out;
  for (const auto& [e, c] : terms_) out.insert(e);
  return out;
}

void SparsePolynomial::add_term(const LatticePoint& exponent, const Rational& c) {
  require_arity(arity_, exponent.size());
  require_exponent(exponent);
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  require_arity(arity_, other.arity_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  require_arity(arity_, other.arity_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  require_arity(a.arity_, b.arity_);
  SparsePolynomial out(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> point) const {
  require_arity(arity_, point.size());
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] != 0) term *= power(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

SparsePolynomial SparsePolynomial::substitute_power(Coord k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "power substitution needs k >= 1");
  SparsePolynomial out(arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e.scaled(k), c);
  return out;
}

SparsePolynomial SparsePolynomial::cyclic_shift() const {
  SparsePolynomial out(arity_);
  for (const auto& [e, c] : terms_) {
    std::vector<Coord> shifted(arity_);
    for (std::size_t i = 0; i < arity_; ++i) shifted[(i + 1) % arity_] = e[i];
    out.terms_.emplace(LatticePoint(std::move(shifted)), c);
  }
  return out;
}

std::string SparsePolynomial::to_string(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_variable_names(arity_);
    names = fallback;
  }
  if (names.size() != arity_) throw Error(ErrorCode::ArityMismatch, "wrong number of variable names");
  if (terms_.empty()) return "0";

  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
    }
    if (magnitude != 1 || factors.empty()) factors.insert(factors.begin(), agisos::to_string(magnitude));
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) os << '*';
      os << factors[f];
    }
  }
  return os.str();
}

SparsePolynomial pow(const SparsePolynomial& p, unsigned exponent) {
  SparsePolynomial out = SparsePolynomial::constant(p.arity(), 1);
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

std::vector<std::string> default_variable_names(std::size_t n, std::string_view stem) {
  std::vector<std::string> out;
  if (n <= 3 && stem == "x") {
    static const char* xyz[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(xyz[i]);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(stem) + std::to_string(i + 1));
  return out;
}

}  // namespace agisos

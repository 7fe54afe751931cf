#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agisos/lattice.hpp"
#include "agisos/rational.hpp"

namespace agisos {

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const;
};

/// Exact-rational polynomial in a fixed number of variables, keyed by
/// non-negative exponent vectors. Zero coefficients are never stored, so
/// equal polynomials have equal term maps.
class SparsePolynomial {
 public:
  using TermMap = std::map<LatticePoint, Rational, GradedLexLess>;

  explicit SparsePolynomial(std::size_t arity) : arity_(arity) {}

  static SparsePolynomial constant(std::size_t arity, const Rational& c);
  static SparsePolynomial monomial(LatticePoint exponent, const Rational& coefficient = 1);
  static SparsePolynomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const LatticePoint& exponent) const;
  PointSet support() const;

  /// Adds c * x^exponent in place.
  void add_term(const LatticePoint& exponent, const Rational& c);

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Rational& c);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  friend SparsePolynomial operator*(const Rational& c, SparsePolynomial a) { return a *= c; }
  SparsePolynomial operator-() const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  Rational evaluate(std::span<const Rational> point) const;

  /// p(x_1^k, ..., x_n^k).
  SparsePolynomial substitute_power(Coord k) const;

  /// Renames x_i to x_{i+1 mod n}.
  SparsePolynomial cyclic_shift() const;

  /// Terms in descending graded lex order, e.g. "3/2*x^2*y - y*z^2". Names
  /// default to x,y,z for up to three variables and x1..xn otherwise.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t arity_;
  TermMap terms_;
};

SparsePolynomial pow(const SparsePolynomial& p, unsigned exponent);

std::vector<std::string> default_variable_names(std::size_t n, std::string_view stem = "x");

}  // namespace agisos

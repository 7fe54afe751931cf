#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "agisos/lattice.hpp"
#include "agisos/mediated.hpp"
#include "agisos/poly.hpp"

namespace agisos {

/// scale * (lambda_1 x^{u_1} + ... + lambda_n x^{u_n} - x^w), where lambda
/// is the barycentric representation of the apex w in U.
class Agiform {
 public:
  Agiform(Simplex simplex, LatticePoint apex, BarycentricCoords lambda, Rational scale)
      : simplex_(std::move(simplex)), apex_(std::move(apex)), lambda_(std::move(lambda)), scale_(std::move(scale)) {}

  const Simplex& simplex() const noexcept { return simplex_; }
  const LatticePoint& apex() const noexcept { return apex_; }
  const BarycentricCoords& lambda() const noexcept { return lambda_; }
  const Rational& scale() const noexcept { return scale_; }

  SparsePolynomial polynomial() const;

 private:
  Simplex simplex_;
  LatticePoint apex_;
  BarycentricCoords lambda_;
  Rational scale_;
};

/// Throws Error(PointOutsideSimplex) or Error(NonpositiveScale).
Agiform make_agiform(const Simplex& s, const LatticePoint& apex, const Rational& scale = 1);

/// coefficient * (x^plus - x^minus)^2
struct BinomialSquare {
  Rational coefficient;
  LatticePoint plus;
  LatticePoint minus;
};

/// A sum of binomial squares. With root_degree k > 1 the exponents are
/// numerators over k: variable y_i stands for x_i^{1/k}.
struct BinomialSquareDecomposition {
  std::size_t arity = 0;
  Coord root_degree = 1;
  std::vector<BinomialSquare> terms;

  /// The sum of squares as a polynomial in the stored (integer) exponents.
  SparsePolynomial expand() const;

  /// "3/2*(x^2*y - y*z^2)^2 + ..."; fractional exponents as x^(3/2).
  std::string to_string(std::span<const std::string> names = {}) const;
};

SosMembership is_sos(const Agiform& a, const EnumerationOptions& options = {});

/// Binomial squares over pairs of distinct even points of the maximal
/// mediated set, weighted by an exact non-negative solve of the coefficient
/// equations. The result always re-expands to a.polynomial(); throws
/// Error(NotSos) or Error(DecompositionFailed).
BinomialSquareDecomposition decompose(const Agiform& a, const EnumerationOptions& options = {});

/// Decomposes p(x^k) on the dilated simplex and reports it in the root
/// variables x_i^{1/k}. Throws Error(KTooSmall) for k < max{2, n-2}.
BinomialSquareDecomposition blowup_decompose(const Agiform& a, Coord k, const EnumerationOptions& options = {});

/// Expanding in the root variables reproduces p(x^k) exactly.
bool reproduces(const Agiform& a, const BinomialSquareDecomposition& d);

Agiform motzkin();
Agiform hurwitz_h();
/// The five-term binomial-square identity for the Hurwitz form H.
BinomialSquareDecomposition hurwitz_reference_decomposition();

/// (sum x_j^2)^2 - 4 sum x_j^2 x_{j+1}^2, indices mod 5.
SparsePolynomial horn_form();
/// (x1^2 - x2^2 + x3^2 - x4^2 + x5^2)^2 + 4 (x2^2 - x1^2) x5^2 + 4 x1^2 x4^2.
SparsePolynomial horn_alternate();

struct HornSampleReport {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  /// (power k, minimum of F(x^k) over the samples) for k = 1, 2, 3.
  std::vector<std::pair<Coord, Rational>> minimum_by_power;
  std::size_t negative_values = 0;
  Rational at_all_ones;   // F(1,1,1,1,1)
  Rational at_equality;   // F(1,1,0,0,0)

  bool all_nonnegative() const { return negative_values == 0; }
};

/// Seeded exact evaluations at random rational points.
HornSampleReport horn_psd_sample(std::size_t count, std::uint64_t seed);

}  // namespace agisos

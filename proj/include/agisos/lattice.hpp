#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "agisos/rational.hpp"

namespace agisos {

using Coord = std::int64_t;

/// An integer exponent vector. Arithmetic is overflow-checked and throws
/// Error(Overflow); mixing lengths throws Error(ArityMismatch).
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords) : coords_(coords) {}

  static LatticePoint zero(std::size_t n) { return LatticePoint(std::vector<Coord>(n, 0)); }

  std::size_t size() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const noexcept { return coords_; }

  bool is_even() const noexcept;
  Coord coordinate_sum() const;

  LatticePoint& operator+=(const LatticePoint& other);
  LatticePoint& operator-=(const LatticePoint& other);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }

  LatticePoint scaled(Coord factor) const;
  /// Exact division of every coordinate by two; requires is_even().
  LatticePoint halved() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

  /// "(4,2,0)"
  std::string to_string() const;

 private:
  std::vector<Coord> coords_;
};

/// Lexicographically ordered, so iteration order is deterministic.
using PointSet = std::set<LatticePoint>;

namespace detail {
Coord checked_add(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);
}  // namespace detail

struct BarycentricCoords {
  std::vector<Rational> weights;

  bool nonnegative() const;
  friend bool operator==(const BarycentricCoords&, const BarycentricCoords&) = default;
};

struct EnumerationOptions {
  /// Cap on the number of candidate tuples the bounding-box scan may visit.
  std::uint64_t max_box_points = 10'000'000;
};

/// n affinely independent even non-negative lattice points u_1..u_n with a
/// common coordinate sum 2d. Only constructible through validation.
///
/// The ambient dimension may exceed the vertex count; every formula in this
/// library works with barycentric data and never needs the two to agree.
class Simplex {
 public:
  /// Throws Error with one of TooFewVertices, RaggedInput, NegativeVertex,
  /// OddVertex, DuplicateVertex, UnequalDegreeSums, AffinelyDependent.
  static Simplex create(std::vector<LatticePoint> vertices);

  std::span<const LatticePoint> vertices() const noexcept { return vertices_; }
  const LatticePoint& vertex(std::size_t i) const { return vertices_[i]; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t dimension() const noexcept { return vertices_.front().size(); }
  /// The common coordinate sum 2d.
  Coord degree_sum() const noexcept { return degree_sum_; }

  /// Exact c with p = sum_i c_i u_i, or nullopt when p is outside the linear
  /// span of the vertices. sum_i c_i equals coordinate_sum(p) / 2d.
  std::optional<std::vector<Rational>> coefficients(const LatticePoint& p) const;

  /// Integer numerators N with c_i = N_i / denominator(); denominator() > 0.
  std::optional<std::vector<BigInt>> coefficient_numerators(const LatticePoint& p) const;
  const BigInt& denominator() const noexcept { return det_; }

  /// The simplex k*U.
  Simplex dilated(Coord k) const;
  /// Replaces vertex i and revalidates.
  Simplex with_vertex(std::size_t i, LatticePoint replacement) const;

 private:
  Simplex() = default;

  std::vector<LatticePoint> vertices_;
  Coord degree_sum_ = 0;
  // Coordinates whose rows of the vertex matrix form an invertible block B,
  // and adj(B) normalised so that det(B) > 0.
  std::vector<std::size_t> pivot_rows_;
  std::vector<BigInt> adjugate_;
  BigInt det_;
};

Simplex validate_simplex(std::vector<LatticePoint> vertices);

/// Throws Error(NotInAffineHull) when p is not an affine combination of the
/// vertices. Weights may be negative.
BarycentricCoords barycentric_coordinates(const Simplex& s, const LatticePoint& p);

/// p in kU, decided exactly.
bool contains(const Simplex& s, Coord k, const LatticePoint& p);

bool is_vertex(const Simplex& s, Coord k, const LatticePoint& p);

/// Number of tuples the bounding-box scan for kU would visit.
std::uint64_t search_box_size(const Simplex& s, Coord k);

/// kU intersected with Z^n. Throws Error(BudgetExceeded) when the search box
/// is larger than options.max_box_points.
PointSet enumerate_lattice_points(const Simplex& s, Coord k, const EnumerationOptions& options = {});

PointSet even_points(const PointSet& points);

/// All weak compositions of total into parts non-negative integers, in
/// lexicographically decreasing order.
std::vector<std::vector<Coord>> compositions(Coord total, std::size_t parts);

/// sum_i a_i u_i over every composition a of k. Beads are always even.
PointSet beads(const Simplex& s, Coord k);

}  // namespace agisos

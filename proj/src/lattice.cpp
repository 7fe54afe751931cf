#include "agisos/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "agisos/error.hpp"
#include "exact_linalg.hpp"

namespace agisos {

namespace detail {

Coord checked_add(Coord a, Coord b) {
  Coord out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return out;
}

Coord checked_mul(Coord a, Coord b) {
  Coord out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return out;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

bool LatticePoint::is_even() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c % 2 == 0; });
}

Coord LatticePoint::coordinate_sum() const {
  Coord s = 0;
  for (Coord c : coords_) s = checked_add(s, c);
  return s;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  if (other.size() != size()) throw Error(ErrorCode::ArityMismatch, "lattice points of different length");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) {
  if (other.size() != size()) throw Error(ErrorCode::ArityMismatch, "lattice points of different length");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    Coord out;
    if (__builtin_sub_overflow(coords_[i], other.coords_[i], &out)) {
      throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
    }
    coords_[i] = out;
  }
  return *this;
}

LatticePoint LatticePoint::scaled(Coord factor) const {
  std::vector<Coord> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = checked_mul(coords_[i], factor);
  return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::halved() const {
  if (!is_even()) throw Error(ErrorCode::InvalidArgument, "cannot halve odd point " + to_string());
  std::vector<Coord> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] / 2;
  return LatticePoint(std::move(out));
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

bool BarycentricCoords::nonnegative() const {
  return std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return sgn(w) >= 0; });
}

Simplex Simplex::create(std::vector<LatticePoint> vertices) {
  if (vertices.size() < 2) {
    throw Error(ErrorCode::TooFewVertices, "a simplex needs at least two vertices");
  }
  const std::size_t dim = vertices.front().size();
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "vertices must have at least one coordinate");
  for (const auto& v : vertices) {
    if (v.size() != dim) throw Error(ErrorCode::RaggedInput, "vertices have different lengths");
  }
  for (const auto& v : vertices) {
    for (Coord c : v.coords()) {
      if (c < 0) throw Error(ErrorCode::NegativeVertex, "vertex " + v.to_string() + " has a negative coordinate");
    }
  }
  for (const auto& v : vertices) {
    if (!v.is_even()) throw Error(ErrorCode::OddVertex, "vertex " + v.to_string() + " has an odd coordinate");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) {
        throw Error(ErrorCode::DuplicateVertex, "vertex " + vertices[i].to_string() + " is repeated");
      }
    }
  }
  const Coord sum = vertices.front().coordinate_sum();
  for (const auto& v : vertices) {
    if (v.coordinate_sum() != sum) {
      throw Error(ErrorCode::UnequalDegreeSums, "vertex " + v.to_string() + " has coordinate sum " +
                                                    std::to_string(v.coordinate_sum()) + ", expected " +
                                                    std::to_string(sum));
    }
  }

  // The vertices lie on sum(x) = 2d > 0, so affine independence is linear
  // independence of the vertex vectors.
  const std::size_t m = vertices.size();
  detail::IntMatrix transposed(m, std::vector<BigInt>(dim));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < dim; ++j) transposed[i][j] = BigInt(static_cast<long>(vertices[i][j]));
  }
  auto rows = detail::pivot_columns(transposed);
  if (rows.size() < m) {
    throw Error(ErrorCode::AffinelyDependent, "the " + std::to_string(m) + " vertices are affinely dependent");
  }

  detail::IntMatrix block(m, std::vector<BigInt>(m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < m; ++i) block[r][i] = transposed[i][rows[r]];
  }
  BigInt det = detail::determinant(block);
  auto adj = detail::adjugate(block);
  if (det < 0) {
    det = -det;
    for (auto& row : adj) {
      for (auto& x : row) x = -x;
    }
  }

  Simplex s;
  s.vertices_ = std::move(vertices);
  s.degree_sum_ = sum;
  s.pivot_rows_ = std::move(rows);
  s.adjugate_.reserve(m * m);
  for (auto& row : adj) {
    for (auto& x : row) s.adjugate_.push_back(std::move(x));
  }
  s.det_ = std::move(det);
  return s;
}

std::optional<std::vector<BigInt>> Simplex::coefficient_numerators(const LatticePoint& p) const {
  if (p.size() != dimension()) throw Error(ErrorCode::ArityMismatch, "point " + p.to_string() + " has wrong length");
  const std::size_t m = vertex_count();
  std::vector<BigInt> selected(m);
  for (std::size_t r = 0; r < m; ++r) selected[r] = BigInt(static_cast<long>(p[pivot_rows_[r]]));
  std::vector<BigInt> num(m);
  for (std::size_t i = 0; i < m; ++i) {
    BigInt acc = 0;
    for (std::size_t r = 0; r < m; ++r) acc += adjugate_[i * m + r] * selected[r];
    num[i] = std::move(acc);
  }
  // Rows outside the invertible block must agree.
  std::size_t next_pivot = 0;
  for (std::size_t row = 0; row < dimension(); ++row) {
    if (next_pivot < m && pivot_rows_[next_pivot] == row) {
      ++next_pivot;
      continue;
    }
    BigInt acc = 0;
    for (std::size_t i = 0; i < m; ++i) acc += BigInt(static_cast<long>(vertices_[i][row])) * num[i];
    if (acc != det_ * BigInt(static_cast<long>(p[row]))) return std::nullopt;
  }
  return num;
}

std::optional<std::vector<Rational>> Simplex::coefficients(const LatticePoint& p) const {
  auto num = coefficient_numerators(p);
  if (!num) return std::nullopt;
  std::vector<Rational> out;
  out.reserve(num->size());
  for (auto& n : *num) {
    Rational q(n, det_);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

Simplex Simplex::dilated(Coord k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "dilation factor must be positive");
  std::vector<LatticePoint> scaled;
  scaled.reserve(vertices_.size());
  for (const auto& v : vertices_) scaled.push_back(v.scaled(k));
  return create(std::move(scaled));
}

Simplex Simplex::with_vertex(std::size_t i, LatticePoint replacement) const {
  auto vs = vertices_;
  vs.at(i) = std::move(replacement);
  return create(std::move(vs));
}

Simplex validate_simplex(std::vector<LatticePoint> vertices) { return Simplex::create(std::move(vertices)); }

BarycentricCoords barycentric_coordinates(const Simplex& s, const LatticePoint& p) {
  if (p.size() != s.dimension()) throw Error(ErrorCode::ArityMismatch, "point " + p.to_string() + " has wrong length");
  if (p.coordinate_sum() != s.degree_sum()) {
    throw Error(ErrorCode::NotInAffineHull, "point " + p.to_string() + " has coordinate sum " +
                                                std::to_string(p.coordinate_sum()) + ", simplex has " +
                                                std::to_string(s.degree_sum()));
  }
  auto c = s.coefficients(p);
  if (!c) throw Error(ErrorCode::NotInAffineHull, "point " + p.to_string() + " is not in the affine hull");
  return BarycentricCoords{std::move(*c)};
}

bool contains(const Simplex& s, Coord k, const LatticePoint& p) {
  if (k < 1 || p.size() != s.dimension()) return false;
  Coord total = 0;
  for (Coord c : p.coords()) {
    if (c < 0) return false;
    total = checked_add(total, c);
  }
  if (total != checked_mul(k, s.degree_sum())) return false;
  auto num = s.coefficient_numerators(p);
  if (!num) return false;
  return std::all_of(num->begin(), num->end(), [](const BigInt& x) { return sgn(x) >= 0; });
}

bool is_vertex(const Simplex& s, Coord k, const LatticePoint& p) {
  if (p.size() != s.dimension()) return false;
  for (const auto& v : s.vertices()) {
    if (v.scaled(k) == p) return true;
  }
  return false;
}

namespace {

struct Box {
  std::vector<Coord> lo, hi;
};

Box bounding_box(const Simplex& s, Coord k) {
  const std::size_t dim = s.dimension();
  Box box{std::vector<Coord>(dim, std::numeric_limits<Coord>::max()), std::vector<Coord>(dim, 0)};
  for (const auto& v : s.vertices()) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Coord c = checked_mul(v[j], k);
      box.lo[j] = std::min(box.lo[j], c);
      box.hi[j] = std::max(box.hi[j], c);
    }
  }
  return box;
}

}  // namespace

std::uint64_t search_box_size(const Simplex& s, Coord k) {
  const Box box = bounding_box(s, k);
  std::uint64_t size = 1;
  // The last coordinate is fixed by the sum constraint.
  for (std::size_t j = 0; j + 1 < box.lo.size(); ++j) {
    const auto width = static_cast<std::uint64_t>(box.hi[j] - box.lo[j]) + 1;
    if (size > std::numeric_limits<std::uint64_t>::max() / width) return std::numeric_limits<std::uint64_t>::max();
    size *= width;
  }
  return size;
}

PointSet enumerate_lattice_points(const Simplex& s, Coord k, const EnumerationOptions& options) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "dilation factor must be positive");
  const std::uint64_t box_size = search_box_size(s, k);
  if (box_size > options.max_box_points) {
    throw Error(ErrorCode::BudgetExceeded, "search box of " + std::to_string(box_size) + " points exceeds cap " +
                                               std::to_string(options.max_box_points));
  }
  const Box box = bounding_box(s, k);
  const std::size_t dim = s.dimension();
  const Coord target = checked_mul(k, s.degree_sum());

  // Suffix bounds for pruning on the coordinate sum.
  std::vector<Coord> suffix_lo(dim + 1, 0), suffix_hi(dim + 1, 0);
  for (std::size_t j = dim; j-- > 0;) {
    suffix_lo[j] = suffix_lo[j + 1] + box.lo[j];
    suffix_hi[j] = suffix_hi[j + 1] + box.hi[j];
  }

  PointSet out;
  std::vector<Coord> current(dim, 0);
  auto recurse = [&](auto&& self, std::size_t j, Coord partial) -> void {
    if (j + 1 == dim) {
      const Coord last = target - partial;
      if (last < box.lo[j] || last > box.hi[j]) return;
      current[j] = last;
      LatticePoint p(current);
      if (contains(s, k, p)) out.insert(std::move(p));
      return;
    }
    for (Coord c = box.lo[j]; c <= box.hi[j]; ++c) {
      const Coord with = partial + c;
      if (with + suffix_lo[j + 1] > target) break;
      if (with + suffix_hi[j + 1] < target) continue;
      current[j] = c;
      self(self, j + 1, with);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

PointSet even_points(const PointSet& points) {
  PointSet out;
  for (const auto& p : points) {
    if (p.is_even()) out.insert(out.end(), p);
  }
  return out;
}

std::vector<std::vector<Coord>> compositions(Coord total, std::size_t parts) {
  std::vector<std::vector<Coord>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<Coord> current(parts, 0);
  auto recurse = [&](auto&& self, std::size_t i, Coord remaining) -> void {
    if (i + 1 == parts) {
      current[i] = remaining;
      out.push_back(current);
      return;
    }
    for (Coord c = remaining; c >= 0; --c) {
      current[i] = c;
      self(self, i + 1, remaining - c);
    }
  };
  recurse(recurse, 0, total);
  return out;
}

PointSet beads(const Simplex& s, Coord k) {
  PointSet out;
  for (const auto& a : compositions(k, s.vertex_count())) {
    LatticePoint v = LatticePoint::zero(s.dimension());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0) v += s.vertex(i).scaled(a[i]);
    }
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace agisos

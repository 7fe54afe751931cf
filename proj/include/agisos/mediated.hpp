#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "agisos/lattice.hpp"

namespace agisos {

/// Two distinct even points whose average is the keyed point.
struct MidpointPair {
  LatticePoint first;
  LatticePoint second;

  friend bool operator==(const MidpointPair&, const MidpointPair&) = default;
};

struct MediationCertificate {
  std::map<LatticePoint, MidpointPair> entries;

  /// Re-checks every entry against S in integer arithmetic: the pair is
  /// distinct, all-even, contained in S, and has the keyed point as midpoint.
  bool valid_for(const PointSet& S) const;
};

struct MediationReport {
  bool mediated = false;
  MediationCertificate certificate;
  /// Non-vertex points with no representation.
  PointSet failures;
};

/// Lexicographically smallest (z1, z2), z1 < z2, of distinct even points of S
/// with z1 + z2 = 2y.
std::optional<MidpointPair> find_midpoint_pair(const LatticePoint& y, const PointSet& S);

/// Throws Error(VertexMissing) or Error(PointOutsideSimplex).
MediationReport is_mediated(const Simplex& s, const PointSet& S);

/// The greatest U-mediated subset of U cap Z^n: deletes unrepresentable
/// non-vertex points in simultaneous rounds until stable.
PointSet maximal_mediated_set(const Simplex& s, const EnumerationOptions& options = {});

/// Same fixed point, reached by deleting one point at a time while scanning
/// candidates in the given order. Each candidate must lie in U; vertices are
/// added if absent.
PointSet greatest_mediated_subset(const Simplex& s, std::span<const LatticePoint> candidates);

struct SosMembership {
  bool sos = false;
  /// Midpoint representations needed to reach the queried point, closed
  /// under following non-vertex pair members. Empty for vertices or when
  /// sos is false.
  std::vector<std::pair<LatticePoint, MidpointPair>> chain;
};

/// The agiform with simplex s and apex w is sos iff w lies in the maximal
/// mediated set. Throws Error(PointOutsideSimplex).
SosMembership sos_membership(const Simplex& s, const LatticePoint& w, const EnumerationOptions& options = {});

/// sos_membership against an already computed maximal mediated set.
SosMembership sos_membership_in(const Simplex& s, const PointSet& maximal, const LatticePoint& w);

}  // namespace agisos

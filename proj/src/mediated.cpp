#include "agisos/mediated.hpp"

#include <algorithm>
#include <deque>

#include "agisos/error.hpp"

namespace agisos {

namespace {

bool is_simplex_vertex(const Simplex& s, const LatticePoint& p) {
  const auto vs = s.vertices();
  return std::find(vs.begin(), vs.end(), p) != vs.end();
}

std::optional<MidpointPair> find_pair_among(const LatticePoint& y, std::span<const LatticePoint> evens,
                                            const PointSet& S) {
  const LatticePoint doubled = y.scaled(2);
  for (const auto& z1 : evens) {
    LatticePoint z2 = doubled - z1;
    if (!(z1 < z2)) break;  // evens are sorted; later z1 only grow
    if (S.contains(z2)) return MidpointPair{z1, std::move(z2)};
  }
  return std::nullopt;
}

std::vector<LatticePoint> sorted_evens(const PointSet& S) {
  std::vector<LatticePoint> out;
  for (const auto& p : S) {
    if (p.is_even()) out.push_back(p);
  }
  return out;
}

}  // namespace

bool MediationCertificate::valid_for(const PointSet& S) const {
  for (const auto& [y, pair] : entries) {
    const auto& [z1, z2] = pair;
    if (z1 == z2 || !z1.is_even() || !z2.is_even()) return false;
    if (!S.contains(z1) || !S.contains(z2) || !S.contains(y)) return false;
    if (z1.size() != y.size() || z2.size() != y.size()) return false;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (z1[j] + z2[j] != 2 * y[j]) return false;
    }
  }
  return true;
}

std::optional<MidpointPair> find_midpoint_pair(const LatticePoint& y, const PointSet& S) {
  const auto evens = sorted_evens(S);
  return find_pair_among(y, evens, S);
}

MediationReport is_mediated(const Simplex& s, const PointSet& S) {
  for (const auto& v : s.vertices()) {
    if (!S.contains(v)) throw Error(ErrorCode::VertexMissing, "set omits vertex " + v.to_string());
  }
  for (const auto& p : S) {
    if (!contains(s, 1, p)) throw Error(ErrorCode::PointOutsideSimplex, "point " + p.to_string() + " is outside U");
  }
  const auto evens = sorted_evens(S);
  MediationReport report;
  for (const auto& y : S) {
    if (is_simplex_vertex(s, y)) continue;
    if (auto pair = find_pair_among(y, evens, S)) {
      report.certificate.entries.emplace(y, std::move(*pair));
    } else {
      report.failures.insert(y);
    }
  }
  report.mediated = report.failures.empty();
  return report;
}

PointSet maximal_mediated_set(const Simplex& s, const EnumerationOptions& options) {
  PointSet current = enumerate_lattice_points(s, 1, options);
  for (;;) {
    const auto evens = sorted_evens(current);
    std::vector<LatticePoint> doomed;
    for (const auto& y : current) {
      if (is_simplex_vertex(s, y)) continue;
      if (!find_pair_among(y, evens, current)) doomed.push_back(y);
    }
    if (doomed.empty()) return current;
    for (const auto& y : doomed) current.erase(y);
  }
}

PointSet greatest_mediated_subset(const Simplex& s, std::span<const LatticePoint> candidates) {
  std::vector<LatticePoint> order;
  PointSet current;
  for (const auto& p : candidates) {
    if (!contains(s, 1, p)) throw Error(ErrorCode::PointOutsideSimplex, "point " + p.to_string() + " is outside U");
    if (current.insert(p).second) order.push_back(p);
  }
  for (const auto& v : s.vertices()) current.insert(v);

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& y : order) {
      if (!current.contains(y) || is_simplex_vertex(s, y)) continue;
      if (!find_midpoint_pair(y, current)) {
        current.erase(y);
        changed = true;
      }
    }
  }
  return current;
}

SosMembership sos_membership_in(const Simplex& s, const PointSet& maximal, const LatticePoint& w) {
  if (!contains(s, 1, w)) throw Error(ErrorCode::PointOutsideSimplex, "point " + w.to_string() + " is outside U");
  SosMembership out;
  if (!maximal.contains(w)) return out;
  out.sos = true;

  const auto evens = sorted_evens(maximal);
  PointSet seen{w};
  std::deque<LatticePoint> queue{w};
  while (!queue.empty()) {
    LatticePoint y = std::move(queue.front());
    queue.pop_front();
    if (is_simplex_vertex(s, y)) continue;
    auto pair = find_pair_among(y, evens, maximal);
    if (!pair) throw Error(ErrorCode::InternalInvariantViolation, "maximal set member " + y.to_string() + " unmediated");
    for (const auto* z : {&pair->first, &pair->second}) {
      if (seen.insert(*z).second) queue.push_back(*z);
    }
    out.chain.emplace_back(std::move(y), std::move(*pair));
  }
  return out;
}

SosMembership sos_membership(const Simplex& s, const LatticePoint& w, const EnumerationOptions& options) {
  if (!contains(s, 1, w)) throw Error(ErrorCode::PointOutsideSimplex, "point " + w.to_string() + " is outside U");
  return sos_membership_in(s, maximal_mediated_set(s, options), w);
}

}  // namespace agisos

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "entmat/errors.hpp"

namespace entmat {

/// Absolute distance tolerance for midpoint coincidence and chord incidence.
/// Chord coordinates are cosines of rational multiples of pi; the smallest
/// coincidence gap at n <= 48 is ~4e-3, so 1e-9 sits far from both the gap
/// and the ~1e-15 rounding noise.
inline constexpr double kCoincidenceTol = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }
inline double radius_of(Point2 p) { return std::hypot(p.x, p.y); }

/// Unordered chord of the regular n-gon, stored with a < b.
struct Chord {
  int a = 0;
  int b = 0;
  int separation = 0;  // min(|a-b|, n-|a-b|), in [1, n/2]

  friend bool operator==(const Chord& l, const Chord& r) { return l.a == r.a && l.b == r.b; }
  friend bool operator<(const Chord& l, const Chord& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
};

inline Chord make_chord(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n)
    throw input_error("chord endpoint out of range (" + std::to_string(a) + "," +
                      std::to_string(b) + ") for n=" + std::to_string(n));
  if (a == b)
    throw input_error("chord endpoints coincide (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
  if (a > b) std::swap(a, b);
  int d = b - a;
  return Chord{a, b, std::min(d, n - d)};
}

/// Vertex k of the regular n-gon on the unit circle; vertex 1 at angle 0,
/// labels increasing counterclockwise.
inline Point2 vertex_position(int n, int k) {
  double angle = 2.0 * std::numbers::pi * static_cast<double>(k - 1) / n;
  return {std::cos(angle), std::sin(angle)};
}

inline std::vector<Point2> embed_polygon(int n) {
  if (n < 1) throw input_error("polygon needs at least one vertex, got n=" + std::to_string(n));
  std::vector<Point2> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) pts.push_back(vertex_position(n, k));
  return pts;
}

inline Point2 chord_midpoint(int n, const Chord& c) {
  Point2 pa = vertex_position(n, c.a);
  Point2 pb = vertex_position(n, c.b);
  return {(pa.x + pb.x) / 2.0, (pa.y + pb.y) / 2.0};
}

/// True iff p lies on the closed segment of the chord, within perpendicular
/// distance tol. Counts drawn edges only, not their infinite extensions.
inline bool point_on_chord(Point2 p, const Chord& c, int n, double tol) {
  if (!(tol > 0)) throw input_error("incidence tolerance must be positive");
  Point2 pa = vertex_position(n, c.a);
  Point2 pb = vertex_position(n, c.b);
  double vx = pb.x - pa.x, vy = pb.y - pa.y;
  double wx = p.x - pa.x, wy = p.y - pa.y;
  double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? (wx * vx + wy * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  Point2 closest{pa.x + t * vx, pa.y + t * vy};
  return distance(p, closest) <= tol;
}

enum class MidpointKind { primary, secondary, center };

inline std::string to_string(MidpointKind k) {
  switch (k) {
    case MidpointKind::primary: return "primary";
    case MidpointKind::secondary: return "secondary";
    case MidpointKind::center: return "center";
  }
  return "?";
}

struct MidpointRecord {
  int id = 0;
  Point2 position;
  MidpointKind kind = MidpointKind::secondary;
  std::vector<Chord> generators;       // chords whose midpoint is this position
  std::vector<Chord> incident_chords;  // chords passing through this position
  int degree = 0;                      // 2 * |incident_chords|
  int multiplicity = 0;                // degree / 2
  double ring_radius = 0.0;
};

struct Ring {
  double radius = 0.0;
  std::vector<int> members;            // record ids, ordered by angle
  std::map<int, int> degree_profile;   // degree -> count
};

struct MidpointCensus {
  int n = 0;
  bool complete = true;
  double tolerance = kCoincidenceTol;
  std::vector<MidpointRecord> records;
  std::vector<Ring> rings;  // descending radius; a center ring has radius ~0
};

namespace detail {

struct Seed {
  Point2 position;
  bool has_generator = false;
  Chord generator;
};

inline MidpointCensus build_census_impl(int n, const std::vector<Chord>& chords, bool complete,
                                        double tol) {
  if (n < 2) throw input_error("midpoint census needs n >= 2, got n=" + std::to_string(n));
  if (!(tol > 0)) throw input_error("census tolerance must be positive");

  std::vector<Seed> seeds;
  seeds.reserve(chords.size() + static_cast<size_t>(n));
  for (const Chord& c : chords) seeds.push_back({chord_midpoint(n, c), true, c});
  if (!complete) {
    // Primary slots are kept even when the consecutive edge is absent; the
    // bipartition labeling needs all n of them.
    for (int k = 1; k <= n; ++k) {
      Chord c = make_chord(n, k, k % n + 1);
      if (std::find(chords.begin(), chords.end(), c) == chords.end())
        seeds.push_back({chord_midpoint(n, c), false, c});
    }
  }

  // Cluster coincident midpoints (union-find over pairs within tol).
  std::vector<size_t> parent(seeds.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < seeds.size(); ++i)
    for (size_t j = i + 1; j < seeds.size(); ++j)
      if (distance(seeds[i].position, seeds[j].position) <= tol) {
        size_t ri = find(i), rj = find(j);
        if (ri != rj) parent[ri] = rj;
      }

  std::map<size_t, std::vector<size_t>> clusters;
  for (size_t i = 0; i < seeds.size(); ++i) clusters[find(i)].push_back(i);

  std::vector<MidpointRecord> records;
  records.reserve(clusters.size());
  for (const auto& [root, members] : clusters) {
    MidpointRecord rec;
    Point2 centroid{0, 0};
    for (size_t m : members) {
      centroid.x += seeds[m].position.x;
      centroid.y += seeds[m].position.y;
      if (seeds[m].has_generator) rec.generators.push_back(seeds[m].generator);
    }
    centroid.x /= static_cast<double>(members.size());
    centroid.y /= static_cast<double>(members.size());
    std::sort(rec.generators.begin(), rec.generators.end());
    rec.position = centroid;
    rec.ring_radius = radius_of(centroid);
    records.push_back(std::move(rec));
  }

  // Tolerance instability guard: distinct clusters must be well separated.
  for (size_t i = 0; i < records.size(); ++i)
    for (size_t j = i + 1; j < records.size(); ++j) {
      double d = distance(records[i].position, records[j].position);
      if (d > tol && d <= 10.0 * tol)
        throw ambiguity_error("midpoint clusters separated by " + std::to_string(d) +
                              " which is between tol and 10*tol; coincidence detection "
                              "is unstable at this tolerance");
    }

  for (MidpointRecord& rec : records) {
    for (const Chord& c : chords)
      if (point_on_chord(rec.position, c, n, tol)) rec.incident_chords.push_back(c);
    rec.degree = 2 * static_cast<int>(rec.incident_chords.size());
    rec.multiplicity = rec.degree / 2;
    bool primary_slot =
        rec.generators.empty() ||
        std::any_of(rec.generators.begin(), rec.generators.end(),
                    [](const Chord& c) { return c.separation == 1; });
    if (rec.ring_radius <= tol)
      rec.kind = MidpointKind::center;
    else if (primary_slot)
      rec.kind = MidpointKind::primary;
    else
      rec.kind = MidpointKind::secondary;
  }

  // Deterministic ids: outermost ring first, counterclockwise within a ring.
  std::sort(records.begin(), records.end(), [](const MidpointRecord& l, const MidpointRecord& r) {
    if (std::abs(l.ring_radius - r.ring_radius) > 1e-12) return l.ring_radius > r.ring_radius;
    double la = std::atan2(l.position.y, l.position.x);
    double ra = std::atan2(r.position.y, r.position.x);
    if (la < 0) la += 2 * std::numbers::pi;
    if (ra < 0) ra += 2 * std::numbers::pi;
    return la < ra;
  });
  for (size_t i = 0; i < records.size(); ++i) records[i].id = static_cast<int>(i);

  MidpointCensus census;
  census.n = n;
  census.complete = complete;
  census.tolerance = tol;
  census.records = std::move(records);
  for (const MidpointRecord& rec : census.records) {
    if (census.rings.empty() || std::abs(census.rings.back().radius - rec.ring_radius) > tol)
      census.rings.push_back(Ring{rec.ring_radius, {}, {}});
    census.rings.back().members.push_back(rec.id);
    census.rings.back().degree_profile[rec.degree]++;
  }
  return census;
}

}  // namespace detail

/// Census of the complete chord set (all C(n,2) edges drawn).
inline MidpointCensus build_midpoint_census(int n, double tol = kCoincidenceTol) {
  std::vector<Chord> chords;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) chords.push_back(make_chord(n, a, b));
  return detail::build_census_impl(n, chords, true, tol);
}

/// Census restricted to a given edge set; primary slots are retained even
/// when their edge is absent (with empty generators).
inline MidpointCensus build_midpoint_census(int n, const std::vector<Chord>& edges,
                                            double tol = kCoincidenceTol) {
  std::vector<Chord> validated;
  validated.reserve(edges.size());
  for (const Chord& c : edges) validated.push_back(make_chord(n, c.a, c.b));
  std::sort(validated.begin(), validated.end());
  validated.erase(std::unique(validated.begin(), validated.end()), validated.end());
  return detail::build_census_impl(n, validated, false, tol);
}

struct RingDegree {
  int ring_index = 0;   // 0 = outermost
  int degree = 0;       // common degree of the ring (valid when !mixed)
  bool mixed = false;
};

struct RingProfile {
  std::vector<RingDegree> rings;  // outermost inward, center excluded
  int center_degree = 0;
};

/// Per-ring common degrees for a complete even-n census, outermost inward,
/// with the center reported separately.
inline RingProfile ring_degree_profile(const MidpointCensus& census) {
  if (!census.complete) throw input_error("ring profile requires a complete-restriction census");
  if (census.n % 2 != 0)
    throw input_error("ring profile is defined for even n only, got n=" +
                      std::to_string(census.n));
  RingProfile profile;
  int index = 0;
  for (const Ring& ring : census.rings) {
    if (ring.radius <= census.tolerance) {
      profile.center_degree = ring.degree_profile.begin()->first;
      continue;
    }
    RingDegree rd;
    rd.ring_index = index++;
    rd.mixed = ring.degree_profile.size() > 1;
    rd.degree = rd.mixed ? 0 : ring.degree_profile.begin()->first;
    profile.rings.push_back(rd);
  }
  return profile;
}

}  // namespace entmat

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trec/errors.hpp"
#include "trec/extfraction.hpp"
#include "trec/rational.hpp"

namespace trec {

struct LatticePoint {
  long x = 0, y = 0;
  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

// One maximal edge of the hull: endpoints, primitive direction, and the
// number of unit edges it decomposes into.
struct MaximalEdge {
  LatticePoint from, to;
  long dir_x = 0, dir_y = 0;  // primitive
  long unit_edges = 1;
};

// Slope data for an edge in one of the two relevant corners, carrying the
// local parameters (r, sbar) it encodes.
struct EdgeLocal {
  ExtFraction mu;      // positive finite slope
  long r = 1;          // numerator of mu
  long sbar = 0;       // r - k for the 0-inf corner, k - r for the inf-0 corner
  long multiplicity = 1;
};

struct CornerDiagram {
  // counts of off-boundary integral points of the four corner diagrams,
  // indexed [x-corner][y-corner] with 0 -> 0 and 1 -> infinity
  long count[2][2] = {{0, 0}, {0, 0}};
  long total() const {
    return count[0][0] + count[0][1] + count[1][0] + count[1][1];
  }
};

class LatticePolygon {
 public:
  LatticePolygon() = default;
  explicit LatticePolygon(std::vector<LatticePoint> support);

  const std::vector<LatticePoint>& support() const { return support_; }
  const std::vector<LatticePoint>& hull() const { return hull_; }  // ccw
  long bidegree_x() const { return dx_; }
  long bidegree_y() const { return dy_; }
  bool is_point() const { return hull_.size() == 1; }
  bool is_segment() const { return hull_.size() == 2; }
  bool degenerate() const { return hull_.size() <= 2; }

  // hull touches all four sides of the rectangle [0,dx] x [0,dy]
  bool inscribed() const;
  bool is_long_diagonal() const;

  bool contains(const LatticePoint& p) const;          // closed hull
  bool contains_interior(const LatticePoint& p) const; // open hull

  std::vector<LatticePoint> interior_points() const;
  long interior_count() const;
  long boundary_count() const;  // integral points on the hull boundary
  std::vector<LatticePoint> lattice_points() const;

  std::vector<MaximalEdge> maximal_edges() const;

  // area by the shoelace formula; checks Pick's identity and throws on a
  // mismatch (lattice counting bug)
  Rational pick_area() const;
  Rational area() const;

  CornerDiagram corner_counts() const;
  // genus of a nondegenerate curve with this Newton polygon
  long genus() const { return interior_count(); }

  // corner edge chains with local data; the degenerate one-segment polygon
  // serves both corners
  std::vector<EdgeLocal> edges_zero_inf() const;
  std::vector<EdgeLocal> edges_inf_zero() const;

  friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
    return a.hull_ == b.hull_;
  }
  friend bool operator<(const LatticePolygon& a, const LatticePolygon& b) {
    return a.hull_ < b.hull_;
  }

  std::string str() const;

 private:
  std::vector<LatticePoint> support_;
  std::vector<LatticePoint> hull_;
  long dx_ = 0, dy_ = 0;
};

LatticePolygon build_polygon(const std::vector<LatticePoint>& support);

bool is_elementary_triangle(const LatticePolygon& t);
// Farey characterisation: inverse slopes 1/beta < 1/mu < 1/alpha neighbours in
// F_r with r the numerator of mu (slopes 0 <= alpha < mu < beta <= inf).
bool farey_triangle_test(const ExtFraction& alpha, const ExtFraction& mu,
                         const ExtFraction& beta);

std::vector<LatticePoint> addible_vertices(const LatticePolygon& poly);
bool is_addible(const LatticePolygon& poly, const LatticePoint& v);
LatticePolygon add_vertex(const LatticePolygon& poly, const LatticePoint& v);
bool is_removable(const LatticePolygon& poly, const LatticePoint& v);
LatticePolygon remove_vertex(const LatticePolygon& poly, const LatticePoint& v);

LatticePolygon maximal_polygon(const LatticePolygon& poly);

// Closed-form maximal polygon of the (r,s) diagonal, with the realised case.
struct RsMaxResult {
  LatticePolygon delta_max;
  char case_tag = '+';      // '+' or '-'
  long r_prime = 1, s_prime = 1, b = 1, c = 1;
};
RsMaxResult rs_delta_max(long r, long s);

// Edge-level admissibility of the two corner chains.
enum class Corner { ZeroInf, InfZero };
bool edge_locally_admissible(Corner corner, const EdgeLocal& e);
bool edge_pair_globalisable(Corner corner, const EdgeLocal& a, const EdgeLocal& b,
                            std::string* rule = nullptr);
struct EdgeAdmissibilityReport {
  bool all_local = true;
  bool all_pairs = true;
  std::vector<std::string> reasons;
  bool admissible() const { return all_local && all_pairs; }
};
EdgeAdmissibilityReport edge_admissibility(Corner corner, const std::vector<EdgeLocal>& edges);

struct GammaVerdict {
  bool ga1 = false, ga2 = false, ga3 = false;
  std::vector<std::string> reasons;
  bool admissible() const { return ga1 && ga2 && ga3; }
};
GammaVerdict gamma_admissibility(const LatticePolygon& poly);

// All convex lattice polygons (including segments) inscribed in the given
// rectangle, translated to touch the axes.
std::vector<LatticePolygon> enumerate_inscribed_polygons(long dx, long dy);

}  // namespace trec

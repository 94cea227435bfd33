#include "trec/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "trec/farey.hpp"

namespace trec {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew monotone chain, counter-clockwise, collinear points dropped.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() <= 2) {  // all collinear: keep the two extremes
    std::vector<LatticePoint> seg{pts.front(), pts.back()};
    if (seg[0] == seg[1]) seg.pop_back();
    return seg;
  }
  return h;  // ccw starting from lexicographic min
}

long gcd_abs(long a, long b) { return std::gcd(std::labs(a), std::labs(b)); }

}  // namespace

LatticePolygon::LatticePolygon(std::vector<LatticePoint> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw DomainError("polygon from empty support");
  for (const auto& p : support_)
    if (p.x < 0 || p.y < 0) throw DomainError("support must lie in the first quadrant");
  hull_ = convex_hull(support_);
  dx_ = 0;
  dy_ = 0;
  for (const auto& p : hull_) { dx_ = std::max(dx_, p.x); dy_ = std::max(dy_, p.y); }
}

LatticePolygon build_polygon(const std::vector<LatticePoint>& support) {
  return LatticePolygon(support);
}

bool LatticePolygon::inscribed() const {
  bool left = false, right = false, bottom = false, top = false;
  for (const auto& p : hull_) {
    if (p.x == 0) left = true;
    if (p.x == dx_) right = true;
    if (p.y == 0) bottom = true;
    if (p.y == dy_) top = true;
  }
  return left && right && bottom && top && dx_ > 0 && dy_ > 0;
}

bool LatticePolygon::is_long_diagonal() const {
  if (!is_segment()) return false;
  if (std::gcd(dx_, dy_) <= 1) return false;
  const auto& a = hull_[0];
  const auto& b = hull_[1];
  auto is_corner_pair = [&](long x1, long y1, long x2, long y2) {
    return (a.x == x1 && a.y == y1 && b.x == x2 && b.y == y2) ||
           (a.x == x2 && a.y == y2 && b.x == x1 && b.y == y1);
  };
  return is_corner_pair(0, 0, dx_, dy_) || is_corner_pair(dx_, 0, 0, dy_);
}

bool LatticePolygon::contains(const LatticePoint& p) const {
  if (hull_.size() == 1) return p == hull_[0];
  if (hull_.size() == 2) {
    long c = cross(hull_[0], hull_[1], p);
    if (c != 0) return false;
    return p.x >= std::min(hull_[0].x, hull_[1].x) && p.x <= std::max(hull_[0].x, hull_[1].x) &&
           p.y >= std::min(hull_[0].y, hull_[1].y) && p.y <= std::max(hull_[0].y, hull_[1].y);
  }
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    if (cross(hull_[i], hull_[(i + 1) % hull_.size()], p) < 0) return false;
  }
  return true;
}

bool LatticePolygon::contains_interior(const LatticePoint& p) const {
  if (hull_.size() <= 2) return false;
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    if (cross(hull_[i], hull_[(i + 1) % hull_.size()], p) <= 0) return false;
  }
  return true;
}

std::vector<LatticePoint> LatticePolygon::interior_points() const {
  std::vector<LatticePoint> out;
  for (long x = 1; x < dx_; ++x)
    for (long y = 1; y < dy_; ++y)
      if (contains_interior({x, y})) out.push_back({x, y});
  return out;
}

long LatticePolygon::interior_count() const {
  if (degenerate()) return 0;
  // Pick: I = A - B/2 + 1
  Rational i = area() - Rational(boundary_count(), 2) + Rational(1);
  return static_cast<long>(mpz_class(i.num()).get_si());
}

long LatticePolygon::boundary_count() const {
  if (hull_.size() == 1) return 1;
  if (hull_.size() == 2) {
    return gcd_abs(hull_[1].x - hull_[0].x, hull_[1].y - hull_[0].y) + 1;
  }
  long b = 0;
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    const auto& a = hull_[i];
    const auto& c = hull_[(i + 1) % hull_.size()];
    b += gcd_abs(c.x - a.x, c.y - a.y);
  }
  return b;
}

std::vector<LatticePoint> LatticePolygon::lattice_points() const {
  std::vector<LatticePoint> out;
  for (long x = 0; x <= dx_; ++x)
    for (long y = 0; y <= dy_; ++y)
      if (contains({x, y})) out.push_back({x, y});
  return out;
}

std::vector<MaximalEdge> LatticePolygon::maximal_edges() const {
  std::vector<MaximalEdge> out;
  if (hull_.size() == 1) return out;
  if (hull_.size() == 2) {
    MaximalEdge e{hull_[0], hull_[1], 0, 0, 1};
    long g = gcd_abs(hull_[1].x - hull_[0].x, hull_[1].y - hull_[0].y);
    e.dir_x = (hull_[1].x - hull_[0].x) / g;
    e.dir_y = (hull_[1].y - hull_[0].y) / g;
    e.unit_edges = g;
    out.push_back(e);
    return out;
  }
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    const auto& a = hull_[i];
    const auto& b = hull_[(i + 1) % hull_.size()];
    long g = gcd_abs(b.x - a.x, b.y - a.y);
    out.push_back({a, b, (b.x - a.x) / g, (b.y - a.y) / g, g});
  }
  return out;
}

Rational LatticePolygon::area() const {
  if (hull_.size() <= 2) return Rational(0);
  long twice = 0;
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    const auto& a = hull_[i];
    const auto& b = hull_[(i + 1) % hull_.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return Rational(twice, 2);
}

Rational LatticePolygon::pick_area() const {
  Rational shoelace = area();
  if (!degenerate()) {
    // grid-counted interior, independent of the Pick-based fast path
    long grid_interior = static_cast<long>(interior_points().size());
    Rational pick = Rational(boundary_count(), 2) + Rational(grid_interior) - Rational(1);
    if (shoelace != pick)
      throw DomainError("Pick identity violated: lattice counting bug");
  }
  return shoelace;
}

CornerDiagram LatticePolygon::corner_counts() const {
  CornerDiagram out;
  for (int cx = 0; cx < 2; ++cx) {
    for (int cy = 0; cy < 2; ++cy) {
      // reflect the support into the corner's frame
      std::vector<LatticePoint> pts;
      pts.reserve(support_.size());
      for (const auto& p : support_) {
        pts.push_back({cx == 0 ? p.x : dx_ - p.x, cy == 0 ? p.y : dy_ - p.y});
      }
      std::vector<LatticePoint> h = convex_hull(pts);
      long minx = pts[0].x, miny = pts[0].y;
      for (const auto& p : pts) { minx = std::min(minx, p.x); miny = std::min(miny, p.y); }
      // Gamma+ = hull of the union of upper-right quadrants; it is cut out by
      // u >= minx, v >= miny and the hull edges with inward normal > 0
      struct HP { long nx, ny, c; };
      std::vector<HP> hps;
      hps.push_back({1, 0, minx});
      hps.push_back({0, 1, miny});
      if (h.size() >= 3) {
        for (std::size_t i = 0; i < h.size(); ++i) {
          const auto& a = h[i];
          const auto& b = h[(i + 1) % h.size()];
          long nx = -(b.y - a.y), ny = b.x - a.x;  // inward for ccw
          if (nx > 0 && ny > 0) hps.push_back({nx, ny, nx * a.x + ny * a.y});
        }
      } else if (h.size() == 2) {
        long nx = -(h[1].y - h[0].y), ny = h[1].x - h[0].x;
        if (nx < 0) { nx = -nx; ny = -ny; }
        if (nx > 0 && ny > 0) hps.push_back({nx, ny, nx * h[0].x + ny * h[0].y});
      }
      // a point belongs to the corner diagram iff it is not interior to Gamma+
      long cnt = 0;
      for (long u = 1; u < dx_; ++u) {
        for (long v = 1; v < dy_; ++v) {
          bool interior_of_gamma_plus = true;
          for (const auto& hp : hps) {
            if (hp.nx * u + hp.ny * v <= hp.c) { interior_of_gamma_plus = false; break; }
          }
          if (!interior_of_gamma_plus) ++cnt;
        }
      }
      out.count[cx][cy] = cnt;
    }
  }
  return out;
}

std::vector<EdgeLocal> LatticePolygon::edges_zero_inf() const {
  std::vector<EdgeLocal> out;
  if (degenerate()) {
    if (!is_segment()) return out;
    auto me = maximal_edges()[0];
    if (me.dir_x == 0 || me.dir_y == 0) return out;
    if ((me.dir_x > 0) != (me.dir_y > 0)) return out;  // negative slope
    EdgeLocal e;
    long px = std::labs(me.dir_x), py = std::labs(me.dir_y);
    e.mu = ExtFraction(py, px);
    e.r = py;
    e.sbar = py - px;
    e.multiplicity = me.unit_edges;
    out.push_back(e);
    return out;
  }
  for (const auto& me : maximal_edges()) {
    // ccw hull: outward normal of the edge is (dir_y, -dir_x)
    long nx = me.dir_y, ny = -me.dir_x;
    if (!(nx < 0 && ny > 0)) continue;  // top-left corner only
    EdgeLocal e;
    long px = std::labs(me.dir_x), py = std::labs(me.dir_y);
    e.mu = ExtFraction(py, px);
    e.r = py;
    e.sbar = py - px;
    e.multiplicity = me.unit_edges;
    out.push_back(e);
  }
  return out;
}

std::vector<EdgeLocal> LatticePolygon::edges_inf_zero() const {
  std::vector<EdgeLocal> out;
  if (degenerate()) {
    if (!is_segment()) return out;
    auto me = maximal_edges()[0];
    if (me.dir_x == 0 || me.dir_y == 0) return out;
    if ((me.dir_x > 0) != (me.dir_y > 0)) return out;
    EdgeLocal e;
    long px = std::labs(me.dir_x), py = std::labs(me.dir_y);
    e.mu = ExtFraction(py, px);
    e.r = py;
    e.sbar = px - py;
    e.multiplicity = me.unit_edges;
    out.push_back(e);
    return out;
  }
  for (const auto& me : maximal_edges()) {
    long nx = me.dir_y, ny = -me.dir_x;
    if (!(nx > 0 && ny < 0)) continue;  // bottom-right corner only
    EdgeLocal e;
    long px = std::labs(me.dir_x), py = std::labs(me.dir_y);
    e.mu = ExtFraction(py, px);
    e.r = py;
    e.sbar = px - py;
    e.multiplicity = me.unit_edges;
    out.push_back(e);
  }
  return out;
}

std::string LatticePolygon::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    if (i) os << ",";
    os << "(" << hull_[i].x << "," << hull_[i].y << ")";
  }
  os << "]";
  return os.str();
}

bool is_elementary_triangle(const LatticePolygon& t) {
  if (t.hull().size() != 3) return false;
  return t.boundary_count() == 3 && t.interior_count() == 0;
}

bool farey_triangle_test(const ExtFraction& alpha, const ExtFraction& mu,
                         const ExtFraction& beta) {
  if (!(alpha < mu && mu < beta)) throw DomainError("slopes must satisfy alpha < mu < beta");
  if (mu.is_infinite() || !(mu > ExtFraction(0, 1)))
    throw DomainError("middle slope must be positive finite");
  long r = static_cast<long>(mu.num().get_si());
  ExtFraction inv_mu(mu.den(), mu.num());
  ExtFraction inv_alpha = alpha == ExtFraction(0, 1) ? ExtFraction::infinity()
                                                     : ExtFraction(alpha.den(), alpha.num());
  ExtFraction inv_beta = beta.is_infinite() ? ExtFraction(0, 1)
                                            : ExtFraction(beta.den(), beta.num());
  if (!in_farey(inv_mu, r)) return false;
  if (inv_mu == ExtFraction(0, 1)) return false;
  auto nb = farey_neighbours(inv_mu, r);
  return nb.first == inv_beta && nb.second == inv_alpha;
}

namespace {

std::set<LatticePoint> interior_set(const LatticePolygon& p) {
  auto v = p.interior_points();
  return std::set<LatticePoint>(v.begin(), v.end());
}

}  // namespace

bool is_addible(const LatticePolygon& poly, const LatticePoint& v) {
  if (v.x < 0 || v.y < 0 || v.x > poly.bidegree_x() || v.y > poly.bidegree_y()) return false;
  if (poly.contains(v)) return false;
  std::vector<LatticePoint> pts(poly.hull());
  pts.push_back(v);
  LatticePolygon bigger(pts);
  if (bigger.bidegree_x() != poly.bidegree_x() || bigger.bidegree_y() != poly.bidegree_y())
    return false;
  if (!bigger.inscribed()) return false;
  return interior_set(bigger) == interior_set(poly);
}

LatticePolygon add_vertex(const LatticePolygon& poly, const LatticePoint& v) {
  if (!is_addible(poly, v)) throw DomainError("vertex is not addible");
  std::vector<LatticePoint> pts(poly.hull());
  pts.push_back(v);
  return LatticePolygon(pts);
}

std::vector<LatticePoint> addible_vertices(const LatticePolygon& poly) {
  std::vector<LatticePoint> out;
  for (long x = 0; x <= poly.bidegree_x(); ++x)
    for (long y = 0; y <= poly.bidegree_y(); ++y)
      if (is_addible(poly, {x, y})) out.push_back({x, y});
  return out;
}

bool is_removable(const LatticePolygon& poly, const LatticePoint& v) {
  if (!poly.contains(v)) return false;
  std::vector<LatticePoint> pts;
  for (const auto& p : poly.lattice_points())
    if (!(p == v)) pts.push_back(p);
  if (pts.empty()) return false;
  LatticePolygon smaller(pts);
  if (smaller.bidegree_x() != poly.bidegree_x() || smaller.bidegree_y() != poly.bidegree_y())
    return false;
  if (!smaller.inscribed()) return false;
  if (!(interior_set(smaller) == interior_set(poly))) return false;
  if (smaller.contains(v)) return false;  // v must actually leave the hull
  return is_addible(smaller, v) && add_vertex(smaller, v) == poly;
}

LatticePolygon remove_vertex(const LatticePolygon& poly, const LatticePoint& v) {
  if (!is_removable(poly, v)) throw DomainError("vertex is not removable");
  std::vector<LatticePoint> pts;
  for (const auto& p : poly.lattice_points())
    if (!(p == v)) pts.push_back(p);
  return LatticePolygon(pts);
}

LatticePolygon maximal_polygon(const LatticePolygon& poly) {
  if (poly.is_long_diagonal())
    throw UnsupportedCurve("maximal polygon is undefined for long diagonals");
  LatticePolygon cur = poly;
  for (;;) {
    auto add = addible_vertices(cur);
    if (add.empty()) return cur;
    std::vector<LatticePoint> pts(cur.hull());
    pts.insert(pts.end(), add.begin(), add.end());
    cur = LatticePolygon(pts);
  }
}

RsMaxResult rs_delta_max(long r, long s) {
  if (r < 2 || s < 1) throw DomainError("rs_delta_max needs r >= 2, s >= 1");
  if (std::gcd(r, s) != 1) throw DomainError("r and s must be coprime");
  long s_eff = s;
  if (s == r + 1) s_eff = r - 1;  // degenerate branch: same bidegree-(1,r) box
  if (s_eff > r - 1) throw DomainError("s must lie in [r-1] (or be r+1)");
  // left Farey neighbour of (r-s)/r in F_r encodes (r', s')
  auto nb = farey_neighbours(ExtFraction(r - s_eff, r), r);
  long rp = static_cast<long>(nb.first.den().get_si());
  long sp = rp - static_cast<long>(nb.first.num().get_si());
  RsMaxResult out;
  out.r_prime = rp;
  out.s_prime = sp;
  out.b = r / rp;
  out.c = (r - s_eff) / ((r - s_eff) - (rp - sp));
  long p, q;
  if (out.c == 1) {
    out.case_tag = '+';
    p = out.b * rp;
    q = out.b * sp;
  } else {
    out.case_tag = '-';
    p = r - out.c * (r - rp);
    q = s_eff - out.c * (s_eff - sp);
  }
  long pprime = r - p, qprime = s_eff - q;
  out.delta_max = LatticePolygon(std::vector<LatticePoint>{
      {0, 0}, {r - s_eff, r}, {p - q, p}, {pprime - qprime, pprime}});
  return out;
}

bool edge_locally_admissible(Corner corner, const EdgeLocal& e) {
  long s = e.sbar;  // s = sbar for corner edges; s = infinity iff r = 1
  if (corner == Corner::ZeroInf) {
    if (e.mu <= ExtFraction(1, 1)) return true;
  } else {
    if (e.mu >= ExtFraction(1, 1)) return true;
  }
  if (e.r == 1) return true;
  long as = std::labs(s);
  if (as == 0) return true;
  long m = ((e.r % as) + as) % as;
  return m == 1 % as || m == (as - 1) % as;
}

bool edge_pair_globalisable(Corner corner, const EdgeLocal& a, const EdgeLocal& b,
                            std::string* rule) {
  const EdgeLocal& i = a.mu <= b.mu ? a : b;
  const EdgeLocal& j = a.mu <= b.mu ? b : a;
  long rij = std::max(i.r, j.r);
  ExtFraction one(1, 1);
  auto setr = [&](const char* s) { if (rule) *rule = s; return true; };
  if (corner == Corner::ZeroInf) {
    if (i.mu <= one) return setr("G3");
    // (G1): exists m in {2..r_ij-1} with 1/mu_j <= (m-1)/m <= 1/mu_i
    ExtFraction inv_i(i.mu.den(), i.mu.num());
    ExtFraction inv_j(j.mu.den(), j.mu.num());
    for (long m = 2; m <= rij - 1; ++m) {
      ExtFraction mm(m - 1, m);
      if (inv_j <= mm && mm <= inv_i) return setr("G1");
    }
    // (G2): 1/mu_i >= (r_ij-1)/r_ij
    if (inv_i >= ExtFraction(rij - 1, rij)) return setr("G2");
    return false;
  }
  // primed conditions for the inf-0 corner
  if (j.mu >= one) return setr("G3'");
  ExtFraction inv_i(i.mu.den(), i.mu.num());
  ExtFraction inv_j(j.mu.den(), j.mu.num());
  for (long m = 1; m <= rij - 1; ++m) {
    ExtFraction mm(m + 1, m);
    if (inv_j <= mm && mm <= inv_i) return setr("G1'");
  }
  if (inv_j >= ExtFraction(rij + 1, rij)) return setr("G2'");
  return false;
}

EdgeAdmissibilityReport edge_admissibility(Corner corner, const std::vector<EdgeLocal>& edges) {
  EdgeAdmissibilityReport rep;
  // expand multiplicities: each unit edge is its own branch
  std::vector<EdgeLocal> flat;
  for (const auto& e : edges)
    for (long m = 0; m < e.multiplicity; ++m) {
      EdgeLocal u = e;
      u.multiplicity = 1;
      flat.push_back(u);
    }
  for (const auto& e : flat) {
    if (!edge_locally_admissible(corner, e)) {
      rep.all_local = false;
      rep.reasons.push_back("edge of slope " + e.mu.str() + " not locally admissible (r=" +
                            std::to_string(e.r) + ", s=" + std::to_string(e.sbar) + ")");
    }
  }
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = i + 1; j < flat.size(); ++j) {
      std::string rule;
      if (!edge_pair_globalisable(corner, flat[i], flat[j], &rule)) {
        rep.all_pairs = false;
        rep.reasons.push_back("edge pair with slopes " + flat[i].mu.str() + ", " +
                              flat[j].mu.str() + " not globalisable");
      }
    }
  return rep;
}

GammaVerdict gamma_admissibility(const LatticePolygon& poly) {
  GammaVerdict v;
  CornerDiagram cd = poly.corner_counts();
  v.ga1 = cd.count[0][0] == 0;
  if (!v.ga1)
    v.reasons.push_back("GammaA1 fails: " + std::to_string(cd.count[0][0]) +
                        " diagram points at the origin corner");
  auto r2 = edge_admissibility(Corner::ZeroInf, poly.edges_zero_inf());
  v.ga2 = r2.admissible();
  for (auto& s : r2.reasons) v.reasons.push_back("GammaA2: " + s);
  auto r3 = edge_admissibility(Corner::InfZero, poly.edges_inf_zero());
  v.ga3 = r3.admissible();
  for (auto& s : r3.reasons) v.reasons.push_back("GammaA3: " + s);
  return v;
}

namespace {

// primitive lattice directions sorted by angle, for the edge-vector
// enumeration of convex polygons
std::vector<LatticePoint> sorted_primitive_dirs(long dx, long dy) {
  std::vector<LatticePoint> dirs;
  for (long x = -dx; x <= dx; ++x)
    for (long y = -dy; y <= dy; ++y) {
      if (x == 0 && y == 0) continue;
      if (gcd_abs(x, y) != 1) continue;
      dirs.push_back({x, y});
    }
  std::sort(dirs.begin(), dirs.end(), [](const LatticePoint& a, const LatticePoint& b) {
    auto half = [](const LatticePoint& p) { return p.y > 0 || (p.y == 0 && p.x > 0) ? 0 : 1; };
    if (half(a) != half(b)) return half(a) < half(b);
    return a.x * b.y - a.y * b.x > 0;
  });
  return dirs;
}

void enumerate_rec(const std::vector<LatticePoint>& dirs, std::size_t idx,
                   long px, long nx, long py, long ny, long dx, long dy,
                   std::vector<std::pair<LatticePoint, long>>& chosen,
                   std::vector<LatticePolygon>& out) {
  if (idx == dirs.size()) {
    if (px != nx || py != ny) return;       // edge vectors must close up
    if (px != dx || py != dy) return;       // must span the full box
    if (chosen.size() < 2) return;
    std::vector<LatticePoint> pts;
    long cx = 0, cy = 0;
    for (const auto& [d, m] : chosen) {
      pts.push_back({cx, cy});
      cx += m * d.x;
      cy += m * d.y;
    }
    long minx = pts[0].x, miny = pts[0].y;
    for (auto& p : pts) { minx = std::min(minx, p.x); miny = std::min(miny, p.y); }
    for (auto& p : pts) { p.x -= minx; p.y -= miny; }
    LatticePolygon poly(pts);
    if (poly.bidegree_x() == dx && poly.bidegree_y() == dy && poly.inscribed())
      out.push_back(poly);
    return;
  }
  enumerate_rec(dirs, idx + 1, px, nx, py, ny, dx, dy, chosen, out);
  const auto& d = dirs[idx];
  for (long m = 1;; ++m) {
    long npx = px + (d.x > 0 ? m * d.x : 0);
    long nnx = nx + (d.x < 0 ? -m * d.x : 0);
    long npy = py + (d.y > 0 ? m * d.y : 0);
    long nny = ny + (d.y < 0 ? -m * d.y : 0);
    if (npx > dx || nnx > dx || npy > dy || nny > dy) break;
    chosen.push_back({d, m});
    enumerate_rec(dirs, idx + 1, npx, nnx, npy, nny, dx, dy, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<LatticePolygon> enumerate_inscribed_polygons(long dx, long dy) {
  std::vector<LatticePolygon> out;
  auto dirs = sorted_primitive_dirs(dx, dy);
  std::vector<std::pair<LatticePoint, long>> chosen;
  enumerate_rec(dirs, 0, 0, 0, 0, 0, dx, dy, chosen, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace trec

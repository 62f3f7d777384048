#pragma once

// Exact causal geometry of 1+1 Minkowski spacetime.  Null coordinates
// u = x0 - x1, v = x0 + x1 turn diamonds and wedges into axis-aligned boxes,
// so causal complements and completions of finite box unions are computed
// exactly (no sampling).  All regions are open; boundary points are resolved
// by kBoundaryEps in membership tests only -- the box algebra itself never
// does arithmetic on bounds, it only compares and copies them.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rslab/common.hpp"

namespace rsl {

struct Point2 {
  double t = 0.0;  // x0
  double x = 0.0;  // x1
};

inline double null_u(Point2 p) { return p.t - p.x; }
inline double null_v(Point2 p) { return p.t + p.x; }
inline Point2 from_null(double u, double v) { return {(u + v) / 2.0, (v - u) / 2.0}; }

// Boost with rapidity eta about the origin.
inline Point2 boost_point(Point2 p, double eta) {
  const double ch = std::cosh(eta), sh = std::sinh(eta);
  return {ch * p.t + sh * p.x, ch * p.x + sh * p.t};
}

// Reflection through the wedge edge: (x0, x1) -> (-x0, -x1).
inline Point2 reflect_point(Point2 p) { return {-p.t, -p.x}; }

inline bool spacelike_points(Point2 p, Point2 q) {
  return (null_u(p) - null_u(q)) * (null_v(p) - null_v(q)) < 0.0;
}

// Open box in null coordinates; +-inf bounds allowed.
struct Box {
  double u_lo = 0, u_hi = 0, v_lo = 0, v_hi = 0;

  [[nodiscard]] bool valid() const { return u_lo < u_hi && v_lo < v_hi; }
  [[nodiscard]] bool bounded() const {
    return std::isfinite(u_lo) && std::isfinite(u_hi) && std::isfinite(v_lo) && std::isfinite(v_hi);
  }
  [[nodiscard]] bool contains(Point2 p, double eps = kBoundaryEps) const {
    const double u = null_u(p), v = null_v(p);
    return u > u_lo + eps && u < u_hi - eps && v > v_lo + eps && v < v_hi - eps;
  }
  // closure containment: a subset of b (as open sets, sufficient and exact for boxes)
  [[nodiscard]] bool inside(const Box& b) const {
    return u_lo >= b.u_lo && u_hi <= b.u_hi && v_lo >= b.v_lo && v_hi <= b.v_hi;
  }
  friend bool operator==(const Box&, const Box&) = default;
};

inline std::optional<Box> intersect(const Box& a, const Box& b) {
  Box r{std::max(a.u_lo, b.u_lo), std::min(a.u_hi, b.u_hi),
        std::max(a.v_lo, b.v_lo), std::min(a.v_hi, b.v_hi)};
  if (!r.valid()) return std::nullopt;
  return r;
}

// a \ b as up to four boxes.
inline void subtract_into(const Box& a, const Box& b, std::vector<Box>& out) {
  const auto cap = intersect(a, b);
  if (!cap) {
    out.push_back(a);
    return;
  }
  const Box& c = *cap;
  if (a.u_lo < c.u_lo) out.push_back({a.u_lo, c.u_lo, a.v_lo, a.v_hi});
  if (c.u_hi < a.u_hi) out.push_back({c.u_hi, a.u_hi, a.v_lo, a.v_hi});
  if (a.v_lo < c.v_lo) out.push_back({c.u_lo, c.u_hi, a.v_lo, c.v_lo});
  if (c.v_hi < a.v_hi) out.push_back({c.u_lo, c.u_hi, c.v_hi, a.v_hi});
}

// Finite union of open boxes, normalized: every box valid, no box contained
// in another.  The represented set is the union.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Box> boxes) : boxes_(std::move(boxes)) { normalize(); }

  static Region empty_region() { return Region{}; }
  static Region full() { return Region({Box{-kInf, kInf, -kInf, kInf}}); }
  static Region diamond(double radius, Point2 center = {}) {
    const double cu = null_u(center), cv = null_v(center);
    return Region({Box{cu - radius, cu + radius, cv - radius, cv + radius}});
  }
  // W_L = {x1 < -|x0|} = {u > 0, v < 0};  W_R = {x1 > |x0|} = {u < 0, v > 0}.
  static Region left_wedge() { return Region({Box{0, kInf, -kInf, 0}}); }
  static Region right_wedge() { return Region({Box{-kInf, 0, 0, kInf}}); }

  [[nodiscard]] std::span<const Box> boxes() const { return boxes_; }
  [[nodiscard]] bool is_empty() const { return boxes_.empty(); }
  [[nodiscard]] bool bounded() const {
    return std::all_of(boxes_.begin(), boxes_.end(), [](const Box& b) { return b.bounded(); });
  }
  [[nodiscard]] bool contains(Point2 p, double eps = kBoundaryEps) const {
    return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(p, eps); });
  }

 private:
  void normalize() {
    std::erase_if(boxes_, [](const Box& b) { return !b.valid(); });
    std::sort(boxes_.begin(), boxes_.end(), [](const Box& a, const Box& b) {
      return std::tie(a.u_lo, a.v_lo, a.u_hi, a.v_hi) < std::tie(b.u_lo, b.v_lo, b.u_hi, b.v_hi);
    });
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
    std::vector<Box> keep;
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      bool covered = false;
      for (std::size_t j = 0; j < boxes_.size() && !covered; ++j)
        covered = (j != i) && boxes_[i].inside(boxes_[j]);
      if (!covered) keep.push_back(boxes_[i]);
    }
    boxes_ = std::move(keep);
  }

  std::vector<Box> boxes_;
};

inline Region region_union(const Region& a, const Region& b) {
  std::vector<Box> all(a.boxes().begin(), a.boxes().end());
  all.insert(all.end(), b.boxes().begin(), b.boxes().end());
  return Region(std::move(all));
}

inline Region region_intersect(const Region& a, const Region& b) {
  std::vector<Box> out;
  for (const Box& x : a.boxes())
    for (const Box& y : b.boxes())
      if (auto c = intersect(x, y)) out.push_back(*c);
  return Region(std::move(out));
}

inline Region region_subtract(const Region& a, const Region& b) {
  std::vector<Box> cur(a.boxes().begin(), a.boxes().end());
  for (const Box& y : b.boxes()) {
    std::vector<Box> next;
    for (const Box& x : cur) subtract_into(x, y, next);
    cur = std::move(next);
  }
  return Region(std::move(cur));
}

// Subset/equality as open sets.  Box subtraction only copies and compares
// bounds, so these are exact, not tolerance-based.
inline bool region_subset(const Region& a, const Region& b) {
  return region_subtract(a, b).is_empty();
}
inline bool region_equal(const Region& a, const Region& b) {
  return region_subset(a, b) && region_subset(b, a);
}

// All points spacelike from every point of r.  Per box the spacelike set is
// the union of the two opposite null quadrants; the complement of the union
// is the intersection over boxes, distributed and re-normalized.
inline Region causal_complement(const Region& r) {
  if (r.is_empty()) return Region::full();
  Region acc = Region::full();
  for (const Box& b : r.boxes()) {
    const Region quads({Box{b.u_hi, kInf, -kInf, b.v_lo}, Box{-kInf, b.u_lo, b.v_hi, kInf}});
    acc = region_intersect(acc, quads);
    if (acc.is_empty()) break;
  }
  return acc;
}

inline Region causal_completion(const Region& r) { return causal_complement(causal_complement(r)); }

struct RelationReport {
  bool subset_ab = false;
  bool subset_ba = false;
  bool disjoint = false;
  bool spacelike_separated = false;
};

inline RelationReport relate(const Region& a, const Region& b) {
  RelationReport rep;
  rep.subset_ab = region_subset(a, b);
  rep.subset_ba = region_subset(b, a);
  rep.disjoint = region_intersect(a, b).is_empty();
  rep.spacelike_separated = region_subset(b, causal_complement(a));
  return rep;
}

// Minkowski-sum inflation by a null-coordinate margin; exact on box unions.
inline Region inflate(const Region& r, double margin) {
  std::vector<Box> out;
  out.reserve(r.boxes().size());
  for (const Box& b : r.boxes())
    out.push_back({b.u_lo - margin, b.u_hi + margin, b.v_lo - margin, b.v_hi + margin});
  return Region(std::move(out));
}

// Coordinate change into the working frame: boost first, then translate.
struct Frame {
  Point2 translation{};
  double rapidity = 0.0;

  [[nodiscard]] Point2 apply(Point2 p) const {
    const Point2 q = boost_point(p, rapidity);
    return {q.t + translation.t, q.x + translation.x};
  }
  [[nodiscard]] Point2 invert(Point2 p) const {
    return boost_point({p.t - translation.t, p.x - translation.x}, -rapidity);
  }
  [[nodiscard]] bool is_identity() const {
    return translation.t == 0.0 && translation.x == 0.0 && rapidity == 0.0;
  }
};

inline Box apply_frame(const Box& b, const Frame& f) {
  // u -> e^{-rho} u + (dt - dx), v -> e^{rho} v + (dt + dx); order-preserving.
  const double eu = std::exp(-f.rapidity), ev = std::exp(f.rapidity);
  const double au = f.translation.t - f.translation.x, av = f.translation.t + f.translation.x;
  return {eu * b.u_lo + au, eu * b.u_hi + au, ev * b.v_lo + av, ev * b.v_hi + av};
}

inline Region apply_frame(const Region& r, const Frame& f) {
  std::vector<Box> out;
  out.reserve(r.boxes().size());
  for (const Box& b : r.boxes()) out.push_back(apply_frame(b, f));
  return Region(std::move(out));
}

// Pure translation placing a bounded region inside W_L with the given null
// margin; identity when the region already sits that deep.
inline Frame select_frame(const Region& r, double margin) {
  if (margin <= 0) throw GeometryError("select_frame: margin must be positive");
  if (r.is_empty()) return Frame{};
  if (!r.bounded()) throw GeometryError("select_frame: cannot fit a wedge frame around an unbounded region");
  double u_min = kInf, v_max = -kInf;
  for (const Box& b : r.boxes()) {
    u_min = std::min(u_min, b.u_lo);
    v_max = std::max(v_max, b.v_hi);
  }
  // spatial shift dx: u -> u - dx, v -> v + dx; need u >= margin, v <= -margin
  const double dx = std::min({u_min - margin, -margin - v_max, 0.0});
  Frame f{{0.0, dx}, 0.0};
  if (!region_subset(apply_frame(r, f), Region::left_wedge()))
    throw GeometryError("select_frame: postcondition failed");
  return f;
}

}  // namespace rsl

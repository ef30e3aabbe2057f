#include "latcell/polytope.hpp"

#include <algorithm>

#include "latcell/lp.hpp"

namespace latcell {

namespace {

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

// Primitive integer form of the halfspace normal.x <= offset.
Facet canonical_facet(const RatVec& normal, const Rat& offset) {
  RatVec joint = normal;
  joint.push_back(offset);
  IntVec prim = primitive_integer_vector(joint);
  Facet f;
  f.offset = prim.back();
  prim.pop_back();
  f.normal = std::move(prim);
  return f;
}

Rat eval_facet(const Facet& f, const RatVec& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += Rat(f.normal[i]) * x[i];
  return s - Rat(f.offset);
}

// Facet enumeration for a full-dimensional point set: double description of
// the dual cone {(y0,y) : y0 + y.p >= 0 for all p}.
std::vector<Facet> facets_of_points(const std::vector<RatVec>& pts, int dim) {
  std::vector<RatVec> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    RatVec r(dim + 1);
    r[0] = 1;
    for (int c = 0; c < dim; ++c) r[c + 1] = p[c];
    rows.push_back(std::move(r));
  }
  std::vector<Facet> facets;
  for (const auto& ray : dd_extreme_rays(rows)) {
    // ray (y0, y): valid inequality y.x >= -y0, i.e. (-y).x <= y0.
    Facet f;
    f.offset = ray[0];
    f.normal.resize(dim);
    for (int c = 0; c < dim; ++c) f.normal[c] = -ray[c + 1];
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), facet_less);
  return facets;
}

}  // namespace

RationalPolytope RationalPolytope::empty(int dim) {
  if (dim <= 0) throw input_error("polytope dimension must be positive");
  RationalPolytope p;
  p.dim_ = dim;
  return p;
}

RationalPolytope RationalPolytope::from_points(int dim, std::vector<RatVec> points) {
  if (dim <= 0) throw input_error("polytope dimension must be positive");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw input_error("vertex length does not match dimension");
  std::sort(points.begin(), points.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope out;
  out.dim_ = dim;
  if (points.empty()) return out;

  out.affine_dim_ = affine_rank(points);
  if (out.affine_dim_ < dim) {
    // Degenerate body: extreme points via LP against the rest.
    std::vector<RatVec> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<RatVec> others;
      others.reserve(points.size() - 1);
      for (std::size_t j = 0; j < points.size(); ++j)
        if (j != i) others.push_back(points[j]);
      if (others.empty() || !in_convex_hull(others, points[i]))
        kept.push_back(points[i]);
    }
    out.vertices_ = std::move(kept);
    return out;
  }

  // Full-dimensional: one facet enumeration gives both canonical forms.
  std::vector<Facet> facets = facets_of_points(points, dim);
  for (const auto& p : points) {
    RatMatrix tight;
    for (const auto& f : facets) {
      if (eval_facet(f, p) == 0) {
        RatVec row(dim);
        for (int c = 0; c < dim; ++c) row[c] = Rat(f.normal[c]);
        tight.push_back(std::move(row));
      }
    }
    if (static_cast<int>(tight.size()) >= dim && rank(std::move(tight)) == dim)
      out.vertices_.push_back(p);
  }
  out.cache_->facets = std::move(facets);
  return out;
}

RationalPolytope RationalPolytope::from_halfspaces(
    int dim, const std::vector<std::pair<RatVec, Rat>>& halfspaces) {
  if (dim <= 0) throw input_error("polytope dimension must be positive");
  std::vector<RatVec> rows;
  rows.reserve(halfspaces.size() + 1);
  for (const auto& [a, b] : halfspaces) {
    if (static_cast<int>(a.size()) != dim)
      throw input_error("halfspace normal length does not match dimension");
    RatVec r(dim + 1);
    r[0] = b;
    for (int c = 0; c < dim; ++c) r[c + 1] = -a[c];
    rows.push_back(std::move(r));
  }
  RatVec nonneg(dim + 1, Rat(0));
  nonneg[0] = 1;
  rows.push_back(std::move(nonneg));

  std::vector<IntVec> rays = dd_extreme_rays(rows);
  std::vector<RatVec> verts;
  bool any_recession = false;
  for (const auto& r : rays) {
    if (r[0] == 0) {
      any_recession = true;
      continue;
    }
    RatVec v(dim);
    for (int c = 0; c < dim; ++c) v[c] = Rat(r[c + 1]) / Rat(r[0]);
    verts.push_back(std::move(v));
  }
  if (verts.empty()) return RationalPolytope::empty(dim);
  if (any_recession)
    throw precondition_error("halfspace region is unbounded");

  RationalPolytope out;
  out.dim_ = dim;
  std::sort(verts.begin(), verts.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  out.vertices_ = std::move(verts);
  out.affine_dim_ = affine_rank(out.vertices_);
  return out;
}

const std::vector<Facet>& RationalPolytope::facets() const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (cache_->facets) return *cache_->facets;
  if (!full_dimensional())
    throw precondition_error("facet representation requires a full-dimensional body");
  cache_->facets = facets_of_points(vertices_, dim_);
  return *cache_->facets;
}

bool RationalPolytope::contains(const RatVec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw input_error("point length does not match polytope dimension");
  if (is_empty()) return false;
  if (full_dimensional()) {
    for (const auto& f : facets())
      if (eval_facet(f, x) > 0) return false;
    return true;
  }
  return in_convex_hull(vertices_, x);
}

bool RationalPolytope::is_symmetric() const {
  for (const auto& v : vertices_) {
    RatVec neg(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) neg[c] = -v[c];
    if (!std::binary_search(vertices_.begin(), vertices_.end(), neg,
                            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); }))
      return false;
  }
  return !is_empty();
}

bool RationalPolytope::origin_interior(RatVec* violation) const {
  if (!full_dimensional()) {
    if (violation) violation->assign(dim_, Rat(0));
    return false;
  }
  for (const auto& f : facets()) {
    if (f.offset <= 0) {
      if (violation) {
        violation->resize(dim_);
        for (int c = 0; c < dim_; ++c) (*violation)[c] = Rat(f.normal[c]);
      }
      return false;
    }
  }
  return true;
}

std::pair<RatVec, RatVec> RationalPolytope::bounding_box() const {
  if (is_empty()) throw precondition_error("bounding box of empty polytope");
  RatVec lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_)
    for (int c = 0; c < dim_; ++c) {
      lo[c] = std::min(lo[c], v[c]);
      hi[c] = std::max(hi[c], v[c]);
    }
  return {lo, hi};
}

RationalPolytope RationalPolytope::project_onto(const IndexSet& coords) const {
  if (coords.ambient() != dim_)
    throw input_error("projection index set does not match polytope dimension");
  if (coords.is_trivial()) throw input_error("projection onto the trivial index set");
  {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    auto it = cache_->projections.find(coords);
    if (it != cache_->projections.end()) return *it->second;
  }
  std::vector<RatVec> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) {
    RatVec q(coords.size());
    for (int c = 0; c < coords.size(); ++c) q[c] = v[coords.indices()[c] - 1];
    pts.push_back(std::move(q));
  }
  auto result = std::make_shared<const RationalPolytope>(
      from_points(coords.size(), std::move(pts)));
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  return *cache_->projections.emplace(coords, std::move(result)).first->second;
}

RationalPolytope RationalPolytope::section(const IndexSet& kept) const {
  if (kept.ambient() != dim_)
    throw input_error("section index set does not match polytope dimension");
  if (kept.is_trivial()) throw input_error("section through the trivial index set");
  if (!full_dimensional())
    throw precondition_error("section requires a full-dimensional body");
  {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    auto it = cache_->sections.find(kept);
    if (it != cache_->sections.end()) return *it->second;
  }
  std::vector<std::pair<RatVec, Rat>> rows;
  for (const auto& f : facets()) {
    RatVec a(kept.size());
    for (int c = 0; c < kept.size(); ++c) a[c] = Rat(f.normal[kept.indices()[c] - 1]);
    rows.emplace_back(std::move(a), Rat(f.offset));
  }
  auto result =
      std::make_shared<const RationalPolytope>(from_halfspaces(kept.size(), rows));
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  return *cache_->sections.emplace(kept, std::move(result)).first->second;
}

RationalPolytope RationalPolytope::polar() const {
  RatVec violation;
  if (!origin_interior(&violation)) {
    std::string msg = "polar requires the origin strictly interior; separating normal (";
    for (std::size_t c = 0; c < violation.size(); ++c) {
      if (c) msg += ",";
      msg += rational_to_string(violation[c]);
    }
    throw precondition_error(msg + ")");
  }
  std::vector<std::pair<RatVec, Rat>> rows;
  rows.reserve(vertices_.size());
  for (const auto& v : vertices_) rows.emplace_back(v, Rat(1));
  RationalPolytope out = from_halfspaces(dim_, rows);
  // Each vertex of a full-dimensional body with interior origin supports a
  // facet of the polar; cache the canonical list directly.
  std::vector<Facet> facets;
  facets.reserve(vertices_.size());
  for (const auto& v : vertices_) facets.push_back(canonical_facet(v, Rat(1)));
  std::sort(facets.begin(), facets.end(), facet_less);
  out.cache_->facets = std::move(facets);
  return out;
}

RationalPolytope RationalPolytope::translate(const RatVec& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw input_error("translation vector length does not match dimension");
  RationalPolytope out;
  out.dim_ = dim_;
  out.affine_dim_ = affine_dim_;
  out.vertices_.reserve(vertices_.size());
  for (const auto& p : vertices_) {
    RatVec q(p.size());
    for (int c = 0; c < dim_; ++c) q[c] = p[c] + v[c];
    out.vertices_.push_back(std::move(q));
  }
  std::sort(out.vertices_.begin(), out.vertices_.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (cache_->facets) {
    std::vector<Facet> fs;
    fs.reserve(cache_->facets->size());
    for (const auto& f : *cache_->facets) {
      Rat shift = 0;
      RatVec normal(dim_);
      for (int c = 0; c < dim_; ++c) {
        normal[c] = Rat(f.normal[c]);
        shift += normal[c] * v[c];
      }
      fs.push_back(canonical_facet(normal, Rat(f.offset) + shift));
    }
    std::sort(fs.begin(), fs.end(), facet_less);
    out.cache_->facets = std::move(fs);
  }
  if (cache_->volume) out.cache_->volume = *cache_->volume;  // translation invariant
  return out;
}

RationalPolytope RationalPolytope::scale(const Rat& s) const {
  if (s <= 0) throw input_error("scale factor must be positive");
  RationalPolytope out;
  out.dim_ = dim_;
  out.affine_dim_ = affine_dim_;
  out.vertices_.reserve(vertices_.size());
  for (const auto& p : vertices_) {
    RatVec q(p.size());
    for (int c = 0; c < dim_; ++c) q[c] = p[c] * s;
    out.vertices_.push_back(std::move(q));
  }
  std::sort(out.vertices_.begin(), out.vertices_.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (cache_->facets) {
    std::vector<Facet> fs;
    fs.reserve(cache_->facets->size());
    for (const auto& f : *cache_->facets) {
      RatVec normal(dim_);
      for (int c = 0; c < dim_; ++c) normal[c] = Rat(f.normal[c]);
      fs.push_back(canonical_facet(normal, Rat(f.offset) * s));
    }
    std::sort(fs.begin(), fs.end(), facet_less);
    out.cache_->facets = std::move(fs);
  }
  if (cache_->volume && full_dimensional()) {
    Rat scaled = *cache_->volume;
    for (int i = 0; i < dim_; ++i) scaled *= s;
    out.cache_->volume = scaled;
  }
  return out;
}

RationalPolytope hull_of_union(const RationalPolytope& a, const RationalPolytope& b) {
  if (a.dim() != b.dim()) throw input_error("hull of bodies with different dimensions");
  std::vector<RatVec> pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return RationalPolytope::from_points(a.dim(), std::move(pts));
}

RationalPolytope intersection(const RationalPolytope& a, const RationalPolytope& b) {
  if (a.dim() != b.dim()) throw input_error("intersection of bodies with different dimensions");
  if (a.is_empty() || b.is_empty()) return RationalPolytope::empty(a.dim());
  std::vector<std::pair<RatVec, Rat>> rows;
  for (const auto* body : {&a, &b}) {
    if (!body->full_dimensional())
      throw precondition_error("intersection requires full-dimensional bodies");
    for (const auto& f : body->facets()) {
      RatVec normal(body->dim());
      for (int c = 0; c < body->dim(); ++c) normal[c] = Rat(f.normal[c]);
      rows.emplace_back(std::move(normal), Rat(f.offset));
    }
  }
  return RationalPolytope::from_halfspaces(a.dim(), rows);
}

namespace {

std::vector<std::vector<int>> triangulate_over(const std::vector<RatVec>& points, int dim,
                                               const std::vector<Facet>& facets) {
  std::vector<std::vector<int>> simplices;
  const RatVec& apex = points[0];
  for (const auto& f : facets) {
    if (eval_facet(f, apex) == 0) continue;  // apex lies on this facet
    std::vector<int> fidx;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (eval_facet(f, points[i]) == 0) fidx.push_back(static_cast<int>(i));
    // Project the facet along a coordinate its normal is nonzero in; this is
    // a rational affine bijection of the facet hyperplane onto R^{dim-1}.
    int drop = 0;
    while (f.normal[drop] == 0) ++drop;
    std::vector<RatVec> fpts;
    fpts.reserve(fidx.size());
    for (int i : fidx) {
      RatVec q;
      q.reserve(dim - 1);
      for (int c = 0; c < dim; ++c)
        if (c != drop) q.push_back(points[i][c]);
      fpts.push_back(std::move(q));
    }
    for (const auto& sub : triangulate(fpts, dim - 1)) {
      std::vector<int> simplex;
      simplex.reserve(dim + 1);
      simplex.push_back(0);
      for (int s : sub) simplex.push_back(fidx[s]);
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

}  // namespace

std::vector<std::vector<int>> triangulate(const std::vector<RatVec>& points, int dim) {
  if (static_cast<int>(points.size()) < dim + 1)
    throw precondition_error("triangulation requires a full-dimensional point set");
  if (static_cast<int>(points.size()) == dim + 1) {
    std::vector<int> all(dim + 1);
    for (int i = 0; i <= dim; ++i) all[i] = i;
    return {all};
  }
  return triangulate_over(points, dim, facets_of_points(points, dim));
}

Rat RationalPolytope::volume() const {
  if (!full_dimensional()) return 0;
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (cache_->volume) return *cache_->volume;
  if (dim_ > 7)
    throw precondition_error(
        "exact volume is limited to dimension 7; use the Monte Carlo oracle");
  Rat total = 0;
  Rat factorial = 1;
  for (int i = 2; i <= dim_; ++i) factorial *= i;
  std::vector<std::vector<int>> simplices;
  if (static_cast<int>(vertices_.size()) == dim_ + 1) {
    std::vector<int> all(dim_ + 1);
    for (int i = 0; i <= dim_; ++i) all[i] = i;
    simplices.push_back(std::move(all));
  } else {
    simplices = triangulate_over(vertices_, dim_, facets());
  }
  for (const auto& simplex : simplices) {
    RatMatrix m(dim_, RatVec(dim_));
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        m[r][c] = vertices_[simplex[r + 1]][c] - vertices_[simplex[0]][c];
    Rat d = det(std::move(m));
    total += d < 0 ? -d : d;
  }
  cache_->volume = total / factorial;
  return *cache_->volume;
}

}  // namespace latcell

#include "toriparam/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "toriparam/error.hpp"

namespace toriparam {

namespace {

std::string show(const IntVec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Rank of the affine hull of the points (-1 for an empty set).
long affine_rank(const std::vector<IntVec>& pts, std::size_t dim) {
  if (pts.empty()) return -1;
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVec d(dim);
    for (std::size_t k = 0; k < dim; ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return static_cast<long>(rank(IntMat::from_rows(diffs, dim)));
}

Integer evaluate(const Facet& f, const IntVec& m) { return dot(m, f.normal) + f.offset; }

std::size_t normal_rank(const std::vector<Facet>& facets,
                        const std::vector<std::size_t>& idx, std::size_t dim) {
  std::vector<IntVec> rows;
  for (auto i : idx) rows.push_back(facets[i].normal);
  if (rows.empty()) return 0;
  return rank(IntMat::from_rows(rows, dim));
}

void check_dims(std::size_t dim, const std::vector<IntVec>& pts) {
  if (dim == 0) throw Error(ErrorCode::InvalidPolytope, "dimension must be positive");
  for (const auto& p : pts) {
    if (p.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "point " + show(p) + " has wrong length");
    }
  }
}

// All facets of conv(points) by brute force over dim-subsets.
std::vector<Facet> hull_facets(std::size_t dim, const std::vector<IntVec>& pts) {
  std::vector<Facet> facets;
  std::vector<std::size_t> pick(dim);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth,
                                                          std::size_t start) {
    if (depth == dim) {
      std::vector<IntVec> diffs;
      for (std::size_t k = 1; k < dim; ++k) {
        IntVec d(dim);
        for (std::size_t c = 0; c < dim; ++c) d[c] = pts[pick[k]][c] - pts[pick[0]][c];
        diffs.push_back(std::move(d));
      }
      IntMat kernel = diffs.empty() ? IntMat::identity(dim)
                                    : saturated_kernel_basis(IntMat::from_rows(diffs, dim));
      if (kernel.cols() != 1) return;
      IntVec normal = primitive_vector(kernel.column(0));
      Integer offset = -dot(pts[pick[0]], normal);
      bool all_pos = true, all_neg = true;
      for (const auto& p : pts) {
        Integer v = dot(p, normal) + offset;
        if (v < 0) all_pos = false;
        if (v > 0) all_neg = false;
      }
      if (all_neg && !all_pos) {
        for (auto& x : normal) x = -x;
        offset = -offset;
      } else if (!all_pos) {
        return;
      }
      Facet f{std::move(normal), std::move(offset)};
      if (std::find(facets.begin(), facets.end(), f) == facets.end()) {
        facets.push_back(std::move(f));
      }
      return;
    }
    for (std::size_t i = start; i < pts.size(); ++i) {
      pick[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  return facets;
}

}  // namespace

bool LatticePolytope::contains(const IntVec& m) const {
  if (m.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "point " + show(m) + " has wrong length");
  }
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return evaluate(f, m) >= 0; });
}

std::vector<std::size_t> LatticePolytope::tight_facets(const IntVec& m) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (evaluate(facets_[i], m) == 0) out.push_back(i);
  }
  return out;
}

LatticePolytope LatticePolytope::from_h_representation(std::size_t dim,
                                                       std::vector<IntVec> vertices,
                                                       std::vector<Facet> facets) {
  check_dims(dim, vertices);
  if (affine_rank(vertices, dim) != static_cast<long>(dim)) {
    throw Error(ErrorCode::NotFullDimensional, "vertices do not span the ambient space");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j]) {
        throw Error(ErrorCode::InvalidPolytope, "duplicate vertex " + show(vertices[i]));
      }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Facet& f = facets[i];
    if (f.normal.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "facet normal has wrong length");
    }
    if (is_zero(f.normal) || content(f.normal) != 1) {
      throw Error(ErrorCode::InvalidPolytope, "facet normal " + show(f.normal) + " is not primitive");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (facets[j] == f) throw Error(ErrorCode::InvalidPolytope, "duplicate facet");
    std::vector<IntVec> on_facet;
    for (const auto& v : vertices) {
      Integer val = evaluate(f, v);
      if (val < 0) {
        throw Error(ErrorCode::InvalidPolytope,
                    "vertex " + show(v) + " violates facet " + show(f.normal));
      }
      if (val == 0) on_facet.push_back(v);
    }
    if (affine_rank(on_facet, dim) != static_cast<long>(dim) - 1) {
      throw Error(ErrorCode::InvalidPolytope,
                  "inequality with normal " + show(f.normal) + " does not define a facet");
    }
  }
  LatticePolytope p(dim, std::move(vertices), std::move(facets));
  for (const auto& v : p.vertices_) {
    if (normal_rank(p.facets_, p.tight_facets(v), dim) != dim) {
      throw Error(ErrorCode::InvalidPolytope, "point " + show(v) + " is not a vertex");
    }
  }
  if (dim <= 3) {
    std::vector<Facet> hull = hull_facets(dim, p.vertices_);
    std::vector<Facet> given = p.facets_;
    std::sort(given.begin(), given.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    if (hull != given) {
      throw Error(ErrorCode::InvalidPolytope, "facet list does not match the vertex hull");
    }
  }
  return p;
}

LatticePolytope polytope_from_vertices(std::size_t dim, const std::vector<IntVec>& points) {
  if (dim == 0 || dim > 3) {
    throw Error(ErrorCode::UnsupportedDimension,
                "hull computation supports dimensions 1 to 3; supply facets explicitly");
  }
  check_dims(dim, points);
  std::vector<IntVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (affine_rank(pts, dim) != static_cast<long>(dim)) {
    throw Error(ErrorCode::NotFullDimensional, "points do not span the ambient space");
  }
  std::vector<Facet> facets = hull_facets(dim, pts);
  std::vector<IntVec> vertices;
  for (const auto& p : pts) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (evaluate(facets[i], p) == 0) tight.push_back(i);
    if (normal_rank(facets, tight, dim) == dim) vertices.push_back(p);
  }
  return LatticePolytope(dim, std::move(vertices), std::move(facets));
}

LatticePolytope reorder_facets(const LatticePolytope& p, const std::vector<std::size_t>& perm) {
  if (perm.size() != p.facet_count()) {
    throw Error(ErrorCode::LengthMismatch, "facet permutation has wrong length");
  }
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error(ErrorCode::InvalidInput, "not a permutation");
  }
  std::vector<Facet> facets;
  for (auto i : perm) facets.push_back(p.facets()[i]);
  return LatticePolytope::from_h_representation(p.dim(), p.vertices(), std::move(facets));
}

std::vector<IntVec> lattice_points(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  IntVec lo = p.vertices().front();
  IntVec hi = lo;
  for (const auto& v : p.vertices())
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] < lo[k]) lo[k] = v[k];
      if (v[k] > hi[k]) hi[k] = v[k];
    }
  std::vector<IntVec> out;
  IntVec cur = lo;
  while (true) {
    if (p.contains(cur)) out.push_back(cur);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
      if (k == 0) return out;
    }
  }
}

IntVec hyperplane_exponents(const std::vector<Facet>& hyperplanes, const IntVec& m) {
  IntVec e;
  e.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) {
    Integer v = evaluate(h, m);
    if (v < 0) {
      throw Error(ErrorCode::PointOutsidePolytope, show(m) + " lies outside the polytope");
    }
    e.push_back(std::move(v));
  }
  return e;
}

IntVec delta_monomial(const LatticePolytope& p, const IntVec& m) {
  if (m.size() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "point " + show(m) + " has wrong length");
  }
  return hyperplane_exponents(p.facets(), m);
}

}  // namespace toriparam

#include "twinpoly/geometry.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace twinpoly {

namespace {

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int floor_div(const Int& a, const Int& b) {  // b > 0
  Int q = a / b;
  if (q * b > a) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

Int int_pow(const Int& base, int e) {
  Int r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Common-denominator integer view of a rational point set:
// pts[k] == scale * original[k].
struct ScaledPoints {
  int dim = 0;
  Int scale = 1;
  std::vector<IntVector> pts;
};

ScaledPoints scale_points(int dim, const std::vector<RationalVector>& vs) {
  ScaledPoints s;
  s.dim = dim;
  for (const auto& p : vs)
    for (Eigen::Index i = 0; i < p.size(); ++i)
      s.scale = boost::multiprecision::lcm(s.scale, denominator_of(p[i]));
  s.pts.reserve(vs.size());
  for (const auto& p : vs) {
    IntVector u(dim);
    for (int i = 0; i < dim; ++i)
      u[i] = numerator_of(p[i]) * (s.scale / denominator_of(p[i]));
    s.pts.push_back(std::move(u));
  }
  return s;
}

// Incremental fraction-free row echelon.  Rows are pushed in stack
// order and never mutated; a pushed row is zero at the pivots of all
// rows beneath it, so the stack solves by one reverse sweep.  Pivots
// are restricted to the first pivot_width columns (rows may carry an
// augmented right-hand-side column beyond that).
struct Echelon {
  int pivot_width;
  std::vector<IntVector> rows;
  std::vector<int> pivots;

  explicit Echelon(int width) : pivot_width(width) {}

  int rank() const { return static_cast<int>(rows.size()); }

  // Reduces r in place; returns its pivot column, or -1 if r is
  // linearly dependent on the current rows (over the pivot columns).
  int reduce(IntVector& r) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const int p = pivots[k];
      if (r[p] == 0) continue;
      const Int rp = r[p];
      const Int wp = rows[k][p];
      for (Eigen::Index i = 0; i < r.size(); ++i)
        r[i] = r[i] * wp - rows[k][i] * rp;
    }
    Int g = content(r);
    if (g > 1)
      for (Eigen::Index i = 0; i < r.size(); ++i) r[i] /= g;
    for (int i = 0; i < pivot_width; ++i)
      if (r[i] != 0) return i;
    return -1;
  }

  void push(IntVector r, int pivot) {
    rows.push_back(std::move(r));
    pivots.push_back(pivot);
  }

  void pop() {
    rows.pop_back();
    pivots.pop_back();
  }
};

// Primitive integer direction spanning the kernel of an echelon of
// rank pivot_width - 1 (rows must not be augmented).
IntVector kernel_direction(const Echelon& e) {
  const int d = e.pivot_width;
  std::vector<char> used(d, 0);
  for (int p : e.pivots) used[p] = 1;
  int free_col = -1;
  for (int i = 0; i < d; ++i)
    if (!used[i]) {
      free_col = i;
      break;
    }
  RationalVector a = RationalVector::Zero(d);
  a[free_col] = 1;
  for (int k = e.rank() - 1; k >= 0; --k) {
    const IntVector& w = e.rows[k];
    const int p = e.pivots[k];
    Rational s = 0;
    for (int j = 0; j < d; ++j) {
      if (j == p || w[j] == 0) continue;
      s += Rational(w[j]) * a[j];
    }
    a[p] = -s / Rational(w[p]);
  }
  auto [u, t] = clear_denominators(a);
  make_primitive(u);
  return u;
}

// Solution of the d augmented rows [A | c] (rank d) as a rational point.
RationalVector solve_point(const Echelon& e) {
  const int d = e.pivot_width;
  RationalVector x = RationalVector::Zero(d);
  for (int k = e.rank() - 1; k >= 0; --k) {
    const IntVector& w = e.rows[k];
    const int p = e.pivots[k];
    Rational s = Rational(w[d]);
    for (int j = 0; j < d; ++j) {
      if (j == p || w[j] == 0) continue;
      s -= Rational(w[j]) * x[j];
    }
    x[p] = s / Rational(w[p]);
  }
  return x;
}

int affine_rank(const ScaledPoints& s) {
  Echelon e(s.dim);
  for (std::size_t k = 1; k < s.pts.size() && e.rank() < s.dim; ++k) {
    IntVector r = s.pts[k] - s.pts[0];
    const int p = e.reduce(r);
    if (p >= 0) e.push(std::move(r), p);
  }
  return e.rank();
}

void check_hull_capacity(int dim, std::size_t n_points) {
  if (dim < 1) throw DomainError("ambient dimension must be positive");
  if (dim > kMaxHullDimension)
    throw CapacityError("hull kernel supports dimension <= " +
                        std::to_string(kMaxHullDimension));
  if (n_points > kMaxHullPoints)
    throw CapacityError("hull kernel supports at most " +
                        std::to_string(kMaxHullPoints) + " points");
}

// Oriented facet row in the scaled lattice: normal . z <= rhs.
struct ScaledFacet {
  IntVector normal;
  Int rhs;
};

// Candidate-hyperplane search: every one-sided hyperplane spanned by
// d affinely independent input points is a facet, and every facet is
// found that way.  Hyperplanes are deduplicated by a sign-canonical
// (normal, rhs) key before the one-sidedness scan.
class FacetSearch {
 public:
  explicit FacetSearch(const ScaledPoints& s)
      : s_(s), d_(s.dim), n_(static_cast<int>(s.pts.size())) {}

  std::vector<ScaledFacet> run() {
    check_hull_capacity(d_, s_.pts.size());
    if (n_ == 0) throw DimensionError("empty point set");
    if (affine_rank(s_) < d_)
      throw DimensionError("points do not affinely span the ambient space");
    for (int base = 0; base + d_ <= n_; ++base) {
      Echelon e(d_);
      if (d_ == 1)
        leaf(e, base);
      else
        extend(e, base, base);
    }
    std::sort(found_.begin(), found_.end(),
              [](const ScaledFacet& a, const ScaledFacet& b) {
                const int c = lex_compare(a.normal, b.normal);
                return c != 0 ? c < 0 : a.rhs < b.rhs;
              });
    return std::move(found_);
  }

 private:
  void extend(Echelon& e, int base, int last) {
    const int needed = (d_ - 1) - e.rank();
    for (int i = last + 1; i + needed <= n_; ++i) {
      IntVector r = s_.pts[i] - s_.pts[base];
      const int p = e.reduce(r);
      if (p < 0) continue;
      e.push(std::move(r), p);
      if (e.rank() == d_ - 1)
        leaf(e, base);
      else
        extend(e, base, i);
      e.pop();
    }
  }

  void leaf(const Echelon& e, int base) {
    IntVector a = kernel_direction(e);
    Int c = dot(a, s_.pts[base]);
    int sgn = c != 0 ? (c > 0 ? 1 : -1) : 0;
    for (int i = 0; sgn == 0 && i < d_; ++i)
      if (a[i] != 0) sgn = a[i] > 0 ? 1 : -1;
    if (sgn < 0) {
      a = -a;
      c = -c;
    }
    IntVector key(d_ + 1);
    key.head(d_) = a;
    key[d_] = c;
    if (!seen_.insert(std::move(key)).second) return;
    bool above = false, below = false;
    for (int k = 0; k < n_; ++k) {
      const Int t = dot(a, s_.pts[k]) - c;
      if (t > 0)
        above = true;
      else if (t < 0)
        below = true;
      if (above && below) return;
    }
    if (above) {
      a = -a;
      c = -c;
    }
    found_.push_back(ScaledFacet{std::move(a), std::move(c)});
  }

  const ScaledPoints& s_;
  int d_, n_;
  std::unordered_set<IntVector, IntVectorHash, IntVectorEq> seen_;
  std::vector<ScaledFacet> found_;
};

std::vector<Facet> facet_list_raw(int dim,
                                  const std::vector<RationalVector>& pts) {
  const ScaledPoints s = scale_points(dim, pts);
  std::vector<ScaledFacet> rows = FacetSearch(s).run();
  std::vector<Facet> out;
  out.reserve(rows.size());
  for (auto& row : rows) {
    Facet f;
    f.rhs = Rational(row.rhs) / Rational(s.scale);
    for (std::size_t k = 0; k < s.pts.size(); ++k)
      if (dot(row.normal, s.pts[k]) == row.rhs)
        f.incident_vertices.push_back(static_cast<int>(k));
    f.normal = std::move(row.normal);
    out.push_back(std::move(f));
  }
  return out;
}

bool is_zero_vector(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

// Throws UnboundedError if the kernel direction of some d-1 independent
// normals (or its negation) lies in the recession cone {r : A r <= 0}.
void recession_scan(int d, const std::vector<IntVector>& normals, Echelon& e,
                    int last) {
  const int m = static_cast<int>(normals.size());
  if (e.rank() == d - 1) {
    const IntVector r = kernel_direction(e);
    for (int pass = 0; pass < 2; ++pass) {
      bool receding = true;
      for (int k = 0; k < m && receding; ++k) {
        const Int t = dot(normals[k], r);
        receding = pass == 0 ? t <= 0 : t >= 0;
      }
      if (receding) throw UnboundedError("recession direction found");
    }
    return;
  }
  const int needed = (d - 1) - e.rank();
  for (int i = last + 1; i + needed <= m; ++i) {
    IntVector row = normals[i];
    const int p = e.reduce(row);
    if (p < 0) continue;
    e.push(std::move(row), p);
    recession_scan(d, normals, e, i);
    e.pop();
  }
}

struct BasicSolutionScan {
  int d;
  const std::vector<IntVector>& aug;      // [A | c] rows
  const std::vector<IntVector>& normals;  // original integer rows
  const std::vector<Int>& rhs;
  std::unordered_set<IntVector, IntVectorHash, IntVectorEq> seen;
  std::vector<RationalVector> points;

  void rec(Echelon& e, int last) {
    const int m = static_cast<int>(aug.size());
    if (e.rank() == d) {
      RationalVector x = solve_point(e);
      auto [u, t] = clear_denominators(x);
      IntVector key(d + 1);
      key.head(d) = u;
      key[d] = t;
      if (!seen.insert(std::move(key)).second) return;
      for (int k = 0; k < m; ++k)
        if (dot(normals[k], u) > rhs[k] * t) return;
      points.push_back(std::move(x));
      return;
    }
    const int needed = d - e.rank();
    for (int i = last + 1; i + needed <= m; ++i) {
      IntVector row = aug[i];
      const int p = e.reduce(row);
      if (p < 0) continue;
      e.push(std::move(row), p);
      rec(e, i);
      e.pop();
    }
  }
};

// Shared vertex-enumeration core.  check_bounded enables the recession
// test; callers that intersect a known-bounded polytope skip it.
VRep vertex_enumeration_impl(const HRep& h, bool check_bounded) {
  const int d = h.dim;
  if (d < 1) throw DomainError("ambient dimension must be positive");
  if (d > kMaxHullDimension)
    throw CapacityError("vertex enumeration supports dimension <= " +
                        std::to_string(kMaxHullDimension));
  std::vector<IntVector> normals;
  std::vector<Int> rhs;
  for (const auto& row : h.rows) {
    if (static_cast<int>(row.normal.size()) != d)
      throw DomainError("row dimension mismatch");
    const Int den = denominator_of(row.rhs);
    IntVector a = row.normal * den;
    Int c = numerator_of(row.rhs);
    if (is_zero_vector(a)) {
      if (c < 0) return VRep(d, {});  // trivially infeasible
      continue;
    }
    normals.push_back(std::move(a));
    rhs.push_back(std::move(c));
  }
  const int m = static_cast<int>(normals.size());

  if (check_bounded) {
    Echelon span(d);
    for (int k = 0; k < m && span.rank() < d; ++k) {
      IntVector r = normals[k];
      const int p = span.reduce(r);
      if (p >= 0) span.push(std::move(r), p);
    }
    if (span.rank() < d)
      throw UnboundedError("normals do not span: recession cone has a line");
    Echelon e(d);
    recession_scan(d, normals, e, -1);
  }

  std::vector<IntVector> aug(m);
  for (int k = 0; k < m; ++k) {
    aug[k].resize(d + 1);
    aug[k].head(d) = normals[k];
    aug[k][d] = rhs[k];
  }
  BasicSolutionScan scan{d, aug, normals, rhs, {}, {}};
  Echelon e(d);
  scan.rec(e, -1);
  return VRep(d, std::move(scan.points));
}

std::vector<IntVector> lattice_points_in_box(const HRep& h,
                                             const std::vector<Int>& lo,
                                             const std::vector<Int>& hi,
                                             bool strict) {
  const int d = h.dim;
  Int cells = 1;
  for (int i = 0; i < d; ++i) {
    if (lo[i] > hi[i]) return {};
    cells *= hi[i] - lo[i] + 1;
    if (cells > 1 << 24)
      throw CapacityError("lattice point scan box too large");
  }
  // integer row view
  std::vector<IntVector> normals;
  std::vector<Int> num, den;
  for (const auto& row : h.rows) {
    normals.push_back(row.normal);
    num.push_back(numerator_of(row.rhs));
    den.push_back(denominator_of(row.rhs));
  }
  std::vector<IntVector> out;
  IntVector z(d);
  for (int i = 0; i < d; ++i) z[i] = lo[i];
  for (;;) {
    bool inside = true;
    for (std::size_t k = 0; k < normals.size() && inside; ++k) {
      const Int v = dot(normals[k], z) * den[k];
      inside = strict ? (v < num[k]) : (v <= num[k]);
    }
    if (inside) out.push_back(z);
    int i = 0;
    for (; i < d; ++i) {
      if (z[i] < hi[i]) {
        ++z[i];
        break;
      }
      z[i] = lo[i];
    }
    if (i == d) break;
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

// Recursive facet-pyramid triangulation.  `ids` carries the caller's
// indices for the local points; emitted simplices use those ids.
void triangulate_rec(int m, const std::vector<RationalVector>& pts,
                     const std::vector<int>& ids,
                     std::vector<std::vector<int>>& simplices,
                     std::vector<int>& prefix) {
  const int n = static_cast<int>(pts.size());
  if (m == 1) {
    int lo = 0, hi = 0;
    for (int k = 1; k < n; ++k) {
      if (pts[k][0] < pts[lo][0]) lo = k;
      if (pts[hi][0] < pts[k][0]) hi = k;
    }
    std::vector<int> simplex = prefix;
    simplex.push_back(ids[lo]);
    simplex.push_back(ids[hi]);
    simplices.push_back(std::move(simplex));
    return;
  }
  if (n == m + 1) {
    std::vector<int> simplex = prefix;
    simplex.insert(simplex.end(), ids.begin(), ids.end());
    simplices.push_back(std::move(simplex));
    return;
  }
  int anchor = 0;
  for (int k = 1; k < n; ++k)
    if (lex_compare(pts[k], pts[anchor]) < 0) anchor = k;
  const ScaledPoints s = scale_points(m, pts);
  std::vector<ScaledFacet> facets = FacetSearch(s).run();
  prefix.push_back(ids[anchor]);
  for (const auto& f : facets) {
    if (dot(f.normal, s.pts[anchor]) == f.rhs) continue;  // anchor on facet
    int drop = 0;
    while (f.normal[drop] == 0) ++drop;
    std::vector<RationalVector> sub;
    std::vector<int> sub_ids;
    for (int k = 0; k < n; ++k) {
      if (dot(f.normal, s.pts[k]) != f.rhs) continue;
      RationalVector q(m - 1);
      for (int i = 0, j = 0; i < m; ++i)
        if (i != drop) q[j++] = pts[k][i];
      sub.push_back(std::move(q));
      sub_ids.push_back(ids[k]);
    }
    triangulate_rec(m - 1, sub, sub_ids, simplices, prefix);
  }
  prefix.pop_back();
}

Int int_determinant(IntMatrix m) {
  const int n = static_cast<int>(m.rows());
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

}  // namespace

VRep::VRep(int dim_, std::vector<RationalVector> points)
    : dim(dim_), vertices(std::move(points)) {
  for (const auto& p : vertices)
    if (static_cast<int>(p.size()) != dim)
      throw DomainError("point dimension mismatch");
  std::sort(vertices.begin(), vertices.end(), LexLess{});
  vertices.erase(std::unique(vertices.begin(), vertices.end(),
                             [](const RationalVector& a,
                                const RationalVector& b) {
                               return lex_compare(a, b) == 0;
                             }),
                 vertices.end());
}

bool VRep::contains(const RationalVector& p) const {
  return std::binary_search(vertices.begin(), vertices.end(), p, LexLess{});
}

bool VRep::operator==(const VRep& other) const {
  if (dim != other.dim || vertices.size() != other.vertices.size())
    return false;
  for (std::size_t k = 0; k < vertices.size(); ++k)
    if (lex_compare(vertices[k], other.vertices[k]) != 0) return false;
  return true;
}

std::vector<Facet> hull_facet_list(const VRep& v) {
  return facet_list_raw(v.dim, v.vertices);
}

HRep hull_facets(const VRep& v) {
  HRep h;
  h.dim = v.dim;
  for (auto& f : facet_list_raw(v.dim, v.vertices))
    h.rows.push_back(HalfSpace{std::move(f.normal), std::move(f.rhs)});
  return h;
}

VRep vertex_enumeration(const HRep& h) {
  return vertex_enumeration_impl(h, /*check_bounded=*/true);
}

Rational hull_volume(const VRep& v) {
  const ScaledPoints s = scale_points(v.dim, v.vertices);
  check_hull_capacity(v.dim, s.pts.size());
  if (s.pts.empty() || affine_rank(s) < v.dim)
    throw DimensionError("points do not affinely span the ambient space");
  std::vector<int> ids(v.vertices.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<int>(k);
  std::vector<std::vector<int>> simplices;
  std::vector<int> prefix;
  triangulate_rec(v.dim, v.vertices, ids, simplices, prefix);
  Int total = 0;
  const int d = v.dim;
  IntMatrix edges(d, d);
  for (const auto& simplex : simplices) {
    for (int r = 0; r < d; ++r)
      edges.row(r) =
          (s.pts[simplex[r + 1]] - s.pts[simplex[0]]).transpose();
    Int det = int_determinant(edges);
    total += det < 0 ? Int(-det) : det;
  }
  return Rational(total) / Rational(int_pow(s.scale, d) * factorial(d));
}

std::vector<IntVector> interior_lattice_points(const HRep& h) {
  const VRep v = vertex_enumeration(h);
  if (v.vertices.empty()) return {};
  std::vector<Int> lo(h.dim), hi(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    Rational mn = v.vertices[0][i], mx = v.vertices[0][i];
    for (const auto& p : v.vertices) {
      if (p[i] < mn) mn = p[i];
      if (mx < p[i]) mx = p[i];
    }
    lo[i] = ceil_div(numerator_of(mn), denominator_of(mn));
    hi[i] = floor_div(numerator_of(mx), denominator_of(mx));
  }
  return lattice_points_in_box(h, lo, hi, /*strict=*/true);
}

VRep polar_dual(const HRep& h) {
  std::vector<RationalVector> verts;
  for (const auto& row : h.rows) {
    if (row.rhs <= 0)
      throw DomainError("polar dual requires the origin strictly interior");
    RationalVector p(h.dim);
    for (int i = 0; i < h.dim; ++i) p[i] = Rational(row.normal[i]) / row.rhs;
    verts.push_back(std::move(p));
  }
  return VRep(h.dim, std::move(verts));
}

bool is_reflexive(const VRep& v) { return is_reflexive(v, hull_facets(v)); }

bool is_reflexive(const VRep& v, const HRep& h) {
  for (const auto& p : v.vertices)
    if (!is_lattice_point(p)) return false;
  for (const auto& row : h.rows)
    if (row.rhs <= 0) return false;  // origin on the boundary or outside
  std::vector<Int> lo(v.dim), hi(v.dim);
  for (int i = 0; i < v.dim; ++i) {
    Rational mn = v.vertices[0][i], mx = v.vertices[0][i];
    for (const auto& p : v.vertices) {
      if (p[i] < mn) mn = p[i];
      if (mx < p[i]) mx = p[i];
    }
    lo[i] = numerator_of(mn);
    hi[i] = numerator_of(mx);
  }
  const std::vector<IntVector> inner = lattice_points_in_box(h, lo, hi, true);
  if (inner.size() != 1 || !is_zero_vector(inner[0])) return false;
  const VRep dual = polar_dual(h);
  for (const auto& p : dual.vertices)
    if (!is_lattice_point(p)) return false;
  return true;
}

VRep restrict_to_orthant(const VRep& v, std::uint32_t w) {
  return restrict_to_orthant(v, hull_facets(v), w);
}

VRep restrict_to_orthant(const VRep& v, const HRep& hull, std::uint32_t w) {
  if ((w >> v.dim) != 0)
    throw DomainError("orthant mask has bits outside 1..dim");
  HRep h = hull;
  for (int i = 0; i < v.dim; ++i) {
    IntVector unit = IntVector::Zero(v.dim);
    unit[i] = (w >> i & 1u) ? -1 : 1;
    h.rows.push_back(HalfSpace{std::move(unit), Rational(0)});
  }
  return vertex_enumeration_impl(h, /*check_bounded=*/false);
}

bool is_centrally_symmetric(const VRep& v) {
  for (const auto& p : v.vertices)
    if (!v.contains(RationalVector(-p))) return false;
  return true;
}

VRep extreme_points(const VRep& v) {
  const std::vector<Facet> facets = hull_facet_list(v);
  std::vector<RationalVector> keep;
  std::vector<std::vector<int>> active(v.vertices.size());
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (int k : facets[f].incident_vertices)
      active[k].push_back(static_cast<int>(f));
  for (std::size_t k = 0; k < v.vertices.size(); ++k) {
    Echelon e(v.dim);
    for (int f : active[k]) {
      IntVector r = facets[f].normal;
      const int p = e.reduce(r);
      if (p >= 0) e.push(std::move(r), p);
      if (e.rank() == v.dim) break;
    }
    if (e.rank() == v.dim) keep.push_back(v.vertices[k]);
  }
  return VRep(v.dim, std::move(keep));
}

}  // namespace twinpoly

#include "twinpoly/twinned.hpp"

#include <algorithm>
#include <set>

namespace twinpoly {

namespace {

void require_twin_pair(const Poset& p, const Poset& q) {
  if (p.size() != q.size())
    throw DomainError("the two posets must have equal size");
  if (!p.has_default_labels() || !q.has_default_labels())
    throw DomainError("twinned constructions need posets on labels 1..d");
  if (p.size() < 1) throw DomainError("posets must be nonempty");
}

Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// rho(S): 0/1 indicator of a label mask.
RationalVector indicator(int dim, std::uint32_t mask) {
  RationalVector v = RationalVector::Zero(dim);
  for (int i = 0; i < dim; ++i)
    if (mask >> i & 1u) v[i] = 1;
  return v;
}

// rho'(S): +1 on plus labels, -1 on the complement.
IntVector signed_indicator(int dim, std::uint32_t mask,
                           std::uint32_t plus_mask) {
  IntVector v = IntVector::Zero(dim);
  for (int i = 0; i < dim; ++i)
    if (mask >> i & 1u) v[i] = (plus_mask >> i & 1u) ? 1 : -1;
  return v;
}

}  // namespace

GammaKind gamma_kind_from_string(const std::string& s) {
  if (s == "cc") return GammaKind::CC;
  if (s == "oc") return GammaKind::OC;
  if (s == "oo") return GammaKind::OO;
  throw ParseError("unknown polytope kind '" + s + "' (expected cc|oc|oo)");
}

std::string to_string(GammaKind kind) {
  switch (kind) {
    case GammaKind::CC: return "cc";
    case GammaKind::OC: return "oc";
    case GammaKind::OO: return "oo";
  }
  return "cc";
}

bool FacetNormalSet::contains(const IntVector& a) const {
  return std::binary_search(normals.begin(), normals.end(), a, LexLess{});
}

VRep order_polytope_vertices(const Poset& p) {
  if (!p.has_default_labels())
    throw DomainError("order polytope needs a poset on labels 1..d");
  std::vector<RationalVector> verts;
  for (std::uint32_t ideal : ideals(p).members)
    verts.push_back(indicator(p.size(), ideal));
  return VRep(p.size(), std::move(verts));
}

VRep chain_polytope_vertices(const Poset& p) {
  if (!p.has_default_labels())
    throw DomainError("chain polytope needs a poset on labels 1..d");
  std::vector<RationalVector> verts;
  for (std::uint32_t a : antichains(p).members)
    verts.push_back(indicator(p.size(), a));
  return VRep(p.size(), std::move(verts));
}

VRep signed_chain_vertices(const SignedPoset& sp) {
  const int d = sp.poset.size();
  std::vector<RationalVector> verts;
  for (std::uint32_t a : antichains(sp.poset).members)
    verts.push_back(to_rational(signed_indicator(d, a, sp.plus_mask)));
  return VRep(d, std::move(verts));
}

VRep gamma_vertices(GammaKind kind, const Poset& p, const Poset& q) {
  require_twin_pair(p, q);
  const int d = p.size();
  std::vector<RationalVector> gen;
  if (kind == GammaKind::CC) {
    // every nonempty antichain indicator (and negated Q copy) is a
    // vertex; the origin is interior, so no canonicalization is needed
    for (std::uint32_t a : antichains(p).members)
      if (a != 0) gen.push_back(indicator(d, a));
    for (std::uint32_t a : antichains(q).members)
      if (a != 0) gen.push_back(RationalVector(-indicator(d, a)));
    return VRep(d, std::move(gen));
  }
  // O(P) generators on the plus side; O(Q) or C(Q) negated on the minus
  // side; some generators are not vertices, so canonicalize through the
  // hull pipeline
  for (std::uint32_t s : ideals(p).members) gen.push_back(indicator(d, s));
  const SubsetList right = kind == GammaKind::OO ? ideals(q) : antichains(q);
  for (std::uint32_t s : right.members)
    gen.push_back(RationalVector(-indicator(d, s)));
  return extreme_points(VRep(d, std::move(gen)));
}

std::vector<Int> orthant_extension_counts(const Poset& p, const Poset& q) {
  require_twin_pair(p, q);
  const int d = p.size();
  std::vector<Int> counts(std::size_t(1) << d);
  for (std::uint32_t w = 0; w < (1u << d); ++w)
    counts[w] = count_linear_extensions_signed(delta(p, q, w));
  return counts;
}

Rational volume_formula(const Poset& p, const Poset& q) {
  Int total = 0;
  for (const Int& e : orthant_extension_counts(p, q)) total += e;
  return Rational(total) / Rational(factorial(p.size()));
}

namespace {

void collect_chain_normals(const Poset& p, const Poset& q,
                           std::set<IntVector, LexLess>* normals,
                           std::size_t* total) {
  require_twin_pair(p, q);
  const int d = p.size();
  for (std::uint32_t w = 0; w < (1u << d); ++w) {
    const SignedPoset sp = delta(p, q, w);
    for (std::uint32_t chain : maximal_chains(sp.poset).members) {
      if (total) ++*total;
      if (normals) normals->insert(signed_indicator(d, chain, w));
    }
  }
}

}  // namespace

FacetNormalSet facet_normals(const Poset& p, const Poset& q) {
  std::set<IntVector, LexLess> set;
  collect_chain_normals(p, q, &set, nullptr);
  FacetNormalSet out;
  out.dim = p.size();
  out.normals.assign(set.begin(), set.end());
  return out;
}

std::size_t maximal_chain_total(const Poset& p, const Poset& q) {
  std::size_t total = 0;
  collect_chain_normals(p, q, nullptr, &total);
  return total;
}

VRep dual_vertices(const Poset& p, const Poset& q) {
  const FacetNormalSet set = facet_normals(p, q);
  std::vector<RationalVector> verts;
  verts.reserve(set.normals.size());
  for (const IntVector& a : set.normals) verts.push_back(to_rational(a));
  return VRep(set.dim, std::move(verts));
}

namespace {

bool region_matches(const VRep& gamma, const HRep& hull, const Poset& p,
                    const Poset& q, std::uint32_t w) {
  const int d = gamma.dim;
  const VRep region = restrict_to_orthant(gamma, hull, w);
  const VRep cprime = extreme_points(signed_chain_vertices(delta(p, q, w)));
  if (!(region == cprime)) return false;
  // vertices of Gamma inside the orthant = V(C'(Delta_W)) minus origin
  std::vector<RationalVector> inside;
  for (const auto& v : gamma.vertices) {
    bool in = true;
    for (int i = 0; i < d && in; ++i)
      in = (w >> i & 1u) ? v[i] >= 0 : v[i] <= 0;
    if (in) inside.push_back(v);
  }
  std::vector<RationalVector> expected;
  const RationalVector origin = RationalVector::Zero(d);
  for (const auto& v : cprime.vertices)
    if (lex_compare(v, origin) != 0) expected.push_back(v);
  return VRep(d, std::move(inside)) == VRep(d, std::move(expected));
}

}  // namespace

bool check_region_decomposition(const Poset& p, const Poset& q,
                                std::uint32_t w) {
  require_twin_pair(p, q);
  if ((w >> p.size()) != 0)
    throw DomainError("W contains labels outside 1..d");
  const VRep gamma = gamma_vertices(GammaKind::CC, p, q);
  return region_matches(gamma, hull_facets(gamma), p, q, w);
}

std::vector<bool> region_decomposition_table(const Poset& p, const Poset& q) {
  require_twin_pair(p, q);
  const VRep gamma = gamma_vertices(GammaKind::CC, p, q);
  const HRep hull = hull_facets(gamma);
  std::vector<bool> ok(std::size_t(1) << p.size());
  for (std::uint32_t w = 0; w < ok.size(); ++w)
    ok[w] = region_matches(gamma, hull, p, q, w);
  return ok;
}

bool no_poset_with_k_antichains(int d, std::size_t k) {
  for (const Poset& p : enumerate_posets(d))
    if (antichains(p).size() == k) return false;
  return true;
}

PolytopeReport analyze(GammaKind kind, const Poset& p, const Poset& q) {
  PolytopeReport report;
  report.kind = kind;
  const VRep v = gamma_vertices(kind, p, q);
  const HRep h = hull_facets(v);
  report.volume = hull_volume(v);
  report.facet_count = h.rows.size();
  report.reflexive = is_reflexive(v, h);
  report.centrally_symmetric = is_centrally_symmetric(v);
  if (kind == GammaKind::OO)
    report.common_linear_extension = has_common_linear_extension(p, q);
  return report;
}

}  // namespace twinpoly

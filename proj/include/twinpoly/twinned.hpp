// Twinned chain polytopes Gamma(C(P), -C(Q)) and their order-polytope
// variants: vertex generators, the orthant volume formula
// sum_W e(Delta_W)/d!, the maximal-chain facet normals, the dual vertex
// set, and the per-orthant decomposition certificate checked against
// the geometry oracle.

#pragma once

#include "twinpoly/geometry.hpp"
#include "twinpoly/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twinpoly {

// Which generator sets are twinned: C(P) u -C(Q), O(P) u -C(Q),
// O(P) u -O(Q).
enum class GammaKind { CC, OC, OO };

GammaKind gamma_kind_from_string(const std::string& s);
std::string to_string(GammaKind kind);

// Deduplicated signed chain indicators rho'(C), entries in {-1,0,1};
// one per facet of the CC polytope.
struct FacetNormalSet {
  int dim = 0;
  std::vector<IntVector> normals;  // lex sorted, unique

  std::size_t size() const { return normals.size(); }
  bool contains(const IntVector& a) const;
};

// Indicator vertices rho(I) over all poset ideals.
VRep order_polytope_vertices(const Poset& p);

// Indicator vertices rho(A) over all antichains.
VRep chain_polytope_vertices(const Poset& p);

// Signed indicators rho'(A) over all antichains of the signed poset.
VRep signed_chain_vertices(const SignedPoset& sp);

// Canonical vertex set of the twinned polytope of the given kind.
// CC is written down directly (every nonempty antichain indicator is a
// vertex); OC and OO generators pass through hull canonicalization,
// which bounds them to the geometry kernel range.
VRep gamma_vertices(GammaKind kind, const Poset& p, const Poset& q);

// e(Delta_W(P,Q)) for every W, indexed by the label mask of W.
std::vector<Int> orthant_extension_counts(const Poset& p, const Poset& q);

// vol Gamma(C(P),-C(Q)) = sum over W of e(Delta_W(P,Q)) / d!.
Rational volume_formula(const Poset& p, const Poset& q);

// Union over W of {rho'(C) : C maximal chain of Delta_W(P,Q)}; its
// cardinality is the CC facet count.
FacetNormalSet facet_normals(const Poset& p, const Poset& q);

// Multiset total sum over W of |M(Delta_W(P,Q))| (before collapsing
// chains that repeat across different W).
std::size_t maximal_chain_total(const Poset& p, const Poset& q);

// The facet normal set reread as the dual polytope's vertex list.
VRep dual_vertices(const Poset& p, const Poset& q);

// Oracle check of the orthant decomposition: the restriction of the CC
// polytope to the signed orthant of w must equal the canonical hull of
// the rho'(A) generators of Delta_w, and the CC vertices inside that
// orthant must be exactly those generators minus the origin.
bool check_region_decomposition(const Poset& p, const Poset& q,
                                std::uint32_t w);

// Same check over all 2^d orthants sharing one hull computation;
// entry [w] is the verdict for mask w.
std::vector<bool> region_decomposition_table(const Poset& p, const Poset& q);

// True iff no labeled poset on d elements has exactly k antichains.
bool no_poset_with_k_antichains(int d, std::size_t k);

// Geometry-verified summary of one twinned polytope (hull ranged).
struct PolytopeReport {
  GammaKind kind = GammaKind::CC;
  Rational volume;
  std::size_t facet_count = 0;
  bool reflexive = false;
  bool centrally_symmetric = false;
  std::optional<bool> common_linear_extension;  // recorded for OO
};

PolytopeReport analyze(GammaKind kind, const Poset& p, const Poset& q);

}  // namespace twinpoly

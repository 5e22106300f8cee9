// Exact rational polyhedral kernel: facet enumeration, vertex
// enumeration, triangulation volume, lattice point scan, polar duality.
//
// This is the brute-force oracle the combinatorial formulas are checked
// against, so it favors auditability over asymptotics: facets come from
// one-sided hyperplanes through d affinely independent input points,
// vertices from d-subsets of inequality rows, all in integer/rational
// arithmetic with no floating point.  Intended range is ambient
// dimension <= 6 and at most a few hundred points.

#pragma once

#include "twinpoly/arith.hpp"

#include <cstdint>
#include <vector>

namespace twinpoly {

inline constexpr int kMaxHullDimension = 6;
inline constexpr int kMaxHullPoints = 512;

// Polytope as a finite generator list.  Construction sorts and removes
// duplicates; extreme_points() additionally discards non-vertices.
struct VRep {
  int dim = 0;
  std::vector<RationalVector> vertices;

  VRep() = default;
  VRep(int dim, std::vector<RationalVector> points);

  bool contains(const RationalVector& p) const;  // membership in the list
  bool operator==(const VRep& other) const;
};

// One inequality normal . x <= rhs with primitive integer normal.
struct HalfSpace {
  IntVector normal;
  Rational rhs;

  bool operator==(const HalfSpace& other) const {
    return lex_compare(normal, other.normal) == 0 && rhs == other.rhs;
  }
};

// Irredundant inequality description, rows in canonical order.
struct HRep {
  int dim = 0;
  std::vector<HalfSpace> rows;

  bool operator==(const HRep& other) const {
    return dim == other.dim && rows == other.rows;
  }
};

// Facet with the indices of the VRep vertices lying on it.
struct Facet {
  IntVector normal;
  Rational rhs;
  std::vector<int> incident_vertices;
};

// Exact irredundant H-representation of conv(v).  Requires the points to
// affinely span R^dim (DimensionError otherwise).
HRep hull_facets(const VRep& v);

// Same search, but reports vertex incidences per facet (indices into the
// canonical vertex order of v).
std::vector<Facet> hull_facet_list(const VRep& v);

// All basic feasible points of h: solutions of d independent rows at
// equality that satisfy every row.  Detects unbounded input by a
// recession-direction scan over the normals (UnboundedError).
VRep vertex_enumeration(const HRep& h);

// Exact volume of conv(v) by anchored facet-pyramid triangulation.
Rational hull_volume(const VRep& v);

// Integer points strictly inside h, scanned over the bounding box.
std::vector<IntVector> interior_lattice_points(const HRep& h);

// Dual polytope {x : <x,y> <= 1 for all y}; requires every rhs > 0
// (origin strictly interior).  Vertices are the rhs-scaled normals.
VRep polar_dual(const HRep& h);

// True iff v is integral, the origin is its unique interior lattice
// point, and the polar dual is integral as well.
bool is_reflexive(const VRep& v);

// conv(v) intersected with the signed orthant (x_i >= 0 for labels in w,
// x_j <= 0 otherwise), as a canonical vertex list.
VRep restrict_to_orthant(const VRep& v, std::uint32_t w);

// Hull-sharing overloads for callers that already computed
// hull_facets(v); `hull` must be exactly that.
bool is_reflexive(const VRep& v, const HRep& hull);
VRep restrict_to_orthant(const VRep& v, const HRep& hull, std::uint32_t w);

// True iff the vertex list is closed under negation.
bool is_centrally_symmetric(const VRep& v);

// Discards points that are not vertices of conv(v).
VRep extreme_points(const VRep& v);

}  // namespace twinpoly

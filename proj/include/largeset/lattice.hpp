#pragma once

#include "largeset/incidence.hpp"
#include "largeset/intmat.hpp"
#include "largeset/snf.hpp"

namespace largeset {

// Integer lattice given by the rows of a canonical Hermite-form matrix, so
// two lattices are equal iff their stored bases are equal.  `basis` has
// `rank` rows; full rank means rank == ambient.
struct LatticeBasis {
  IntMat basis;
  std::size_t ambient = 0;

  std::size_t rank() const { return basis.rows(); }
  bool full_rank() const { return rank() == ambient; }
};

LatticeBasis lattice_from_generators(const IntMat& g);

// Lattice spanned by the rows phi(b) of the system.
LatticeBasis lattice_of(const IncidenceSystem& sys);

// v is an integer combination of basis rows (exact rational solve).
bool membership(const LatticeBasis& lat, const RatVec& v);

// Coordinates of v in the basis when v lies in the rational row span;
// throws NotInSpan-ish error (NotFullRank is not involved here).
// Returns false if v is outside the span; coords valid only on true.
bool coordinates_in_basis(const LatticeBasis& lat, const RatVec& v, RatVec& coords);

// |det| of a full-rank basis (upper triangular in Hermite form).
Int lattice_determinant(const LatticeBasis& lat);

// det of the (l-1)-fold product lattice: det(L)^(l-1).
Int product_lattice_determinant(const LatticeBasis& lat, long long l);

// Rows span the dual lattice; pairing of dual x primal rows is integral and
// det(primal) * det(dual) = 1.
RatMat dual_basis(const LatticeBasis& lat);

// Minimal integer c1 >= 1 with (c1/|B|) * sum_b phi(b) in the row lattice:
// the lcm of the denominators of that vector's basis coordinates.
Int divisibility_parameter(const IncidenceSystem& sys);

// (1/l) * sum_b phi(b) lies in the row lattice.  For inclusion systems this
// matches the closed-form divisibility conditions of check_largeset_divisibility.
bool check_main_divisibility(const IncidenceSystem& sys, long long l);

IntMat matrix_of(const IncidenceSystem& sys);

}  // namespace largeset

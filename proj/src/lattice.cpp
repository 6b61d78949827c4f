#include "largeset/lattice.hpp"

#include <cassert>

#include "largeset/errors.hpp"

namespace largeset {

namespace {

// First nonzero column of each basis row (Hermite echelon structure).
std::vector<std::size_t> pivot_columns(const IntMat& basis) {
  std::vector<std::size_t> piv(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (c < basis.cols() && basis.at(i, c) == 0) ++c;
    if (c == basis.cols()) fail(ErrorKind::Internal, "zero row in lattice basis");
    piv[i] = c;
  }
  return piv;
}

}  // namespace

IntMat matrix_of(const IncidenceSystem& sys) {
  IntMat m(sys.num_blocks(), sys.num_tests());
  for (std::size_t b = 0; b < sys.num_blocks(); ++b)
    for (const auto& [a, v] : sys.row_support(b)) m.at(b, a) = v;
  return m;
}

LatticeBasis lattice_from_generators(const IntMat& g) {
  HermiteResult hr = hermite_row_reduce(g);
  LatticeBasis lat;
  lat.ambient = g.cols();
  lat.basis = IntMat(hr.rank, g.cols());
  for (std::size_t i = 0; i < hr.rank; ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) lat.basis.at(i, j) = hr.h.at(i, j);
  return lat;
}

LatticeBasis lattice_of(const IncidenceSystem& sys) {
  return lattice_from_generators(matrix_of(sys));
}

bool coordinates_in_basis(const LatticeBasis& lat, const RatVec& v, RatVec& coords) {
  if (v.size() != lat.ambient)
    fail(ErrorKind::DimensionMismatch, "vector dimension differs from ambient");
  const auto piv = pivot_columns(lat.basis);
  RatVec w = v;
  coords.assign(lat.rank(), Rat(0));
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    const Rat c = w[piv[i]] / Rat(lat.basis.at(i, piv[i]));
    coords[i] = c;
    if (c != 0)
      for (std::size_t j = piv[i]; j < lat.ambient; ++j)
        w[j] -= c * Rat(lat.basis.at(i, j));
  }
  for (const Rat& x : w)
    if (x != 0) return false;
  return true;
}

bool membership(const LatticeBasis& lat, const RatVec& v) {
  RatVec coords;
  if (!coordinates_in_basis(lat, v, coords)) return false;
  for (const Rat& c : coords)
    if (denominator(c) != 1) return false;
  return true;
}

Int lattice_determinant(const LatticeBasis& lat) {
  if (!lat.full_rank())
    fail(ErrorKind::NotFullRank, "lattice rank " + std::to_string(lat.rank()) +
                                     " < ambient " + std::to_string(lat.ambient));
  Int d = 1;
  for (std::size_t i = 0; i < lat.rank(); ++i) d *= lat.basis.at(i, i);
  return d;  // Hermite pivots are positive, so d > 0
}

Int product_lattice_determinant(const LatticeBasis& lat, long long l) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  return int_pow(lattice_determinant(lat), static_cast<unsigned long>(l - 1));
}

RatMat dual_basis(const LatticeBasis& lat) {
  if (!lat.full_rank())
    fail(ErrorKind::NotFullRank, "dual basis requires a full-rank lattice");
  return rat_inverse(RatMat::from_int(lat.basis)).transposed();
}

Int divisibility_parameter(const IncidenceSystem& sys) {
  const LatticeBasis lat = lattice_of(sys);
  if (!lat.full_rank())
    fail(ErrorKind::NotFullRank, "incidence lattice is not full rank");
  const auto& sums = sys.column_sums();
  RatVec target(sums.size());
  const Int nb = static_cast<long long>(sys.num_blocks());
  for (std::size_t a = 0; a < sums.size(); ++a) target[a] = Rat(sums[a], nb);
  RatVec coords;
  if (!coordinates_in_basis(lat, target, coords))
    fail(ErrorKind::Internal, "full-rank basis must span the target");
  Int c1 = 1;
  for (const Rat& c : coords) c1 = int_lcm(c1, denominator(c));
  return c1;
}

bool check_main_divisibility(const IncidenceSystem& sys, long long l) {
  if (l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
  const LatticeBasis lat = lattice_of(sys);
  if (!lat.full_rank())
    fail(ErrorKind::NotFullRank, "incidence lattice is not full rank");
  const auto& sums = sys.column_sums();
  RatVec v(sums.size());
  for (std::size_t a = 0; a < sums.size(); ++a) v[a] = Rat(sums[a], Int(l));
  return membership(lat, v);
}

}  // namespace largeset

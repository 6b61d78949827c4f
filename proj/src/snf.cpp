#include "largeset/snf.hpp"

#include <cassert>
#include <cstdlib>

#include "largeset/errors.hpp"

namespace largeset {

namespace {

// Truncated quotient; the remainder a - q*b satisfies |rem| < |b|, which is
// all the reduction loops need to terminate.
Int tquo(const Int& a, const Int& b) { return a / b; }

}  // namespace

bool SmithDecomposition::verify_against(const IntMat& a) const {
  if (u * a * w != s) return false;
  const Int du = det_bareiss(u), dw = det_bareiss(w);
  if (du != 1 && du != -1) return false;
  if (dw != 1 && dw != -1) return false;
  const std::size_t d = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s.at(i, j) != 0) return false;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    if (s.at(i, i) < 0 || s.at(i + 1, i + 1) < 0) return false;
    if (s.at(i, i) == 0 && s.at(i + 1, i + 1) != 0) return false;
    if (s.at(i, i) != 0 && s.at(i + 1, i + 1) % s.at(i, i) != 0) return false;
  }
  return true;
}

SmithDecomposition smith_normal_form(const IntMat& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition dec{IntMat::identity(m), a, IntMat::identity(n)};
  IntMat& s = dec.s;
  IntMat& u = dec.u;
  IntMat& w = dec.w;

  const std::size_t dmax = std::min(m, n);
  for (std::size_t d = 0; d < dmax; ++d) {
    for (;;) {
      // smallest |entry| != 0 in the trailing submatrix, lowest row then col
      std::size_t pi = m, pj = n;
      for (std::size_t i = d; i < m; ++i)
        for (std::size_t j = d; j < n; ++j) {
          const Int& v = s.at(i, j);
          if (v == 0) continue;
          if (pi == m || abs(v) < abs(s.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) goto done;  // trailing block is zero
      if (pi != d) {
        s.swap_rows(d, pi);
        u.swap_rows(d, pi);
      }
      if (pj != d) {
        s.swap_cols(d, pj);
        w.swap_cols(d, pj);
      }

      bool clean = true;
      for (std::size_t i = d + 1; i < m; ++i) {
        if (s.at(i, d) == 0) continue;
        const Int q = tquo(s.at(i, d), s.at(d, d));
        s.addmul_row(i, d, -q);
        u.addmul_row(i, d, -q);
        if (s.at(i, d) != 0) clean = false;
      }
      for (std::size_t j = d + 1; j < n; ++j) {
        if (s.at(d, j) == 0) continue;
        const Int q = tquo(s.at(d, j), s.at(d, d));
        s.addmul_col(j, d, -q);
        w.addmul_col(j, d, -q);
        if (s.at(d, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller residues surfaced; re-pick pivot

      // force the divisibility chain: drag a bad entry into row d
      std::size_t bi = m;
      for (std::size_t i = d + 1; i < m && bi == m; ++i)
        for (std::size_t j = d + 1; j < n; ++j)
          if (s.at(i, j) % s.at(d, d) != 0) {
            bi = i;
            break;
          }
      if (bi == m) break;
      s.addmul_row(d, bi, 1);
      u.addmul_row(d, bi, 1);
    }
    if (s.at(d, d) < 0) {
      s.negate_row(d);
      u.negate_row(d);
    }
  }
done:
  for (std::size_t d = 0; d < dmax; ++d)
    if (s.at(d, d) < 0) {
      s.negate_row(d);
      u.negate_row(d);
    }
  assert(dec.verify_against(a));
  return dec;
}

namespace {

// Shared Hermite elimination; `t` may be null when the transform is not
// wanted (saves the m x m bookkeeping on large inputs).
std::size_t hermite_core(IntMat& g, IntMat* t) {
  const std::size_t m = g.rows(), n = g.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (g.at(i, c) == 0) continue;
        if (best == m || abs(g.at(i, c)) < abs(g.at(best, c))) best = i;
      }
      if (best == m) break;  // column clear below r
      if (best != r) {
        g.swap_rows(r, best);
        if (t) t->swap_rows(r, best);
      }
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (g.at(i, c) == 0) continue;
        const Int q = g.at(i, c) / g.at(r, c);
        g.addmul_row(i, r, -q);
        if (t) t->addmul_row(i, r, -q);
        if (g.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (g.at(r, c) == 0) continue;
    if (g.at(r, c) < 0) {
      g.negate_row(r);
      if (t) t->negate_row(r);
    }
    // canonical form: entries above the pivot lie in [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(g.at(i, c), g.at(r, c));
      if (q != 0) {
        g.addmul_row(i, r, -q);
        if (t) t->addmul_row(i, r, -q);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

HermiteResult hermite_row_reduce(IntMat g) {
  HermiteResult res;
  res.rank = hermite_core(g, nullptr);
  res.h = std::move(g);
  return res;
}

HermiteTransformResult hermite_row_reduce_with_transform(const IntMat& g) {
  HermiteTransformResult res;
  res.h = g;
  res.t = IntMat::identity(g.rows());
  res.rank = hermite_core(res.h, &res.t);
  assert(res.t * g == res.h);
  return res;
}

}  // namespace largeset

#pragma once
// Smith normal form over Z, with the unimodular transforms tracked.
//
// smith_normal_form(A) produces U, V (and their inverses) with U*A*V = D
// diagonal, the nonzero diagonal entries positive and forming a divisibility
// chain d1 | d2 | ... | dr.  The invariant factors are reported *including*
// any leading 1s; callers that present groups drop them.

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "intmatrix.hpp"

namespace braco {

struct SmithNormalForm {
  IntMatrix d;        // = u * input * v
  IntMatrix u, uinv;  // unimodular row transform and its inverse
  IntMatrix v, vinv;  // unimodular column transform and its inverse
  std::vector<Int> factors;  // positive diagonal entries, divisibility chain

  std::size_t rank() const { return factors.size(); }
};

inline SmithNormalForm smith_normal_form(const IntMatrix& input) {
  const std::size_t nr = input.rows(), nc = input.cols();
  SmithNormalForm s{input,
                    IntMatrix::identity(nr), IntMatrix::identity(nr),
                    IntMatrix::identity(nc), IntMatrix::identity(nc),
                    {}};
  IntMatrix& a = s.d;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    s.u.swap_rows(i, j);
    s.uinv.swap_cols(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    s.v.swap_cols(i, j);
    s.vinv.swap_rows(i, j);
  };
  auto row_add = [&](std::size_t i, std::size_t j, const Int& c) {
    a.add_row_multiple(i, j, c);
    s.u.add_row_multiple(i, j, c);
    s.uinv.add_col_multiple(j, i, -c);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Int& c) {
    a.add_col_multiple(i, j, c);
    s.v.add_col_multiple(i, j, c);
    s.vinv.add_row_multiple(j, i, -c);
  };
  auto row_negate = [&](std::size_t i) {
    a.negate_row(i);
    s.u.negate_row(i);
    s.uinv.negate_col(i);
  };

  /* Diagonalize the block with top-left corner (k0,k0).  Smallest-pivot
   * selection makes the row/column clearing a Euclidean descent. */
  auto diagonalize_from = [&](std::size_t k0) {
    for (std::size_t k = k0; k < nr && k < nc; ++k) {
      std::size_t pi = nr, pj = nc;
      for (std::size_t i = k; i < nr; ++i)
        for (std::size_t j = k; j < nc; ++j) {
          if (a(i, j) == 0) continue;
          if (pi == nr || abs(a(i, j)) < abs(a(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == nr) return;  // remaining block is zero
      row_swap(k, pi);
      col_swap(k, pj);
      bool again = true;
      while (again) {
        again = false;
        for (std::size_t i = k + 1; i < nr; ++i) {
          if (a(i, k) == 0) continue;
          Int q = a(i, k) / a(k, k);
          if (q != 0) row_add(i, k, -q);
          if (a(i, k) != 0) {  // remainder strictly smaller: promote it
            row_swap(k, i);
            again = true;
          }
        }
        for (std::size_t j = k + 1; j < nc; ++j) {
          if (a(k, j) == 0) continue;
          Int q = a(k, j) / a(k, k);
          if (q != 0) col_add(j, k, -q);
          if (a(k, j) != 0) {
            col_swap(k, j);
            again = true;
          }
        }
      }
    }
  };

  diagonalize_from(0);

  std::size_t r = 0;
  while (r < nr && r < nc && a(r, r) != 0) ++r;

  /* Enforce the divisibility chain: a violating pair is merged through one
   * extra row addition followed by re-diagonalization (Euclid leaves
   * gcd(d_i, d_j) in front). */
  for (int guard = 0;; ++guard) {
    if (guard > 4096) throw internal_error("Smith form divisibility pass did not converge");
    bool changed = false;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      if (a(i + 1, i + 1) % a(i, i) != 0) {
        row_add(i, i + 1, 1);
        diagonalize_from(i);
        changed = true;
      }
    }
    if (!changed) break;
  }

  for (std::size_t i = 0; i < r; ++i)
    if (a(i, i) < 0) row_negate(i);

  for (std::size_t i = 0; i < r; ++i) s.factors.push_back(a(i, i));

  /* Paranoia: the transforms must reproduce D and invert each other. */
  if (s.u * input * s.v != s.d || s.u * s.uinv != IntMatrix::identity(nr) ||
      s.v * s.vinv != IntMatrix::identity(nc))
    throw internal_error("Smith form transform bookkeeping failed");
  return s;
}

inline std::size_t rank_of(const IntMatrix& m) { return smith_normal_form(m).rank(); }

/* Quotient of a symmetric form by a subgroup it annihilates.
 *
 * Given lambda (symmetric, n x n) and caps (n x k, columns generating a
 * subgroup K with lambda * caps = 0), the form descends to the free quotient
 * Z^n / sat(K).  With U caps V = D of rank r, the new coordinates y = U x
 * identify sat(K) with the span of the first r coordinates, so the quotient
 * form is the trailing block of U^{-T} lambda U^{-1}. */
inline IntMatrix quotient_form(const IntMatrix& lambda, const IntMatrix& caps) {
  if (!lambda.is_symmetric()) throw internal_error("quotient_form: form is not symmetric");
  if (caps.rows() != lambda.rows()) throw internal_error("quotient_form: shape mismatch");
  if (!(lambda * caps).is_zero())
    throw internal_error("quotient_form: subgroup does not annihilate the form");
  SmithNormalForm s = smith_normal_form(caps);
  IntMatrix m = s.uinv.transposed() * lambda * s.uinv;
  const std::size_t r = s.rank(), n = lambda.rows();
  IntMatrix q(n - r, n - r);
  for (std::size_t i = 0; i < n - r; ++i)
    for (std::size_t j = 0; j < n - r; ++j) q(i, j) = m(r + i, r + j);
  return q;
}

}  // namespace braco

#pragma once
// Inertia (signature) of an integer symmetric bilinear form.
//
// The form is diagonalized by an exact congruence over Q; the signs of the
// resulting diagonal give the inertia triple, which is independent of the
// diagonalization by Sylvester's law.  No floating point is involved.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "intmatrix.hpp"

namespace braco {

struct FormSignature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t nullity = 0;

  long long signature() const {
    return static_cast<long long>(positive) - static_cast<long long>(negative);
  }
  bool operator==(const FormSignature&) const = default;
};

inline FormSignature signature_of_form(const IntMatrix& form) {
  if (!form.is_symmetric()) throw internal_error("signature requested for a non-symmetric form");
  using Rat = boost::multiprecision::cpp_rational;
  const std::size_t n = form.rows();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(form(i, j));

  auto sym_swap = [&](std::size_t i, std::size_t j) {
    std::swap(m[i], m[j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
  };
  auto sym_add = [&](std::size_t i, std::size_t j, const Rat& c) {
    for (std::size_t t = 0; t < n; ++t) m[i][t] += c * m[j][t];
    for (std::size_t r = 0; r < n; ++r) m[r][i] += c * m[r][j];
  };

  FormSignature out;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && m[j][j] == 0) ++j;
      if (j < n) {
        sym_swap(k, j);
      } else {
        for (j = k + 1; j < n && m[k][j] == 0; ++j) {
        }
        if (j < n)
          sym_add(k, j, 1);  // both diagonals were zero, so m[k][k] becomes 2 m[k][j]
        else {
          ++out.nullity;  // row k is zero beyond the eliminated prefix
          continue;
        }
      }
    }
    const Rat pivot = m[k][k];
    if (pivot > 0)
      ++out.positive;
    else
      ++out.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      sym_add(i, k, -m[i][k] / pivot);
    }
  }
  return out;
}

}  // namespace braco

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "jd3/trace.hpp"

namespace jd3::diagrams {

/// #{(n, m, k) >= 0 : 2n + 6m + 4k = L - 9}, the size of the odd slice at L legs.
inline std::uint64_t odd_target_dim(unsigned legs) {
  trace::touch(trace::Op::odd_target_dim);
  if (legs % 2 == 0) throw std::invalid_argument("odd_target_dim: legs must be odd");
  if (legs < 9) return 0;
  const unsigned rest = legs - 9;
  std::uint64_t count = 0;
  for (unsigned m = 0; 6 * m <= rest; ++m)
    for (unsigned k = 0; 6 * m + 4 * k <= rest; ++k) ++count;  // n is then determined
  return count;
}

/// floor((n^2 + 12n) / 48) + 1 for even n.
inline std::uint64_t even_closed_form(unsigned n) {
  trace::touch(trace::Op::even_closed_form);
  if (n % 2 != 0) throw std::invalid_argument("even_closed_form: n must be even");
  const std::uint64_t nn = n;
  return (nn * nn + 12 * nn) / 48 + 1;
}

/// Coefficients of x^shift / ((1-x^2)(1-x^4)(1-x^6)) up to x^max_n, by
/// multiplying truncated geometric series.
inline std::vector<std::uint64_t> hilbert_coefficients(unsigned max_n, unsigned shift = 0) {
  trace::touch(trace::Op::hilbert_coefficients);
  const std::size_t len = static_cast<std::size_t>(max_n) + 1;
  std::vector<std::uint64_t> series(len, 0);
  if (shift <= max_n) series[shift] = 1;
  for (unsigned step : {2U, 4U, 6U}) {
    std::vector<std::uint64_t> geometric(len, 0);
    for (std::size_t i = 0; i < len; i += step) geometric[i] = 1;
    std::vector<std::uint64_t> product(len, 0);
    for (std::size_t i = 0; i < len; ++i)
      if (series[i] != 0)
        for (std::size_t j = 0; i + j < len; ++j) product[i + j] += series[i] * geometric[j];
    series = std::move(product);
  }
  return series;
}

}  // namespace jd3::diagrams

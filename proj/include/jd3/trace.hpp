#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <string_view>
#include <vector>

// Records which library operations have run in this process.  The verifier's
// coverage self-test uses it to prove the suites touch every operation.

namespace jd3::trace {

enum class Op : std::uint8_t {
  // multipoly
  add,
  mul,
  scale,
  substitute,
  act,
  symmetrize,
  elementary_symmetric,
  discriminant,
  p2,
  p3,
  p4,
  q_poly,
  divide_exact,
  degree_slice_monomials,
  // asymptotics
  substitute_regime,
  leading_term,
  verify_q_asymptotics,
  // diagram-spaces
  y_from_x,
  x_from_y,
  tet_slice,
  odd_target_dim,
  psi4_image_slice,
  eq8_span_slice,
  tsq_odd_dim,
  even_closed_form,
  hilbert_coefficients,
  count_
};

inline constexpr std::array<std::string_view, static_cast<std::size_t>(Op::count_)> kOpNames{
    "add",           "mul",          "scale",
    "substitute",    "act",          "symmetrize",
    "elementary_symmetric", "discriminant", "p2",
    "p3",            "p4",           "q_poly",
    "divide_exact",  "degree_slice_monomials", "substitute_regime",
    "leading_term",  "verify_q_asymptotics", "y_from_x",
    "x_from_y",      "tet_slice",    "odd_target_dim",
    "psi4_image_slice", "eq8_span_slice", "tsq_odd_dim",
    "even_closed_form", "hilbert_coefficients"};

inline std::atomic<std::uint64_t>& touched_bits() {
  static std::atomic<std::uint64_t> bits{0};
  return bits;
}

inline void touch(Op op) noexcept {
  touched_bits().fetch_or(std::uint64_t{1} << static_cast<unsigned>(op), std::memory_order_relaxed);
}

inline void reset() noexcept { touched_bits().store(0, std::memory_order_relaxed); }

inline bool touched(Op op) noexcept {
  return (touched_bits().load(std::memory_order_relaxed) >> static_cast<unsigned>(op)) & 1U;
}

inline std::vector<std::string_view> untouched() {
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i < kOpNames.size(); ++i)
    if (!touched(static_cast<Op>(i))) out.push_back(kOpNames[i]);
  return out;
}

}  // namespace jd3::trace

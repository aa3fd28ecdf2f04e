#pragma once

#include <array>
#include <stdexcept>
#include <string_view>

namespace jd3::diagrams {

enum class GraphId { wtr, bbl, mdl, tsq, tet };

/// A trivalent internal graph of a 3-loop Jacobi diagram.  Only tsq and tet
/// have polynomial presentations here; the other three are reduced to them.
struct InternalGraph {
  GraphId id;
  std::string_view name;
  unsigned vertex_count;
  unsigned edge_count;
  unsigned betti;
  bool computable;

  [[nodiscard]] constexpr int euler_number() const noexcept {
    return static_cast<int>(vertex_count) - static_cast<int>(edge_count);
  }
  [[nodiscard]] constexpr std::string_view status() const noexcept {
    return computable ? "polynomial presentation" : "handled by graph reduction";
  }
};

inline constexpr std::array<InternalGraph, 5> kCatalog{{
    {GraphId::wtr, "wtr", 4, 6, 3, false},
    {GraphId::bbl, "bbl", 4, 6, 3, false},
    {GraphId::mdl, "mdl", 4, 6, 3, false},
    {GraphId::tsq, "tsq", 4, 6, 3, true},
    {GraphId::tet, "tet", 4, 6, 3, true},
}};

constexpr const InternalGraph& graph(GraphId id) { return kCatalog[static_cast<std::size_t>(id)]; }

inline const InternalGraph& graph(std::string_view name) {
  for (const auto& g : kCatalog)
    if (g.name == name) return g;
  throw std::invalid_argument("unknown internal graph");
}

enum class Parity { even, odd };

constexpr Parity parity_of(unsigned legs) noexcept { return legs % 2 == 0 ? Parity::even : Parity::odd; }
constexpr std::string_view parity_name(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

/// Legs versus diagram degree: four internal trivalent vertices, and each leg
/// adds one univalent and one trivalent vertex, so degree = legs + 2.
struct DegreeInfo {
  unsigned legs;
  unsigned jacobi_degree;
  Parity parity;

  static constexpr DegreeInfo from_legs(unsigned legs) noexcept { return {legs, legs + 2, parity_of(legs)}; }
};

}  // namespace jd3::diagrams

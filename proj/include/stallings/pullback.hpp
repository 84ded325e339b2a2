#pragma once

#include <cstdint>
#include <vector>

#include "stallings/core_graph.hpp"

namespace stallings {

/// Connected-component analysis of the label-matched product of two core
/// graphs. The product has one vertex per pair (u, h) and an x-edge
/// (u, h) -> (u', h') whenever both factors carry the corresponding x-edge.
/// Components are listed in canonical order (ascending smallest pair id,
/// where the pair (u, h) has id u * |V_H| + h); isolated vertices are kept
/// and contribute Betti number 0.
struct ProductComponents {
  /// Betti number E - V + 1 of every component, in canonical order.
  std::vector<std::uint32_t> betti;
  /// Index into `betti` of the component of (basepoint, basepoint).
  std::size_t basepoint_component = 0;
  /// Component index of every product vertex, in pair-id order.
  std::vector<std::uint32_t> component_of;
};

ProductComponents product_components(const CoreGraph& u, const CoreGraph& h);

/// Core graph of the intersection: the basepoint component of the product,
/// trimmed relative to the basepoint pair.
CoreGraph intersect(const CoreGraph& u, const CoreGraph& h);

/// Betti numbers of all product components in canonical order. Component
/// k corresponds to one double coset UxH, and its Betti number equals
/// rk(U cap x H x^-1) whenever that rank is at least one.
std::vector<std::uint32_t> coset_component_ranks(const CoreGraph& u,
                                                 const CoreGraph& h);

/// Sum over components of max(Betti - 1, 0): the reduced-rank sum
/// of the conjugate intersections over all double cosets.
std::uint64_t strong_inert_sum(const CoreGraph& u, const CoreGraph& h);

/// Certificate for an inequality check: both sides plus the component
/// Betti numbers that produced the sum.
struct InertCertificate {
  bool holds = false;
  std::uint64_t sum = 0;
  std::uint64_t bound = 0;
  std::vector<std::uint32_t> components;
};

/// Checks strong inertness of H against one test subgroup U:
/// sum of brk(U cap xHx^-1) over double cosets <= brk(U).
InertCertificate check_strong_inert(const CoreGraph& u, const CoreGraph& h);

/// Checks the (proved) Hanna Neumann bound: the same sum <= brk(U) * brk(H).
/// A failure would be an implementation bug.
InertCertificate hanna_neumann_check(const CoreGraph& u, const CoreGraph& h);

}  // namespace stallings

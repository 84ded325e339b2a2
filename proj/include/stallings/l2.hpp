#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stallings/core_graph.hpp"
#include "stallings/overgroups.hpp"

namespace stallings {

/// Bundled invariants of a pair (H, F): the L^2-Betti numbers of the
/// augmentation-ideal quotient attached to the pair, the Euler
/// characteristic, and the derived predicates. All of them reduce to graph
/// quantities:
///   beta1 = rk(H) - pi_bar,  beta0 = rk(F) - pi_bar,  chi = rk(F) - rk(H).
struct L2Report {
  std::uint32_t ambient_rank = 0;
  std::uint32_t subgroup_rank = 0;
  std::uint32_t pi_bar = 0;
  std::uint32_t beta0 = 0;
  std::uint32_t beta1 = 0;
  std::int64_t chi = 0;
  bool compressed = false;
  bool strictly_compressed = false;
  bool l2_closed = false;
  std::vector<Word> closure_basis;
};

/// (beta0, beta1) for the pair (H, F) with rk(F) = ambient_rank. The
/// ambient rank must cover every letter occurring in the graph.
std::pair<std::uint32_t, std::uint32_t> betti_pair(
    const CoreGraph& g, std::uint32_t ambient_rank,
    const EnumerationOptions& options = {});

/// True iff no overgroup has smaller rank (pi_bar == rk). This single test
/// simultaneously decides inert, strongly inert, and L^2-independent.
bool is_compressed(const CoreGraph& g, const EnumerationOptions& options = {});

/// True iff every proper overgroup has strictly larger rank; equivalent to
/// the subgroup being its own closure (L^2-closed). Decided by scanning the
/// quotient ranks, independently of the closure computation.
bool is_strictly_compressed(const CoreGraph& g,
                            const EnumerationOptions& options = {});

/// Full report for the pair (H, F).
L2Report analyze(const CoreGraph& g, std::uint32_t ambient_rank,
                 const EnumerationOptions& options = {});

/// Falsification helper for inertness. For a non-compressed subgroup,
/// returns the deterministic witness L* = l2_closure(g): it properly
/// contains H at rank pi_bar < rk(H), so rk(H cap L*) = rk(H) > rk(L*).
/// For a compressed subgroup, checks rk(H cap L) <= rk(L) against `trials`
/// random subgroups (generator words up to max_len) and returns nullopt.
std::optional<CoreGraph> inertness_witness(const CoreGraph& g,
                                           std::uint32_t trials,
                                           std::size_t max_len,
                                           std::uint64_t seed,
                                           const EnumerationOptions& options = {});

}  // namespace stallings

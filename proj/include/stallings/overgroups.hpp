#pragma once

#include <cstddef>
#include <vector>

#include "stallings/core_graph.hpp"

namespace stallings {

struct EnumerationOptions {
  /// Cap on the number of distinct quotient graphs visited. Quotient counts
  /// grow super-exponentially in the vertex count, so runaway inputs fail
  /// with EnumerationLimitError instead of exhausting memory.
  std::size_t max_states = 1'000'000;
};

/// All folded quotients of a core graph, deduplicated by canonical form and
/// sorted by (rank, canonical key). Every member is an overgroup of the
/// input subgroup; the input itself and the bouquet on its occurring
/// letters are always members. The set is finite, which realizes the
/// finiteness of the algebraic-extension family.
struct QuotientSet {
  std::vector<CoreGraph> members;
  std::uint32_t min_rank = 0;
};

/// Breadth-first closure of {g} under "identify one pair of distinct
/// vertices, fold, trim, canonicalize". Throws EnumerationLimitError with
/// the partial count when the state cap is exceeded.
QuotientSet enumerate_quotients(const CoreGraph& g,
                                const EnumerationOptions& options = {});

/// Minimum rank over all overgroups of the subgroup (inside any ambient
/// free group whose alphabet covers the letters of g). Cheaper than a full
/// enumeration when a rank-1 quotient exists: 1 is the floor for a
/// nontrivial subgroup, so the search stops early.
std::uint32_t pi_bar(const CoreGraph& g, const EnumerationOptions& options = {});

/// The overgroups realizing the minimum rank, plus their maximum. The
/// members form a lattice: they are closed under intersection and join,
/// and the closure contains every member.
struct CritSet {
  std::vector<CoreGraph> members;
  CoreGraph closure;
};

/// Quotient members of rank pi_bar together with the unique maximal one.
/// An absent maximum would contradict the lattice property and raises
/// InternalError.
CritSet crit(const CoreGraph& g, const EnumerationOptions& options = {});

/// The maximal minimum-rank overgroup: extensive, idempotent, and of rank
/// pi_bar(g).
CoreGraph l2_closure(const CoreGraph& g, const EnumerationOptions& options = {});

}  // namespace stallings

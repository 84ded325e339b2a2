#pragma once

#include <cstdint>
#include <vector>

#include "stallings/core_graph.hpp"

namespace stallings::verify {

// Independent oracles used by the test and selftest suites. Everything here
// recomputes results along deliberately different code paths from the main
// library (scan-to-fixpoint folding, one-shot set-partition enumeration,
// marked coset automata) so that the two sides can be compared.

/// Scan-to-fixpoint folding: repeatedly look for two same-letter edges
/// sharing a source or a target and identify the other endpoints, until no
/// such pair remains. Quadratic; oracle use only. `vertex_map`, when given,
/// receives the output vertex of every input vertex.
GraphBuilder naive_fold(const GraphBuilder& g,
                        std::vector<std::uint32_t>* vertex_map = nullptr);

/// Basepoint-component restriction plus iterated removal of non-basepoint
/// vertices of degree <= 1, recomputed from scratch each round.
GraphBuilder naive_reach_trim(const GraphBuilder& g);

/// Full naive pipeline ending in a validated core graph.
CoreGraph naive_core(const GraphBuilder& g);

/// Every folded quotient of g, computed by enumerating ALL set partitions
/// of the vertex set, folding each one-shot with naive_fold, and
/// deduplicating. Exponential in the vertex count; keep inputs small.
std::vector<CoreGraph> all_partition_quotients(const CoreGraph& g);

/// All reduced words of length <= max_len, including the empty word.
std::vector<Word> enumerate_reduced_words(Alphabet alphabet,
                                          std::size_t max_len);

/// Decides whether x and y represent the same double coset UxH = UyH.
/// Uses marked coset automata: y lies in UxH iff the cosets Ux and yH
/// intersect, which reduces to a reachability question in the product of
/// the two folded automata. Independent of the component/coset
/// correspondence under test.
bool same_double_coset(const CoreGraph& u, const CoreGraph& h, const Word& x,
                       const Word& y);

/// Ranks rk(U cap x H x^-1), one entry per double coset UxH discovered
/// among conjugators of length <= max_len, restricted to cosets where the
/// rank is at least 1; sorted ascending. With max_len at least
/// (|V_U| - 1) + (|V_H| - 1) every such coset is found.
std::vector<std::uint32_t> conjugator_coset_ranks(const CoreGraph& u,
                                                  const CoreGraph& h,
                                                  std::size_t max_len);

/// Membership oracle bypassing path tracing: w lies in the subgroup iff
/// joining the one-relator subgroup <w> changes nothing.
bool member_via_join(const CoreGraph& g, const Word& w);

}  // namespace stallings::verify

#include "stallings/overgroups.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "stallings/errors.hpp"
#include "stallings/pullback.hpp"

namespace stallings {

namespace {

/// One-pair quotient: identify vertices i and j of g, then fold. The spec
/// of the search: the set of graphs obtainable by iterating this step is
/// exactly the set of folded quotients of g.
CoreGraph identify_and_fold(const CoreGraph& g, std::uint32_t i,
                            std::uint32_t j) {
  GraphBuilder b(g.alphabet(), g.vertex_count());
  auto map = [i, j](std::uint32_t v) { return v == j ? i : v; };
  for (int x = 1; x <= g.alphabet().rank(); ++x) {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      std::uint32_t t = g.out(v, x);
      if (t != kNoVertex) {
        b.add_edge(x, map(v), map(t));
      }
    }
  }
  return fold(b);
}

/// Shared search core. Visits quotients breadth-first; calls `emit` on
/// every new one and stops early when `emit` returns false.
template <typename Emit>
void search_quotients(const CoreGraph& g, const EnumerationOptions& options,
                      Emit&& emit) {
  std::unordered_set<std::string> visited;
  std::deque<CoreGraph> queue;
  visited.insert(g.canonical_key());
  if (!emit(g)) {
    return;
  }
  queue.push_back(g);
  while (!queue.empty()) {
    CoreGraph cur = std::move(queue.front());
    queue.pop_front();
    const std::uint32_t n = cur.vertex_count();
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        CoreGraph child = identify_and_fold(cur, i, j);
        std::string key = child.canonical_key();
        if (visited.contains(key)) {
          continue;
        }
        if (visited.size() >= options.max_states) {
          throw EnumerationLimitError(visited.size(), options.max_states);
        }
        visited.insert(std::move(key));
        if (!emit(child)) {
          return;
        }
        queue.push_back(child);
      }
    }
  }
}

}  // namespace

QuotientSet enumerate_quotients(const CoreGraph& g,
                                const EnumerationOptions& options) {
  QuotientSet result;
  search_quotients(g, options, [&](const CoreGraph& q) {
    result.members.push_back(q);
    return true;
  });
  std::sort(result.members.begin(), result.members.end(),
            [](const CoreGraph& a, const CoreGraph& b) {
              auto ra = a.rank(), rb = b.rank();
              if (ra != rb) {
                return ra < rb;
              }
              return a.canonical_key() < b.canonical_key();
            });
  result.min_rank = result.members.front().rank();
  return result;
}

std::uint32_t pi_bar(const CoreGraph& g, const EnumerationOptions& options) {
  std::uint32_t best = g.rank();
  if (best == 0) {
    return 0;  // trivial subgroup: the only quotient is itself
  }
  search_quotients(g, options, [&](const CoreGraph& q) {
    best = std::min(best, q.rank());
    return best > 1;  // 1 is the floor for a nontrivial subgroup
  });
  return best;
}

CritSet crit(const CoreGraph& g, const EnumerationOptions& options) {
  QuotientSet all = enumerate_quotients(g, options);
  CritSet result{{}, g};
  for (const CoreGraph& q : all.members) {
    if (q.rank() == all.min_rank) {
      result.members.push_back(q);
    }
  }
  // the lattice maximum must exist and equal the iterated join of the
  // members; anything else is a bug, not a property of the input
  CoreGraph top = result.members.front();
  for (std::size_t k = 1; k < result.members.size(); ++k) {
    top = join(top, result.members[k]);
  }
  bool top_is_member = false;
  for (const CoreGraph& q : result.members) {
    if (q == top) {
      top_is_member = true;
    } else if (!contains(top, q)) {
      throw InternalError("critical set has no maximal member");
    }
  }
  if (!top_is_member) {
    throw InternalError("join of critical members left the critical set");
  }
  result.closure = std::move(top);
  return result;
}

CoreGraph l2_closure(const CoreGraph& g, const EnumerationOptions& options) {
  return crit(g, options).closure;
}

}  // namespace stallings

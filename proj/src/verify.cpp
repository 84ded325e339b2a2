#include "stallings/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "stallings/errors.hpp"
#include "stallings/pullback.hpp"

namespace stallings::verify {

namespace {

using Edge = GraphBuilder::Edge;

void relabel(std::vector<Edge>& edges, std::vector<std::uint32_t>& map,
             std::uint32_t keep, std::uint32_t drop) {
  auto fix = [keep, drop](std::uint32_t v) {
    if (v == drop) {
      return keep;
    }
    return v > drop ? v - 1 : v;
  };
  for (Edge& e : edges) {
    e.from = fix(e.from);
    e.to = fix(e.to);
  }
  for (std::uint32_t& v : map) {
    v = fix(v);
  }
}

}  // namespace

GraphBuilder naive_fold(const GraphBuilder& g,
                        std::vector<std::uint32_t>* vertex_map) {
  std::vector<Edge> edges = g.edges;
  std::uint32_t n = g.vertex_count;
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);

  for (;;) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::uint32_t a = kNoVertex;
    std::uint32_t b = kNoVertex;
    for (std::size_t i = 0; i < edges.size() && a == kNoVertex; ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (edges[i].letter != edges[j].letter) {
          continue;
        }
        if (edges[i].from == edges[j].from && edges[i].to != edges[j].to) {
          a = edges[i].to;
          b = edges[j].to;
          break;
        }
        if (edges[i].to == edges[j].to && edges[i].from != edges[j].from) {
          a = edges[i].from;
          b = edges[j].from;
          break;
        }
      }
    }
    if (a == kNoVertex) {
      break;
    }
    relabel(edges, map, std::min(a, b), std::max(a, b));
    --n;
  }

  GraphBuilder out(g.alphabet, n);
  out.edges = std::move(edges);
  if (vertex_map != nullptr) {
    *vertex_map = std::move(map);
  }
  return out;
}

GraphBuilder naive_reach_trim(const GraphBuilder& g) {
  std::vector<Edge> edges = g.edges;
  std::uint32_t n = g.vertex_count;

  // basepoint component
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const Edge& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<char> keep(n, 0);
  std::vector<std::uint32_t> stack = {0};
  keep[0] = 1;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t w : adj[v]) {
      if (!keep[w]) {
        keep[w] = 1;
        stack.push_back(w);
      }
    }
  }

  // iterated degree-1 removal, recomputing degrees each round
  for (;;) {
    std::vector<std::uint32_t> deg(n, 0);
    for (const Edge& e : edges) {
      if (keep[e.from] && keep[e.to]) {
        ++deg[e.from];
        ++deg[e.to];
      }
    }
    std::uint32_t dead = kNoVertex;
    for (std::uint32_t v = 1; v < n; ++v) {
      if (keep[v] && deg[v] <= 1) {
        dead = v;
        break;
      }
    }
    if (dead == kNoVertex) {
      break;
    }
    keep[dead] = 0;
  }

  std::vector<std::uint32_t> id(n, kNoVertex);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (keep[v]) {
      id[v] = next++;
    }
  }
  GraphBuilder out(g.alphabet, next);
  for (const Edge& e : edges) {
    if (keep[e.from] && keep[e.to]) {
      out.add_edge(e.letter, id[e.from], id[e.to]);
    }
  }
  return out;
}

CoreGraph naive_core(const GraphBuilder& g) {
  return adopt_folded(naive_reach_trim(naive_fold(g)));
}

std::vector<CoreGraph> all_partition_quotients(const CoreGraph& g) {
  const std::uint32_t n = g.vertex_count();
  GraphBuilder base = g.to_builder();
  std::set<std::string> seen;
  std::vector<CoreGraph> out;

  // restricted growth strings: assign[v] <= 1 + max(assign[0..v-1]),
  // assign[0] = 0, so the basepoint always lands in block 0
  std::vector<std::uint32_t> assign(n, 0);
  auto emit = [&]() {
    std::uint32_t blocks = *std::max_element(assign.begin(), assign.end()) + 1;
    GraphBuilder b(g.alphabet(), blocks);
    for (const Edge& e : base.edges) {
      b.add_edge(e.letter, assign[e.from], assign[e.to]);
    }
    CoreGraph q = naive_core(b);
    if (seen.insert(q.canonical_key()).second) {
      out.push_back(std::move(q));
    }
  };
  auto rec = [&](auto&& self, std::uint32_t v, std::uint32_t used) -> void {
    if (v == n) {
      emit();
      return;
    }
    for (std::uint32_t b = 0; b <= used; ++b) {
      assign[v] = b;
      self(self, v + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 1, 1);

  std::sort(out.begin(), out.end(), [](const CoreGraph& a, const CoreGraph& b) {
    auto ra = a.rank(), rb = b.rank();
    if (ra != rb) {
      return ra < rb;
    }
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

std::vector<Word> enumerate_reduced_words(Alphabet alphabet,
                                          std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self) -> void {
    out.emplace_back(cur, alphabet);
    if (cur.size() == max_len) {
      return;
    }
    for (int x = 1; x <= alphabet.rank(); ++x) {
      for (int sign : {1, -1}) {
        Letter l{x, sign};
        if (!cur.empty() && l == cur.back().inverse()) {
          continue;
        }
        cur.push_back(l);
        self(self);
        cur.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

namespace {

/// Folded automaton with two marked states whose path language from base to
/// tip is the coset (subgroup of `core`) * (word). Built with naive_fold.
struct MarkedAutomaton {
  GraphBuilder graph;
  std::uint32_t base = 0;
  std::uint32_t tip = 0;

  // folded slot view for deterministic tracing
  std::vector<std::uint32_t> fwd, bwd;

  void index() {
    const int rank = graph.alphabet.rank();
    fwd.assign(static_cast<std::size_t>(graph.vertex_count) * rank, kNoVertex);
    bwd.assign(fwd.size(), kNoVertex);
    for (const Edge& e : graph.edges) {
      fwd[static_cast<std::size_t>(e.from) * rank + e.letter - 1] = e.to;
      bwd[static_cast<std::size_t>(e.to) * rank + e.letter - 1] = e.from;
    }
  }
  std::uint32_t step(std::uint32_t v, Letter l) const {
    const int rank = graph.alphabet.rank();
    std::size_t slot = static_cast<std::size_t>(v) * rank + l.index - 1;
    return l.sign > 0 ? fwd[slot] : bwd[slot];
  }
};

MarkedAutomaton coset_automaton(const CoreGraph& subgroup, const Word& w) {
  GraphBuilder b = subgroup.to_builder();
  std::uint32_t cur = 0;
  for (const Letter& l : w.letters()) {
    std::uint32_t next = b.add_vertex();
    if (l.sign > 0) {
      b.add_edge(l.index, cur, next);
    } else {
      b.add_edge(l.index, next, cur);
    }
    cur = next;
  }
  MarkedAutomaton m;
  std::vector<std::uint32_t> map;
  m.graph = naive_fold(b, &map);
  m.base = map[0];
  m.tip = map[cur];
  m.index();
  return m;
}

}  // namespace

bool same_double_coset(const CoreGraph& u, const CoreGraph& h, const Word& x,
                       const Word& y) {
  // y in UxH  iff  Ux and yH intersect. Words of Ux are the base->tip
  // traces of the Ux automaton; words of yH are the tip->base traces of the
  // H*y^-1 automaton. A common word is a path in the product, so the
  // question is whether (tip1, base2) is reachable from (base1, tip2).
  MarkedAutomaton m1 = coset_automaton(u, x);
  MarkedAutomaton m2 = coset_automaton(h, invert(y));
  const std::uint32_t n2 = m2.graph.vertex_count;
  const std::size_t total =
      static_cast<std::size_t>(m1.graph.vertex_count) * n2;
  std::vector<char> seen(total, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
  auto push = [&](std::uint32_t a, std::uint32_t b) {
    std::size_t id = static_cast<std::size_t>(a) * n2 + b;
    if (!seen[id]) {
      seen[id] = 1;
      stack.push_back({a, b});
    }
  };
  push(m1.base, m2.tip);
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (a == m1.tip && b == m2.base) {
      return true;
    }
    for (int idx = 1; idx <= u.alphabet().rank(); ++idx) {
      for (int sign : {1, -1}) {
        Letter l{idx, sign};
        std::uint32_t a2 = m1.step(a, l);
        std::uint32_t b2 = m2.step(b, l);
        if (a2 != kNoVertex && b2 != kNoVertex) {
          push(a2, b2);
        }
      }
    }
  }
  return false;
}

std::vector<std::uint32_t> conjugator_coset_ranks(const CoreGraph& u,
                                                  const CoreGraph& h,
                                                  std::size_t max_len) {
  if (u.alphabet() != h.alphabet()) {
    throw AlphabetMismatchError("coset oracle requires a common alphabet");
  }
  struct Class {
    Word rep;
    std::uint32_t rank;
  };
  std::vector<Class> classes;
  for (const Word& x : enumerate_reduced_words(u.alphabet(), max_len)) {
    CoreGraph k = intersect(u, conjugate(h, x));
    std::uint32_t r = k.rank();
    if (r == 0) {
      continue;  // reduced rank 0 either way; coset not tracked
    }
    bool found = false;
    for (const Class& c : classes) {
      // equal coset forces equal rank, so mismatched ranks need no test
      if (c.rank == r && same_double_coset(u, h, c.rep, x)) {
        found = true;
        break;
      }
    }
    if (!found) {
      classes.push_back({x, r});
    }
  }
  std::vector<std::uint32_t> ranks;
  ranks.reserve(classes.size());
  for (const Class& c : classes) {
    ranks.push_back(c.rank);
  }
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

bool member_via_join(const CoreGraph& g, const Word& w) {
  std::vector<Word> gens = {w};
  return join(g, from_generators(gens, g.alphabet())) == g;
}

}  // namespace stallings::verify

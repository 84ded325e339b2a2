#include "stallings/core_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>

#include "stallings/errors.hpp"

namespace stallings {

void GraphBuilder::add_edge(int letter, std::uint32_t from, std::uint32_t to) {
  if (letter < 1 || letter > alphabet.rank()) {
    throw RankError("edge letter " + std::to_string(letter) +
                    " out of range for alphabet of rank " +
                    std::to_string(alphabet.rank()));
  }
  if (from >= vertex_count || to >= vertex_count) {
    throw ValidationError("edge endpoint out of range");
  }
  edges.push_back({letter, from, to});
}

void GraphBuilder::add_word_loop(const Word& w, std::uint32_t at) {
  if (at >= vertex_count) {
    throw ValidationError("loop base out of range");
  }
  if (w.empty()) {
    return;
  }
  std::uint32_t cur = at;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w.letters()[i];
    std::uint32_t next = (i + 1 == w.size()) ? at : add_vertex();
    if (l.sign > 0) {
      add_edge(l.index, cur, next);
    } else {
      add_edge(l.index, next, cur);
    }
    cur = next;
  }
}

namespace {

/// Folded adjacency in slot form: fwd[v*rank + (x-1)] is the target of the
/// x-edge leaving v, bwd the source of the x-edge entering v.
struct RawSlots {
  int rank = 1;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> fwd;
  std::vector<std::uint32_t> bwd;

  std::size_t slot(std::uint32_t v, int x) const {
    return static_cast<std::size_t>(v) * rank + (x - 1);
  }
};

/// Union-find folding engine. Edges are inserted into per-class letter
/// slots; a determinism or co-determinism conflict forces the union of the
/// two colliding classes, whose slots are evicted back onto the work queue.
/// Each union strictly reduces the class count, so the queue drains in
/// near-linear time with union by size and path compression.
class FoldMachine {
 public:
  FoldMachine(int rank, std::uint32_t n)
      : rank_(rank),
        parent_(n),
        size_(n, 1),
        out_(static_cast<std::size_t>(n) * rank, kNoVertex),
        in_(static_cast<std::size_t>(n) * rank, kNoVertex) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  void add_edges(std::span<const GraphBuilder::Edge> edges) {
    for (const auto& e : edges) {
      pending_.push_back(e);
    }
    drain();
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Compacts the surviving classes into a folded RawSlots. The class of
  /// the original basepoint becomes vertex 0; the rest follow in order of
  /// their smallest original member. `vertex_map`, when given, receives the
  /// compact id of every original vertex.
  RawSlots finish(std::vector<std::uint32_t>* vertex_map = nullptr) {
    const std::uint32_t n = static_cast<std::uint32_t>(parent_.size());
    std::vector<std::uint32_t> compact(n, kNoVertex);
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      std::uint32_t r = find(v);
      if (compact[r] == kNoVertex) {
        compact[r] = next++;
      }
    }
    RawSlots out;
    out.rank = rank_;
    out.n = next;
    out.fwd.assign(static_cast<std::size_t>(next) * rank_, kNoVertex);
    out.bwd.assign(static_cast<std::size_t>(next) * rank_, kNoVertex);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (find(v) != v) {
        continue;
      }
      for (int x = 1; x <= rank_; ++x) {
        std::uint32_t t = out_[slot(v, x)];
        if (t == kNoVertex) {
          continue;
        }
        std::uint32_t c = compact[v];
        std::uint32_t ct = compact[find(t)];
        out.fwd[out.slot(c, x)] = ct;
        if (out.bwd[out.slot(ct, x)] != kNoVertex) {
          throw InternalError("fold engine produced a co-determinism violation");
        }
        out.bwd[out.slot(ct, x)] = c;
      }
    }
    if (vertex_map != nullptr) {
      vertex_map->assign(n, kNoVertex);
      for (std::uint32_t v = 0; v < n; ++v) {
        (*vertex_map)[v] = compact[find(v)];
      }
    }
    return out;
  }

 private:
  std::size_t slot(std::uint32_t v, int x) const {
    return static_cast<std::size_t>(v) * rank_ + (x - 1);
  }

  void drain() {
    while (!pending_.empty()) {
      GraphBuilder::Edge e = pending_.front();
      pending_.pop_front();
      std::uint32_t u = find(e.from);
      std::uint32_t v = find(e.to);
      std::uint32_t& o = out_[slot(u, e.letter)];
      if (o != kNoVertex) {
        std::uint32_t w = find(o);
        o = w;
        if (w != v) {
          pending_.push_back({e.letter, u, v});
          merge(w, v);
          continue;
        }
        std::uint32_t& i = in_[slot(v, e.letter)];
        if (i == kNoVertex) {
          i = u;
        } else {
          std::uint32_t z = find(i);
          i = z;
          if (z != u) {
            pending_.push_back({e.letter, u, v});
            merge(z, u);
          }
        }
        continue;
      }
      std::uint32_t& i = in_[slot(v, e.letter)];
      if (i != kNoVertex) {
        std::uint32_t z = find(i);
        i = z;
        if (z != u) {
          pending_.push_back({e.letter, u, v});
          merge(z, u);
        } else {
          o = v;
        }
        continue;
      }
      o = v;
      i = u;
    }
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    for (int x = 1; x <= rank_; ++x) {
      std::uint32_t& o = out_[slot(b, x)];
      if (o != kNoVertex) {
        pending_.push_back({x, b, o});
        o = kNoVertex;
      }
      std::uint32_t& i = in_[slot(b, x)];
      if (i != kNoVertex) {
        pending_.push_back({x, i, b});
        i = kNoVertex;
      }
    }
  }

  int rank_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> in_;
  std::deque<GraphBuilder::Edge> pending_;
};

RawSlots fold_engine(const GraphBuilder& g,
                     std::vector<std::uint32_t>* vertex_map = nullptr) {
  FoldMachine machine(g.alphabet.rank(), g.vertex_count);
  machine.add_edges(g.edges);
  return machine.finish(vertex_map);
}

/// Loads an already folded builder into slots; slot collisions mean the
/// builder was not folded.
RawSlots slots_from_folded(const GraphBuilder& g) {
  RawSlots s;
  s.rank = g.alphabet.rank();
  s.n = g.vertex_count;
  s.fwd.assign(static_cast<std::size_t>(s.n) * s.rank, kNoVertex);
  s.bwd.assign(static_cast<std::size_t>(s.n) * s.rank, kNoVertex);
  for (const auto& e : g.edges) {
    if (e.letter < 1 || e.letter > s.rank) {
      throw ValidationError("edge letter out of range");
    }
    if (e.from >= s.n || e.to >= s.n) {
      throw ValidationError("edge endpoint out of range");
    }
    std::uint32_t& o = s.fwd[s.slot(e.from, e.letter)];
    std::uint32_t& i = s.bwd[s.slot(e.to, e.letter)];
    if (o == e.to && i == e.from) {
      continue;  // duplicate edge
    }
    if (o != kNoVertex) {
      throw ValidationError("not folded: two edges with letter " +
                            std::to_string(e.letter) + " leave vertex " +
                            std::to_string(e.from));
    }
    if (i != kNoVertex) {
      throw ValidationError("not folded: two edges with letter " +
                            std::to_string(e.letter) + " enter vertex " +
                            std::to_string(e.to));
    }
    o = e.to;
    i = e.from;
  }
  return s;
}

std::vector<char> basepoint_component(const RawSlots& s) {
  std::vector<char> seen(s.n, 0);
  if (s.n == 0) {
    return seen;
  }
  std::vector<std::uint32_t> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (int x = 1; x <= s.rank; ++x) {
      for (std::uint32_t w : {s.fwd[s.slot(v, x)], s.bwd[s.slot(v, x)]}) {
        if (w != kNoVertex && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return seen;
}

RawSlots compact_alive(const RawSlots& s, const std::vector<char>& alive) {
  std::vector<std::uint32_t> id(s.n, kNoVertex);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < s.n; ++v) {
    if (alive[v]) {
      id[v] = next++;
    }
  }
  RawSlots out;
  out.rank = s.rank;
  out.n = next;
  out.fwd.assign(static_cast<std::size_t>(next) * s.rank, kNoVertex);
  out.bwd.assign(static_cast<std::size_t>(next) * s.rank, kNoVertex);
  for (std::uint32_t v = 0; v < s.n; ++v) {
    if (!alive[v]) {
      continue;
    }
    for (int x = 1; x <= s.rank; ++x) {
      std::uint32_t t = s.fwd[s.slot(v, x)];
      if (t != kNoVertex && alive[t]) {
        out.fwd[out.slot(id[v], x)] = id[t];
        out.bwd[out.slot(id[t], x)] = id[v];
      }
    }
  }
  return out;
}

RawSlots restrict_reachable(const RawSlots& s) {
  return compact_alive(s, basepoint_component(s));
}

/// Iteratively deletes non-basepoint vertices of total degree <= 1.
RawSlots trim_slots(const RawSlots& s) {
  std::vector<std::uint32_t> deg(s.n, 0);
  for (std::uint32_t v = 0; v < s.n; ++v) {
    for (int x = 1; x <= s.rank; ++x) {
      deg[v] += (s.fwd[s.slot(v, x)] != kNoVertex) +
                (s.bwd[s.slot(v, x)] != kNoVertex);
    }
  }
  RawSlots cur = s;
  std::vector<char> alive(s.n, 1);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t v = 1; v < s.n; ++v) {
    if (deg[v] <= 1) {
      queue.push_back(v);
    }
  }
  bool removed = false;
  while (!queue.empty()) {
    std::uint32_t v = queue.back();
    queue.pop_back();
    if (!alive[v] || deg[v] > 1) {
      continue;
    }
    alive[v] = 0;
    removed = true;
    for (int x = 1; x <= s.rank; ++x) {
      std::uint32_t t = cur.fwd[cur.slot(v, x)];
      if (t != kNoVertex) {
        cur.fwd[cur.slot(v, x)] = kNoVertex;
        cur.bwd[cur.slot(t, x)] = kNoVertex;
        if (--deg[t] <= 1 && t != 0 && alive[t]) {
          queue.push_back(t);
        }
      }
      std::uint32_t u = cur.bwd[cur.slot(v, x)];
      if (u != kNoVertex) {
        cur.bwd[cur.slot(v, x)] = kNoVertex;
        cur.fwd[cur.slot(u, x)] = kNoVertex;
        if (--deg[u] <= 1 && u != 0 && alive[u]) {
          queue.push_back(u);
        }
      }
    }
  }
  if (!removed) {
    return s;
  }
  return compact_alive(cur, alive);
}

/// Breadth-first renumbering from the basepoint, exploring letters in the
/// order 1, 1^-1, 2, 2^-1, ...  Determinism of folded graphs makes the
/// resulting numbering unique, so isomorphic based graphs come out
/// identical. Assumes every vertex is reachable.
RawSlots canonical_renumber(const RawSlots& s) {
  std::vector<std::uint32_t> id(s.n, kNoVertex);
  std::vector<std::uint32_t> order;
  order.reserve(s.n);
  id[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::uint32_t v = order[head];
    for (int x = 1; x <= s.rank; ++x) {
      for (std::uint32_t w : {s.fwd[s.slot(v, x)], s.bwd[s.slot(v, x)]}) {
        if (w != kNoVertex && id[w] == kNoVertex) {
          id[w] = static_cast<std::uint32_t>(order.size());
          order.push_back(w);
        }
      }
    }
  }
  if (order.size() != s.n) {
    throw InternalError("canonical renumbering saw an unreachable vertex");
  }
  RawSlots out;
  out.rank = s.rank;
  out.n = s.n;
  out.fwd.assign(s.fwd.size(), kNoVertex);
  out.bwd.assign(s.bwd.size(), kNoVertex);
  for (std::uint32_t v = 0; v < s.n; ++v) {
    for (int x = 1; x <= s.rank; ++x) {
      std::uint32_t t = s.fwd[s.slot(v, x)];
      if (t != kNoVertex) {
        out.fwd[out.slot(id[v], x)] = id[t];
        out.bwd[out.slot(id[t], x)] = id[v];
      }
    }
  }
  return out;
}

GraphBuilder builder_from_slots(const RawSlots& s, Alphabet alphabet) {
  GraphBuilder b(alphabet, s.n);
  for (int x = 1; x <= s.rank; ++x) {
    for (std::uint32_t v = 0; v < s.n; ++v) {
      std::uint32_t t = s.fwd[s.slot(v, x)];
      if (t != kNoVertex) {
        b.add_edge(x, v, t);
      }
    }
  }
  return b;
}

}  // namespace

/// Internal factory bridging RawSlots to the private CoreGraph constructor.
class GraphAssembler {
 public:
  static CoreGraph make(Alphabet alphabet, RawSlots s) {
    s = canonical_renumber(s);
    return CoreGraph(alphabet, s.n, std::move(s.fwd), std::move(s.bwd));
  }
};

CoreGraph::CoreGraph(Alphabet alphabet, std::uint32_t n,
                     std::vector<std::uint32_t> fwd,
                     std::vector<std::uint32_t> bwd)
    : alphabet_(alphabet), n_(n), fwd_(std::move(fwd)), bwd_(std::move(bwd)) {}

CoreGraph CoreGraph::trivial(Alphabet alphabet) {
  return adopt_folded(GraphBuilder(alphabet));
}

CoreGraph CoreGraph::bouquet(Alphabet alphabet) {
  GraphBuilder b(alphabet);
  for (int x = 1; x <= alphabet.rank(); ++x) {
    b.add_edge(x, 0, 0);
  }
  return adopt_folded(b);
}

std::uint32_t CoreGraph::edge_count() const {
  return static_cast<std::uint32_t>(
      std::count_if(fwd_.begin(), fwd_.end(),
                    [](std::uint32_t t) { return t != kNoVertex; }));
}

bool CoreGraph::accepts(const Word& w) const {
  if (w.alphabet() != alphabet_) {
    throw AlphabetMismatchError("word and graph alphabets differ");
  }
  std::uint32_t v = 0;
  for (const Letter& l : w.letters()) {
    v = step(v, l);
    if (v == kNoVertex) {
      return false;
    }
  }
  return v == 0;
}

std::vector<Word> CoreGraph::basis() const {
  // canonical spanning tree: breadth-first in letter order, matching the
  // vertex numbering
  std::vector<std::uint32_t> parent(n_, kNoVertex);
  std::vector<Letter> via(n_, Letter{1, 1});
  std::vector<char> tree_edge(fwd_.size(), 0);  // indexed by positive slot
  std::vector<char> visited(n_, 0);
  visited[0] = 1;
  std::vector<std::uint32_t> order = {0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::uint32_t v = order[head];
    for (int x = 1; x <= alphabet_.rank(); ++x) {
      std::uint32_t w = out(v, x);
      if (w != kNoVertex && !visited[w]) {
        visited[w] = 1;
        parent[w] = v;
        via[w] = {x, 1};
        tree_edge[slot(v, x)] = 1;
        order.push_back(w);
      }
      w = in(v, x);
      if (w != kNoVertex && !visited[w]) {
        visited[w] = 1;
        parent[w] = v;
        via[w] = {x, -1};
        tree_edge[slot(w, x)] = 1;
        order.push_back(w);
      }
    }
  }
  auto path_from_base = [&](std::uint32_t v) {
    std::vector<Letter> ls;
    while (v != 0) {
      ls.push_back(via[v]);
      v = parent[v];
    }
    std::reverse(ls.begin(), ls.end());
    return ls;
  };
  std::vector<Word> result;
  for (int x = 1; x <= alphabet_.rank(); ++x) {
    for (std::uint32_t u = 0; u < n_; ++u) {
      std::uint32_t v = out(u, x);
      if (v == kNoVertex || tree_edge[slot(u, x)]) {
        continue;
      }
      std::vector<Letter> letters = path_from_base(u);
      letters.push_back({x, 1});
      std::vector<Letter> back = path_from_base(v);
      for (auto it = back.rbegin(); it != back.rend(); ++it) {
        letters.push_back(it->inverse());
      }
      result.emplace_back(letters, alphabet_);
    }
  }
  return result;
}

std::optional<std::uint32_t> CoreGraph::finite_index() const {
  for (std::uint32_t v = 0; v < n_; ++v) {
    for (int x = 1; x <= alphabet_.rank(); ++x) {
      if (out(v, x) == kNoVertex) {
        return std::nullopt;
      }
    }
  }
  return n_;
}

std::string CoreGraph::canonical_key() const {
  std::string key = std::to_string(alphabet_.rank()) + "|" +
                    std::to_string(n_);
  for (int x = 1; x <= alphabet_.rank(); ++x) {
    for (std::uint32_t v = 0; v < n_; ++v) {
      std::uint32_t t = out(v, x);
      if (t != kNoVertex) {
        key += "|" + std::to_string(x) + ":" + std::to_string(v) + ">" +
               std::to_string(t);
      }
    }
  }
  return key;
}

GraphBuilder CoreGraph::to_builder() const {
  GraphBuilder b(alphabet_, n_);
  for (int x = 1; x <= alphabet_.rank(); ++x) {
    for (std::uint32_t v = 0; v < n_; ++v) {
      std::uint32_t t = out(v, x);
      if (t != kNoVertex) {
        b.add_edge(x, v, t);
      }
    }
  }
  return b;
}

CoreGraph fold(const GraphBuilder& g) {
  RawSlots s = fold_engine(g);
  s = restrict_reachable(s);
  s = trim_slots(s);
  return GraphAssembler::make(g.alphabet, std::move(s));
}

GraphBuilder fold_partial(const GraphBuilder& g) {
  return builder_from_slots(fold_engine(g), g.alphabet);
}

GraphBuilder trim_partial(const GraphBuilder& g) {
  RawSlots s = slots_from_folded(g);
  s = restrict_reachable(s);
  s = trim_slots(s);
  return builder_from_slots(s, g.alphabet);
}

CoreGraph adopt_folded(const GraphBuilder& g) {
  RawSlots s = slots_from_folded(g);
  std::vector<char> seen = basepoint_component(s);
  for (std::uint32_t v = 0; v < s.n; ++v) {
    if (!seen[v]) {
      throw ValidationError("vertex " + std::to_string(v) +
                            " is unreachable from the basepoint");
    }
  }
  for (std::uint32_t v = 1; v < s.n; ++v) {
    std::uint32_t deg = 0;
    for (int x = 1; x <= s.rank; ++x) {
      deg += (s.fwd[s.slot(v, x)] != kNoVertex) +
             (s.bwd[s.slot(v, x)] != kNoVertex);
    }
    if (deg < 2) {
      throw ValidationError("vertex " + std::to_string(v) +
                            " has degree below two (graph is not trimmed)");
    }
  }
  return GraphAssembler::make(g.alphabet, std::move(s));
}

CoreGraph from_generators(std::span<const Word> generators, Alphabet alphabet) {
  GraphBuilder b(alphabet);
  for (const Word& w : generators) {
    if (w.alphabet() != alphabet) {
      throw AlphabetMismatchError("generator alphabet differs from the target alphabet");
    }
    b.add_word_loop(w);
  }
  return fold(b);
}

CoreGraph join(const CoreGraph& a, const CoreGraph& b) {
  if (a.alphabet() != b.alphabet()) {
    throw AlphabetMismatchError("cannot join graphs over different alphabets");
  }
  GraphBuilder builder = a.to_builder();
  const std::uint32_t offset = builder.vertex_count;
  // wedge: b's basepoint is identified with a's
  for (std::uint32_t v = 1; v < b.vertex_count(); ++v) {
    builder.add_vertex();
  }
  auto map = [offset](std::uint32_t v) { return v == 0 ? 0 : offset + v - 1; };
  for (int x = 1; x <= b.alphabet().rank(); ++x) {
    for (std::uint32_t v = 0; v < b.vertex_count(); ++v) {
      std::uint32_t t = b.out(v, x);
      if (t != kNoVertex) {
        builder.add_edge(x, map(v), map(t));
      }
    }
  }
  return fold(builder);
}

bool contains(const CoreGraph& outer, const CoreGraph& inner) {
  if (outer.alphabet() != inner.alphabet()) {
    throw AlphabetMismatchError("cannot compare graphs over different alphabets");
  }
  if (outer == inner) {
    return true;
  }
  for (const Word& w : inner.basis()) {
    if (!outer.accepts(w)) {
      return false;
    }
  }
  return true;
}

CoreGraph conjugate(const CoreGraph& g, const Word& x) {
  if (g.alphabet() != x.alphabet()) {
    throw AlphabetMismatchError("conjugator alphabet differs from the graph alphabet");
  }
  std::vector<Word> gens;
  for (const Word& b : g.basis()) {
    gens.push_back(concat(concat(x, b), invert(x)));
  }
  return from_generators(gens, g.alphabet());
}

}  // namespace stallings

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stallings/words.hpp"

namespace stallings {

inline constexpr std::uint32_t kNoVertex = 0xffffffffu;

/// Mutable letter-labeled digraph used to assemble graphs before folding.
/// Vertex 0 is the basepoint. An edge u --x--> v simultaneously stands for
/// the inverse edge v --x^-1--> u; only positive letters are stored.
struct GraphBuilder {
  struct Edge {
    int letter;  // 1..rank
    std::uint32_t from;
    std::uint32_t to;

    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  explicit GraphBuilder(Alphabet alphabet, std::uint32_t vertices = 1)
      : alphabet(alphabet), vertex_count(vertices) {}

  Alphabet alphabet;
  std::uint32_t vertex_count;
  std::vector<Edge> edges;

  std::uint32_t add_vertex() { return vertex_count++; }
  void add_edge(int letter, std::uint32_t from, std::uint32_t to);

  /// Attaches a cycle of fresh vertices at `at` spelling the word.
  void add_word_loop(const Word& w, std::uint32_t at = 0);
};

/// Stallings core graph of a finitely generated subgroup: folded, reachable
/// from the basepoint, and trimmed (every non-basepoint vertex has degree at
/// least two). Instances are immutable and always stored in canonical form:
/// vertices are numbered by a breadth-first traversal from the basepoint
/// that explores letters in the order 1, 1^-1, 2, 2^-1, ...  Two core graphs
/// represent the same subgroup exactly when they compare equal.
class CoreGraph {
 public:
  /// Core graph of the trivial subgroup: one vertex, no edges.
  static CoreGraph trivial(Alphabet alphabet);

  /// Bouquet of loops for every alphabet letter (the whole free group).
  static CoreGraph bouquet(Alphabet alphabet);

  Alphabet alphabet() const { return alphabet_; }
  std::uint32_t vertex_count() const { return n_; }
  std::uint32_t edge_count() const;

  /// Target of the x-labeled edge leaving v, or kNoVertex.
  std::uint32_t out(std::uint32_t v, int letter) const {
    return fwd_[slot(v, letter)];
  }
  /// Source of the x-labeled edge entering v, or kNoVertex.
  std::uint32_t in(std::uint32_t v, int letter) const {
    return bwd_[slot(v, letter)];
  }
  /// Follows a signed letter from v (out-edge for +, in-edge for -).
  std::uint32_t step(std::uint32_t v, Letter l) const {
    return l.sign > 0 ? out(v, l.index) : in(v, l.index);
  }

  /// First Betti number E - V + 1; equals the rank of the subgroup.
  std::uint32_t rank() const { return edge_count() - n_ + 1; }
  /// max(rank - 1, 0).
  std::uint32_t reduced_rank() const {
    std::uint32_t r = rank();
    return r > 0 ? r - 1 : 0;
  }

  /// Path-traces w from the basepoint; true iff the trace stays defined and
  /// closes up, i.e. iff w lies in the subgroup.
  bool accepts(const Word& w) const;

  /// Free basis of the subgroup: one word per edge outside the canonical
  /// breadth-first spanning tree, in (letter, source) order. The result has
  /// exactly rank() elements and regenerates this graph.
  std::vector<Word> basis() const;

  /// Vertex count when the graph is a complete automaton (every vertex has
  /// an out-edge for every letter), which happens exactly when the subgroup
  /// has finite index; std::nullopt otherwise.
  std::optional<std::uint32_t> finite_index() const;

  /// Serialized canonical form; usable as an equality and hashing key.
  std::string canonical_key() const;

  /// The graph re-expressed as a builder (for tests and transformations).
  GraphBuilder to_builder() const;

  friend bool operator==(const CoreGraph&, const CoreGraph&) = default;

 private:
  friend class GraphAssembler;

  CoreGraph(Alphabet alphabet, std::uint32_t n, std::vector<std::uint32_t> fwd,
            std::vector<std::uint32_t> bwd);

  std::size_t slot(std::uint32_t v, int letter) const {
    return static_cast<std::size_t>(v) * alphabet_.rank() + (letter - 1);
  }

  Alphabet alphabet_;
  std::uint32_t n_;
  std::vector<std::uint32_t> fwd_;
  std::vector<std::uint32_t> bwd_;
};

/// Folds a builder graph and normalizes the result into a core graph:
/// union-find folding, restriction to the basepoint component, trimming,
/// canonical renumbering.
CoreGraph fold(const GraphBuilder& g);

/// Folding alone, with no reachability restriction, trimming, or canonical
/// renumbering. The output keeps the basepoint at vertex 0 and numbers the
/// surviving vertex classes by their smallest original member.
GraphBuilder fold_partial(const GraphBuilder& g);

/// Reachability restriction plus trimming of an already folded builder.
/// Throws ValidationError if the input is not folded.
GraphBuilder trim_partial(const GraphBuilder& g);

/// Validates that a builder already satisfies every core-graph invariant
/// (folded, reachable, trimmed) and adopts it, renumbering canonically.
/// Unlike fold() this never alters the represented structure; violations
/// raise ValidationError.
CoreGraph adopt_folded(const GraphBuilder& g);

/// Core graph of the subgroup generated by the given words.
CoreGraph from_generators(std::span<const Word> generators, Alphabet alphabet);

/// Core graph of <H union L>: wedge at the basepoints, fold, trim.
CoreGraph join(const CoreGraph& a, const CoreGraph& b);

/// True iff the subgroup of `inner` is contained in the subgroup of `outer`.
bool contains(const CoreGraph& outer, const CoreGraph& inner);

/// Core graph of the conjugate x H x^-1, built from conjugated basis words.
CoreGraph conjugate(const CoreGraph& g, const Word& x);

}  // namespace stallings

#include "stallings/pullback.hpp"

#include <numeric>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

void require_same_alphabet(const CoreGraph& u, const CoreGraph& h) {
  if (u.alphabet() != h.alphabet()) {
    throw AlphabetMismatchError("product requires graphs over the same alphabet");
  }
}

struct Grid {
  std::uint32_t n1, n2;
  std::vector<std::uint32_t> parent;

  std::uint32_t id(std::uint32_t a, std::uint32_t b) const {
    return a * n2 + b;
  }
  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
    }
  }
};

}  // namespace

ProductComponents product_components(const CoreGraph& u, const CoreGraph& h) {
  require_same_alphabet(u, h);
  const std::uint32_t n1 = u.vertex_count();
  const std::uint32_t n2 = h.vertex_count();
  Grid grid{n1, n2, std::vector<std::uint32_t>(static_cast<std::size_t>(n1) * n2)};
  std::iota(grid.parent.begin(), grid.parent.end(), 0u);

  // first pass: union endpoints of every product edge
  const int rank = u.alphabet().rank();
  for (int x = 1; x <= rank; ++x) {
    for (std::uint32_t a = 0; a < n1; ++a) {
      std::uint32_t a2 = u.out(a, x);
      if (a2 == kNoVertex) {
        continue;
      }
      for (std::uint32_t b = 0; b < n2; ++b) {
        std::uint32_t b2 = h.out(b, x);
        if (b2 != kNoVertex) {
          grid.unite(grid.id(a, b), grid.id(a2, b2));
        }
      }
    }
  }

  // second pass: per-component vertex and edge counts
  const std::size_t total = static_cast<std::size_t>(n1) * n2;
  std::vector<std::uint32_t> comp_index(total, kNoVertex);
  std::vector<std::uint32_t> vertices_per;
  std::vector<std::uint32_t> edges_per;
  std::vector<std::uint32_t> component_of(total);
  for (std::uint32_t v = 0; v < total; ++v) {
    std::uint32_t r = grid.find(v);
    if (comp_index[r] == kNoVertex) {
      comp_index[r] = static_cast<std::uint32_t>(vertices_per.size());
      vertices_per.push_back(0);
      edges_per.push_back(0);
    }
    component_of[v] = comp_index[r];
    ++vertices_per[comp_index[r]];
  }
  for (int x = 1; x <= rank; ++x) {
    for (std::uint32_t a = 0; a < n1; ++a) {
      std::uint32_t a2 = u.out(a, x);
      if (a2 == kNoVertex) {
        continue;
      }
      for (std::uint32_t b = 0; b < n2; ++b) {
        if (h.out(b, x) != kNoVertex) {
          ++edges_per[component_of[grid.id(a, b)]];
        }
      }
    }
  }

  ProductComponents out;
  out.betti.resize(vertices_per.size());
  for (std::size_t c = 0; c < vertices_per.size(); ++c) {
    out.betti[c] = edges_per[c] - vertices_per[c] + 1;
  }
  out.basepoint_component = component_of[0];
  out.component_of = std::move(component_of);
  return out;
}

CoreGraph intersect(const CoreGraph& u, const CoreGraph& h) {
  ProductComponents pc = product_components(u, h);
  const std::uint32_t n2 = h.vertex_count();
  const std::uint32_t want = static_cast<std::uint32_t>(pc.basepoint_component);

  // extract the basepoint component as a builder; (0,0) has pair id 0 and
  // must end up as builder vertex 0
  std::vector<std::uint32_t> local(pc.component_of.size(), kNoVertex);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < pc.component_of.size(); ++v) {
    if (pc.component_of[v] == want) {
      local[v] = next++;
    }
  }
  GraphBuilder b(u.alphabet(), next);
  const int rank = u.alphabet().rank();
  for (int x = 1; x <= rank; ++x) {
    for (std::uint32_t a = 0; a < u.vertex_count(); ++a) {
      std::uint32_t a2 = u.out(a, x);
      if (a2 == kNoVertex) {
        continue;
      }
      for (std::uint32_t bb = 0; bb < n2; ++bb) {
        std::uint32_t b2 = h.out(bb, x);
        if (b2 == kNoVertex) {
          continue;
        }
        std::uint32_t from = a * n2 + bb;
        if (pc.component_of[from] == want) {
          b.add_edge(x, local[from], local[a2 * n2 + b2]);
        }
      }
    }
  }
  // the component is folded already; fold() just trims and renumbers
  return fold(b);
}

std::vector<std::uint32_t> coset_component_ranks(const CoreGraph& u,
                                                 const CoreGraph& h) {
  return product_components(u, h).betti;
}

std::uint64_t strong_inert_sum(const CoreGraph& u, const CoreGraph& h) {
  std::uint64_t sum = 0;
  for (std::uint32_t b : product_components(u, h).betti) {
    sum += b > 0 ? b - 1 : 0;
  }
  return sum;
}

InertCertificate check_strong_inert(const CoreGraph& u, const CoreGraph& h) {
  InertCertificate cert;
  cert.components = coset_component_ranks(u, h);
  for (std::uint32_t b : cert.components) {
    cert.sum += b > 0 ? b - 1 : 0;
  }
  cert.bound = u.reduced_rank();
  cert.holds = cert.sum <= cert.bound;
  return cert;
}

InertCertificate hanna_neumann_check(const CoreGraph& u, const CoreGraph& h) {
  InertCertificate cert = check_strong_inert(u, h);
  cert.bound = static_cast<std::uint64_t>(u.reduced_rank()) * h.reduced_rank();
  cert.holds = cert.sum <= cert.bound;
  return cert;
}

}  // namespace stallings

#include "stallings/l2.hpp"

#include <algorithm>

#include "stallings/errors.hpp"
#include "stallings/pullback.hpp"
#include "stallings/random.hpp"

namespace stallings {

namespace {

std::uint32_t max_letter_used(const CoreGraph& g) {
  std::uint32_t top = 0;
  for (int x = 1; x <= g.alphabet().rank(); ++x) {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      if (g.out(v, x) != kNoVertex) {
        top = std::max<std::uint32_t>(top, x);
        break;
      }
    }
  }
  return top;
}

void require_ambient(const CoreGraph& g, std::uint32_t ambient_rank) {
  std::uint32_t used = max_letter_used(g);
  if (ambient_rank < used) {
    throw RankError("ambient rank " + std::to_string(ambient_rank) +
                    " is smaller than the largest letter index " +
                    std::to_string(used) + " used by the subgroup");
  }
  if (ambient_rank < 1 ||
      ambient_rank > static_cast<std::uint32_t>(Alphabet::kMaxRank)) {
    throw RankError("ambient rank out of range");
  }
}

bool strictly_compressed_scan(const QuotientSet& all, const CoreGraph& g) {
  for (const CoreGraph& q : all.members) {
    if (q == g) {
      continue;
    }
    if (q.rank() <= g.rank()) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> betti_pair(
    const CoreGraph& g, std::uint32_t ambient_rank,
    const EnumerationOptions& options) {
  require_ambient(g, ambient_rank);
  std::uint32_t pb = pi_bar(g, options);
  return {ambient_rank - pb, g.rank() - pb};
}

bool is_compressed(const CoreGraph& g, const EnumerationOptions& options) {
  return pi_bar(g, options) == g.rank();
}

bool is_strictly_compressed(const CoreGraph& g,
                            const EnumerationOptions& options) {
  return strictly_compressed_scan(enumerate_quotients(g, options), g);
}

L2Report analyze(const CoreGraph& g, std::uint32_t ambient_rank,
                 const EnumerationOptions& options) {
  require_ambient(g, ambient_rank);
  QuotientSet all = enumerate_quotients(g, options);

  CritSet cs = crit(g, options);
  L2Report report;
  report.ambient_rank = ambient_rank;
  report.subgroup_rank = g.rank();
  report.pi_bar = all.min_rank;
  report.beta0 = ambient_rank - all.min_rank;
  report.beta1 = g.rank() - all.min_rank;
  report.chi = static_cast<std::int64_t>(ambient_rank) -
               static_cast<std::int64_t>(g.rank());
  report.compressed = report.beta1 == 0;
  report.strictly_compressed = strictly_compressed_scan(all, g);
  report.l2_closed = cs.closure == g;
  if (report.l2_closed != report.strictly_compressed) {
    throw InternalError(
        "closure comparison and quotient-rank scan disagree on strict "
        "compression");
  }
  report.closure_basis = cs.closure.basis();
  return report;
}

std::optional<CoreGraph> inertness_witness(const CoreGraph& g,
                                           std::uint32_t trials,
                                           std::size_t max_len,
                                           std::uint64_t seed,
                                           const EnumerationOptions& options) {
  CritSet cs = crit(g, options);
  if (cs.closure.rank() < g.rank()) {
    // not compressed: the closure is a strictly smaller-rank overgroup, so
    // H itself intersects it in rank rk(H) > rk(L*)
    return cs.closure;
  }
  SplitMix64 rng(seed);
  for (std::uint32_t t = 0; t < trials; ++t) {
    CoreGraph probe = random_subgroup(g.alphabet(), rng, 3, max_len);
    CoreGraph meet = intersect(g, probe);
    if (meet.rank() > probe.rank()) {
      throw InternalError(
          "compressed subgroup produced an inertness violation: rk(H cap L) = " +
          std::to_string(meet.rank()) + " > rk(L) = " +
          std::to_string(probe.rank()));
    }
  }
  return std::nullopt;
}

}  // namespace stallings

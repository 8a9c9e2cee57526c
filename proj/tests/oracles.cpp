#include "oracles.hpp"

#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <string>

namespace oracle {

using gpw::bit;
using gpw::SimpleGraph;
using gpw::VertexMask;

bool subset_is_cycle(const SimpleGraph& g, VertexMask s) {
  const auto k = static_cast<std::size_t>(std::popcount(s));
  if (k < 3) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if ((s >> v & 1U) && std::popcount(g.neighbors(v) & s) != 2) return false;
  }
  VertexMask seen = s & (~s + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if ((seen >> v & 1U) && (g.neighbors(v) & s & ~seen)) {
        seen |= g.neighbors(v) & s;
        grew = true;
      }
    }
  }
  return seen == s;
}

std::optional<std::size_t> oracle_hole_size(const SimpleGraph& g, std::size_t min_len) {
  std::optional<std::size_t> best;
  for (VertexMask s = 1; s < (VertexMask{1} << g.size()); ++s) {
    const auto k = static_cast<std::size_t>(std::popcount(s));
    if (k >= min_len && subset_is_cycle(g, s) && (!best || k < *best)) best = k;
  }
  return best;
}

std::uint64_t code_under(const SimpleGraph& g, const std::vector<std::size_t>& perm) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
  }
  return code;
}

std::uint64_t naive_canonical_code(const SimpleGraph& g) {
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, code_under(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SimpleGraph> graph_classes(std::size_t n) {
  std::set<std::uint64_t> classes = {0};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (auto code : classes) {
      const auto base = gpw::graph_from_code(k - 1, code);
      for (VertexMask nb = 0; nb < (VertexMask{1} << (k - 1)); ++nb) {
        auto adj = base.adjacency();
        adj.push_back(nb);
        for (std::size_t v = 0; v + 1 < k; ++v) {
          if (nb >> v & 1U) adj[v] |= bit(k - 1);
        }
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < k; ++v) labels.push_back(std::to_string(v));
        next.insert(naive_canonical_code(SimpleGraph::from_adjacency(labels, adj)));
      }
    }
    classes = std::move(next);
  }
  std::vector<SimpleGraph> out;
  for (auto code : classes) out.push_back(gpw::graph_from_code(n, code));
  return out;
}

}  // namespace oracle

#include "gpw/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace gpw {

namespace {

std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

void check_size(std::size_t n) {
  if (n > SimpleGraph::kMaxVertices) {
    throw std::invalid_argument("graph has more than 64 vertices");
  }
}

}  // namespace

SimpleGraph::SimpleGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), adjacency_(labels_.size(), 0) {
  check_size(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw std::invalid_argument("empty vertex label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) {
        throw std::invalid_argument("duplicate vertex label '" + labels_[i] + "'");
      }
    }
  }
}

SimpleGraph::SimpleGraph(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& edges)
    : SimpleGraph(std::move(labels)) {
  for (const auto& [u, v] : edges) add_edge(index_of(u), index_of(v));
}

SimpleGraph::SimpleGraph(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : SimpleGraph(std::move(labels)) {
  for (const auto& [u, v] : edges) {
    if (u >= size() || v >= size()) throw std::invalid_argument("edge endpoint out of range");
    add_edge(u, v);
  }
}

SimpleGraph SimpleGraph::from_adjacency(std::vector<std::string> labels,
                                        std::vector<VertexMask> adjacency) {
  SimpleGraph g(std::move(labels));
  if (adjacency.size() != g.size()) throw std::invalid_argument("adjacency size mismatch");
  const VertexMask all = g.all_vertices();
  for (std::size_t u = 0; u < g.size(); ++u) {
    if ((adjacency[u] & ~all) != 0 || (adjacency[u] & bit(u)) != 0) {
      throw std::invalid_argument("adjacency mask out of range or has a loop");
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (((adjacency[u] >> v) & 1U) != ((adjacency[v] >> u) & 1U)) {
        throw std::invalid_argument("adjacency is not symmetric");
      }
    }
  }
  g.adjacency_ = std::move(adjacency);
  return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loop at '" + labels_[u] + "'");
  adjacency_[u] |= bit(v);
  adjacency_[v] |= bit(u);
}

std::size_t SimpleGraph::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw std::invalid_argument("unknown vertex '" + std::string(label) + "'");
}

std::optional<std::size_t> SimpleGraph::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

VertexMask SimpleGraph::mask_of(const std::vector<std::string>& labels) const {
  VertexMask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

std::size_t SimpleGraph::degree(std::size_t v) const { return popcount(adjacency_[v]); }

VertexMask SimpleGraph::all_vertices() const {
  return size() == 64 ? ~VertexMask{0} : bit(size()) - 1;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (auto m : adjacency_) total += popcount(m);
  return total / 2;
}

std::vector<std::string> SimpleGraph::labels_of(VertexMask mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(labels_[i]);
  }
  return out;
}

SimpleGraph opposite(const SimpleGraph& g) {
  std::vector<VertexMask> adj(g.size());
  const VertexMask all = g.all_vertices();
  for (std::size_t v = 0; v < g.size(); ++v) adj[v] = all & ~g.neighbors(v) & ~bit(v);
  return SimpleGraph::from_adjacency(g.labels(), std::move(adj));
}

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexMask keep) {
  if ((keep & ~g.all_vertices()) != 0) throw std::invalid_argument("vertex subset out of range");
  std::vector<std::size_t> idx;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if ((keep >> v) & 1U) idx.push_back(v);
  }
  std::vector<std::string> labels;
  std::vector<VertexMask> adj(idx.size(), 0);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    labels.push_back(g.label(idx[i]));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (g.adjacent(idx[i], idx[j])) adj[i] |= bit(j);
    }
  }
  return SimpleGraph::from_adjacency(std::move(labels), std::move(adj));
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<std::string>& keep) {
  return induced_subgraph(g, g.mask_of(keep));
}

VertexMask link_mask(const SimpleGraph& g, std::size_t v) { return g.neighbors(v); }

VertexMask star_mask(const SimpleGraph& g, std::size_t v) { return g.neighbors(v) | bit(v); }

std::vector<std::string> link(const SimpleGraph& g, std::string_view v) {
  return g.labels_of(link_mask(g, g.index_of(v)));
}

std::vector<std::string> star(const SimpleGraph& g, std::string_view v) {
  return g.labels_of(star_mask(g, g.index_of(v)));
}

SimpleGraph contract_edge(const SimpleGraph& g, std::string_view u, std::string_view v) {
  const std::size_t a = g.index_of(u);
  const std::size_t b = g.index_of(v);
  if (!g.adjacent(a, b)) {
    throw std::invalid_argument("{" + std::string(u) + "," + std::string(v) + "} is not an edge");
  }
  const std::size_t keep = std::min(a, b);
  const std::size_t drop = std::max(a, b);
  const std::string merged = std::string(u) + "*" + std::string(v);
  if (g.find(merged)) throw std::invalid_argument("label '" + merged + "' already in use");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == drop) continue;
    labels.push_back(i == keep ? merged : g.label(i));
  }
  auto new_index = [&](std::size_t old) -> std::size_t {
    if (old == drop) old = keep;
    return old < drop ? old : old - 1;
  };
  std::vector<VertexMask> adj(labels.size(), 0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = x + 1; y < g.size(); ++y) {
      if (!g.adjacent(x, y)) continue;
      const std::size_t nx = new_index(x);
      const std::size_t ny = new_index(y);
      if (nx == ny) continue;
      adj[nx] |= bit(ny);
      adj[ny] |= bit(nx);
    }
  }
  return SimpleGraph::from_adjacency(std::move(labels), std::move(adj));
}

SimpleGraph co_contract(const SimpleGraph& g, std::string_view u, std::string_view v) {
  const std::size_t a = g.index_of(u);
  const std::size_t b = g.index_of(v);
  if (a == b || g.adjacent(a, b)) {
    throw std::invalid_argument("{" + std::string(u) + "," + std::string(v) +
                                "} is not an edge of the opposite graph");
  }
  return opposite(contract_edge(opposite(g), u, v));
}

GraphDouble double_along_link(const SimpleGraph& g, std::string_view t_label) {
  const std::size_t t = g.index_of(t_label);
  const VertexMask lk = g.neighbors(t);
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v == t) continue;
    first.push_back(v);
    if (((lk >> v) & 1U) == 0) second.push_back(v);
  }
  check_size(first.size() + second.size());

  GraphDouble out;
  std::vector<std::string> labels;
  // position of each original vertex in the first and second copy
  std::vector<std::size_t> pos1(g.size(), 0);
  std::vector<std::size_t> pos2(g.size(), 0);
  for (auto v : first) {
    pos1[v] = labels.size();
    pos2[v] = labels.size();
    labels.push_back(g.label(v));
    out.retraction.push_back(v);
  }
  for (auto v : second) {
    pos2[v] = labels.size();
    labels.push_back(g.label(v) + "'");
    out.retraction.push_back(v);
  }
  for (const auto& l : labels) {
    if (std::count(labels.begin(), labels.end(), l) > 1) {
      throw std::invalid_argument("primed label '" + l + "' collides with an existing label");
    }
  }
  std::vector<VertexMask> adj(labels.size(), 0);
  auto join = [&](std::size_t x, std::size_t y) {
    adj[x] |= bit(y);
    adj[y] |= bit(x);
  };
  for (auto x : first) {
    for (auto y : first) {
      if (x < y && g.adjacent(x, y)) {
        join(pos1[x], pos1[y]);
        join(pos2[x], pos2[y]);
      }
    }
  }
  out.graph = SimpleGraph::from_adjacency(std::move(labels), std::move(adj));
  return out;
}

namespace {

bool induces_cycle(const SimpleGraph& g, VertexMask set) {
  for (VertexMask m = set; m != 0; m &= m - 1) {
    if (popcount(g.neighbors(lowest(m)) & set) != 2) return false;
  }
  // 2-regular: connected iff a walk from the least vertex covers the set
  const std::size_t start = lowest(set);
  std::size_t prev = start;
  std::size_t cur = lowest(g.neighbors(start) & set);
  std::size_t count = 1;
  while (cur != start) {
    const VertexMask next = g.neighbors(cur) & set & ~bit(prev);
    prev = cur;
    cur = lowest(next);
    ++count;
  }
  return count == popcount(set);
}

std::vector<std::size_t> cycle_order(const SimpleGraph& g, VertexMask set) {
  std::vector<std::size_t> out;
  const std::size_t start = lowest(set);
  std::size_t prev = start;
  std::size_t cur = lowest(g.neighbors(start) & set);
  out.push_back(start);
  while (cur != start) {
    out.push_back(cur);
    const VertexMask next = g.neighbors(cur) & set & ~bit(prev);
    prev = cur;
    cur = lowest(next);
  }
  return out;
}

// Combinations of `k` vertices in lexicographic index order, pruned when a
// chosen vertex already has three chosen neighbours.
bool search_cycle(const SimpleGraph& g, std::size_t k, std::size_t from, VertexMask chosen,
                  std::size_t depth, VertexMask& found) {
  if (depth == k) {
    if (induces_cycle(g, chosen)) {
      found = chosen;
      return true;
    }
    return false;
  }
  for (std::size_t v = from; v + (k - depth) <= g.size(); ++v) {
    const VertexMask next = chosen | bit(v);
    if (popcount(g.neighbors(v) & chosen) > 2) continue;
    bool ok = true;
    for (VertexMask m = g.neighbors(v) & chosen; m != 0; m &= m - 1) {
      if (popcount(g.neighbors(lowest(m)) & next) > 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (search_cycle(g, k, v + 1, next, depth + 1, found)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_hole(const SimpleGraph& g, std::size_t min_len) {
  if (min_len < 4) throw std::invalid_argument("find_hole: min_len must be at least 4");
  for (std::size_t k = min_len; k <= g.size(); ++k) {
    VertexMask found = 0;
    if (search_cycle(g, k, 0, 0, 0, found)) return cycle_order(g, found);
  }
  return std::nullopt;
}

WeakChordality weak_chordality(const SimpleGraph& g) {
  if (auto hole = find_hole(g, 5)) {
    return {false, CycleWitness{CycleKind::kHole, std::move(*hole)}};
  }
  if (auto anti = find_hole(opposite(g), 5)) {
    return {false, CycleWitness{CycleKind::kAntihole, std::move(*anti)}};
  }
  return {};
}

bool is_weakly_chordal(const SimpleGraph& g) { return weak_chordality(g).weakly_chordal; }

bool is_chordal(const SimpleGraph& g) { return !find_hole(g, 4).has_value(); }

bool is_complete(const SimpleGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) + 1 != g.size()) return false;
  }
  return true;
}

std::vector<VertexMask> components(const SimpleGraph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask left = within;
  while (left != 0) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask grow = 0;
      for (VertexMask m = frontier; m != 0; m &= m - 1) grow |= g.neighbors(lowest(m));
      grow &= within & ~comp;
      comp |= grow;
      frontier = grow;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return components(g, g.all_vertices()).size() <= 1; }

bool is_induced_cycle(const SimpleGraph& g, const std::vector<std::size_t>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  VertexMask set = 0;
  for (auto v : cycle) {
    if (v >= g.size() || ((set >> v) & 1U)) return false;
    set |= bit(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const VertexMask expected = bit(cycle[(i + 1) % k]) | bit(cycle[(i + k - 1) % k]);
    if ((g.neighbors(cycle[i]) & set) != expected) return false;
  }
  return true;
}

namespace {

bool next_clique(const SimpleGraph& g, std::size_t k, std::size_t from, VertexMask chosen,
                 std::size_t depth, const std::function<bool(VertexMask)>& visit) {
  if (depth == k) return visit(chosen);
  for (std::size_t v = from; v + (k - depth) <= g.size(); ++v) {
    if ((g.neighbors(v) & chosen) != chosen) continue;
    if (next_clique(g, k, v + 1, chosen | bit(v), depth + 1, visit)) return true;
  }
  return false;
}

}  // namespace

std::optional<Separation> complete_separator(const SimpleGraph& g) {
  if (is_complete(g)) return std::nullopt;
  if (!is_chordal(g)) throw std::invalid_argument("complete_separator expects a chordal graph");
  const VertexMask all = g.all_vertices();
  std::optional<Separation> result;
  for (std::size_t k = 0; k < g.size() && !result; ++k) {
    next_clique(g, k, 0, 0, 0, [&](VertexMask sep) {
      auto comps = components(g, all & ~sep);
      if (comps.size() < 2) return false;
      const VertexMask a = comps.front();
      Separation s;
      s.first_mask = a | sep;
      s.second_mask = all & ~a;
      s.separator_mask = sep;
      s.first = induced_subgraph(g, s.first_mask);
      s.second = induced_subgraph(g, s.second_mask);
      s.separator = induced_subgraph(g, sep);
      result = std::move(s);
      return true;
    });
  }
  return result;
}

namespace {

// Colour refinement: repeatedly rank vertices by (own colour, sorted
// multiset of neighbour colours) until the partition stops splitting.
std::vector<std::size_t> refine_colours(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (VertexMask m = g.neighbors(v); m != 0; m &= m - 1) {
        sig[v].second.push_back(colour[lowest(m)]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v) {
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return colour;
}

constexpr std::size_t kMaxCodeVertices = 11;

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Bit position (from the most significant end) of pair (i, j), i < j, in
// graph6 column order.
std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

// Branch-and-bound over vertex orders compatible with the colour classes.
// Places positions left to right; after placing position j the column j
// of the code is fixed and compared against the best so far.
class CodeMinimizer {
 public:
  CodeMinimizer(const SimpleGraph& g, std::vector<std::size_t> colour)
      : g_(g), colour_(std::move(colour)), n_(g.size()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return colour_[a] < colour_[b]; });
    slot_colour_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) slot_colour_[p] = colour_[order_[p]];
  }

  // Least code and an order achieving it.
  std::pair<std::uint64_t, std::vector<std::size_t>> minimize() {
    best_ = ~std::uint64_t{0};
    have_best_ = false;
    perm_.assign(n_, 0);
    recurse(0, 0, 0);
    return {best_, best_perm_};
  }

  // True when no compatible order beats `code`, which must itself come
  // from a compatible order.
  bool is_minimal(std::uint64_t code) {
    best_ = code;
    have_best_ = true;
    beaten_ = false;
    stop_on_beat_ = true;
    perm_.assign(n_, 0);
    recurse(0, 0, 0);
    return !beaten_;
  }

 private:
  void recurse(std::size_t pos, VertexMask used, std::uint64_t prefix) {
    if (beaten_) return;
    const std::size_t total = pair_count(n_);
    if (pos == n_) {
      if (!have_best_ || prefix < best_) {
        if (stop_on_beat_) {
          beaten_ = true;
          return;
        }
        best_ = prefix;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      if (colour_[v] != slot_colour_[pos]) continue;
      std::uint64_t code = prefix;
      for (std::size_t i = 0; i < pos; ++i) {
        if (g_.adjacent(perm_[i], v)) code |= std::uint64_t{1} << (total - 1 - pair_index(i, pos));
      }
      if (have_best_) {
        // compare the fixed leading bits
        const std::size_t fixed = pair_count(pos + 1);
        const std::size_t shift = total - fixed;
        const std::uint64_t head = fixed == 0 ? 0 : code >> shift;
        const std::uint64_t best_head = fixed == 0 ? 0 : best_ >> shift;
        if (head > best_head) continue;
        if (head < best_head && stop_on_beat_) {
          beaten_ = true;
          return;
        }
      }
      perm_[pos] = v;
      recurse(pos + 1, used | bit(v), code);
      if (beaten_) return;
    }
  }

  const SimpleGraph& g_;
  std::vector<std::size_t> colour_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> slot_colour_;
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> best_perm_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
  bool beaten_ = false;
  bool stop_on_beat_ = false;
};

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

std::uint64_t adjacency_code(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n > kMaxCodeVertices) throw std::invalid_argument("adjacency_code: more than 11 vertices");
  const std::size_t total = pair_count(n);
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) code |= std::uint64_t{1} << (total - 1 - pair_index(i, j));
    }
  }
  return code;
}

SimpleGraph graph_from_code(std::size_t n, std::uint64_t code) {
  if (n > kMaxCodeVertices) throw std::invalid_argument("graph_from_code: more than 11 vertices");
  const std::size_t total = pair_count(n);
  std::vector<VertexMask> adj(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((code >> (total - 1 - pair_index(i, j))) & 1U) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  }
  return SimpleGraph::from_adjacency(numeric_labels(n), std::move(adj));
}

SimpleGraph canonical_form(const SimpleGraph& g) {
  if (g.size() > kMaxCodeVertices) throw std::invalid_argument("canonical_form: more than 11 vertices");
  CodeMinimizer minimizer(g, refine_colours(g));
  auto [code, perm] = minimizer.minimize();
  return graph_from_code(g.size(), g.size() == 0 ? 0 : code);
}

GraphEnumerator::GraphEnumerator(std::size_t n) : n_(n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_graphs: n must be in 1..7");
  end_code_ = std::uint64_t{1} << pair_count(n);
}

std::optional<SimpleGraph> GraphEnumerator::next() {
  const std::size_t n = n_;
  while (next_code_ < end_code_) {
    const std::uint64_t code = next_code_++;
    // quick reject: colour classes (which refine degree) must be
    // non-decreasing along the stored order
    SimpleGraph g = graph_from_code(n, code);
    bool sorted = true;
    for (std::size_t v = 1; v < n && sorted; ++v) sorted = g.degree(v - 1) <= g.degree(v);
    if (!sorted) continue;
    auto colour = refine_colours(g);
    if (!std::is_sorted(colour.begin(), colour.end())) continue;
    CodeMinimizer minimizer(g, std::move(colour));
    if (minimizer.is_minimal(code)) return g;
  }
  return std::nullopt;
}

std::vector<SimpleGraph> enumerate_graphs(std::size_t n) {
  GraphEnumerator it(n);
  std::vector<SimpleGraph> out;
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

namespace {

// Vertex invariant used to prune isomorphism and subgraph search.
struct Profile {
  std::size_t degree;
  std::vector<std::size_t> neighbour_degrees;
  friend bool operator==(const Profile&, const Profile&) = default;
};

std::vector<Profile> profiles(const SimpleGraph& g) {
  std::vector<Profile> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    out[v].degree = g.degree(v);
    for (VertexMask m = g.neighbors(v); m != 0; m &= m - 1) {
      out[v].neighbour_degrees.push_back(g.degree(lowest(m)));
    }
    std::sort(out[v].neighbour_degrees.begin(), out[v].neighbour_degrees.end());
  }
  return out;
}

// Search order: repeatedly take the unplaced vertex with most placed
// neighbours (ties: higher degree, then lower index).
std::vector<std::size_t> search_order(const SimpleGraph& g) {
  std::vector<std::size_t> order;
  VertexMask placed = 0;
  for (std::size_t step = 0; step < g.size(); ++step) {
    std::size_t best = g.size();
    std::pair<std::size_t, std::size_t> best_key{0, 0};
    for (std::size_t v = 0; v < g.size(); ++v) {
      if ((placed >> v) & 1U) continue;
      std::pair<std::size_t, std::size_t> key{popcount(g.neighbors(v) & placed), g.degree(v)};
      if (best == g.size() || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

bool extend_map(const SimpleGraph& pattern, const SimpleGraph& g,
                const std::vector<std::size_t>& order, std::size_t depth,
                std::vector<std::size_t>& map, VertexMask used,
                const std::function<bool(std::size_t, std::size_t)>& compatible) {
  if (depth == order.size()) return true;
  const std::size_t p = order[depth];
  for (std::size_t v = 0; v < g.size(); ++v) {
    if ((used >> v) & 1U) continue;
    if (!compatible(p, v)) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const std::size_t q = order[d];
      ok = pattern.adjacent(p, q) == g.adjacent(v, map[q]);
    }
    if (!ok) continue;
    map[p] = v;
    if (extend_map(pattern, g, order, depth + 1, map, used | bit(v), compatible)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto pg = profiles(g);
  auto ph = profiles(h);
  {
    auto sg = pg;
    auto sh = ph;
    auto less = [](const Profile& a, const Profile& b) {
      return std::tie(a.degree, a.neighbour_degrees) < std::tie(b.degree, b.neighbour_degrees);
    };
    std::sort(sg.begin(), sg.end(), less);
    std::sort(sh.begin(), sh.end(), less);
    if (!(sg == sh)) return std::nullopt;
  }
  std::vector<std::size_t> map(g.size(), 0);
  auto compatible = [&](std::size_t p, std::size_t v) { return pg[p] == ph[v]; };
  if (extend_map(g, h, search_order(g), 0, map, 0, compatible)) return map;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> has_induced(const SimpleGraph& g, const SimpleGraph& pattern) {
  if (pattern.size() > g.size()) return std::nullopt;
  std::vector<std::size_t> map(pattern.size(), 0);
  auto compatible = [&](std::size_t p, std::size_t v) { return g.degree(v) >= pattern.degree(p); };
  if (extend_map(pattern, g, search_order(pattern), 0, map, 0, compatible)) return map;
  return std::nullopt;
}

}  // namespace gpw

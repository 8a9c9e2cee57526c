#include "gpw/complexes.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gpw/io.hpp"

namespace gpw {

namespace {

std::size_t popcount(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }

// Every clique of g (including the empty one), in increasing mask order
// within each size.
std::vector<VertexMask> all_cliques(const SimpleGraph& g) {
  std::vector<VertexMask> out = {0};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const VertexMask c = out[i];
    const std::size_t from = c == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(c));
    VertexMask common = g.all_vertices();
    for (VertexMask r = c; r; r &= r - 1) common &= g.neighbors(static_cast<std::size_t>(std::countr_zero(r)));
    for (std::size_t v = from; v < g.size(); ++v) {
      if (common >> v & 1U) out.push_back(c | bit(v));
    }
  }
  return out;
}

bool can_step(const CoordRange& r, long long x, bool positive) {
  if (r.cyclic) return true;
  return positive ? x < r.hi : x > r.lo;
}

std::string sign_label(const SimpleGraph& g, SignedDirection d) {
  return g.label(d.vertex) + (d.positive ? "+" : "-");
}

// Adds the faces of one cube to the set.
void add_faces(const AbstractCube& cube, std::set<AbstractCube>& out) {
  const std::size_t k = cube.axes.size();
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
    const std::uint64_t fixed_axes = ((std::uint64_t{1} << k) - 1) & ~sub;
    // enumerate assignments of the fixed axes
    for (std::uint64_t fixed = fixed_axes;; fixed = (fixed - 1) & fixed_axes) {
      AbstractCube face;
      for (std::size_t i = 0; i < k; ++i) {
        if (sub >> i & 1U) face.axes.push_back(cube.axes[i]);
      }
      const std::size_t fk = face.axes.size();
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << fk); ++t) {
        std::uint64_t c = fixed;
        std::size_t j = 0;
        for (std::size_t i = 0; i < k; ++i) {
          if (sub >> i & 1U) {
            if (t >> j & 1U) c |= std::uint64_t{1} << i;
            ++j;
          }
        }
        face.corners.push_back(cube.corners[c]);
      }
      out.insert(std::move(face));
      if (fixed == 0) break;
    }
  }
}

}  // namespace

CubeComplex CubeComplex::lattice(SpecPtr spec, Box box) {
  if (box.size() != spec->size()) throw std::invalid_argument("box needs one range per vertex");
  for (const auto& r : box) {
    if (r.cyclic) {
      if (r.cyclic < 3) throw std::invalid_argument("cyclic coordinates need size at least 3");
      if (r.lo != 0 || r.hi != static_cast<long long>(r.cyclic) - 1) throw std::invalid_argument("cyclic range must be 0..q-1");
    } else if (r.hi < r.lo) {
      throw std::invalid_argument("empty coordinate range");
    }
  }
  CubeComplex x;
  x.spec_ = std::move(spec);
  x.lattice_ = true;
  x.box_ = std::move(box);
  return x;
}

CubeComplex CubeComplex::explicit_cells(SpecPtr spec, std::size_t vertex_count, std::vector<AbstractCube> cubes,
                                        std::vector<std::string> vertex_names) {
  std::set<AbstractCube> closed;
  for (const auto& c : cubes) {
    if (c.axes.size() > 20) throw std::invalid_argument("cube dimension too large");
    if (c.corners.size() != (std::size_t{1} << c.axes.size())) throw std::invalid_argument("cube needs 2^k corners");
    for (auto v : c.corners) {
      if (v >= vertex_count) throw std::invalid_argument("cube corner out of range");
    }
    for (std::size_t i = 0; i < c.axes.size(); ++i) {
      if (c.axes[i] >= spec->size()) throw std::invalid_argument("cube direction out of range");
      for (std::size_t j = 0; j < i; ++j) {
        if (c.axes[i] == c.axes[j]) throw std::invalid_argument("repeated cube direction");
      }
    }
    add_faces(c, closed);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) closed.insert(AbstractCube{{v}, {}});
  CubeComplex x;
  x.spec_ = std::move(spec);
  x.explicit_vertices_ = vertex_count;
  x.cubes_.assign(closed.begin(), closed.end());
  x.names_ = std::move(vertex_names);
  return x;
}

CubeComplex CubeComplex::from_lattice_cubes(SpecPtr spec, const std::vector<std::pair<Point, VertexMask>>& cubes) {
  // vertices are numbered in point order, independent of the input order
  std::set<Point> all_points;
  for (const auto& [base, dirs] : cubes) {
    if (base.size() != spec->size()) throw std::invalid_argument("cube base point has the wrong dimension");
    if ((dirs & ~spec->graph().all_vertices()) != 0) throw std::invalid_argument("cube direction out of range");
    std::vector<std::size_t> axes;
    for (VertexMask r = dirs; r; r &= r - 1) axes.push_back(static_cast<std::size_t>(std::countr_zero(r)));
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << axes.size()); ++c) {
      Point p = base;
      for (std::size_t i = 0; i < axes.size(); ++i) {
        if (c >> i & 1U) ++p[axes[i]];
      }
      all_points.insert(p);
    }
  }
  std::map<Point, std::size_t> ids;
  std::vector<Point> points(all_points.begin(), all_points.end());
  for (std::size_t i = 0; i < points.size(); ++i) ids.emplace(points[i], i);
  std::vector<AbstractCube> abstract;
  for (const auto& [base, dirs] : cubes) {
    AbstractCube cube;
    for (VertexMask r = dirs; r; r &= r - 1) cube.axes.push_back(static_cast<std::size_t>(std::countr_zero(r)));
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << cube.axes.size()); ++c) {
      Point p = base;
      for (std::size_t i = 0; i < cube.axes.size(); ++i) {
        if (c >> i & 1U) ++p[cube.axes[i]];
      }
      cube.corners.push_back(ids.at(p));
    }
    abstract.push_back(std::move(cube));
  }
  std::vector<std::string> names;
  for (const auto& p : points) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    names.push_back(s + ")");
  }
  return explicit_cells(std::move(spec), points.size(), std::move(abstract), std::move(names));
}

Count CubeComplex::vertex_count() const {
  if (!lattice_) return Count(explicit_vertices_);
  Count total = 1;
  for (const auto& r : box_) total *= r.values();
  return total;
}

std::size_t CubeComplex::vertex_count_small() const {
  const Count c = vertex_count();
  if (c > 50'000'000) throw std::length_error("complex has too many vertices to visit");
  return c.convert_to<std::size_t>();
}

Point CubeComplex::point_of(std::size_t v) const {
  if (!lattice_) throw std::logic_error("point_of on an explicit complex");
  Point p(box_.size());
  for (std::size_t i = box_.size(); i > 0; --i) {
    const auto& r = box_[i - 1];
    p[i - 1] = r.lo + static_cast<long long>(v % r.values());
    v /= r.values();
  }
  return p;
}

bool CubeComplex::contains_point(const Point& p) const {
  if (!lattice_ || p.size() != box_.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < box_[i].lo || p[i] > box_[i].hi) return false;
  }
  return true;
}

std::optional<std::size_t> CubeComplex::vertex_at(const Point& p) const {
  if (!contains_point(p)) return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = 0; i < p.size(); ++i) v = v * box_[i].values() + static_cast<std::size_t>(p[i] - box_[i].lo);
  return v;
}

bool CubeComplex::contains_cube(const Point& base, VertexMask directions) const {
  if (!contains_point(base)) return false;
  const auto& g = spec_->graph();
  if ((directions & ~g.all_vertices()) != 0) return false;
  for (VertexMask r = directions; r; r &= r - 1) {
    const auto d = static_cast<std::size_t>(std::countr_zero(r));
    if ((g.neighbors(d) & directions) != (directions & ~bit(d))) return false;
    if (!can_step(box_[d], base[d], true)) return false;
  }
  return true;
}

std::vector<std::pair<Point, VertexMask>> CubeComplex::lattice_cubes() const {
  if (!lattice_) throw std::logic_error("lattice_cubes on an explicit complex");
  const auto cliques = all_cliques(spec_->graph());
  std::vector<std::pair<Point, VertexMask>> out;
  const std::size_t n = vertex_count_small();
  for (std::size_t v = 0; v < n; ++v) {
    const Point p = point_of(v);
    for (auto d : cliques) {
      if (contains_cube(p, d)) out.emplace_back(p, d);
    }
  }
  return out;
}

std::string CubeComplex::vertex_name(std::size_t v) const {
  if (lattice_) {
    const Point p = point_of(v);
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  }
  if (v < names_.size()) return names_[v];
  return std::to_string(v);
}

CubeComplex build_Z0(const SpecPtr& spec, const std::vector<std::optional<CoordRange>>& windows) {
  std::uint64_t largest = 2;
  for (auto m : spec->orders()) {
    if (m.is_finite()) largest = std::max(largest, m.value());
  }
  Box box;
  for (std::size_t v = 0; v < spec->size(); ++v) {
    const Order m = spec->order(v);
    if (m.is_finite()) {
      box.push_back({0, static_cast<long long>(m.value()) - 1, 0});
    } else if (v < windows.size() && windows[v]) {
      if (windows[v]->cyclic) throw std::invalid_argument("Z_0 windows are intervals");
      box.push_back(*windows[v]);
    } else {
      box.push_back({0, static_cast<long long>(largest), 0});
    }
  }
  return CubeComplex::lattice(spec, std::move(box));
}

CubeComplex build_Zf(const SpecPtr& spec, std::size_t q) {
  if (q < 3) throw std::invalid_argument("cyclic size q must be at least 3");
  Box box;
  for (std::size_t v = 0; v < spec->size(); ++v) {
    const Order m = spec->order(v);
    if (m.is_finite()) {
      box.push_back({0, static_cast<long long>(m.value()) - 1, 0});
    } else {
      box.push_back({0, static_cast<long long>(q) - 1, q});
    }
  }
  return CubeComplex::lattice(spec, std::move(box));
}

std::vector<Count> cell_counts(const CubeComplex& x) {
  std::vector<Count> counts;
  auto bump = [&](std::size_t k, const Count& c) {
    if (counts.size() <= k) counts.resize(k + 1);
    counts[k] += c;
  };
  if (x.is_lattice()) {
    for (auto d : all_cliques(x.group().graph())) {
      Count c = 1;
      for (std::size_t v = 0; v < x.box().size(); ++v) c *= (d >> v & 1U) ? x.box()[v].steps() : x.box()[v].values();
      if (c != 0) bump(popcount(d), c);
    }
  } else {
    for (const auto& cube : x.cubes()) bump(cube.axes.size(), 1);
  }
  if (counts.empty()) counts.push_back(0);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

Count euler_characteristic(const CubeComplex& x) {
  Count chi = 0;
  const auto counts = cell_counts(x);
  for (std::size_t k = 0; k < counts.size(); ++k) chi += (k % 2 == 0) ? counts[k] : Count(-counts[k]);
  return chi;
}

bool LinkComplex::is_simplex(std::uint64_t set) const {
  const std::uint64_t all = vertices.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertices.size()) - 1;
  if ((set & ~all) != 0) return false;
  if (popcount(set) <= 1) return true;
  return std::any_of(corners.begin(), corners.end(), [&](std::uint64_t c) { return (c & set) == set; });
}

std::vector<std::pair<std::size_t, std::size_t>> LinkComplex::edges() const {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (auto c : corners) {
    for (std::uint64_t a = c; a; a &= a - 1) {
      for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
        out.emplace(static_cast<std::size_t>(std::countr_zero(a)), static_cast<std::size_t>(std::countr_zero(b)));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::string LinkComplex::str(const SimpleGraph& g) const {
  std::string s;
  std::set<std::uint64_t> seen(corners.begin(), corners.end());
  for (auto c : seen) {
    if (popcount(c) < 2) continue;
    s += s.empty() ? "{" : " {";
    bool first = true;
    for (std::uint64_t r = c; r; r &= r - 1) {
      s += (first ? "" : ",") + sign_label(g, vertices[static_cast<std::size_t>(std::countr_zero(r))]);
      first = false;
    }
    s += "}";
  }
  return s;
}

LinkComplex vertex_link(const CubeComplex& x, const Point& p) {
  if (!x.contains_point(p)) throw std::out_of_range("point outside the box");
  const auto& g = x.group().graph();
  const auto& box = x.box();
  if (2 * g.size() > 64) throw std::length_error("links are limited to 32 directions");
  LinkComplex link;
  std::vector<int> index(2 * g.size(), -1);
  for (std::size_t d = 0; d < g.size(); ++d) {
    for (bool positive : {true, false}) {
      if (can_step(box[d], p[d], positive)) {
        index[2 * d + (positive ? 0 : 1)] = static_cast<int>(link.vertices.size());
        link.vertices.push_back({d, positive});
      }
    }
  }
  for (auto clique : all_cliques(g)) {
    if (clique == 0) continue;
    std::vector<std::size_t> dirs;
    for (VertexMask r = clique; r; r &= r - 1) dirs.push_back(static_cast<std::size_t>(std::countr_zero(r)));
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << dirs.size()); ++signs) {
      std::uint64_t corner = 0;
      bool ok = true;
      for (std::size_t i = 0; i < dirs.size() && ok; ++i) {
        const int idx = index[2 * dirs[i] + (signs >> i & 1U)];
        ok = idx >= 0;
        if (ok) corner |= std::uint64_t{1} << idx;
      }
      if (ok) link.corners.push_back(corner);
    }
  }
  return link;
}

LinkComplex vertex_link(const CubeComplex& x, std::size_t vertex) {
  if (x.is_lattice()) return vertex_link(x, x.point_of(vertex));
  if (vertex >= x.vertex_count_small()) throw std::out_of_range("vertex out of range");
  LinkComplex link;
  // half-edges at the vertex, keyed by (tail, head, axis, end)
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, int>, std::size_t> half;
  for (const auto& c : x.cubes()) {
    if (c.axes.size() != 1) continue;
    for (int end = 0; end < 2; ++end) {
      if (c.corners[static_cast<std::size_t>(end)] != vertex) continue;
      half.emplace(std::make_tuple(c.corners[0], c.corners[1], c.axes[0], end), link.vertices.size());
      link.vertices.push_back({c.axes[0], end == 0});
    }
  }
  if (link.vertices.size() > 64) throw std::length_error("link has more than 64 vertices");
  for (const auto& c : x.cubes()) {
    if (c.axes.empty()) continue;
    for (std::size_t corner = 0; corner < c.corners.size(); ++corner) {
      if (c.corners[corner] != vertex) continue;
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < c.axes.size(); ++i) {
        const std::size_t lo = corner & ~(std::size_t{1} << i);
        const std::size_t hi = corner | (std::size_t{1} << i);
        const int end = (corner >> i & 1U) ? 1 : 0;
        mask |= std::uint64_t{1} << half.at(std::make_tuple(c.corners[lo], c.corners[hi], c.axes[i], end));
      }
      link.corners.push_back(mask);
    }
  }
  return link;
}

bool is_flag(const LinkComplex& link) {
  const std::size_t n = link.vertices.size();
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [a, b] : link.edges()) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  // extend cliques by higher-index vertices; every clique of size >= 3 is checked
  std::vector<std::pair<std::uint64_t, std::uint64_t>> stack;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t later = adj[v] & ~((std::uint64_t{2} << v) - 1);
    stack.emplace_back(std::uint64_t{1} << v, later);
  }
  while (!stack.empty()) {
    auto [clique, cand] = stack.back();
    stack.pop_back();
    if (popcount(clique) >= 3 && !link.is_simplex(clique)) return false;
    for (std::uint64_t r = cand; r; r &= r - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(r));
      const std::uint64_t later = ~((std::uint64_t{2} << w) - 1);
      stack.emplace_back(clique | (std::uint64_t{1} << w), cand & adj[w] & later);
    }
  }
  return true;
}

NpcReport check_npc(const CubeComplex& x) {
  const std::size_t n = x.vertex_count_small();
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_flag(vertex_link(x, v))) return {false, v};
  }
  return {};
}

bool is_npc(const CubeComplex& x) { return check_npc(x).npc; }

LinkComplex salvetti_link(const SimpleGraph& g) {
  if (2 * g.size() > 64) throw std::length_error("links are limited to 32 directions");
  LinkComplex link;
  for (std::size_t v = 0; v < g.size(); ++v) {
    link.vertices.push_back({v, true});
    link.vertices.push_back({v, false});
  }
  for (auto clique : all_cliques(g)) {
    if (clique == 0) continue;
    std::vector<std::size_t> dirs;
    for (VertexMask r = clique; r; r &= r - 1) dirs.push_back(static_cast<std::size_t>(std::countr_zero(r)));
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << dirs.size()); ++signs) {
      std::uint64_t corner = 0;
      for (std::size_t i = 0; i < dirs.size(); ++i) corner |= std::uint64_t{1} << (2 * dirs[i] + (signs >> i & 1U));
      link.corners.push_back(corner);
    }
  }
  return link;
}

std::vector<std::string> check_link_map(const LinkComplex& link, const SimpleGraph& g) {
  std::vector<std::string> failures;
  const std::size_t n = link.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (link.vertices[i].vertex >= g.size()) {
      failures.push_back("direction out of range");
      return failures;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (link.vertices[i] == link.vertices[j]) {
        failures.push_back("not injective: " + sign_label(g, link.vertices[i]) + " twice");
      }
    }
  }
  for (auto c : link.corners) {
    for (std::uint64_t a = c; a; a &= a - 1) {
      for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
        const auto u = link.vertices[static_cast<std::size_t>(std::countr_zero(a))].vertex;
        const auto w = link.vertices[static_cast<std::size_t>(std::countr_zero(b))].vertex;
        if (u == w || !g.adjacent(u, w)) {
          failures.push_back("not simplicial: " + sign_label(g, link.vertices[static_cast<std::size_t>(std::countr_zero(a))]) +
                             " " + sign_label(g, link.vertices[static_cast<std::size_t>(std::countr_zero(b))]));
        }
      }
    }
  }
  const auto edges = link.edges();
  const std::set<std::pair<std::size_t, std::size_t>> edge_set(edges.begin(), edges.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto u = link.vertices[i].vertex;
      const auto w = link.vertices[j].vertex;
      if (u != w && g.adjacent(u, w) && edge_set.count({i, j}) == 0) {
        failures.push_back("image not full: missing edge " + sign_label(g, link.vertices[i]) + " " +
                           sign_label(g, link.vertices[j]));
      }
    }
  }
  if (!is_flag(link)) failures.push_back("image not full: unfilled simplex");
  std::sort(failures.begin(), failures.end());
  failures.erase(std::unique(failures.begin(), failures.end()), failures.end());
  return failures;
}

SpecialReport check_special_map(const CubeComplex& x) {
  SpecialReport report;
  const std::size_t n = x.vertex_count_small();
  for (std::size_t v = 0; v < n; ++v) {
    ++report.vertices_checked;
    for (auto& f : check_link_map(vertex_link(x, v), x.group().graph())) {
      report.failures.push_back(x.vertex_name(v) + ": " + f);
    }
  }
  report.special = report.failures.empty();
  return report;
}

bool is_closed_surface(const CubeComplex& x) {
  const auto counts = cell_counts(x);
  if (counts.size() != 3 || counts[2] == 0) return false;
  const std::size_t n = x.vertex_count_small();
  for (std::size_t v = 0; v < n; ++v) {
    const auto link = vertex_link(x, v);
    const std::size_t k = link.vertices.size();
    if (k < 2) return false;
    std::vector<std::size_t> degree(k, 0);
    std::vector<std::uint64_t> adj(k, 0);
    for (auto c : link.corners) {
      if (popcount(c) != 2) continue;
      const auto a = static_cast<std::size_t>(std::countr_zero(c));
      const auto b = static_cast<std::size_t>(63 - std::countl_zero(c));
      ++degree[a];
      ++degree[b];
      adj[a] |= std::uint64_t{1} << b;
      adj[b] |= std::uint64_t{1} << a;
    }
    if (std::any_of(degree.begin(), degree.end(), [](std::size_t d) { return d != 2; })) return false;
    std::uint64_t seen = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < k; ++i) {
        if ((seen >> i & 1U) && (adj[i] & ~seen)) {
          seen |= adj[i];
          grew = true;
        }
      }
    }
    if (popcount(seen) != k) return false;
  }
  return true;
}

bool is_full_subcomplex(const LinkComplex& small, const LinkComplex& big) {
  std::vector<std::size_t> to_big(small.vertices.size());
  for (std::size_t i = 0; i < small.vertices.size(); ++i) {
    auto it = std::find(big.vertices.begin(), big.vertices.end(), small.vertices[i]);
    if (it == big.vertices.end()) return false;
    to_big[i] = static_cast<std::size_t>(it - big.vertices.begin());
  }
  auto lift = [&](std::uint64_t set) {
    std::uint64_t out = 0;
    for (std::uint64_t r = set; r; r &= r - 1) out |= std::uint64_t{1} << to_big[static_cast<std::size_t>(std::countr_zero(r))];
    return out;
  };
  std::uint64_t image = lift(small.vertices.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << small.vertices.size()) - 1);
  for (auto c : small.corners) {
    if (!big.is_simplex(lift(c))) return false;
  }
  for (auto c : big.corners) {
    const std::uint64_t inside = c & image;
    if (popcount(inside) < 2) continue;
    // the face of c spanned by image vertices must be a simplex of small
    std::uint64_t back = 0;
    for (std::size_t i = 0; i < to_big.size(); ++i) {
      if (inside >> to_big[i] & 1U) back |= std::uint64_t{1} << i;
    }
    if (!small.is_simplex(back)) return false;
  }
  return true;
}

void write_complex(std::ostream& out, const CubeComplex& x, bool dump_cells) {
  const auto& g = x.group().graph();
  write_group_spec(out, x.group());
  if (x.is_lattice()) {
    out << "complex lattice\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto& r = x.box()[v];
      if (r.cyclic) {
        out << "cyclic " << g.label(v) << ' ' << r.cyclic << '\n';
      } else {
        out << "range " << g.label(v) << ' ' << r.lo << ' ' << r.hi << '\n';
      }
    }
    if (!dump_cells) return;
    for (const auto& [p, d] : x.lattice_cubes()) {
      out << "cube ";
      for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
      out << ' ';
      if (d == 0) out << '-';
      bool first = true;
      for (VertexMask r = d; r; r &= r - 1) {
        out << (first ? "" : ",") << g.label(static_cast<std::size_t>(std::countr_zero(r)));
        first = false;
      }
      out << '\n';
    }
    return;
  }
  out << "complex explicit\n";
  for (const auto& c : x.cubes()) {
    const std::string& name = x.vertex_name(c.corners[0]);
    if (name.size() < 2 || name.front() != '(') throw std::invalid_argument("explicit complex has no lattice coordinates");
    out << "cube " << name.substr(1, name.size() - 2) << ' ';
    if (c.axes.empty()) out << '-';
    for (std::size_t i = 0; i < c.axes.size(); ++i) out << (i ? "," : "") << g.label(c.axes[i]);
    out << '\n';
  }
}

namespace {

long long parse_int(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("bad integer '" + s + "'");
  return v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

CubeComplex read_complex(std::istream& in) {
  const auto records = read_records(in);
  auto spec = make_spec(spec_from_records(records, true));
  const auto& g = spec->graph();
  std::string kind = "lattice";
  std::vector<std::optional<CoordRange>> ranges(g.size());
  std::vector<std::pair<Point, VertexMask>> cubes;
  for (const auto& r : records) {
    const auto& key = r[0];
    if (key == "n" || key == "e" || key == "o") continue;
    if (key == "complex") {
      if (r.size() != 2 || (r[1] != "lattice" && r[1] != "explicit")) throw ParseError("'complex' needs lattice or explicit");
      kind = r[1];
    } else if (key == "range" || key == "cyclic") {
      if (r.size() != (key == "range" ? 4U : 3U)) throw ParseError("malformed '" + key + "' line");
      auto v = g.find(r[1]);
      if (!v) throw ParseError("unknown vertex '" + r[1] + "'");
      CoordRange cr;
      if (key == "range") {
        cr.lo = parse_int(r[2]);
        cr.hi = parse_int(r[3]);
        if (cr.hi < cr.lo) throw ParseError("empty range for '" + r[1] + "'");
      } else {
        const long long q = parse_int(r[2]);
        if (q < 3) throw ParseError("cyclic size must be at least 3");
        cr = {0, q - 1, static_cast<std::size_t>(q)};
      }
      ranges[*v] = cr;
    } else if (key == "cube") {
      if (r.size() != 3) throw ParseError("malformed 'cube' line");
      Point p;
      for (const auto& c : split_commas(r[1])) p.push_back(parse_int(c));
      if (p.size() != g.size()) throw ParseError("cube point has the wrong dimension");
      VertexMask dirs = 0;
      if (r[2] != "-") {
        for (const auto& l : split_commas(r[2])) {
          auto v = g.find(l);
          if (!v) throw ParseError("unknown direction '" + l + "'");
          dirs |= bit(*v);
        }
      }
      cubes.emplace_back(std::move(p), dirs);
    } else {
      throw ParseError("unknown record '" + key + "'");
    }
  }
  try {
    if (kind == "explicit") return CubeComplex::from_lattice_cubes(spec, cubes);
    Box box;
    std::uint64_t largest = 2;
    for (auto m : spec->orders()) {
      if (m.is_finite()) largest = std::max(largest, m.value());
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (ranges[v]) {
        box.push_back(*ranges[v]);
      } else if (spec->order(v).is_finite()) {
        box.push_back({0, static_cast<long long>(spec->order(v).value()) - 1, 0});
      } else {
        box.push_back({0, static_cast<long long>(largest), 0});
      }
    }
    return CubeComplex::lattice(spec, std::move(box));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

CubeComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return read_complex(in);
}

std::string stats_line(const CubeComplex& x) {
  const auto counts = cell_counts(x);
  auto at = [&](std::size_t k) { return k < counts.size() ? counts[k] : Count(0); };
  std::ostringstream out;
  out << "V=" << at(0) << " E=" << at(1) << " F=" << at(2) << " C3=" << at(3) << " chi=" << euler_characteristic(x)
      << " npc=" << (is_npc(x) ? "yes" : "no") << " special=" << (check_special_map(x).special ? "yes" : "no")
      << " surface=" << (is_closed_surface(x) ? "yes" : "no");
  return out.str();
}

}  // namespace gpw

#include "gpw/catalog.hpp"

#include <charconv>
#include <stdexcept>

namespace gpw::catalog {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

const std::vector<std::string> kP6 = {"a", "b", "c", "d", "e", "f"};

// Path a-b-c-d-e-f plus a vertex t joined to the given path vertices; the
// Lambda_i are drawn as this opposite graph.
SimpleGraph p6_with_t(const std::vector<std::string>& t_neighbours) {
  auto labels = kP6;
  labels.push_back("t");
  EdgeList edges = {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}};
  for (const auto& v : t_neighbours) edges.emplace_back("t", v);
  return SimpleGraph(std::move(labels), edges);
}

std::optional<std::size_t> parse_number(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (n <= 26) {
      out.emplace_back(1, static_cast<char>('a' + i));
    } else {
      out.push_back("v" + std::to_string(i));
    }
  }
  return out;
}

SimpleGraph cycle(std::size_t m) {
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  return SimpleGraph(letters(m), edges);
}

SimpleGraph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(letters(n), edges);
}

SimpleGraph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return SimpleGraph(letters(n), edges);
}

SimpleGraph edgeless(std::size_t n) { return SimpleGraph(letters(n)); }

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<std::pair<std::size_t, std::size_t>> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
  return SimpleGraph(std::move(labels), edges);
}

SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b) {
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<std::pair<std::size_t, std::size_t>> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = 0; v < b.size(); ++v) edges.emplace_back(u, v + a.size());
  }
  return SimpleGraph(std::move(labels), edges);
}

SimpleGraph p1_7() {
  SimpleGraph drawn({"b", "c", "e", "f", "g", "e'", "c'"},
                    EdgeList{{"b", "c"}, {"e", "f"}, {"f", "g"}, {"g", "e'"}, {"c'", "b"},
                             {"c'", "e"}, {"c", "e'"}, {"c'", "c"}, {"e'", "e"}});
  return opposite(drawn);
}

SimpleGraph p2_7() {
  SimpleGraph drawn({"a", "b", "c", "e", "f", "c'", "e'"},
                    EdgeList{{"a", "b"}, {"b", "c"}, {"e", "f"}, {"b", "c'"}, {"e'", "f"},
                             {"c'", "c"}, {"e'", "e"}, {"c'", "e"}, {"c", "e'"}});
  return opposite(drawn);
}

SimpleGraph phi(int i) {
  switch (i) {
    case 1:
      return opposite(SimpleGraph({"a", "b", "c", "d", "e", "f", "g", "t"},
                                  EdgeList{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                                           {"e", "f"}, {"f", "g"}, {"d", "t"}}));
    case 2:
      return opposite(SimpleGraph({"a", "b", "c", "d", "e", "f", "g", "d'"},
                                  EdgeList{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                                           {"e", "f"}, {"f", "g"}, {"c", "d'"}, {"d'", "e"},
                                           {"d'", "d"}}));
    case 3:
      return opposite(SimpleGraph({"a", "b", "c", "e", "f", "g", "c'", "e'"},
                                  EdgeList{{"a", "b"}, {"b", "c"}, {"e", "f"}, {"f", "g"},
                                           {"b", "c'"}, {"e'", "f"}, {"c'", "c"}, {"e'", "e"},
                                           {"c'", "e"}, {"c", "e'"}}));
    case 4:
      return opposite(SimpleGraph({"a", "b", "c", "e", "f", "g", "e'", "c'"},
                                  EdgeList{{"a", "b"}, {"b", "c"}, {"e", "f"}, {"f", "g"},
                                           {"g", "e'"}, {"c'", "b"}, {"c'", "e"}, {"c", "e'"},
                                           {"c'", "c"}, {"e'", "e"}}));
    case 5:
      return opposite(SimpleGraph({"a", "b", "c", "e", "f", "g", "e'", "c'"},
                                  EdgeList{{"a", "b"}, {"b", "c"}, {"e", "f"}, {"f", "g"},
                                           {"g", "e'"}, {"c'", "a"}, {"c'", "c"}, {"e'", "e"},
                                           {"c'", "e"}, {"c", "e'"}}));
    default:
      throw std::invalid_argument("Phi index must be in 1..5");
  }
}

SimpleGraph lambda(int i) {
  switch (i) {
    case 0: {
      SimpleGraph two_paths({"a", "b", "c", "e", "f", "g"},
                            EdgeList{{"a", "b"}, {"b", "c"}, {"e", "f"}, {"f", "g"}});
      return opposite(two_paths);
    }
    case 1: return opposite(p6_with_t({"c", "d", "e", "f"}));
    case 2: return opposite(p6_with_t({"a", "b"}));
    case 3: return opposite(p6_with_t({"b"}));
    case 4: return opposite(p6_with_t({"d", "e", "f"}));
    case 5: return opposite(p6_with_t({"d", "e", "c"}));
    case 6: return opposite(p6_with_t({"c", "e", "f"}));
    case 7: return opposite(p6_with_t({"d", "c", "f"}));
    case 8: return opposite(p6_with_t({"a", "c"}));
    case 9: return opposite(p6_with_t({"b", "d"}));
    case 10: return opposite(p6_with_t({"b", "c"}));
    case 11: return opposite(p6_with_t({"c", "d"}));
    default:
      throw std::invalid_argument("Lambda index must be in 0..11");
  }
}

SimpleGraph figure_eight() {
  auto labels = kP6;
  EdgeList edges = {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}};
  for (const auto& v : kP6) {
    labels.push_back(v + "'");
    edges.emplace_back(v, v + "'");
  }
  return opposite(SimpleGraph(std::move(labels), edges));
}

SimpleGraph by_name(std::string_view name) {
  const std::string full(name);
  if (name.size() > 3 && name.substr(name.size() - 3) == "opp") {
    return opposite(by_name(name.substr(0, name.size() - 3)));
  }
  if (name == "P1_7") return p1_7();
  if (name == "P2_7") return p2_7();
  if (name == "Fig8") return figure_eight();
  auto numbered = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    return parse_number(name.substr(prefix.size()));
  };
  if (auto i = numbered("Lambda")) return lambda(static_cast<int>(*i));
  if (auto i = numbered("Phi")) return phi(static_cast<int>(*i));
  if (auto m = numbered("C")) return cycle(*m);
  if (auto n = numbered("P")) return path(*n);
  if (auto n = numbered("K")) return complete(*n);
  if (auto n = numbered("E")) return edgeless(*n);
  throw std::invalid_argument("unknown graph name '" + full + "'");
}

std::vector<std::string> known_names() {
  return {"C<m>", "P<n>", "K<n>", "E<n>", "P1_7", "P2_7", "Phi1..Phi5", "Lambda0..Lambda11", "Fig8",
          "<name>opp"};
}

}  // namespace gpw::catalog

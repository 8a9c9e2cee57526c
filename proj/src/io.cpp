#include "gpw/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace gpw {

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad vertex count '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("bad vertex count '" + s + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

SimpleGraph read_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  std::size_t pos = 0;
  auto take = [&]() -> unsigned {
    if (pos >= text.size()) throw ParseError("graph6: truncated input");
    const auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw ParseError("graph6: character out of range");
    return c - 63U;
  };
  std::size_t n = take();
  if (n == 63) {
    std::size_t width = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      width = 6;
    }
    n = 0;
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | take();
  }
  if (n > SimpleGraph::kMaxVertices) throw ParseError("graph6: more than 64 vertices");
  std::vector<VertexMask> adj(n, 0);
  unsigned group = 0;
  int left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (left == 0) {
        group = take();
        left = 6;
      }
      --left;
      if ((group >> left) & 1U) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  }
  if (left > 0 && (group & ((1U << left) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  if (pos != text.size()) throw ParseError("graph6: trailing characters");
  return SimpleGraph::from_adjacency(numeric_labels(n), std::move(adj));
}

std::string write_graph6(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }
  unsigned group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

std::vector<Record> read_records(std::istream& in) {
  std::vector<Record> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    Record r;
    std::string tok;
    while (tokens >> tok) r.push_back(tok);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Record> parse_records(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_records(in);
}

SimpleGraph graph_from_records(const std::vector<Record>& records, bool allow_other) {
  std::optional<std::vector<std::string>> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& r : records) {
    if (r[0] == "n") {
      if (labels) throw ParseError("duplicate 'n' line");
      if (r.size() < 2) throw ParseError("'n' line needs a vertex count");
      const std::size_t count = parse_count(r[1]);
      if (r.size() != count + 2) throw ParseError("'n' line: expected " + r[1] + " labels");
      labels.emplace(r.begin() + 2, r.end());
    } else if (r[0] == "e") {
      if (r.size() != 3) throw ParseError("'e' line needs two endpoints");
      edges.emplace_back(r[1], r[2]);
    } else if (!allow_other && r[0] != "o") {
      throw ParseError("unknown record '" + r[0] + "'");
    }
  }
  if (!labels) throw ParseError("missing 'n' line");
  try {
    return SimpleGraph(std::move(*labels), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

GroupSpec spec_from_records(const std::vector<Record>& records, bool allow_other) {
  SimpleGraph g = graph_from_records(records, allow_other);
  std::vector<std::optional<Order>> orders(g.size());
  for (const auto& r : records) {
    if (r[0] != "o") continue;
    if (r.size() != 3) throw ParseError("'o' line needs a vertex and an order");
    auto v = g.find(r[1]);
    if (!v) throw ParseError("order given for unknown vertex '" + r[1] + "'");
    try {
      orders[*v] = Order::parse(r[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  std::vector<Order> resolved;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!orders[v]) throw ParseError("no order given for vertex '" + g.label(v) + "'");
    resolved.push_back(*orders[v]);
  }
  return GroupSpec(std::move(g), std::move(resolved));
}

SimpleGraph read_edge_list(std::istream& in) { return graph_from_records(read_records(in)); }

SimpleGraph parse_edge_list(std::string_view text) { return graph_from_records(parse_records(text)); }

void write_edge_list(std::ostream& out, const SimpleGraph& g, std::string_view prefix) {
  out << prefix << "n " << g.size();
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  for (auto [u, v] : g.edges()) out << prefix << "e " << g.label(u) << ' ' << g.label(v) << '\n';
}

std::string edge_list_string(const SimpleGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

GroupSpec read_group_spec(std::istream& in) { return spec_from_records(read_records(in)); }

GroupSpec parse_group_spec(std::string_view text) { return spec_from_records(parse_records(text)); }

void write_group_spec(std::ostream& out, const GroupSpec& spec, std::string_view prefix) {
  write_edge_list(out, spec.graph(), prefix);
  for (std::size_t v = 0; v < spec.size(); ++v) {
    out << prefix << "o " << spec.graph().label(v) << ' ' << spec.order(v).str() << '\n';
  }
}

SimpleGraph parse_graph_auto(std::string_view text) {
  const auto t = trim(text);
  if (t.find_first_of(" \t\n") == std::string_view::npos && !t.empty() && t[0] != 'n') {
    return read_graph6(t);
  }
  if (t.substr(0, 10) == ">>graph6<<") return read_graph6(t);
  return parse_edge_list(text);
}

}  // namespace gpw

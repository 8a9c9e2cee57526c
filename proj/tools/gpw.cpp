#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "gpw/catalog.hpp"
#include "gpw/classify.hpp"
#include "gpw/complexes.hpp"
#include "gpw/embeddings.hpp"
#include "gpw/io.hpp"
#include "gpw/words.hpp"

using namespace gpw;

namespace {

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return slurp(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::pair<std::string, std::string> parse_edge(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) throw UsageError("--edge takes u,v");
  return {parts[0], parts[1]};
}

struct GraphInput {
  std::string name;
  std::string g6;
  std::string file;

  bool given() const { return !name.empty() || !g6.empty() || !file.empty(); }
};

void add_graph_input(CLI::App* app, GraphInput& in, const std::string& prefix = "") {
  app->add_option("--" + prefix + "name", in.name, "Named graph: C5, P7opp, P1_7, Phi3, Lambda7, Fig8, ...");
  app->add_option("--" + prefix + "g6", in.g6, "Graph in graph6");
  app->add_option("--" + prefix + "file", in.file, "Edge-list or graph6 file ('-' for stdin)");
}

SimpleGraph load_graph(const GraphInput& in) {
  const int count = !in.name.empty() + !in.g6.empty() + !in.file.empty();
  if (count > 1) throw UsageError("give only one graph source");
  if (!in.name.empty()) {
    try {
      return catalog::by_name(in.name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!in.g6.empty()) return read_graph6(in.g6);
  if (!in.file.empty()) return parse_graph_auto(read_file(in.file));
  return parse_graph_auto(slurp(std::cin));
}

struct SpecInput {
  GraphInput graph;
  std::string spec;
  std::string orders;

  bool given() const { return graph.given() || !spec.empty() || !orders.empty(); }
};

void add_spec_input(CLI::App* app, SpecInput& in) {
  add_graph_input(app, in.graph);
  app->add_option("--spec", in.spec, "Spec file (edge list plus 'o <v> <m|inf>' lines)");
  app->add_option("--orders", in.orders, "Vertex orders for the graph: one value or a comma list (2, 3, inf)");
}

SpecPtr load_spec(const SpecInput& in) {
  if (!in.spec.empty()) {
    if (in.graph.given() || !in.orders.empty()) throw UsageError("--spec excludes graph and --orders options");
    return make_spec(parse_group_spec(read_file(in.spec)));
  }
  if (!in.graph.given() && in.orders.empty()) return make_spec(parse_group_spec(slurp(std::cin)));
  auto g = load_graph(in.graph);
  if (in.orders.empty()) throw UsageError("--orders is required with a graph");
  std::vector<Order> orders;
  try {
    for (const auto& o : split(in.orders, ',')) orders.push_back(Order::parse(o));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (orders.size() == 1) orders.assign(g.size(), orders[0]);
  if (orders.size() != g.size()) throw UsageError("--orders needs one value or one per vertex");
  return make_spec(GroupSpec(std::move(g), std::move(orders)));
}

std::string graph_text(const SimpleGraph& g, bool as_g6) {
  return as_g6 ? write_graph6(g) + "\n" : edge_list_string(g);
}

int verdict(bool affirmative) { return affirmative ? kAffirmative : kNegative; }

// ---------------------------------------------------------------- graph

void add_graph_commands(CLI::App& app, std::function<int()>& action) {
  auto* graph = app.add_subcommand("graph", "Graph algebra and recognition")->require_subcommand(1);
  static GraphInput in;
  static GraphInput other;
  static bool as_g6 = false;
  static std::string keep;
  static std::string edge;
  static std::string t;
  static std::size_t min_length = 5;
  static std::size_t n = 0;

  auto op = [&](const std::string& name, const std::string& help) {
    auto* sub = graph->add_subcommand(name, help);
    add_graph_input(sub, in);
    sub->add_flag("--g6-out", as_g6, "Print graphs in graph6");
    return sub;
  };

  op("opp", "Opposite graph")->final_callback([&] {
    action = [] {
      std::cout << graph_text(opposite(load_graph(in)), as_g6);
      return kAffirmative;
    };
  });
  op("induced", "Induced subgraph")->add_option("--keep", keep, "Comma list of vertices")->required();
  graph->get_subcommand("induced")->final_callback([&] {
    action = [] {
      std::cout << graph_text(induced_subgraph(load_graph(in), split(keep, ',')), as_g6);
      return kAffirmative;
    };
  });
  op("contract", "Contract an edge")->add_option("--edge", edge, "u,v")->required();
  graph->get_subcommand("contract")->final_callback([&] {
    action = [] {
      auto [u, v] = parse_edge(edge);
      std::cout << graph_text(contract_edge(load_graph(in), u, v), as_g6);
      return kAffirmative;
    };
  });
  op("cocontract", "Contract an edge of the opposite graph")->add_option("--edge", edge, "u,v")->required();
  graph->get_subcommand("cocontract")->final_callback([&] {
    action = [] {
      auto [u, v] = parse_edge(edge);
      std::cout << graph_text(co_contract(load_graph(in), u, v), as_g6);
      return kAffirmative;
    };
  });
  op("double", "Double of g - t along lk(t)")->add_option("-t", t, "Vertex")->required();
  graph->get_subcommand("double")->final_callback([&] {
    action = [] {
      std::cout << graph_text(double_along_link(load_graph(in), t).graph, as_g6);
      return kAffirmative;
    };
  });
  op("hole", "Shortest induced cycle of a given minimum length")
      ->add_option("--min-length", min_length, "Least cycle length (default 5)");
  graph->get_subcommand("hole")->final_callback([&] {
    action = [] {
      const auto g = load_graph(in);
      const auto hole = find_hole(g, min_length);
      if (!hole) {
        std::cout << "hole=none\n";
        return kNegative;
      }
      std::cout << "hole=";
      for (std::size_t i = 0; i < hole->size(); ++i) std::cout << (i ? "," : "") << g.label((*hole)[i]);
      std::cout << '\n';
      return kAffirmative;
    };
  });
  op("wc", "Weak chordality")->final_callback([&] {
    action = [] {
      const auto r = weak_chordality(load_graph(in));
      if (r.weakly_chordal) {
        std::cout << "weakly_chordal=true\n";
        return kAffirmative;
      }
      std::cout << "weakly_chordal=false witness=" << (r.witness->kind == CycleKind::kHole ? "hole:" : "antihole:")
                << r.witness->cycle.size() << '\n';
      return kNegative;
    };
  });
  auto* iso = op("iso", "Isomorphism test against a second graph");
  add_graph_input(iso, other, "other-");
  iso->final_callback([&] {
    action = [] {
      const auto g = load_graph(in);
      const auto h = load_graph(other);
      const auto map = are_isomorphic(g, h);
      if (!map) {
        std::cout << "isomorphic=false\n";
        return kNegative;
      }
      std::cout << "isomorphic=true map=";
      for (std::size_t i = 0; i < map->size(); ++i) std::cout << (i ? "," : "") << g.label(i) << ':' << h.label((*map)[i]);
      std::cout << '\n';
      return kAffirmative;
    };
  });
  auto* en = graph->add_subcommand("enum", "All graphs on n vertices up to isomorphism, in graph6");
  en->add_option("-n", n, "Vertex count, 1..7")->required();
  en->final_callback([&] {
    action = [] {
      if (n < 1 || n > 7) throw UsageError("-n must be between 1 and 7");
      GraphEnumerator e(n);
      while (auto g = e.next()) std::cout << write_graph6(*g) << '\n';
      return kAffirmative;
    };
  });
}

// ---------------------------------------------------------------- word

void add_word_commands(CLI::App& app, std::function<int()>& action) {
  auto* word = app.add_subcommand("word", "Word arithmetic in a graph product")->require_subcommand(1);
  static SpecInput in;
  static std::vector<std::string> words;
  static std::string vertex;

  auto op = [&](const std::string& name, const std::string& help, int count) {
    auto* sub = word->add_subcommand(name, help);
    add_spec_input(sub, in);
    auto* opt = sub->add_option("words", words, "Words such as \"a b^-1 c^2\"");
    if (count > 0) opt->expected(count)->required();
    if (count < 0) opt->expected(1, -1)->required();
    return sub;
  };
  auto parse_all = [] {
    const auto spec = load_spec(in);
    std::vector<Word> out;
    for (const auto& w : words) out.push_back(Word::parse(spec, w));
    return out;
  };

  op("normalize", "Canonical normal form", 1)->final_callback([=, &action] {
    action = [=] {
      std::cout << normalize(parse_all()[0]).str() << '\n';
      return kAffirmative;
    };
  });
  op("mul", "Product of the words", -1)->final_callback([=, &action] {
    action = [=] {
      const auto ws = parse_all();
      auto acc = identity_element(ws[0].spec());
      for (const auto& w : ws) acc = multiply(acc, normalize(w));
      std::cout << acc.str() << '\n';
      return kAffirmative;
    };
  });
  op("inv", "Inverse", 1)->final_callback([=, &action] {
    action = [=] {
      std::cout << invert(normalize(parse_all()[0])).str() << '\n';
      return kAffirmative;
    };
  });
  op("eq", "Equality of two words", 2)->final_callback([=, &action] {
    action = [=] {
      const auto ws = parse_all();
      const bool same = equal(ws[0], ws[1]);
      std::cout << (same ? "true" : "false") << '\n';
      return verdict(same);
    };
  });
  op("proj", "Projection to one vertex group", 1)->add_option("--vertex", vertex, "Vertex")->required();
  word->get_subcommand("proj")->final_callback([=, &action] {
    action = [=] {
      const auto w = parse_all()[0];
      auto v = w.group().graph().find(vertex);
      if (!v) throw UsageError("unknown vertex '" + vertex + "'");
      std::cout << project(w, *v) << '\n';
      return kAffirmative;
    };
  });
  op("kp0", "Membership in the kernel onto the product of all vertex groups", 1)->final_callback([=, &action] {
    action = [=] {
      const bool in_kernel = in_kernel_kp0(normalize(parse_all()[0]));
      std::cout << (in_kernel ? "true" : "false") << '\n';
      return verdict(in_kernel);
    };
  });
  op("kpf", "Membership in the kernel onto the finite vertex groups", 1)->final_callback([=, &action] {
    action = [=] {
      const bool in_kernel = in_kernel_kpf(normalize(parse_all()[0]));
      std::cout << (in_kernel ? "true" : "false") << '\n';
      return verdict(in_kernel);
    };
  });
}

// ---------------------------------------------------------------- complex

void add_complex_commands(CLI::App& app, std::function<int()>& action) {
  auto* cx = app.add_subcommand("complex", "Cube complexes of graph products")->require_subcommand(1);
  static SpecInput in;
  static std::string complex_file;
  static std::vector<std::string> windows;
  static std::size_t q = 0;
  static bool dump = false;

  auto op = [&](const std::string& name, const std::string& help) {
    auto* sub = cx->add_subcommand(name, help);
    add_spec_input(sub, in);
    sub->add_option("--window", windows, "Window for an infinite-order vertex: v:lo:hi (Z_0 only)");
    sub->add_option("-q", q, "Cyclic size of infinite-order coordinates; builds the Z_f model (q >= 3)");
    return sub;
  };
  auto build = [] {
    const auto spec = load_spec(in);
    if (q != 0) {
      if (q < 3) throw UsageError("-q must be at least 3");
      if (!windows.empty()) throw UsageError("--window only applies to Z_0");
      return build_Zf(spec, q);
    }
    std::vector<std::optional<CoordRange>> ranges(spec->size());
    for (const auto& w : windows) {
      const auto parts = split(w, ':');
      if (parts.size() != 3) throw UsageError("--window takes v:lo:hi");
      auto v = spec->graph().find(parts[0]);
      if (!v) throw UsageError("unknown vertex '" + parts[0] + "'");
      try {
        ranges[*v] = CoordRange{std::stoll(parts[1]), std::stoll(parts[2]), 0};
      } catch (const std::exception&) {
        throw UsageError("bad window '" + w + "'");
      }
    }
    return build_Z0(spec, ranges);
  };
  // Checks take a spec (the complex is built) or a complex file.
  auto load = [=] {
    if (in.given()) return build();
    if (!windows.empty() || q != 0) throw UsageError("--window and -q need a spec");
    return parse_complex(read_file(complex_file.empty() ? "-" : complex_file));
  };

  op("build-z0", "Build Z_0 and print the complex file")->add_flag("--dump", dump, "List every cube");
  cx->get_subcommand("build-z0")->final_callback([=, &action] {
    action = [=] {
      if (q != 0) throw UsageError("build-z0 takes no -q; use build-zf");
      std::ostringstream out;
      write_complex(out, build(), dump);
      std::cout << out.str();
      return kAffirmative;
    };
  });
  auto* zf = op("build-zf", "Build the Z_f model and print the complex file");
  zf->add_flag("--dump", dump, "List every cube");
  zf->final_callback([=, &action] {
    action = [=] {
      if (q == 0) throw UsageError("build-zf needs -q");
      std::ostringstream out;
      write_complex(out, build(), dump);
      std::cout << out.str();
      return kAffirmative;
    };
  });
  for (const char* name : {"stats", "npc", "special", "surface"}) {
    auto* sub = op(name, std::string("Report ") + name + " for a spec or a complex file");
    sub->add_option("--complex", complex_file, "Complex file ('-' for stdin, the default without a spec)");
  }
  cx->get_subcommand("stats")->final_callback([=, &action] {
    action = [=] {
      std::cout << stats_line(load()) << '\n';
      return kAffirmative;
    };
  });
  cx->get_subcommand("npc")->final_callback([=, &action] {
    action = [=] {
      const auto x = load();
      const auto r = check_npc(x);
      std::cout << "npc=" << (r.npc ? "yes" : "no");
      if (r.offending_vertex) std::cout << " vertex=" << x.vertex_name(*r.offending_vertex);
      std::cout << '\n';
      return verdict(r.npc);
    };
  });
  cx->get_subcommand("special")->final_callback([=, &action] {
    action = [=] {
      const auto r = check_special_map(load());
      std::cout << "special=" << (r.special ? "yes" : "no") << " vertices=" << r.vertices_checked << '\n';
      for (const auto& f : r.failures) std::cout << "  " << f << '\n';
      return verdict(r.special);
    };
  });
  cx->get_subcommand("surface")->final_callback([=, &action] {
    action = [=] {
      const auto x = load();
      const bool surface = is_closed_surface(x);
      std::cout << "surface=" << (surface ? "yes" : "no") << " chi=" << euler_characteristic(x) << '\n';
      return verdict(surface);
    };
  });
}

// ---------------------------------------------------------------- embed

void add_embed_commands(CLI::App& app, std::function<int()>& action) {
  auto* embed = app.add_subcommand("embed", "Generator maps from doubles and co-contractions")->require_subcommand(1);
  static SpecInput in;
  static std::string t;
  static std::string edge;
  static std::string y_order;
  static std::string out_path;
  static std::string hom_file;
  static bool verify = false;
  static bool mirror = false;
  static std::size_t radius = 2;
  static std::size_t cap = 2'000'000;
  static std::size_t samples = 0;
  static std::uint64_t seed = 0;

  auto emit = [](HomomorphismSpec h) {
    std::ostringstream text;
    write_homomorphism(text, h);
    write_output(out_path, text.str());
    if (!verify) return kAffirmative;
    const auto r = relator_check(h);
    std::cout << report_line(r) << '\n';
    return verdict(r.pass);
  };
  auto constructor = [&](const std::string& name, const std::string& help) {
    auto* sub = embed->add_subcommand(name, help);
    add_graph_input(sub, in.graph);
    sub->add_option("--orders", in.orders, "Vertex orders: one value or a comma list")->required();
    sub->add_flag("--verify", verify, "Run the relator check and print its report");
    sub->add_flag("--mirror", mirror, "Conjugate as t^-1 x t instead of t x t^-1");
    sub->add_option("-o,--output", out_path, "Write the homomorphism file here");
    return sub;
  };
  auto conj = [] { return mirror ? Conjugation::kMirror : Conjugation::kStandard; };

  constructor("double", "Map from the double of g - t along lk(t)")->add_option("-t", t, "Vertex")->required();
  embed->get_subcommand("double")->final_callback([=, &action] {
    action = [=] {
      const auto spec = load_spec(in);
      return emit(double_homomorphism(spec->graph(), t, spec->orders(), conj()));
    };
  });
  auto* co = constructor("cocontract", "Map from the co-contraction along an edge x,t of the opposite graph");
  co->add_option("--edge", edge, "x,t: x survives as y -> t x t^-1")->required();
  co->add_option("--y-order", y_order, "Order of the merged vertex; must equal the order of x");
  co->final_callback([=, &action] {
    action = [=] {
      const auto spec = load_spec(in);
      auto [x, tt] = parse_edge(edge);
      std::optional<Order> yo;
      if (!y_order.empty()) yo = Order::parse(y_order);
      return emit(co_contraction_embedding(spec->graph(), x, tt, spec->orders(), yo, conj()));
    };
  });
  auto load_hom = [] { return parse_homomorphism(read_file(hom_file.empty() ? "-" : hom_file)); };
  auto* ver = embed->add_subcommand("verify", "Relator check of a homomorphism file");
  ver->add_option("--hom", hom_file, "Homomorphism file ('-' for stdin, the default)");
  ver->final_callback([=, &action] {
    action = [=] {
      const auto r = relator_check(load_hom());
      std::cout << report_line(r) << '\n';
      return verdict(r.pass);
    };
  });
  auto* inj = embed->add_subcommand("inject-sample", "Injectivity on a ball of the source");
  inj->add_option("--hom", hom_file, "Homomorphism file ('-' for stdin, the default)");
  inj->add_option("-L,--radius", radius, "Ball radius in generator length (default 2)");
  inj->add_option("--cap", cap, "Largest ball to enumerate");
  inj->add_option("--samples", samples, "Check this many random words instead of the whole ball");
  inj->add_option("--seed", seed, "Seed for --samples (default 0)");
  inj->final_callback([=, &action] {
    action = [=] {
      const auto h = load_hom();
      const auto r = samples ? injectivity_random(h, radius, samples, seed) : injectivity_sample(h, radius, cap);
      std::cout << report_line(r) << '\n';
      return verdict(r.pass());
    };
  });
}

// ---------------------------------------------------------------- classify

std::string verdict_line(const SimpleGraph& g, const Classification& c) {
  std::string out = to_string(c.verdict);
  if (c.witness) out += " " + c.witness->str(g);
  if (!c.note.empty()) out += " (" + c.note + ")";
  return out;
}

void add_classify_commands(CLI::App& app, std::function<int()>& action) {
  static GraphInput in;
  static std::string group = "both";
  static bool certificate = false;
  static std::size_t n = 0;
  static std::size_t threads = 0;
  static std::string out_path;

  auto* cl = app.add_subcommand("classify", "Does the Coxeter or Artin group contain a hyperbolic surface group");
  add_graph_input(cl, in);
  cl->add_option("--group", group, "racg, raag or both (a census row)")
      ->check(CLI::IsMember({"racg", "raag", "both"}));
  cl->add_flag("--certificate", certificate, "Print the basis and a witness certificate");
  cl->final_callback([&] {
    action = [] {
      const auto g = load_graph(in);
      if (group == "both") {
        std::cout << census_header() << '\n' << census_line(census_row(g)) << '\n';
        return kAffirmative;
      }
      const auto c = group == "racg" ? racg_surface_subgroup(g) : raag_surface_subgroup(g);
      std::cout << verdict_line(g, c) << '\n';
      if (certificate) {
        std::cout << "basis: " << c.basis << '\n';
        if (c.witness && c.witness->kind != WitnessKind::kNamedSubgraph) {
          std::cout << "certificate: " << witness_complex(g, *c.witness).report << '\n';
        }
      }
      return verdict(c.verdict == Verdict::kYes);
    };
  });

  auto* cs = app.add_subcommand("census", "Classify every graph on n vertices (TSV)");
  cs->add_option("-n", n, "Vertex count, 1..7")->required();
  cs->add_option("-o,--output", out_path, "Write the table here");
  cs->add_option("--threads", threads, "Worker threads (default GPW_THREADS or all cores)");
  cs->final_callback([&] {
    action = [] {
      if (n < 1 || n > 7) throw UsageError("-n must be between 1 and 7");
      std::ostringstream out;
      write_census(out, census(n, threads));
      write_output(out_path, out.str());
      return kAffirmative;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Graph products of groups: words, cube complexes, embeddings and surface subgroups", "gpw");
  app.require_subcommand(1);
  std::function<int()> action;
  add_graph_commands(app, action);
  add_word_commands(app, action);
  add_complex_commands(app, action);
  add_embed_commands(app, action);
  add_classify_commands(app, action);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}

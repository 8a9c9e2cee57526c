#include "gpw/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gpw/catalog.hpp"
#include "gpw/embeddings.hpp"
#include "gpw/io.hpp"

namespace gpw {

namespace {

constexpr std::size_t kDecidedSize = 7;

struct Pattern {
  const char* name;
  SimpleGraph graph;
};

const std::vector<Pattern>& raag_patterns() {
  static const std::vector<Pattern> patterns = {
      {"C6opp", catalog::by_name("C6opp")},
      {"P6opp", catalog::by_name("P6opp")},
      {"P1_7", catalog::p1_7()},
      {"P2_7", catalog::p2_7()},
  };
  return patterns;
}

std::string join_labels(const SimpleGraph& g, const std::vector<std::size_t>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + g.label(vs[i]);
  return out;
}

Witness cycle_witness(const CycleWitness& c) {
  Witness w;
  w.kind = c.kind == CycleKind::kHole ? WitnessKind::kHole : WitnessKind::kAntihole;
  w.vertices = c.cycle;
  return w;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "YES";
    case Verdict::kNo:
      return "NO";
    case Verdict::kUnknown:
      break;
  }
  return "UNKNOWN";
}

std::string Witness::str(const SimpleGraph& g) const {
  switch (kind) {
    case WitnessKind::kHole:
      return "hole:" + join_labels(g, vertices);
    case WitnessKind::kAntihole:
      return "antihole:" + join_labels(g, vertices);
    case WitnessKind::kNamedSubgraph:
      break;
  }
  return pattern + ":" + join_labels(g, vertices);
}

Classification racg_surface_subgroup(const SimpleGraph& g) {
  Classification c;
  const auto wc = weak_chordality(g);
  if (wc.witness) {
    c.verdict = Verdict::kYes;
    c.witness = cycle_witness(*wc.witness);
    c.basis = c.witness->kind == WitnessKind::kHole ? "induced cycle of length >= 5"
                                                    : "induced cycle of length >= 5 in the opposite graph";
    return c;
  }
  if (g.size() <= kDecidedSize) {
    c.verdict = Verdict::kNo;
    c.basis = "weakly chordal with at most 7 vertices";
    return c;
  }
  c.verdict = Verdict::kUnknown;
  c.basis = "weakly chordal with more than 7 vertices";
  if (g.size() == 12 && are_isomorphic(g, catalog::figure_eight())) {
    c.note = "known YES: contains the Artin group of P6opp with index 64; beyond the 7-vertex classification";
  } else {
    c.note = "weak chordality does not decide graphs with more than 7 vertices";
  }
  return c;
}

Classification raag_surface_subgroup(const SimpleGraph& g) {
  Classification c;
  if (auto hole = find_hole(g, 5)) {
    c.verdict = Verdict::kYes;
    c.witness = Witness{WitnessKind::kNamedSubgraph, "C" + std::to_string(hole->size()), *hole};
    c.basis = "induced cycle of length >= 5";
    return c;
  }
  for (const auto& p : raag_patterns()) {
    if (p.graph.size() > g.size()) continue;
    if (auto map = has_induced(g, p.graph)) {
      c.verdict = Verdict::kYes;
      c.witness = Witness{WitnessKind::kNamedSubgraph, p.name, *map};
      c.basis = std::string("induced ") + p.name;
      return c;
    }
  }
  if (g.size() <= kDecidedSize) {
    c.verdict = Verdict::kNo;
    c.basis = "none of C_m (m >= 5), C6opp, P6opp, P1_7, P2_7 with at most 7 vertices";
  } else {
    c.verdict = Verdict::kUnknown;
    c.basis = "pattern list only decides graphs with at most 7 vertices";
  }
  return c;
}

bool revalidate_witness(const SimpleGraph& g, const Witness& w) {
  const auto& vs = w.vertices;
  for (auto v : vs) {
    if (v >= g.size()) return false;
  }
  switch (w.kind) {
    case WitnessKind::kHole:
      return vs.size() >= 5 && is_induced_cycle(g, vs);
    case WitnessKind::kAntihole:
      return vs.size() >= 5 && is_induced_cycle(opposite(g), vs);
    case WitnessKind::kNamedSubgraph:
      break;
  }
  SimpleGraph pattern;
  try {
    pattern = catalog::by_name(w.pattern);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (pattern.size() != vs.size()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j]) != pattern.adjacent(i, j)) return false;
    }
  }
  return true;
}

CensusRow census_row(const SimpleGraph& g) {
  CensusRow row;
  row.graph = g;
  row.graph6 = write_graph6(g);
  row.weakly_chordal = is_weakly_chordal(g);
  row.racg = racg_surface_subgroup(g);
  row.raag = raag_surface_subgroup(g);
  return row;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("GPW_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<CensusRow> census(std::size_t n, std::size_t threads) {
  if (n < 1 || n > kDecidedSize) throw std::invalid_argument("census needs 1 <= n <= 7");
  const auto graphs = enumerate_graphs(n);
  std::vector<CensusRow> rows(graphs.size());
  const std::size_t workers = std::min(std::max<std::size_t>(1, threads ? threads : worker_count()), graphs.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) rows[i] = census_row(graphs[i]);
    return rows;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < graphs.size(); i += workers) rows[i] = census_row(graphs[i]);
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

CensusSummary summarize(const std::vector<CensusRow>& rows) {
  CensusSummary s;
  for (const auto& r : rows) {
    ++s.classes;
    s.weakly_chordal += r.weakly_chordal;
    const bool racg = r.racg.verdict == Verdict::kYes;
    const bool raag = r.raag.verdict == Verdict::kYes;
    s.racg_yes += racg;
    s.raag_yes += raag;
    s.raag_only += raag && !racg;
  }
  return s;
}

std::string census_header() { return "graph6\tn\tweakly_chordal\tracg\tracg_witness\traag\traag_witness"; }

std::string census_line(const CensusRow& row) {
  auto witness = [&](const Classification& c) { return c.witness ? c.witness->str(row.graph) : std::string("-"); };
  std::ostringstream out;
  out << row.graph6 << '\t' << row.graph.size() << '\t' << (row.weakly_chordal ? "true" : "false") << '\t'
      << to_string(row.racg.verdict) << '\t' << witness(row.racg) << '\t' << to_string(row.raag.verdict) << '\t'
      << witness(row.raag);
  return out.str();
}

void write_census(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << census_header() << '\n';
  for (const auto& r : rows) out << census_line(r) << '\n';
  const auto s = summarize(rows);
  out << "# classes=" << s.classes << '\n'
      << "# weakly_chordal=" << s.weakly_chordal << '\n'
      << "# racg_yes=" << s.racg_yes << '\n'
      << "# raag_yes=" << s.raag_yes << '\n'
      << "# raag_yes_racg_no=" << s.raag_only << '\n';
}

WitnessCertificate witness_complex(const SimpleGraph& g, const Witness& w) {
  WitnessCertificate cert;
  const auto& vs = w.vertices;
  if (w.kind == WitnessKind::kHole) {
    if (vs.size() < 4 || !is_induced_cycle(g, vs)) throw std::invalid_argument("witness is not an induced cycle");
    const auto c = catalog::cycle(vs.size());
    cert.complex = build_Z0(make_spec(GroupSpec::uniform(c, Order::finite(2))));
    cert.chi = euler_characteristic(*cert.complex);
    const bool surface = is_closed_surface(*cert.complex);
    cert.certified = surface && cert.chi < 0;
    cert.report = std::string("surface=") + (surface ? "yes" : "no") + " chi=" + cert.chi.str();
    return cert;
  }
  if (w.kind != WitnessKind::kAntihole) throw std::invalid_argument("only holes and antiholes have complexes");
  if (!revalidate_witness(g, w)) throw std::invalid_argument("witness is not an antihole");
  // relabel the antihole so that its opposite is the cycle a-b-c-...
  const auto letters = catalog::letters(vs.size());
  auto current = opposite(catalog::cycle(vs.size()));
  std::optional<HomomorphismSpec> chain;
  std::string path = "C" + std::to_string(vs.size()) + "opp";
  std::string merged = letters[0];
  for (std::size_t k = 1; current.size() > 5; ++k) {
    auto step = co_contraction_embedding(current, merged, letters[k],
                                         std::vector<Order>(current.size(), Order::finite(2)));
    merged = merged + "*" + letters[k];
    current = step.source->graph();
    chain = chain ? compose(step, *chain) : step;
    path += "->C" + std::to_string(current.size()) + "opp";
  }
  if (!chain) chain = identity_homomorphism(make_spec(GroupSpec::uniform(current, Order::finite(2))));
  const auto relators = relator_check(*chain);
  cert.complex = build_Z0(make_spec(GroupSpec::uniform(catalog::cycle(5), Order::finite(2))));
  cert.chi = euler_characteristic(*cert.complex);
  cert.certified = relators.pass && is_closed_surface(*cert.complex) && cert.chi < 0;
  cert.report = "chain " + path + " " + report_line(relators) + "; C5opp = C5: surface=" +
                (is_closed_surface(*cert.complex) ? "yes" : "no") + " chi=" + cert.chi.str();
  return cert;
}

}  // namespace gpw

#include "acceptance.hpp"

#include "gpw/catalog.hpp"
#include "gpw/classify.hpp"
#include "oracles.hpp"

namespace acceptance {

using namespace gpw;

Result census_dichotomy() {
  const auto rows = census(7, 1);
  std::size_t bad = 0;
  std::size_t yes = 0;
  for (const auto& row : rows) {
    const bool hole =
        oracle::oracle_hole_size(row.graph, 5).has_value() || oracle::oracle_hole_size(opposite(row.graph), 5).has_value();
    const auto& c = row.racg;
    bool ok = c.verdict != Verdict::kUnknown && (c.verdict == Verdict::kYes) == hole && row.weakly_chordal == !hole;
    if (c.verdict == Verdict::kYes) {
      ++yes;
      ok = ok && c.witness && c.witness->kind != WitnessKind::kNamedSubgraph && revalidate_witness(row.graph, *c.witness);
    }
    bad += !ok;
  }

  std::vector<std::pair<std::string, SimpleGraph>> named = {
      {"P1_7", catalog::p1_7()}, {"P2_7", catalog::p2_7()}, {"P6opp", catalog::by_name("P6opp")},
      {"P7opp", catalog::by_name("P7opp")}};
  for (int i = 1; i <= 11; ++i) named.emplace_back("Lambda" + std::to_string(i), catalog::lambda(i));
  for (int i = 1; i <= 5; ++i) named.emplace_back("Phi" + std::to_string(i), catalog::phi(i));
  std::size_t named_bad = 0;
  for (const auto& [name, g] : named) {
    const auto expected = g.size() <= 7 ? Verdict::kNo : Verdict::kUnknown;
    named_bad += !is_weakly_chordal(g) || racg_surface_subgroup(g).verdict != expected;
  }
  const auto fig8 = racg_surface_subgroup(catalog::figure_eight());
  const bool fig8_ok = fig8.verdict == Verdict::kUnknown && fig8.note.find("known YES") != std::string::npos;

  Result r;
  r.pass = rows.size() == 1044 && bad == 0 && named_bad == 0 && fig8_ok;
  r.detail = std::to_string(rows.size()) + " classes, " + std::to_string(yes) + " YES, " + std::to_string(bad) +
             " inconsistent rows; " + std::to_string(named.size()) + " named graphs weakly chordal with the guarded verdict, " +
             std::to_string(named_bad) + " failures; Fig8 " + to_string(fig8.verdict) + " (" + fig8.note + ")";
  return r;
}

Result raag_racg_divergence() {
  bool ok = true;
  std::string detail;
  for (const char* name : {"P6opp", "P1_7", "P2_7"}) {
    const auto g = catalog::by_name(name);
    const auto a = raag_surface_subgroup(g);
    const auto c = racg_surface_subgroup(g);
    const bool here = a.verdict == Verdict::kYes && a.witness && revalidate_witness(g, *a.witness) &&
                      c.verdict == Verdict::kNo;
    ok = ok && here;
    detail += (detail.empty() ? "" : "; ") + std::string(name) + ": raag " + to_string(a.verdict) + ", racg " +
              to_string(c.verdict);
  }
  return {ok, detail};
}

}  // namespace acceptance

#include <doctest.h>

#include <sstream>

#include "gpw/catalog.hpp"
#include "gpw/classify.hpp"
#include "gpw/io.hpp"
#include "oracles.hpp"

using namespace gpw;
namespace cat = gpw::catalog;

TEST_CASE("named verdicts") {
  const auto c5 = racg_surface_subgroup(cat::cycle(5));
  CHECK(c5.verdict == Verdict::kYes);
  REQUIRE(c5.witness);
  CHECK(c5.witness->kind == WitnessKind::kHole);
  CHECK(c5.witness->str(cat::cycle(5)) == "hole:a,b,c,d,e");
  CHECK(revalidate_witness(cat::cycle(5), *c5.witness));

  for (const char* name : {"P1_7", "P2_7", "P6opp"}) {
    const auto g = cat::by_name(name);
    CHECK(racg_surface_subgroup(g).verdict == Verdict::kNo);
    const auto a = raag_surface_subgroup(g);
    CHECK(a.verdict == Verdict::kYes);
    REQUIRE(a.witness);
    CHECK(revalidate_witness(g, *a.witness));
  }
  CHECK(raag_surface_subgroup(cat::by_name("P6opp")).witness->pattern == "P6opp");

  const auto fig8 = racg_surface_subgroup(cat::figure_eight());
  CHECK(fig8.verdict == Verdict::kUnknown);
  CHECK(fig8.note.find("known YES") != std::string::npos);
  CHECK(raag_surface_subgroup(cat::figure_eight()).verdict == Verdict::kYes);

  const auto c7opp = racg_surface_subgroup(cat::by_name("C7opp"));
  CHECK(c7opp.verdict == Verdict::kYes);
  CHECK(c7opp.witness->kind == WitnessKind::kAntihole);
  CHECK(revalidate_witness(cat::by_name("C7opp"), *c7opp.witness));

  // big graphs with a hole are still decided
  const auto c9 = racg_surface_subgroup(cat::cycle(9));
  CHECK(c9.verdict == Verdict::kYes);
  CHECK(raag_surface_subgroup(cat::cycle(9)).verdict == Verdict::kYes);
  const auto p9 = racg_surface_subgroup(cat::path(9));
  CHECK(p9.verdict == Verdict::kUnknown);
  CHECK(p9.note.find("known YES") == std::string::npos);
  CHECK(raag_surface_subgroup(cat::path(9)).verdict == Verdict::kUnknown);
}

TEST_CASE("weakly chordal hard cases") {
  for (int i = 1; i <= 11; ++i) {
    const auto g = cat::lambda(i);
    CHECK(is_weakly_chordal(g));
    CHECK(racg_surface_subgroup(g).verdict == (g.size() <= 7 ? Verdict::kNo : Verdict::kUnknown));
  }
  for (int i = 1; i <= 5; ++i) {
    const auto g = cat::phi(i);
    CHECK(is_weakly_chordal(g));
    CHECK(racg_surface_subgroup(g).verdict == Verdict::kUnknown);
  }
}

TEST_CASE("witness revalidation rejects bad witnesses") {
  const auto g = cat::cycle(6);
  CHECK_FALSE(revalidate_witness(g, Witness{WitnessKind::kHole, "", {0, 1, 2, 3, 4}}));
  CHECK_FALSE(revalidate_witness(g, Witness{WitnessKind::kAntihole, "", {0, 1, 2, 3, 4, 5}}));
  CHECK_FALSE(revalidate_witness(g, Witness{WitnessKind::kNamedSubgraph, "P6opp", {0, 1, 2, 3, 4, 5}}));
  CHECK_FALSE(revalidate_witness(g, Witness{WitnessKind::kNamedSubgraph, "bogus", {0}}));
  CHECK_FALSE(revalidate_witness(g, Witness{WitnessKind::kHole, "", {0, 1, 2, 3, 4, 9}}));
  CHECK(revalidate_witness(g, Witness{WitnessKind::kNamedSubgraph, "C6", {0, 1, 2, 3, 4, 5}}));
}

TEST_CASE("small censuses") {
  const auto four = census(4, 1);
  CHECK(four.size() == 11);
  for (const auto& r : four) CHECK(r.racg.verdict == Verdict::kNo);
  const auto five = census(5, 1);
  CHECK(five.size() == 34);
  std::size_t yes = 0;
  for (const auto& r : five) {
    if (r.racg.verdict == Verdict::kYes) {
      ++yes;
      CHECK(are_isomorphic(r.graph, cat::cycle(5)));
    }
  }
  CHECK(yes == 1);
  CHECK_THROWS_AS(census(8), std::invalid_argument);
  CHECK_THROWS_AS(census(0), std::invalid_argument);
}

TEST_CASE("verdicts agree with the subset oracle") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& row : census(n)) {
      const bool hole = oracle::oracle_hole_size(row.graph, 5) || oracle::oracle_hole_size(opposite(row.graph), 5);
      CHECK(row.racg.verdict != Verdict::kUnknown);
      CHECK((row.racg.verdict == Verdict::kYes) == hole);
      CHECK(row.weakly_chordal == !hole);
      if (row.racg.witness) CHECK(revalidate_witness(row.graph, *row.racg.witness));
      if (row.raag.witness) CHECK(revalidate_witness(row.graph, *row.raag.witness));
      CHECK(row.raag.verdict != Verdict::kUnknown);
      if (row.racg.verdict == Verdict::kYes) CHECK(row.raag.verdict == Verdict::kYes);
    }
  }
}

TEST_CASE("trees have no surface subgroups") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (!is_connected(g) || g.edge_count() != n - 1) continue;
      CHECK(raag_surface_subgroup(g).verdict == Verdict::kNo);
      CHECK(racg_surface_subgroup(g).verdict == Verdict::kNo);
    }
  }
}

TEST_CASE("witnesses lift to larger graphs") {
  for (const auto& g : enumerate_graphs(7)) {
    const bool racg = racg_surface_subgroup(g).verdict == Verdict::kYes;
    const bool raag = raag_surface_subgroup(g).verdict == Verdict::kYes;
    for (std::size_t v = 0; v < 7; ++v) {
      const auto h = induced_subgraph(g, g.all_vertices() & ~bit(v));
      if (racg_surface_subgroup(h).verdict == Verdict::kYes) CHECK(racg);
      if (raag_surface_subgroup(h).verdict == Verdict::kYes) CHECK(raag);
    }
  }
}

TEST_CASE("census output") {
  const auto rows = census(5, 3);
  CHECK(rows.size() == census(5, 1).size());
  std::ostringstream a, b;
  write_census(a, rows);
  write_census(b, census(5, 1));
  CHECK(a.str() == b.str());
  const auto text = a.str();
  CHECK(text.rfind(census_header() + "\n", 0) == 0);
  CHECK(text.find("\tYES\thole:") != std::string::npos);
  CHECK(text.find("# classes=34\n") != std::string::npos);
  CHECK(text.find("# racg_yes=1\n") != std::string::npos);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(adjacency_code(read_graph6(rows[i - 1].graph6)) < adjacency_code(read_graph6(rows[i].graph6)));
  }
}

TEST_CASE("witness complexes") {
  const auto c5 = witness_complex(cat::cycle(5), Witness{WitnessKind::kHole, "", {0, 1, 2, 3, 4}});
  CHECK(c5.certified);
  CHECK(c5.chi == -8);
  CHECK(c5.report == "surface=yes chi=-8");
  const auto c6 = witness_complex(cat::cycle(6), Witness{WitnessKind::kHole, "", {0, 1, 2, 3, 4, 5}});
  CHECK(c6.chi == -32);
  CHECK(c6.chi == euler_characteristic(*c6.complex));
  const auto c4 = witness_complex(cat::cycle(4), Witness{WitnessKind::kHole, "", {0, 1, 2, 3}});
  CHECK(c4.chi == 0);
  CHECK_FALSE(c4.certified);
  CHECK_THROWS_AS(witness_complex(cat::cycle(6), Witness{WitnessKind::kHole, "", {0, 1, 2, 3, 4}}),
                  std::invalid_argument);

  const auto g = cat::by_name("C7opp");
  const auto w = *racg_surface_subgroup(g).witness;
  const auto anti = witness_complex(g, w);
  CHECK(anti.certified);
  CHECK(anti.report.find("C7opp->C6opp->C5opp relators: PASS") != std::string::npos);
}

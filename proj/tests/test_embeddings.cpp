#include <doctest.h>

#include <random>
#include <sstream>

#include "gpw/catalog.hpp"
#include "gpw/embeddings.hpp"
#include "gpw/io.hpp"

using namespace gpw;
namespace cat = gpw::catalog;

namespace {

const Order kTwo = Order::finite(2);
const Order kInf = Order::infinite();

std::vector<Order> uniform(const SimpleGraph& g, Order o) { return std::vector<Order>(g.size(), o); }

}  // namespace

TEST_CASE("identity and corrupted maps") {
  const auto spec = make_spec(GroupSpec(cat::by_name("C5opp"), uniform(cat::cycle(5), kTwo)));
  auto id = identity_homomorphism(spec);
  CHECK_FALSE(id.verified);
  CHECK(relator_check(id).pass);
  CHECK(id.verified);
  CHECK(injectivity_sample(id, 3).pass());

  auto h = co_contraction_embedding(cat::by_name("C6opp"), "a", "b", uniform(cat::cycle(6), kTwo));
  REQUIRE(relator_check(h).pass);
  const auto y = *h.source->graph().find("a*b");
  // y -> x t breaks the order relator of y
  auto bad = h;
  bad.images[y] = Word::parse(h.target, "a b");
  auto r = relator_check(bad);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(bad.verified);
  CHECK(report_line(r).rfind("relators: FAIL[a*b^2", 0) == 0);
  // swap the images of two commuting source generators for a non-commuting pair
  auto swapped = identity_homomorphism(make_spec(GroupSpec(cat::path(3), uniform(cat::path(3), kTwo))));
  swapped.images[1] = Word::generator(swapped.target, 2);
  swapped.images[2] = Word::generator(swapped.target, 1);
  CHECK(report_line(relator_check(swapped)) == "relators: FAIL[[a,b]]");
}

TEST_CASE("co-contraction of the six-antihole") {
  const auto g = cat::by_name("C6opp");
  auto h = co_contraction_embedding(g, "a", "b", uniform(g, kTwo));
  CHECK(are_isomorphic(h.source->graph(), cat::by_name("C5opp")));
  CHECK(relator_check(h).pass);
  const auto y = *h.source->graph().find("a*b");
  CHECK(h.images[y].str() == "b a b");
  for (std::size_t v = 0; v < h.source->size(); ++v) {
    if (v != y) CHECK(h.images[v].str() == h.source->graph().label(v));
  }
  const auto inj = injectivity_sample(h, 4);
  CHECK(inj.pass());
  CHECK(inj.checked > 100);
  CHECK(report_line(inj) == "injectivity(L=4): PASS");

  auto mirror = co_contraction_embedding(g, "a", "b", uniform(g, kTwo), std::nullopt, Conjugation::kMirror);
  CHECK(relator_check(mirror).pass);
  const auto free_y = co_contraction_embedding(g, "a", "b", uniform(g, kInf));
  CHECK(free_y.images[y].str() == "b a b^-1");
  const auto free_mirror = co_contraction_embedding(g, "a", "b", uniform(g, kInf), kInf, Conjugation::kMirror);
  CHECK(free_mirror.images[y].str() == "b^-1 a b");

  // without the conjugator the map is still a homomorphism but not injective
  auto plain = h;
  plain.images[y] = Word::parse(h.target, "a");
  CHECK(relator_check(plain).pass);
  const auto lost = injectivity_sample(plain, 4);
  CHECK_FALSE(lost.pass());
  CHECK(report_line(lost).rfind("injectivity(L=4): FAIL(", 0) == 0);
}

TEST_CASE("co-contraction input checks") {
  const auto g = cat::by_name("C6opp");
  CHECK_THROWS_AS(co_contraction_embedding(g, "a", "c", uniform(g, kTwo)), std::invalid_argument);
  CHECK_THROWS_AS(co_contraction_embedding(g, "a", "z", uniform(g, kTwo)), std::invalid_argument);
  CHECK_THROWS_AS(co_contraction_embedding(g, "a", "b", uniform(g, kTwo), Order::finite(3)), std::invalid_argument);
  CHECK_NOTHROW(co_contraction_embedding(g, "a", "b", uniform(g, kTwo), kTwo));
  CHECK_THROWS_AS(co_contraction_embedding(g, "a", "b", {kTwo}), std::invalid_argument);
}

TEST_CASE("right-angled Artin co-contractions") {
  for (int m = 5; m <= 7; ++m) {
    const auto g = cat::by_name("C" + std::to_string(m) + "opp");
    auto h = co_contraction_embedding(g, "a", "b", uniform(g, kInf));
    CHECK(relator_check(h).pass);
    CHECK(injectivity_sample(h, m == 7 ? 2 : 3).pass());
  }
}

TEST_CASE("chained co-contractions compose") {
  const auto g7 = cat::by_name("C7opp");
  auto first = co_contraction_embedding(g7, "a", "b", uniform(g7, kTwo));
  const auto& g6 = first.source->graph();
  CHECK(are_isomorphic(g6, cat::by_name("C6opp")));
  // a*b and c are non-adjacent in the contracted graph
  auto second = co_contraction_embedding(g6, "a*b", "c", first.source->orders());
  CHECK(are_isomorphic(second.source->graph(), cat::by_name("C5opp")));
  auto chain = compose(second, first);
  CHECK(relator_check(chain).pass);
  CHECK(injectivity_sample(chain, 3).pass());
  CHECK_THROWS_AS(compose(first, second), std::invalid_argument);
  const auto y = *chain.source->graph().find("a*b*c");
  CHECK(chain.images[y].str() == "c b a b c");
}

TEST_CASE("doubles along links") {
  const auto g = cat::by_name("P7opp");
  auto h = double_homomorphism(g, "d", uniform(g, kTwo));
  CHECK(relator_check(h).pass);
  CHECK(are_isomorphic(h.source->graph(), cat::by_name("Phi3")));
  const auto lk = link(g, "d");
  for (const auto& l : lk) CHECK(h.images[*h.source->graph().find(l)].str() == l);
  for (std::size_t v = 0; v < h.source->size(); ++v) {
    const auto& label = h.source->graph().label(v);
    if (label.back() == '\'') CHECK(h.images[v].str() == "d " + label.substr(0, label.size() - 1) + " d");
  }
  CHECK(injectivity_sample(h, 3).pass());

  // when t is adjacent to everything the double is the inclusion of g - t
  const auto k = cat::join(cat::path(1), SimpleGraph({"x", "y"}));
  auto inc = double_homomorphism(k, "a", uniform(k, kInf));
  CHECK(inc.source->size() == 2);
  CHECK(inc.images[0].str() == "x");
  CHECK(inc.images[1].str() == "y");
  CHECK_THROWS_AS(double_homomorphism(g, "q", uniform(g, kTwo)), std::invalid_argument);
}

TEST_CASE("every construction passes the relator check") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (std::size_t t = 0; t < n; ++t) {
        auto d = double_homomorphism(g, g.label(t), uniform(g, kTwo));
        REQUIRE(relator_check(d).pass);
        for (std::size_t x = 0; x < n; ++x) {
          if (x == t || g.adjacent(x, t)) continue;
          auto c = co_contraction_embedding(g, g.label(x), g.label(t), uniform(g, kTwo));
          REQUIRE(relator_check(c).pass);
        }
      }
    }
  }
  std::mt19937_64 rng(5);
  const Order choices[] = {Order::finite(3), kInf};
  for (std::size_t n : {5, 6, 7}) {
    const auto graphs = enumerate_graphs(n);
    for (int trial = 0; trial < 150; ++trial) {
      const auto& g = graphs[rng() % graphs.size()];
      std::vector<Order> ord;
      for (std::size_t i = 0; i < n; ++i) ord.push_back(n == 7 ? kTwo : choices[rng() % 2]);
      const std::size_t t = rng() % n;
      auto d = double_homomorphism(g, g.label(t), ord);
      REQUIRE(relator_check(d).pass);
      for (std::size_t x = 0; x < n; ++x) {
        if (x == t || g.adjacent(x, t)) continue;
        auto c = co_contraction_embedding(g, g.label(x), g.label(t), ord);
        REQUIRE(relator_check(c).pass);
        REQUIRE(relator_check(compose(identity_homomorphism(c.source), c)).pass);
        break;
      }
    }
  }
}

TEST_CASE("composition preserves the relator check") {
  const auto g = cat::by_name("C6opp");
  auto h = co_contraction_embedding(g, "a", "b", uniform(g, Order::finite(3)));
  REQUIRE(relator_check(h).pass);
  // an automorphism of the target: rotate the cycle by one step
  auto rot = identity_homomorphism(h.target);
  for (std::size_t v = 0; v < 6; ++v) rot.images[v] = Word::generator(h.target, (v + 1) % 6);
  REQUIRE(relator_check(rot).pass);
  CHECK(relator_check(compose(h, rot)).pass);
  CHECK(injectivity_sample(compose(h, rot), 2).pass());
}

TEST_CASE("collapsing two generators is caught at radius one") {
  const auto spec = make_spec(GroupSpec(cat::edgeless(2), uniform(cat::edgeless(2), kInf)));
  auto h = identity_homomorphism(spec);
  h.images[1] = Word::generator(spec, 0);
  CHECK(relator_check(h).pass);
  CHECK(injectivity_sample(h, 0).pass());
  const auto r = injectivity_sample(h, 1);
  CHECK(report_line(r) == "injectivity(L=1): FAIL(a^-1,b^-1)");
  CHECK_THROWS_AS(injectivity_sample(h, 12, 100), std::length_error);
  CHECK_FALSE(injectivity_random(h, 12, 500, 0).pass());
  const auto good = identity_homomorphism(spec);
  const auto sampled = injectivity_random(good, 12, 500, 7);
  CHECK(sampled.pass());
  CHECK(sampled.checked == 500);
  CHECK(report_line(sampled) == "injectivity(L=12): PASS");
}

TEST_CASE("homomorphism files") {
  const auto g = cat::by_name("C6opp");
  const auto h = co_contraction_embedding(g, "a", "b", uniform(g, Order::finite(4)));
  std::ostringstream out;
  write_homomorphism(out, h);
  const auto back = parse_homomorphism(out.str());
  CHECK(*back.source == *h.source);
  CHECK(*back.target == *h.target);
  for (std::size_t v = 0; v < h.images.size(); ++v) CHECK(back.images[v].str() == h.images[v].str());

  const std::string text =
      "source\nn 2 x y\no x inf\no y inf\ntarget\nn 1 a\no a inf\nim x a^2\nim y\n";
  auto f = parse_homomorphism(text);
  CHECK(f.images[0].str() == "a^2");
  CHECK(f.images[1].empty());
  CHECK(relator_check(f).pass);
  CHECK_THROWS_AS(parse_homomorphism("source\nn 1 x\no x 2\ntarget\nn 1 a\no a 2\n"), ParseError);
  CHECK_THROWS_AS(parse_homomorphism("source\nn 1 x\no x 2\ntarget\nn 1 a\no a 2\nim x b\n"), ParseError);
  CHECK_THROWS_AS(parse_homomorphism("n 1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_homomorphism("source\nn 1 x\no x 2\ntarget\nn 1 a\no a 2\nim x a\nim x a\n"), ParseError);
}

#include "acceptance.hpp"

#include <random>
#include <set>

#include "gpw/catalog.hpp"
#include "gpw/io.hpp"
#include "gpw/words.hpp"

namespace acceptance {

using namespace gpw;

Result kernel_conditions() {
  std::mt19937_64 rng(20240611);
  const Order choices[] = {Order::finite(2), Order::finite(3), Order::finite(4), Order::finite(6), Order::infinite()};
  std::vector<SimpleGraph> graphs;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto& g : enumerate_graphs(n)) graphs.push_back(std::move(g));
  }
  std::size_t mismatches = 0;
  std::size_t kp0_members = 0;
  std::size_t kpf_members = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& g = graphs[rng() % graphs.size()];
    std::vector<Order> orders;
    for (std::size_t i = 0; i < g.size(); ++i) orders.push_back(choices[rng() % 5]);
    const auto spec = make_spec(GroupSpec(g, orders));
    // bias towards kernel elements: half of the words are closed up with
    // the inverse of a shuffled copy
    std::vector<Syllable> syl;
    std::vector<long long> sums(g.size(), 0);
    const std::size_t len = rng() % 9;
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t v = rng() % g.size();
      const long long e = static_cast<long long>(rng() % 7) - 3;
      syl.push_back({v, e});
      sums[v] += e;
    }
    if (rng() & 1U) {
      auto tail = syl;
      std::shuffle(tail.begin(), tail.end(), rng);
      for (const auto& s : tail) {
        if (rng() % 4 == 0) continue;
        syl.push_back({s.vertex, -s.exponent});
        sums[s.vertex] -= s.exponent.convert_to<long long>();
      }
    }
    bool all_zero = true;
    bool finite_zero = true;
    for (std::size_t v = 0; v < g.size(); ++v) {
      const bool zero = orders[v].is_infinite() ? sums[v] == 0 : sums[v] % static_cast<long long>(orders[v].value()) == 0;
      all_zero = all_zero && zero;
      if (orders[v].is_finite()) finite_zero = finite_zero && zero;
    }
    const auto nf = normalize(Word(spec, syl));
    mismatches += in_kernel_kp0(nf) != all_zero;
    mismatches += in_kernel_kpf(nf) != finite_zero;
    kp0_members += all_zero;
    kpf_members += finite_zero;
  }

  const auto fig = make_spec(parse_group_spec("n 3 a b c\ne a b\ne b c\no a 3\no b inf\no c 4\n"));
  const auto gb = normalize(Word::parse(fig, "b"));
  const bool gb_ok = in_kernel_kpf(gb) && !in_kernel_kp0(gb);
  std::set<std::pair<Exponent, Exponent>> cosets;
  const auto ball = enumerate_elements(fig, 6);
  for (const auto& x : ball) cosets.emplace(project(x.word(), 0), project(x.word(), 2));
  bool kernel_cosets_ok = true;
  for (const auto& x : ball) {
    const bool trivial = project(x.word(), 0) == 0 && project(x.word(), 2) == 0;
    kernel_cosets_ok = kernel_cosets_ok && in_kernel_kpf(x) == trivial;
  }

  Result r;
  r.pass = mismatches == 0 && gb_ok && cosets.size() == 12 && kernel_cosets_ok;
  r.detail = "10000 words, " + std::to_string(mismatches) + " mismatches (" + std::to_string(kp0_members) +
             " in KP0, " + std::to_string(kpf_members) + " in KPf); g_b in KPf\\KP0: " + (gb_ok ? "yes" : "no") +
             "; finite-part cosets hit by a ball of " + std::to_string(ball.size()) + ": " +
             std::to_string(cosets.size());
  return r;
}

}  // namespace acceptance

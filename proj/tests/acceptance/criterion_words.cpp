#include "acceptance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gpw/catalog.hpp"
#include "gpw/words.hpp"
#include "oracles.hpp"

namespace acceptance {

namespace {

using namespace gpw;

const Order kOrders[] = {Order::finite(2), Order::finite(3), Order::infinite()};

// Order assignments over {2, 3, inf} up to automorphisms of g.
std::vector<std::vector<Order>> order_classes(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> autos;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && g.adjacent(perm[u], perm[v]);
    if (ok) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::vector<int>> seen;
  std::vector<std::vector<Order>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t c = 0; c < total; ++c) {
    std::vector<int> digits(n);
    for (std::size_t i = 0, x = c; i < n; ++i, x /= 3) digits[i] = static_cast<int>(x % 3);
    std::vector<int> key = digits;
    for (const auto& a : autos) {
      std::vector<int> image(n);
      for (std::size_t i = 0; i < n; ++i) image[i] = digits[a[i]];
      key = std::min(key, image);
    }
    if (!seen.insert(key).second) continue;
    std::vector<Order> orders;
    for (int d : key) orders.push_back(kOrders[d]);
    out.push_back(std::move(orders));
  }
  return out;
}

Word to_word(const SpecPtr& spec, const std::vector<oracle::Syl>& w) {
  std::vector<Syllable> syl;
  syl.reserve(w.size());
  for (auto s : w) syl.push_back({static_cast<std::size_t>(s.vertex), s.exponent});
  return Word(spec, std::move(syl));
}

std::uint64_t pack(const NormalForm& nf) {
  std::vector<oracle::Syl> w;
  for (const auto& s : nf.syllables()) w.push_back({static_cast<int>(s.vertex), s.exponent.convert_to<int>()});
  return oracle::pack(w);
}

}  // namespace

Result normal_form_soundness() {
  std::size_t specs = 0;
  std::size_t words = 0;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::string first_failure;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (const auto& orders : order_classes(g)) {
        ++specs;
        const auto spec = make_spec(GroupSpec(g, orders));
        const oracle::Group og(*spec);
        const auto alphabet = oracle::letters(og);
        for (std::size_t len = 0; len <= 5; ++len) {
          oracle::for_each_word(alphabet, len, [&](const std::vector<oracle::Syl>& w) {
            ++words;
            const auto nf = normalize(to_word(spec, w));
            if (pack(nf) != oracle::shuffle_closure_min(og, w) && failures++ == 0) {
              first_failure = "normal form of '" + to_word(spec, w).str() + "'";
            }
          });
        }
        // Confluence over words of length <= 3. The right-hand side only
        // depends on the two normal forms, so it is tabulated per pair of
        // distinct elements.
        std::vector<std::vector<oracle::Syl>> short_words;
        for (std::size_t len = 0; len <= 3; ++len) {
          oracle::for_each_word(alphabet, len, [&](const std::vector<oracle::Syl>& w) { short_words.push_back(w); });
        }
        std::map<NormalForm, std::size_t> ids;
        std::vector<NormalForm> elements;
        std::vector<std::size_t> id_of;
        for (const auto& w : short_words) {
          auto nf = normalize(to_word(spec, w));
          auto [it, fresh] = ids.emplace(nf, elements.size());
          if (fresh) elements.push_back(nf);
          id_of.push_back(it->second);
        }
        const std::size_t e = elements.size();
        std::vector<std::optional<NormalForm>> rhs(e * e);
        std::vector<Syllable> buffer;
        for (std::size_t i = 0; i < short_words.size(); ++i) {
          for (std::size_t j = 0; j < short_words.size(); ++j) {
            ++pairs;
            buffer.clear();
            for (auto s : short_words[i]) buffer.push_back({static_cast<std::size_t>(s.vertex), s.exponent});
            for (auto s : short_words[j]) buffer.push_back({static_cast<std::size_t>(s.vertex), s.exponent});
            const auto lhs = normalize(Word(spec, buffer));
            auto& slot = rhs[id_of[i] * e + id_of[j]];
            if (!slot) slot = normalize(elements[id_of[i]].word().concat(elements[id_of[j]].word()));
            if (!(lhs == *slot) && failures++ == 0) {
              first_failure = "confluence for '" + to_word(spec, short_words[i]).str() + "' * '" +
                              to_word(spec, short_words[j]).str() + "'";
            }
          }
        }
      }
    }
  }
  std::string detail = std::to_string(specs) + " specs, " + std::to_string(words) + " words vs shuffle oracle, " +
                       std::to_string(pairs) + " confluence pairs";
  if (failures > 0) detail += ", " + std::to_string(failures) + " failures, first: " + first_failure;
  return {failures == 0, detail};
}

}  // namespace acceptance

#include "gpw/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gpw/io.hpp"

namespace gpw {

namespace {

void reduce_in_place(const GroupSpec& spec, std::size_t v, Exponent& e) {
  const Order m = spec.order(v);
  if (m.is_infinite()) return;
  if (e >= 0) {
    if (e < m.value()) return;
    e -= m.value();
    if (e < m.value()) return;
  } else {
    e += m.value();
    if (e >= 0) return;
  }
  const Exponent mod(m.value());
  e %= mod;
  if (e < 0) e += mod;
}

Exponent reduce_exponent(const GroupSpec& spec, std::size_t v, Exponent e) {
  reduce_in_place(spec, v, e);
  return e;
}

void require_same_spec(const Word& a, const Word& b) {
  if (!Word::same_spec(a, b)) throw std::invalid_argument("words over different specs");
}

bool dependent(const GroupSpec& spec, std::size_t u, std::size_t v) {
  return u == v || !spec.commute(u, v);
}

// Left-to-right insertion: each syllable travels left past commuting
// syllables and merges with the first syllable on its own vertex.
void reduce(const Word& w, std::vector<Syllable>& out) {
  const GroupSpec& spec = w.group();
  out.clear();
  for (const Syllable& s : w.syllables()) {
    bool merged = false;
    for (std::size_t i = out.size(); i > 0; --i) {
      Syllable& x = out[i - 1];
      if (x.vertex == s.vertex) {
        x.exponent += s.exponent;
        reduce_in_place(spec, s.vertex, x.exponent);
        if (x.exponent == 0) out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
        merged = true;
        break;
      }
      if (!spec.commute(x.vertex, s.vertex)) break;
    }
    if (!merged) out.push_back(s);
  }
}

std::vector<Syllable> least_linearization_long(const GroupSpec& spec, std::vector<Syllable>& syl) {
  const std::size_t n = syl.size();
  std::vector<std::size_t> waiting(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (dependent(spec, syl[i].vertex, syl[j].vertex)) ++waiting[j];
    }
  }
  std::vector<bool> done(n, false);
  std::vector<Syllable> out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j] || waiting[j] != 0) continue;
      if (best == n || syl[j] < syl[best]) best = j;
    }
    done[best] = true;
    for (std::size_t j = best + 1; j < n; ++j) {
      if (!done[j] && dependent(spec, syl[best].vertex, syl[j].vertex)) --waiting[j];
    }
    out.push_back(std::move(syl[best]));
  }
  return out;
}


// Least linearization of the dependence order: repeatedly emit the smallest
// syllable whose dependent predecessors are all emitted.
std::vector<Syllable> least_linearization(const GroupSpec& spec, std::vector<Syllable>& syl) {
  const std::size_t n = syl.size();
  if (n > 64) return least_linearization_long(spec, syl);
  std::uint64_t before[64];
  for (std::size_t j = 0; j < n; ++j) {
    before[j] = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (dependent(spec, syl[i].vertex, syl[j].vertex)) before[j] |= std::uint64_t{1} << i;
    }
  }
  std::uint64_t done = 0;
  std::vector<Syllable> out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if ((done >> j & 1U) || (before[j] & ~done) != 0) continue;
      if (best == n || syl[j] < syl[best]) best = j;
    }
    done |= std::uint64_t{1} << best;
    out.push_back(std::move(syl[best]));
  }
  return out;
}

}  // namespace

std::strong_ordering operator<=>(const Syllable& a, const Syllable& b) {
  if (auto c = a.vertex <=> b.vertex; c != 0) return c;
  if (a.exponent < b.exponent) return std::strong_ordering::less;
  if (b.exponent < a.exponent) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Word::Word(SpecPtr spec, std::vector<Syllable> syllables) : spec_(std::move(spec)) {
  if (!spec_) throw std::invalid_argument("word without a spec");
  syllables_.reserve(syllables.size());
  for (auto& s : syllables) {
    if (s.vertex >= spec_->size()) throw std::invalid_argument("syllable vertex out of range");
    s.exponent = reduce_exponent(*spec_, s.vertex, std::move(s.exponent));
    if (s.exponent != 0) syllables_.push_back(std::move(s));
  }
}

Word::Word(Trusted, SpecPtr spec, std::vector<Syllable> syllables)
    : spec_(std::move(spec)), syllables_(std::move(syllables)) {}

Word Word::generator(SpecPtr spec, std::size_t vertex, Exponent exponent) {
  return Word(std::move(spec), {Syllable{vertex, std::move(exponent)}});
}

Word Word::parse(SpecPtr spec, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Syllable> syl;
  std::string tok;
  while (in >> tok) {
    std::string label = tok;
    Exponent e = 1;
    if (auto caret = tok.rfind('^'); caret != std::string::npos) {
      label = tok.substr(0, caret);
      const std::string num = tok.substr(caret + 1);
      const bool sign = !num.empty() && (num[0] == '-' || num[0] == '+');
      if (num.size() == (sign ? 1U : 0U) ||
          !std::all_of(num.begin() + (sign ? 1 : 0), num.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("bad exponent in '" + tok + "'");
      }
      e = Exponent(num[0] == '+' ? num.substr(1) : num);
    }
    auto v = spec->graph().find(label);
    if (!v) throw ParseError("unknown vertex '" + label + "' in word");
    syl.push_back({*v, std::move(e)});
  }
  return Word(std::move(spec), std::move(syl));
}

Word Word::concat(const Word& other) const {
  require_same_spec(*this, other);
  std::vector<Syllable> syl = syllables_;
  syl.insert(syl.end(), other.syllables_.begin(), other.syllables_.end());
  return Word(spec_, std::move(syl));
}

Word Word::formal_inverse() const {
  std::vector<Syllable> syl(syllables_.rbegin(), syllables_.rend());
  for (auto& s : syl) s.exponent = -s.exponent;
  return Word(spec_, std::move(syl));
}

std::string Word::str() const {
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += spec_->graph().label(s.vertex);
    if (s.exponent != 1) out += '^' + s.exponent.str();
  }
  return out;
}

bool Word::same_spec(const Word& a, const Word& b) {
  return a.spec_ == b.spec_ || *a.spec_ == *b.spec_;
}

std::strong_ordering operator<=>(const NormalForm& a, const NormalForm& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (auto c = a.syllables()[i] <=> b.syllables()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

NormalForm normalize(const Word& w) {
  thread_local std::vector<Syllable> scratch;
  reduce(w, scratch);
  return NormalForm(Word(Word::Trusted{}, w.spec(), least_linearization(w.group(), scratch)));
}

NormalForm identity_element(SpecPtr spec) { return normalize(Word(std::move(spec))); }

NormalForm multiply(const NormalForm& u, const NormalForm& v) {
  return normalize(u.word().concat(v.word()));
}

NormalForm invert(const NormalForm& u) { return normalize(u.word().formal_inverse()); }

NormalForm power(const NormalForm& u, long long k) {
  NormalForm base = k < 0 ? invert(u) : u;
  unsigned long long n = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  NormalForm result = identity_element(u.spec());
  while (n > 0) {
    if (n & 1ULL) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

bool equal(const Word& u, const Word& v) {
  require_same_spec(u, v);
  return normalize(u.formal_inverse().concat(v)).is_identity();
}

Exponent project(const Word& w, std::size_t vertex) {
  if (vertex >= w.group().size()) throw std::invalid_argument("unknown vertex");
  Exponent sum = 0;
  for (const auto& s : w.syllables()) {
    if (s.vertex == vertex) sum += s.exponent;
  }
  return reduce_exponent(w.group(), vertex, std::move(sum));
}

namespace {

bool kernel_condition(const NormalForm& w, VertexMask vertices) {
  const GroupSpec& spec = w.word().group();
  std::vector<Exponent> product(spec.size());
  for (const auto& s : w.syllables()) product[s.vertex] += s.exponent;
  for (std::size_t v = 0; v < spec.size(); ++v) {
    if ((vertices >> v & 1U) && reduce_exponent(spec, v, product[v]) != 0) return false;
  }
  return true;
}

}  // namespace

bool in_kernel_kp0(const NormalForm& w) { return kernel_condition(w, w.word().group().graph().all_vertices()); }

bool in_kernel_kpf(const NormalForm& w) { return kernel_condition(w, w.word().group().finite_part()); }

bool satisfies_reduced_conditions(const Word& w) {
  const GroupSpec& spec = w.group();
  const auto& syl = w.syllables();
  for (std::size_t i = 0; i < syl.size(); ++i) {
    if (syl[i].exponent == 0) return false;
    const Order m = spec.order(syl[i].vertex);
    if (m.is_finite() && (syl[i].exponent < 0 || syl[i].exponent >= m.value())) return false;
    if (i + 1 < syl.size() && syl[i].vertex == syl[i + 1].vertex) return false;
    for (std::size_t k = i + 1; k < syl.size(); ++k) {
      if (syl[k].vertex != syl[i].vertex) continue;
      bool separated = false;
      for (std::size_t j = i + 1; j < k && !separated; ++j) {
        separated = syl[j].vertex != syl[i].vertex && !spec.commute(syl[i].vertex, syl[j].vertex);
      }
      if (!separated) return false;
      break;
    }
  }
  return true;
}

CyclicReduction cyclically_reduce(const NormalForm& w) {
  const SpecPtr& spec = w.spec();
  NormalForm current = w;
  NormalForm conjugator = identity_element(spec);
  for (;;) {
    const auto& syl = current.syllables();
    const std::size_t n = syl.size();
    // first[i]: no dependent syllable precedes i; last[i]: none follows.
    std::vector<bool> first(n, true), last(n, true);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (dependent(*spec, syl[i].vertex, syl[j].vertex)) {
          first[j] = false;
          last[i] = false;
        }
      }
    }
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!first[i]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && last[k] && syl[k].vertex == syl[i].vertex) {
          if (pick == n || syl[i] < syl[pick]) pick = i;
        }
      }
    }
    if (pick == n) return {current, conjugator};
    const Word s = Word::generator(spec, syl[pick].vertex, syl[pick].exponent);
    current = normalize(s.formal_inverse().concat(current.word()).concat(s));
    conjugator = normalize(conjugator.word().concat(s));
  }
}

Exponent generator_length(const NormalForm& w) {
  const GroupSpec& spec = w.word().group();
  Exponent total = 0;
  for (const auto& s : w.syllables()) {
    const Order m = spec.order(s.vertex);
    if (m.is_infinite()) {
      total += s.exponent < 0 ? Exponent(-s.exponent) : s.exponent;
    } else {
      const Exponent other = Exponent(m.value()) - s.exponent;
      total += std::min(s.exponent, other);
    }
  }
  return total;
}

std::vector<NormalForm> enumerate_elements(const SpecPtr& spec, std::size_t max_len, std::size_t cap) {
  std::vector<Word> gens;
  for (std::size_t v = 0; v < spec->size(); ++v) {
    gens.push_back(Word::generator(spec, v, 1));
    if (spec->order(v).is_infinite() || spec->order(v).value() > 2) gens.push_back(Word::generator(spec, v, -1));
  }
  std::set<NormalForm> seen = {identity_element(spec)};
  std::vector<NormalForm> out = {identity_element(spec)};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    std::set<NormalForm> layer;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& g : gens) {
        NormalForm x = normalize(out[i].word().concat(g));
        if (seen.count(x) == 0) layer.insert(std::move(x));
      }
    }
    if (seen.size() + layer.size() > cap) throw std::length_error("element ball exceeds the cap");
    for (const auto& x : layer) {
      seen.insert(x);
      out.push_back(x);
    }
    layer_begin = layer_end;
    if (layer.empty()) break;
  }
  return out;
}

}  // namespace gpw

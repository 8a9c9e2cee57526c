#include "gpw/embeddings.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gpw/io.hpp"

namespace gpw {

namespace {

std::size_t vertex_of(const SimpleGraph& g, std::string_view label) {
  auto v = g.find(label);
  if (!v) throw std::invalid_argument("unknown vertex '" + std::string(label) + "'");
  return *v;
}

void check_orders(const SimpleGraph& g, const std::vector<Order>& orders) {
  if (orders.size() != g.size()) throw std::invalid_argument("need one order per vertex");
}

Word conjugate(const SpecPtr& spec, std::size_t t, std::size_t x, const Exponent& e, Conjugation conj) {
  const Exponent s = conj == Conjugation::kStandard ? 1 : -1;
  return Word(spec, {{t, s}, {x, e}, {t, -s}});
}

std::string identity_or(const NormalForm& x) { return x.is_identity() ? "1" : x.str(); }

}  // namespace

HomomorphismSpec double_homomorphism(const SimpleGraph& g, std::string_view t, const std::vector<Order>& orders,
                                     Conjugation conj) {
  check_orders(g, orders);
  const std::size_t tv = vertex_of(g, t);
  auto d = double_along_link(g, t);
  HomomorphismSpec h;
  h.target = make_spec(GroupSpec(g, orders));
  std::vector<Order> pulled;
  for (auto r : d.retraction) pulled.push_back(orders[r]);
  h.source = make_spec(GroupSpec(std::move(d.graph), std::move(pulled)));
  const auto& src = h.source->graph();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::size_t r = d.retraction[i];
    if (src.label(i) == g.label(r)) {
      h.images.push_back(Word::generator(h.target, r));
    } else {
      h.images.push_back(conjugate(h.target, tv, r, 1, conj));
    }
  }
  return h;
}

HomomorphismSpec co_contraction_embedding(const SimpleGraph& g, std::string_view x, std::string_view t,
                                          const std::vector<Order>& orders, std::optional<Order> y_order,
                                          Conjugation conj) {
  check_orders(g, orders);
  const std::size_t xv = vertex_of(g, x);
  const std::size_t tv = vertex_of(g, t);
  if (xv == tv || g.adjacent(xv, tv)) throw std::invalid_argument("{x, t} must be an edge of the opposite graph");
  if (y_order && *y_order != orders[xv]) {
    throw std::invalid_argument("the merged vertex must carry the order of '" + std::string(x) + "'");
  }
  auto contracted = co_contract(g, x, t);
  HomomorphismSpec h;
  h.target = make_spec(GroupSpec(g, orders));
  std::vector<Order> src_orders;
  std::vector<Word> images;
  for (std::size_t i = 0; i < contracted.size(); ++i) {
    auto v = g.find(contracted.label(i));
    if (v) {
      src_orders.push_back(orders[*v]);
      images.push_back(Word::generator(h.target, *v));
    } else {
      src_orders.push_back(orders[xv]);
      images.push_back(conjugate(h.target, tv, xv, 1, conj));
    }
  }
  h.source = make_spec(GroupSpec(std::move(contracted), std::move(src_orders)));
  h.images = std::move(images);
  return h;
}

HomomorphismSpec identity_homomorphism(const SpecPtr& spec) {
  HomomorphismSpec h{spec, spec, {}, false};
  for (std::size_t v = 0; v < spec->size(); ++v) h.images.push_back(Word::generator(spec, v));
  return h;
}

NormalForm apply(const HomomorphismSpec& h, const Word& w) {
  if (!(*w.spec() == *h.source)) throw std::invalid_argument("word is not over the source spec");
  std::vector<Syllable> out;
  for (const auto& s : w.syllables()) {
    const auto& img = h.images.at(s.vertex).syllables();
    if (img.size() == 1) {
      out.push_back({img[0].vertex, img[0].exponent * s.exponent});
      continue;
    }
    Exponent e = s.exponent;
    const bool neg = e < 0;
    if (neg) e = -e;
    const auto piece = neg ? h.images[s.vertex].formal_inverse() : h.images[s.vertex];
    // finite exponents are already reduced, so this stays small
    if (e > 64) {
      auto p = normalize(piece);
      auto acc = identity_element(h.target);
      for (Exponent k = e; k > 0; k >>= 1) {
        if ((k & 1) != 0) acc = multiply(acc, p);
        p = multiply(p, p);
      }
      out.insert(out.end(), acc.syllables().begin(), acc.syllables().end());
      continue;
    }
    for (Exponent k = 0; k < e; ++k) out.insert(out.end(), piece.syllables().begin(), piece.syllables().end());
  }
  return normalize(Word(h.target, std::move(out)));
}

HomomorphismSpec compose(const HomomorphismSpec& first, const HomomorphismSpec& second) {
  if (!(*first.target == *second.source)) throw std::invalid_argument("maps do not compose");
  HomomorphismSpec h{first.source, second.target, {}, false};
  for (const auto& img : first.images) {
    h.images.push_back(apply(second, Word(second.source, img.syllables())).word());
  }
  return h;
}

RelatorReport relator_check(const HomomorphismSpec& h) {
  RelatorReport r;
  const auto& src = *h.source;
  const auto& g = src.graph();
  if (h.images.size() != src.size()) {
    r.pass = false;
    r.failures.push_back("missing images");
    return r;
  }
  for (const auto& img : h.images) {
    if (!(*img.spec() == *h.target)) throw std::invalid_argument("image is not over the target spec");
  }
  for (std::size_t v = 0; v < src.size(); ++v) {
    if (src.order(v).is_infinite()) continue;
    const Exponent m = src.order(v).value();
    if (!power(normalize(h.images[v]), static_cast<long long>(m)).is_identity()) {
      r.failures.push_back(g.label(v) + "^" + src.order(v).str());
    }
  }
  for (auto [u, w] : g.edges()) {
    const auto a = normalize(h.images[u]);
    const auto b = normalize(h.images[w]);
    if (!(multiply(a, b) == multiply(b, a))) r.failures.push_back("[" + g.label(u) + "," + g.label(w) + "]");
  }
  r.pass = r.failures.empty();
  return r;
}

RelatorReport relator_check(HomomorphismSpec& h) {
  auto r = relator_check(static_cast<const HomomorphismSpec&>(h));
  h.verified = r.pass;
  return r;
}

InjectivityReport injectivity_sample(const HomomorphismSpec& h, std::size_t radius, std::size_t cap) {
  InjectivityReport r;
  r.radius = radius;
  std::map<NormalForm, NormalForm> seen;
  for (const auto& x : enumerate_elements(h.source, radius, cap)) {
    ++r.checked;
    auto [it, fresh] = seen.emplace(apply(h, x.word()), x);
    if (!fresh) {
      r.collision.emplace(it->second, x);
      return r;
    }
  }
  return r;
}

InjectivityReport injectivity_random(const HomomorphismSpec& h, std::size_t radius, std::size_t samples,
                                     std::uint64_t seed) {
  InjectivityReport r;
  r.radius = radius;
  const std::size_t n = h.source->size();
  if (n == 0) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, radius);
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  std::map<NormalForm, NormalForm> seen;
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Syllable> syl;
    for (std::size_t k = len(rng); k > 0; --k) syl.push_back({vertex(rng), (rng() & 1U) ? 1 : -1});
    const auto x = normalize(Word(h.source, std::move(syl)));
    ++r.checked;
    auto [it, fresh] = seen.emplace(apply(h, x.word()), x);
    if (!fresh && !(it->second == x)) {
      r.collision.emplace(std::min(it->second, x), std::max(it->second, x));
      return r;
    }
  }
  return r;
}

std::string report_line(const RelatorReport& r) {
  if (r.pass) return "relators: PASS";
  std::string out = "relators: FAIL[";
  for (std::size_t i = 0; i < r.failures.size(); ++i) out += (i ? ", " : "") + r.failures[i];
  return out + "]";
}

std::string report_line(const InjectivityReport& r) {
  std::string out = "injectivity(L=" + std::to_string(r.radius) + "): ";
  if (r.pass()) return out + "PASS";
  return out + "FAIL(" + identity_or(r.collision->first) + "," + identity_or(r.collision->second) + ")";
}

void write_homomorphism(std::ostream& out, const HomomorphismSpec& h) {
  out << "source\n";
  write_group_spec(out, *h.source);
  out << "target\n";
  write_group_spec(out, *h.target);
  for (std::size_t v = 0; v < h.images.size(); ++v) {
    out << "im " << h.source->graph().label(v);
    if (!h.images[v].empty()) out << ' ' << h.images[v].str();
    out << '\n';
  }
}

HomomorphismSpec read_homomorphism(std::istream& in) {
  std::vector<Record> blocks[2];
  std::vector<Record> ims;
  int current = -1;
  for (auto& r : read_records(in)) {
    if (r[0] == "source" || r[0] == "target") {
      if (r.size() != 1) throw ParseError("'" + r[0] + "' takes no arguments");
      current = r[0] == "source" ? 0 : 1;
    } else if (r[0] == "im") {
      ims.push_back(std::move(r));
    } else if (current < 0) {
      throw ParseError("spec line before 'source' or 'target'");
    } else {
      blocks[current].push_back(std::move(r));
    }
  }
  if (blocks[0].empty() || blocks[1].empty()) throw ParseError("need both a source and a target block");
  HomomorphismSpec h;
  h.source = make_spec(spec_from_records(blocks[0]));
  h.target = make_spec(spec_from_records(blocks[1]));
  std::vector<std::optional<Word>> images(h.source->size());
  for (const auto& r : ims) {
    if (r.size() < 2) throw ParseError("'im' needs a source vertex");
    auto v = h.source->graph().find(r[1]);
    if (!v) throw ParseError("unknown source vertex '" + r[1] + "'");
    if (images[*v]) throw ParseError("duplicate image for '" + r[1] + "'");
    std::string text;
    for (std::size_t i = 2; i < r.size(); ++i) text += (i > 2 ? " " : "") + r[i];
    images[*v] = Word::parse(h.target, text);
  }
  for (std::size_t v = 0; v < images.size(); ++v) {
    if (!images[v]) throw ParseError("no image for '" + h.source->graph().label(v) + "'");
    h.images.push_back(std::move(*images[v]));
  }
  return h;
}

HomomorphismSpec parse_homomorphism(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_homomorphism(in);
}

}  // namespace gpw

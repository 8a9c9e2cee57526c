#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpw/words.hpp"

namespace gpw {

/// A map of generators: images[v] is the target word for source vertex v.
/// It defines a homomorphism when relator_check passes.
struct HomomorphismSpec {
  SpecPtr source;
  SpecPtr target;
  std::vector<Word> images;
  bool verified = false;
};

/// Which conjugate stands for the copied generator: t x t^-1 or t^-1 x t.
enum class Conjugation { kStandard, kMirror };

/// Source: the double of g minus t along lk(t), orders pulled back along the
/// retraction. First-copy vertices map to themselves, second-copy vertices
/// u' to t u t^-1 (or the mirror conjugate). Throws std::invalid_argument
/// for an unknown vertex or a wrong number of orders.
HomomorphismSpec double_homomorphism(const SimpleGraph& g, std::string_view t, const std::vector<Order>& orders,
                                     Conjugation conj = Conjugation::kStandard);

/// Source: co_contract(g, x, t) with the merged vertex y carrying the order
/// of x. y maps to t x t^-1 (or the mirror conjugate), every other vertex to
/// itself. Throws std::invalid_argument when {x, t} is an edge of g, or when
/// y_order is given and differs from the order of x.
HomomorphismSpec co_contraction_embedding(const SimpleGraph& g, std::string_view x, std::string_view t,
                                          const std::vector<Order>& orders,
                                          std::optional<Order> y_order = std::nullopt,
                                          Conjugation conj = Conjugation::kStandard);

HomomorphismSpec identity_homomorphism(const SpecPtr& spec);

/// first followed by second; throws std::invalid_argument unless the target
/// of first is the source of second.
HomomorphismSpec compose(const HomomorphismSpec& first, const HomomorphismSpec& second);

/// Image of a source word.
NormalForm apply(const HomomorphismSpec& h, const Word& w);

struct RelatorReport {
  bool pass = true;
  std::vector<std::string> failures;  // "a^3" or "[a,b]"
};

/// Every source relator (v^m for finite m, [u,w] for each edge) must map to
/// the identity. Sets h.verified on success.
RelatorReport relator_check(HomomorphismSpec& h);
RelatorReport relator_check(const HomomorphismSpec& h);

struct InjectivityReport {
  std::size_t radius = 0;
  std::size_t checked = 0;
  std::optional<std::pair<NormalForm, NormalForm>> collision;
  bool pass() const { return !collision; }
};

/// Compares the images of all source elements of generator length <= L.
/// Throws std::length_error when the ball exceeds cap.
InjectivityReport injectivity_sample(const HomomorphismSpec& h, std::size_t radius,
                                     std::size_t cap = 2'000'000);

/// Same check on `samples` random letter words of length <= radius drawn
/// from a generator seeded with `seed`, for balls too large to enumerate.
InjectivityReport injectivity_random(const HomomorphismSpec& h, std::size_t radius, std::size_t samples,
                                     std::uint64_t seed);

/// "relators: PASS" or "relators: FAIL[<failure>, ...]".
std::string report_line(const RelatorReport& r);
/// "injectivity(L=k): PASS" or "injectivity(L=k): FAIL(u,v)"; the identity
/// prints as 1.
std::string report_line(const InjectivityReport& r);

// Homomorphism file:
//   source
//   <spec lines>
//   target
//   <spec lines>
//   im <source-vertex> <target word>
void write_homomorphism(std::ostream& out, const HomomorphismSpec& h);
HomomorphismSpec read_homomorphism(std::istream& in);
HomomorphismSpec parse_homomorphism(std::string_view text);

}  // namespace gpw

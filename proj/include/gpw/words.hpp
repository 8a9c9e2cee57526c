#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpw/group_spec.hpp"

namespace gpw {

using Exponent = boost::multiprecision::cpp_int;

struct Syllable {
  std::size_t vertex = 0;
  Exponent exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  /// Vertex index first, then exponent.
  friend std::strong_ordering operator<=>(const Syllable& a, const Syllable& b);
};

class NormalForm;

/// A product of vertex-group elements over a fixed spec. Exponents of
/// finite-order vertices are kept in 1..m-1 and zero syllables are dropped
/// on construction; adjacent syllables are otherwise left alone.
class Word {
 public:
  explicit Word(SpecPtr spec, std::vector<Syllable> syllables = {});

  /// Whitespace-separated syllables "v" or "v^e"; the empty string is the
  /// identity. Throws ParseError.
  static Word parse(SpecPtr spec, std::string_view text);
  static Word generator(SpecPtr spec, std::size_t vertex, Exponent exponent = 1);

  const SpecPtr& spec() const { return spec_; }
  const GroupSpec& group() const { return *spec_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }

  /// Concatenation without normalization.
  Word concat(const Word& other) const;
  /// Reversed syllables with inverted exponents.
  Word formal_inverse() const;

  /// Inverse of parse; the identity prints as the empty string.
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.syllables_ == b.syllables_ && same_spec(a, b);
  }

  static bool same_spec(const Word& a, const Word& b);

 private:
  friend NormalForm normalize(const Word& w);
  struct Trusted {};
  Word(Trusted, SpecPtr spec, std::vector<Syllable> syllables);

  SpecPtr spec_;
  std::vector<Syllable> syllables_;
};

/// Canonical representative of a group element: a reduced word (nonzero
/// exponents, no mergeable syllables) that is least in ShortLex order among
/// all reduced words for the element.
class NormalForm {
 public:
  const Word& word() const { return word_; }
  const SpecPtr& spec() const { return word_.spec(); }
  const std::vector<Syllable>& syllables() const { return word_.syllables(); }
  std::size_t length() const { return word_.length(); }
  bool is_identity() const { return word_.empty(); }
  std::string str() const { return word_.str(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.word_ == b.word_; }
  /// ShortLex on syllables; forms over different specs are not comparable.
  friend std::strong_ordering operator<=>(const NormalForm& a, const NormalForm& b);

 private:
  friend NormalForm normalize(const Word& w);
  explicit NormalForm(Word w) : word_(std::move(w)) {}
  Word word_;
};

NormalForm normalize(const Word& w);
NormalForm identity_element(SpecPtr spec);

/// Group operations; operands over different specs throw
/// std::invalid_argument.
NormalForm multiply(const NormalForm& u, const NormalForm& v);
NormalForm invert(const NormalForm& u);
NormalForm power(const NormalForm& u, long long k);
bool equal(const Word& u, const Word& v);

/// Image under the natural projection to the vertex group of v: the
/// exponent sum, reduced into 0..m-1 for finite order.
Exponent project(const Word& w, std::size_t vertex);

/// Every vertex-group product of the normal form is trivial.
bool in_kernel_kp0(const NormalForm& w);
/// As above, restricted to the finite-order vertices.
bool in_kernel_kpf(const NormalForm& w);

/// Conditions (i)-(iii) of a reduced word: nonzero exponents, consecutive
/// syllables on different vertices, and any two syllables on one vertex
/// separated by a syllable that does not commute with it.
bool satisfies_reduced_conditions(const Word& w);

struct CyclicReduction {
  NormalForm reduced;
  NormalForm conjugator;  // w = conjugator * reduced * conjugator^-1
};

CyclicReduction cyclically_reduce(const NormalForm& w);

/// Length over the generators {v, v^-1}: a syllable v^e counts
/// min(e, m - e) for finite m and |e| otherwise. Normal forms are geodesic,
/// so this is the word length of the element.
Exponent generator_length(const NormalForm& w);

/// All elements of generator length <= max_len, ordered by length and then
/// ShortLex. Throws std::length_error once more than `cap` elements appear.
std::vector<NormalForm> enumerate_elements(const SpecPtr& spec, std::size_t max_len,
                                           std::size_t cap = 2'000'000);

}  // namespace gpw

#pragma once

#include "torelli/matrix.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace torelli {

inline constexpr int kNumGenerators = 5;

struct Letter {
  int generator = 1;  // 1..5
  long exponent = 1;  // never zero in a stored word

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in the Dehn twists c1..c5.  Stored freely reduced: adjacent letters
/// with equal generator are merged and zero exponents dropped.
class MCGWord {
public:
  MCGWord() = default;
  explicit MCGWord(std::vector<Letter> letters);

  static MCGWord generator(int i, long exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }
  long exponent_sum() const;

  MCGWord inverse() const;
  MCGWord power(long n) const;
  MCGWord reduced() const { return *this; }

  friend MCGWord operator*(const MCGWord& a, const MCGWord& b);
  friend bool operator==(const MCGWord&, const MCGWord&) = default;

  /// Canonical text form accepted by `parse_word`, e.g. "c1 c2^-1".
  std::string to_string() const;

private:
  void append(Letter l);
  std::vector<Letter> letters_;
};

/// x y x^-1 y^-1
MCGWord commutator(const MCGWord& x, const MCGWord& y);

/// Grammar:
///   word  := atom+
///   atom  := base power?
///   base  := 'c' [1-5] | '(' word ')' | '[' word ',' word ']'
///   power := '^' signed-integer
/// Whitespace is ignored.  Throws PARSE_ERROR (with position) or BAD_GENERATOR.
MCGWord parse_word(std::string_view text);

/// Reads a catalog: one word expression per line, '#' starts a comment.
std::vector<std::string> read_catalog_lines(std::string_view contents);

/// Residue of the exponent sum mod 10 (the abelianization of the genus-2
/// mapping class group is Z/10, every twist generator mapping to 1).
int abelianization_class(const MCGWord& w);

/// Images of the generators and of their inverses.
template <class R>
struct GeneratorImages {
  std::vector<SquareMatrix<R>> gens;
  std::vector<SquareMatrix<R>> inverses;

  static GeneratorImages from_generators(std::vector<SquareMatrix<R>> gens) {
    GeneratorImages g;
    for (const auto& m : gens) g.inverses.push_back(inverse_unit_det(m));
    g.gens = std::move(gens);
    return g;
  }
  int dim() const { return gens.front().dim(); }
  R sample() const { return gens.front().sample(); }
};

template <class R>
SquareMatrix<R> power_of(const SquareMatrix<R>& m, long e) {
  SquareMatrix<R> result = SquareMatrix<R>::identity(m.dim(), m.sample());
  SquareMatrix<R> base = m;
  for (unsigned long n = static_cast<unsigned long>(e); n; n >>= 1) {
    if (n & 1) result = result * base;
    if (n > 1) base = base * base;
  }
  return result;
}

/// Ordered product of the generator images along the word.
template <class R>
SquareMatrix<R> evaluate_word(const MCGWord& w, const GeneratorImages<R>& images) {
  SquareMatrix<R> acc = SquareMatrix<R>::identity(images.dim(), images.sample());
  for (const auto& [gen, exp] : w.letters()) {
    const auto idx = static_cast<std::size_t>(gen - 1);
    const auto& m = exp > 0 ? images.gens.at(idx) : images.inverses.at(idx);
    const long n = exp > 0 ? exp : -exp;
    if (n <= 3) {
      for (long r = 0; r < n; ++r) acc = acc * m;
    } else {
      acc = acc * power_of(m, n);
    }
  }
  return acc;
}

}  // namespace torelli

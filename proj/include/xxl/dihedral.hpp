#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xxl {

enum class Symbol : std::uint8_t { a, b, t, u };

/// The three alphabets in play: the standard generators {a, b}, the odd
/// quotient presentation {t, u} and the even quotient presentation {a, t}.
enum class Alphabet : std::uint8_t { ab, tu, at };

char symbol_char(Symbol s);
std::string_view to_string(Alphabet alphabet);
bool alphabet_contains(Alphabet alphabet, Symbol s);

struct Letter {
  Symbol symbol = Symbol::a;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {symbol, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A signed-symbol sequence over one alphabet. Words are never reduced
/// implicitly; call freely_reduced() when a reduced form is wanted.
class Word {
 public:
  explicit Word(Alphabet alphabet = Alphabet::ab) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word& push_back(Letter l);
  Word& append(const Word& w);
  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word power(long k) const;
  Word freely_reduced() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Word consisting of `symbol^exponent`.
Word letter_power(Alphabet alphabet, Symbol symbol, long exponent);

/// Alternating word a b a b ... of length m over {a, b}, starting with `first`.
Word alternating_ab(Symbol first, int m);

enum class Parity : std::uint8_t { odd, even };

struct DihedralParams {
  int m = 5;
  Parity parity = Parity::odd;
  int p = 2;  // (m − 1)/2 when odd, m/2 when even

  /// Validates m ≥ 5.
  static DihedralParams make(int m);
  Alphabet quotient_alphabet() const { return parity == Parity::odd ? Alphabet::tu : Alphabet::at; }

  friend bool operator==(const DihedralParams&, const DihedralParams&) = default;
};

/// One syllable of the free-product normal form.
struct Syllable {
  Symbol symbol = Symbol::t;
  long exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Reduced syllable sequence in the central quotient: Z/m * Z/2 = <t> * <u>
/// for odd m, Z * Z/p = <a> * <t> for even m. Exponents are normalised to
/// 1..order−1 for finite factors; adjacent syllables alternate factors.
class NormalForm {
 public:
  NormalForm() = default;
  explicit NormalForm(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {}

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Two-way substitution between {a, b} and a quotient presentation.
struct SubstitutionTable {
  DihedralParams params;
  Alphabet quotient = Alphabet::tu;
  /// Images of a and b in the quotient alphabet.
  Word image_of_a{Alphabet::tu};
  Word image_of_b{Alphabet::tu};
  /// Images of the quotient generators in {a, b}: t and then u (odd) or a (even).
  Word image_of_t{Alphabet::ab};
  Word image_of_second{Alphabet::ab};
  /// HNN data for the even presentation: base <t>, associated subgroup <t^p>,
  /// stable letter a. Empty for odd m.
  std::string hnn_description;
};

/// <t, u | t^m = u^2> with t = ab, u = w_m(a, b); a = t^-p u, b = u t^-p.
SubstitutionTable odd_presentation(int m);
/// <a, t | a t^p = t^p a> with t = ab; b = a^-1 t.
SubstitutionTable even_presentation(int m);
SubstitutionTable presentation_for(const DihedralParams& params);

/// Letter-by-letter substitution into `target`; no reduction.
Word rewrite(const Word& word, const DihedralParams& params, Alphabet target);

std::optional<long> factor_order(const DihedralParams& params, Symbol s);

NormalForm syllable_normal_form(const Word& word, const DihedralParams& params);
NormalForm multiply(const NormalForm& x, const NormalForm& y, const DihedralParams& params);
NormalForm inverse(const NormalForm& x, const DihedralParams& params);
/// Removes a trailing syllable of the given symbol, if present.
NormalForm strip_trailing(const NormalForm& x, Symbol s);
std::string format_normal_form(const NormalForm& nf);

/// An element of I2(m) as an isometry of the tree-of-polygons times R: its
/// image in the central quotient and its translation n·α on the line.
struct IsometryRecord {
  NormalForm image;
  long translation = 0;

  bool is_identity() const { return image.empty() && translation == 0; }
  friend bool operator==(const IsometryRecord&, const IsometryRecord&) = default;
  friend auto operator<=>(const IsometryRecord&, const IsometryRecord&) = default;
};

IsometryRecord compose(const IsometryRecord& x, const IsometryRecord& y, const DihedralParams& params);

/// Exponent sum of a word over {a, b}.
long translation_on_r(const Word& word);
IsometryRecord act_on_cover(const Word& word, const DihedralParams& params);
/// Decides g = 1 in I2(m): zero exponent sum and trivial quotient image.
bool is_trivial(const Word& word, const DihedralParams& params);
/// t^m (odd) or t^p (even), written in {a, b} via t = ab.
Word center_generator(const DihedralParams& params);

/// Parses `a b a b a b^-1`, `(ab)^5 a (ab)^-5 a^-1` and similar. The alphabet
/// is inferred from the letters unless `expected` is given.
Word parse_word(std::string_view text, std::optional<Alphabet> expected = std::nullopt);
/// Compact rendering with exponents, e.g. `t^-2 u u t^-2`.
std::string format_word(const Word& word);

}  // namespace xxl

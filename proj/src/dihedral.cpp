#include "xxl/dihedral.hpp"

#include "xxl/presentation.hpp"

#include <cctype>
#include <stdexcept>

namespace xxl {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::a: return 'a';
    case Symbol::b: return 'b';
    case Symbol::t: return 't';
    case Symbol::u: return 'u';
  }
  return '?';
}

std::string_view to_string(Alphabet alphabet) {
  switch (alphabet) {
    case Alphabet::ab: return "{a,b}";
    case Alphabet::tu: return "{t,u}";
    case Alphabet::at: return "{a,t}";
  }
  return "?";
}

bool alphabet_contains(Alphabet alphabet, Symbol s) {
  switch (alphabet) {
    case Alphabet::ab: return s == Symbol::a || s == Symbol::b;
    case Alphabet::tu: return s == Symbol::t || s == Symbol::u;
    case Alphabet::at: return s == Symbol::a || s == Symbol::t;
  }
  return false;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(alphabet) {
  letters_.reserve(letters.size());
  for (auto l : letters) push_back(l);
}

Word& Word::push_back(Letter l) {
  if (!alphabet_contains(alphabet_, l.symbol)) {
    throw std::invalid_argument(std::string("letter '") + symbol_char(l.symbol) + "' not in alphabet " +
                                std::string(to_string(alphabet_)));
  }
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  letters_.push_back(l);
  return *this;
}

Word& Word::append(const Word& w) {
  if (w.alphabet_ != alphabet_ && !w.empty()) throw std::invalid_argument("alphabet mismatch in concatenation");
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  return *this;
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  out.append(rhs);
  return out;
}

Word Word::inverse() const {
  Word out(alphabet_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

Word Word::power(long k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out(alphabet_);
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out.append(base);
  return out;
}

Word Word::freely_reduced() const {
  Word out(alphabet_);
  for (auto l : letters_) {
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

Word letter_power(Alphabet alphabet, Symbol symbol, long exponent) {
  Word w(alphabet);
  const int sign = exponent < 0 ? -1 : 1;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) w.push_back({symbol, sign});
  return w;
}

Word alternating_ab(Symbol first, int m) {
  if (m < 0) throw std::invalid_argument("negative alternating word length");
  const Symbol second = first == Symbol::a ? Symbol::b : Symbol::a;
  Word w(Alphabet::ab);
  for (int i = 0; i < m; ++i) w.push_back({i % 2 == 0 ? first : second, 1});
  return w;
}

DihedralParams DihedralParams::make(int m) {
  if (m < 5) throw std::invalid_argument("dihedral label m must be >= 5, got " + std::to_string(m));
  DihedralParams params;
  params.m = m;
  params.parity = m % 2 ? Parity::odd : Parity::even;
  params.p = m % 2 ? (m - 1) / 2 : m / 2;
  return params;
}

SubstitutionTable odd_presentation(int m) {
  if (m < 5 || m % 2 == 0) throw std::invalid_argument("odd presentation needs odd m >= 5, got " + std::to_string(m));
  SubstitutionTable table;
  table.params = DihedralParams::make(m);
  table.quotient = Alphabet::tu;
  const int p = table.params.p;
  table.image_of_a = letter_power(Alphabet::tu, Symbol::t, -p) * letter_power(Alphabet::tu, Symbol::u, 1);
  table.image_of_b = letter_power(Alphabet::tu, Symbol::u, 1) * letter_power(Alphabet::tu, Symbol::t, -p);
  table.image_of_t = alternating_ab(Symbol::a, 2);
  table.image_of_second = alternating_ab(Symbol::a, m);
  return table;
}

SubstitutionTable even_presentation(int m) {
  if (m < 6 || m % 2 == 1) throw std::invalid_argument("even presentation needs even m >= 6, got " + std::to_string(m));
  SubstitutionTable table;
  table.params = DihedralParams::make(m);
  table.quotient = Alphabet::at;
  table.image_of_a = letter_power(Alphabet::at, Symbol::a, 1);
  table.image_of_b = letter_power(Alphabet::at, Symbol::a, -1) * letter_power(Alphabet::at, Symbol::t, 1);
  table.image_of_t = alternating_ab(Symbol::a, 2);
  table.image_of_second = letter_power(Alphabet::ab, Symbol::a, 1);
  table.hnn_description = "HNN extension of <t> = Z over the subgroup <t^" + std::to_string(table.params.p) +
                          "> with the identity map and stable letter a";
  return table;
}

SubstitutionTable presentation_for(const DihedralParams& params) {
  return params.parity == Parity::odd ? odd_presentation(params.m) : even_presentation(params.m);
}

Word rewrite(const Word& word, const DihedralParams& params, Alphabet target) {
  if (word.alphabet() == target) return word;
  const auto table = presentation_for(params);
  Word out(target);
  if (word.alphabet() == Alphabet::ab && target == table.quotient) {
    for (auto l : word.letters()) {
      const Word& img = l.symbol == Symbol::a ? table.image_of_a : table.image_of_b;
      out.append(l.sign > 0 ? img : img.inverse());
    }
    return out;
  }
  if (word.alphabet() == table.quotient && target == Alphabet::ab) {
    for (auto l : word.letters()) {
      const Word& img = l.symbol == Symbol::t ? table.image_of_t : table.image_of_second;
      out.append(l.sign > 0 ? img : img.inverse());
    }
    return out;
  }
  throw std::invalid_argument("cannot rewrite a word over " + std::string(to_string(word.alphabet())) + " into " +
                              std::string(to_string(target)) + " for m = " + std::to_string(params.m));
}

std::optional<long> factor_order(const DihedralParams& params, Symbol s) {
  if (params.parity == Parity::odd) {
    if (s == Symbol::t) return params.m;
    if (s == Symbol::u) return 2;
  } else {
    if (s == Symbol::t) return params.p;
    if (s == Symbol::a) return std::nullopt;
  }
  throw std::invalid_argument(std::string("symbol '") + symbol_char(s) + "' is not a quotient generator");
}

namespace {

long normalise_exponent(long e, std::optional<long> order) {
  if (!order) return e;
  long r = e % *order;
  return r < 0 ? r + *order : r;
}

void push_syllable(std::vector<Syllable>& stack, Syllable s, const DihedralParams& params) {
  const auto order = factor_order(params, s.symbol);
  s.exponent = normalise_exponent(s.exponent, order);
  if (s.exponent == 0) return;
  if (!stack.empty() && stack.back().symbol == s.symbol) {
    const long e = normalise_exponent(stack.back().exponent + s.exponent, order);
    if (e == 0) {
      stack.pop_back();
    } else {
      stack.back().exponent = e;
    }
    return;
  }
  stack.push_back(s);
}

}  // namespace

NormalForm syllable_normal_form(const Word& word, const DihedralParams& params) {
  if (word.alphabet() != params.quotient_alphabet()) {
    throw std::invalid_argument("normal form expects a word over " + std::string(to_string(params.quotient_alphabet())));
  }
  std::vector<Syllable> stack;
  for (auto l : word.letters()) push_syllable(stack, {l.symbol, l.sign}, params);
  return NormalForm(std::move(stack));
}

NormalForm multiply(const NormalForm& x, const NormalForm& y, const DihedralParams& params) {
  std::vector<Syllable> stack = x.syllables();
  for (const auto& s : y.syllables()) push_syllable(stack, s, params);
  return NormalForm(std::move(stack));
}

NormalForm inverse(const NormalForm& x, const DihedralParams& params) {
  std::vector<Syllable> stack;
  const auto& syl = x.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) push_syllable(stack, {it->symbol, -it->exponent}, params);
  return NormalForm(std::move(stack));
}

NormalForm strip_trailing(const NormalForm& x, Symbol s) {
  auto syl = x.syllables();
  if (!syl.empty() && syl.back().symbol == s) syl.pop_back();
  return NormalForm(std::move(syl));
}

std::string format_normal_form(const NormalForm& nf) {
  if (nf.empty()) return "1";
  std::string out;
  for (const auto& s : nf.syllables()) {
    if (!out.empty()) out += ' ';
    out += symbol_char(s.symbol);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

IsometryRecord compose(const IsometryRecord& x, const IsometryRecord& y, const DihedralParams& params) {
  return {multiply(x.image, y.image, params), x.translation + y.translation};
}

long translation_on_r(const Word& word) {
  if (word.alphabet() != Alphabet::ab) throw std::invalid_argument("translation_on_r expects a word over {a,b}");
  long n = 0;
  for (auto l : word.letters()) n += l.sign;
  return n;
}

IsometryRecord act_on_cover(const Word& word, const DihedralParams& params) {
  return {syllable_normal_form(rewrite(word, params, params.quotient_alphabet()), params), translation_on_r(word)};
}

bool is_trivial(const Word& word, const DihedralParams& params) { return act_on_cover(word, params).is_identity(); }

Word center_generator(const DihedralParams& params) {
  const int k = params.parity == Parity::odd ? params.m : params.p;
  return alternating_ab(Symbol::a, 2).power(k);
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<Letter> parse() {
    auto letters = sequence();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return letters;
  }

 private:
  std::vector<Letter> sequence() {
    std::vector<Letter> out;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      auto item = atom();
      long k = exponent();
      auto repeated = repeat(item, k);
      out.insert(out.end(), repeated.begin(), repeated.end());
    }
  }

  std::vector<Letter> atom() {
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = sequence();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    ++pos_;
    switch (c) {
      case 'a': return {{Symbol::a, 1}};
      case 'b': return {{Symbol::b, 1}};
      case 't': return {{Symbol::t, 1}};
      case 'u': return {{Symbol::u, 1}};
      default: --pos_; fail(std::string("unknown letter '") + c + "'");
    }
    return {};
  }

  long exponent() {
    std::size_t save = pos_;
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '^') {
      pos_ = save;
      return 1;
    }
    ++pos_;
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
    long k = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      k = k * 10 + (text_[pos_++] - '0');
      if (k > 1'000'000) fail("exponent too large");
    }
    return negative ? -k : k;
  }

  static std::vector<Letter> repeat(const std::vector<Letter>& item, long k) {
    std::vector<Letter> base;
    if (k < 0) {
      for (auto it = item.rbegin(); it != item.rend(); ++it) base.push_back(it->inverse());
      k = -k;
    } else {
      base = item;
    }
    std::vector<Letter> out;
    for (long i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("word syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::optional<Alphabet> expected) {
  auto letters = WordParser(text).parse();
  bool has[4] = {false, false, false, false};
  for (auto l : letters) has[static_cast<int>(l.symbol)] = true;
  Alphabet alphabet = Alphabet::ab;
  if (expected) {
    alphabet = *expected;
  } else if (has[static_cast<int>(Symbol::u)]) {
    alphabet = Alphabet::tu;
  } else if (has[static_cast<int>(Symbol::t)]) {
    alphabet = has[static_cast<int>(Symbol::a)] ? Alphabet::at : Alphabet::tu;
  }
  for (auto l : letters) {
    if (!alphabet_contains(alphabet, l.symbol)) {
      throw InputError(std::string("letter '") + symbol_char(l.symbol) + "' does not belong to alphabet " +
                       std::string(to_string(alphabet)));
    }
  }
  return Word(alphabet, std::move(letters));
}

std::string format_word(const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  const auto& ls = word.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long run = static_cast<long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += symbol_char(ls[i].symbol);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace xxl

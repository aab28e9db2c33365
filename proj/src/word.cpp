#include "torelli/word.hpp"

#include <cctype>
#include <sstream>

namespace torelli {

MCGWord::MCGWord(std::vector<Letter> letters) {
  for (const auto& l : letters) append(l);
}

MCGWord MCGWord::generator(int i, long exponent) {
  if (i < 1 || i > kNumGenerators) throw Error(ErrorCode::BadGenerator, "generator c" + std::to_string(i));
  return MCGWord({Letter{i, exponent}});
}

void MCGWord::append(Letter l) {
  if (l.generator < 1 || l.generator > kNumGenerators)
    throw Error(ErrorCode::BadGenerator, "generator c" + std::to_string(l.generator));
  if (l.exponent == 0) return;
  if (!letters_.empty() && letters_.back().generator == l.generator) {
    letters_.back().exponent += l.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

long MCGWord::exponent_sum() const {
  long s = 0;
  for (const auto& l : letters_) s += l.exponent;
  return s;
}

MCGWord MCGWord::inverse() const {
  MCGWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append({it->generator, -it->exponent});
  return w;
}

MCGWord MCGWord::power(long n) const {
  const MCGWord base = n >= 0 ? *this : inverse();
  MCGWord w;
  for (long i = 0; i < (n >= 0 ? n : -n); ++i) w = w * base;
  return w;
}

MCGWord operator*(const MCGWord& a, const MCGWord& b) {
  MCGWord w = a;
  for (const auto& l : b.letters_) w.append(l);
  return w;
}

std::string MCGWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'c' << letters_[i].generator;
    if (letters_[i].exponent != 1) os << '^' << letters_[i].exponent;
  }
  return os.str();
}

MCGWord commutator(const MCGWord& x, const MCGWord& y) { return x * y * x.inverse() * y.inverse(); }

int abelianization_class(const MCGWord& w) {
  const long r = w.exponent_sum() % 10;
  return static_cast<int>(r < 0 ? r + 10 : r);
}

namespace {

class WordParser {
public:
  explicit WordParser(std::string_view text) : text_(text) {}

  MCGWord parse() {
    MCGWord w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_space();
    return pos_ < text_.size() && (text_[pos_] == 'c' || text_[pos_] == '(' || text_[pos_] == '[');
  }

  MCGWord word() {
    if (!at_atom_start()) fail(pos_ < text_.size() ? "expected a generator, '(' or '['" : "unexpected end of input");
    MCGWord w;
    while (at_atom_start()) w = w * atom();
    return w;
  }

  MCGWord atom() {
    MCGWord base = base_word();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      base = base.power(signed_integer());
    }
    return base;
  }

  MCGWord base_word() {
    skip_space();
    const char c = text_[pos_];
    if (c == 'c') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected generator index after 'c'");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 3) throw Error(ErrorCode::BadGenerator, "c" + digits);
      const int idx = std::stoi(digits);
      if (idx < 1 || idx > kNumGenerators) throw Error(ErrorCode::BadGenerator, "c" + digits);
      return MCGWord::generator(idx);
    }
    if (c == '(') {
      ++pos_;
      MCGWord w = word();
      expect(')');
      return w;
    }
    ++pos_;  // '['
    MCGWord x = word();
    expect(',');
    MCGWord y = word();
    expect(']');
    return commutator(x, y);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long signed_integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    const long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return negative ? -v : v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MCGWord parse_word(std::string_view text) { return WordParser(text).parse(); }

std::vector<std::string> read_catalog_lines(std::string_view contents) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (!line.empty()) out.emplace_back(line);
    start = end + 1;
  }
  return out;
}

}  // namespace torelli

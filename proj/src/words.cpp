#include <cctype>
#include <string>

#include "isodec/covering.hpp"
#include "isodec/error.hpp"

namespace isodec {

namespace {

// word  := power ('*' power)*
// power := atom ('^' integer)?
// atom  := name | 'id' | '#' integer | '(' word ')'
class WordParser {
 public:
  WordParser(const FiniteGroup& group, std::string_view text) : group_(group), text_(text) {}

  Element parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty word");
    const Element g = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return g;
  }

 private:
  Element word() {
    Element g = power();
    for (skip_space(); peek() == '*'; skip_space()) {
      ++pos_;
      g = group_.mul(g, power());
    }
    return g;
  }

  Element power() {
    const Element base = atom();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    return group_.power(base, integer());
  }

  Element atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const Element g = word();
      skip_space();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return g;
    }
    if (c == '#') {
      ++pos_;
      const long long index = integer();
      if (index < 0 || std::size_t(index) >= group_.order())
        throw Error(Errc::InvalidElementIndex, "element index " + std::to_string(index) + " out of range");
      return Element(index);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "id") return 0;
      auto g = group_.generator(name);
      if (!g) throw Error(Errc::UnknownGenerator, "unknown generator '" + name + "'");
      return *g;
    }
    fail(c == '\0' ? "word ends early" : "unexpected '" + std::string(1, c) + "'");
  }

  long long integer() {
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = text_[pos_++] == '-';
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > (1LL << 40)) fail("exponent too large");
    }
    if (pos_ == start) fail("expected an integer");
    return negative ? -value : value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, "word '" + std::string(text_) + "': " + why);
  }

  const FiniteGroup& group_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_word(const FiniteGroup& group, std::string_view word) { return WordParser(group, word).parse(); }

}  // namespace isodec

#include "rtau/text.hpp"

#include <cctype>
#include <map>

#include "rtau/errors.hpp"

namespace rtau {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer natural() {
    if (!at_digit()) fail("expected a number");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, what + ", found end of input");
    throw ParseError(pos_, what + ", found '" + std::string(1, text_[pos_]) + "'");
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// term := integer | integer? '*'? 'x' ('^' natural)?
void term(Cursor& in, bool negative, std::map<unsigned long, Integer>& acc) {
  Integer c = 1;
  bool has_number = in.at_digit();
  if (has_number) c = in.natural();
  bool star = in.accept('*');
  if (in.accept('x')) {
    unsigned long power = 1;
    if (in.accept('^')) {
      Integer e = in.natural();
      if (!e.fits_ulong_p() || e > 100000) in.fail("exponent too large");
      power = e.get_ui();
    }
    acc[power] += negative ? Integer(-c) : c;
    return;
  }
  if (star || !has_number) in.fail("expected a term");
  acc[0] += negative ? Integer(-c) : c;
}

IntPoly ipoly(Cursor& in) {
  std::map<unsigned long, Integer> acc;
  bool negative = false;
  if (in.accept('-')) negative = true;
  else in.accept('+');
  term(in, negative, acc);
  while (true) {
    if (in.accept('+')) negative = false;
    else if (in.accept('-')) negative = true;
    else break;
    term(in, negative, acc);
  }
  std::vector<Integer> coeffs(acc.empty() ? 0 : acc.rbegin()->first + 1, Integer(0));
  for (const auto& [power, c] : acc) coeffs[power] = c;
  return IntPoly(std::move(coeffs));
}

}  // namespace

RTauElem parse_poly(std::string_view text) {
  Cursor in(text);
  IntPoly num;
  Integer den = 1;
  if (in.accept('(')) {
    num = ipoly(in);
    in.expect(')');
    in.expect('/');
    den = in.natural();
  } else {
    num = ipoly(in);
  }
  if (!in.done()) in.fail("unexpected trailing input");
  return RTauElem(std::move(num), den);
}

std::vector<DiffTuple> parse_diffs(std::string_view text) {
  Cursor in(text);
  std::vector<DiffTuple> out;
  do {
    std::vector<Integer> values{in.natural()};
    while (in.accept(',')) values.push_back(in.natural());
    out.emplace_back(std::move(values));
  } while (in.accept(';'));
  if (!in.done()) in.fail("expected ',' or ';'");
  return out;
}

}  // namespace rtau

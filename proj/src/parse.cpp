#include "wblow/parse.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "wblow/errors.hpp"

namespace wblow {

namespace {

struct RawTerm {
  Rational coeff;
  std::vector<std::pair<std::size_t, Exponent>> factors;  // (var, power)
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& declared)
      : text_(text), fixed_(!declared.empty()) {
    for (const auto& n : declared) {
      if (index_.count(n)) throw ArgumentError("variable '" + n + "' declared twice");
      index_.emplace(n, names_.size());
      names_.push_back(n);
    }
  }

  PolynomialSystem run(bool allow_list) {
    std::vector<std::vector<RawTerm>> raw;
    skip_all();
    if (at_end()) fail("empty input");
    while (true) {
      raw.push_back(parse_poly());
      skip_space();
      if (at_end()) break;
      if (allow_list && (is_separator(peek()) || peek() == '\n')) {
        skip_all();
        if (at_end()) break;
        continue;
      }
      if (!allow_list && is_space(peek())) {
        skip_all();
        if (at_end()) break;
      }
      fail(std::string("unexpected character '") + peek() + "'");
    }
    PolynomialSystem sys;
    sys.names = names_;
    for (auto& terms : raw) {
      Polynomial p(names_.size());
      for (auto& t : terms) {
        Monomial m(names_.size());
        for (auto [v, e] : t.factors) m[v] += e;
        p.add_term(m, t.coeff);
      }
      sys.polys.push_back(std::move(p));
    }
    return sys;
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  }
  static bool is_separator(char c) { return c == ',' || c == ';'; }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // Newlines separate list items, so inside a polynomial only horizontal
  // whitespace and comments are skipped, except right after a '+'/'-'.
  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n' && pending_continuation_) {
        advance();
      } else {
        break;
      }
    }
  }

  void skip_all() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (is_space(c) || is_separator(c)) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  std::vector<RawTerm> parse_poly() {
    std::vector<RawTerm> terms;
    skip_space();
    int sign = 1;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      sign = peek() == '-' ? -1 : 1;
      advance();
    }
    while (true) {
      pending_continuation_ = true;
      skip_space();
      pending_continuation_ = false;
      RawTerm t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_space();
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        advance();
        continue;
      }
      break;
    }
    return terms;
  }

  std::string read_digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      s += peek();
      advance();
    }
    return s;
  }

  RawTerm parse_term() {
    RawTerm t{Rational(1), {}};
    if (at_end()) fail("expected a term");
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num{read_digits()};
      Integer den{1};
      skip_space();
      if (!at_end() && peek() == '/') {
        advance();
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected a denominator after '/'");
        std::size_t line = line_, col = col_;
        den = Integer{read_digits()};
        if (den == 0) throw ParseError("zero denominator", line, col);
      }
      t.coeff = Rational(num, den);
      t.coeff.canonicalize();
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        advance();
        skip_space();
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
          fail("expected a variable after '*'");
      }
      if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) return t;
    }
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
      fail(have_coeff ? "expected a variable" : "expected a coefficient or variable");
    t.factors.push_back(parse_factor());
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      advance();
      skip_space();
      if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
        fail("expected a variable after '*'");
      t.factors.push_back(parse_factor());
    }
    return t;
  }

  std::pair<std::size_t, Exponent> parse_factor() {
    std::size_t line = line_, col = col_;
    std::string name;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
      name += peek();
      advance();
    }
    std::size_t var;
    auto it = index_.find(name);
    if (it != index_.end()) {
      var = it->second;
    } else if (fixed_) {
      throw ParseError("undeclared variable '" + name + "'", line, col);
    } else {
      var = names_.size();
      index_.emplace(name, var);
      names_.push_back(name);
    }
    Exponent power = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      advance();
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a non-negative integer exponent after '^'");
      std::string digits = read_digits();
      if (digits.size() > 9) fail("exponent too large");
      power = static_cast<Exponent>(std::stoul(digits));
    }
    return {var, power};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  bool pending_continuation_ = false;
  bool fixed_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

PolynomialSystem parse_polynomial(std::string_view text,
                                  const std::vector<std::string>& declared) {
  auto sys = Parser(text, declared).run(false);
  return sys;
}

PolynomialSystem parse_system(std::string_view text,
                              const std::vector<std::string>& declared) {
  return Parser(text, declared).run(true);
}

Polynomial parse_in(std::string_view text, const std::vector<std::string>& names) {
  return parse_polynomial(text, names).polys.front();
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return out;
}

}  // namespace wblow

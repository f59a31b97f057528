#include "hypermat/weight_expr.hpp"

#include <cctype>
#include <stdexcept>

namespace hypermat {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int n;

  explicit Parser(const std::string& text, int n_) : s(text), n(n_) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw std::invalid_argument(std::string("weight syntax: expected '") + c + "' in " + s);
  }

  // integer linear expression in n: sequence of signed terms INT | INT n | n
  long long linexpr() {
    long long value = 0;
    int sign = 1;
    bool first = true;
    for (;;) {
      skip_ws();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        sign = (s[pos] == '-') ? -1 : 1;
        ++pos;
      } else if (!first) {
        break;
      }
      skip_ws();
      long long coeff = 0;
      bool have_digits = false;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = coeff * 10 + (s[pos] - '0');
        have_digits = true;
        ++pos;
      }
      skip_ws();
      if (pos < s.size() && s[pos] == 'n') {
        ++pos;
        value += sign * (have_digits ? coeff : 1) * n;
      } else if (have_digits) {
        value += sign * coeff;
      } else {
        throw std::invalid_argument("weight syntax: expected a term in " + s);
      }
      first = false;
      sign = 1;
      skip_ws();
      if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
    }
    return value;
  }

  Weight factor() {
    expect('(');
    std::vector<int> entries;
    for (;;) {
      const long long v = linexpr();
      long long reps = 1;
      if (eat('^')) reps = linexpr();
      if (reps < 1 || reps > 64) throw std::invalid_argument("weight syntax: bad repetition count");
      for (long long i = 0; i < reps; ++i) entries.push_back(static_cast<int>(v));
      if (eat(',')) continue;
      expect(')');
      break;
    }
    return Weight(std::move(entries));
  }

  TripleWeight triple() {
    Weight a = factor();
    expect('x');
    Weight b = factor();
    expect('x');
    Weight c = factor();
    skip_ws();
    if (pos != s.size()) throw std::invalid_argument("weight syntax: trailing input in " + s);
    return TripleWeight(std::move(a), std::move(b), std::move(c));
  }
};

} // namespace

Weight parse_weight_expr(const std::string& text, int n) {
  Parser p(text, n);
  Weight w = p.factor();
  p.skip_ws();
  if (p.pos != text.size()) throw std::invalid_argument("weight syntax: trailing input in " + text);
  return w;
}

TripleWeight parse_triple_expr(const std::string& text, int n) {
  Parser p(text, n);
  TripleWeight t = p.triple();
  if (t.n() != n)
    throw std::invalid_argument("weight syntax: third factor rank disagrees with n");
  return t;
}

} // namespace hypermat

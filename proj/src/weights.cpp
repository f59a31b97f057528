#include "hypermat/weights.hpp"

#include <algorithm>
#include <sstream>

namespace hypermat {

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ',';
    os << e_[i];
  }
  os << ')';
  return os.str();
}

std::string TripleWeight::str() const { return a.str() + "x" + b.str() + "x" + c.str(); }

Weight rho(int rank) {
  std::vector<int> r(rank);
  for (int i = 0; i < rank; ++i) r[i] = rank - 1 - i;
  return Weight(std::move(r));
}

BottData bott_data(const Weight& lambda) {
  const int m = lambda.rank();
  std::vector<int> v = lambda.entries();
  for (int i = 0; i < m; ++i) v[i] += m - 1 - i;

  // repeated entry of lambda + rho kills the class
  {
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] == s[i + 1]) return {};
  }

  // inversion count of the descending sort
  int inv = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (v[i] < v[j]) ++inv;

  std::sort(v.begin(), v.end(), std::greater<int>());
  for (int i = 0; i < m; ++i) v[i] -= m - 1 - i;

  BottData out;
  out.sign = (inv % 2 == 0) ? 1 : -1;
  out.length = inv;
  out.weight = Weight(std::move(v));
  return out;
}

SignedWeight bott_normalize(const Weight& lambda) {
  BottData d = bott_data(lambda);
  if (d.zero()) return {};
  return {d.sign, d.weight};
}

SignedTriple triple_normalize(const TripleWeight& t) {
  SignedWeight a = bott_normalize(t.a);
  if (a.zero()) return {};
  SignedWeight b = bott_normalize(t.b);
  if (b.zero()) return {};
  SignedWeight c = bott_normalize(t.c);
  if (c.zero()) return {};
  return {a.sign * b.sign * c.sign, TripleWeight(a.weight, b.weight, c.weight)};
}

TripleWeight fourier_weight(const TripleWeight& t) {
  const int n = t.n();
  return {t.a.dual().shifted(-2 * n), t.b.dual().shifted(-2 * n), t.c.dual().shifted(-4)};
}

} // namespace hypermat

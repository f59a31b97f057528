#include "hypermat/schur.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>

namespace hypermat {

void LaurentChar::add_term(const std::vector<int>& exp, const Int& coeff) {
  if (static_cast<int>(exp.size()) != nvars_)
    throw std::invalid_argument("laurent: exponent arity mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int LaurentChar::coeff(const std::vector<int>& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

LaurentChar& LaurentChar::operator+=(const LaurentChar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentChar& LaurentChar::operator-=(const LaurentChar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentChar LaurentChar::operator*(const LaurentChar& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("laurent: arity mismatch in product");
  LaurentChar out(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentChar LaurentChar::shifted_all(int k) const {
  LaurentChar out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> s = e;
    for (int& x : s) x += k;
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

const std::vector<int>& LaurentChar::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("laurent: leading term of zero polynomial");
  return terms_.rbegin()->first;
}

Int LaurentChar::eval_ones() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentChar::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*[";
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) os << ',';
      os << e[i];
    }
    os << ']';
  }
  if (first) os << '0';
  return os.str();
}

namespace {

// Branching recursion for Schur polynomials of partitions:
//   s_gamma(x_1..x_m) = sum over mu interlacing gamma of
//   s_mu(x_1..x_{m-1}) * x_m^{|gamma|-|mu|}.
// Cached per (m, partition); partition keys are trimmed of trailing zeros.
// The cache is guarded so concurrent callers stay safe; node-based map
// references remain valid across later insertions.
const LaurentChar& partition_schur(const std::vector<int>& parts, int m);

std::recursive_mutex g_schur_mutex;
std::map<std::pair<int, std::vector<int>>, LaurentChar> g_schur_cache;

std::vector<int> trimmed(std::vector<int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

const LaurentChar& partition_schur(const std::vector<int>& parts0, int m) {
  std::lock_guard<std::recursive_mutex> lock(g_schur_mutex);
  std::vector<int> parts = trimmed(parts0);
  auto key = std::make_pair(m, parts);
  auto it = g_schur_cache.find(key);
  if (it != g_schur_cache.end()) return it->second;

  LaurentChar out(m);
  if (static_cast<int>(parts.size()) > m) {
    // too many rows: zero
  } else if (m == 0) {
    out.add_term({}, 1);
  } else if (m == 1) {
    out.add_term({parts.empty() ? 0 : parts[0]}, 1);
  } else {
    long long total = 0;
    for (int p : parts) total += p;
    std::vector<int> padded = parts;
    padded.resize(m, 0);
    // enumerate interlacing partitions mu: padded[i+1] <= mu[i] <= padded[i]
    std::vector<int> mu(m - 1);
    std::function<void(int, long long)> rec = [&](int i, long long musum) {
      if (i == m - 1) {
        const LaurentChar& inner = partition_schur(mu, m - 1);
        const int last = static_cast<int>(total - musum);
        for (const auto& [e, c] : inner.terms()) {
          std::vector<int> ext = e;
          ext.push_back(last);
          out.add_term(ext, c);
        }
        return;
      }
      for (int v = padded[i + 1]; v <= padded[i]; ++v) {
        mu[i] = v;
        rec(i + 1, musum + v);
      }
    };
    rec(0, 0);
  }
  auto [ins, ok] = g_schur_cache.emplace(std::move(key), std::move(out));
  (void)ok;
  return ins->second;
}

} // namespace

LaurentChar schur_char(const Weight& lambda, int nvars) {
  if (lambda.rank() != nvars) throw std::invalid_argument("schur_char: rank must equal variable count");
  if (!lambda.dominant()) throw std::invalid_argument("schur_char: weight must be dominant");
  const int k = std::max(0, -lambda[nvars - 1]);
  const Weight part = lambda.shifted(k);
  LaurentChar c = partition_schur(part.entries(), nvars);
  return k == 0 ? c : c.shifted_all(-k);
}

Int weyl_dim(const Weight& lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("weyl_dim: weight must be dominant");
  const int m = lambda.rank();
  Int num = 1, den = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

namespace {

// Peel a nonnegative integer combination of Schur characters (in m
// variables) into the Schur basis: the leading exponent of the remainder is
// always a dominant weight, extract and subtract.
std::map<Weight, Int> peel_schur(LaurentChar poly, int m) {
  std::map<Weight, Int> out;
  while (!poly.empty()) {
    std::vector<int> lead = poly.leading_exponent();
    Weight w(lead);
    if (!w.dominant()) throw std::logic_error("peel: leading exponent not dominant");
    Int c = poly.coeff(lead);
    if (c < 0) throw std::logic_error("peel: negative leading coefficient");
    LaurentChar s = schur_char(w, m);
    for (const auto& [e, sc] : s.terms()) poly.add_term(e, -c * sc);
    out.emplace(std::move(w), std::move(c));
  }
  return out;
}

} // namespace

std::map<Weight, Int> lr_decompose(const Weight& lambda, const Weight& mu, int m) {
  if (lambda.rank() != m || mu.rank() != m)
    throw std::invalid_argument("lr_decompose: rank mismatch");
  if (!lambda.dominant() || !mu.dominant())
    throw std::invalid_argument("lr_decompose: weights must be dominant");
  const int kl = std::max(0, -lambda[m - 1]);
  const int km = std::max(0, -mu[m - 1]);
  LaurentChar prod = schur_char(lambda.shifted(kl), m) * schur_char(mu.shifted(km), m);
  std::map<Weight, Int> dec = peel_schur(std::move(prod), m);
  if (kl + km == 0) return dec;
  std::map<Weight, Int> out;
  for (const auto& [w, c] : dec) out.emplace(w.shifted(-(kl + km)), c);
  return out;
}

Int lr_coefficient(const Weight& lambda, const Weight& mu, const Weight& target, int m) {
  if (target.rank() != m) throw std::invalid_argument("lr_coefficient: rank mismatch");
  if (lambda.degree() + mu.degree() != target.degree()) return 0;
  auto dec = lr_decompose(lambda, mu, m);
  auto it = dec.find(target);
  return it == dec.end() ? Int(0) : it->second;
}

namespace {

// Counting kernel behind the 2 x 2 plethysm.  The character of
// S_g(A ox B) in variables x1 y1, x1 y2, x2 y1, x2 y2 assigns to a
// semistandard tableau of shape g the x-bidegree (|nu2|, |g| - |nu2|) and
// y-bidegree (s1 + |nu3| - |nu2|, ...), where nu1 < nu2 < nu3 < g is its
// horizontal-strip chain.  N(a1, b1) counts chains with the given x1- and
// y1-degrees; partitions g have at most four rows.  The count is bounded by
// the number of semistandard tableaux, so Count = long long is exact as long
// as dim S_g(C^4) fits; the caller switches to big integers past that.
template <typename Count>
Count strip_chain_count(const std::array<long long, 4>& g, long long a1, long long b1) {
  const long long total = g[0] + g[1] + g[2] + g[3];
  if (a1 < 0 || a1 > total || b1 < 0 || b1 > total) return 0;
  Count count = 0;
  for (long long c1 = g[1]; c1 <= g[0]; ++c1)
    for (long long c2 = g[2]; c2 <= g[1]; ++c2)
      for (long long c3 = g[3]; c3 <= g[2]; ++c3) {
        const long long s1 = b1 - (c1 + c2 + c3) + a1;
        if (s1 < 0 || s1 > a1) continue;
        // nu2 = (w, a1 - w): interlacing, partition and strip constraints
        long long lo = std::max({c2, a1 - c2, s1, a1 - s1, (a1 + 1) / 2});
        long long hi = std::min({c1, a1 - c3, a1});
        if (hi >= lo) count += hi - lo + 1;
      }
  return count;
}

// gamma as a 4-entry partition plus the determinant twist applied to reach it
struct TwistedGamma {
  std::array<long long, 4> g;
  int twist = 0;  // S_gamma = S_g ox det(A ox B)^{-twist}
  long long total = 0;
};

std::optional<TwistedGamma> twist_to_partition(const Weight& gamma) {
  if (!gamma.dominant()) throw std::invalid_argument("plethysm: gamma must be dominant");
  if (gamma.rank() > 4) throw std::invalid_argument("plethysm: gamma must have at most 4 parts");
  Weight g4 = gamma.padded(4);
  const int k = std::max(0, -g4[3]);
  g4 = g4.shifted(k);
  TwistedGamma out;
  for (int i = 0; i < 4; ++i) out.g[i] = g4[i];
  out.twist = k;
  out.total = out.g[0] + out.g[1] + out.g[2] + out.g[3];
  return out;
}

Int chain_N(const TwistedGamma& tg, long long a1, long long b1) {
  // counts fit in 64 bits whenever the tableau count does
  if (tg.g[0] <= 1000) return Int(strip_chain_count<long long>(tg.g, a1, b1));
  return strip_chain_count<Int>(tg.g, a1, b1);
}

} // namespace

Int plethysm_pair_multiplicity(const Weight& gamma, const Weight& alpha, const Weight& beta) {
  if (alpha.rank() != 2 || beta.rank() != 2)
    throw std::invalid_argument("plethysm: alpha and beta must have rank 2");
  if (!alpha.dominant() || !beta.dominant()) return 0;
  if (alpha.degree() != gamma.degree() || beta.degree() != gamma.degree()) return 0;
  auto tg = twist_to_partition(gamma);
  const long long a1 = alpha[0] + 2LL * tg->twist;
  const long long a2 = alpha[1] + 2LL * tg->twist;
  const long long b1 = beta[0] + 2LL * tg->twist;
  const long long b2 = beta[1] + 2LL * tg->twist;
  if (a2 < 0 || b2 < 0) return 0;  // characters of a polynomial functor
  // invert the monomial-to-Schur triangle in each pair of variables
  return chain_N(*tg, a1, b1) - chain_N(*tg, a1 + 1, b1) - chain_N(*tg, a1, b1 + 1) +
         chain_N(*tg, a1 + 1, b1 + 1);
}

DecompResult plethysm_2x2(const Weight& gamma) {
  auto tg = twist_to_partition(gamma);

  // substituted character of S_g at (x1 y1, x1 y2, x2 y1, x2 y2)
  LaurentChar sub(4);
  LaurentChar four = schur_char(Weight({static_cast<int>(tg->g[0]), static_cast<int>(tg->g[1]),
                                        static_cast<int>(tg->g[2]), static_cast<int>(tg->g[3])}),
                                4);
  for (const auto& [e, c] : four.terms()) {
    const std::vector<int> xy = {e[0] + e[1], e[2] + e[3], e[0] + e[2], e[1] + e[3]};
    sub.add_term(xy, c);
  }

  // peel leading Schur products s_alpha(x) s_beta(y) in lexicographic order
  DecompResult out;
  out.gamma = gamma;
  const int shift = 2 * tg->twist;
  while (!sub.empty()) {
    std::vector<int> lead = sub.leading_exponent();
    Weight alpha({lead[0], lead[1]});
    Weight beta({lead[2], lead[3]});
    if (!alpha.dominant() || !beta.dominant())
      throw std::logic_error("plethysm: leading term not a highest weight");
    Int c = sub.coeff(lead);
    if (c < 0) throw std::logic_error("plethysm: negative multiplicity encountered");
    LaurentChar sa = schur_char(alpha, 2);
    LaurentChar sb = schur_char(beta, 2);
    std::vector<int> e(4);
    for (const auto& [ea, ca] : sa.terms())
      for (const auto& [eb, cb] : sb.terms()) {
        e[0] = ea[0]; e[1] = ea[1]; e[2] = eb[0]; e[3] = eb[1];
        sub.add_term(e, -c * ca * cb);
      }
    out.mult.emplace(std::make_pair(alpha.shifted(-shift), beta.shifted(-shift)), std::move(c));
  }
  return out;
}

Int DecompResult::dimension_lhs() const {
  return weyl_dim(gamma.padded(4));
}

Int DecompResult::dimension_rhs() const {
  Int s = 0;
  for (const auto& [ab, m] : mult) s += m * weyl_dim(ab.first) * weyl_dim(ab.second);
  return s;
}

Int sym_multiplicity(const TripleWeight& t) {
  if (!t.dominant()) throw std::invalid_argument("sym_multiplicity: weight must be dominant");
  if (!t.degrees_match()) return 0;
  if (!t.a.is_partition() || !t.b.is_partition() || !t.c.is_partition()) return 0;
  const int n = t.n();
  for (int i = 4; i < n; ++i)
    if (t.c[i] != 0) return 0;  // more than four rows cannot occur in S_gamma(A ox B)
  const Weight gamma = (n <= 4) ? t.c.padded(4) : t.c.prefix(4);
  return plethysm_pair_multiplicity(gamma, t.a, t.b);
}

StabilizationPolicy StabilizationPolicy::from_env() {
  StabilizationPolicy p;
  if (const char* cap = std::getenv("HYPERMAT_STAB_CAP")) {
    const int v = std::atoi(cap);
    if (v > 0) p.cap_offset = v;
  }
  return p;
}

TripleWeight semi_invariant_weight_n3() {
  return {Weight({3, 3}), Weight({3, 3}), Weight({2, 2, 2})};
}

namespace {

int triple_max_abs(const TripleWeight& t) {
  return std::max({t.a.max_abs(), t.b.max_abs(), t.c.max_abs()});
}

// shared stabilized-limit driver
Int stabilize(const std::function<Int(int)>& f, int k0, const StabilizationPolicy& policy,
              const char* what) {
  const int cap = k0 + policy.cap_offset;
  for (int k = k0; k <= cap; k += policy.step) {
    Int a = f(k);
    Int b = f(k + 1);
    if (a == b) return a;
  }
  throw StabilizationError(std::string(what) + ": no stabilization below hard cap");
}

} // namespace

Int localization_multiplicity(const TripleWeight& t, const StabilizationPolicy& policy) {
  if (t.n() != 3) throw std::invalid_argument("localization_multiplicity: defined for n = 3");
  if (!t.dominant()) throw std::invalid_argument("localization_multiplicity: weight must be dominant");
  if (!t.degrees_match()) return 0;
  const TripleWeight sigma = semi_invariant_weight_n3();
  const int k0 = triple_max_abs(t) + policy.base_offset;
  return stabilize([&](int k) { return sym_multiplicity(t.plus(sigma.scaled(k))); }, k0, policy,
                   "localization_multiplicity");
}

namespace {

// partitions of d with at most two parts
std::vector<Weight> two_row_partitions(int d) {
  std::vector<Weight> out;
  for (int second = 0; 2 * second <= d; ++second) out.push_back(Weight({d - second, second}));
  return out;
}

} // namespace

Int mixed_tensor_multiplicity(int u, int v, const Weight& bhat, const Weight& ghat) {
  if (u < 0 || v < 0) return 0;
  if (bhat.rank() != 2) throw std::invalid_argument("mixed tensor: rank-2 factor expected");
  const int n = ghat.rank();
  if (bhat.degree() != static_cast<long long>(u) - v || ghat.degree() != static_cast<long long>(u) - v)
    return 0;
  Int total = 0;
  for (const Weight& lam : two_row_partitions(u)) {
    for (const Weight& nu : two_row_partitions(v)) {
      // B-side: [S_lam ox S_nu* : S_bhat] at rank 2, shifting nu* to a partition
      const int t2 = nu[0];
      const Weight nu_dual2 = Weight({t2 - nu[1], 0});
      const Weight btarget = bhat.shifted(t2);
      if (!btarget.is_partition()) continue;
      Int cb = lr_coefficient(lam, nu_dual2, btarget, 2);
      if (cb == 0) continue;
      // C-side: nu* spread over rank n, shifted by the same twist
      std::vector<int> nd(n, t2);
      nd[n - 2] = t2 - nu[1];
      nd[n - 1] = 0;
      const Weight nu_dualn(std::move(nd));
      const Weight gtarget = ghat.shifted(t2);
      if (!gtarget.is_partition()) continue;
      Int cg = lr_coefficient(lam.padded(n), nu_dualn, gtarget, n);
      if (cg == 0) continue;
      total += cb * cg;
    }
  }
  return total;
}

Int traceless_mixed_multiplicity(int u, int v, const Weight& bhat, const Weight& ghat) {
  return mixed_tensor_multiplicity(u, v, bhat, ghat) -
         mixed_tensor_multiplicity(u - 1, v - 1, bhat, ghat);
}

} // namespace hypermat

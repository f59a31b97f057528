#include "hypermat/dmod.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hypermat {

std::optional<Weight> matrix_char_member(int p, int n1, int n2, const Weight& lambda) {
  if (n2 > n1 || p < 0 || p > n2) throw std::invalid_argument("matrix_char_member: need 0 <= p <= n2 <= n1");
  if (lambda.rank() != n2) throw std::invalid_argument("matrix_char_member: lambda must have rank n2");
  if (!lambda.dominant()) throw std::invalid_argument("matrix_char_member: lambda must be dominant");
  if (p >= 1 && lambda[p - 1] < p - n2) return std::nullopt;
  if (p < n2 && lambda[p] > p - n1) return std::nullopt;
  std::vector<int> out;
  out.reserve(n1);
  for (int i = 0; i < p; ++i) out.push_back(lambda[i]);
  for (int i = 0; i < n1 - n2; ++i) out.push_back(p - n2);
  for (int i = p; i < n2; ++i) out.push_back(lambda[i] + (n1 - n2));
  return Weight(std::move(out));
}

std::optional<BottPush> bott_pushforward(const Weight& nu, int k, int n) {
  if (nu.rank() != k) throw std::invalid_argument("bott_pushforward: nu must have rank k");
  if (k > n) throw std::invalid_argument("bott_pushforward: need k <= n");
  if (!nu.dominant()) throw std::invalid_argument("bott_pushforward: nu must be dominant");
  for (int p = 0; p <= k; ++p) {
    const bool low = (p == 0) || nu[p - 1] >= p - k;
    const bool high = (p == k) || nu[p] <= p - n;
    if (!(low && high)) continue;
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < p; ++i) out.push_back(nu[i]);
    for (int i = 0; i < n - k; ++i) out.push_back(p - k);
    for (int i = p; i < k; ++i) out.push_back(nu[i] + (n - k));
    return BottPush{(n - k) * (k - p), Weight(std::move(out))};
  }
  return std::nullopt;
}

std::optional<BottPushTriple> bott_pushforward(const Weight& alpha, const Weight& beta,
                                               const Weight& nu, int n) {
  auto push = bott_pushforward(nu, nu.rank(), n);
  if (!push) return std::nullopt;
  return BottPushTriple{push->degree, TripleWeight(alpha, beta, push->weight)};
}

EulerConfig parse_euler_config(const std::string& s) {
  if (s == "y111") return EulerConfig::Y111;
  if (s == "y222") return EulerConfig::Y222;
  if (s == "y222tw") return EulerConfig::Y222Twisted;
  throw std::invalid_argument("unknown euler config: " + s);
}

std::string to_string(EulerConfig c) {
  switch (c) {
    case EulerConfig::Y111: return "y111";
    case EulerConfig::Y222: return "y222";
    case EulerConfig::Y222Twisted: return "y222tw";
  }
  throw std::logic_error("unreachable");
}

namespace {

struct EulerSpec {
  int rank_a, rank_b, rank_c;  // Grassmannian quotient ranks carrying the classes
  int r_mul, r_off;            // twist parameter r(k) = r_mul * k + r_off
};

EulerSpec euler_spec(EulerConfig c) {
  switch (c) {
    case EulerConfig::Y111: return {1, 1, 1, 1, 0};
    case EulerConfig::Y222: return {2, 2, 2, 2, 0};
    case EulerConfig::Y222Twisted: return {2, 2, 2, 2, 1};
  }
  throw std::logic_error("unreachable");
}

std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Weight add_on_subset(const Weight& base, const std::vector<int>& idx, int r) {
  std::vector<int> e = base.entries();
  for (int i : idx) e[i] += r;
  return Weight(std::move(e));
}

Int euler_eval_at(const EulerSpec& spec, const TripleWeight& t, int n, int k) {
  const int r = spec.r_mul * k + spec.r_off;
  const Weight base_a = t.a.dual().shifted(-2 * n);
  const Weight base_b = t.b.dual().shifted(-2 * n);
  const Weight base_c = t.c.dual().shifted(-4);
  Int total = 0;
  for (const auto& I : subsets(2, spec.rank_a)) {
    const Weight wa = add_on_subset(base_a, I, r);
    for (const auto& J : subsets(2, spec.rank_b)) {
      const Weight wb = add_on_subset(base_b, J, r);
      for (const auto& K : subsets(n, spec.rank_c)) {
        const Weight wc = add_on_subset(base_c, K, r);
        SignedTriple norm = triple_normalize(TripleWeight(wa, wb, wc));
        if (norm.zero()) continue;
        total += norm.sign * sym_multiplicity(norm.weight);
      }
    }
  }
  // the subset sum per factor is the alternating sum over exterior powers of
  // the cotangent bundle of that Grassmannian factor; the de Rham shift of
  // the pushforward contributes a global sign by the base dimension
  const int dim_base = spec.rank_a * (2 - spec.rank_a) + spec.rank_b * (2 - spec.rank_b) +
                       spec.rank_c * (n - spec.rank_c);
  return (dim_base % 2 == 0) ? total : -total;
}

int triple_max_abs(const TripleWeight& t) {
  return std::max({t.a.max_abs(), t.b.max_abs(), t.c.max_abs()});
}

} // namespace

Int euler_limit(EulerConfig cfg, const TripleWeight& t, int n, const StabilizationPolicy& policy) {
  if (t.n() != n) throw std::invalid_argument("euler_limit: weight rank disagrees with n");
  if (!t.dominant()) throw std::invalid_argument("euler_limit: weight must be dominant");
  if (!t.degrees_match()) return 0;
  const EulerSpec spec = euler_spec(cfg);
  const int k0 = triple_max_abs(t) + policy.base_offset;
  const int cap = k0 + policy.cap_offset;
  for (int k = k0; k <= cap; k += policy.step) {
    Int a = euler_eval_at(spec, t, n, k);
    Int b = euler_eval_at(spec, t, n, k + 1);
    if (a == b) return a;
  }
  throw StabilizationError("euler_limit: no stabilization below hard cap");
}

namespace {

// --- determinantal character routes -----------------------------------------

int det_window_p(SimpleLabel s) {
  switch (s) {
    case SimpleLabel::D0: return 0;
    case SimpleLabel::D2: return 1;
    case SimpleLabel::D6: return 2;
    case SimpleLabel::D8: return 3;
    case SimpleLabel::D9: return 4;
    default: return -1;
  }
}

// The (A ox B)-side partner of gamma in the rank <= p character window of
// the (A ox B) x C flattening, when gamma lies in it.  For n = 3 the window
// variable is the C-weight; for n >= 4 it is the (A ox B)-weight, recovered
// from gamma by inverting the partner map.
std::optional<Weight> det_gamma_partner(SimpleLabel s, const Weight& gamma, int n) {
  const int p = det_window_p(s);
  if (n == 3) return matrix_char_member(p, 4, 3, gamma);
  const int pad = n - 4;
  for (int i = p; i < p + pad; ++i)
    if (gamma[i] != p - 4) return std::nullopt;
  std::vector<int> lam;
  for (int i = 0; i < p; ++i) lam.push_back(gamma[i]);
  for (int i = p + pad; i < n; ++i) lam.push_back(gamma[i] - pad);
  Weight lambda(std::move(lam));
  if (!lambda.dominant()) return std::nullopt;
  if (p >= 1 && lambda[p - 1] < p - 4) return std::nullopt;
  if (p < 4 && lambda[p] > p - n) return std::nullopt;
  return lambda;
}

Verdict det_route(SimpleLabel s, const TripleWeight& t, int n) {
  const int p = det_window_p(s);
  std::ostringstream route;
  route << "char:matrix-window(p=" << p << ")";
  auto partner = det_gamma_partner(s, t.c, n);
  if (!partner) return Verdict::known_value(0, route.str() + " gamma outside window");
  return Verdict::known_value(plethysm_pair_multiplicity(*partner, t.a, t.b), route.str());
}

// Bott window shapes of the non-determinantal simples for n >= 4: the long
// factor is pinned outside a short segment.
bool bott_window_shape(SimpleLabel s, const Weight& g, int n) {
  switch (s) {
    case SimpleLabel::D1: {
      bool ok = g[0] >= -3 && g[n - 3] <= -3;
      for (int i = 1; i <= n - 4 && ok; ++i) ok = ok && (g[i] == -3);
      return ok;
    }
    case SimpleLabel::D5:
    case SimpleLabel::D6p: {
      bool ok = g[1] >= -2 && g[n - 2] <= -2;
      for (int i = 2; i <= n - 3 && ok; ++i) ok = ok && (g[i] == -2);
      return ok;
    }
    case SimpleLabel::D7: {
      bool ok = g[2] >= -1 && g[n - 1] <= -1;
      for (int i = 3; i <= n - 2 && ok; ++i) ok = ok && (g[i] == -1);
      return ok;
    }
    default: return true;
  }
}

// Rank <= 1 modules of the two 2n x 2 flattenings: the window variable is
// the rank-2 factor A (for D3) or B (for D4); the complementary factor pairs
// with C in a traceless mixed tensor.
Verdict rank1_route(SimpleLabel s, const TripleWeight& t, int n) {
  const bool window_on_a = (s == SimpleLabel::D3);
  const Weight& w = window_on_a ? t.a : t.b;
  const Weight& other = window_on_a ? t.b : t.a;
  const std::string route = std::string("char:rank1-window(") + (window_on_a ? "A" : "B") + ")";
  if (w[0] < -1 || w[1] > 1 - 2 * n) return Verdict::known_value(0, route + " outside window");
  const int u = w[0] + 1;
  const int v = 1 - 2 * n - w[1];
  const Weight bhat = other.shifted(n);
  const Weight ghat = t.c.shifted(2);
  return Verdict::known_value(traceless_mixed_multiplicity(u, v, bhat, ghat), route);
}

Verdict multiplicity_impl(SimpleLabel s, const TripleWeight& t, int n,
                          const StabilizationPolicy& policy);

// D1 via the Euler characteristic of the cone desingularization: the class
// equals [D1] + 4[D0] for n = 3 and [D1] - 4[D0] for n = 4.
Verdict d1_route(const TripleWeight& t, int n, const StabilizationPolicy& policy) {
  if (n == 3 || n == 4) {
    const Int chi = euler_limit(EulerConfig::Y111, t, n, policy);
    const Verdict d0 = multiplicity_impl(SimpleLabel::D0, t, n, policy);
    const long long corr = (n == 3) ? -4 : 4;
    std::string route = "char:euler(y111,n=" + std::to_string(n) + ")-point-part";
    return Verdict::known_value(chi + corr * d0.value, std::move(route));
  }
  // n >= 5: descend along the subspace-variety bundle over G(4; C)
  const Weight& g = t.c;
  if (!bott_window_shape(SimpleLabel::D1, g, n))
    return Verdict::known_value(0, "window:gamma-bounds(D1)");
  std::vector<int> nu = {g[0], g[n - 3] - (n - 4), g[n - 2] - (n - 4), g[n - 1] - (n - 4)};
  Verdict inner = multiplicity_impl(SimpleLabel::D1, TripleWeight(t.a, t.b, Weight(nu)), 4, policy);
  inner.provenance = "char:bott-descent(D1,n=4) <- " + inner.provenance;
  return inner;
}

// D5 via the Euler characteristic of the rank-2 subspace bundle: the class
// equals [D6] + [D5] + [D0] for n = 3 and [D6] + [D5] + [D2] + 2[D0] for
// n = 4.
Verdict d5_route(const TripleWeight& t, int n, const StabilizationPolicy& policy) {
  if (n == 3 || n == 4) {
    const Int chi = euler_limit(EulerConfig::Y222, t, n, policy);
    Int m = chi - multiplicity_impl(SimpleLabel::D6, t, n, policy).value;
    std::string route = "char:euler(y222,n=" + std::to_string(n) + ")-det-parts";
    if (n == 3) {
      m -= multiplicity_impl(SimpleLabel::D0, t, n, policy).value;
    } else {
      m -= multiplicity_impl(SimpleLabel::D2, t, n, policy).value;
      m -= 2 * multiplicity_impl(SimpleLabel::D0, t, n, policy).value;
    }
    return Verdict::known_value(m, std::move(route));
  }
  const Weight& g = t.c;
  if (!bott_window_shape(SimpleLabel::D5, g, n))
    return Verdict::known_value(0, "window:gamma-bounds(D5)");
  std::vector<int> nu = {g[0], g[1], g[n - 2] - (n - 4), g[n - 1] - (n - 4)};
  Verdict inner = multiplicity_impl(SimpleLabel::D5, TripleWeight(t.a, t.b, Weight(nu)), 4, policy);
  inner.provenance = "char:bott-descent(D5,n=4) <- " + inner.provenance;
  return inner;
}

// D6' at n = 3 from the localization at the semi-invariant, whose
// composition factors are S, D7, D6', D1, D0, each once.
Verdict d6p_route_n3(const TripleWeight& t, const StabilizationPolicy& policy) {
  const Int sf = localization_multiplicity(t, policy);
  Int m = sf;
  m -= multiplicity_impl(SimpleLabel::D8, t, 3, policy).value;
  m -= multiplicity_impl(SimpleLabel::D7, t, 3, policy).value;
  m -= multiplicity_impl(SimpleLabel::D1, t, 3, policy).value;
  m -= multiplicity_impl(SimpleLabel::D0, t, 3, policy).value;
  return Verdict::known_value(m, "char:semiinvariant-localization-residue");
}

// D6' at n = 4: exact on the family gamma = (-2,-2,c,c) through the twisted
// rank-2 bundle, whose class there reduces to [D6'] + [D3] + [D4];
// window exclusion elsewhere, otherwise undetermined.
Verdict d6p_route_n4(const TripleWeight& t, const StabilizationPolicy& policy) {
  const Weight& g = t.c;
  if (!(g[1] >= -2 && g[2] <= -2)) return Verdict::known_value(0, "window:gamma-bounds(D6')");
  if (g[0] == -2 && g[1] == -2 && g[2] == g[3]) {
    const Int chi = euler_limit(EulerConfig::Y222Twisted, t, 4, policy);
    Int m = chi;
    m -= multiplicity_impl(SimpleLabel::D3, t, 4, policy).value;
    m -= multiplicity_impl(SimpleLabel::D4, t, 4, policy).value;
    return Verdict::known_value(m, "char:euler(y222tw,n=4)-rank1-parts");
  }
  return Verdict::undetermined("char:D6'(n=4) known only on the gamma=(-2,-2,c,c) family");
}

Verdict d6p_route(const TripleWeight& t, int n, const StabilizationPolicy& policy) {
  if (n == 3) return d6p_route_n3(t, policy);
  if (n == 4) return d6p_route_n4(t, policy);
  const Weight& g = t.c;
  if (!bott_window_shape(SimpleLabel::D6p, g, n))
    return Verdict::known_value(0, "window:gamma-bounds(D6')");
  std::vector<int> nu = {g[0], g[1], g[n - 2] - (n - 4), g[n - 1] - (n - 4)};
  Verdict inner = multiplicity_impl(SimpleLabel::D6p, TripleWeight(t.a, t.b, Weight(nu)), 4, policy);
  inner.provenance = "char:bott-descent(D6',n=4) <- " + inner.provenance;
  return inner;
}

Verdict multiplicity_impl(SimpleLabel s, const TripleWeight& t, int n,
                          const StabilizationPolicy& policy) {
  if (!t.degrees_match()) return Verdict::known_value(0, "degree mismatch");
  switch (s) {
    case SimpleLabel::D0:
    case SimpleLabel::D2:
    case SimpleLabel::D6:
    case SimpleLabel::D8:
    case SimpleLabel::D9:
      return det_route(s, t, n);
    case SimpleLabel::D3:
    case SimpleLabel::D4:
      return rank1_route(s, t, n);
    case SimpleLabel::D1:
      return d1_route(t, n, policy);
    case SimpleLabel::D5:
      return d5_route(t, n, policy);
    case SimpleLabel::D6p:
      return d6p_route(t, n, policy);
    case SimpleLabel::D7: {
      Verdict v = multiplicity_impl(SimpleLabel::D1, fourier_weight(t), n, policy);
      v.provenance = "char:fourier(D7<->D1) <- " + v.provenance;
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

} // namespace

Verdict simple_char_multiplicity(SimpleLabel s, const TripleWeight& t, int n,
                                 const StabilizationPolicy& policy) {
  if (t.n() != n) throw std::invalid_argument("simple_char_multiplicity: weight rank disagrees with n");
  if (!simple_valid(s, n)) throw std::invalid_argument("simple_char_multiplicity: label absent for this n");
  if (!t.dominant()) throw std::invalid_argument("simple_char_multiplicity: weight must be dominant");
  return multiplicity_impl(s, t, n, policy);
}

bool character_window_admits(SimpleLabel s, const Weight& gamma, int n) {
  if (gamma.rank() != n) throw std::invalid_argument("character_window_admits: rank disagrees with n");
  if (!gamma.dominant()) throw std::invalid_argument("character_window_admits: gamma must be dominant");
  switch (s) {
    case SimpleLabel::D0:
    case SimpleLabel::D2:
    case SimpleLabel::D6:
    case SimpleLabel::D8:
    case SimpleLabel::D9:
      return det_gamma_partner(s, gamma, n).has_value();
    case SimpleLabel::D1:
      return n == 3 ? gamma[1] <= -3 : bott_window_shape(s, gamma, n);
    case SimpleLabel::D7:
      return n == 3 ? gamma[1] >= -1 : bott_window_shape(s, gamma, n);
    case SimpleLabel::D5:
      return n == 3 ? (gamma[0] >= -2 && gamma[2] <= -2) : bott_window_shape(s, gamma, n);
    case SimpleLabel::D6p:
      return n == 3 ? true : bott_window_shape(s, gamma, n);
    case SimpleLabel::D3:
    case SimpleLabel::D4:
      return true;  // the window constraint lives on the rank-two factors
  }
  throw std::logic_error("unreachable");
}

std::string WitnessReport::summary() const {
  std::ostringstream os;
  os << to_string(target) << " @ " << weight.str() << " [n=" << n << "]: ";
  switch (status) {
    case Status::Verified: os << "VERIFIED"; break;
    case Status::PartiallyVerified: os << "PARTIALLY-VERIFIED"; break;
    case Status::Failed: os << "FAILED"; break;
  }
  return os.str();
}

WitnessReport witness_check(SimpleLabel s, const TripleWeight& t, int n,
                            const StabilizationPolicy& policy) {
  WitnessReport rep;
  rep.target = s;
  rep.weight = t;
  rep.n = n;
  bool target_one = false;
  bool others_zero = true;
  bool any_undetermined = false;
  for (SimpleLabel lab : simples_for(n)) {
    Verdict v = simple_char_multiplicity(lab, t, n, policy);
    if (lab == s) {
      target_one = v.known && v.value == 1;
    } else if (!v.known) {
      any_undetermined = true;
      v.provenance += " (exclusion recorded, not certified)";
    } else if (v.value != 0) {
      others_zero = false;
    }
    rep.verdicts.emplace(lab, std::move(v));
  }
  if (target_one && others_zero && !any_undetermined)
    rep.status = WitnessReport::Status::Verified;
  else if (target_one && others_zero)
    rep.status = WitnessReport::Status::PartiallyVerified;
  else
    rep.status = WitnessReport::Status::Failed;
  return rep;
}

std::vector<std::pair<SimpleLabel, TripleWeight>> witness_table(int n, const std::vector<int>& ts) {
  if (n < 3) throw std::invalid_argument("witness_table: requires n >= 3");
  std::vector<std::pair<SimpleLabel, TripleWeight>> out;
  auto add = [&](SimpleLabel s, std::vector<int> a, std::vector<int> b, std::vector<int> c) {
    out.emplace_back(s, TripleWeight(Weight(std::move(a)), Weight(std::move(b)), Weight(std::move(c))));
  };
  if (n == 3) {
    add(SimpleLabel::D0, {-6, -6}, {-6, -6}, {-4, -4, -4});
    add(SimpleLabel::D8, {0, 0}, {0, 0}, {0, 0, 0});
    for (int t : ts) {
      add(SimpleLabel::D1, {t - 6, -t - 6}, {t - 6, -t - 6}, {-4, -4, -4});
      add(SimpleLabel::D7, {t, -t}, {t, -t}, {0, 0, 0});
    }
    add(SimpleLabel::D2, {-4, -4}, {-4, -4}, {-2, -3, -3});
    add(SimpleLabel::D6, {-2, -2}, {-2, -2}, {-1, -1, -2});
    add(SimpleLabel::D3, {-1, -5}, {-3, -3}, {-2, -2, -2});
    add(SimpleLabel::D4, {-3, -3}, {-1, -5}, {-2, -2, -2});
    for (int t : ts) {
      add(SimpleLabel::D5, {t - 2, -t - 4}, {t - 3, -t - 3}, {-2, -2, -2});
      add(SimpleLabel::D5, {t - 3, -t - 3}, {t - 2, -t - 4}, {-2, -2, -2});
    }
    add(SimpleLabel::D6p, {-3, -3}, {-3, -3}, {-2, -2, -2});
    return out;
  }
  const std::vector<int> m4(n, -4), m3(n, -3), m2(n, -2), m1(n, -1), z(n, 0);
  add(SimpleLabel::D0, {-2 * n, -2 * n}, {-2 * n, -2 * n}, m4);
  add(SimpleLabel::D9, {0, 0}, {0, 0}, z);
  add(SimpleLabel::D1, {-n - 1, -2 * n + 1}, {-n - 1, -2 * n + 1}, m3);
  add(SimpleLabel::D7, {-1, 1 - n}, {-1, 1 - n}, m1);
  add(SimpleLabel::D2, {-n - 2, -2 * n + 2}, {-n - 2, -2 * n + 2}, m3);
  add(SimpleLabel::D8, {-2, 2 - n}, {-2, 2 - n}, m1);
  add(SimpleLabel::D3, {-1, 1 - 2 * n}, {-n, -n}, m2);
  add(SimpleLabel::D4, {-n, -n}, {-1, 1 - 2 * n}, m2);
  add(SimpleLabel::D5, {-2, 2 - 2 * n}, {-n, -n}, m2);
  add(SimpleLabel::D6p, {-3, 3 - 2 * n}, {-n, -n}, m2);
  add(SimpleLabel::D6, {-4, 4 - 2 * n}, {-n, -n}, m2);
  return out;
}

} // namespace hypermat

#pragma once

// Exact symmetric-function engine: Schur characters on a torus,
// Littlewood-Richardson products, and the brute-force decomposition of
// S_gamma(A ox B) for two-dimensional A and B.  All coefficients are exact
// arbitrary-precision integers.

#include "hypermat/weights.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace hypermat {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in a fixed number of torus variables, exponent vectors
// mapped to nonzero integer coefficients.
class LaurentChar {
public:
  using Terms = std::map<std::vector<int>, Int>;

  LaurentChar() : nvars_(0) {}
  explicit LaurentChar(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const std::vector<int>& exp, const Int& coeff);
  Int coeff(const std::vector<int>& exp) const;

  LaurentChar& operator+=(const LaurentChar& o);
  LaurentChar& operator-=(const LaurentChar& o);
  LaurentChar operator*(const LaurentChar& o) const;

  // shift every exponent by k in every variable (multiply by (x1...xm)^k)
  LaurentChar shifted_all(int k) const;

  // lexicographically greatest exponent vector (requires non-empty)
  const std::vector<int>& leading_exponent() const;

  Int eval_ones() const;
  std::string str() const;

private:
  int nvars_;
  Terms terms_;
};

// Schur character s_lambda in `nvars` variables; lambda dominant of rank
// nvars.  Negative entries are handled by a determinant twist.
LaurentChar schur_char(const Weight& lambda, int nvars);

// Dimension of the irreducible GL_m representation of highest weight lambda
// (Weyl dimension formula; valid for any dominant lambda).
Int weyl_dim(const Weight& lambda);

// Littlewood-Richardson decomposition of S_lambda ox S_mu at rank m; weights
// needing more than m rows are discarded by working in m variables.
std::map<Weight, Int> lr_decompose(const Weight& lambda, const Weight& mu, int m);

// Single Littlewood-Richardson coefficient [S_lambda ox S_mu : S_target] at
// rank m (all three dominant of rank m).
Int lr_coefficient(const Weight& lambda, const Weight& mu, const Weight& target, int m);

// Full decomposition of S_gamma(A ox B), dim A = dim B = 2, gamma dominant
// with at most 4 parts (negative entries via determinant twist): map from
// (alpha, beta) to multiplicity.
struct DecompResult {
  std::map<std::pair<Weight, Weight>, Int> mult;
  Weight gamma;
  Int dimension_lhs() const;  // dim S_gamma(C^4)
  Int dimension_rhs() const;  // sum of m * dim(alpha) * dim(beta)
};
DecompResult plethysm_2x2(const Weight& gamma);

// Targeted multiplicity [S_gamma(A ox B) : S_alpha A ox S_beta B] without
// expanding the full table; exact, and fast for long weights.
Int plethysm_pair_multiplicity(const Weight& gamma, const Weight& alpha, const Weight& beta);

// Multiplicity of S_a A ox S_b B ox S_c C inside Sym(A ox B ox C).  Zero
// unless the degrees agree and c is a partition with at most 4 parts, in
// which case the Cauchy formula routes it through the plethysm above.
Int sym_multiplicity(const TripleWeight& t);

// Stabilization control for the "k >> 0" limits: evaluate at k0 and k0 + 1
// where k0 = max-abs-entry + base_offset; accept on agreement, otherwise
// step forward, giving up at k0 + cap_offset.
struct StabilizationPolicy {
  int base_offset = 8;
  int step = 4;
  int cap_offset = 32;
  static StabilizationPolicy from_env();  // honors HYPERMAT_STAB_CAP
};

struct StabilizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multiplicity of t in the localization of the coordinate ring at the n = 3
// semi-invariant of weight sigma = (3,3)x(3,3)x(2,2,2): the multiplicity of
// t + k*sigma in Sym(A ox B ox C) for k past the stabilization threshold.
Int localization_multiplicity(const TripleWeight& t,
                              const StabilizationPolicy& policy = StabilizationPolicy::from_env());

// Weight of the n = 3 semi-invariant.
TripleWeight semi_invariant_weight_n3();

// Multiplicity of S_bhat(rank 2) ox S_ghat(rank n) in
// Sym^u(B ox C) ox Sym^v((B ox C)^*), dim B = 2, dim C = n.  Mixed-tensor
// building block for the rank-one flattening characters.
Int mixed_tensor_multiplicity(int u, int v, const Weight& bhat, const Weight& ghat);

// Multiplicity of S_bhat ox S_ghat in the irreducible S_{(u,0,...,0,-v)} of
// GL(B ox C) (difference of two mixed-tensor multiplicities).
Int traceless_mixed_multiplicity(int u, int v, const Weight& bhat, const Weight& ghat);

} // namespace hypermat

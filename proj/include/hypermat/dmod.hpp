#pragma once

// Character calculus for the simple equivariant D-modules: the exact
// character windows of the determinantal simples, cohomology of tautological
// bundles on Grassmannians, stable Euler-characteristic limits for the orbit
// desingularizations, and witness-weight verification.

#include "hypermat/orbits.hpp"
#include "hypermat/schur.hpp"
#include "hypermat/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypermat {

// Window membership for the character of the rank <= p intersection
// cohomology module on n1 x n2 matrices (n1 >= n2): given lambda of rank n2
// with lambda_p >= p - n2 and lambda_{p+1} <= p - n1, returns the rank-n1
// partner lambda(p); otherwise nullopt.
std::optional<Weight> matrix_char_member(int p, int n1, int n2, const Weight& lambda);

// Cohomology of the bundle S_nu Q on the Grassmannian of k-dimensional
// quotients of C^n: at most one degree survives; returns (degree, weight).
struct BottPush {
  int degree = 0;
  Weight weight;
};
std::optional<BottPush> bott_pushforward(const Weight& nu, int k, int n);

// Same with rank-2 twists carried along unchanged.
struct BottPushTriple {
  int degree = 0;
  TripleWeight weight;
};
std::optional<BottPushTriple> bott_pushforward(const Weight& alpha, const Weight& beta,
                                               const Weight& nu, int n);

// Desingularization bundle configurations for the Euler-characteristic
// limits.  Y111 is the bundle over P(A) x P(B) x P(C), Y222 the one over the
// Grassmannian of planes in C, Y222Twisted its twist by the relative
// determinant line.
enum class EulerConfig { Y111, Y222, Y222Twisted };
EulerConfig parse_euler_config(const std::string& s);
std::string to_string(EulerConfig c);

// Stable multiplicity of t in the Euler characteristic of the pushforward of
// the localized structure sheaf for the given configuration.
Int euler_limit(EulerConfig cfg, const TripleWeight& t, int n,
                const StabilizationPolicy& policy = StabilizationPolicy::from_env());

// Three-valued multiplicity verdict with the route that produced it.
struct Verdict {
  bool known = false;
  Int value = 0;
  std::string provenance;

  static Verdict known_value(Int v, std::string route) { return {true, std::move(v), std::move(route)}; }
  static Verdict undetermined(std::string route) { return {false, 0, std::move(route)}; }
};

// Multiplicity of the irreducible of weight t in the simple s.  Exact for
// the determinantal simples; for the remaining simples, exact where a
// character identity or window reduction applies, Undetermined otherwise.
Verdict simple_char_multiplicity(SimpleLabel s, const TripleWeight& t, int n,
                                 const StabilizationPolicy& policy = StabilizationPolicy::from_env());

// Cheap gamma-level admissibility: false guarantees every multiplicity with
// this third factor vanishes (window scans prune on this before touching the
// rank-two factors).
bool character_window_admits(SimpleLabel s, const Weight& gamma, int n);

struct WitnessReport {
  SimpleLabel target;
  TripleWeight weight;
  int n = 0;
  std::map<SimpleLabel, Verdict> verdicts;
  enum class Status { Verified, PartiallyVerified, Failed } status = Status::Failed;
  std::string summary() const;
};

WitnessReport witness_check(SimpleLabel s, const TripleWeight& t, int n,
                            const StabilizationPolicy& policy = StabilizationPolicy::from_env());

// The tabulated witness weights for each simple; t-parameter families are
// instantiated at the given values (only n = 3 has such families).
std::vector<std::pair<SimpleLabel, TripleWeight>> witness_table(int n, const std::vector<int>& ts = {1, 2, 3});

} // namespace hypermat

#include "hypermat/schur.hpp"

#include <doctest.h>

#include <random>

using namespace hypermat;

TEST_CASE("schur characters in two variables") {
  const LaurentChar s1 = schur_char(Weight({1, 0}), 2);
  CHECK(s1.size() == 2);
  CHECK(s1.coeff({1, 0}) == 1);
  CHECK(s1.coeff({0, 1}) == 1);

  const LaurentChar s11 = schur_char(Weight({1, 1}), 2);
  CHECK(s11.size() == 1);
  CHECK(s11.coeff({1, 1}) == 1);
}

TEST_CASE("hook content count at the all-ones point") {
  CHECK(schur_char(Weight({2, 1, 0}), 3).eval_ones() == 8);
  CHECK(weyl_dim(Weight({2, 1, 0})) == 8);
}

TEST_CASE("negative entries via the determinant twist") {
  const LaurentChar s = schur_char(Weight({0, -1}), 2);
  CHECK(s.coeff({0, -1}) == 1);
  CHECK(s.coeff({-1, 0}) == 1);
}

TEST_CASE("pieri products at rank two and four") {
  const auto dec = lr_decompose(Weight({1, 0}), Weight({1, 0}), 2);
  CHECK(dec.size() == 2);
  CHECK(dec.at(Weight({2, 0})) == 1);
  CHECK(dec.at(Weight({1, 1})) == 1);

  const int a = 9, t = 2;
  const auto sym2 = lr_decompose(Weight({2, 0}), Weight({a - t, t}), 2);
  CHECK(sym2.at(Weight({a - t + 2, t})) == 1);
  CHECK(sym2.at(Weight({a - t + 1, t + 1})) == 1);
  CHECK(sym2.at(Weight({a - t, t + 2})) == 1);

  const auto wedge = lr_decompose(Weight({1, 1, 0, 0}), Weight({a, 0, 0, 0}), 4);
  CHECK(wedge.size() == 2);
  CHECK(wedge.at(Weight({a, 1, 1, 0})) == 1);
  CHECK(wedge.at(Weight({a + 1, 1, 0, 0})) == 1);
}

TEST_CASE("symmetric square of the tensor square") {
  const DecompResult dec = plethysm_2x2(Weight({2}));
  CHECK(dec.mult.size() == 2);
  CHECK(dec.mult.at({Weight({2, 0}), Weight({2, 0})}) == 1);
  CHECK(dec.mult.at({Weight({1, 1}), Weight({1, 1})}) == 1);
}

TEST_CASE("hook family and two-row vanishing multiplicities") {
  CHECK(plethysm_pair_multiplicity(Weight({18, 1, 1}), Weight({17, 3}), Weight({17, 3})) == 1);
  CHECK(plethysm_pair_multiplicity(Weight({11, 1, 0, 0}), Weight({8, 4}), Weight({6, 6})) == 0);
}

TEST_CASE("full table and targeted multiplicities agree") {
  std::mt19937 gen(11);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<int> parts(4, 0);
    for (int& p : parts) p = static_cast<int>(gen() % 5);
    std::sort(parts.rbegin(), parts.rend());
    const Weight gamma(parts);
    const DecompResult dec = plethysm_2x2(gamma);
    for (const auto& [ab, m] : dec.mult)
      CHECK(plethysm_pair_multiplicity(gamma, ab.first, ab.second) == m);
    // a few absent pairs
    const long long d = gamma.degree();
    for (int a1 = static_cast<int>(d); a1 >= (d + 1) / 2; --a1) {
      const Weight alpha({a1, static_cast<int>(d) - a1});
      for (int b1 = static_cast<int>(d); b1 >= (d + 1) / 2; --b1) {
        const Weight beta({b1, static_cast<int>(d) - b1});
        if (!dec.mult.count({alpha, beta}))
          CHECK(plethysm_pair_multiplicity(gamma, alpha, beta) == 0);
      }
    }
  }
}

TEST_CASE("swap symmetry and duality of the decomposition") {
  const Weight gamma({5, 3, 2, 1});
  const DecompResult dec = plethysm_2x2(gamma);
  for (const auto& [ab, m] : dec.mult) {
    CHECK(dec.mult.at({ab.second, ab.first}) == m);
  }
  const DecompResult dual = plethysm_2x2(gamma.dual());
  CHECK(dual.mult.size() == dec.mult.size());
  for (const auto& [ab, m] : dec.mult) {
    CHECK(dual.mult.at({ab.first.dual(), ab.second.dual()}) == m);
  }
}

TEST_CASE("multiplicities in the polynomial ring") {
  CHECK(sym_multiplicity(TripleWeight(Weight({1, 0}), Weight({1, 0}), Weight({1, 0, 0}))) == 1);
  CHECK(sym_multiplicity(TripleWeight(Weight({2, 0}), Weight({1, 0}), Weight({1, 0, 0}))) == 0);
  CHECK(sym_multiplicity(TripleWeight(Weight({3, 3}), Weight({3, 3}), Weight({2, 2, 2}))) == 1);
  // more than four rows cannot appear
  CHECK(sym_multiplicity(TripleWeight(Weight({3, 2}), Weight({3, 2}),
                                      Weight({1, 1, 1, 1, 1}))) == 0);
}

TEST_CASE("localization multiplicities at the semi-invariant") {
  CHECK(localization_multiplicity(TripleWeight(Weight({-1, -3}), Weight({-2, -2}), Weight({-1, -1, -2}))) == 1);
  CHECK(localization_multiplicity(TripleWeight(Weight({-2, -2}), Weight({-2, -2}), Weight({-1, -1, -2}))) == 0);
  CHECK(localization_multiplicity(TripleWeight(Weight({0, 0}), Weight({0, 0}), Weight({0, 0, 0}))) == 1);
  CHECK(localization_multiplicity(TripleWeight(Weight({-3, -3}), Weight({-3, -3}), Weight({-2, -2, -2}))) == 1);
}

TEST_CASE("stabilization failure is reported, not guessed") {
  StabilizationPolicy p;
  p.cap_offset = -100;  // hard cap below the starting point
  CHECK_THROWS_AS(localization_multiplicity(
                      TripleWeight(Weight({0, 0}), Weight({0, 0}), Weight({0, 0, 0})), p),
                  StabilizationError);
}

TEST_CASE("environment override of the stabilization cap") {
  setenv("HYPERMAT_STAB_CAP", "48", 1);
  CHECK(StabilizationPolicy::from_env().cap_offset == 48);
  unsetenv("HYPERMAT_STAB_CAP");
  CHECK(StabilizationPolicy::from_env().cap_offset == 32);
}

TEST_CASE("mixed tensor multiplicities recover determinant powers") {
  // S_{(-1)^{2n}}(B ox C) = det(B ox C)^{-1} at n = 4
  const int n = 4;
  CHECK(traceless_mixed_multiplicity(0, 0, Weight({0, 0}), Weight::zeros(n)) == 1);
  CHECK(traceless_mixed_multiplicity(0, 0, Weight({1, -1}), Weight::zeros(n)) == 0);
  // Sym^1 ox Sym^1* = adjoint + trivial
  CHECK(traceless_mixed_multiplicity(1, 1, Weight({0, 0}), Weight::zeros(n)) == 0);
  CHECK(mixed_tensor_multiplicity(1, 1, Weight({0, 0}), Weight::zeros(n)) == 1);
}

TEST_CASE("diagonal expansions match the two-factor pairing for small degree") {
  for (int d = 1; d <= 8; ++d) {
    const DecompResult dec = plethysm_2x2(Weight({d}));
    for (const auto& [ab, m] : dec.mult) {
      CHECK(ab.first == ab.second);
      CHECK(m == 1);
    }
    CHECK(dec.mult.size() == static_cast<size_t>(d / 2 + 1));
  }
}

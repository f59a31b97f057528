#include "hypermat/weights.hpp"

#include <doctest.h>

#include <random>

using namespace hypermat;

TEST_CASE("normalization of a dominant weight is the identity with sign +1") {
  const SignedWeight s = bott_normalize(Weight({2, 1, 0}));
  CHECK(s.sign == 1);
  CHECK(s.weight == Weight({2, 1, 0}));
}

TEST_CASE("weights whose rho-shift has a repeat vanish") {
  CHECK(bott_normalize(Weight({-1, 0})).zero());
  // (0,1) + (1,0) = (1,1)
  CHECK(bott_normalize(Weight({0, 1})).zero());
}

TEST_CASE("a single transposition flips the sign") {
  const SignedWeight s = bott_normalize(Weight({4, -1, 3}));
  CHECK(s.sign == -1);
  CHECK(s.weight == Weight({4, 2, 0}));
}

TEST_CASE("triple normalization multiplies factor signs and vanishes factorwise") {
  const TripleWeight t(Weight({1, 0}), Weight({1, 0}), Weight({1, 0, 0}));
  const SignedTriple s = triple_normalize(t);
  CHECK(s.sign == 1);
  CHECK(s.weight == t);

  CHECK(triple_normalize(TripleWeight(Weight({-1, 0}), Weight({2, 2}), Weight({3, 2, 1}))).zero());
  // the first two factors each hit a repeated rho-shift
  CHECK(triple_normalize(TripleWeight(Weight({0, 1}), Weight({0, 1}), Weight({1, 0, 0}))).zero());
}

TEST_CASE("permuting the rho-shifted entries fixes the representative and twists the sign") {
  std::mt19937 gen(7);
  for (int iter = 0; iter < 500; ++iter) {
    const int rank = 2 + static_cast<int>(gen() % 4);
    std::vector<int> e(rank);
    for (int& x : e) x = static_cast<int>(gen() % 15) - 7;
    const Weight lam(e);
    std::vector<int> v = e;
    for (int i = 0; i < rank; ++i) v[i] += rank - 1 - i;
    int parity = 1;
    for (int i = rank - 1; i > 0; --i) {
      const int j = static_cast<int>(gen() % (i + 1));
      if (j != i) {
        std::swap(v[i], v[j]);
        parity = -parity;
      }
    }
    for (int i = 0; i < rank; ++i) v[i] -= rank - 1 - i;
    const SignedWeight a = bott_normalize(lam);
    const SignedWeight b = bott_normalize(Weight(v));
    CHECK(a.sign * parity == b.sign);
    if (!a.zero()) CHECK(a.weight == b.weight);
  }
}

TEST_CASE("fourier weight mirrors the two-variable families") {
  // n = 3: (t-2,-t-2)^2 x (-1,-1,-2) <-> (t-4,-t-4)^2 x (-2,-3,-3)
  const int t = 2;
  const TripleWeight in(Weight({t - 2, -t - 2}), Weight({t - 2, -t - 2}), Weight({-1, -1, -2}));
  const TripleWeight out = fourier_weight(in);
  CHECK(out == TripleWeight(Weight({t - 4, -t - 4}), Weight({t - 4, -t - 4}), Weight({-2, -3, -3})));
  CHECK(fourier_weight(out) == in);
}

TEST_CASE("dual and pad behave") {
  CHECK(Weight({3, 1, -2}).dual() == Weight({2, -1, -3}));
  CHECK(Weight({2, 1}).padded(4) == Weight({2, 1, 0, 0}));
  CHECK(Weight({2, 1}).degree() == 3);
}

#include "hypermat/orbits.hpp"

#include <doctest.h>

using namespace hypermat;

TEST_CASE("orbit dimensions and catalog shape") {
  CHECK(orbit_dim(5, 5) == 13);
  const auto cat3 = orbit_catalog(3);
  CHECK(cat3.size() == 9);
  CHECK(cat3.back().label == "O8");
  CHECK(cat3.back().dense);
  const auto cat4 = orbit_catalog(4);
  CHECK(cat4.size() == 10);
  CHECK(cat4[8].label == "O8");
  CHECK(cat4[8].hypersurface);
  CHECK(!orbit_catalog(5)[8].hypersurface);
  CHECK(orbit_catalog(3)[7].hypersurface);  // the degree-(2,2,2) invariant divisor
  CHECK_THROWS(orbit_catalog(2));
}

TEST_CASE("only the rank-two subspace orbit has a disconnected stabilizer") {
  for (int n : {3, 4, 5, 7})
    for (const OrbitEntry& e : orbit_catalog(n)) CHECK(e.z2_component_group == (e.index == 6));
}

TEST_CASE("hasse edges strictly decrease dimension") {
  for (int n : {3, 4, 5, 6, 7})
    for (const OrbitEntry& e : orbit_catalog(n))
      for (const std::string& lo : e.closure_covers) {
        const int lo_idx = std::stoi(lo.substr(1));
        CHECK(orbit_dim(e.index, n) > orbit_dim(lo_idx, n));
      }
}

TEST_CASE("cover relations drop by the tabulated amounts") {
  // drops as functions of n: 9->8: n-3, 8->7: 1, 7->6: n-2, 6->5: 1,
  // 5->4 and 5->3: 2, 5->2: n, 4->1 and 3->1: n-1, 2->1: 1, 1->0: n+2
  for (int n : {4, 5, 6}) {
    auto drop = [&](int hi, int lo) { return orbit_dim(hi, n) - orbit_dim(lo, n); };
    CHECK(drop(9, 8) == n - 3);
    CHECK(drop(8, 7) == 1);
    CHECK(drop(7, 6) == n - 2);
    CHECK(drop(6, 5) == 1);
    CHECK(drop(5, 4) == 2);
    CHECK(drop(5, 3) == 2);
    CHECK(drop(5, 2) == n);
    CHECK(drop(4, 1) == n - 1);
    CHECK(drop(3, 1) == n - 1);
    CHECK(drop(2, 1) == 1);
    CHECK(drop(1, 0) == n + 2);
  }
}

TEST_CASE("fourier is an involution matching projective duality") {
  for (int n : {3, 4, 5, 6}) {
    for (SimpleLabel s : simples_for(n)) {
      const SimpleLabel f = fourier(s, n);
      CHECK(fourier(f, n) == s);
    }
    CHECK(fourier(SimpleLabel::D3, n) == SimpleLabel::D3);
    CHECK(fourier(SimpleLabel::D5, n) == SimpleLabel::D5);
    CHECK(fourier(SimpleLabel::D6p, n) == SimpleLabel::D6p);
  }
  CHECK(fourier(SimpleLabel::D2, 3) == SimpleLabel::D6);
  CHECK(fourier(SimpleLabel::D0, 4) == SimpleLabel::D9);
  CHECK(fourier(SimpleLabel::D6, 4) == SimpleLabel::D6);
  CHECK_THROWS(fourier(SimpleLabel::D9, 3));
}

TEST_CASE("characteristic cycle supports") {
  CHECK(conormal_cycle(SimpleLabel::D5, 3) == std::vector<std::string>{"O5", "O4", "O3"});
  CHECK(conormal_cycle(SimpleLabel::D5, 6) == std::vector<std::string>{"O5", "O4", "O3"});
  CHECK(conormal_cycle(SimpleLabel::D6p, 3) == std::vector<std::string>{"O6", "O5", "O2"});
  CHECK(conormal_cycle(SimpleLabel::D6p, 5) == std::vector<std::string>{"O6", "O5"});
  CHECK(conormal_cycle(SimpleLabel::D2, 4) == std::vector<std::string>{"O2"});
}

TEST_CASE("fourier and conormal supports are exchanged by duality") {
  for (int n : {3, 4, 5}) {
    for (SimpleLabel s : simples_for(n)) {
      const auto cyc = conormal_cycle(s, n);
      const auto dual_cyc = conormal_cycle(fourier(s, n), n);
      // duality exchange on orbit labels
      std::vector<std::string> mapped;
      for (const std::string& o : cyc)
        mapped.push_back("O" + std::to_string(dual_orbit_index(std::stoi(o.substr(1)), n)));
      std::sort(mapped.begin(), mapped.end());
      auto sorted_dual = dual_cyc;
      std::sort(sorted_dual.begin(), sorted_dual.end());
      CHECK(mapped == sorted_dual);
    }
  }
}

TEST_CASE("label expansion") {
  CHECK(expand_label(ModLabel::E, 5) == std::vector<SimpleLabel>{SimpleLabel::D0});
  CHECK(expand_label(ModLabel::S, 3) == std::vector<SimpleLabel>{SimpleLabel::D8});
  CHECK(expand_label(ModLabel::S, 4) == std::vector<SimpleLabel>{SimpleLabel::D9});
  CHECK(expand_label(ModLabel::Q2, 4) ==
        std::vector<SimpleLabel>{SimpleLabel::D6, SimpleLabel::D2, SimpleLabel::D0});
}

TEST_CASE("closure containment follows the diagram") {
  CHECK(closure_contains(6, 2, 4));
  CHECK(closure_contains(5, 0, 4));
  CHECK(!closure_contains(3, 4, 4));
  CHECK(!closure_contains(2, 6, 4));
}

TEST_CASE("semi-invariant data") {
  const auto roots = semi_invariant_b_roots_n3();
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].num == -1);
  CHECK(roots[1].num == -3);
  CHECK(roots[1].den == 2);
  CHECK(roots[2].mult == 2);
}

TEST_CASE("dot output is stable") {
  const std::string dot = hasse_dot(5);
  CHECK(dot.find("O9 -> O8") != std::string::npos);
  CHECK(hasse_dot(3).find("O9") == std::string::npos);
}

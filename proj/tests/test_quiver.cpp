#include "hypermat/quiver.hpp"

#include <doctest.h>

using namespace hypermat;

TEST_CASE("vertex and arrow counts") {
  const Quiver q3 = build_quiver(3);
  CHECK(q3.vertices.size() == 10);
  CHECK(q3.arrows.size() == 20);
  const Quiver q4 = build_quiver(4);
  CHECK(q4.vertices.size() == 11);
  CHECK(q4.arrows.size() == 18);
  const Quiver q5 = build_quiver(5);
  CHECK(q5.vertices.size() == 11);
  CHECK(q5.arrows.size() == 10);
  CHECK(build_quiver(7).arrows.size() == 10);
  CHECK_THROWS(build_quiver(2));
}

TEST_CASE("the long diagonal path survives at n = 3") {
  const Quiver q = build_quiver(3);
  const PathSpace ps = path_space(q, "0", "8");
  REQUIRE(ps.dim() == 1);
  CHECK(q.path_str(ps.basis[0]) == "a1.a1'.a7'.a8");
}

TEST_CASE("two-cycles vanish everywhere") {
  for (int n : {3, 4, 5}) {
    const Quiver q = build_quiver(n);
    for (const std::string& v : q.vertices) {
      const PathSpace loops = path_space(q, v, v);
      CHECK(loops.dim() == 1);  // only the trivial path
    }
  }
}

TEST_CASE("length-two spaces at n = 4") {
  const Quiver q = build_quiver(4);
  CHECK(path_space(q, "3", "4").dim() == 1);
  CHECK(path_space(q, "4", "3").dim() == 1);
  CHECK(path_space(q, "1", "6").dim() == 0);  // killed by the tip relations
  CHECK(path_space(q, "0", "9").dim() == 1);  // the localization chain survives
}

TEST_CASE("global path finiteness under the depth cap") {
  for (int n : {3, 4, 5}) CHECK(longest_nonzero_path(build_quiver(n), 8) < 8);
}

TEST_CASE("symmetries") {
  for (int n : {3, 4, 5}) {
    const SymReport rep = check_symmetries(build_quiver(n));
    CHECK(rep.fourier_automorphism);
    CHECK(rep.fourier_involution_on_arrows);
    CHECK(rep.reversal_preserves_relations);
  }
}

TEST_CASE("component census for the stable range") {
  const auto census = component_census(build_quiver(6));
  int isolated = 0, a2 = 0, a3 = 0;
  for (const auto& [verts, kind] : census) {
    if (kind == "isolated") ++isolated;
    if (kind == "doubled-A2") ++a2;
    if (kind == "doubled-A3") ++a3;
    CHECK(kind != "other");
  }
  CHECK(isolated == 2);
  CHECK(a2 == 3);
  CHECK(a3 == 1);
}

TEST_CASE("localization chain representation satisfies every relation") {
  // one-dimensional spaces along (0) -> (1) -> (6') -> (7) -> (8); the four
  // chain arrows act by the identity and every other arrow by zero
  const Quiver q = build_quiver(3);
  const std::vector<std::string> chain = {"a1", "a1'", "a7'", "a8"};
  auto arrow_value = [&](int idx) -> int {
    for (const std::string& nm : chain)
      if (q.arrows[idx].name == nm) return 1;
    return 0;
  };
  for (const Relation& r : q.relations) {
    long long total = 0;
    for (const Relation::Term& t : r.terms) {
      long long prod = t.coeff;
      for (int a : t.path) prod *= arrow_value(a);
      total += prod;
    }
    CHECK(total == 0);
  }
  // and the chain itself is nonzero
  long long prod = 1;
  for (const std::string& nm : chain) prod *= arrow_value(q.arrow_index(nm));
  CHECK(prod == 1);
}

TEST_CASE("arrow sets match the extension dimensions near the small orbits") {
  // extensions between the point, cone, and rank-one modules: the pair
  // (0)(1) is linked only at n = 3, the pair (0)(2) only at n = 4, the pair
  // (1)(2) always, and (3), (4) never touch (0) or (1)
  for (int n : {3, 4, 5, 6}) {
    const Quiver q = build_quiver(n);
    auto linked = [&](const std::string& u, const std::string& v) {
      return q.arrow_between(u, v).has_value() && q.arrow_between(v, u).has_value();
    };
    CHECK(linked("0", "1") == (n == 3));
    CHECK(linked("0", "2") == (n == 4));
    CHECK(linked("1", "2"));
    for (const std::string& i : {"3", "4"})
      for (const std::string& j : {"0", "1"}) {
        CHECK(!q.arrow_between(i, j).has_value());
        CHECK(!q.arrow_between(j, i).has_value());
      }
  }
}

TEST_CASE("indecomposables over a doubled-A2 component") {
  const Quiver q = build_quiver(5);
  const auto inds = doubled_a2_indecomposables(q, "5");
  CHECK(inds.size() == 4);
  CHECK_THROWS(doubled_a2_indecomposables(q, "0"));
  CHECK_THROWS(doubled_a2_indecomposables(q, "6'"));
}

TEST_CASE("dot output lists every arrow") {
  const Quiver q = build_quiver(4);
  const std::string dot = quiver_dot(q);
  for (const Arrow& a : q.arrows) CHECK(dot.find(a.name) != std::string::npos);
}

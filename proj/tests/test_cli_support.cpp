#include "hypermat/acceptance.hpp"
#include "hypermat/weight_expr.hpp"

#include <doctest.h>

using namespace hypermat;

TEST_CASE("symbolic weight syntax") {
  CHECK(parse_weight_expr("(2,1,0)", 0) == Weight({2, 1, 0}));
  CHECK(parse_weight_expr("(-2^n)", 5) == Weight({-2, -2, -2, -2, -2}));
  CHECK(parse_weight_expr("(2-2n, -n)", 4) == Weight({-6, -4}));
  CHECK(parse_weight_expr("(n-6, 3n)", 3) == Weight({-3, 9}));

  const TripleWeight t = parse_triple_expr("(-2,2-2n)x(-n,-n)x(-2^n)", 4);
  CHECK(t.a == Weight({-2, -6}));
  CHECK(t.b == Weight({-4, -4}));
  CHECK(t.c == Weight({-2, -2, -2, -2}));

  CHECK_THROWS(parse_triple_expr("(1,0)x(1,0)", 3));
  CHECK_THROWS(parse_triple_expr("(1,0)x(1,0)x(1,0)", 3));  // rank disagrees with n
  CHECK_THROWS(parse_weight_expr("(1,,2)", 0));
}

TEST_CASE("witness family weights parse to the tabulated values") {
  const TripleWeight d5 = parse_triple_expr("(-2,2-2n)x(-n,-n)x(-2^n)", 5);
  CHECK(d5.c.rank() == 5);
  CHECK(d5.degrees_match());
}

#include <catch2/catch_amalgamated.hpp>

#include "smallgrp/rational.hpp"

using namespace smallgrp;

TEST_CASE("ratios reduce to lowest terms with positive denominator") {
  CHECK(ExactRatio(40, 64) == ExactRatio(5, 8));
  CHECK(ExactRatio(162, 216) == ExactRatio(3, 4));
  CHECK(ExactRatio(1, -2) == ExactRatio(-1, 2));
  CHECK(ExactRatio(-3, -6) == ExactRatio(1, 2));
  CHECK(ExactRatio(0, 7) == ExactRatio::zero());
  CHECK(ExactRatio(5, 5) == ExactRatio::one());
  ExactRatio r(40, 64);
  CHECK(to_string_128(r.num) == "5");
  CHECK(to_string_128(r.den) == "8");
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(ExactRatio(1, 0), InvalidInputError);
  CHECK_THROWS_AS(ExactRatio::from_counts(1, 0), InvalidInputError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(ExactRatio(1, 2) + ExactRatio(1, 3) == ExactRatio(5, 6));
  CHECK(ExactRatio(1, 2) - ExactRatio(1, 3) == ExactRatio(1, 6));
  CHECK(ExactRatio(1, 2) * ExactRatio(2, 3) == ExactRatio(1, 3));
  CHECK(ExactRatio(-1, 2) * ExactRatio(1, 2) == ExactRatio(-1, 4));
  CHECK(ExactRatio(3, 4) - ExactRatio(3, 4) == ExactRatio::zero());
}

TEST_CASE("comparisons agree with cross multiplication on small fractions") {
  for (int a = 0; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b)
      for (int c = 0; c <= 12; ++c)
        for (int d = 1; d <= 12; ++d) {
          bool expect = a * d < c * b;
          CHECK((ExactRatio(a, b) < ExactRatio(c, d)) == expect);
        }
}

TEST_CASE("comparisons survive magnitudes where cross multiplication would overflow") {
  int128 big = int128{1} << 100;
  // big/(big-1) > (big+1)/big since both exceed 1 by 1/(big-1) vs 1/big.
  ExactRatio x(big, big - 1);
  ExactRatio y(big + 1, big);
  CHECK(y < x);
  CHECK(x > y);
  CHECK(x != y);
  CHECK(ExactRatio(big, big) == ExactRatio::one());
  CHECK(ExactRatio(-big, big - 1) < ExactRatio(-(big + 1), big));
}

TEST_CASE("from_counts handles values beyond signed range by reduction only") {
  uint128 n = uint128{1} << 100;
  CHECK(ExactRatio::from_counts(n, n * 4) == ExactRatio(1, 4));
  // 2^127 is coprime to 3, so reduction cannot rescue it from the signed cap.
  CHECK_THROWS_AS(ExactRatio::from_counts(uint128{1} << 127, 3), OverflowError);
  CHECK_THROWS_AS(ExactRatio::from_counts(3, uint128{1} << 127), OverflowError);
}

TEST_CASE("checked arithmetic overflows loudly") {
  int128 big = int128{1} << 126;
  CHECK_THROWS_AS(ExactRatio(big, 3) + ExactRatio(big, 5), OverflowError);
  CHECK_THROWS_AS(ExactRatio(big, 1) * ExactRatio(big, 1), OverflowError);
}

TEST_CASE("decimal rendering uses six places") {
  CHECK(decimal6(ExactRatio(1, 2)) == "0.500000");
  CHECK(decimal6(ExactRatio(5, 8)) == "0.625000");
  CHECK(decimal6(ExactRatio(3, 4)) == "0.750000");
  CHECK(decimal6(ExactRatio(2, 3)) == "0.666667");
  CHECK(decimal6(ExactRatio(1, 3)) == "0.333333");
  CHECK(decimal6(ExactRatio(5, 4)) == "1.250000");
  CHECK(decimal6(ExactRatio(-5, 8)) == "-0.625000");
  CHECK(decimal6(ExactRatio(7, 1)) == "7.000000");
  CHECK(decimal6(ExactRatio::zero()) == "0.000000");
}

TEST_CASE("decimal rendering rounds half to even") {
  // 0.0000005 ties toward the even digit 0; 0.0000015 ties toward 2.
  CHECK(decimal6(ExactRatio(1, 2000000)) == "0.000000");
  CHECK(decimal6(ExactRatio(3, 2000000)) == "0.000002");
  CHECK(decimal6(ExactRatio(5, 2000000)) == "0.000002");
  CHECK(decimal6(ExactRatio(1, 1000000)) == "0.000001");
  // Above half rounds up regardless of parity.
  CHECK(decimal6(ExactRatio(16, 10000000)) == "0.000002");
}

TEST_CASE("decimal rounding carries through trailing nines") {
  CHECK(decimal6(ExactRatio(1999999, 2000000)) == "1.000000");
  CHECK(decimal6(ExactRatio(9999995, 10000000)) == "1.000000");
  CHECK(decimal6(ExactRatio(9999985, 10000000)) == "0.999998");
  CHECK(decimal6(ExactRatio(-1999999, 2000000)) == "-1.000000");
}

TEST_CASE("display format pairs the fraction with its approximation") {
  CHECK(format_ratio(ExactRatio(5, 8)) == "5/8 (≈0.625000)");
  CHECK(format_ratio(ExactRatio(3, 4)) == "3/4 (≈0.750000)");
  CHECK(format_ratio(ExactRatio(1, 1)) == "1/1 (≈1.000000)");
  CHECK(format_ratio(ExactRatio(7, 12)) == "7/12 (≈0.583333)");
}

TEST_CASE("128-bit values render in decimal") {
  CHECK(to_string_128(int128{0}) == "0");
  CHECK(to_string_128(int128{-42}) == "-42");
  int128 big = int128{1} << 100;
  CHECK(to_string_128(big) == "1267650600228229401496703205376");
  CHECK(to_string_128(uint128{1} << 127) == "170141183460469231731687303715884105728");
}

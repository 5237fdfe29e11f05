#include <random>

#include "doctest.h"
#include "weylfund/exact.hpp"

using namespace weylfund;

TEST_CASE("rationals normalize") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat(4, 2).str() == "2");
  CHECK(Rat::parse("-1/1").str() == "-1");
  CHECK(Rat::parse(" 6/4").str() == "3/2");
  CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rat::parse("abc"), InputError);
  CHECK_THROWS_AS(Rat::parse(""), InputError);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<long> d(-50, 50), p(1, 50);
  for (int i = 0; i < 500; ++i) {
    Rat a(d(gen), p(gen)), b(d(gen), p(gen));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(-Rat(1, 3) > Rat(-1, 2));
}

TEST_CASE("solve_linear") {
  auto x = solve_linear(MatRat::identity(2), std::vector<Rat>{1, 2});
  REQUIRE(x);
  CHECK(*x == std::vector<Rat>{1, 2});

  MatRat a = MatRat::from_rows({{2, -1}, {-1, 2}});
  x = solve_linear(a, std::vector<Rat>{1, 0});
  REQUIRE(x);
  CHECK((*x)[0] == Rat(2, 3));
  CHECK((*x)[1] == Rat(1, 3));

  CHECK_FALSE(solve_linear(MatRat::from_rows({{1, 1}, {1, 1}}), std::vector<Rat>{1, 0}));
  CHECK_THROWS_AS(solve_linear(MatRat(2, 3), std::vector<Rat>{1, 0}), InputError);
  CHECK_THROWS_AS(solve_linear(a, std::vector<Rat>{1}), InputError);
}

TEST_CASE("random systems are solved bit-exactly") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<long> d(-9, 9), p(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    MatRat a(n, n);
    std::vector<Rat> b(n);
    for (int i = 0; i < n; ++i) {
      b[i] = Rat(d(gen), p(gen));
      for (int j = 0; j < n; ++j) a(i, j) = Rat(d(gen), p(gen));
    }
    auto x = solve_linear(a, b);
    CHECK(x.has_value() == !a.determinant().is_zero());
    if (x) CHECK(a * std::span<const Rat>(*x) == b);
  }
}

TEST_CASE("matrix helpers") {
  MatRat m = MatRat::from_rows({{1, 2}, {3, 4}});
  CHECK(m.determinant() == Rat(-2));
  CHECK(m.matrix_rank() == 2);
  CHECK(m.transpose()(0, 1) == Rat(3));
  CHECK(MatRat::from_rows({{1, 2}, {2, 4}}).matrix_rank() == 1);
  CHECK(VecPi{Rat(0), Rat(1)} < VecPi{Rat(1), Rat(-5)});
}

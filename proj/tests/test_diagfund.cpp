#include "doctest.h"
#include "oracles.hpp"

using namespace weylfund;

namespace {

VecPi v1(long a) { return VecPi{Rat(a)}; }

}  // namespace

TEST_CASE("membership in C^(n)") {
  RootSystem a1 = RootSystem::build("A1");
  auto f = is_in_fund(a1, {});
  CHECK(f.in_fund);
  CHECK(f.chain == std::vector<ParabolicIndex>{1});
  CHECK_FALSE(is_in_fund(a1, {v1(0), VecPi{Rat(-1, 2)}}).in_fund);
  f = is_in_fund(a1, {v1(0), v1(1)});
  CHECK(f.in_fund);
  CHECK(f.chain == std::vector<ParabolicIndex>{1, 1, 0});
}

TEST_CASE("canonicalize examples") {
  RootSystem a1 = RootSystem::build("A1");
  auto c = canonicalize(a1, {v1(0), v1(-1)});
  CHECK(c.canonical == TupleV{v1(0), v1(1)});
  CHECK(c.w == simple_reflection(a1, 0));

  RootSystem a2 = RootSystem::build("A2");
  TupleV t{-a2.root(2), a2.root(0)};
  c = canonicalize(a2, t);
  CHECK(c.canonical == TupleV{a2.root(2), -a2.root(1)});
  auto pts = oracle::fund_points(a2, t, enumerate_group(a2));
  REQUIRE(pts.size() == 1);
  CHECK(*pts.begin() == c.canonical);
  CHECK(lex_max_oracle(a2, t) == c.canonical);
  CHECK(canonicalize(a2, c.canonical).word.empty());
  CHECK(lex_max_oracle(a1, {v1(-1)}) == TupleV{v1(1)});
  CHECK(lex_max_oracle(a2, {}).empty());
}

TEST_CASE("canonical form properties on random tuples") {
  std::mt19937_64 gen(23);
  for (const char* t : {"A2", "A3", "B3", "G2", "A1xA2"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    auto group = enumerate_group(rs);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + trial % 3;
      TupleV x = oracle::random_tuple(rs, gen, n);
      auto c = canonicalize(rs, x);
      CHECK(oracle::act(rs, c.w, x) == c.canonical);
      CHECK(static_cast<int>(c.chain.size()) == n + 1);
      CHECK(from_word(rs, c.word) == c.w);
      auto fc = is_in_fund(rs, c.canonical);
      REQUIRE(fc.in_fund);
      CHECK(fc.chain == c.chain);
      // Recursion: prefix in C^(m) and tail in the stabilizer's domain.
      for (int m = 1; m < n; ++m) {
        TupleV head(c.canonical.begin(), c.canonical.begin() + m), tail(c.canonical.begin() + m, c.canonical.end());
        CHECK(is_in_fund(rs, head).in_fund);
        CHECK(is_in_fund(rs, tail, c.chain[m]).in_fund);
      }
      // Convexity.
      TupleV y = canonicalize(rs, oracle::random_tuple(rs, gen, n)).canonical;
      for (Rat s : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
        TupleV mix;
        for (int i = 0; i < n; ++i) mix.push_back(s * c.canonical[i] + (Rat(1) - s) * y[i]);
        CHECK(is_in_fund(rs, mix).in_fund);
      }
      // Nesting for standard parabolics.
      ParabolicIndex J = gen() % (full_index(rs.rank()) + 1);
      TupleV inj = canonicalize(rs, x, J).canonical;
      for (ParabolicIndex I = J;; I = (I - 1) & J) {
        CHECK(is_in_fund(rs, inj, I).in_fund);
        if (I == 0) break;
      }
    }
  }
}

TEST_CASE("root canonicalization agrees with vector canonicalization") {
  std::mt19937_64 gen(4);
  RootSystem rs = RootSystem::build("F4");
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> roots;
    for (int i = 0; i < 1 + trial % 4; ++i) roots.push_back(gen() % rs.num_roots());
    auto rc = canonicalize_roots(rs, roots);
    auto c = canonicalize(rs, roots_tuple(rs, roots));
    CHECK(roots_tuple(rs, rc.canonical) == c.canonical);
    CHECK(rc.word == c.word);
    CHECK(rc.chain == c.chain);
    CHECK(roots_in_fund(rs, rc.canonical));
  }
}

TEST_CASE("place permutations and dot action") {
  CHECK(place_permute(transposition(3, 1, 3), std::vector<int>{7, 8, 9}) == std::vector<int>{9, 8, 7});
  CHECK_THROWS_AS(check_place_perm({0, 0}, 2), InputError);
  CHECK_THROWS_AS(transposition(3, 0, 1), InputError);

  RootSystem a2 = RootSystem::build("A2");
  TupleV b{a2.root(2), -a2.root(0)};
  CHECK(dot_action(a2, {0, 1}, b) == b);
  CHECK_THROWS_AS(dot_action(a2, {0, 1}, {-a2.root(2), a2.root(0)}), InputError);
  // sigma b already in C^(2).
  TupleV z{VecPi(2), a2.root(2)};
  CHECK(dot_action(a2, {1, 0}, z) == TupleV{a2.root(2), VecPi(2)});
}

TEST_CASE("diagram automorphism images") {
  RootSystem b2 = RootSystem::build("B2");
  TupleV b = canonicalize(b2, {b2.root(b2.simple(0)), b2.root(b2.simple(1))}).canonical;
  CHECK(diagram_rho_image(b2, b) == b);

  RootSystem a2 = RootSystem::build("A2");
  CHECK(diagram_rho_image(a2, {a2.root(2)}) == TupleV{a2.root(2)});
  CHECK_THROWS_AS(diagram_rho_image(a2, {-a2.root(2)}), InputError);

  RootSystem a3 = RootSystem::build("A3");
  int theta = a3.find_root(std::vector<int>{1, 1, 1});
  for (int j : {0, 2}) {
    TupleV t = roots_tuple(a3, {theta, a3.negate(j)});
    REQUIRE(is_in_fund(a3, t).in_fund);
    CHECK(canonicalize(a3, rho_b_image(a3, t)).canonical == diagram_rho_image(a3, t));
  }

  // -omega_0 preserves C^(n) on tuples of roots.
  auto rho = ambient_rho(a3);
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> r;
    for (int i = 0; i < 3; ++i) r.push_back(gen() % a3.num_roots());
    r = canonicalize_roots(a3, r).canonical;
    for (int& x : r) x = rho[x];
    CHECK(roots_in_fund(a3, r));
  }
}

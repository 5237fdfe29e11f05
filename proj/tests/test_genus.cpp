#include <numeric>

#include "doctest.h"
#include "oracles.hpp"

using namespace weylfund;

namespace {

Genus sigma_n(int n) {
  Genus g(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return g;
}

Genus permuted(const Genus& c, const std::vector<int>& order) {
  const std::size_t n = order.size();
  Genus m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a, b) = c(order[a], order[b]);
  return m;
}

// The ordering rules evaluated over every permutation of the Bourbaki
// Cartan matrix; returns the distinct winning matrices.
std::set<Genus> rule_search(const SimpleType& t) {
  const Genus c = cartan_from_diagram(dynkin_diagram(t));
  const int n = t.rank;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<std::vector<int>, Genus>> found;
  int best_l = 0;
  std::vector<std::tuple<int, std::vector<int>, Genus>> all;
  do {
    Genus m = permuted(c, order);
    int l = 0;
    for (int k = 1; k <= n; ++k) {
      bool ok = true;
      for (int a = 0; a < k && ok; ++a)
        for (int b = 0; b < k && ok; ++b) ok = m(a, b) == sigma_n(k)(a, b);
      if (ok) l = k;
    }
    std::vector<int> parents;
    bool ok = true;
    for (int i = l; i < n && ok; ++i) {
      int count = 0, p = -1;
      for (int a = 0; a < i; ++a)
        if (!m(a, i).is_zero()) {
          ++count;
          p = a;
        }
      ok = count == 1;
      parents.push_back(p);
    }
    if (ok) all.emplace_back(l, parents, m);
    best_l = std::max(best_l, l);
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<int> best_p;
  bool have = false;
  for (auto& [l, p, m] : all)
    if (l == best_l && (!have || p > best_p)) {
      best_p = p;
      have = true;
    }
  std::set<Genus> winners, tie;
  for (auto& [l, p, m] : all)
    if (l == best_l && p == best_p) {
      winners.insert(m);
      if (best_l < n && m(best_l - 1, best_l) == Rat(-1)) tie.insert(m);
    }
  return tie.empty() ? winners : tie;
}

}  // namespace

TEST_CASE("genus maps") {
  RootSystem a1 = RootSystem::build("A1");
  CHECK(gram_genus(a1, {a1.root(0)}) == MatRat::from_rows({{2}}));
  RootSystem a2 = RootSystem::build("A2");
  CHECK(gram_genus(a2, {a2.root(0), a2.root(1)}) == MatRat::from_rows({{2, -1}, {-1, 2}}));
  Genus rep = gram_genus(a2, {a2.root(0), a2.root(1), a2.root(0)});
  for (int i = 0; i < 3; ++i) CHECK(rep(i, 0) == rep(i, 2));
  CHECK(cartan_genus(a2, {a2.root(0), a2.root(1)}) == a2.cartan());
  CHECK(cartan_genus(a1, {a1.root(0), -a1.root(0)}) == MatRat::from_rows({{2, -2}, {-2, 2}}));
  CHECK(cartan_genus(a2, {a2.root(0), a2.root(2)}) == MatRat::from_rows({{2, 1}, {1, 2}}));
  CHECK_THROWS_AS(cartan_genus(a2, {VecPi{Rat(1), Rat(2)}}), InputError);
  for (const char* t : {"B3", "G2", "F4", "D4"}) {
    RootSystem rs = RootSystem::build(t);
    std::vector<int> pi(rs.rank());
    std::iota(pi.begin(), pi.end(), 0);
    CHECK(cartan_genus_roots(rs, pi) == rs.cartan());
    CHECK(gram_genus_roots(rs, pi) == rs.gram());
  }
}

TEST_CASE("gram genus equivariance and column criterion") {
  std::mt19937_64 gen(9);
  RootSystem rs = RootSystem::build("B3");
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    TupleV t = oracle::random_tuple(rs, gen, n);
    PlacePerm s(n);
    std::iota(s.begin(), s.end(), 0);
    std::shuffle(s.begin(), s.end(), gen);
    Genus g = gram_genus(rs, t);
    CHECK(gram_genus(rs, place_permute(s, t)) == permute_genus(g, s));
    bool distinct_entries = std::set<VecPi>(t.begin(), t.end()).size() == t.size();
    std::set<std::vector<Rat>> cols;
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> col;
      for (int i = 0; i < n; ++i) col.push_back(g(i, j));
      cols.insert(col);
    }
    CHECK(distinct_entries == (static_cast<int>(cols.size()) == n));
  }
}

TEST_CASE("genus types") {
  Genus one = MatRat::from_rows({{2}});
  CHECK(genus_type(one).canonical == one);
  CHECK(genus_type(one).orbit_size == 1);
  RootSystem a2 = RootSystem::build("A2");
  CHECK(genus_type(cartan_genus_roots(a2, {0, 1})).canonical == genus_type(cartan_genus_roots(a2, {1, 0})).canonical);

  std::mt19937_64 gen(12);
  RootSystem f4 = RootSystem::build("F4");
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) roots.push_back(gen() % f4.num_roots());
    Genus g = cartan_genus_roots(f4, roots);
    PlacePerm s(n);
    std::iota(s.begin(), s.end(), 0);
    std::shuffle(s.begin(), s.end(), gen);
    GenusType a = genus_type(g), b = genus_type(permute_genus(g, s));
    CHECK(a.canonical == b.canonical);
    CHECK(a.orbit_size == b.orbit_size);
    CHECK(permuted(g, a.perm) == a.canonical);
    if (n <= 5) {
      // Lexicographic minimum over all simultaneous permutations.
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      Genus best = g;
      std::set<Genus> orbit;
      do {
        Genus m = permuted(g, order);
        orbit.insert(m);
        best = std::min(best, m);
      } while (std::next_permutation(order.begin(), order.end()));
      CHECK(a.canonical == best);
      CHECK(a.orbit_size == orbit.size());
    }
  }
  CHECK_THROWS_AS(genus_type(MatRat::identity(11)), ResourceLimit);
  CHECK(genus_type(MatRat::identity(10)).orbit_size == 1);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(sigma_n(1)).size() == 1);
  for (int n = 2; n <= 6; ++n) {
    auto g = automorphism_group(sigma_n(n));
    REQUIRE(g.size() == 2);
    PlacePerm rev(n);
    for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
    CHECK(g[1] == rev);
  }
  CHECK(automorphism_group(MatRat::from_rows({{2, 0}, {0, 2}})).size() == 2);
  CHECK(automorphism_count(MatRat::identity(6)) == 720);
  CHECK_THROWS_AS(automorphism_group(MatRat::identity(11)), ResourceLimit);
}

TEST_CASE("generalized Cartan matrix recognition") {
  RootSystem b2 = RootSystem::build("B2");
  auto dc = classify_gcm(b2.cartan());
  REQUIRE(dc);
  REQUIRE(dc->components.size() == 1);
  CHECK(dc->components[0].label == "B2");
  CHECK(dc->finite_type().str() == "B2");

  dc = classify_gcm(MatRat::from_rows({{2, -2}, {-2, 2}}));
  REQUIRE(dc);
  CHECK(dc->components[0].label == "A1^(1)");
  CHECK(dc->components[0].affine);

  dc = classify_gcm(MatRat::from_rows({{2, 0}, {0, 2}}));
  REQUIRE(dc);
  CHECK(dc->finite_type().str() == "A1xA1");

  CHECK_FALSE(classify_gcm(MatRat::from_rows({{2, 1}, {1, 2}})));
  CHECK_FALSE(classify_gcm(MatRat::from_rows({{2, -1}, {0, 2}})));
  CHECK_FALSE(classify_gcm(MatRat::from_rows({{2, Rat(-1, 2)}, {-2, 2}})));
  dc = classify_gcm(MatRat::from_rows({{2, -3}, {-3, 2}}));
  REQUIRE(dc);
  CHECK(dc->components[0].label == "Other");

  // Every finite type is recognized from a shuffled Cartan matrix.
  std::mt19937_64 gen(1);
  for (const char* t : {"A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "A2xB3", "C3"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    PlacePerm s(rs.rank());
    std::iota(s.begin(), s.end(), 0);
    std::shuffle(s.begin(), s.end(), gen);
    dc = classify_gcm(permute_genus(rs.cartan(), s));
    REQUIRE(dc);
    CHECK(dc->finite_type() == normalize_type(rs.type()));
  }

  // Affine diagrams: extended Dynkin diagrams from highest roots.
  for (auto [t, label] : {std::pair{"A3", "A3^(1)"}, std::pair{"B3", "B3^(1)"}, std::pair{"C3", "C3^(1)"},
                          std::pair{"D4", "D4^(1)"}, std::pair{"E6", "E6^(1)"}, std::pair{"F4", "F4^(1)"},
                          std::pair{"G2", "G2^(1)"}, std::pair{"A1", "A1^(1)"}, std::pair{"E8", "E8^(1)"}}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    auto dom = dominant_roots(rs);
    // The highest root is the last dominant root.
    int theta = *std::max_element(dom.begin(), dom.end(), [&](int a, int b) { return rs.height(a) < rs.height(b); });
    std::vector<int> ext{rs.negate(theta)};
    for (int j = 0; j < rs.rank(); ++j) ext.push_back(j);
    dc = classify_gcm(cartan_genus_roots(rs, ext));
    REQUIRE(dc);
    REQUIRE(dc->components.size() == 1);
    CHECK(dc->components[0].label == label);
  }
  // Twisted: extend by the negative highest short root.
  for (auto [t, label] : {std::pair{"B3", "D4^(2)"}, std::pair{"C3", "A5^(2)"}, std::pair{"F4", "E6^(2)"},
                          std::pair{"G2", "D4^(3)"}}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    int best = -1;
    for (int r : dominant_roots(rs))
      if (rs.norm(r) != Rat(2)) best = r;
    REQUIRE(best >= 0);
    std::vector<int> ext{rs.negate(best)};
    for (int j = 0; j < rs.rank(); ++j) ext.push_back(j);
    dc = classify_gcm(cartan_genus_roots(rs, ext));
    REQUIRE(dc);
    CHECK(dc->components[0].label == label);
  }
  dc = classify_gcm(MatRat::from_rows({{2, -4}, {-1, 2}}));
  REQUIRE(dc);
  CHECK(dc->components[0].label == "A2^(2)");
}

TEST_CASE("simple subsystems") {
  RootSystem a2 = RootSystem::build("A2");
  CHECK(is_simple_subsystem(a2, {0, 1}));
  CHECK_FALSE(is_simple_subsystem(a2, {0, a2.negate(0)}));
  CHECK(is_simple_subsystem(a2, {2, a2.negate(0)}));
  CHECK_FALSE(is_simple_subsystem(a2, {0, 2}));

  // Agreement with the determinant test on all small sets.
  for (const char* t : {"B3", "G2", "A3"}) {
    RootSystem rs = RootSystem::build(t);
    const int m = rs.num_roots();
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          std::vector<int> s{a, b, c};
          bool np = rs.ip(a, b) <= 0 && rs.ip(a, c) <= 0 && rs.ip(b, c) <= 0;
          CHECK(is_simple_subsystem(rs, s) == (np && oracle::independent(rs, s)));
        }
  }
}

TEST_CASE("standard genera") {
  for (int n = 1; n <= 6; ++n) CHECK(standard_genus(SimpleType{'A', n}) == sigma_n(n));
  for (const char* t : {"B3", "B4", "B5", "C3", "C4", "D4", "D5", "D6", "F4", "G2"}) {
    CAPTURE(t);
    CHECK(standard_genus(CartanType::parse(t)) == RootSystem::build(t).cartan());
  }
  CHECK(standard_genus(CartanType::parse("B2")) == MatRat::from_rows({{2, -1}, {-2, 2}}));
  CHECK(max_a_rank(RootSystem::build("F4").cartan()) == 2);
  CHECK(max_a_rank(RootSystem::build("E8").cartan()) == 7);

  // E6 ordering: alpha1, alpha3, alpha4, alpha5, alpha6, alpha2.
  Genus e6 = standard_genus(CartanType::parse("E6"));
  Genus expect = sigma_n(6);
  expect(4, 5) = expect(5, 4) = 0;
  expect(2, 5) = expect(5, 2) = -1;
  CHECK(e6 == expect);

  for (const char* t : {"A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "C2"}) {
    CAPTURE(t);
    SimpleType st = CartanType::parse(t).components[0];
    auto winners = rule_search(st);
    CHECK(winners.size() == 1);
    CHECK(*winners.begin() == standard_genus(st));
  }
}

TEST_CASE("standard reducible genera") {
  auto order = standard_order(CartanType::parse("A1xG2xB3xC3xA3"));
  std::vector<std::string> names;
  for (const auto& c : order) names.push_back(c.str());
  CHECK(names == std::vector<std::string>{"A3", "B3", "C3", "G2", "A1"});
  Genus g = standard_genus(CartanType::parse("A1xA2"));
  CHECK(g == MatRat::from_rows({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}}));
}

TEST_CASE("fibers") {
  RootSystem a2 = RootSystem::build("A2");
  auto f = enumerate_fiber(a2, MatRat::from_rows({{2}}), GenusKind::Gram);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == std::vector<int>{2});
  CHECK(enumerate_fiber(a2, MatRat::from_rows({{1}}), GenusKind::Gram).empty());

  // Fibers against a brute-force filter over canonical forms of all tuples.
  for (auto [t, x] : {std::pair{"B3", "A2"}, std::pair{"B3", "A1xA1"}, std::pair{"G2", "A2"},
                      std::pair{"A3", "A1xA1"}, std::pair{"C3", "B2"}, std::pair{"B2", "A1xA1"}}) {
    CAPTURE(t);
    CAPTURE(x);
    RootSystem rs = RootSystem::build(t);
    Genus sigma = standard_genus(CartanType::parse(x));
    const int n = static_cast<int>(sigma.rows());
    std::set<std::vector<int>> expect;
    std::vector<int> cur(n, 0);
    while (true) {
      auto c = canonicalize_roots(rs, cur).canonical;
      if (cartan_genus_roots(rs, c) == sigma) expect.insert(c);
      int k = 0;
      while (k < n && ++cur[k] == rs.num_roots()) cur[k++] = 0;
      if (k == n) break;
    }
    auto got = enumerate_fiber(rs, sigma, GenusKind::Cartan);
    CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == expect);
    CHECK(got.size() == expect.size());
    for (std::size_t i = 1; i < got.size(); ++i)
      CHECK(roots_tuple(rs, got[i - 1]) < roots_tuple(rs, got[i]));
  }
}

TEST_CASE("np graphical tuples") {
  RootSystem a2 = RootSystem::build("A2");
  CHECK(np_graphical_tuples(a2, 1) == std::vector<std::vector<int>>{{2}});
  auto t2 = np_graphical_tuples(a2, 2);
  CHECK(std::set<std::vector<int>>(t2.begin(), t2.end()) ==
        std::set<std::vector<int>>{{2, a2.negate(0)}, {2, a2.negate(1)}});
  for (const char* t : {"B3", "F4", "D4"}) {
    RootSystem rs = RootSystem::build(t);
    for (int n = 1; n <= 3; ++n)
      for (const auto& b : np_graphical_tuples(rs, n)) {
        CHECK(roots_in_fund(rs, b));
        CHECK(classify_gcm(cartan_genus_roots(rs, b)).has_value());
      }
  }
}

#include "doctest.h"
#include "oracles.hpp"

using namespace weylfund;

namespace {

int oracle_classes(const RootSystem& rs, const char* x) {
  auto group = enumerate_group(rs);
  return oracle::count_orbits(rs, oracle::simple_subsystems(rs, CartanType::parse(x)), group);
}

}  // namespace

TEST_CASE("class counts against brute force") {
  for (auto [t, x] : {std::pair{"B3", "A2"}, std::pair{"B3", "A1xA1"}, std::pair{"B3", "B2"},
                      std::pair{"C3", "A1xA1"}, std::pair{"D4", "A1xA1xA1"}, std::pair{"D4", "A3"},
                      std::pair{"F4", "A2"}, std::pair{"F4", "B2"}, std::pair{"G2", "A2"}, std::pair{"G2", "A1xA1"},
                      std::pair{"A4", "A1xA1"}, std::pair{"A3", "A1xA1"}, std::pair{"B4", "A1xA1xA1"},
                      std::pair{"A2", "A1xA1"}}) {
    CAPTURE(t);
    CAPTURE(x);
    RootSystem rs = RootSystem::build(t);
    auto rep = classify_subsystems(rs, CartanType::parse(x));
    CHECK(rep.class_count == oracle_classes(rs, x));
    CHECK(rep.class_count == static_cast<int>(rep.orbits.size()));
    certify(rs, rep);
    REQUIRE(rep.certified);
    CHECK(*rep.certified);
    for (std::size_t o = 0; o < rep.orbits.size(); ++o) {
      CHECK(is_simple_subsystem(rs, rep.representative_set(o)));
      CHECK(roots_in_fund(rs, rep.representative_tuple(o)));
    }
  }
}

TEST_CASE("known class counts") {
  CHECK(classify_subsystems(RootSystem::build("F4"), CartanType::parse("A2")).class_count == 2);
  CHECK(classify_subsystems(RootSystem::build("B4"), CartanType::parse("B3")).class_count == 1);
  CHECK(classify_subsystems(RootSystem::build("A2"), CartanType::parse("A1xA1")).class_count == 0);
  CHECK(classify_subsystems(RootSystem::build("E6"), CartanType::parse("A5")).class_count == 1);
}

TEST_CASE("certificates reproduce unions") {
  RootSystem rs = RootSystem::build("B5");
  auto rep = classify_subsystems(rs, CartanType::parse("D4"));
  CHECK(rep.fiber.size() == 3);
  CHECK(rep.class_count == 1);
  for (const auto& c : rep.certificates) {
    auto img = canonicalize_roots(rs, dot_action_roots(rs, c.generator, rep.fiber[c.from]));
    CHECK(img.canonical == rep.fiber[c.to]);
    TupleV t = roots_tuple(rs, place_permute(c.generator, rep.fiber[c.from]));
    CHECK(oracle::act(rs, from_word(rs, c.word), t) == roots_tuple(rs, rep.fiber[c.to]));
  }
}

TEST_CASE("gram mode agrees with cartan mode") {
  for (auto [t, x] : {std::pair{"F4", "A2"}, std::pair{"B3", "A1xA1"}, std::pair{"C3", "A2"}, std::pair{"G2", "A2"}}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    auto c = classify_subsystems(rs, CartanType::parse(x), GenusKind::Cartan);
    auto g = classify_subsystems(rs, CartanType::parse(x), GenusKind::Gram);
    CHECK(c.class_count == g.class_count);
    certify(rs, g);
    CHECK(*g.certified);
  }
}

TEST_CASE("oracle orbits of sets") {
  RootSystem b3 = RootSystem::build("B3");
  auto sets = oracle_simple_subsystems(b3, CartanType::parse("A1xA1"));
  CHECK(sets == oracle::simple_subsystems(b3, CartanType::parse("A1xA1")));
  auto orbits = oracle_orbits_of_sets(b3, sets);
  CHECK(static_cast<int>(orbits.size()) == oracle::count_orbits(b3, sets, enumerate_group(b3)));
}

TEST_CASE("group generators") {
  std::vector<PlacePerm> s3;
  PlacePerm p{0, 1, 2};
  do s3.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto gens = group_generators(s3);
  CHECK(gens.size() <= 2);
  std::set<PlacePerm> closure{{0, 1, 2}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto a : std::vector<PlacePerm>(closure.begin(), closure.end()))
      for (const auto& g : gens) grew |= closure.insert(compose_places(g, a)).second;
  }
  CHECK(closure.size() == 6);
}

TEST_CASE("type A paths") {
  for (int rank = 1; rank <= 5; ++rank) {
    RootSystem rs = RootSystem::build("A" + std::to_string(rank));
    for (int n = 1; n <= rank; ++n) {
      CAPTURE(rank);
      CAPTURE(n);
      auto pn = type_a_pn(rs, n);
      auto sigma = standard_genus(SimpleType{'A', n});
      auto fiber = enumerate_fiber(rs, sigma, GenusKind::Cartan);
      std::set<std::vector<int>> paths;
      for (const auto& e : pn) {
        CHECK(e.gamma.front() == e.beta);
        paths.insert(e.gamma);
      }
      CHECK(paths == std::set<std::vector<int>>(fiber.begin(), fiber.end()));
      auto classes = type_a_classes(rs, n);
      CHECK(classes.class_count == classify_subsystems(rs, CartanType::parse("A" + std::to_string(n))).class_count);
    }
  }
  // A_n in A_n is a single class; A1 in A_r is a single class.
  CHECK(type_a_classes(RootSystem::build("A4"), 4).class_count == 1);
  CHECK(type_a_classes(RootSystem::build("A4"), 1).class_count == 1);
}

TEST_CASE("maximal orthogonal long roots") {
  for (auto [t, expect] : {std::pair{"A1", 1}, std::pair{"A3", 2}, std::pair{"A4", 2}, std::pair{"B3", 2},
                           std::pair{"C3", 3}, std::pair{"D4", 4}, std::pair{"F4", 4}, std::pair{"G2", 1},
                           std::pair{"B4", 4}, std::pair{"D5", 4}, std::pair{"E6", 4}}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    auto r = maximal_orthogonal_a1(rs, Rat(2));
    CHECK(r.n_max == expect);
    CHECK(static_cast<int>(r.greedy.size()) == r.n_max);
    for (std::size_t a = 0; a < r.greedy.size(); ++a)
      for (std::size_t b = a + 1; b < r.greedy.size(); ++b) CHECK(rs.ip(r.greedy[a], r.greedy[b]) == 0);
    std::size_t biggest = 0;
    for (const auto& s : r.maximal_sets) biggest = std::max(biggest, s.size());
    CHECK(static_cast<int>(biggest) == r.n_max);
    CHECK(static_cast<int>(r.orbits.size()) ==
          oracle::count_orbits(rs, r.maximal_sets, enumerate_group(rs), true));
  }
  for (auto [t, expect] : {std::pair{"B3", 3}, std::pair{"C3", 2}, std::pair{"F4", 4}, std::pair{"G2", 1}}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    Rat l2 = rs.norm(rs.simple(rs.rank() - 1)) == Rat(2) ? rs.norm(rs.simple(0)) : rs.norm(rs.simple(rs.rank() - 1));
    CHECK(l2 != Rat(2));
    CHECK(maximal_orthogonal_a1(rs, l2).n_max == expect);
  }
  CHECK_THROWS_AS(maximal_orthogonal_a1(RootSystem::build("A2"), Rat(1)), InputError);
}

TEST_CASE("property checks") {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    auto o = check_oshima(rs);
    CHECK_MESSAGE(o.ok, o.message);
    auto s = verify_simpcon(rs, 5, 60);
    CHECK_MESSAGE(s.ok, s.message);
    auto d = verify_dots(rs, 5, 40);
    CHECK_MESSAGE(d.ok, d.message);
    auto g = verify_diagaut(rs, 5, 40);
    CHECK_MESSAGE(g.ok, g.message);
  }
  CHECK_THROWS_AS(check_oshima(RootSystem::build("A1xA1")), InputError);
}

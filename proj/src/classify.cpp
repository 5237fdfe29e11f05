#include "weylfund/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace weylfund {

std::vector<int> ConjugacyClassReport::representative_set(std::size_t orbit) const {
  auto s = representative_tuple(orbit);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<PlacePerm> group_generators(const std::vector<PlacePerm>& group) {
  std::vector<PlacePerm> gens;
  if (group.empty()) return gens;
  const std::size_t n = group.front().size();
  PlacePerm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<PlacePerm> generated{id};
  for (const auto& g : group) {
    if (generated.count(g)) continue;
    gens.push_back(g);
    std::vector<PlacePerm> queue(generated.begin(), generated.end());
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& s : gens) {
        PlacePerm p = compose_places(s, queue[h]);
        if (generated.insert(p).second) queue.push_back(p);
      }
  }
  return gens;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::vector<int>> classes() {
    std::map<int, std::vector<int>> by_root;
    for (std::size_t i = 0; i < parent.size(); ++i) by_root[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [r, members] : by_root) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

void dot_orbits(const RootSystem& rs, const std::vector<std::vector<int>>& fiber, const std::vector<PlacePerm>& gens,
                std::vector<std::vector<int>>& orbits, std::vector<OrbitCertificate>& certificates) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < fiber.size(); ++i) index.emplace(fiber[i], static_cast<int>(i));
  UnionFind uf(fiber.size());
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (const auto& g : gens) {
      RootCanonical rc = canonicalize_roots(rs, place_permute(g, fiber[i]));
      auto it = index.find(rc.canonical);
      if (it == index.end()) throw std::logic_error("fiber is not closed under the dot action");
      if (uf.unite(static_cast<int>(i), it->second))
        certificates.push_back({static_cast<int>(i), it->second, g, rc.word});
    }
  orbits = uf.classes();
}

ConjugacyClassReport classify_subsystems(const RootSystem& rs, const CartanType& x, GenusKind kind) {
  ConjugacyClassReport rep;
  rep.ambient = rs.type();
  rep.subsystem_type = normalize_type(x);
  rep.kind = kind;
  const Genus sigma = standard_genus(x);
  auto cartan_fiber = enumerate_fiber(rs, sigma, GenusKind::Cartan);

  if (kind == GenusKind::Cartan) {
    rep.genera.push_back(sigma);
  } else {
    // Gram genera related by a symmetry of sigma have fibers with the same
    // underlying sets, so keep the smallest of each family.
    const auto aut = automorphism_group(sigma);
    std::set<Genus> grams;
    for (const auto& b : cartan_fiber) {
      const Genus g = gram_genus_roots(rs, b);
      Genus best = g;
      for (const auto& a : aut) best = std::min(best, permute_genus(g, a));
      grams.insert(best);
    }
    rep.genera.assign(grams.begin(), grams.end());
  }
  for (std::size_t gi = 0; gi < rep.genera.size(); ++gi) {
    const Genus& g = rep.genera[gi];
    auto fiber = kind == GenusKind::Cartan ? cartan_fiber : enumerate_fiber(rs, g, GenusKind::Gram);
    auto gens = group_generators(automorphism_group(g));
    std::vector<std::vector<int>> orbits;
    std::vector<OrbitCertificate> certs;
    dot_orbits(rs, fiber, gens, orbits, certs);
    const int offset = static_cast<int>(rep.fiber.size());
    for (auto& o : orbits) {
      for (int& i : o) i += offset;
      rep.orbits.push_back(std::move(o));
    }
    for (auto& c : certs) {
      c.from += offset;
      c.to += offset;
      rep.certificates.push_back(std::move(c));
    }
    for (auto& b : fiber) {
      rep.fiber.push_back(std::move(b));
      rep.fiber_genus.push_back(static_cast<int>(gi));
    }
    rep.generators.push_back(std::move(gens));
  }
  std::sort(rep.orbits.begin(), rep.orbits.end());
  std::set<std::vector<int>> sets;
  for (const auto& b : rep.fiber) sets.insert(sorted_copy(b));
  rep.distinct_sets = sets.size();
  rep.class_count = static_cast<int>(rep.orbits.size());
  return rep;
}

std::vector<std::vector<int>> oracle_simple_subsystems(const RootSystem& rs, const CartanType& x) {
  const CartanType target = normalize_type(x);
  const int k = target.rank();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      auto dc = classify_gcm(cartan_genus_roots(rs, cur));
      if (dc && dc->all_finite() && dc->finite_type() == target) out.push_back(cur);
      return;
    }
    for (int r = start; r < rs.num_roots(); ++r) {
      bool np = std::all_of(cur.begin(), cur.end(), [&](int c) { return rs.ip(c, r) <= 0; });
      if (!np) continue;
      cur.push_back(r);
      if (is_simple_subsystem(rs, cur)) rec(r + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

// Orbits of sets under W, found by closing each set under simple reflections.
std::vector<std::vector<int>> set_orbits(const RootSystem& rs, const std::vector<std::vector<int>>& sets, bool up_to_sign,
                                         std::uint64_t limit) {
  check_group_limit(rs, limit);
  auto normal = [&](std::vector<int> s) {
    if (up_to_sign)
      for (int& r : s)
        if (!rs.is_positive(r)) r = rs.negate(r);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::map<std::vector<int>, std::vector<int>> positions;
  for (std::size_t i = 0; i < sets.size(); ++i) positions[normal(sets[i])].push_back(static_cast<int>(i));
  std::vector<char> done(sets.size(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (done[i]) continue;
    std::set<std::vector<int>> seen{normal(sets[i])};
    std::vector<std::vector<int>> queue(seen.begin(), seen.end());
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int j = 0; j < rs.rank(); ++j) {
        const RootPerm& s = rs.reflection_perm(rs.simple(j));
        std::vector<int> img;
        for (int r : queue[h]) img.push_back(s[r]);
        img = normal(std::move(img));
        if (seen.insert(img).second) queue.push_back(std::move(img));
      }
    std::vector<int> orbit;
    for (const auto& s : seen) {
      auto it = positions.find(s);
      if (it == positions.end()) continue;
      for (int p : it->second) {
        orbit.push_back(p);
        done[p] = 1;
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> oracle_orbits_of_sets(const RootSystem& rs, const std::vector<std::vector<int>>& sets,
                                                    std::uint64_t limit) {
  return set_orbits(rs, sets, false, limit);
}

void certify(const RootSystem& rs, ConjugacyClassReport& report, std::uint64_t limit) {
  auto all = oracle_simple_subsystems(rs, report.subsystem_type);
  auto orbits = oracle_orbits_of_sets(rs, all, limit);
  report.oracle_count = static_cast<int>(orbits.size());
  bool ok = *report.oracle_count == report.class_count;

  std::set<std::vector<int>> known(all.begin(), all.end());
  std::vector<std::vector<int>> fiber_sets;
  for (const auto& b : report.fiber) {
    fiber_sets.push_back(sorted_copy(b));
    if (!known.count(fiber_sets.back())) ok = false;
  }
  // Dot orbits must coincide with W-orbits of the underlying sets.
  auto w_orbits = oracle_orbits_of_sets(rs, fiber_sets, limit);
  if (w_orbits != report.orbits) ok = false;
  report.certified = ok;
}

std::vector<PnElement> type_a_pn(const RootSystem& rs, int n) {
  if (n < 1) throw InputError("n must be at least 1");
  std::vector<PnElement> out;
  auto simple_bond = [&](int a, int b) { return rs.coroot_pair(a, b) == -1 && rs.coroot_pair(b, a) == -1; };
  std::vector<int> path;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(path.size()) == n) {
      out.push_back({path.front(), path});
      return;
    }
    for (int j = 0; j < rs.rank(); ++j) {
      int r = rs.negate(rs.simple(j));
      if (std::find(path.begin(), path.end(), r) != path.end()) continue;
      if (!simple_bond(path.back(), r)) continue;
      bool induced = true;
      for (std::size_t a = 0; a + 1 < path.size() && induced; ++a) induced = rs.ip(path[a], r) == 0;
      if (!induced) continue;
      path.push_back(r);
      rec();
      path.pop_back();
    }
  };
  for (int beta : dominant_roots(rs)) {
    path = {beta};
    rec();
  }
  std::sort(out.begin(), out.end());
  return out;
}

TypeAClasses type_a_classes(const RootSystem& rs, int n) {
  TypeAClasses res;
  res.pn = type_a_pn(rs, n);
  auto rho = ambient_rho(rs);
  std::map<PnElement, int> index;
  for (std::size_t i = 0; i < res.pn.size(); ++i) index.emplace(res.pn[i], static_cast<int>(i));
  UnionFind uf(res.pn.size());
  for (std::size_t i = 0; i < res.pn.size(); ++i) {
    PnElement img;
    img.beta = rho[res.pn[i].beta];
    for (int r : res.pn[i].gamma) img.gamma.push_back(rho[r]);
    auto it = index.find(img);
    if (it == index.end()) throw std::logic_error("P_n is not stable under rho");
    uf.unite(static_cast<int>(i), it->second);
  }
  res.orbits = uf.classes();
  res.class_count = static_cast<int>(res.orbits.size());
  return res;
}

OrthogonalA1Report maximal_orthogonal_a1(const RootSystem& rs, const Rat& l2, bool with_oracle, std::uint64_t limit) {
  Rat scaled = l2 * Rat(rs.scale());
  std::vector<int> pos;
  if (scaled.is_integer())
    for (int r = 0; r < rs.positive_count(); ++r)
      if (rs.ip(r, r) == scaled.to_long()) pos.push_back(r);
  if (pos.empty()) throw InputError("no root has squared length " + l2.str());

  OrthogonalA1Report rep;
  ParabolicIndex J = full_index(rs.rank());
  while (true) {
    int beta = -1;
    std::vector<char> seen(rs.rank(), 0);
    for (int s : index_members(J)) {
      if (seen[s]) continue;
      ParabolicIndex K = 0;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        K |= ParabolicIndex{1} << a;
        for (int b : index_members(J))
          if (!seen[b] && rs.cartan_int(a, b) != 0) {
            seen[b] = 1;
            stack.push_back(b);
          }
      }
      for (int r : pos) {
        if ((rs.support(r) & ~K) != 0) continue;
        bool dominant = true;
        for (int j : index_members(K)) dominant = dominant && rs.ip(rs.simple(j), r) >= 0;
        if (dominant) {
          beta = r;
          break;
        }
      }
      if (beta >= 0) break;
    }
    if (beta < 0) break;
    rep.greedy.push_back(beta);
    ParabolicIndex next = 0;
    for (int j : index_members(J))
      if (rs.ip(rs.simple(j), beta) == 0) next |= ParabolicIndex{1} << j;
    J = next;
  }
  rep.n_max = static_cast<int>(rep.greedy.size());
  if (!with_oracle) return rep;

  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    bool extendable = false;
    for (int r : pos) {
      if (std::find(cur.begin(), cur.end(), r) != cur.end()) continue;
      if (std::all_of(cur.begin(), cur.end(), [&](int c) { return rs.ip(c, r) == 0; })) {
        extendable = true;
        break;
      }
    }
    if (!extendable) rep.maximal_sets.push_back(cur);
    for (std::size_t i = start; i < pos.size(); ++i) {
      int r = pos[i];
      if (!std::all_of(cur.begin(), cur.end(), [&](int c) { return rs.ip(c, r) == 0; })) continue;
      cur.push_back(r);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  rep.orbits = set_orbits(rs, rep.maximal_sets, true, limit);
  return rep;
}

CheckReport check_oshima(const RootSystem& rs) {
  if (rs.num_components() != 1) throw InputError("the Oshima check needs an irreducible root system");
  CheckReport rep;
  const int r = rs.rank();
  for (ParabolicIndex delta = 0; delta <= full_index(r); ++delta) {
    std::map<std::pair<long long, std::vector<int>>, std::vector<int>> groups;
    for (int g = 0; g < rs.num_roots(); ++g) {
      std::vector<int> coeffs;
      bool all_zero = true;
      for (int j : index_members(delta)) {
        coeffs.push_back(rs.coords(g)[j]);
        all_zero = all_zero && coeffs.back() == 0;
      }
      if (delta != 0 && all_zero) continue;
      groups[{rs.ip(g, g), coeffs}].push_back(g);
    }
    const ParabolicIndex rest = full_index(r) & ~delta;
    for (const auto& [key, members] : groups) {
      ++rep.checked;
      int in_chamber = 0;
      for (int g : members) {
        bool dom = true;
        for (int j : index_members(rest)) dom = dom && rs.ip(rs.simple(j), g) >= 0;
        in_chamber += dom;
      }
      std::set<int> orbit{members.front()};
      std::vector<int> queue{members.front()};
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (int j : index_members(rest)) {
          int img = rs.reflection_perm(rs.simple(j))[queue[h]];
          if (orbit.insert(img).second) queue.push_back(img);
        }
      bool single = orbit == std::set<int>(members.begin(), members.end());
      if (in_chamber > 1 || !single) {
        rep.ok = false;
        std::ostringstream os;
        os << "delta mask " << delta << ": " << members.size() << " roots, " << in_chamber
           << " in the chamber, single orbit " << (single ? "yes" : "no");
        rep.message = os.str();
        return rep;
      }
    }
    if (delta == full_index(r)) break;
  }
  return rep;
}

namespace {

int random_int(std::mt19937_64& gen, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

void fail(CheckReport& rep, const std::string& what) {
  if (rep.ok) rep.message = what;
  rep.ok = false;
}

// Each entry after the first is non-orthogonal to an earlier entry.
std::vector<int> random_linked_tuple(const RootSystem& rs, std::mt19937_64& gen, const std::vector<int>& pool, int m) {
  std::vector<int> t{pool[random_int(gen, 0, static_cast<int>(pool.size()) - 1)]};
  while (static_cast<int>(t.size()) < m) {
    std::vector<int> cand;
    for (int r : pool)
      if (std::any_of(t.begin(), t.end(), [&](int b) { return rs.ip(b, r) != 0; })) cand.push_back(r);
    t.push_back(cand[random_int(gen, 0, static_cast<int>(cand.size()) - 1)]);
  }
  return t;
}

}  // namespace

CheckReport verify_simpcon(const RootSystem& rs, std::uint64_t seed, int samples) {
  CheckReport rep;
  std::mt19937_64 gen(seed);
  const int comps = rs.num_components();
  for (int s = 0; s < samples; ++s) {
    // (a): tuples inside a union of components.
    ParabolicIndex psi = 0;
    while (psi == 0)
      for (int c = 0; c < comps; ++c)
        if (random_int(gen, 0, 1)) psi |= rs.component_mask(c);
    std::vector<int> pool;
    for (int r = 0; r < rs.num_roots(); ++r)
      if ((rs.support(r) & ~psi) == 0) pool.push_back(r);
    const int n = random_int(gen, 1, 3);
    std::vector<int> a;
    for (int i = 0; i < n; ++i) a.push_back(pool[random_int(gen, 0, static_cast<int>(pool.size()) - 1)]);
    if (random_int(gen, 0, 1)) a = canonicalize_roots(rs, a, psi).canonical;
    ++rep.checked;
    if (roots_in_fund(rs, a) != roots_in_fund(rs, a, psi)) fail(rep, "restriction to components changed membership");

    // (b), (c): a = (a', a'') with a' linked inside one component and a'' orthogonal to a'.
    const int c = random_int(gen, 0, comps - 1);
    std::vector<int> comp_pool;
    for (int r = 0; r < rs.num_roots(); ++r)
      if (rs.component_of(r) == c) comp_pool.push_back(r);
    const int m = random_int(gen, 1, 3);
    std::vector<int> a1 = random_linked_tuple(rs, gen, comp_pool, m);
    if (random_int(gen, 0, 1)) a1 = canonicalize_roots(rs, a1, rs.component_mask(c)).canonical;
    std::vector<int> orth;
    for (int r = 0; r < rs.num_roots(); ++r)
      if (std::all_of(a1.begin(), a1.end(), [&](int b) { return rs.ip(b, r) == 0; })) orth.push_back(r);
    if (orth.empty()) continue;
    std::vector<int> a2;
    const int k = random_int(gen, 1, 3);
    for (int i = 0; i < k; ++i) a2.push_back(orth[random_int(gen, 0, static_cast<int>(orth.size()) - 1)]);
    std::vector<int> full = a1;
    full.insert(full.end(), a2.begin(), a2.end());
    if (random_int(gen, 0, 1)) {
      auto rc = canonicalize_roots(rs, full);
      full = rc.canonical;
      a1.assign(full.begin(), full.begin() + m);
      a2.assign(full.begin() + m, full.end());
    }
    ++rep.checked;
    bool lhs = roots_in_fund(rs, full);
    bool rhs = roots_in_fund(rs, a1, rs.component_mask(c));
    if (rhs) {
      ParabolicIndex J = full_index(rs.rank());
      for (int r : a1) {
        ParabolicIndex next = 0;
        for (int j : index_members(J))
          if (rs.ip(rs.simple(j), r) == 0) next |= ParabolicIndex{1} << j;
        J = next;
      }
      rhs = roots_in_fund(rs, a2, J);
    }
    if (lhs != rhs) fail(rep, "splitting criterion failed");
    if (is_simple_subsystem(rs, full) != (is_simple_subsystem(rs, a1) && is_simple_subsystem(rs, a2)))
      fail(rep, "simple subsystem splitting failed");
  }
  return rep;
}

namespace {

TupleV random_fund_tuple(const RootSystem& rs, std::mt19937_64& gen, int n) {
  TupleV t;
  for (int i = 0; i < n; ++i) {
    int kind = random_int(gen, 0, 3);
    if (kind <= 1) {
      t.push_back(rs.root(random_int(gen, 0, rs.num_roots() - 1)));
    } else if (kind == 2) {
      VecPi v(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) v[j] = Rat(random_int(gen, -3, 3), random_int(gen, 1, 2));
      t.push_back(v);
    } else {
      t.push_back(t.empty() ? VecPi(rs.rank()) : t[random_int(gen, 0, static_cast<int>(t.size()) - 1)]);
    }
  }
  return canonicalize(rs, t).canonical;
}

PlacePerm random_perm(std::mt19937_64& gen, int n, int fixed_prefix, bool shuffle_prefix) {
  PlacePerm p(n);
  std::iota(p.begin(), p.end(), 0);
  if (shuffle_prefix) std::shuffle(p.begin(), p.begin() + fixed_prefix, gen);
  std::shuffle(p.begin() + fixed_prefix, p.end(), gen);
  return p;
}

}  // namespace

CheckReport verify_dots(const RootSystem& rs, std::uint64_t seed, int samples) {
  CheckReport rep;
  std::mt19937_64 gen(seed);
  for (int s = 0; s < samples; ++s) {
    const int n = random_int(gen, 1, 4);
    TupleV b = random_fund_tuple(rs, gen, n);
    PlacePerm id(n);
    std::iota(id.begin(), id.end(), 0);
    PlacePerm sigma = random_perm(gen, n, 0, false), tau = random_perm(gen, n, 0, false);
    ++rep.checked;
    if (dot_action(rs, id, b) != b) fail(rep, "identity does not act trivially");
    if (dot_action(rs, sigma, dot_action(rs, tau, b)) != dot_action(rs, compose_places(sigma, tau), b))
      fail(rep, "dot action is not a group action");
    TupleV moved = place_permute(sigma, b);
    if (is_in_fund(rs, moved).in_fund && dot_action(rs, sigma, b) != moved) fail(rep, "law (a) failed");

    const int m = random_int(gen, 0, n);
    // (b): {1..m} stable.
    PlacePerm st = random_perm(gen, n, m, true);
    PlacePerm restricted(st.begin(), st.begin() + m);
    TupleV lhs = dot_action(rs, st, b);
    lhs.resize(m);
    TupleV prefix(b.begin(), b.begin() + m);
    if (lhs != dot_action(rs, restricted, prefix)) fail(rep, "law (b) failed");

    // (c): {1..m} fixed pointwise.
    PlacePerm fx = random_perm(gen, n, m, false);
    PlacePerm tail(n - m);
    for (int i = 0; i < n - m; ++i) tail[i] = fx[i + m] - m;
    ParabolicIndex Jm = is_in_fund(rs, b).chain[m];
    TupleV rest(b.begin() + m, b.end());
    if (!is_in_fund(rs, rest, Jm).in_fund) fail(rep, "tail is not in the fundamental domain of the stabilizer");
    TupleV expect = prefix;
    for (auto& v : canonicalize(rs, place_permute(tail, rest), Jm).canonical) expect.push_back(v);
    if (dot_action(rs, fx, b) != expect) fail(rep, "law (c) failed");
  }
  return rep;
}

CheckReport verify_diagaut(const RootSystem& rs, std::uint64_t seed, int samples) {
  CheckReport rep;
  std::mt19937_64 gen(seed);
  for (int s = 0; s < samples; ++s) {
    const int k = random_int(gen, 1, rs.rank());
    std::vector<int> cur;
    while (static_cast<int>(cur.size()) < k) {
      std::vector<int> cand;
      for (int r = 0; r < rs.num_roots(); ++r) {
        if (std::find(cur.begin(), cur.end(), r) != cur.end()) continue;
        cur.push_back(r);
        if (is_simple_subsystem(rs, cur)) cand.push_back(r);
        cur.pop_back();
      }
      if (cand.empty()) break;
      cur.push_back(cand[random_int(gen, 0, static_cast<int>(cand.size()) - 1)]);
    }
    std::vector<int> b = canonicalize_roots(rs, cur).canonical;
    TupleV bv = roots_tuple(rs, b);
    ++rep.checked;
    TupleV lhs = canonicalize(rs, rho_b_image(rs, bv)).canonical;
    if (lhs != diagram_rho_image(rs, bv)) fail(rep, "canonical form of rho_b(b) differs from rho(b)");
    // rho_b permutes the entries of b, so it is an automorphism of the Cartan genus.
    auto img = tuple_root_indices(rs, rho_b_image(rs, bv));
    PlacePerm pi(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      pi[i] = static_cast<int>(std::find(b.begin(), b.end(), img[i]) - b.begin());
    Genus c = cartan_genus_roots(rs, b);
    if (permute_genus(c, pi) != c) fail(rep, "rho_b is not a genus automorphism");
  }
  return rep;
}

}  // namespace weylfund

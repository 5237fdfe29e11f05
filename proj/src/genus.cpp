#include "weylfund/genus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace weylfund {

Genus gram_genus(const RootSystem& rs, const TupleV& t) {
  const std::size_t n = t.size();
  for (const auto& v : t)
    if (static_cast<int>(v.size()) != rs.rank()) throw InputError("tuple entry length does not match the rank");
  Genus g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = rs.inner(t[i], t[j]);
  return g;
}

Genus cartan_genus(const RootSystem& rs, const TupleV& t) { return cartan_genus_roots(rs, tuple_root_indices(rs, t)); }

Genus gram_genus_roots(const RootSystem& rs, const std::vector<int>& roots) {
  const std::size_t n = roots.size();
  Genus g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = Rat(rs.ip(roots[i], roots[j])) / Rat(rs.scale());
  return g;
}

Genus cartan_genus_roots(const RootSystem& rs, const std::vector<int>& roots) {
  const std::size_t n = roots.size();
  Genus g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rs.coroot_pair(roots[i], roots[j]);
  return g;
}

Genus permute_genus(const Genus& g, const PlacePerm& rho) {
  if (!g.is_square()) throw InputError("genus must be square");
  check_place_perm(rho, g.rows());
  const std::size_t n = g.rows();
  Genus out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(rho[i], rho[j]) = g(i, j);
  return out;
}

namespace {

void check_bound(const Genus& g, int bound) {
  if (!g.is_square()) throw InputError("genus must be square");
  if (static_cast<int>(g.rows()) > bound)
    throw ResourceLimit("genus of rank " + std::to_string(g.rows()) + " exceeds the permutation search bound " +
                        std::to_string(bound));
}

// Transposing u and v is an automorphism.
bool twins(const Genus& g, int u, int v) {
  if (g(u, u) != g(v, v) || g(u, v) != g(v, u)) return false;
  for (std::size_t x = 0; x < g.rows(); ++x) {
    if (static_cast<int>(x) == u || static_cast<int>(x) == v) continue;
    if (g(u, x) != g(v, x) || g(x, u) != g(x, v)) return false;
  }
  return true;
}

struct CanonSearch {
  const Genus& g;
  int n;
  std::vector<int> order;
  std::vector<std::vector<Rat>> rows;
  bool have_best = false;
  std::vector<std::vector<Rat>> best_rows;
  std::vector<int> best_order;

  // Row of the vertex v placed at position k, with the later cells refined.
  std::vector<Rat> row_for(int v, const std::vector<std::vector<int>>& cells, std::vector<std::vector<int>>& refined) {
    std::vector<Rat> row;
    for (int a : order) row.push_back(g(v, a));
    row.push_back(g(v, v));
    refined.clear();
    bool first = true;
    for (const auto& cell : cells) {
      std::vector<int> rest;
      for (int u : cell)
        if (!(first && u == v)) rest.push_back(u);
      first = false;
      if (rest.empty()) continue;
      std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return g(v, a) < g(v, b); });
      std::size_t s = 0;
      while (s < rest.size()) {
        std::size_t e = s;
        std::vector<int> sub;
        while (e < rest.size() && g(v, rest[e]) == g(v, rest[s])) {
          sub.push_back(rest[e]);
          row.push_back(g(v, rest[e]));
          ++e;
        }
        refined.push_back(std::move(sub));
        s = e;
      }
    }
    return row;
  }

  // -1, 0, 1 comparing the current rows with the best rows over the common prefix.
  int compare_prefix() const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k] < best_rows[k]) return -1;
      if (best_rows[k] < rows[k]) return 1;
    }
    return 0;
  }

  void search(const std::vector<std::vector<int>>& cells) {
    if (static_cast<int>(order.size()) == n) {
      if (!have_best || rows < best_rows) {
        have_best = true;
        best_rows = rows;
        best_order = order;
      }
      return;
    }
    const auto& first = cells.front();
    std::vector<std::pair<std::vector<Rat>, std::vector<std::vector<int>>>> options;
    std::vector<int> tried;
    std::vector<int> cand;
    for (int v : first) {
      bool dup = std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); });
      if (dup) continue;
      tried.push_back(v);
      std::vector<std::vector<int>> refined;
      auto row = row_for(v, cells, refined);
      options.emplace_back(std::move(row), std::move(refined));
      cand.push_back(v);
    }
    std::vector<Rat> min_row = options.front().first;
    for (const auto& o : options)
      if (o.first < min_row) min_row = o.first;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (options[i].first != min_row) continue;
      order.push_back(cand[i]);
      rows.push_back(options[i].first);
      if (!have_best || compare_prefix() <= 0) {
        if (options[i].second.empty())
          search_leaf();
        else
          search(options[i].second);
      }
      rows.pop_back();
      order.pop_back();
    }
  }

  void search_leaf() {
    if (!have_best || rows < best_rows) {
      have_best = true;
      best_rows = rows;
      best_order = order;
    }
  }
};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Backtracking over rho with g(rho i, rho j) = g(i, j); visit returns false to stop.
void for_each_automorphism(const Genus& g, const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(g.rows());
  std::vector<int> rho(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == n) {
      if (!visit(rho)) stop = true;
      return;
    }
    for (int c = 0; c < n && !stop; ++c) {
      if (used[c] || g(c, c) != g(i, i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g(c, rho[j]) == g(i, j) && g(rho[j], c) == g(j, i);
      if (!ok) continue;
      rho[i] = c;
      used[c] = 1;
      rec(i + 1);
      used[c] = 0;
    }
  };
  rec(0);
}

}  // namespace

GenusType genus_type(const Genus& g, int bound) {
  check_bound(g, bound);
  const int n = static_cast<int>(g.rows());
  GenusType gt;
  if (n == 0) {
    gt.canonical = g;
    return gt;
  }
  CanonSearch cs{g, n, {}, {}, false, {}, {}};
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  cs.search({all});
  gt.perm = cs.best_order;
  gt.canonical = Genus(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) gt.canonical(a, b) = g(gt.perm[a], gt.perm[b]);
  gt.orbit_size = factorial(n) / automorphism_count(g, bound);
  return gt;
}

std::vector<PlacePerm> automorphism_group(const Genus& g, int bound) {
  check_bound(g, bound);
  std::vector<PlacePerm> out;
  for_each_automorphism(g, [&](const std::vector<int>& rho) {
    if (out.size() >= 1000000) throw ResourceLimit("automorphism group has more than 10^6 elements");
    out.push_back(rho);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t automorphism_count(const Genus& g, int bound) {
  check_bound(g, bound);
  std::uint64_t count = 0;
  for_each_automorphism(g, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

bool DiagramClassification::all_finite() const {
  return std::all_of(components.begin(), components.end(), [](const DiagramComponent& c) { return c.finite; });
}

CartanType DiagramClassification::finite_type() const {
  if (!all_finite()) throw InputError("diagram has non-finite components");
  CartanType t;
  for (const auto& c : components) t.components.push_back(c.type);
  return normalize_type(t);
}

CartanType normalize_type(const CartanType& t) {
  CartanType out = t;
  for (auto& c : out.components)
    if (c.family == 'C' && c.rank == 2) c.family = 'B';
  std::sort(out.components.begin(), out.components.end());
  return out;
}

namespace {

struct Candidate {
  std::string label;
  bool finite;
  SimpleType type;
  Genus m;
};

DynkinDiagram extended(const SimpleType& t, const std::vector<int>& attach) {
  DynkinDiagram d = dynkin_diagram(t);
  DynkinDiagram e;
  e.lengths.push_back(Rat(2));
  for (const auto& l : d.lengths) e.lengths.push_back(l);
  for (auto [i, j] : d.bonds) e.bonds.emplace_back(i + 1, j + 1);
  for (int a : attach) e.bonds.emplace_back(0, a + 1);
  return e;
}

std::vector<Candidate> candidates(int k) {
  std::vector<Candidate> out;
  auto finite = [&](char f, int r) {
    SimpleType t{f, r};
    out.push_back({t.str(), true, t, cartan_from_diagram(dynkin_diagram(t))});
  };
  finite('A', k);
  if (k >= 2) finite('B', k);
  if (k >= 3) finite('C', k);
  if (k >= 4) finite('D', k);
  if (k >= 6 && k <= 8) finite('E', k);
  if (k == 4) finite('F', 4);
  if (k == 2) finite('G', 2);

  const int l = k - 1;
  auto affine = [&](const std::string& label, const Genus& m) { out.push_back({label, false, SimpleType{}, m}); };
  auto untwisted = [&](char f, const std::vector<int>& attach) {
    return cartan_from_diagram(extended(SimpleType{f, l}, attach));
  };
  auto num = [](int x) { return std::to_string(x); };
  if (l == 1) {
    affine("A1^(1)", MatRat::from_rows({{2, -2}, {-2, 2}}));
    affine("A2^(2)", MatRat::from_rows({{2, -4}, {-1, 2}}));
    return out;
  }
  if (l < 1) return out;
  affine("A" + num(l) + "^(1)", untwisted('A', {0, l - 1}));
  if (l >= 3) {
    Genus b = untwisted('B', {1});
    affine("B" + num(l) + "^(1)", b);
    affine("A" + num(2 * l - 1) + "^(2)", b.transpose());
  }
  {
    Genus c = untwisted('C', {0});
    affine("C" + num(l) + "^(1)", c);
    affine("D" + num(l + 1) + "^(2)", c.transpose());
  }
  if (l >= 4) affine("D" + num(l) + "^(1)", untwisted('D', {1}));
  if (l == 6) affine("E6^(1)", untwisted('E', {1}));
  if (l == 7) affine("E7^(1)", untwisted('E', {0}));
  if (l == 8) affine("E8^(1)", untwisted('E', {7}));
  if (l == 4) {
    Genus f = untwisted('F', {0});
    affine("F4^(1)", f);
    affine("E6^(2)", f.transpose());
  }
  if (l == 2) {
    Genus g = untwisted('G', {0});
    affine("G2^(1)", g);
    affine("D4^(3)", g.transpose());
  }
  {
    DynkinDiagram d;
    d.lengths.assign(l + 1, Rat(2));
    d.lengths.front() = 1;
    d.lengths.back() = 4;
    for (int i = 0; i < l; ++i) d.bonds.emplace_back(i, i + 1);
    affine("A" + num(2 * l) + "^(2)", cartan_from_diagram(d));
  }
  return out;
}

bool isomorphic(const Genus& a, const Genus& b) {
  const int n = static_cast<int>(a.rows());
  if (static_cast<int>(b.rows()) != n) return false;
  auto signature = [](const Genus& m, int i) {
    std::vector<Rat> r, c;
    for (std::size_t j = 0; j < m.rows(); ++j) {
      r.push_back(m(i, j));
      c.push_back(m(j, i));
    }
    std::sort(r.begin(), r.end());
    std::sort(c.begin(), c.end());
    r.insert(r.end(), c.begin(), c.end());
    return r;
  };
  std::vector<std::vector<Rat>> sa(n), sb(n);
  for (int i = 0; i < n; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || sa[i] != sb[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = b(c, phi[j]) == a(i, j) && b(phi[j], c) == a(j, i);
      if (!ok) continue;
      phi[i] = c;
      used[c] = 1;
      if (rec(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::optional<DiagramClassification> classify_gcm(const Genus& g) {
  if (!g.is_square()) return std::nullopt;
  const int n = static_cast<int>(g.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& x = g(i, j);
      if (!x.is_integer()) return std::nullopt;
      if (i == j) {
        if (x != Rat(2)) return std::nullopt;
      } else {
        if (x.sign() > 0) return std::nullopt;
        if (x.is_zero() != g(j, i).is_zero()) return std::nullopt;
      }
    }
  DiagramClassification dc;
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> verts{s};
    comp[s] = s;
    for (std::size_t h = 0; h < verts.size(); ++h)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && !g(verts[h], j).is_zero()) {
          comp[j] = s;
          verts.push_back(j);
        }
    std::sort(verts.begin(), verts.end());
    const int k = static_cast<int>(verts.size());
    Genus sub(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub(a, b) = g(verts[a], verts[b]);
    DiagramComponent dcomp;
    dcomp.label = "Other";
    dcomp.vertices = verts;
    for (const auto& c : candidates(k))
      if (isomorphic(sub, c.m)) {
        dcomp.label = c.label;
        dcomp.finite = c.finite;
        dcomp.affine = !c.finite;
        dcomp.type = c.type;
        break;
      }
    dc.components.push_back(std::move(dcomp));
  }
  return dc;
}

bool is_simple_subsystem(const RootSystem& rs, const std::vector<int>& roots) {
  for (int r : roots)
    if (r < 0 || r >= rs.num_roots()) throw InputError("root index out of range");
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (roots[a] == roots[b] || rs.ip(roots[a], roots[b]) > 0) return false;
  auto dc = classify_gcm(cartan_genus_roots(rs, roots));
  return dc && dc->all_finite();
}

int max_a_rank(const Genus& c) {
  const int n = static_cast<int>(c.rows());
  auto simple_bond = [&](int i, int j) { return c(i, j) == Rat(-1) && c(j, i) == Rat(-1); };
  int best = n > 0 ? 1 : 0;
  std::vector<int> path;
  std::vector<char> in(n, 0);
  std::function<void()> rec = [&]() {
    best = std::max(best, static_cast<int>(path.size()));
    int last = path.back();
    for (int v = 0; v < n; ++v) {
      if (in[v] || !simple_bond(last, v)) continue;
      bool induced = true;
      for (std::size_t a = 0; a + 1 < path.size() && induced; ++a) induced = c(path[a], v).is_zero();
      if (!induced) continue;
      path.push_back(v);
      in[v] = 1;
      rec();
      in[v] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    in[s] = 1;
    rec();
    in[s] = 0;
  }
  return best;
}

Genus standard_genus(const SimpleType& t) {
  validate(t);
  const Genus c = cartan_from_diagram(dynkin_diagram(t));
  const int n = t.rank;
  const int l = max_a_rank(c);
  struct Found {
    std::vector<int> p;
    Genus m;
  };
  std::vector<Found> found;
  std::vector<int> order, parents;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&]() {
    const int k = static_cast<int>(order.size());
    if (k == n) {
      Genus m(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m(a, b) = c(order[a], order[b]);
      found.push_back({parents, m});
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      int parent = -1;
      if (k < l) {
        if (k > 0) {
          if (c(order[k - 1], v) != Rat(-1) || c(v, order[k - 1]) != Rat(-1)) continue;
          bool ok = true;
          for (int a = 0; a + 1 < k && ok; ++a) ok = c(order[a], v).is_zero();
          if (!ok) continue;
        }
      } else {
        int count = 0;
        for (int a = 0; a < k; ++a)
          if (!c(order[a], v).is_zero()) {
            ++count;
            parent = a;
          }
        if (count != 1) continue;
      }
      order.push_back(v);
      used[v] = 1;
      if (k >= l) parents.push_back(parent);
      rec();
      if (k >= l) parents.pop_back();
      used[v] = 0;
      order.pop_back();
    }
  };
  rec();
  if (found.empty()) throw std::logic_error("no ordering satisfies the standard genus rules for " + t.str());
  std::vector<int> best_p = found.front().p;
  for (const auto& f : found) best_p = std::max(best_p, f.p);
  std::vector<Genus> survivors;
  for (const auto& f : found)
    if (f.p == best_p) survivors.push_back(f.m);
  if (n > l) {
    std::vector<Genus> tie;
    for (const auto& m : survivors)
      if (m(l - 1, l) == Rat(-1)) tie.push_back(m);
    if (!tie.empty()) survivors = tie;
  }
  return *std::min_element(survivors.begin(), survivors.end());
}

namespace {

int family_rank(const SimpleType& t) {
  switch (t.family) {
    case 'A': return 0;
    case 'B': return t.rank == 2 ? 2 : 1;
    case 'C': return 2;
    case 'D': return 3;
    case 'E': return 4;
    case 'F': return 5;
    default: return 6;
  }
}

}  // namespace

std::vector<SimpleType> standard_order(const CartanType& t) {
  auto comps = t.components;
  std::stable_sort(comps.begin(), comps.end(), [](const SimpleType& a, const SimpleType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return family_rank(a) < family_rank(b);
  });
  return comps;
}

Genus standard_genus(const CartanType& t) {
  if (t.components.empty()) throw InputError("empty Cartan type");
  auto comps = standard_order(t);
  const int n = t.rank();
  Genus g(n, n);
  int off = 0;
  for (const auto& c : comps) {
    Genus b = standard_genus(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) g(off + i, off + j) = b(i, j);
    off += c.rank;
  }
  return g;
}

void sort_tuples(const RootSystem& rs, std::vector<std::vector<int>>& tuples) {
  std::sort(tuples.begin(), tuples.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (a[i] == b[i]) continue;
      return rs.coords(a[i]) < rs.coords(b[i]);
    }
    return a.size() < b.size();
  });
}

std::vector<std::vector<int>> enumerate_fiber(const RootSystem& rs, const Genus& sigma, GenusKind kind) {
  if (!sigma.is_square()) throw InputError("genus must be square");
  const int n = static_cast<int>(sigma.rows());
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Targets as integers: coroot pairings, or inner products times scale().
  std::vector<long long> target(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat x = kind == GenusKind::Cartan ? sigma(i, j) : sigma(i, j) * Rat(rs.scale());
      if (!x.is_integer()) return out;
      target[i * n + j] = x.to_long();
    }
  if (kind == GenusKind::Cartan) {
    for (int i = 0; i < n; ++i)
      if (target[i * n + i] != 2) return out;
  } else if (!sigma.is_symmetric()) {
    return out;
  }
  std::vector<int> tuple;
  std::function<void(ParabolicIndex)> rec = [&](ParabolicIndex J) {
    const int k = static_cast<int>(tuple.size());
    if (k == n) {
      out.push_back(tuple);
      return;
    }
    for (int r = 0; r < rs.num_roots(); ++r) {
      bool ok = true;
      for (ParabolicIndex rest = J; rest && ok; rest &= rest - 1) ok = rs.ip(rs.simple(__builtin_ctzll(rest)), r) >= 0;
      if (!ok) continue;
      if (kind == GenusKind::Gram) {
        ok = rs.ip(r, r) == target[k * n + k];
        for (int i = 0; i < k && ok; ++i) ok = rs.ip(tuple[i], r) == target[i * n + k];
      } else {
        for (int i = 0; i < k && ok; ++i)
          ok = rs.coroot_pair(tuple[i], r) == target[i * n + k] && rs.coroot_pair(r, tuple[i]) == target[k * n + i];
      }
      if (!ok) continue;
      ParabolicIndex next = 0;
      for (ParabolicIndex rest = J; rest; rest &= rest - 1) {
        int j = __builtin_ctzll(rest);
        if (rs.ip(rs.simple(j), r) == 0) next |= ParabolicIndex{1} << j;
      }
      tuple.push_back(r);
      rec(next);
      tuple.pop_back();
    }
  };
  rec(full_index(rs.rank()));
  sort_tuples(rs, out);
  return out;
}

std::vector<std::vector<int>> np_graphical_tuples(const RootSystem& rs, int n) {
  if (n < 1) throw InputError("n must be at least 1");
  std::vector<std::vector<int>> out;
  std::vector<int> tuple;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(tuple.size()) == n) {
      out.push_back(tuple);
      return;
    }
    for (int j = 0; j < rs.rank(); ++j) {
      int r = rs.negate(rs.simple(j));
      if (std::find(tuple.begin(), tuple.end(), r) != tuple.end()) continue;
      bool linked = std::any_of(tuple.begin(), tuple.end(), [&](int b) { return rs.ip(b, r) != 0; });
      if (!linked) continue;
      tuple.push_back(r);
      rec();
      tuple.pop_back();
    }
  };
  for (int beta : dominant_roots(rs)) {
    tuple = {beta};
    rec();
  }
  sort_tuples(rs, out);
  return out;
}

}  // namespace weylfund

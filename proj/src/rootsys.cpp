#include "weylfund/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace weylfund {

namespace {

struct PermHash {
  std::size_t operator()(const RootPerm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t component_order(const SimpleType& t) {
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f = sat_mul(f, static_cast<std::uint64_t>(i));
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case 'A':
      return fact(n + 1);
    case 'B':
    case 'C':
      return sat_mul(n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n), fact(n));
    case 'D':
      return sat_mul(n - 1 >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << (n - 1)), fact(n));
    case 'E':
      return n == 6 ? 51840ULL : (n == 7 ? 2903040ULL : 696729600ULL);
    case 'F':
      return 1152;
    case 'G':
      return 12;
  }
  return 0;
}

}  // namespace

void validate(const SimpleType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) throw InputError("invalid Cartan type component '" + t.str() + "'");
}

CartanType CartanType::parse(std::string_view text) {
  CartanType ct;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s.empty()) throw InputError("empty Cartan type");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('X', pos);
    std::string part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])) ||
        !std::all_of(part.begin() + 1, part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        part.size() > 4)
      throw InputError("malformed Cartan type '" + std::string(text) + "'");
    SimpleType t{part[0], std::stoi(part.substr(1))};
    validate(t);
    ct.components.push_back(t);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (ct.rank() > 64) throw InputError("rank above 64 is not supported");
  return ct;
}

std::string CartanType::str() const {
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) s += (i ? "x" : "") + components[i].str();
  return s;
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::vector<int> index_members(ParabolicIndex I) {
  std::vector<int> out;
  for (int j = 0; j < 64; ++j)
    if (index_has(I, j)) out.push_back(j);
  return out;
}

DynkinDiagram dynkin_diagram(const SimpleType& t) {
  validate(t);
  const int n = t.rank;
  DynkinDiagram d;
  d.lengths.assign(n, Rat(2));
  auto chain = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) d.bonds.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case 'A':
      chain(0, n - 1);
      break;
    case 'B':
      chain(0, n - 1);
      d.lengths[n - 1] = 1;
      break;
    case 'C':
      chain(0, n - 1);
      for (int i = 0; i + 1 < n; ++i) d.lengths[i] = 1;
      break;
    case 'D':
      chain(0, n - 2);
      d.bonds.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      d.bonds = {{0, 2}, {2, 3}, {1, 3}};
      chain(3, n - 1);
      break;
    case 'F':
      chain(0, 3);
      d.lengths[2] = 1;
      d.lengths[3] = 1;
      break;
    case 'G':
      chain(0, 1);
      d.lengths[1] = Rat(2, 3);
      break;
  }
  return d;
}

MatRat cartan_from_diagram(const DynkinDiagram& d) {
  const std::size_t n = d.lengths.size();
  MatRat c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  for (auto [i, j] : d.bonds) {
    Rat g = -std::max(d.lengths[i], d.lengths[j]) / Rat(2);
    c(i, j) = Rat(2) * g / d.lengths[i];
    c(j, i) = Rat(2) * g / d.lengths[j];
  }
  return c;
}

RootSystem RootSystem::build(const CartanType& type) {
  if (type.components.empty()) throw InputError("Cartan type has no components");
  for (const auto& c : type.components) validate(c);
  RootSystem rs;
  rs.type_ = type;
  const int r = type.rank();
  rs.rank_ = r;
  rs.gram_ = MatRat(r, r);
  int offset = 0;
  for (const auto& comp : type.components) {
    DynkinDiagram d = dynkin_diagram(comp);
    ParabolicIndex mask = 0;
    for (int i = 0; i < comp.rank; ++i) {
      rs.gram_(offset + i, offset + i) = d.lengths[i];
      mask |= ParabolicIndex{1} << (offset + i);
    }
    for (auto [i, j] : d.bonds) {
      Rat g = -std::max(d.lengths[i], d.lengths[j]) / Rat(2);
      rs.gram_(offset + i, offset + j) = g;
      rs.gram_(offset + j, offset + i) = g;
    }
    rs.component_masks_.push_back(mask);
    offset += comp.rank;
  }
  rs.cartan_ = MatRat(r, r);
  rs.icartan_.assign(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      rs.cartan_(i, j) = Rat(2) * rs.gram_(i, j) / rs.gram_(i, i);
      rs.icartan_[i * r + j] = static_cast<int>(rs.cartan_(i, j).to_long());
    }

  // Close the simple roots under simple reflections.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int j = 0; j < r; ++j) {
    std::vector<int> e(r, 0);
    e[j] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> b = queue.front();
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      int p = 0;
      for (int k = 0; k < r; ++k) p += b[k] * rs.icartan_[j * r + k];
      if (p == 0) continue;
      std::vector<int> c = b;
      c[j] -= p;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& b : seen)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) pos.push_back(b);
  std::sort(pos.begin(), pos.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (2 * pos.size() != seen.size()) throw std::logic_error("root closure is not symmetric");
  const int P = static_cast<int>(pos.size());
  rs.positive_ = P;
  rs.icoords_ = pos;
  for (int i = 0; i < P; ++i) {
    std::vector<int> neg = pos[i];
    for (int& x : neg) x = -x;
    rs.icoords_.push_back(neg);
  }
  const int N = 2 * P;
  for (int i = 0; i < N; ++i) {
    rs.roots_.push_back(VecPi::from_ints(rs.icoords_[i]));
    rs.lookup_[rs.icoords_[i]] = i;
  }

  // Integer scaled inner products.
  mpz_class l = 1;
  for (const auto& e : rs.gram_.entries()) {
    mpz_class d = e.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  rs.scale_ = l.get_si();
  std::vector<long long> gs(static_cast<std::size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gs[i * r + j] = (rs.gram_(i, j) * Rat(rs.scale_)).to_long();
  std::vector<std::vector<long long>> gb(N, std::vector<long long>(r, 0));
  for (int a = 0; a < N; ++a)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) gb[a][j] += gs[j * r + k] * rs.icoords_[a][k];
  rs.ip_.assign(static_cast<std::size_t>(N) * N, 0);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      long long s = 0;
      for (int j = 0; j < r; ++j) s += static_cast<long long>(rs.icoords_[a][j]) * gb[b][j];
      rs.ip_[static_cast<std::size_t>(a) * N + b] = s;
    }

  rs.reflections_.assign(N, RootPerm(N));
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      long long c = 2 * rs.ip(a, b) / rs.ip(a, a);
      std::vector<int> v = rs.icoords_[b];
      for (int j = 0; j < r; ++j) v[j] -= static_cast<int>(c) * rs.icoords_[a][j];
      rs.reflections_[a][b] = rs.lookup_.at(v);
    }
  }

  rs.support_.assign(N, 0);
  rs.component_of_.assign(N, -1);
  for (int a = 0; a < N; ++a) {
    for (int j = 0; j < r; ++j)
      if (rs.icoords_[a][j] != 0) rs.support_[a] |= ParabolicIndex{1} << j;
    for (int c = 0; c < rs.num_components(); ++c)
      if (rs.support_[a] & rs.component_masks_[c]) rs.component_of_[a] = c;
  }

  for (int j = 0; j < r; ++j) {
    std::vector<Rat> e(r);
    e[j] = 1;
    auto x = solve_linear(rs.gram_, e);
    if (!x) throw std::logic_error("Gram matrix is singular");
    rs.coweights_.emplace_back(*x);
  }
  return rs;
}

int RootSystem::find_root(const VecPi& v) const {
  if (static_cast<int>(v.size()) != rank_) return -1;
  std::vector<int> c(rank_);
  for (int j = 0; j < rank_; ++j) {
    if (!v[j].is_integer()) return -1;
    c[j] = static_cast<int>(v[j].to_long());
  }
  return find_root(c);
}

int RootSystem::find_root(const std::vector<int>& coords) const {
  auto it = lookup_.find(coords);
  return it == lookup_.end() ? -1 : it->second;
}

int RootSystem::height(int i) const { return std::accumulate(icoords_[i].begin(), icoords_[i].end(), 0); }

Rat RootSystem::inner(const VecPi& u, const VecPi& v) const {
  if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
    throw InputError("vector length does not match the rank");
  Rat s;
  for (int i = 0; i < rank_; ++i) {
    if (u[i].is_zero()) continue;
    Rat t;
    for (int j = 0; j < rank_; ++j)
      if (!gram_(i, j).is_zero() && !v[j].is_zero()) t += gram_(i, j) * v[j];
    s += u[i] * t;
  }
  return s;
}

Rat RootSystem::simple_pairing(int j, const VecPi& v) const {
  Rat s;
  for (int k = 0; k < rank_; ++k)
    if (!gram_(j, k).is_zero() && !v[k].is_zero()) s += gram_(j, k) * v[k];
  return s;
}

int RootSystem::simple_pairing_sign(int j, const VecPi& v) const {
  Rat s;
  for (int k = 0; k < rank_; ++k) {
    int c = icartan_[j * rank_ + k];
    if (c != 0 && !v[k].is_zero()) s += Rat(c) * v[k];
  }
  return s.sign();
}

VecPi RootSystem::apply(const RootPerm& perm, const VecPi& v) const {
  if (static_cast<int>(v.size()) != rank_) throw InputError("vector length does not match the rank");
  VecPi out(rank_);
  for (int j = 0; j < rank_; ++j) {
    if (v[j].is_zero()) continue;
    const auto& img = icoords_[perm[j]];
    for (int k = 0; k < rank_; ++k)
      if (img[k] != 0) out[k] += Rat(img[k]) * v[j];
  }
  return out;
}

std::uint64_t RootSystem::group_order() const {
  std::uint64_t o = 1;
  for (const auto& c : type_.components) o = sat_mul(o, component_order(c));
  return o;
}

MatRat GroupElement::matrix(const RootSystem& rs) const {
  const int r = rs.rank();
  MatRat m(r, r);
  for (int j = 0; j < r; ++j) {
    const auto& img = rs.coords(perm[j]);
    for (int k = 0; k < r; ++k) m(k, j) = img[k];
  }
  return m;
}

VecPi reflect(const RootSystem& rs, int alpha_index, const VecPi& v) {
  const VecPi& a = rs.root(alpha_index);
  Rat c = Rat(2) * rs.inner(v, a) / rs.norm(alpha_index);
  return v - c * a;
}

std::uint64_t default_group_limit() {
  if (const char* env = std::getenv("WEYLFUND_GROUP_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 200000;
}

void check_group_limit(const RootSystem& rs, std::uint64_t limit) {
  std::uint64_t order = rs.group_order();
  if (order > limit)
    throw ResourceLimit("Weyl group of " + rs.type().str() + " has order " + std::to_string(order) +
                        ", above the enumeration limit " + std::to_string(limit));
}

int element_length(const RootSystem& rs, const RootPerm& perm) {
  int l = 0;
  for (int i = 0; i < rs.positive_count(); ++i)
    if (!rs.is_positive(perm[i])) ++l;
  return l;
}

GroupElement make_element(const RootSystem& rs, RootPerm perm) {
  GroupElement g;
  g.length = element_length(rs, perm);
  g.perm = std::move(perm);
  return g;
}

GroupElement identity_element(const RootSystem& rs) {
  RootPerm p(rs.num_roots());
  std::iota(p.begin(), p.end(), 0);
  return GroupElement{p, 0};
}

GroupElement simple_reflection(const RootSystem& rs, int j) { return GroupElement{rs.reflection_perm(rs.simple(j)), 1}; }

GroupElement compose(const RootSystem& rs, const GroupElement& a, const GroupElement& b) {
  RootPerm p(b.perm.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm[b.perm[i]];
  return make_element(rs, std::move(p));
}

GroupElement inverse(const RootSystem&, const GroupElement& g) {
  RootPerm p(g.perm.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[g.perm[i]] = static_cast<int>(i);
  return GroupElement{std::move(p), g.length};
}

GroupElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  GroupElement g = identity_element(rs);
  for (int j : word) {
    if (j < 0 || j >= rs.rank()) throw InputError("simple reflection index out of range");
    g = compose(rs, g, simple_reflection(rs, j));
  }
  return g;
}

std::vector<int> reduced_word(const RootSystem& rs, const GroupElement& g) {
  std::vector<int> rev;
  RootPerm p = g.perm;
  while (true) {
    int j = 0;
    while (j < rs.rank() && rs.is_positive(p[rs.simple(j)])) ++j;
    if (j == rs.rank()) break;
    const RootPerm& s = rs.reflection_perm(rs.simple(j));
    RootPerm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[s[i]];
    p = std::move(q);
    rev.push_back(j);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::string word_str(const std::vector<int>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " s" : "s") + std::to_string(word[i] + 1);
  return s;
}

namespace {

std::vector<GroupElement> bfs_group(const RootSystem& rs, const std::vector<const RootPerm*>& gens, std::uint64_t limit,
                                    const std::string& what) {
  std::unordered_map<RootPerm, int, PermHash> seen;
  std::vector<RootPerm> order;
  RootPerm id(rs.num_roots());
  std::iota(id.begin(), id.end(), 0);
  seen.emplace(id, 0);
  order.push_back(id);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const RootPerm* s : gens) {
      RootPerm q(id.size());
      const RootPerm& p = order[head];
      for (std::size_t i = 0; i < q.size(); ++i) q[i] = p[(*s)[i]];
      if (seen.emplace(q, 0).second) {
        order.push_back(std::move(q));
        if (order.size() > limit)
          throw ResourceLimit(what + " exceeds the enumeration limit " + std::to_string(limit));
      }
    }
  }
  std::vector<GroupElement> out;
  out.reserve(order.size());
  for (auto& p : order) out.push_back(make_element(rs, std::move(p)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GroupElement> enumerate_group(const RootSystem& rs, std::uint64_t limit) {
  check_group_limit(rs, limit);
  std::vector<const RootPerm*> gens;
  for (int j = 0; j < rs.rank(); ++j) gens.push_back(&rs.reflection_perm(rs.simple(j)));
  auto out = bfs_group(rs, gens, limit, "Weyl group");
  if (out.size() != rs.group_order()) throw std::logic_error("enumerated group order disagrees with formula");
  return out;
}

bool in_parabolic(const RootSystem& rs, const GroupElement& g, ParabolicIndex J) {
  for (int i = 0; i < rs.positive_count(); ++i)
    if (!rs.is_positive(g.perm[i]) && (rs.support(i) & ~J)) return false;
  return true;
}

std::vector<GroupElement> min_coset_reps(const RootSystem& rs, ParabolicIndex J, std::uint64_t limit) {
  std::vector<GroupElement> out;
  for (auto& g : enumerate_group(rs, limit)) {
    bool ok = true;
    for (int j : index_members(J))
      if (!rs.is_positive(g.perm[rs.simple(j)])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(g));
  }
  return out;
}

GroupElement min_coset_rep(const RootSystem& rs, const GroupElement& g, ParabolicIndex J) {
  RootPerm p = g.perm;
  while (true) {
    int found = -1;
    for (int j : index_members(J))
      if (!rs.is_positive(p[rs.simple(j)])) {
        found = j;
        break;
      }
    if (found < 0) break;
    const RootPerm& s = rs.reflection_perm(rs.simple(found));
    RootPerm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[s[i]];
    p = std::move(q);
  }
  return make_element(rs, std::move(p));
}

Subsystem make_subsystem(const RootSystem& rs, const std::vector<int>& gamma) {
  const int N = rs.num_roots();
  for (int g : gamma)
    if (g < 0 || g >= N) throw InputError("root index out of range");
  for (std::size_t a = 0; a < gamma.size(); ++a)
    for (std::size_t b = a + 1; b < gamma.size(); ++b) {
      if (gamma[a] == gamma[b]) throw InputError("repeated root in simple subsystem");
      if (rs.ip(gamma[a], gamma[b]) > 0) throw InputError("roots of a simple subsystem must pair non-positively");
    }
  if (!gamma.empty()) {
    MatRat m(gamma.size(), rs.rank());
    for (std::size_t a = 0; a < gamma.size(); ++a)
      for (int j = 0; j < rs.rank(); ++j) m(a, j) = rs.coords(gamma[a])[j];
    if (m.matrix_rank() != gamma.size()) throw InputError("roots of a simple subsystem must be linearly independent");
  }
  Subsystem s;
  s.simple = gamma;
  s.in_phi.assign(N, 0);
  s.positive.assign(N, 0);
  std::vector<int> queue(gamma.begin(), gamma.end());
  for (int g : gamma) s.in_phi[g] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int g : gamma) {
      int img = rs.reflection_perm(g)[queue[h]];
      if (!s.in_phi[img]) {
        s.in_phi[img] = 1;
        queue.push_back(img);
      }
    }
  if (gamma.empty()) return s;
  const std::size_t k = gamma.size();
  MatRat G(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) G(a, b) = Rat(rs.ip(gamma[a], gamma[b]));
  std::vector<Rat> ones(k, Rat(1));
  auto x = solve_linear(G, ones);
  for (int i = 0; i < N; ++i) {
    if (!s.in_phi[i]) continue;
    Rat v;
    for (std::size_t a = 0; a < k; ++a) v += (*x)[a] * Rat(rs.ip(i, gamma[a]));
    s.positive[i] = v.sign() > 0;
  }
  return s;
}

std::vector<GroupElement> subsystem_group(const RootSystem& rs, const std::vector<int>& gamma, std::uint64_t limit) {
  std::vector<const RootPerm*> gens;
  for (int g : gamma) gens.push_back(&rs.reflection_perm(g));
  return bfs_group(rs, gens, limit, "reflection subgroup");
}

std::vector<GroupElement> min_coset_reps_subgroup(const RootSystem& rs, const std::vector<int>& gamma,
                                                  const std::vector<int>& gamma_prime, std::uint64_t limit) {
  Subsystem big = make_subsystem(rs, gamma);
  make_subsystem(rs, gamma_prime);
  for (int g : gamma_prime)
    if (!big.in_phi[g]) throw InputError("W_Gamma' is not contained in W_Gamma");
  std::vector<GroupElement> out;
  for (auto& w : subsystem_group(rs, gamma, limit)) {
    GroupElement inv = inverse(rs, w);
    bool ok = std::all_of(gamma_prime.begin(), gamma_prime.end(), [&](int g) { return big.positive[inv.perm[g]] != 0; });
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

LongestElement longest_element(const RootSystem& rs, ParabolicIndex I) {
  const int r = rs.rank();
  LongestElement le;
  le.rho.resize(r);
  std::iota(le.rho.begin(), le.rho.end(), 0);
  le.w = identity_element(rs);
  auto members = index_members(I);
  if (members.empty()) return le;
  const std::size_t k = members.size();
  MatRat G(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) G(a, b) = rs.gram()(members[a], members[b]);
  auto x = solve_linear(G, std::vector<Rat>(k, Rat(1)));
  VecPi v(r);
  for (std::size_t a = 0; a < k; ++a) v[members[a]] = -(*x)[a];
  RootPerm p = le.w.perm;
  while (true) {
    int found = -1;
    for (int j : members)
      if (rs.simple_pairing_sign(j, v) < 0) {
        found = j;
        break;
      }
    if (found < 0) break;
    v = reflect(rs, rs.simple(found), v);
    const RootPerm& s = rs.reflection_perm(rs.simple(found));
    for (auto& e : p) e = s[e];
  }
  le.w = make_element(rs, std::move(p));
  for (int j : members) {
    int img = rs.negate(le.w.perm[rs.simple(j)]);
    if (img >= r || !index_has(I, img)) throw std::logic_error("longest element does not permute -Pi_I");
    le.rho[j] = img;
  }
  return le;
}

}  // namespace weylfund

#include "cgt/constructions.hpp"

#include "cgt/kernel.hpp"
#include "cgt/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string_view>
#include <sstream>

namespace cgt {

namespace {

std::string join_numbers(const std::vector<std::uint64_t>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

void check_cap(std::size_t order, std::size_t cap, const std::string& what) {
  if (order > cap) {
    std::ostringstream msg;
    msg << what << " would have order " << order << ", above the cap of " << cap;
    throw InputError(msg.str());
  }
}

}  // namespace

Group cyclic(std::uint64_t n) {
  if (n == 0) throw InputError("cyclic(0) is not a group");
  check_cap(n, kDefaultOrderCap, "cyclic group");
  std::vector<Elem> t(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return Group::from_table(n, std::move(t), "cyclic(" + std::to_string(n) + ")");
}

Group abelian(const std::vector<std::uint64_t>& orders) {
  if (orders.empty()) throw InputError("abelian() needs at least one factor");
  std::uint64_t n = 1;
  for (auto o : orders) {
    if (o == 0) throw InputError("abelian(): factor of order 0");
    n *= o;
    check_cap(n, kDefaultOrderCap, "abelian group");
  }
  const std::size_t k = orders.size();
  std::vector<std::vector<std::uint64_t>> digits(n, std::vector<std::uint64_t>(k));
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t r = x;
    for (std::size_t i = k; i-- > 0;) {
      digits[x][i] = r % orders[i];
      r /= orders[i];
    }
  }
  std::vector<Elem> t(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < k; ++i) idx = idx * orders[i] + (digits[a][i] + digits[b][i]) % orders[i];
      t[a * n + b] = static_cast<Elem>(idx);
    }
  return Group::from_table(n, std::move(t), "abelian(" + join_numbers(orders) + ")");
}

Group dihedral(std::uint64_t n) {
  if (n == 0) throw InputError("dihedral(0) is not a group");
  check_cap(2 * n, kDefaultOrderCap, "dihedral group");
  const std::uint64_t m = 2 * n;
  std::vector<Elem> t(m * m);
  // r^i -> i, s r^i -> n + i; r^i s = s r^-i.
  for (std::uint64_t a = 0; a < m; ++a)
    for (std::uint64_t b = 0; b < m; ++b) {
      const bool sa = a >= n, sb = b >= n;
      const std::uint64_t i = a % n, j = b % n;
      std::uint64_t r;
      bool s;
      if (!sb) {
        r = (i + j) % n;
        s = sa;
      } else {
        r = (j + n - i) % n;
        s = !sa;
      }
      t[a * m + b] = static_cast<Elem>((s ? n : 0) + r);
    }
  return Group::from_table(m, std::move(t), "dihedral(" + std::to_string(n) + ")");
}

Group permutation_group(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& gens, std::string label,
                        std::size_t cap) {
  using Perm = std::vector<std::uint32_t>;
  if (degree == 0) throw InputError("permutation degree must be positive");
  for (const Perm& p : gens) {
    if (p.size() != degree) throw InputError("generator has wrong length for degree " + std::to_string(degree));
    std::vector<char> hit(degree, 0);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw InputError("generator is not a permutation of 0.." + std::to_string(degree - 1));
      hit[v] = 1;
    }
  }
  auto compose = [](const Perm& a, const Perm& b) {  // apply a, then b
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Perm, Elem> seen{{id, 0}};
  std::vector<Perm> list{id};
  for (std::size_t head = 0; head < list.size(); ++head)
    for (const Perm& g : gens) {
      Perm y = compose(list[head], g);
      if (seen.count(y)) continue;
      if (list.size() + 1 > cap) throw InputError("permutation group exceeds the order cap of " + std::to_string(cap));
      seen.emplace(y, 0);
      list.push_back(std::move(y));
    }
  std::sort(list.begin(), list.end());
  for (std::size_t i = 0; i < list.size(); ++i) seen[list[i]] = static_cast<Elem>(i);
  const std::size_t n = list.size();
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = seen.at(compose(list[a], list[b]));
  return Group::from_table(n, std::move(t), std::move(label));
}

Group symmetric(std::uint64_t n) {
  if (n == 0 || n > 6) throw InputError("symmetric(n) is supported for 1 <= n <= 6");
  std::vector<std::vector<std::uint32_t>> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens = {swap, cycle};
  }
  return permutation_group(n, gens, "sym(" + std::to_string(n) + ")");
}

Group alternating(std::uint64_t n) {
  if (n == 0 || n > 6) throw InputError("alternating(n) is supported for 1 <= n <= 6");
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::uint32_t i = 2; i < n; ++i) {
    std::vector<std::uint32_t> c(n);
    std::iota(c.begin(), c.end(), 0u);
    c[0] = 1, c[1] = i, c[i] = 0;  // (0 1 i)
    gens.push_back(c);
  }
  return permutation_group(n, gens, "alt(" + std::to_string(n) + ")");
}

Group quaternion8() {
  // Index = 4*sign + unit, units 1,i,j,k.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Elem> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int sign = (a / 4) ^ (b / 4) ^ kSign[ua][ub];
      t[a * 8 + b] = static_cast<Elem>(4 * sign + kUnit[ua][ub]);
    }
  return Group::from_table(8, std::move(t), "quaternion8");
}

Group frobenius(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q)) throw InputError("frobenius(p,q) needs primes p and q");
  if ((p - 1) % q != 0) throw InputError("frobenius(p,q) needs q | p-1");
  std::uint64_t k = 2;
  while (multiplicative_order(k, p) != q) ++k;
  ActionSpec spec = ActionSpec::from_generator_images(cyclic(p), q, {static_cast<Elem>(k)});
  spec.label = "frobenius(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return semidirect_product(spec);
}

Group direct_product(const Group& a, const Group& b, std::size_t cap) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  check_cap(n, cap, "direct product");
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Elem>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  return Group::from_table(n, std::move(t), "dp(" + a.label() + "," + b.label() + ")");
}

// --- actions ----------------------------------------------------------------

void ActionSpec::validate() const {
  const std::size_t nv = acted.order(), na = acting.order();
  if (action.size() != nv * na) throw InputError("action table has the wrong size");
  for (Elem v = 0; v < nv; ++v) {
    if (apply(v, kIdentity) != v) throw InputError("identity does not act trivially on " + std::to_string(v));
    for (Elem a = 0; a < na; ++a)
      if (apply(v, a) >= nv) throw InputError("action image out of range");
  }
  for (Elem a = 0; a < na; ++a) {
    std::vector<char> hit(nv, 0);
    for (Elem v = 0; v < nv; ++v) {
      if (hit[apply(v, a)]) throw InputError("element " + std::to_string(a) + " does not act bijectively");
      hit[apply(v, a)] = 1;
    }
    for (Elem u = 0; u < nv; ++u)
      for (Elem v = 0; v < nv; ++v)
        if (apply(acted.mul(u, v), a) != acted.mul(apply(u, a), apply(v, a))) {
          std::ostringstream msg;
          msg << "element " << a << " is not an automorphism: (" << u << "*" << v << ")^a != " << u << "^a*" << v
              << "^a";
          throw InputError(msg.str());
        }
  }
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < na; ++b)
      for (Elem v = 0; v < nv; ++v)
        if (apply(apply(v, a), b) != apply(v, acting.mul(a, b))) {
          std::ostringstream msg;
          msg << "not a right action: (v^a)^b != v^(ab) at v=" << v << ", a=" << a << ", b=" << b;
          throw InputError(msg.str());
        }
}

bool ActionSpec::is_faithful() const {
  for (Elem a = 1; a < acting.order(); ++a) {
    bool trivial = true;
    for (Elem v = 0; v < acted.order() && trivial; ++v) trivial = apply(v, a) == v;
    if (trivial) return false;
  }
  return true;
}

ActionSpec ActionSpec::from_generator_images(const Group& acted, std::uint64_t m, const std::vector<Elem>& images) {
  const auto gens = acted.generators();
  if (images.size() != gens.size()) {
    std::ostringstream msg;
    msg << "acted group has " << gens.size() << " generators but " << images.size() << " images were given";
    throw InputError(msg.str());
  }
  for (Elem x : images)
    if (!acted.valid(x)) throw InputError("generator image " + std::to_string(x) + " is out of range");
  const std::size_t nv = acted.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> alpha(nv, kUnset);
  alpha[kIdentity] = kIdentity;
  std::vector<Elem> list{kIdentity};
  for (std::size_t head = 0; head < list.size(); ++head)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = acted.mul(list[head], gens[i]);
      const Elem img = acted.mul(alpha[list[head]], images[i]);
      if (alpha[y] == kUnset) {
        alpha[y] = img;
        list.push_back(y);
      } else if (alpha[y] != img) {
        throw InputError("generator images do not extend to a homomorphism");
      }
    }
  Group acting = cyclic(m);
  std::vector<Elem> action(nv * m);
  std::vector<Elem> cur(nv);
  std::iota(cur.begin(), cur.end(), Elem{0});
  for (std::uint64_t j = 0; j < m; ++j) {
    for (Elem v = 0; v < nv; ++v) action[v * m + j] = cur[v];
    for (Elem v = 0; v < nv; ++v) cur[v] = alpha[cur[v]];
  }
  for (Elem v = 0; v < nv; ++v)
    if (cur[v] != v) throw InputError("the automorphism's order does not divide " + std::to_string(m));
  std::ostringstream label;
  label << "sd(" << acted.label() << ",cyclic(" << m << ")";
  for (Elem x : images) label << "," << x;
  label << ")";
  ActionSpec spec{std::move(acting), acted, std::move(action), label.str()};
  spec.validate();
  return spec;
}

ActionSpec ActionSpec::conjugation(const Subgroup& acting, const Subgroup& acted) {
  const Group& g = acting.parent();
  if (!acted.is_normal()) throw PreconditionError("conjugation action needs a normal acted subgroup");
  SubgroupGroup a = subgroup_as_group(acting);
  SubgroupGroup v = subgroup_as_group(acted);
  ElementSet kernel(a.group.order());
  for (Elem i = 0; i < a.group.order(); ++i) {
    bool central = true;
    for (Elem x : acted.generators())
      if (!g.commute(a.embedding[i], x)) {
        central = false;
        break;
      }
    if (central) kernel.set(i);
  }
  const QuotientMap q = quotient_group(a.group, Subgroup(a.group, kernel));
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < v.embedding.size(); ++i) local[v.embedding[i]] = static_cast<Elem>(i);
  const std::size_t nv = v.group.order(), na = q.quotient.order();
  std::vector<Elem> action(nv * na);
  for (Elem x = 0; x < nv; ++x)
    for (Elem c = 0; c < na; ++c) action[x * na + c] = local[g.conj(v.embedding[x], a.embedding[q.lift(c)])];
  ActionSpec spec{q.quotient, v.group, std::move(action), "conj"};
  spec.validate();
  return spec;
}

Group semidirect_product(const ActionSpec& spec, std::size_t cap) {
  spec.validate();
  const std::size_t nv = spec.acted.order(), na = spec.acting.order(), n = nv * na;
  check_cap(n, cap, "semidirect product");
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto a1 = static_cast<Elem>(x / na), b1 = static_cast<Elem>(x % na);
    const Elem b1inv = spec.acting.inv(b1);
    for (std::size_t y = 0; y < n; ++y) {
      const auto a2 = static_cast<Elem>(y / na), b2 = static_cast<Elem>(y % na);
      const Elem a = spec.acted.mul(a1, spec.apply(a2, b1inv));
      t[x * n + y] = static_cast<Elem>(a * na + spec.acting.mul(b1, b2));
    }
  }
  std::string label = spec.label.empty() ? "sd(" + spec.acted.label() + "," + spec.acting.label() + ")" : spec.label;
  return Group::from_table(n, std::move(t), std::move(label));
}

NaturalSemidirect natural_semidirect(const Group& g, const Subgroup& h) {
  if (!h.is_normal()) throw PreconditionError("natural semidirect product needs H normal; H = " + h.to_string());
  if (!h.is_abelian()) throw PreconditionError("natural semidirect product needs H abelian; H = " + h.to_string());
  QuotientMap q = quotient_group(g, h);
  const std::size_t nq = q.quotient.order();
  std::vector<Elem> pos(g.order(), 0);
  for (std::size_t i = 0; i < h.order(); ++i) pos[h.members()[i]] = static_cast<Elem>(i);

  // h^(g^-1) must not depend on the coset representative.
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem rep = q.lift(q.project(x));
    for (Elem k : h.generators())
      if (g.conj(k, g.inv(x)) != g.conj(k, g.inv(rep)))
        throw Error("internal: natural semidirect action depends on the coset representative");
  }

  const std::size_t n = h.order() * nq;
  std::vector<Elem> t(n * n);
  const auto mem = h.members();
  for (std::size_t e1 = 0; e1 < n; ++e1) {
    const Elem h1 = mem[e1 / nq], c1 = static_cast<Elem>(e1 % nq);
    const Elem s1 = q.lift(c1), s1inv = g.inv(s1);
    for (std::size_t e2 = 0; e2 < n; ++e2) {
      const Elem h2 = mem[e2 / nq], c2 = static_cast<Elem>(e2 % nq);
      const Elem hh = g.mul(h1, g.conj(h2, s1inv));
      t[e1 * n + e2] = static_cast<Elem>(pos[hh] * nq + q.quotient.mul(c1, c2));
    }
  }
  Group out = Group::from_table(n, std::move(t), "nsd(" + g.label() + "," + h.to_string() + ")");
  return NaturalSemidirect{std::move(out), h, std::move(q.projection), std::move(q.section), std::move(pos)};
}

PhiWitness key_iso_phi(const Group& g, const Subgroup& h, const Subgroup& n) {
  for (const Subgroup* s : {&h, &n})
    if (!s->is_normal() || !s->is_abelian())
      throw PreconditionError("key_iso_phi: H and N must be abelian and normal; got " + s->to_string());
  if ((h.mask() & n.mask()).count() != 1) throw PreconditionError("key_iso_phi: H n N must be trivial");

  PhiWitness w;
  const NaturalSemidirect g1 = natural_semidirect(g, h);
  std::vector<Elem> n1_members;
  for (Elem x : n.members()) n1_members.push_back(g1.embed_coset_of(x));
  NaturalSemidirect g2 = [&] {
    try {
      return natural_semidirect(g1.group, Subgroup(g1.group, n1_members));
    } catch (const PreconditionError& e) {
      throw LemmaViolation(std::string("N1 is not an abelian normal subgroup of H x| G/H: ") + e.what());
    }
  }();
  const Subgroup hn = product(h, n);
  const NaturalSemidirect g3 = natural_semidirect(g, hn);
  w.domain_order = g3.group.order();

  auto split_hn = [&](Elem a) -> std::pair<Elem, Elem> {
    for (Elem x : h.members()) {
      const Elem rest = g.mul(g.inv(x), a);
      if (n.contains(rest)) return {x, rest};
    }
    throw LemmaViolation("element of HN does not factor as hn");
  };
  // phi((hn, gHN)) = ((1, nH), (h, gH) N1), evaluated with an explicit choice of g.
  auto phi_with = [&](Elem a, Elem rep) {
    const auto [hh, nn] = split_hn(a);
    const Elem x1 = g1.embed_coset_of(nn);
    const Elem x2 = g1.index_of({hh, g1.coset_of[rep]});
    return g2.index_of({x1, g2.coset_of[x2]});
  };

  const std::size_t order = g3.group.order();
  std::vector<Elem> phi(order);
  for (Elem e = 0; e < order; ++e) {
    const SemidirectPair p = g3.pair_of(e);
    phi[e] = phi_with(p.h, g3.coset_rep[p.coset]);
  }

  w.well_defined = true;
  for (Elem x = 0; x < g.order() && w.well_defined; ++x) {
    const Elem c = g3.coset_of[x];
    for (Elem a : hn.members())
      if (phi_with(a, x) != phi[g3.index_of({a, c})]) {
        w.well_defined = false;
        break;
      }
  }

  std::vector<char> hit(g2.group.order(), 0);
  std::size_t distinct = 0;
  for (Elem v : phi)
    if (!hit[v]) {
      hit[v] = 1;
      ++distinct;
    }
  w.bijective = order == g2.group.order() && distinct == order;

  w.homomorphism = true;
  for (Elem a = 0; a < order && w.homomorphism; ++a)
    for (Elem b = 0; b < order; ++b) {
      ++w.pairs_checked;
      if (phi[g3.group.mul(a, b)] != g2.group.mul(phi[a], phi[b])) {
        w.homomorphism = false;
        w.counterexample = std::make_pair(a, b);
        break;
      }
    }
  return w;
}

}  // namespace cgt

// --- corpus -----------------------------------------------------------------

namespace cgt {

FamilySet parse_families(const std::string& list) {
  static const std::map<std::string, Family> kNames = {
      {"cyclic", Family::Cyclic},         {"abelian", Family::Abelian},       {"dihedral", Family::Dihedral},
      {"sym", Family::Symmetric},         {"symmetric", Family::Symmetric},   {"alt", Family::Alternating},
      {"alternating", Family::Alternating}, {"quaternion", Family::Quaternion}, {"frobenius", Family::Frobenius},
      {"sd", Family::Semidirect},         {"semidirect", Family::Semidirect}, {"dp", Family::DirectProduct},
      {"direct", Family::DirectProduct},
  };
  FamilySet out = 0;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (item == "all") {
      out |= kAllFamilies;
      continue;
    }
    auto it = kNames.find(item);
    if (it == kNames.end()) throw InputError("unknown family '" + item + "'");
    out |= static_cast<unsigned>(it->second);
  }
  if (out == 0) throw InputError("empty family list");
  return out;
}

namespace {

using Matrix = std::vector<std::vector<std::uint64_t>>;

struct MatrixAction {
  std::uint64_t p;
  std::uint64_t m;
  Matrix matrix;
};

// Linear actions on elementary abelian groups, as matrices on column vectors whose
// first coordinate is the most significant digit of the element index.
const std::vector<MatrixAction>& matrix_catalogue() {
  static const std::vector<MatrixAction> kList = {
      {2, 3, {{0, 1}, {1, 1}}},
      {2, 6, {{0, 1}, {1, 1}}},
      {3, 2, {{2, 0}, {0, 1}}},
      {3, 2, {{2, 0}, {0, 2}}},
      {3, 4, {{0, 2}, {1, 0}}},
      {3, 8, {{0, 2}, {1, 0}}},
      {3, 8, {{0, 1}, {1, 1}}},
      {3, 6, {{2, 0}, {0, 1}}},
      {2, 7, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}},
      {2, 3, {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}}},
      {2, 3, {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
      {2, 5, {{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}},
      {5, 3, {{0, 4}, {1, 4}}},
      {5, 4, {{2, 0}, {0, 3}}},
      {5, 4, {{2, 0}, {0, 1}}},
      {7, 3, {{0, 6}, {1, 6}}},
      {7, 3, {{2, 0}, {0, 4}}},
  };
  return kList;
}

std::vector<Elem> matrix_images(const Group& acted, std::uint64_t p, const Matrix& m) {
  const std::size_t d = m.size();
  std::vector<Elem> images;
  for (Elem g : acted.generators()) {
    std::vector<std::uint64_t> x(d);
    std::uint64_t r = g;
    for (std::size_t i = d; i-- > 0;) {
      x[i] = r % p;
      r /= p;
    }
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < d; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < d; ++j) s += m[i][j] * x[j];
      idx = idx * p + s % p;
    }
    images.push_back(static_cast<Elem>(idx));
  }
  return images;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Abelian invariants in elementary-divisor form for every non-cyclic abelian group of
// order n, as lists of prime powers sorted descending by prime then exponent.
void abelian_types(std::uint64_t n, std::vector<std::vector<std::uint64_t>>& out) {
  std::vector<std::vector<std::vector<std::uint64_t>>> per_prime;
  for (std::uint64_t p : prime_divisors(n)) {
    std::size_t e = 0;
    for (std::uint64_t r = n; r % p == 0; r /= p) ++e;
    std::vector<std::vector<std::uint64_t>> parts;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t maxpart) {
      if (left == 0) {
        std::vector<std::uint64_t> f;
        for (auto k : cur) f.push_back(ipow(p, k));
        parts.push_back(f);
        return;
      }
      for (std::size_t k = std::min(left, maxpart); k >= 1; --k) {
        cur.push_back(k);
        rec(left - k, k);
        cur.pop_back();
      }
    };
    rec(e, e);
    per_prime.push_back(parts);
  }
  std::vector<std::uint64_t> acc;
  std::function<void(std::size_t, bool)> combine = [&](std::size_t i, bool noncyclic) {
    if (i == per_prime.size()) {
      if (noncyclic) out.push_back(acc);
      return;
    }
    for (const auto& part : per_prime[i]) {
      acc.insert(acc.end(), part.begin(), part.end());
      combine(i + 1, noncyclic || part.size() > 1);
      acc.resize(acc.size() - part.size());
    }
  };
  combine(0, false);
}

std::string fingerprint(const Group& g) {
  const ClassPartition cp = conjugacy_classes(g);
  std::vector<std::pair<std::uint32_t, std::size_t>> stats;
  for (const auto& c : cp.classes) stats.emplace_back(g.element_order(c.front()), c.size());
  std::sort(stats.begin(), stats.end());
  std::ostringstream out;
  out << g.order();
  for (auto [o, s] : stats) out << ';' << o << ':' << s;
  return out.str();
}

std::size_t table_hash(const Group& g) {
  const auto t = g.table();
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(t.data()), t.size() * sizeof(Elem)));
}

class CorpusBuilder {
 public:
  explicit CorpusBuilder(const CorpusOptions& opts) : opts_(opts) {}

  bool wants(Family f) const { return (opts_.families & static_cast<unsigned>(f)) != 0; }
  std::size_t max() const { return std::min(opts_.max_order, opts_.cap); }

  void add(std::string recipe, std::size_t order, Family family, std::function<Group()> build) {
    if (order > max() || !wants(family)) return;
    pending_.push_back({std::move(recipe), order, family, std::move(build)});
  }

  // Sorts by order (stable) and drops entries whose table already appeared.
  std::vector<CorpusEntry> finish() {
    std::stable_sort(pending_.begin(), pending_.end(),
                     [](const CorpusEntry& a, const CorpusEntry& b) { return a.order < b.order; });
    std::vector<CorpusEntry> out;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> seen;
    for (CorpusEntry& e : pending_) {
      const Group g = e.build();
      auto& bucket = seen[{g.order(), table_hash(g)}];
      bool dup = false;
      for (std::size_t i : bucket)
        if (out[i].build() == g) {
          dup = true;
          break;
        }
      if (dup) continue;
      bucket.push_back(out.size());
      out.push_back(std::move(e));
    }
    pending_.clear();
    return out;
  }

 private:
  CorpusOptions opts_;
  std::vector<CorpusEntry> pending_;
};

}  // namespace

std::vector<CorpusEntry> corpus(const CorpusOptions& opts) {
  CorpusBuilder b(opts);
  const std::size_t max = b.max();

  for (std::uint64_t n = 1; n <= max; ++n)
    b.add("cyclic(" + std::to_string(n) + ")", n, Family::Cyclic, [n] { return cyclic(n); });

  for (std::uint64_t n = 4; n <= max; ++n) {
    std::vector<std::vector<std::uint64_t>> types;
    abelian_types(n, types);
    for (const auto& t : types) {
      std::ostringstream r;
      r << "abelian(" << join_numbers(t) << ")";
      b.add(r.str(), n, Family::Abelian, [t] { return abelian(t); });
    }
  }

  for (std::uint64_t n = 3; 2 * n <= max; ++n)
    b.add("dihedral(" + std::to_string(n) + ")", 2 * n, Family::Dihedral, [n] { return dihedral(n); });

  static constexpr std::size_t kFactorial[] = {1, 1, 2, 6, 24, 120, 720};
  for (std::uint64_t n = 3; n <= 6; ++n) {
    b.add("sym(" + std::to_string(n) + ")", kFactorial[n], Family::Symmetric, [n] { return symmetric(n); });
    b.add("alt(" + std::to_string(n) + ")", kFactorial[n] / 2, Family::Alternating, [n] { return alternating(n); });
  }
  b.add("quaternion8", 8, Family::Quaternion, [] { return quaternion8(); });

  for (std::uint64_t p = 3; p <= max; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t q : prime_divisors(p - 1))
      if (p * q <= max)
        b.add("frobenius(" + std::to_string(p) + "," + std::to_string(q) + ")", p * q, Family::Frobenius,
              [p, q] { return frobenius(p, q); });
  }

  // C_n x| C_m through x -> x^k, one k per cyclic subgroup <k> of the units mod n
  // (its smallest generator), whenever |<k>| divides m.
  for (std::uint64_t n = 3; 2 * n <= max; ++n)
    for (std::uint64_t k = 2; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      const std::uint64_t ok = multiplicative_order(k, n);
      bool minimal = true;
      for (std::uint64_t j = 2; j < ok && minimal; ++j)
        if (std::gcd(j, ok) == 1 && pow_mod(k, j, n) < k) minimal = false;
      if (!minimal) continue;
      for (std::uint64_t m = ok; n * m <= max; m += ok) {
        const std::string recipe =
            "sd(cyclic(" + std::to_string(n) + "),cyclic(" + std::to_string(m) + ")," + std::to_string(k) + ")";
        b.add(recipe, n * m, Family::Semidirect, [n, m, k] {
          return semidirect_product(ActionSpec::from_generator_images(cyclic(n), m, {static_cast<Elem>(k)}));
        });
      }
    }

  for (const MatrixAction& a : matrix_catalogue()) {
    const std::size_t d = a.matrix.size();
    const std::uint64_t order = ipow(a.p, d) * a.m;
    if (order > max || !b.wants(Family::Semidirect)) continue;
    const Group acted = abelian(std::vector<std::uint64_t>(d, a.p));
    const ActionSpec spec = ActionSpec::from_generator_images(acted, a.m, matrix_images(acted, a.p, a.matrix));
    b.add(spec.label, order, Family::Semidirect, [spec] { return semidirect_product(spec); });
  }

  std::vector<CorpusEntry> base = b.finish();
  if (!b.wants(Family::DirectProduct)) return base;

  // One level of direct products: each nonabelian member (one per fingerprint) with
  // cyclic groups and with the other such members.
  std::vector<std::pair<std::string, Group>> atoms;
  std::set<std::string> prints;
  for (const CorpusEntry& e : base) {
    if (2 * e.order > max) continue;
    Group g = e.build();
    if (g.is_abelian() || !prints.insert(fingerprint(g)).second) continue;
    atoms.emplace_back(e.recipe, std::move(g));
  }
  CorpusBuilder dp(opts);
  for (CorpusEntry& e : base) dp.add(e.recipe, e.order, e.family, std::move(e.build));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string& ra = atoms[i].first;
    const std::size_t na = atoms[i].second.order();
    for (std::uint64_t m = 2; na * m <= max; ++m)
      dp.add("dp(" + ra + ",cyclic(" + std::to_string(m) + "))", na * m, Family::DirectProduct,
             [a = atoms[i].second, m] { return direct_product(a, cyclic(m)); });
    for (std::size_t j = i; j < atoms.size(); ++j) {
      const std::size_t nb = atoms[j].second.order();
      if (na * nb > max) continue;
      dp.add("dp(" + ra + "," + atoms[j].first + ")", na * nb, Family::DirectProduct,
             [a = atoms[i].second, c = atoms[j].second] { return direct_product(a, c); });
    }
  }
  return dp.finish();
}

}  // namespace cgt

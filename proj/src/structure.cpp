#include "cgt/structure.hpp"

#include "cgt/kernel.hpp"
#include "cgt/numtheory.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace cgt {

namespace {

bool is_p_element(const Group& g, Elem x, std::uint64_t p) { return is_power_of(g.element_order(x), p); }

std::vector<Elem> with(std::span<const Elem> gens, Elem extra) {
  std::vector<Elem> out(gens.begin(), gens.end());
  out.push_back(extra);
  return out;
}

}  // namespace

Subgroup sylow_subgroup(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
  const std::uint64_t target = p_part(g.order(), p);
  if (target == 1) return Subgroup::trivial(g);

  Elem start = kIdentity;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.element_order(x) == p) {
      start = x;
      break;
    }
  Subgroup s = subgroup_closure(g, std::span<const Elem>(&start, 1));
  while (s.order() < target) {
    const Subgroup n = normalizer(g, s);
    Elem z = kIdentity;
    for (Elem c : n.members())
      if (!s.contains(c) && is_p_element(g, c, p)) {
        z = c;
        break;
      }
    if (z == kIdentity) throw Error("internal: no p-element in N(S) \\ S below the Sylow order");
    s = subgroup_closure(g, with(s.generators(), z));
  }
  return s;
}

Subgroup p_core(const Group& g, std::uint64_t p) {
  const Subgroup syl = sylow_subgroup(g, p);
  if (syl.is_trivial() || syl.is_normal()) return syl;
  const Subgroup n = normalizer(g, syl);
  ElementSet core = syl.mask();
  ElementSet covered(g.order());
  for (Elem r = 0; r < g.order(); ++r) {
    if (covered.test(r)) continue;
    for (Elem m : n.members()) covered.set(g.mul(m, r));  // right coset N r
    ElementSet conj(g.order());
    for (Elem x : syl.members()) conj.set(g.conj(x, r));
    core &= conj;
  }
  return Subgroup(g, core);
}

std::vector<Subgroup> normal_p_subgroups(const Group& g, std::uint64_t p) {
  return normal_subgroups_within(g, p_core(g, p));
}

Subgroup fitting_subgroup(const Group& g) {
  std::vector<Elem> gens;
  for (std::uint64_t p : g.primes()) {
    const Subgroup c = p_core(g, p);
    gens.insert(gens.end(), c.generators().begin(), c.generators().end());
  }
  return subgroup_closure(g, gens);
}

FittingData fitting_data(const Group& g, bool search_complement, const ComplementSearchOptions& opts) {
  std::map<std::uint64_t, Subgroup> cores;
  std::vector<Elem> gens;
  std::size_t product_order = 1;
  for (std::uint64_t p : g.primes()) {
    Subgroup c = p_core(g, p);
    gens.insert(gens.end(), c.generators().begin(), c.generators().end());
    product_order *= c.order();
    cores.emplace(p, std::move(c));
  }
  Subgroup f = subgroup_closure(g, gens);
  if (f.order() != product_order || !f.is_normal())
    throw Error("internal: Fitting subgroup is not the direct product of the p-cores");

  const QuotientMap q = quotient_group(g, f);
  Subgroup f2 = preimage(q, fitting_subgroup(q.quotient));

  std::optional<Subgroup> complement;
  if (search_complement) complement = complement_search(g, f, opts);
  return FittingData{std::move(f), std::move(cores), std::move(f2), std::move(complement)};
}

bool is_nilpotent(const Group& g) {
  for (std::uint64_t p : g.primes())
    if (!sylow_subgroup(g, p).is_normal()) return false;
  return true;
}

bool is_a_group(const Group& g) {
  for (std::uint64_t p : g.primes())
    if (!sylow_subgroup(g, p).is_abelian()) return false;
  return true;
}

std::optional<Subgroup> complement_search(const Group& g, const Subgroup& f, const ComplementSearchOptions& opts) {
  if (!f.is_normal()) throw PreconditionError("complement_search: F is not normal; F = " + f.to_string());
  const std::size_t target = g.order() / f.order();
  if (target == 1) return Subgroup::trivial(g);

  auto meets_trivially = [&](const Subgroup& s) { return (s.mask() & f.mask()).count() == 1; };
  auto is_complement = [&](const Subgroup& s) { return s.order() == target && meets_trivially(s); };

  // Stage 1: closure of the coset representatives.
  {
    const QuotientMap q = quotient_group(g, f);
    Subgroup s = subgroup_closure(g, q.section);
    if (is_complement(s)) return s;
  }

  // Elements x with <x> n F = 1 are the only candidates.
  std::vector<Elem> cand;
  for (Elem x = 1; x < g.order(); ++x)
    if (target % g.element_order(x) == 0 &&
        meets_trivially(subgroup_closure(g, std::span<const Elem>(&x, 1))))
      cand.push_back(x);
  if (cand.empty()) return std::nullopt;

  // Stage 2: seeded random growth.
  {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
    std::size_t draws = 0;
    while (draws < opts.random_attempts) {
      Subgroup s = Subgroup::trivial(g);
      while (draws < opts.random_attempts) {
        const Elem x = cand[pick(rng)];
        ++draws;
        if (s.contains(x)) continue;
        Subgroup next = subgroup_closure(g, with(s.generators(), x));
        if (!meets_trivially(next) || target % next.order() != 0) break;
        s = std::move(next);
        if (s.order() == target) return s;
      }
    }
  }

  // Stage 3: exhaustive over subgroups generated by <= max_generators candidates.
  std::set<std::vector<Elem>> visited;
  std::vector<Subgroup> layer{Subgroup::trivial(g)};
  for (std::size_t depth = 0; depth < opts.max_generators && !layer.empty(); ++depth) {
    std::vector<Subgroup> next_layer;
    for (const Subgroup& s : layer)
      for (Elem x : cand) {
        if (s.contains(x)) continue;
        Subgroup t = subgroup_closure(g, with(s.generators(), x));
        if (!meets_trivially(t) || target % t.order() != 0) continue;
        std::vector<Elem> key(t.members().begin(), t.members().end());
        if (!visited.insert(std::move(key)).second) continue;
        if (t.order() == target) return t;
        next_layer.push_back(std::move(t));
      }
    layer = std::move(next_layer);
  }
  return std::nullopt;
}

bool CoprimeSplit::is_direct_decomposition_of(const Subgroup& p) const {
  return (fixed.mask() & commutator.mask()).count() == 1 && is_subset(fixed, p) && is_subset(commutator, p) &&
         fixed.order() * commutator.order() == p.order();
}

CoprimeSplit coprime_split(const Group& g, const Subgroup& p, std::span<const Elem> acting) {
  ElementSet fixed(g.order());
  ElementSet comms(g.order());
  std::vector<Elem> comm_list;
  for (Elem x : p.members()) {
    bool fixed_by_all = true;
    for (Elem a : acting) {
      const Elem xa = g.conj(x, a);
      if (xa != x) fixed_by_all = false;
      const Elem c = g.mul(g.inv(x), xa);
      if (!comms.test(c)) {
        comms.set(c);
        comm_list.push_back(c);
      }
    }
    if (fixed_by_all) fixed.set(x);
  }
  return {Subgroup(g, fixed), subgroup_closure(g, comm_list)};
}

Subgroup centralizer_mod(const Group& g, const Subgroup& h, Elem x) {
  ElementSet m(g.order());
  for (Elem t = 0; t < g.order(); ++t)
    if (h.contains(g.commutator(x, t))) m.set(t);
  return Subgroup(g, m);
}

L4Decomposition l4_decompose(const Group& g, const Subgroup& h, Elem x) {
  if (!g.valid(x)) throw InputError("l4_decompose: element out of range");
  if (!h.is_normal()) throw PreconditionError("l4_decompose: H is not normal; H = " + h.to_string());
  if (h.contains(x)) throw PreconditionError("l4_decompose: g = " + std::to_string(x) + " lies in H");
  const auto primes = prime_divisors(g.element_order(x));
  if (primes.size() != 1) throw PreconditionError("l4_decompose: g = " + std::to_string(x) + " is not a p-element");
  const std::uint64_t p = primes.front();
  if (!is_power_of(h.order(), p))
    throw PreconditionError("l4_decompose: H is not a " + std::to_string(p) + "-group; H = " + h.to_string());
  const Subgroup syl = sylow_subgroup(g, p);
  if (!syl.is_abelian())
    throw PreconditionError("l4_decompose: Sylow " + std::to_string(p) + "-subgroup " + syl.to_string() +
                            " is not abelian");

  return l4_decompose(g, h, x, centralizer_mod(g, h, x), centralizer(g, x));
}

L4Decomposition l4_decompose(const Group& g, const Subgroup& h, Elem x, const Subgroup& t, const Subgroup& cg) {
  if (cg == t) return {x, kIdentity, t, true};

  const Subgroup k = subgroup_closure(g, with(h.generators(), x));
  for (Elem s : t.generators())
    for (Elem kk : k.generators())
      if (!k.contains(g.conj(kk, s))) throw LemmaViolation("L4: <g>H is not normal in T");
  const CoprimeSplit split = coprime_split(g, k, t.members());
  if (!split.is_direct_decomposition_of(k))
    throw LemmaViolation("L4: K = C_K(T) x [K,T] fails; C_K(T) = " + split.fixed.to_string() +
                         ", [K,T] = " + split.commutator.to_string());

  for (Elem a : split.fixed.members()) {
    const Elem b = g.mul(g.inv(a), x);
    if (!split.commutator.contains(b)) continue;
    std::ostringstream why;
    if (a == kIdentity || b == kIdentity) why << "a factor is trivial; ";
    if (!h.contains(b)) why << "y not in H; ";
    if (!is_subset(t, centralizer(g, a))) why << "x does not centralize T; ";
    if (centralizer(g, a) != t) why << "C_G(x) != T; ";
    if (intersection(centralizer(g, b), t) != cg) why << "C_G(y) n T != C_G(g); ";
    if (!why.str().empty()) {
      std::ostringstream msg;
      msg << "L4 postcondition failed for g=" << x << " (x=" << a << ", y=" << b << "): " << why.str();
      throw LemmaViolation(msg.str());
    }
    return {a, b, t, false};
  }
  throw LemmaViolation("L4: g has no decomposition over C_K(T) x [K,T]");
}

CADecomposition ca_decompose(const Group& g, const Subgroup& f, const Subgroup& t, Elem x) {
  if (!g.valid(x)) throw InputError("ca_decompose: element out of range");
  if (!f.is_normal() || !f.is_abelian())
    throw PreconditionError("ca_decompose: F must be abelian and normal; F = " + f.to_string());
  if ((f.mask() & t.mask()).count() != 1 || f.order() * t.order() != g.order())
    throw PreconditionError("ca_decompose: T = " + t.to_string() + " is not a complement to F");

  Elem y = kIdentity;
  for (Elem c : t.members())
    if (f.contains(g.mul(x, g.inv(c)))) {
      y = c;
      break;
    }
  const Elem w = g.mul(x, g.inv(y));
  const Subgroup fixed = centralizer_in(f, y);
  const Subgroup comm = commutator_subgroup_rel(g, f, y);

  Elem u = kIdentity;
  bool split = false;
  for (Elem c : fixed.members())
    if (comm.contains(g.mul(g.inv(c), w))) {
      u = c;
      split = true;
      break;
    }
  if (!split) throw LemmaViolation("CA(i): w = " + std::to_string(w) + " does not split over C_F(y) x [F,y]");
  const Elem v = g.mul(g.inv(u), w);

  const Elem vy = g.mul(v, y);
  for (Elem k : f.members()) {
    if (g.mul(g.mul(k, y), g.inv(k)) != vy) continue;  // vy = y^(k^-1)
    const Elem gk = g.conj(x, k);
    if (gk != g.mul(u, y) || !g.commute(u, y)) {
      std::ostringstream msg;
      msg << "CA(ii): g=" << x << ", k=" << k << " gives g^k=" << gk << " but xy=" << g.mul(u, y);
      throw LemmaViolation(msg.str());
    }
    return {k, u, y};
  }
  throw LemmaViolation("CA(ii): no k in F with vy = y^(k^-1) for g = " + std::to_string(x));
}

}  // namespace cgt

#include "cgt/kernel.hpp"

#include "cgt/numtheory.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace cgt {

namespace {

void require_valid(const Group& g, Elem x, const char* what) {
  if (!g.valid(x)) {
    std::ostringstream msg;
    msg << what << " index " << x << " is outside [0, " << g.order() << ")";
    throw InputError(msg.str());
  }
}

// Breadth-first closure of `start` under right multiplication by `gens`, in place.
void close_under(const Group& g, ElementSet& set, std::vector<Elem>& list, std::span<const Elem> gens) {
  std::size_t head = 0;
  while (head < list.size()) {
    const Elem r = list[head++];
    for (Elem s : gens) {
      const Elem y = g.mul(r, s);
      if (!set.test(y)) {
        set.set(y);
        list.push_back(y);
      }
    }
  }
}

}  // namespace

ElementArith element_arith(const Group& g, Elem a, Elem b) {
  require_valid(g, a, "element");
  require_valid(g, b, "element");
  return {g.mul(a, b), g.inv(a), g.element_order(a), g.conj(a, b)};
}

Subgroup centralizer(const Group& g, std::span<const Elem> s) {
  if (s.empty()) throw InputError("centralizer of an empty set");
  for (Elem x : s) require_valid(g, x, "centralizer argument");
  ElementSet m(g.order());
  for (Elem c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (Elem x : s)
      if (!g.commute(c, x)) {
        ok = false;
        break;
      }
    if (ok) m.set(c);
  }
  return Subgroup(g, m);
}

Subgroup centralizer(const Group& g, Elem x) { return centralizer(g, std::span<const Elem>(&x, 1)); }

Subgroup centralizer_in(const Subgroup& k, Elem x) {
  const Group& g = k.parent();
  ElementSet m(g.order());
  for (Elem c : k.members())
    if (g.commute(c, x)) m.set(c);
  return Subgroup(g, m);
}

Subgroup centralizer_in(const Subgroup& k, std::span<const Elem> s) {
  const Group& g = k.parent();
  ElementSet m(g.order());
  for (Elem c : k.members()) {
    bool ok = true;
    for (Elem x : s)
      if (!g.commute(c, x)) {
        ok = false;
        break;
      }
    if (ok) m.set(c);
  }
  return Subgroup(g, m);
}

Subgroup center(const Group& g) {
  if (g.generators().empty()) return Subgroup::whole(g);
  return centralizer(g, g.generators());
}

ClassPartition conjugacy_classes(const Group& g) {
  ClassPartition out;
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnset = ~0u;
  out.class_of.assign(n, kUnset);
  for (Elem x = 0; x < n; ++x) {
    if (out.class_of[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    std::vector<Elem> orbit{x};
    out.class_of[x] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (Elem s : g.generators()) {
        const Elem y = g.conj(orbit[head], s);
        if (out.class_of[y] == kUnset) {
          out.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.classes.push_back(std::move(orbit));
  }
  return out;
}

Subgroup subgroup_closure(const Group& g, std::span<const Elem> gens) {
  for (Elem x : gens) require_valid(g, x, "generator");
  ElementSet m(g.order());
  m.set(kIdentity);
  std::vector<Elem> list{kIdentity};
  close_under(g, m, list, gens);
  return Subgroup(g, m);
}

Subgroup normal_closure(const Group& g, std::span<const Elem> gens) {
  for (Elem x : gens) require_valid(g, x, "generator");
  // Close the generator set under conjugation first, then take the subgroup closure.
  ElementSet seen(g.order());
  std::vector<Elem> conjugates;
  for (Elem x : gens)
    if (!seen.test(x)) {
      seen.set(x);
      conjugates.push_back(x);
    }
  for (std::size_t head = 0; head < conjugates.size(); ++head)
    for (Elem s : g.generators()) {
      const Elem y = g.conj(conjugates[head], s);
      if (!seen.test(y)) {
        seen.set(y);
        conjugates.push_back(y);
      }
    }
  return subgroup_closure(g, conjugates);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) { return Subgroup(a.parent(), a.mask() & b.mask()); }

std::size_t product_size(const Subgroup& a, const Subgroup& b) {
  return a.order() * b.order() / (a.mask() & b.mask()).count();
}

Subgroup product(const Subgroup& a, const Subgroup& b) {
  const Group& g = a.parent();
  ElementSet m(g.order());
  for (Elem x : a.members())
    for (Elem y : b.members()) m.set(g.mul(x, y));
  if (m.count() != product_size(a, b)) throw Error("internal: product set has unexpected size");
  try {
    return Subgroup(g, m);
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string("set product is not a subgroup: ") + e.what());
  }
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  ElementSet m(g.order());
  for (Elem c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (Elem x : h.generators())
      if (!h.contains(g.conj(x, c))) {
        ok = false;
        break;
      }
    if (ok) m.set(c);
  }
  return Subgroup(g, m);
}

bool is_subset(const Subgroup& a, const Subgroup& b) { return a.mask().is_subset_of(b.mask()); }

QuotientMap quotient_group(const Group& g, const Subgroup& n) {
  if (!n.is_normal()) {
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem k : n.members()) {
        const Elem c = g.mul(g.mul(x, k), g.inv(x));
        if (!n.contains(c)) {
          std::ostringstream msg;
          msg << "subgroup " << n.to_string() << " is not normal: g=" << x << ", n=" << k
              << ", g*n*g^-1=" << c << " is not in the subgroup";
          throw PreconditionError(msg.str());
        }
      }
  }
  const std::size_t order = g.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> proj(order, kUnset);
  std::vector<Elem> section;
  for (Elem x = 0; x < order; ++x) {
    if (proj[x] != kUnset) continue;
    const auto c = static_cast<Elem>(section.size());
    section.push_back(x);
    for (Elem k : n.members()) proj[g.mul(x, k)] = c;
  }
  const std::size_t q = section.size();
  std::vector<Elem> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = proj[g.mul(section[a], section[b])];
  std::string label = g.label().empty() ? std::string() : g.label() + "/" + n.to_string();
  Group quotient = Group::from_table(q, std::move(table), std::move(label));
  return QuotientMap{g, n, std::move(quotient), std::move(proj), std::move(section)};
}

Subgroup preimage(const QuotientMap& q, const Subgroup& sub) {
  ElementSet m(q.source.order());
  for (Elem x = 0; x < q.source.order(); ++x)
    if (sub.contains(q.project(x))) m.set(x);
  return Subgroup(q.source, m);
}

Subgroup image(const QuotientMap& q, const Subgroup& sub) {
  ElementSet m(q.quotient.order());
  for (Elem x : sub.members()) m.set(q.project(x));
  return Subgroup(q.quotient, m);
}

Subgroup commutator_subgroup(const Group& g) {
  ElementSet seen(g.order());
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = a + 1; b < g.order(); ++b) {
      const Elem c = g.commutator(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  return subgroup_closure(g, comms);
}

DerivedSeries derived_series(const Group& g) {
  DerivedSeries out;
  out.series.push_back(Subgroup::whole(g));
  while (true) {
    const Subgroup& cur = out.series.back();
    ElementSet seen(g.order());
    std::vector<Elem> comms;
    const auto mem = cur.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = i + 1; j < mem.size(); ++j) {
        const Elem c = g.commutator(mem[i], mem[j]);
        if (!seen.test(c)) {
          seen.set(c);
          comms.push_back(c);
        }
      }
    Subgroup next = subgroup_closure(g, comms);
    if (next == cur) break;
    out.series.push_back(std::move(next));
  }
  out.is_solvable = out.series.back().is_trivial();
  return out;
}

bool is_solvable(const Group& g) { return derived_series(g).is_solvable; }

PPDecomposition pp_decomposition(const Group& g, Elem x, std::uint64_t p) {
  require_valid(g, x, "element");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
  const std::uint64_t ord = g.element_order(x);
  const std::uint64_t pk = p_part(ord, p);
  const std::uint64_t m = ord / pk;
  const std::uint64_t a = crt_idempotent(pk, m);  // a = 1 mod p^k, a = 0 mod m
  const std::uint64_t b = crt_idempotent(m, pk);  // b = 0 mod p^k, b = 1 mod m
  return {g.pow(x, static_cast<std::int64_t>(a)), g.pow(x, static_cast<std::int64_t>(b))};
}

Subgroup commutator_subgroup_rel(const Group& g, const Subgroup& h, Elem x) {
  require_valid(g, x, "element");
  if (!h.is_abelian()) throw PreconditionError("[H,g] requires H abelian; H = " + h.to_string());
  for (Elem k : h.generators())
    if (!h.contains(g.conj(k, x))) {
      std::ostringstream msg;
      msg << "element " << x << " does not normalize H: " << k << "^" << x << " = " << g.conj(k, x);
      throw PreconditionError(msg.str());
    }
  ElementSet m(g.order());
  for (Elem k : h.members()) m.set(g.mul(g.inv(k), g.conj(k, x)));
  try {
    return Subgroup(g, m);
  } catch (const PreconditionError& e) {
    throw LemmaViolation(std::string("{h^-1 h^g} is not a subgroup for abelian H: ") + e.what());
  }
}

std::vector<Subgroup> normal_subgroups(const Group& g) { return normal_subgroups_within(g, Subgroup::whole(g)); }

std::vector<Subgroup> normal_subgroups_within(const Group& g, const Subgroup& bound) {
  if (!bound.is_normal()) throw PreconditionError("normal_subgroups_within: bound is not normal");
  // Every normal subgroup is the join of the normal closures of its elements.
  std::vector<Subgroup> blocks;
  {
    const ClassPartition cp = conjugacy_classes(g);
    std::set<std::vector<Elem>> seen;
    for (const auto& cls : cp.classes) {
      if (!bound.contains(cls.front())) continue;
      Subgroup s = normal_closure(g, std::span<const Elem>(&cls.front(), 1));
      std::vector<Elem> key(s.members().begin(), s.members().end());
      if (seen.insert(std::move(key)).second) blocks.push_back(std::move(s));
    }
  }
  std::vector<Subgroup> all;
  std::set<ElementSet> seen;
  std::deque<std::size_t> queue;
  auto add = [&](const ElementSet& m) {
    if (!seen.insert(m).second) return;
    all.emplace_back(g, m);
    queue.push_back(all.size() - 1);
  };
  add(Subgroup::trivial(g).mask());
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const Subgroup& b : blocks) {
      if (b.mask().is_subset_of(all[i].mask())) continue;
      // Both factors are normal, so the set product is already the join.
      ElementSet m = all[i].mask();
      for (Elem x : all[i].members())
        for (Elem y : b.members())
          if (!all[i].contains(y)) m.set(g.mul(x, y));
      add(m);
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

SubgroupGroup subgroup_as_group(const Subgroup& h) {
  const Group& g = h.parent();
  const auto mem = h.members();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < mem.size(); ++i) local[mem[i]] = static_cast<Elem>(i);
  const std::size_t k = mem.size();
  std::vector<Elem> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = local[g.mul(mem[a], mem[b])];
  return {Group::from_table(k, std::move(table)), std::vector<Elem>(mem.begin(), mem.end())};
}

}  // namespace cgt

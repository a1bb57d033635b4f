#include "cgt/index.hpp"

#include "cgt/kernel.hpp"
#include "cgt/numtheory.hpp"
#include "cgt/structure.hpp"

#include <algorithm>

namespace cgt {

std::uint64_t ind(const Group& g, Elem x) {
  if (!g.valid(x)) throw InputError("ind: element out of range");
  std::uint64_t c = 0;
  for (Elem y = 0; y < g.order(); ++y) c += g.commute(x, y);
  return g.order() / c;
}

std::uint64_t ind_in(const Subgroup& k, Elem x) {
  const Group& g = k.parent();
  if (!g.valid(x)) throw InputError("ind_in: element out of range");
  std::uint64_t c = 0;
  for (Elem y : k.members()) c += g.commute(x, y);
  return k.order() / c;
}

bool IndexSet::contains(std::uint64_t v) const { return std::binary_search(sizes.begin(), sizes.end(), v); }

IndexSet index_set_from(std::span<const std::uint64_t> values, std::uint64_t group_order) {
  IndexSet s{{values.begin(), values.end()}, group_order};
  std::sort(s.sizes.begin(), s.sizes.end());
  s.sizes.erase(std::unique(s.sizes.begin(), s.sizes.end()), s.sizes.end());
  return s;
}

IndexSet index_set(const Group& g) {
  const ClassPartition cp = conjugacy_classes(g);
  std::vector<std::uint64_t> sizes;
  for (const auto& c : cp.classes) {
    if (ind(g, c.front()) != c.size())
      throw Error("internal: class of " + std::to_string(c.front()) + " disagrees with |G:C_G(x)|");
    sizes.push_back(c.size());
  }
  return index_set_from(sizes, g.order());
}

Norms norms(const IndexSet& n, std::span<const std::uint64_t> primes) {
  Norms out;
  for (std::uint64_t p : primes) {
    std::uint64_t best = 1;
    for (std::uint64_t v : n.sizes) best = std::max(best, p_part(v, p));
    out.per_prime[p] = best;
    out.total *= best;
  }
  return out;
}

HypothesisCheck hypothesis_check(const Group& g) {
  HypothesisCheck h;
  h.index = index_set(g);
  h.norms = norms(h.index, g.primes());
  h.is_a = is_a_group(g);
  h.contains_all_norms = std::all_of(h.norms.per_prime.begin(), h.norms.per_prime.end(),
                                     [&](const auto& kv) { return h.index.contains(kv.second); });
  h.contains_total = h.index.contains(h.norms.total);
  h.satisfies_theorem_hypothesis = h.is_a && h.contains_all_norms && h.contains_total;
  return h;
}

}  // namespace cgt

#pragma once

#include "cgt/group.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace cgt {

/// Ind(G, x) = |G : C_G(x)|, the size of the conjugacy class of x.
std::uint64_t ind(const Group& g, Elem x);
/// Ind(K, x) = |K : C_K(x)|; x need not lie in K.
std::uint64_t ind_in(const Subgroup& k, Elem x);

/// N(G), the sorted set of conjugacy class sizes.
struct IndexSet {
  std::vector<std::uint64_t> sizes;
  std::uint64_t group_order = 1;

  bool contains(std::uint64_t v) const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

/// Class sizes, cross-checked against |G|/|C_G(x)| for each class representative.
IndexSet index_set(const Group& g);
IndexSet index_set_from(std::span<const std::uint64_t> values, std::uint64_t group_order);

struct Norms {
  std::map<std::uint64_t, std::uint64_t> per_prime;  // p -> |G||_p
  std::uint64_t total = 1;                            // |G||
};

/// |G||_p for every p in `primes` (1 when no member of N is divisible by p) and their product.
Norms norms(const IndexSet& n, std::span<const std::uint64_t> primes);

struct HypothesisCheck {
  IndexSet index;
  Norms norms;
  bool is_a = false;
  bool contains_all_norms = false;
  bool contains_total = false;
  /// is_a, contains_all_norms and contains_total together.
  bool satisfies_theorem_hypothesis = false;
};

HypothesisCheck hypothesis_check(const Group& g);

}  // namespace cgt

#pragma once

#include "cgt/group.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cgt {

struct ElementArith {
  Elem product;
  Elem inverse;
  std::uint32_t order;
  Elem conjugate;  // a^b = b^-1 a b
};

/// Bounds-checked arithmetic on a pair of elements; throws InputError on bad indices.
ElementArith element_arith(const Group& g, Elem a, Elem b);

/// {g : gs = sg for every s in S}. S must be nonempty.
Subgroup centralizer(const Group& g, std::span<const Elem> s);
Subgroup centralizer(const Group& g, Elem x);
/// C_K(x) = K n C_G(x).
Subgroup centralizer_in(const Subgroup& k, Elem x);
/// C_K(S) for a set S (typically a subgroup's members).
Subgroup centralizer_in(const Subgroup& k, std::span<const Elem> s);

Subgroup center(const Group& g);

ClassPartition conjugacy_classes(const Group& g);

/// Smallest subgroup containing gens (breadth-first closure).
Subgroup subgroup_closure(const Group& g, std::span<const Elem> gens);
/// Smallest normal subgroup containing gens.
Subgroup normal_closure(const Group& g, std::span<const Elem> gens);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// The set product AB as a subgroup; throws PreconditionError when AB is not one.
Subgroup product(const Subgroup& a, const Subgroup& b);
/// |AB| = |A||B|/|A n B|, valid whether or not AB is a subgroup.
std::size_t product_size(const Subgroup& a, const Subgroup& b);
Subgroup normalizer(const Group& g, const Subgroup& h);
bool is_subset(const Subgroup& a, const Subgroup& b);

/// G/N. Throws PreconditionError with a witness (g, n) when N is not normal.
QuotientMap quotient_group(const Group& g, const Subgroup& n);
/// Preimage of a subgroup of the quotient.
Subgroup preimage(const QuotientMap& q, const Subgroup& sub);
/// Image of a subgroup of the source.
Subgroup image(const QuotientMap& q, const Subgroup& sub);

/// Closure of all commutators [a,b].
Subgroup commutator_subgroup(const Group& g);

struct DerivedSeries {
  std::vector<Subgroup> series;
  bool is_solvable = false;
};

DerivedSeries derived_series(const Group& g);
bool is_solvable(const Group& g);

struct PPDecomposition {
  Elem p_part;        // u, order = p-part of |g|
  Elem p_prime_part;  // v, order = p'-part of |g|
};

/// g = uv = vu with u a p-element and v a p'-element; throws InputError if p is not prime.
PPDecomposition pp_decomposition(const Group& g, Elem x, std::uint64_t p);

/// [H,g] = {h^-1 h^g : h in H}. Requires H abelian and normalized by g; the set is
/// then a subgroup, which is asserted.
Subgroup commutator_subgroup_rel(const Group& g, const Subgroup& h, Elem x);

/// Every normal subgroup of G, sorted by (order, members).
std::vector<Subgroup> normal_subgroups(const Group& g);
/// Normal subgroups of G contained in the normal subgroup `bound`.
std::vector<Subgroup> normal_subgroups_within(const Group& g, const Subgroup& bound);

/// The subgroup as a standalone group on indices 0..|H|-1 (position in the sorted
/// member list). `embedding[i]` is the parent element of local element i.
struct SubgroupGroup {
  Group group;
  std::vector<Elem> embedding;
};

SubgroupGroup subgroup_as_group(const Subgroup& h);

}  // namespace cgt

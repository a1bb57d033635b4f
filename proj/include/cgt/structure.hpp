#pragma once

#include "cgt/group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace cgt {

/// A Sylow p-subgroup. Grows from <x>, x the smallest element of order p, by adjoining
/// the smallest p-element of the normalizer outside the current subgroup. Returns the
/// trivial subgroup when p does not divide |G|; throws InputError if p is not prime.
Subgroup sylow_subgroup(const Group& g, std::uint64_t p);

/// O_p(G), the intersection of the conjugates of one Sylow p-subgroup.
Subgroup p_core(const Group& g, std::uint64_t p);

/// Normal p-subgroups of G (all of them lie in O_p(G)), sorted.
std::vector<Subgroup> normal_p_subgroups(const Group& g, std::uint64_t p);

struct ComplementSearchOptions {
  std::uint64_t seed = 0;
  std::size_t random_attempts = 10000;
  std::size_t max_generators = 3;
};

struct FittingData {
  Subgroup fitting;
  std::map<std::uint64_t, Subgroup> p_cores;
  Subgroup second_fitting;
  std::optional<Subgroup> complement;
};

Subgroup fitting_subgroup(const Group& g);
FittingData fitting_data(const Group& g, bool search_complement = false, const ComplementSearchOptions& opts = {});

bool is_nilpotent(const Group& g);

/// True iff every Sylow subgroup is abelian (one Sylow per prime suffices).
bool is_a_group(const Group& g);

/// A subgroup T with T n F = 1 and |T||F| = |G|, or nullopt if none was found.
///
/// Tries, in order: the closure of the coset representatives of G/F; seeded random
/// growth (opts.random_attempts element draws); exhaustive search over subgroups
/// generated by at most opts.max_generators elements. The exhaustive stage is
/// complete for that generator bound.
std::optional<Subgroup> complement_search(const Group& g, const Subgroup& f, const ComplementSearchOptions& opts = {});

/// P = C_P(A) x [P,A] data for a set A acting on P by conjugation.
struct CoprimeSplit {
  Subgroup fixed;       // C_P(A)
  Subgroup commutator;  // [P,A]
  /// Trivial intersection and |C_P(A)||[P,A]| = |P|.
  bool is_direct_decomposition_of(const Subgroup& p) const;
};

/// `acting` should list every element of the acting subgroup (not only generators).
CoprimeSplit coprime_split(const Group& g, const Subgroup& p, std::span<const Elem> acting);

struct L4Decomposition {
  Elem x;
  Elem y;
  Subgroup t;         // preimage of C_{G/H}(gH)
  bool trivial_case;  // C_G(g) = T; then x = g, y = 1
};

/// Splits a p-element g outside the normal p-subgroup H as g = xy with 1 != x in C_G(T)
/// and 1 != y in H. Throws PreconditionError when the hypotheses fail and
/// LemmaViolation if a postcondition does not hold.
L4Decomposition l4_decompose(const Group& g, const Subgroup& h, Elem x);
/// As above with the hypotheses on p, H and the Sylow subgroup taken as checked, and
/// T and C_G(g) supplied by the caller.
L4Decomposition l4_decompose(const Group& g, const Subgroup& h, Elem x, const Subgroup& t, const Subgroup& cg);

/// T as the preimage of C_{G/H}(gH) for normal H: {t : [g,t] in H}.
Subgroup centralizer_mod(const Group& g, const Subgroup& h, Elem x);

struct CADecomposition {
  Elem k;
  Elem x;  // in F
  Elem y;  // in T
};

/// For G = F x| T with F abelian: finds k with g^k = xy, x in F, y in T, xy = yx.
CADecomposition ca_decompose(const Group& g, const Subgroup& f, const Subgroup& t, Elem x);

}  // namespace cgt

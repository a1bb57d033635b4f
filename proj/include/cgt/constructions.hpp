#pragma once

#include "cgt/group.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cgt {

// Standard families. Each result is labelled with the recipe that rebuilds it.

Group cyclic(std::uint64_t n);
/// Direct product of cyclic groups of the given orders; element index is the mixed-radix
/// number with the first factor most significant.
Group abelian(const std::vector<std::uint64_t>& orders);
/// Dihedral group of order 2n; elements r^i are 0..n-1 and s r^i are n..2n-1.
Group dihedral(std::uint64_t n);
Group symmetric(std::uint64_t n);
Group alternating(std::uint64_t n);
Group quaternion8();
/// C_p x| C_q acting faithfully (q | p-1), using the smallest k of multiplicative order q.
Group frobenius(std::uint64_t p, std::uint64_t q);

/// Group generated by permutations of {0..degree-1}. Elements are labelled by the
/// lexicographic order of their image lists; a*b applies a first, then b.
Group permutation_group(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& gens,
                        std::string label = {}, std::size_t cap = kDefaultOrderCap);

/// Pairs (a, b) flattened as a * |B| + b.
Group direct_product(const Group& a, const Group& b, std::size_t cap = kDefaultOrderCap);

/// A right action of `acting` on `acted` by automorphisms: v^a = action[v * |acting| + a].
struct ActionSpec {
  Group acting;
  Group acted;
  std::vector<Elem> action;
  std::string label;  // recipe fragment for the resulting product

  Elem apply(Elem v, Elem a) const { return action[static_cast<std::size_t>(v) * acting.order() + a]; }

  /// Throws InputError with a witness when some element does not act as an automorphism
  /// or the map is not a right action.
  void validate() const;
  bool is_faithful() const;

  /// Cyclic acting group C_m (its element 1 generates) sending the generators of
  /// `acted` (Group::generators order) to `images`.
  static ActionSpec from_generator_images(const Group& acted, std::uint64_t m, const std::vector<Elem>& images);
  /// Conjugation action of a subgroup A on a normal subgroup V of the same group, as
  /// the faithful action of A/C_A(V).
  static ActionSpec conjugation(const Subgroup& acting, const Subgroup& acted);
};

/// Pairs (a, b), a in acted, b in acting, flattened as a * |acting| + b, with
/// (a1,b1)(a2,b2) = (a1 * a2^(b1^-1), b1 b2).
Group semidirect_product(const ActionSpec& spec, std::size_t cap = kDefaultOrderCap);

/// Element (h, gH) of H x| G/H.
struct SemidirectPair {
  Elem h;      // element of the parent group, in H
  Elem coset;  // element of G/H
};

/// H x| G/H for abelian normal H, with (h1,g1H)(h2,g2H) = (h1 h2^(g1^-1), g1g2H).
/// Element index is pos(h) * |G/H| + coset, pos(h) the position of h in H's member list.
struct NaturalSemidirect {
  Group group;
  Subgroup h;
  std::vector<Elem> coset_of;  // G -> G/H
  std::vector<Elem> coset_rep; // G/H -> smallest element of the coset
  std::vector<Elem> pos_in_h;  // G -> position in H (only meaningful for members)

  Elem index_of(SemidirectPair p) const {
    return static_cast<Elem>(pos_in_h[p.h] * coset_rep.size() + p.coset);
  }
  SemidirectPair pair_of(Elem e) const {
    const auto q = static_cast<Elem>(coset_rep.size());
    return {h.members()[e / q], static_cast<Elem>(e % q)};
  }
  /// The image of g in G/H as the element (1, gH).
  Elem embed_coset_of(Elem g) const { return index_of({kIdentity, coset_of[g]}); }
};

NaturalSemidirect natural_semidirect(const Group& g, const Subgroup& h);

/// Outcome of checking phi: HN x| G/HN -> N1 x| (H x| G/H)/N1 for abelian normal H, N
/// with H n N = 1.
struct PhiWitness {
  std::size_t domain_order = 0;
  std::size_t pairs_checked = 0;
  bool well_defined = false;
  bool bijective = false;
  bool homomorphism = false;
  // First failing pair (a, b) of domain elements when homomorphism is false.
  std::optional<std::pair<Elem, Elem>> counterexample;
  bool ok() const { return well_defined && bijective && homomorphism; }
};

PhiWitness key_iso_phi(const Group& g, const Subgroup& h, const Subgroup& n);

// --- corpus -----------------------------------------------------------------

enum class Family : unsigned {
  Cyclic = 1u << 0,
  Abelian = 1u << 1,
  Dihedral = 1u << 2,
  Symmetric = 1u << 3,
  Alternating = 1u << 4,
  Quaternion = 1u << 5,
  Frobenius = 1u << 6,
  Semidirect = 1u << 7,
  DirectProduct = 1u << 8,
};

using FamilySet = unsigned;
inline constexpr FamilySet kAllFamilies = (1u << 9) - 1;

/// Parses a comma-separated list such as "cyclic,dihedral,sd". Throws InputError.
FamilySet parse_families(const std::string& list);

struct CorpusEntry {
  std::string recipe;
  std::size_t order;
  Family family;
  std::function<Group()> build;
};

struct CorpusOptions {
  std::size_t max_order = 100;
  FamilySet families = kAllFamilies;
  std::size_t cap = kDefaultOrderCap;
};

/// Deterministic list of corpus members with duplicate tables removed. Entries are
/// built lazily, so the list can be partitioned across workers by index.
std::vector<CorpusEntry> corpus(const CorpusOptions& opts);

}  // namespace cgt

#pragma once

#include "cgt/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cgt {

/// Dense element index into a Cayley table. The identity is always 0.
using Elem = std::uint32_t;

/// Membership mask over the elements of a group.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr Elem kIdentity = 0;

/// Orders above this bound are refused by constructors and loaders unless overridden.
inline constexpr std::size_t kDefaultOrderCap = 2000;

/// A finite group stored as its full Cayley table.
///
/// Instances are immutable handles onto shared data, so copying is cheap and a
/// Group may be read concurrently from several threads. Every table passes the
/// group axioms at construction: closure, a two-sided identity (relabelled to
/// index 0), a unique right inverse per row, and associativity.
///
/// Associativity is established with Light's test over a generating set, which is
/// exhaustive (not sampled) and costs O(n^2 log n). On failure the lexicographically
/// first bad triple is reported for n <= kBruteForceWitnessLimit.
class Group {
 public:
  static constexpr std::size_t kBruteForceWitnessLimit = 512;

  /// The trivial group.
  Group();

  /// Validates and adopts a row-major n*n table. Throws AxiomError naming the first
  /// violated axiom and the offending indices.
  static Group from_table(std::size_t n, std::vector<Elem> table, std::string label = {});

  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept;

  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  std::uint32_t element_order(Elem a) const noexcept { return ord_[a]; }
  /// a^b = b^-1 a b.
  Elem conj(Elem a, Elem b) const noexcept { return mul(mul(inv(b), a), b); }
  /// [a,b] = a^-1 b^-1 a b.
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem pow(Elem a, std::int64_t k) const noexcept;
  bool commute(Elem a, Elem b) const noexcept { return mul(a, b) == mul(b, a); }

  /// Greedy generating set: repeatedly adjoin the smallest element not yet generated.
  std::span<const Elem> generators() const noexcept;
  std::span<const Elem> table() const noexcept { return {table_, n_ * n_}; }
  /// Prime divisors of the order.
  std::span<const std::uint64_t> primes() const noexcept;
  bool is_abelian() const noexcept;

  bool valid(Elem a) const noexcept { return a < n_; }

  /// Same table (labels are ignored).
  friend bool operator==(const Group& a, const Group& b);

  /// Copy of this group with a different label.
  Group relabelled(std::string label) const;

 private:
  struct Data;
  explicit Group(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
  std::size_t n_ = 1;
  const Elem* table_ = nullptr;
  const Elem* inv_ = nullptr;
  const std::uint32_t* ord_ = nullptr;
};

/// A subgroup of a parent group: sorted member list plus a membership mask.
class Subgroup {
 public:
  /// Validates closure; throws PreconditionError if the set is not a subgroup.
  Subgroup(Group parent, const ElementSet& mask);
  Subgroup(Group parent, std::span<const Elem> members);

  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);

  const Group& parent() const noexcept { return parent_; }
  std::span<const Elem> members() const noexcept { return members_; }
  const ElementSet& mask() const noexcept { return mask_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem x) const noexcept { return x < mask_.size() && mask_.test(x); }
  /// Greedy generating set drawn from the members.
  std::span<const Elem> generators() const noexcept { return gens_; }

  bool is_normal() const noexcept { return normal_; }
  bool is_abelian() const noexcept { return abelian_; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }

  bool operator==(const Subgroup& other) const { return mask_ == other.mask_; }
  bool operator<(const Subgroup& other) const;

  /// Compact text form "{0,3,5}" used in reports.
  std::string to_string() const;

 private:
  Group parent_;
  std::vector<Elem> members_;
  ElementSet mask_;
  std::vector<Elem> gens_;
  bool normal_ = false;
  bool abelian_ = false;
};

/// Partition of a group into conjugacy classes. Classes appear in order of their
/// smallest element and each class is sorted.
struct ClassPartition {
  std::vector<std::vector<Elem>> classes;
  std::vector<std::uint32_t> class_of;
};

/// The canonical projection G -> G/N. Cosets are numbered in order of their smallest
/// element, which is also the chosen representative, so the identity coset is 0.
struct QuotientMap {
  Group source;
  Subgroup kernel;
  Group quotient;
  std::vector<Elem> projection;
  std::vector<Elem> section;

  Elem project(Elem g) const { return projection[g]; }
  Elem lift(Elem q) const { return section[q]; }
};

}  // namespace cgt

#include "cgt/constructions.hpp"
#include "cgt/kernel.hpp"
#include "cgt/numtheory.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace cgt;

namespace {

std::vector<Elem> members(const Subgroup& s) { return {s.members().begin(), s.members().end()}; }

std::vector<Elem> elements_of_order(const Group& g, std::uint32_t k) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) out.push_back(x);
  return out;
}

std::vector<Group> small_corpus(std::size_t max_order) {
  std::vector<Group> out;
  for (const CorpusEntry& e : corpus({.max_order = max_order})) out.push_back(e.build());
  return out;
}

// sym(3) labels permutations by lexicographic image list:
// 0 = id, 1 = (2 3), 2 = (1 2), 3 = (1 2 3), 4 = (1 3 2), 5 = (1 3)
constexpr Elem kS3_23 = 1, kS3_12 = 2, kS3_123 = 3;

}  // namespace

TEST(ElementArith, CyclicOrders) {
  const Group c6 = cyclic(6);
  EXPECT_EQ(element_arith(c6, 2, 0).order, 3u);
  EXPECT_EQ(element_arith(c6, 1, 0).order, 6u);
  EXPECT_EQ(element_arith(c6, 1, 5).product, 0u);
  EXPECT_EQ(element_arith(c6, 4, 0).inverse, 2u);
}

TEST(ElementArith, IdentityAndSelfConjugation) {
  for (const Group& g : {cyclic(5), symmetric(3), alternating(4), quaternion8()}) {
    EXPECT_EQ(element_arith(g, kIdentity, kIdentity).order, 1u);
    for (Elem x = 0; x < g.order(); ++x) EXPECT_EQ(element_arith(g, x, x).conjugate, x);
  }
}

TEST(ElementArith, SymmetricThree) {
  const Group s3 = symmetric(3);
  EXPECT_EQ(element_arith(s3, kS3_12, 0).order, 2u);
  EXPECT_EQ(element_arith(s3, kS3_12, kS3_123).conjugate, kS3_23);
}

TEST(ElementArith, OutOfRange) {
  const Group s3 = symmetric(3);
  EXPECT_THROW(element_arith(s3, 6, 0), InputError);
  EXPECT_THROW(element_arith(s3, 0, 17), InputError);
}

TEST(ElementArith, MatchesBruteForce) {
  for (const Group& g : small_corpus(24)) {
    const auto t = oracle::Table::of(g);
    for (Elem a = 0; a < g.order(); ++a) {
      const ElementArith r = element_arith(g, a, (a * 7 + 1) % g.order());
      EXPECT_EQ(r.order, oracle::order_of(t, a)) << g.label();
      EXPECT_EQ(r.inverse, oracle::inverse(t, a)) << g.label();
    }
  }
}

TEST(Centralizer, Identity) {
  const Group a4 = alternating(4);
  EXPECT_TRUE(centralizer(a4, kIdentity).is_whole());
}

TEST(Centralizer, AbelianIsWhole) {
  const Group g = abelian({2, 6});
  for (Elem x = 0; x < g.order(); ++x) EXPECT_TRUE(centralizer(g, x).is_whole());
}

TEST(Centralizer, ThreeCycleInS3) {
  const Group s3 = symmetric(3);
  EXPECT_EQ(centralizer(s3, kS3_123).order(), 3u);
  const std::vector<Elem> both{kS3_123, kS3_12};
  EXPECT_TRUE(centralizer(s3, both).is_trivial());
}

TEST(Centralizer, MatchesBruteForce) {
  for (const Group& g : small_corpus(40)) {
    const auto t = oracle::Table::of(g);
    for (Elem x = 0; x < g.order(); ++x) EXPECT_EQ(members(centralizer(g, x)), oracle::centralizer(t, {x})) << g.label();
  }
}

TEST(Center, Examples) {
  EXPECT_TRUE(center(abelian({3, 3})).is_whole());
  EXPECT_TRUE(center(symmetric(3)).is_trivial());
  const Subgroup z = center(dihedral(6));
  EXPECT_EQ(z.order(), 2u);
  EXPECT_TRUE(z.is_normal());
  EXPECT_TRUE(z.is_abelian());
}

TEST(Center, MatchesBruteForce) {
  for (const Group& g : small_corpus(60)) EXPECT_EQ(members(center(g)), oracle::center(oracle::Table::of(g))) << g.label();
}

TEST(ConjugacyClasses, Examples) {
  const ClassPartition ab = conjugacy_classes(abelian({2, 4}));
  EXPECT_EQ(ab.classes.size(), 8u);

  auto sizes = [](const Group& g) {
    std::multiset<std::size_t> out;
    for (const auto& c : conjugacy_classes(g).classes) out.insert(c.size());
    return out;
  };
  EXPECT_EQ(sizes(symmetric(3)), (std::multiset<std::size_t>{1, 2, 3}));
  EXPECT_EQ(sizes(alternating(4)), (std::multiset<std::size_t>{1, 3, 4, 4}));
}

TEST(ConjugacyClasses, ConsistentWithOrbits) {
  for (const Group& g : small_corpus(48)) {
    const auto t = oracle::Table::of(g);
    const ClassPartition cp = conjugacy_classes(g);
    std::size_t total = 0;
    Elem prev_min = 0;
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
      const auto& cls = cp.classes[i];
      total += cls.size();
      EXPECT_TRUE(std::is_sorted(cls.begin(), cls.end()));
      if (i) EXPECT_GT(cls.front(), prev_min);
      prev_min = cls.front();
      EXPECT_EQ(cls, oracle::orbit(t, cls.front())) << g.label();
      for (Elem x : cls) EXPECT_EQ(cp.class_of[x], i);
      EXPECT_EQ(cls.size() * centralizer(g, cls.front()).order(), g.order());
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(SubgroupClosure, Examples) {
  const Group a4 = alternating(4);
  EXPECT_TRUE(subgroup_closure(a4, {}).is_trivial());
  for (Elem x = 0; x < a4.order(); ++x) EXPECT_EQ(subgroup_closure(a4, std::vector<Elem>{x}).order(), a4.element_order(x));

  const auto invols = elements_of_order(a4, 2);
  ASSERT_EQ(invols.size(), 3u);
  const Subgroup v4 = subgroup_closure(a4, std::vector<Elem>{invols[0], invols[1]});
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_TRUE(v4.is_normal());
}

TEST(SubgroupClosure, MatchesBruteForce) {
  for (const Group& g : small_corpus(36)) {
    const auto t = oracle::Table::of(g);
    for (Elem a = 0; a < g.order(); a += 3)
      for (Elem b = 1; b < g.order(); b += 5) {
        const std::vector<Elem> gens{a, b};
        EXPECT_EQ(members(subgroup_closure(g, gens)), oracle::closure(t, gens));
        const Subgroup n = normal_closure(g, gens);
        EXPECT_TRUE(oracle::is_normal(t, members(n)));
        std::vector<Elem> conj = oracle::orbit(t, a);
        for (Elem y : oracle::orbit(t, b)) conj.push_back(y);
        EXPECT_EQ(members(n), oracle::closure(t, conj));
      }
  }
}

TEST(SubgroupOps, IntersectionProductNormalizer) {
  for (const Group& g : small_corpus(32)) {
    const auto t = oracle::Table::of(g);
    const auto normals = normal_subgroups(g);
    for (Elem x = 1; x < g.order(); x += 2) {
      const Subgroup c = subgroup_closure(g, std::vector<Elem>{x});
      std::vector<Elem> nm;
      for (Elem y = 0; y < g.order(); ++y) {
        std::set<Elem> img;
        for (Elem z : c.members()) img.insert(t.mul(t.mul(oracle::inverse(t, y), z), y));
        if (std::equal(img.begin(), img.end(), c.members().begin(), c.members().end())) nm.push_back(y);
      }
      EXPECT_EQ(members(normalizer(g, c)), nm) << g.label();

      for (const Subgroup& k : normals) {
        std::vector<Elem> both;
        for (Elem y : c.members())
          if (k.contains(y)) both.push_back(y);
        EXPECT_EQ(members(intersection(c, k)), both);
        std::set<Elem> prod;
        for (Elem a : c.members())
          for (Elem b : k.members()) prod.insert(t.mul(a, b));
        EXPECT_EQ(product_size(c, k), prod.size());
        EXPECT_EQ(product(c, k).order(), prod.size());
        EXPECT_EQ(is_subset(c, k), both.size() == c.order());
      }
    }
  }
}

TEST(SubgroupOps, ProductOfNonPermutingSubgroupsIsRefused) {
  const Group s3 = symmetric(3);
  const Subgroup a = subgroup_closure(s3, std::vector<Elem>{kS3_12});
  const Subgroup b = subgroup_closure(s3, std::vector<Elem>{kS3_23});
  EXPECT_EQ(product_size(a, b), 4u);
  EXPECT_THROW(product(a, b), PreconditionError);
}

TEST(Subgroup, RejectsNonSubgroup) {
  const Group s3 = symmetric(3);
  EXPECT_THROW(Subgroup(s3, std::vector<Elem>{0, kS3_12, kS3_23}), PreconditionError);
}

TEST(Quotient, Trivial) {
  const Group a4 = alternating(4);
  EXPECT_EQ(quotient_group(a4, Subgroup::whole(a4)).quotient.order(), 1u);
  const QuotientMap q = quotient_group(a4, Subgroup::trivial(a4));
  EXPECT_EQ(q.quotient.order(), 12u);
  EXPECT_EQ(q.quotient, a4);
}

TEST(Quotient, Examples) {
  const Group s3 = symmetric(3);
  const Subgroup a3 = subgroup_closure(s3, std::vector<Elem>{kS3_123});
  const QuotientMap q1 = quotient_group(s3, a3);
  EXPECT_TRUE(oracle::isomorphism(oracle::Table::of(q1.quotient), oracle::Table::of(cyclic(2))));

  const Group a4 = alternating(4);
  const Subgroup v4 = subgroup_closure(a4, elements_of_order(a4, 2));
  const QuotientMap q2 = quotient_group(a4, v4);
  EXPECT_TRUE(oracle::isomorphism(oracle::Table::of(q2.quotient), oracle::Table::of(cyclic(3))));
}

TEST(Quotient, NonNormalNamesWitness) {
  const Group s3 = symmetric(3);
  const Subgroup c2 = subgroup_closure(s3, std::vector<Elem>{kS3_12});
  try {
    quotient_group(s3, c2);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("g="), std::string::npos) << e.what();
  }
}

TEST(Quotient, ProjectionIsHomomorphismWithKernel) {
  for (const Group& g : small_corpus(40)) {
    for (const Subgroup& k : normal_subgroups(g)) {
      const QuotientMap q = quotient_group(g, k);
      EXPECT_EQ(q.quotient.order() * k.order(), g.order());
      EXPECT_TRUE(oracle::axiom_failure(oracle::Table::of(q.quotient)).empty());
      for (Elem a = 0; a < g.order(); ++a) {
        EXPECT_EQ(q.project(a) == 0, k.contains(a));
        for (Elem b = 0; b < g.order(); b += 3) EXPECT_EQ(q.project(g.mul(a, b)), q.quotient.mul(q.project(a), q.project(b)));
      }
      for (Elem c = 0; c < q.quotient.order(); ++c) {
        EXPECT_EQ(q.project(q.lift(c)), c);
        for (Elem a = 0; a < q.lift(c); ++a) EXPECT_NE(q.project(a), c) << "section is not minimal";
      }
      const Subgroup whole_img = image(q, Subgroup::whole(g));
      EXPECT_TRUE(whole_img.is_whole());
      EXPECT_EQ(preimage(q, Subgroup::trivial(q.quotient)), k);
    }
  }
}

TEST(DerivedSeries, Examples) {
  const DerivedSeries ab = derived_series(abelian({2, 2}));
  ASSERT_EQ(ab.series.size(), 2u);
  EXPECT_TRUE(ab.series[1].is_trivial());
  EXPECT_TRUE(ab.is_solvable);

  const DerivedSeries s3 = derived_series(symmetric(3));
  ASSERT_EQ(s3.series.size(), 3u);
  EXPECT_EQ(s3.series[1].order(), 3u);
  EXPECT_TRUE(s3.series[2].is_trivial());
  EXPECT_TRUE(s3.is_solvable);

  const DerivedSeries a5 = derived_series(alternating(5));
  EXPECT_TRUE(a5.series.back().is_whole());
  EXPECT_FALSE(a5.is_solvable);
  EXPECT_FALSE(is_solvable(symmetric(5)));
  EXPECT_TRUE(is_solvable(symmetric(4)));
}

TEST(DerivedSeries, CommutatorSubgroupMatchesBruteForce) {
  for (const Group& g : small_corpus(48))
    EXPECT_EQ(members(commutator_subgroup(g)), oracle::derived_subgroup(oracle::Table::of(g))) << g.label();
}

TEST(PPDecomposition, Examples) {
  const Group c6 = cyclic(6);
  const PPDecomposition d = pp_decomposition(c6, 1, 2);
  EXPECT_EQ(d.p_part, 3u);
  EXPECT_EQ(d.p_prime_part, 4u);

  const Group s3 = symmetric(3);
  EXPECT_EQ(pp_decomposition(s3, kS3_12, 2).p_part, kS3_12);
  EXPECT_EQ(pp_decomposition(s3, kS3_12, 2).p_prime_part, kIdentity);
  EXPECT_EQ(pp_decomposition(s3, kS3_123, 2).p_part, kIdentity);
  EXPECT_EQ(pp_decomposition(s3, kS3_123, 2).p_prime_part, kS3_123);

  EXPECT_THROW(pp_decomposition(c6, 1, 4), InputError);
}

TEST(PPDecomposition, Properties) {
  for (const Group& g : small_corpus(60))
    for (std::uint64_t p : g.primes())
      for (Elem x = 0; x < g.order(); ++x) {
        const PPDecomposition d = pp_decomposition(g, x, p);
        const std::uint64_t o = g.element_order(x);
        EXPECT_EQ(g.mul(d.p_part, d.p_prime_part), x);
        EXPECT_TRUE(g.commute(d.p_part, d.p_prime_part));
        EXPECT_EQ(g.element_order(d.p_part), oracle::p_part(o, p));
        EXPECT_EQ(g.element_order(d.p_prime_part), o / oracle::p_part(o, p));
      }
}

TEST(CommutatorRel, Examples) {
  const Group a4 = alternating(4);
  const Subgroup v4 = subgroup_closure(a4, elements_of_order(a4, 2));
  const Elem three = elements_of_order(a4, 3).front();
  EXPECT_EQ(commutator_subgroup_rel(a4, v4, three), v4);
  EXPECT_TRUE(commutator_subgroup_rel(a4, v4, v4.members()[1]).is_trivial());

  const Group s3 = symmetric(3);
  const Subgroup c3 = subgroup_closure(s3, std::vector<Elem>{kS3_123});
  EXPECT_EQ(commutator_subgroup_rel(s3, c3, kS3_12), c3);
}

TEST(CommutatorRel, Preconditions) {
  const Group s3 = symmetric(3);
  EXPECT_THROW(commutator_subgroup_rel(s3, Subgroup::whole(s3), kS3_12), PreconditionError);
  const Group s4 = symmetric(4);
  const Subgroup c2 = subgroup_closure(s4, std::vector<Elem>{1});
  const Elem three = elements_of_order(s4, 3).front();
  if (!s4.commute(1, three)) EXPECT_THROW(commutator_subgroup_rel(s4, c2, three), PreconditionError);
}

TEST(NormalSubgroups, MatchBruteForceLattice) {
  for (const Group& g : small_corpus(32)) {
    const auto t = oracle::Table::of(g);
    std::set<std::vector<Elem>> lattice;
    for (Elem x = 0; x < g.order(); ++x) lattice.insert(oracle::closure(t, oracle::orbit(t, x)));
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<std::vector<Elem>> cur(lattice.begin(), lattice.end());
      for (const auto& a : cur)
        for (const auto& b : cur) {
          std::vector<Elem> u = a;
          u.insert(u.end(), b.begin(), b.end());
          grew |= lattice.insert(oracle::closure(t, u)).second;
        }
    }
    std::set<std::vector<Elem>> ours;
    for (const Subgroup& n : normal_subgroups(g)) {
      EXPECT_TRUE(n.is_normal());
      ours.insert(members(n));
    }
    EXPECT_EQ(ours, lattice) << g.label();
  }
}

TEST(NormalSubgroups, WithinBound) {
  const Group s4 = symmetric(4);
  const auto all = normal_subgroups(s4);
  ASSERT_EQ(all.size(), 4u);
  const Subgroup a4 = all[2];
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_EQ(normal_subgroups_within(s4, a4).size(), 3u);
}

TEST(SubgroupAsGroup, Embedding) {
  const Group s4 = symmetric(4);
  const Subgroup a4 = normal_subgroups(s4)[2];
  const SubgroupGroup sg = subgroup_as_group(a4);
  ASSERT_EQ(sg.group.order(), 12u);
  for (Elem a = 0; a < 12; ++a)
    for (Elem b = 0; b < 12; ++b) EXPECT_EQ(sg.embedding[sg.group.mul(a, b)], s4.mul(sg.embedding[a], sg.embedding[b]));
  EXPECT_TRUE(oracle::axiom_failure(oracle::Table::of(sg.group)).empty());
}

TEST(Axioms, FirstViolationIsNamed) {
  auto axiom_of = [](std::size_t n, std::vector<Elem> t) {
    try {
      Group::from_table(n, std::move(t));
    } catch (const AxiomError& e) {
      return e.axiom();
    }
    return std::string("none");
  };
  EXPECT_EQ(axiom_of(2, {0, 1, 1}), "shape");
  EXPECT_EQ(axiom_of(2, {0, 1, 1, 5}), "closure");
  EXPECT_EQ(axiom_of(2, {0, 0, 0, 0}), "identity");
  EXPECT_EQ(axiom_of(2, {0, 1, 1, 1}), "inverses");
  EXPECT_EQ(axiom_of(2, {0, 1, 1, 0}), "none");
}

TEST(Axioms, NonAssociativeLoopCitesFirstTriple) {
  // A Latin square with identity 0 that is not a group.
  const std::vector<Elem> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const auto expect = oracle::first_nonassociative({5, loop});
  ASSERT_TRUE(expect);
  try {
    Group::from_table(5, loop);
    FAIL() << "expected AxiomError";
  } catch (const AxiomError& e) {
    EXPECT_EQ(e.axiom(), "associativity");
    EXPECT_EQ(e.indices(), (std::vector<std::uint64_t>{expect->a, expect->b, expect->c}));
  }
}

TEST(Axioms, IdentityIsMovedToZero) {
  // C3 with its identity stored at index 2.
  const std::vector<Elem> t{1, 2, 0, 2, 0, 1, 0, 1, 2};
  const Group g = Group::from_table(3, t);
  EXPECT_TRUE(oracle::axiom_failure(oracle::Table::of(g)).empty());
  EXPECT_TRUE(oracle::isomorphism(oracle::Table::of(g), oracle::Table::of(cyclic(3))));
}

TEST(Axioms, CorpusTablesPassBruteForce) {
  for (const Group& g : small_corpus(64)) EXPECT_EQ(oracle::axiom_failure(oracle::Table::of(g)), "") << g.label();
}

TEST(BasicInvariants, IndicesDivide) {
  for (const Group& g : small_corpus(36)) {
    for (const Subgroup& k : normal_subgroups(g)) {
      const QuotientMap q = quotient_group(g, k);
      for (Elem x = 0; x < g.order(); ++x) {
        const std::size_t ig = g.order() / centralizer(g, x).order();
        const std::size_t ik = k.order() / centralizer_in(k, x).order();
        const std::size_t iq = q.quotient.order() / centralizer(q.quotient, q.project(x)).order();
        EXPECT_EQ(ig % ik, 0u);
        EXPECT_EQ(ig % iq, 0u);
        const Subgroup img = image(q, centralizer(g, x));
        const Subgroup cq = centralizer(q.quotient, q.project(x));
        EXPECT_TRUE(is_subset(img, cq));
        if (std::gcd<std::size_t, std::size_t>(g.element_order(x), k.order()) == 1) EXPECT_EQ(img, cq) << g.label();
      }
    }
  }
}

#include "cgt/constructions.hpp"
#include "cgt/io.hpp"
#include "cgt/kernel.hpp"
#include "cgt/structure.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cgt;

namespace {

std::vector<Elem> members(const Subgroup& s) { return {s.members().begin(), s.members().end()}; }

std::vector<Group> small_corpus(std::size_t max_order) {
  std::vector<Group> out;
  for (const CorpusEntry& e : corpus({.max_order = max_order})) out.push_back(e.build());
  return out;
}

std::vector<Elem> elements_of_order(const Group& g, std::uint32_t k) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) out.push_back(x);
  return out;
}

bool sylows_abelian(const Group& g) {
  for (std::uint64_t p : g.primes()) {
    const SubgroupGroup s = subgroup_as_group(sylow_subgroup(g, p));
    if (!oracle::is_abelian(oracle::Table::of(s.group))) return false;
  }
  return true;
}

// S3 x C3 realised as (C3 x C3) x| C2 with the involution inverting one factor.
Group s3_times_c3() { return build_recipe("sd(abelian(3,3),cyclic(2),2,3)"); }

}  // namespace

TEST(Sylow, Examples) {
  EXPECT_TRUE(sylow_subgroup(abelian({2, 4}), 2).is_whole());
  EXPECT_TRUE(sylow_subgroup(quaternion8(), 2).is_whole());

  const Group s3 = symmetric(3);
  EXPECT_EQ(sylow_subgroup(s3, 2).order(), 2u);
  EXPECT_EQ(sylow_subgroup(s3, 3).order(), 3u);
  EXPECT_TRUE(sylow_subgroup(s3, 5).is_trivial());

  const Group a4 = alternating(4);
  const Subgroup v4 = sylow_subgroup(a4, 2);
  EXPECT_EQ(members(v4), oracle::closure(oracle::Table::of(a4), elements_of_order(a4, 2)));
  EXPECT_TRUE(v4.is_normal());
  EXPECT_TRUE(v4.is_abelian());

  EXPECT_THROW(sylow_subgroup(s3, 4), InputError);
}

TEST(Sylow, OrderIsFullPPart) {
  for (const Group& g : small_corpus(100))
    for (std::uint64_t p : g.primes()) {
      const Subgroup s = sylow_subgroup(g, p);
      EXPECT_EQ(s.order(), oracle::p_part(g.order(), p)) << g.label() << " p=" << p;
      EXPECT_TRUE(oracle::is_subgroup(oracle::Table::of(g), members(s)));
    }
}

TEST(PCore, Examples) {
  const Group ab = abelian({2, 6});
  EXPECT_EQ(p_core(ab, 2), sylow_subgroup(ab, 2));
  const Group a4 = alternating(4);
  EXPECT_EQ(p_core(a4, 2).order(), 4u);
  EXPECT_TRUE(p_core(a4, 3).is_trivial());
  EXPECT_EQ(p_core(symmetric(3), 3).order(), 3u);
  EXPECT_TRUE(p_core(symmetric(3), 2).is_trivial());
}

TEST(PCore, MatchesBruteForce) {
  for (const Group& g : small_corpus(60)) {
    const auto t = oracle::Table::of(g);
    for (std::uint64_t p : g.primes()) {
      EXPECT_EQ(members(p_core(g, p)), oracle::largest_normal_p_subgroup(t, p)) << g.label() << " p=" << p;
      for (const Subgroup& n : normal_p_subgroups(g, p)) {
        EXPECT_TRUE(oracle::is_normal(t, members(n)));
        EXPECT_TRUE(oracle::power_of(n.order(), p));
        EXPECT_TRUE(is_subset(n, p_core(g, p)));
      }
    }
  }
}

TEST(Fitting, Examples) {
  for (const Group& g : {abelian({2, 6}), quaternion8(), dihedral(4), cyclic(1)}) {
    const FittingData fd = fitting_data(g);
    EXPECT_TRUE(fd.fitting.is_whole()) << g.label();
    EXPECT_TRUE(fd.second_fitting.is_whole()) << g.label();
    EXPECT_TRUE(is_nilpotent(g));
  }
  const FittingData s3 = fitting_data(symmetric(3));
  EXPECT_EQ(s3.fitting.order(), 3u);
  EXPECT_TRUE(s3.second_fitting.is_whole());

  const Group s4 = symmetric(4);
  const FittingData fd = fitting_data(s4);
  EXPECT_EQ(fd.fitting.order(), 4u);
  EXPECT_EQ(fd.second_fitting.order(), 12u);
  EXPECT_EQ(members(fd.second_fitting), oracle::derived_subgroup(oracle::Table::of(s4)));
  EXPECT_FALSE(is_nilpotent(s4));
}

TEST(Fitting, Invariants) {
  for (const Group& g : small_corpus(72)) {
    const auto t = oracle::Table::of(g);
    const FittingData fd = fitting_data(g, true);
    std::size_t prod = 1;
    for (const auto& [p, core] : fd.p_cores) {
      prod *= core.order();
      EXPECT_TRUE(is_subset(core, fd.fitting));
    }
    EXPECT_EQ(prod, fd.fitting.order()) << g.label();
    EXPECT_TRUE(oracle::is_normal(t, members(fd.fitting)));
    EXPECT_TRUE(is_nilpotent(subgroup_as_group(fd.fitting).group));
    EXPECT_TRUE(is_subset(fd.fitting, fd.second_fitting));
    if (is_solvable(g)) {
      EXPECT_TRUE(is_subset(centralizer(g, fd.fitting.members()), fd.fitting)) << g.label();
    }
    if (fd.complement) {
      EXPECT_TRUE(intersection(*fd.complement, fd.fitting).is_trivial());
      EXPECT_EQ(fd.complement->order() * fd.fitting.order(), g.order());
    }
  }
}

TEST(AGroup, Examples) {
  EXPECT_TRUE(is_a_group(abelian({4, 2})));
  EXPECT_TRUE(is_a_group(symmetric(3)));
  EXPECT_TRUE(is_a_group(alternating(4)));
  EXPECT_TRUE(is_a_group(frobenius(7, 3)));
  EXPECT_FALSE(is_a_group(symmetric(4)));
  EXPECT_FALSE(is_a_group(dihedral(4)));
  EXPECT_FALSE(is_a_group(quaternion8()));
  EXPECT_TRUE(is_a_group(alternating(5)));
}

TEST(AGroup, AgreesWithSylowAbelianness) {
  for (const Group& g : small_corpus(100)) EXPECT_EQ(is_a_group(g), sylows_abelian(g)) << g.label();
}

TEST(Complement, Examples) {
  const Group c6 = cyclic(6);
  const auto whole = complement_search(c6, Subgroup::whole(c6));
  ASSERT_TRUE(whole);
  EXPECT_TRUE(whole->is_trivial());

  const Group s3 = symmetric(3);
  const auto t3 = complement_search(s3, fitting_subgroup(s3));
  ASSERT_TRUE(t3);
  EXPECT_EQ(t3->order(), 2u);

  const Group a4 = alternating(4);
  const auto t4 = complement_search(a4, fitting_subgroup(a4));
  ASSERT_TRUE(t4);
  EXPECT_EQ(t4->order(), 3u);
}

TEST(Complement, AbsentWhenNoneExists) {
  const Group q8 = quaternion8();
  EXPECT_FALSE(complement_search(q8, center(q8)));
  const Group c4 = cyclic(4);
  EXPECT_FALSE(complement_search(c4, subgroup_closure(c4, std::vector<Elem>{2})));
}

TEST(Complement, DeterministicForSeed) {
  const Group g = build_recipe("dp(alt(4),cyclic(3))");
  const Subgroup f = fitting_subgroup(g);
  const auto a = complement_search(g, f, {.seed = 3});
  const auto b = complement_search(g, f, {.seed = 3});
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
}

TEST(CoprimeSplit, FourGroupUnderThreeCycle) {
  const Group a4 = alternating(4);
  const Subgroup v4 = p_core(a4, 2);
  const Subgroup c3 = subgroup_closure(a4, std::vector<Elem>{elements_of_order(a4, 3).front()});
  const CoprimeSplit s = coprime_split(a4, v4, c3.members());
  EXPECT_TRUE(s.fixed.is_trivial());
  EXPECT_EQ(s.commutator, v4);
  EXPECT_TRUE(s.is_direct_decomposition_of(v4));

  const CoprimeSplit triv = coprime_split(a4, v4, std::vector<Elem>{kIdentity});
  EXPECT_EQ(triv.fixed, v4);
  EXPECT_TRUE(triv.commutator.is_trivial());
}

TEST(L4, TrivialCaseInAbelianGroup) {
  const Group g = abelian({3, 3});
  const Subgroup h = subgroup_closure(g, std::vector<Elem>{1});
  const L4Decomposition d = l4_decompose(g, h, 3);
  EXPECT_TRUE(d.trivial_case);
  EXPECT_EQ(d.x, 3u);
  EXPECT_EQ(d.y, kIdentity);
  EXPECT_TRUE(d.t.is_whole());
}

TEST(L4, StrictInclusionInS3xC3) {
  const Group g = s3_times_c3();
  ASSERT_EQ(oracle::class_sizes(oracle::Table::of(g)), (std::vector<std::uint64_t>{1, 2, 3}));
  std::size_t nontrivial = 0;
  for (const Subgroup& h : normal_p_subgroups(g, 3)) {
    if (h.order() != 3) continue;
    for (Elem x = 0; x < g.order(); ++x) {
      if (h.contains(x) || !oracle::power_of(g.element_order(x), 3)) continue;
      const L4Decomposition d = l4_decompose(g, h, x);
      const Subgroup cg = centralizer(g, x);
      if (d.trivial_case) {
        EXPECT_EQ(cg, d.t);
        continue;
      }
      ++nontrivial;
      EXPECT_EQ(g.mul(d.x, d.y), x);
      EXPECT_NE(d.x, kIdentity);
      EXPECT_NE(d.y, kIdentity);
      EXPECT_TRUE(h.contains(d.y));
      EXPECT_EQ(centralizer(g, d.x), d.t);
      EXPECT_EQ(intersection(centralizer(g, d.y), d.t), cg);
      EXPECT_LT(cg.order(), d.t.order());
    }
  }
  EXPECT_GT(nontrivial, 0u);
}

TEST(L4, Preconditions) {
  const Group g = s3_times_c3();
  const Subgroup h = normal_p_subgroups(g, 3)[1];
  ASSERT_EQ(h.order(), 3u);
  EXPECT_THROW(l4_decompose(g, h, h.members()[1]), PreconditionError);
  EXPECT_THROW(l4_decompose(g, h, elements_of_order(g, 2).front()), PreconditionError);

  const Group s4 = symmetric(4);
  const Subgroup v4 = p_core(s4, 2);
  EXPECT_THROW(l4_decompose(s4, v4, elements_of_order(s4, 4).front()), PreconditionError);
}

TEST(CentralizerMod, IsPreimageOfQuotientCentralizer) {
  for (const Group& g : small_corpus(36))
    for (const Subgroup& h : normal_subgroups(g)) {
      const QuotientMap q = quotient_group(g, h);
      for (Elem x = 0; x < g.order(); x += 2)
        EXPECT_EQ(centralizer_mod(g, h, x), preimage(q, centralizer(q.quotient, q.project(x))));
    }
}

TEST(CA, TrivialCases) {
  const Group a4 = alternating(4);
  const Subgroup f = fitting_subgroup(a4);
  const Subgroup t = *complement_search(a4, f);
  for (Elem x : f.members()) {
    const CADecomposition d = ca_decompose(a4, f, t, x);
    EXPECT_EQ(d.k, kIdentity);
    EXPECT_EQ(d.x, x);
    EXPECT_EQ(d.y, kIdentity);
  }
  for (Elem y : t.members()) {
    const CADecomposition d = ca_decompose(a4, f, t, y);
    EXPECT_EQ(d.k, kIdentity);
    EXPECT_EQ(d.x, kIdentity);
    EXPECT_EQ(d.y, y);
  }
}

TEST(CA, CorpusWide) {
  std::size_t groups = 0;
  for (const Group& g : small_corpus(72)) {
    if (!is_a_group(g)) continue;
    const FittingData fd = fitting_data(g, true);
    if (!fd.complement) continue;
    ++groups;
    for (Elem x = 0; x < g.order(); ++x) {
      const CADecomposition d = ca_decompose(g, fd.fitting, *fd.complement, x);
      EXPECT_EQ(g.conj(x, d.k), g.mul(d.x, d.y)) << g.label();
      EXPECT_TRUE(g.commute(d.x, d.y));
      EXPECT_TRUE(fd.fitting.contains(d.x));
      EXPECT_TRUE(fd.complement->contains(d.y));
    }
  }
  EXPECT_GT(groups, 100u);
}

TEST(CA, RequiresComplement) {
  const Group a4 = alternating(4);
  const Subgroup f = fitting_subgroup(a4);
  EXPECT_THROW(ca_decompose(a4, f, Subgroup::trivial(a4), 1), PreconditionError);
}

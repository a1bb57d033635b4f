#include "cgt/index.hpp"
#include "cgt/kernel.hpp"
#include "cgt/numtheory.hpp"
#include "cgt/verifier.hpp"
#include "verifier_detail.hpp"

#include <algorithm>

namespace cgt {

namespace {

class WitnessReader {
 public:
  WitnessReader(const Group& g, const Witness& w) : g_(g), w_(w) {}

  std::vector<Elem> elems(const std::string& key) const {
    auto it = w_.find(key);
    if (it == w_.end()) throw InputError("witness has no '" + key + "' entry");
    std::vector<Elem> out;
    for (auto v : it->second) {
      if (v >= g_.order()) throw InputError("witness element " + std::to_string(v) + " out of range");
      out.push_back(static_cast<Elem>(v));
    }
    return out;
  }
  Elem elem(const std::string& key) const {
    const auto v = elems(key);
    if (v.size() != 1) throw InputError("witness entry '" + key + "' should hold one element");
    return v.front();
  }
  std::uint64_t number(const std::string& key) const {
    auto it = w_.find(key);
    if (it == w_.end() || it->second.size() != 1) throw InputError("witness has no scalar '" + key + "'");
    return it->second.front();
  }
  Subgroup subgroup(const std::string& key) const { return Subgroup(g_, elems(key)); }

 private:
  const Group& g_;
  const Witness& w_;
};

ElementSet cmask(const Group& g, Elem x) { return centralizer(g, x).mask(); }

bool rerun_reproduces(const Group& g, const VerificationReport& r) {
  GroupChecks checks(g);
  for (const VerificationReport& again : checks.key())
    if (again.lemma == r.lemma && again.status == Status::Fail && again.witness == r.witness) return true;
  return false;
}

}  // namespace

bool replay(const Group& g, const VerificationReport& r) {
  if (r.status != Status::Fail) return false;
  const WitnessReader w(g, r.witness);
  const std::string& lemma = r.lemma;

  if (lemma == "basic") {
    const auto part = w.number("part");
    if (part == 2) {
      const Elem x = w.elem("x"), y = w.elem("y");
      return cmask(g, g.mul(x, y)) != (cmask(g, x) & cmask(g, y));
    }
    const Subgroup k = w.subgroup("K");
    const Elem x = w.elem("x");
    const detail::QuotientInfo qi(g, k);
    const Elem xq = qi.proj[x];
    const std::uint64_t ig = ind(g, x), ik = ind_in(k, x), iq = qi.q.order() / qi.cent[xq];
    const Subgroup cx = centralizer(g, x);
    ElementSet img(qi.q.order());
    bool inside = true;
    for (Elem c : cx.members()) {
      img.set(qi.proj[c]);
      inside = inside && qi.q.commute(qi.proj[c], xq);
    }
    if (part == 1) return ig % ik != 0 || ig % iq != 0;
    if (part == 3) return !inside;
    if (part == 4) return img.count() != qi.cent[xq];
    throw InputError("unknown part for basic");
  }
  if (lemma == "cl2") {
    const Subgroup v = w.subgroup("V"), a = w.subgroup("A");
    ElementSet fixes(g.order());
    fixes.set();
    for (Elem x : v.members()) fixes &= cmask(g, x);
    const std::size_t kernel = (a.mask() & fixes).count();
    const auto mem = v.members();
    return std::none_of(mem.begin(), mem.end(),
                        [&](Elem x) { return (a.mask() & cmask(g, x)).count() == kernel; });
  }
  if (lemma == "go") {
    const Subgroup p = w.subgroup("P");
    const Elem a = w.elem("a");
    try {
      const Subgroup comm = commutator_subgroup_rel(g, p, a);
      const ElementSet fixed = p.mask() & cmask(g, a);
      return (fixed & comm.mask()).count() != 1 || fixed.count() * comm.order() != p.order();
    } catch (const LemmaViolation&) {
      return true;
    }
  }
  if (lemma == "centre") {
    const Elem x = w.elem("g"), h = w.elem("h");
    return cmask(g, g.mul(h, x)) != (cmask(g, h) & cmask(g, x));
  }
  if (lemma == "size") {
    const Subgroup h = w.subgroup("H");
    const Elem x = w.elem("g"), y = w.elem("h");
    const Elem hg = g.mul(y, x);
    const auto mem = h.members();
    const bool conj = std::any_of(mem.begin(), mem.end(), [&](Elem z) { return g.conj(x, z) == hg; });
    return !conj || centralizer(g, hg).order() != centralizer(g, x).order();
  }
  if (lemma == "l4") {
    const Subgroup h = w.subgroup("H");
    const Elem x = w.elem("g");
    try {
      const L4Decomposition d = l4_decompose(g, h, x);
      return cmask(g, d.x) != detail::centralizer_mod_mask(g, h, d.x);
    } catch (const LemmaViolation&) {
      return true;
    }
  }
  if (lemma == "bingo1" || lemma == "bingo2") {
    const Subgroup h = w.subgroup("H");
    const IndexSet ng = index_set(g);
    const IndexSet nt = index_set(natural_semidirect(g, h).group);
    const IndexSet& from = lemma == "bingo1" ? ng : nt;
    const IndexSet& to = lemma == "bingo1" ? nt : ng;
    return std::any_of(from.sizes.begin(), from.sizes.end(), [&](auto v) { return !to.contains(v); });
  }
  if (lemma == "key_phi") return !key_iso_phi(g, w.subgroup("H"), w.subgroup("N")).ok();
  if (lemma == "key" || lemma == "abelian_iff") return rerun_reproduces(g, r);
  if (lemma == "ca") {
    const Subgroup f = w.subgroup("F"), t = w.subgroup("T");
    const auto part = w.number("part");
    if (part == 1) {
      const Elem y = w.elem("y");
      return !coprime_split(g, f, std::span<const Elem>(&y, 1)).is_direct_decomposition_of(f);
    }
    if (part == 2) {
      const Elem x = w.elem("g");
      try {
        const CADecomposition d = ca_decompose(g, f, t, x);
        return g.conj(x, d.k) != g.mul(d.x, d.y) || !f.contains(d.x) || !t.contains(d.y) || !g.commute(d.x, d.y);
      } catch (const LemmaViolation&) {
        return true;
      }
    }
    const Elem x = w.elem("x"), y = w.elem("y");
    const ElementSet both = cmask(g, x) & cmask(g, y);
    if (cmask(g, g.mul(x, y)) != both) return true;
    const std::size_t prod = cmask(g, x).count() * cmask(g, y).count() / both.count();
    return prod == g.order() && ind(g, g.mul(x, y)) != ind(g, x) * ind(g, y);
  }
  if (lemma == "cc") {
    const Subgroup f = w.subgroup("F");
    const std::uint64_t p = w.number("p");
    const std::uint64_t want = p_part(g.order() / f.order(), p);
    const auto mem = f.members();
    return std::none_of(mem.begin(), mem.end(), [&](Elem x) { return p_part(ind(g, x), p) == want; });
  }
  if (lemma == "theorem") {
    const HypothesisCheck h = hypothesis_check(g);
    return h.satisfies_theorem_hypothesis && !g.is_abelian();
  }
  throw InputError("no replay for lemma '" + lemma + "'");
}

}  // namespace cgt

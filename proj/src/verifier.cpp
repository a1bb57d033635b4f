#include "cgt/verifier.hpp"

#include "cgt/kernel.hpp"
#include "cgt/numtheory.hpp"
#include "verifier_detail.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace cgt {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> kIds = {"basic", "cl2", "go",  "centre", "size",   "l4",
                                                "bingo", "key", "ca", "cc",     "theorem"};
  return kIds;
}

std::set<std::string> parse_lemmas(const std::string& list) {
  std::set<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(lemma_ids().begin(), lemma_ids().end());
      continue;
    }
    if (std::find(lemma_ids().begin(), lemma_ids().end(), item) == lemma_ids().end())
      throw InputError("unknown lemma '" + item + "'");
    out.insert(item);
  }
  if (out.empty()) throw InputError("empty lemma list");
  return out;
}

ExploreStats& ExploreStats::operator+=(const ExploreStats& o) {
  groups += o.groups;
  perfect_holds += o.perfect_holds;
  primeiro_holds += o.primeiro_holds;
  segundo_holds += o.segundo_holds;
  return *this;
}

namespace detail {

std::vector<std::uint64_t> as_list(const Subgroup& s) { return {s.members().begin(), s.members().end()}; }

std::vector<std::uint64_t> as_list(const ElementSet& m) {
  std::vector<std::uint64_t> out;
  for (auto i = m.find_first(); i != ElementSet::npos; i = m.find_next(i)) out.push_back(i);
  return out;
}

std::string set_text(const std::vector<std::uint64_t>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << '}';
  return out.str();
}

QuotientInfo::QuotientInfo(const Group& g, const Subgroup& k) {
  QuotientMap m = quotient_group(g, k);
  proj = std::move(m.projection);
  q = std::move(m.quotient);
  const std::size_t n = q.order();
  cent.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) cent[a] += q.commute(a, b);
}

ElementSet centralizer_mod_mask(const Group& g, const Subgroup& h, Elem x) {
  ElementSet m(g.order());
  for (Elem t = 0; t < g.order(); ++t)
    if (h.contains(g.commutator(x, t))) m.set(t);
  return m;
}

}  // namespace detail

using namespace detail;

// --- cache ------------------------------------------------------------------

struct GroupChecks::Cache {
  Group g;
  CheckOptions opts;
  std::vector<ElementSet> cent;
  std::vector<std::size_t> cent_order;
  std::optional<std::vector<Subgroup>> normals;
  std::optional<std::vector<Subgroup>> abelian_normals;
  std::map<std::uint64_t, Subgroup> sylows;
  std::map<std::uint64_t, std::vector<Subgroup>> normal_p;
  std::optional<FittingData> fitting;
  bool complement_done = false;
  std::optional<Subgroup> complement;
  std::optional<HypothesisCheck> hyp;
  std::optional<bool> solvable;

  Cache(Group group, CheckOptions o) : g(std::move(group)), opts(o) {}

  const ElementSet& C(Elem x) {
    if (cent.empty()) {
      const std::size_t n = g.order();
      cent.assign(n, ElementSet(n));
      cent_order.assign(n, 0);
      for (Elem a = 0; a < n; ++a)
        for (Elem b = a; b < n; ++b)
          if (g.commute(a, b)) {
            cent[a].set(b);
            cent[b].set(a);
          }
      for (Elem a = 0; a < n; ++a) cent_order[a] = cent[a].count();
    }
    return cent[x];
  }
  std::size_t corder(Elem x) {
    C(x);
    return cent_order[x];
  }
  std::uint64_t ind(Elem x) { return g.order() / corder(x); }

  const std::vector<Subgroup>& all_normals() {
    if (!normals) normals = normal_subgroups(g);
    return *normals;
  }
  const std::vector<Subgroup>& abelian_normal_subgroups() {
    if (!abelian_normals) {
      abelian_normals.emplace();
      for (const Subgroup& s : all_normals())
        if (s.is_abelian()) abelian_normals->push_back(s);
    }
    return *abelian_normals;
  }
  const Subgroup& sylow(std::uint64_t p) {
    auto it = sylows.find(p);
    if (it == sylows.end()) it = sylows.emplace(p, sylow_subgroup(g, p)).first;
    return it->second;
  }
  bool sylow_abelian(std::uint64_t p) { return sylow(p).is_abelian(); }
  const std::vector<Subgroup>& normal_psubs(std::uint64_t p) {
    auto it = normal_p.find(p);
    if (it == normal_p.end()) it = normal_p.emplace(p, normal_p_subgroups(g, p)).first;
    return it->second;
  }
  bool is_a() {
    for (std::uint64_t p : g.primes())
      if (!sylow_abelian(p)) return false;
    return true;
  }
  bool is_solvable() {
    if (!solvable) solvable = cgt::is_solvable(g);
    return *solvable;
  }
  const FittingData& fit() {
    if (!fitting) fitting = fitting_data(g, false);
    return *fitting;
  }
  const std::optional<Subgroup>& comp() {
    if (!complement_done) {
      complement = complement_search(g, fit().fitting, opts.complement);
      complement_done = true;
    }
    return complement;
  }
  std::vector<std::uint64_t> nonabelian_sylow_primes() {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : g.primes())
      if (!sylow_abelian(p)) out.push_back(p);
    return out;
  }
};

namespace {

class Tally {
 public:
  Tally(const Group& g, std::string lemma, std::string subject = {})
      : start_(std::chrono::steady_clock::now()) {
    r_.group = g.label();
    r_.lemma = std::move(lemma);
    r_.subject = std::move(subject);
  }

  void check() { ++r_.tuples_checked; }
  void skip(const std::string& reason, std::uint64_t count = 1) {
    if (count == 0) return;
    r_.tuples_skipped += count;
    r_.skip_reasons[reason] += count;
  }
  void fail(std::string note, Witness w) {
    if (r_.status == Status::Fail) return;
    r_.status = Status::Fail;
    r_.note = std::move(note);
    r_.witness = std::move(w);
  }
  bool failed() const { return r_.status == Status::Fail; }
  bool skipped() const { return r_.status == Status::Skip; }
  void skip_all(std::string note) {
    r_.status = Status::Skip;
    r_.note = std::move(note);
  }
  void note(std::string n) {
    if (r_.status == Status::Pass) r_.note = std::move(n);
  }

  VerificationReport done() {
    r_.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(r_);
  }

 private:
  VerificationReport r_;
  std::chrono::steady_clock::time_point start_;
};

std::string primes_text(const std::vector<std::uint64_t>& ps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ps.size(); ++i) out << (i ? "," : "") << ps[i];
  return out.str();
}

bool coprime(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) == 1; }

}  // namespace

GroupChecks::GroupChecks(Group g, CheckOptions opts) : c_(std::make_unique<Cache>(std::move(g), opts)) {}
GroupChecks::~GroupChecks() = default;

const Group& GroupChecks::group() const { return c_->g; }

const HypothesisCheck& GroupChecks::hypothesis() {
  if (!c_->hyp) c_->hyp = hypothesis_check(c_->g);
  return *c_->hyp;
}

// --- basic ------------------------------------------------------------------

VerificationReport GroupChecks::basic() {
  Cache& c = *c_;
  const Group& g = c.g;
  const std::size_t n = g.order();
  Tally t(g, "basic");

  for (const Subgroup& k : c.all_normals()) {
    const QuotientInfo qi(g, k);
    const std::size_t qn = qi.q.order();
    for (Elem x = 0; x < n; ++x) {
      t.check();
      const ElementSet& cx = c.C(x);
      const std::uint64_t ind_g = c.ind(x);
      const std::uint64_t ind_k = k.order() / (cx & k.mask()).count();
      const Elem xq = qi.proj[x];
      const std::uint64_t ind_q = qn / qi.cent[xq];
      const Witness w{{"K", as_list(k)}, {"x", {x}}};
      if (ind_g % ind_k != 0 || ind_g % ind_q != 0) {
        auto wi = w;
        wi["part"] = {1};
        t.fail("(i) Ind(G,x)=" + std::to_string(ind_g) + ", Ind(K,x)=" + std::to_string(ind_k) +
                   ", Ind(G/K,xK)=" + std::to_string(ind_q),
               wi);
      }
      ElementSet img(qn);
      bool inside = true;
      for (auto y = cx.find_first(); y != ElementSet::npos; y = cx.find_next(y)) {
        const Elem yq = qi.proj[y];
        img.set(yq);
        if (!qi.q.commute(yq, xq)) inside = false;
      }
      if (!inside) {
        auto wi = w;
        wi["part"] = {3};
        t.fail("(iii) C_G(x)K/K is not inside C_{G/K}(xK)", wi);
      }
      if (!coprime(g.element_order(x), k.order())) {
        t.skip("(iv) gcd(|x|,|K|) > 1");
        continue;
      }
      if (img.count() != qi.cent[xq]) {
        auto wi = w;
        wi["part"] = {4};
        t.fail("(iv) |C_G(x)K/K| = " + std::to_string(img.count()) + " but |C_{G/K}(xK)| = " +
                   std::to_string(qi.cent[xq]),
               wi);
      }
    }
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y) {
      if (!g.commute(x, y) || !coprime(g.element_order(x), g.element_order(y))) continue;
      t.check();
      if (c.C(g.mul(x, y)) != (c.C(x) & c.C(y)))
        t.fail("(ii) C_G(xy) != C_G(x) n C_G(y)", {{"part", {2}}, {"x", {x}}, {"y", {y}}});
    }
  return t.done();
}

// --- CL2 --------------------------------------------------------------------

VerificationReport check_cl2(const ActionSpec& spec) {
  Tally t(spec.acted, "cl2", spec.label);
  const Group& a = spec.acting;
  const Group& v = spec.acted;
  if (!a.is_abelian()) t.skip_all("acting group is not abelian");
  else if (!v.is_abelian()) t.skip_all("acted group is not abelian");
  else if (!spec.is_faithful()) t.skip_all("action is not faithful");
  else if (!coprime(a.order(), v.order())) t.skip_all("orders are not coprime");
  if (t.skipped()) return t.done();
  t.check();
  for (Elem x = 0; x < v.order(); ++x) {
    bool regular = true;
    for (Elem b = 1; b < a.order() && regular; ++b) regular = spec.apply(x, b) != x;
    if (regular) {
      t.note("regular orbit through v=" + std::to_string(x));
      return t.done();
    }
  }
  t.fail("no regular orbit", {{"acting_order", {a.order()}}, {"acted_order", {v.order()}}});
  return t.done();
}

VerificationReport GroupChecks::cl2() {
  Cache& c = *c_;
  const Group& g = c.g;
  Tally t(g, "cl2");

  // Acting groups: the distinct cyclic subgroups and the abelian Sylow subgroups.
  std::vector<Subgroup> acting;
  {
    std::set<ElementSet> seen;
    for (Elem x = 1; x < g.order(); ++x) {
      Subgroup s = subgroup_closure(g, std::span<const Elem>(&x, 1));
      if (seen.insert(s.mask()).second) acting.push_back(std::move(s));
    }
    for (std::uint64_t p : g.primes())
      if (c.sylow_abelian(p) && seen.insert(c.sylow(p).mask()).second) acting.push_back(c.sylow(p));
  }

  for (const Subgroup& v : c.abelian_normal_subgroups()) {
    if (v.is_trivial()) continue;
    ElementSet fixes_v(g.order());
    fixes_v.set();
    for (Elem x : v.generators()) fixes_v &= c.C(x);
    for (const Subgroup& a : acting) {
      if (!coprime(a.order(), v.order())) {
        t.skip("|A| not coprime to |V|");
        continue;
      }
      t.check();
      // A/C_A(V) acts faithfully; a regular orbit is a v with C_A(v) = C_A(V).
      const std::size_t kernel = (a.mask() & fixes_v).count();
      bool found = false;
      for (Elem x : v.members())
        if ((a.mask() & c.C(x)).count() == kernel) {
          found = true;
          break;
        }
      if (!found)
        t.fail("A/C_A(V) has no regular orbit on V", {{"V", as_list(v)}, {"A", as_list(a)}});
    }
  }
  return t.done();
}

// --- Go ---------------------------------------------------------------------

VerificationReport GroupChecks::go() {
  Cache& c = *c_;
  const Group& g = c.g;
  Tally t(g, "go");
  for (std::uint64_t p : g.primes())
    for (const Subgroup& pp : c.normal_psubs(p)) {
      if (pp.is_trivial()) continue;
      if (!pp.is_abelian()) {
        t.skip("P not abelian");
        continue;
      }
      for (Elem a = 0; a < g.order(); ++a) {
        if (!coprime(g.element_order(a), p)) continue;
        t.check();
        const Witness w{{"P", as_list(pp)}, {"a", {a}}};
        try {
          const Subgroup comm = commutator_subgroup_rel(g, pp, a);
          const ElementSet fixed = pp.mask() & c.C(a);
          if ((fixed & comm.mask()).count() != 1 || fixed.count() * comm.order() != pp.order())
            t.fail("P != C_P(a) x [P,a]: |C_P(a)|=" + std::to_string(fixed.count()) +
                       ", |[P,a]|=" + std::to_string(comm.order()),
                   w);
        } catch (const LemmaViolation& e) {
          t.fail(e.what(), w);
        }
      }
    }
  return t.done();
}

// --- centre -----------------------------------------------------------------

VerificationReport GroupChecks::centre() {
  Cache& c = *c_;
  const Group& g = c.g;
  Tally t(g, "centre");
  for (const Subgroup& h : c.abelian_normal_subgroups()) {
    const QuotientInfo qi(g, h);
    for (Elem x = 0; x < g.order(); ++x) {
      if (!h.mask().is_subset_of(c.C(x))) {
        t.skip("g not in C_G(H)");
        continue;
      }
      // C_G(g)/H = C_{G/H}(gH) exactly when the orders agree, as C_G(g) lies in the preimage.
      if (c.corder(x) != h.order() * qi.cent[qi.proj[x]]) {
        t.skip("C_G(g)/H < C_{G/H}(gH)");
        continue;
      }
      t.check();
      for (Elem y : h.members())
        if (c.C(g.mul(y, x)) != (c.C(y) & c.C(x)))
          t.fail("C_G(hg) != C_G(h) n C_G(g)", {{"H", as_list(h)}, {"g", {x}}, {"h", {y}}});
    }
  }
  return t.done();
}

// --- size -------------------------------------------------------------------

VerificationReport GroupChecks::size() {
  Cache& c = *c_;
  const Group& g = c.g;
  Tally t(g, "size");
  for (std::uint64_t p : g.primes())
    for (const Subgroup& h : c.normal_psubs(p)) {
      if (h.is_trivial()) continue;
      if (!h.is_abelian()) {
        t.skip("H not abelian");
        continue;
      }
      for (Elem x = 0; x < g.order(); ++x) {
        if (!coprime(g.element_order(x), p)) continue;
        for (Elem y : h.members()) {
          const Elem hg = g.mul(y, x);
          if (g.element_order(hg) != g.element_order(x)) {
            t.skip("|hg| != |g|");
            continue;
          }
          t.check();
          const Witness w{{"H", as_list(h)}, {"g", {x}}, {"h", {y}}};
          const auto mem = h.members();
          if (std::none_of(mem.begin(), mem.end(), [&](Elem z) { return g.conj(x, z) == hg; }))
            t.fail("hg is not g^y for any y in H", w);
          else if (c.corder(hg) != c.corder(x))
            t.fail("|C_G(hg)| != |C_G(g)|", w);
        }
      }
    }
  return t.done();
}

// --- L4 ---------------------------------------------------------------------

VerificationReport GroupChecks::l4() {
  Cache& c = *c_;
  const Group& g = c.g;
  Tally t(g, "l4");
  for (std::uint64_t p : g.primes()) {
    if (!c.sylow_abelian(p)) {
      t.skip("Sylow p-subgroup not abelian", c.normal_psubs(p).size());
      continue;
    }
    for (const Subgroup& h : c.normal_psubs(p)) {
      const QuotientInfo qi(g, h);
      for (Elem x = 1; x < g.order(); ++x) {
        if (!is_power_of(g.element_order(x), p) || h.contains(x)) continue;
        if (c.corder(x) == h.order() * qi.cent[qi.proj[x]]) {
          t.skip("C_G(g) = T");
          continue;
        }
        t.check();
        const Witness w{{"H", as_list(h)}, {"g", {x}}};
        try {
          const Subgroup tt(g, centralizer_mod_mask(g, h, x));
          const Subgroup cg(g, c.C(x));
          const L4Decomposition d = l4_decompose(g, h, x, tt, cg);
          if (c.C(d.x) != centralizer_mod_mask(g, h, d.x))
            t.fail("C_G(x)/H != C_{G/H}(xH) for x=" + std::to_string(d.x), w);
        } catch (const LemmaViolation& e) {
          t.fail(e.what(), w);
        }
      }
    }
  }
  return t.done();
}

// --- bingo ------------------------------------------------------------------

std::vector<VerificationReport> GroupChecks::bingo() {
  Cache& c = *c_;
  const Group& g = c.g;
  const IndexSet& ng = hypothesis().index;

  struct Case {
    Subgroup h;
    std::uint64_t p;
  };
  std::vector<Case> cases;
  std::uint64_t skipped = 0;
  bool trivial_seen = false;
  std::vector<VerificationReport> unchecked;
  for (std::uint64_t p : g.primes()) {
    const bool ok = c.sylow_abelian(p);
    for (const Subgroup& h : c.normal_psubs(p)) {
      if (h.is_trivial()) {
        if (!trivial_seen) cases.push_back({h, p});
        trivial_seen = true;
      } else if (ok) {
        cases.push_back({h, p});
      } else {
        ++skipped;
        if (c.opts.per_subject)
          for (const char* id : {"bingo1", "bingo2"}) {
            Tally t(g, id, h.to_string());
            t.skip_all("Sylow " + std::to_string(p) + "-subgroup not abelian");
            unchecked.push_back(t.done());
          }
      }
    }
  }
  if (!trivial_seen) cases.push_back({Subgroup::trivial(g), 0});  // p not dividing |G|

  Tally agg1(g, "bingo1"), agg2(g, "bingo2");
  agg1.skip("Sylow p-subgroup not abelian", skipped);
  agg2.skip("Sylow p-subgroup not abelian", skipped);
  std::vector<VerificationReport> out;
  for (const Case& k : cases) {
    const std::string subject = c.opts.per_subject ? k.h.to_string() : std::string();
    Tally one1(g, "bingo1", subject), one2(g, "bingo2", subject);
    Tally& t1 = c.opts.per_subject ? one1 : agg1;
    Tally& t2 = c.opts.per_subject ? one2 : agg2;
    const NaturalSemidirect tilde = natural_semidirect(g, k.h);
    const IndexSet nt = index_set(tilde.group);
    std::vector<std::uint64_t> missing1, missing2;
    for (auto v : ng.sizes)
      if (!nt.contains(v)) missing1.push_back(v);
    for (auto v : nt.sizes)
      if (!ng.contains(v)) missing2.push_back(v);
    t1.check();
    t2.check();
    if (!missing1.empty())
      t1.fail("N(G) not inside N(H x| G/H); missing " + set_text(missing1),
              {{"H", as_list(k.h)}, {"missing", missing1}});
    if (!missing2.empty())
      t2.fail("N(H x| G/H) not inside N(G); extra " + set_text(missing2),
              {{"H", as_list(k.h)}, {"extra", missing2}});
    if (c.opts.per_subject) {
      out.push_back(one1.done());
      out.push_back(one2.done());
    }
  }
  if (!c.opts.per_subject) {
    out.push_back(agg1.done());
    out.push_back(agg2.done());
  }
  for (auto& r : unchecked) out.push_back(std::move(r));
  return out;
}

// --- key --------------------------------------------------------------------

std::vector<VerificationReport> GroupChecks::key() {
  Cache& c = *c_;
  const Group& g = c.g;
  Tally tk(g, "key"), tphi(g, "key_phi"), tab(g, "abelian_iff");
  if (!c.is_a()) {
    const std::string note = "not an A-group: Sylow subgroup nonabelian for p in {" +
                             primes_text(c.nonabelian_sylow_primes()) + "}";
    tk.skip_all(note);
    tphi.skip_all(note);
    tab.skip_all(note);
    return {tk.done(), tphi.done(), tab.done()};
  }
  const IndexSet& ng = hypothesis().index;
  const FittingData& fd = c.fit();
  const Witness wf{{"F", as_list(fd.fitting)}};

  // Iterated construction over the p-cores, as in the proof.
  Group cur = g;
  std::vector<Elem> embed(g.order());
  std::iota(embed.begin(), embed.end(), Elem{0});
  Subgroup acc = Subgroup::trivial(g);
  bool first = true;
  try {
    for (const auto& [p, core] : fd.p_cores) {
      if (core.is_trivial()) continue;
      std::vector<Elem> image;
      for (Elem x : core.members()) image.push_back(embed[x]);
      const Subgroup n(cur, image);
      if (!first) {
        tphi.check();
        const PhiWitness phi = key_iso_phi(g, acc, core);
        if (!phi.ok()) {
          Witness w{{"H", as_list(acc)}, {"N", as_list(core)}};
          if (phi.counterexample) w["pair"] = {phi.counterexample->first, phi.counterexample->second};
          tphi.fail(std::string("phi is not an isomorphism:") + (phi.well_defined ? "" : " not well defined") +
                        (phi.bijective ? "" : " not bijective") + (phi.homomorphism ? "" : " not a homomorphism"),
                    w);
        }
      }
      first = false;
      NaturalSemidirect step = natural_semidirect(cur, n);
      tk.check();
      if (index_set(step.group) != index_set(cur)) {
        Witness w = wf;
        w["prime"] = {p};
        tk.fail("index set changes at the O_" + std::to_string(p) + " step", w);
      }
      for (Elem& e : embed) e = step.embed_coset_of(e);
      cur = step.group;
      acc = product(acc, core);
    }
  } catch (const PreconditionError& e) {
    tk.fail(std::string("iterated construction broke: ") + e.what(), wf);
  }

  const NaturalSemidirect single = natural_semidirect(g, fd.fitting);
  const IndexSet ns = index_set(single.group);
  tk.check();
  if (ns != ng) tk.fail("N(G) != N(F x| G/F)", wf);
  tk.check();
  if (index_set(cur) != ns || cur.order() != g.order())
    tk.fail("iterated and single constructions give different index sets", wf);

  tab.check();
  if (g.is_abelian() != single.group.is_abelian())
    tab.fail(std::string("G is ") + (g.is_abelian() ? "" : "not ") + "abelian but F x| G/F is " +
                 (single.group.is_abelian() ? "" : "not ") + "abelian",
             wf);
  return {tk.done(), tphi.done(), tab.done()};
}

// --- CA, CC -----------------------------------------------------------------

VerificationReport GroupChecks::ca() {
  Cache& c = *c_;
  const Group& g = c.g;
  Tally t(g, "ca");
  if (!c.is_a()) {
    t.skip_all("not an A-group: Sylow subgroup nonabelian for p in {" + primes_text(c.nonabelian_sylow_primes()) +
               "}");
    return t.done();
  }
  const Subgroup& f = c.fit().fitting;
  const std::optional<Subgroup>& tc = c.comp();
  if (!tc) {
    t.skip_all("no complement to F(G) found");
    return t.done();
  }
  const Subgroup& tt = *tc;
  const Witness base{{"F", as_list(f)}, {"T", as_list(tt)}};

  for (Elem y : tt.members()) {
    t.check();
    const CoprimeSplit s = coprime_split(g, f, std::span<const Elem>(&y, 1));
    if (!s.is_direct_decomposition_of(f)) {
      Witness w = base;
      w["part"] = {1};
      w["y"] = {y};
      t.fail("(i) F != C_F(y) x [F,y]", w);
    }
  }
  for (Elem x = 0; x < g.order(); ++x) {
    t.check();
    Witness w = base;
    w["part"] = {2};
    w["g"] = {x};
    try {
      const CADecomposition d = ca_decompose(g, f, tt, x);
      if (g.conj(x, d.k) != g.mul(d.x, d.y) || !f.contains(d.x) || !tt.contains(d.y) || !g.commute(d.x, d.y))
        t.fail("(ii) decomposition postcondition fails", w);
    } catch (const LemmaViolation& e) {
      t.fail(std::string("(ii) ") + e.what(), w);
    }
  }
  for (Elem x : f.members())
    for (Elem y : tt.members()) {
      if (!g.commute(x, y)) continue;
      t.check();
      Witness w = base;
      w["part"] = {3};
      w["x"] = {x};
      w["y"] = {y};
      const ElementSet both = c.C(x) & c.C(y);
      if (c.C(g.mul(x, y)) != both) {
        t.fail("(iii) C_G(xy) != C_G(x) n C_G(y)", w);
        continue;
      }
      const std::size_t prod = c.corder(x) * c.corder(y) / both.count();
      if (prod == g.order() && c.ind(g.mul(x, y)) != c.ind(x) * c.ind(y))
        t.fail("(iii) Ind(G,xy) != Ind(G,x) Ind(G,y) although C_G(x)C_G(y) = G", w);
    }
  return t.done();
}

namespace {

// For each p in pi(G): some g in F with Ind(G,g)_p = |G/F|_p. Returns the failing prime.
std::optional<std::uint64_t> cc_predicate(const Group& g, const Subgroup& f,
                                          const std::function<std::uint64_t(Elem)>& ind) {
  const std::uint64_t quotient = g.order() / f.order();
  for (std::uint64_t p : g.primes()) {
    const std::uint64_t want = p_part(quotient, p);
    const auto mem = f.members();
    if (std::none_of(mem.begin(), mem.end(), [&](Elem x) { return p_part(ind(x), p) == want; })) return p;
  }
  return std::nullopt;
}

}  // namespace

VerificationReport GroupChecks::cc() {
  Cache& c = *c_;
  const Group& g = c.g;
  Tally t(g, "cc");
  if (!c.is_a()) {
    t.skip_all("not an A-group: Sylow subgroup nonabelian for p in {" + primes_text(c.nonabelian_sylow_primes()) +
               "}");
    return t.done();
  }
  const Subgroup& f = c.fit().fitting;
  auto ind = [&](Elem x) { return c.ind(x); };
  if (!c.is_solvable()) {
    const auto bad = cc_predicate(g, f, ind);
    t.skip_all(std::string("not solvable; predicate ") +
               (bad ? "fails at p=" + std::to_string(*bad) : std::string("holds")));
    return t.done();
  }
  for (std::uint64_t p : g.primes()) {
    t.check();
    const std::uint64_t want = p_part(g.order() / f.order(), p);
    const auto mem = f.members();
    if (std::none_of(mem.begin(), mem.end(), [&](Elem x) { return p_part(c.ind(x), p) == want; }))
      t.fail("no g in F with Ind(G,g)_p = |G/F|_p = " + std::to_string(want), {{"F", as_list(f)}, {"p", {p}}});
  }
  return t.done();
}

// --- theorem ----------------------------------------------------------------

VerificationReport GroupChecks::theorem() {
  const Group& g = c_->g;
  Tally t(g, "theorem");
  const HypothesisCheck& h = hypothesis();
  t.check();
  std::ostringstream note;
  note << "N=" << set_text(h.index.sizes) << " |G||=" << h.norms.total << " A=" << (h.is_a ? "yes" : "no")
       << " hyp=" << (h.satisfies_theorem_hypothesis ? "yes" : "no") << " abelian=" << (g.is_abelian() ? "yes" : "no");
  if (h.satisfies_theorem_hypothesis && !g.is_abelian()) {
    Witness w{{"N", h.index.sizes}, {"norm_total", {h.norms.total}}};
    for (const auto& [p, v] : h.norms.per_prime) w["norm_" + std::to_string(p)] = {v};
    t.fail("counterexample: A-group satisfying the hypothesis is not abelian; " + note.str(), w);
  } else {
    t.note(note.str());
  }
  return t.done();
}

// --- exploration ------------------------------------------------------------

std::optional<ExploreStats> GroupChecks::explore() {
  Cache& c = *c_;
  const Group& g = c.g;
  if (!c.is_a() || !center(g).is_trivial()) return std::nullopt;
  const std::optional<Subgroup>& tc = c.comp();
  if (!tc) return std::nullopt;
  const FittingData& fd = c.fit();
  const Subgroup& f = fd.fitting;
  const Subgroup& f2 = fd.second_fitting;
  const Subgroup& tt = *tc;
  const HypothesisCheck& hyp = hypothesis();
  const QuotientInfo qf(g, f);

  ExploreStats s;
  s.groups = 1;

  bool perfect = true;
  for (Elem x = 0; x < g.order() && perfect; ++x) {
    const std::uint64_t i2 = ind_in(f2, x);
    const std::uint64_t iq = qf.q.order() / qf.cent[qf.proj[x]];
    for (std::uint64_t p : g.primes())
      if (is_power_of(i2, p) && p_part(iq, p) != 1) perfect = false;
  }
  s.perfect_holds = perfect;

  bool primeiro = true;
  for (std::uint64_t p : g.primes()) {
    const std::uint64_t want = p_part(tt.order(), p);
    const auto mem = f.members();
    if (std::none_of(mem.begin(), mem.end(), [&](Elem x) { return c.ind(x) == want; })) primeiro = false;
  }
  s.primeiro_holds = primeiro;

  bool segundo = true;
  for (std::uint64_t p : g.primes()) {
    std::uint64_t best = 1;
    for (Elem x = 0; x < g.order(); ++x) best = std::max(best, p_part(ind_in(f, x), p));
    const auto mem = tt.members();
    const bool exists = std::any_of(mem.begin(), mem.end(), [&](Elem y) { return c.ind(y) == best; });
    if (!exists || hyp.norms.per_prime.at(p) != p_part(tt.order(), p) * best) segundo = false;
  }
  s.segundo_holds = segundo;
  return s;
}

// --- dispatch ---------------------------------------------------------------

std::vector<VerificationReport> GroupChecks::run(const std::set<std::string>& lemmas) {
  std::vector<VerificationReport> out;
  auto add = [&](std::vector<VerificationReport> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  for (const std::string& id : lemma_ids()) {
    if (!lemmas.count(id)) continue;
    if (id == "basic") out.push_back(basic());
    else if (id == "cl2") out.push_back(cl2());
    else if (id == "go") out.push_back(go());
    else if (id == "centre") out.push_back(centre());
    else if (id == "size") out.push_back(size());
    else if (id == "l4") out.push_back(l4());
    else if (id == "bingo") add(bingo());
    else if (id == "key") add(key());
    else if (id == "ca") out.push_back(ca());
    else if (id == "cc") out.push_back(cc());
    else if (id == "theorem") out.push_back(theorem());
  }
  return out;
}

}  // namespace cgt

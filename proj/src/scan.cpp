#include "cgt/verifier.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace cgt {

std::uint64_t ScanSummary::count(Status s) const {
  std::uint64_t total = 0;
  for (const auto& [lemma, counts] : by_lemma) {
    auto it = counts.find(s);
    if (it != counts.end()) total += it->second;
  }
  return total;
}

namespace {

struct GroupResult {
  std::vector<VerificationReport> records;
  std::tuple<bool, bool, bool> cell;
  bool counterexample = false;
  std::optional<ExploreStats> explore;
};

GroupResult check_one(const CorpusEntry& entry, const ScanOptions& opts, const std::set<std::string>& lemmas) {
  GroupResult out;
  CheckOptions co;
  co.complement.seed = opts.seed;
  GroupChecks checks(entry.build(), co);
  for (const std::string& id : lemma_ids()) {
    if (!lemmas.count(id)) continue;
    try {
      for (auto& r : checks.run({id})) out.records.push_back(std::move(r));
    } catch (const std::exception& e) {
      VerificationReport r;
      r.group = entry.recipe;
      r.lemma = id;
      r.status = Status::Fail;
      r.note = std::string("check aborted: ") + e.what();
      r.witness = {{"order", {entry.order}}};
      out.records.push_back(std::move(r));
    }
  }
  const HypothesisCheck& h = checks.hypothesis();
  const bool abelian = checks.group().is_abelian();
  out.cell = {h.is_a, h.contains_all_norms && h.contains_total, abelian};
  out.counterexample = h.satisfies_theorem_hypothesis && !abelian;
  if (opts.explore) out.explore = checks.explore();
  return out;
}

}  // namespace

ScanResult run_scan(const ScanOptions& opts) {
  const std::vector<CorpusEntry> entries = corpus(opts.corpus);
  std::set<std::string> lemmas = opts.lemmas;
  if (lemmas.empty()) lemmas.insert(lemma_ids().begin(), lemma_ids().end());
  lemmas.insert("theorem");

  std::vector<GroupResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) results[i] = check_one(entries[i], opts, lemmas);
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ScanResult out;
  out.summary.groups = entries.size();
  if (opts.explore) out.summary.explore = ExploreStats{};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    GroupResult& r = results[i];
    ++out.summary.cells[r.cell];
    if (r.counterexample) out.summary.counterexamples.push_back(entries[i].recipe);
    if (r.explore) *out.summary.explore += *r.explore;
    for (auto& rec : r.records) {
      ++out.summary.by_lemma[rec.lemma][rec.status];
      out.records.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace cgt

#pragma once

#include "cgt/constructions.hpp"
#include "cgt/group.hpp"
#include "cgt/index.hpp"
#include "cgt/structure.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace cgt {

enum class Status { Pass, Fail, Skip };

const char* to_string(Status s);

/// Named element lists that exhibit a failure (or describe the subject of a record).
using Witness = std::map<std::string, std::vector<std::uint64_t>>;

/// One verification outcome for a (group, lemma, subject) triple.
///
/// FAIL records always carry a witness that `replay` can re-check. SKIP means a
/// group-level hypothesis is unmet and `note` names it. Individual hypothesis tuples
/// that do not qualify are counted in `tuples_skipped`, with reasons.
struct VerificationReport {
  std::string group;
  std::string lemma;
  std::string subject;
  Status status = Status::Pass;
  std::string note;
  Witness witness;
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_skipped = 0;
  std::map<std::string, std::uint64_t> skip_reasons;
  double millis = 0;
};

/// Lemma identifiers accepted by the selectors, in report order.
const std::vector<std::string>& lemma_ids();
/// Parses "all" or a comma-separated list of lemma ids. Throws InputError.
std::set<std::string> parse_lemmas(const std::string& list);

struct CheckOptions {
  ComplementSearchOptions complement;
  /// One bingo record per normal subgroup H instead of one per group.
  bool per_subject = false;
};

/// CL2 on an explicit action: searches for a regular orbit when the acting group is
/// abelian, acts faithfully and has order coprime to the abelian acted group.
VerificationReport check_cl2(const ActionSpec& spec);

/// Exploratory statistics for predicates that are only meaningful inside a minimal
/// counterexample; never asserted.
struct ExploreStats {
  std::uint64_t groups = 0;  // centerless A-groups with a complement to F
  std::uint64_t perfect_holds = 0;
  std::uint64_t primeiro_holds = 0;
  std::uint64_t segundo_holds = 0;

  ExploreStats& operator+=(const ExploreStats& o);
};

/// Runs the lemma checks on one group, caching shared structure (centralizers,
/// normal subgroups, Sylow and Fitting data) between them. Not thread-safe; use one
/// instance per worker.
class GroupChecks {
 public:
  explicit GroupChecks(Group g, CheckOptions opts = {});
  ~GroupChecks();
  GroupChecks(const GroupChecks&) = delete;
  GroupChecks& operator=(const GroupChecks&) = delete;

  const Group& group() const;

  VerificationReport basic();
  VerificationReport cl2();
  VerificationReport go();
  VerificationReport centre();
  VerificationReport size();
  VerificationReport l4();
  /// Records "bingo1" and "bingo2" (aggregated, or per H with CheckOptions::per_subject).
  std::vector<VerificationReport> bingo();
  /// Records "key", "key_phi" and "abelian_iff".
  std::vector<VerificationReport> key();
  VerificationReport ca();
  VerificationReport cc();
  VerificationReport theorem();

  /// Runs the selected lemma ids (plus "theorem" when requested) in report order.
  std::vector<VerificationReport> run(const std::set<std::string>& lemmas);

  const HypothesisCheck& hypothesis();
  std::optional<ExploreStats> explore();

 private:
  struct Cache;
  std::unique_ptr<Cache> c_;
};

/// Re-executes the failing condition named by a FAIL record on its witness. Returns
/// true when the failure reproduces.
bool replay(const Group& g, const VerificationReport& r);

struct ScanOptions {
  CorpusOptions corpus;
  std::set<std::string> lemmas;  // empty means all
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool explore = false;
};

/// Per-lemma counters and the theorem cells (is_A, N(G) holds all norms, abelian).
struct ScanSummary {
  std::uint64_t groups = 0;
  std::map<std::string, std::map<Status, std::uint64_t>> by_lemma;
  std::map<std::tuple<bool, bool, bool>, std::uint64_t> cells;
  std::vector<std::string> counterexamples;
  std::optional<ExploreStats> explore;

  std::uint64_t count(Status s) const;
};

struct ScanResult {
  std::vector<VerificationReport> records;  // corpus order, then lemma order
  ScanSummary summary;
};

ScanResult run_scan(const ScanOptions& opts);

}  // namespace cgt

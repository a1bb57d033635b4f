#include "cgt/constructions.hpp"
#include "cgt/index.hpp"
#include "cgt/io.hpp"
#include "cgt/kernel.hpp"
#include "cgt/structure.hpp"
#include "cgt/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace cgt;

std::string set_text(const std::vector<std::uint64_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

int cmd_info(const Group& g) {
  const HypothesisCheck h = hypothesis_check(g);
  const FittingData fd = fitting_data(g);
  const std::vector<std::uint64_t> primes(g.primes().begin(), g.primes().end());
  std::cout << "group: " << g.label() << '\n'
            << "order: " << g.order() << '\n'
            << "primes: " << set_text(primes) << '\n'
            << "abelian: " << yn(g.is_abelian()) << '\n'
            << "nilpotent: " << yn(is_nilpotent(g)) << '\n'
            << "solvable: " << yn(is_solvable(g)) << '\n'
            << "A-group: " << yn(h.is_a) << '\n'
            << "N(G) = " << set_text(h.index.sizes) << '\n';
  for (const auto& [p, v] : h.norms.per_prime)
    std::cout << "|G||_" << p << " = " << v << (h.index.contains(v) ? "" : " (not in N(G))") << '\n';
  std::cout << "|G|| = " << h.norms.total << (h.contains_total ? "" : " (not in N(G))") << '\n'
            << "theorem hypothesis: " << yn(h.satisfies_theorem_hypothesis) << '\n'
            << "|F(G)| = " << fd.fitting.order() << '\n'
            << "|F2(G)| = " << fd.second_fitting.order() << '\n'
            << "|Z(G)| = " << center(g).order() << '\n';
  return 0;
}

void print_record(const VerificationReport& r) {
  std::cout << to_string(r.status) << "  " << r.lemma;
  if (!r.subject.empty()) std::cout << "  H=" << r.subject;
  std::cout << "  checked=" << r.tuples_checked << " skipped=" << r.tuples_skipped;
  if (!r.note.empty()) std::cout << "  " << r.note;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group index sets and lemma verification"};
  app.require_subcommand(1);

  std::size_t cap = kDefaultOrderCap;
  app.add_option("--cap", cap, "Largest group order accepted")->envname("CGT_CAP")->check(CLI::PositiveNumber);

  std::string file;
  auto* info = app.add_subcommand("info", "Print invariants of a group");
  info->add_option("FILE", file, "Group file (cayley, perm or recipe) or inline recipe")->required();

  std::string lemma = "all";
  std::string report_path;
  std::uint64_t seed = 0;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run lemma checks on one group");
  verify->add_option("--lemma", lemma, "basic|cl2|go|centre|size|l4|bingo|key|ca|cc|all, or a comma list");
  verify->add_option("--seed", seed, "Seed for the complement search")->envname("CGT_SEED");
  verify->add_option("--report", report_path, "Also write JSON lines here");
  verify->add_option("FILE", file, "Group file or inline recipe")->required();

  std::size_t max_order = 0;
  std::string families = "all";
  unsigned jobs = 1;
  bool explore = false;
  std::string scan_report = "cgt-report.jsonl";
  auto* scan = app.add_subcommand("scan", "Run the checks over the corpus");
  scan->add_option("--max-order", max_order, "Largest group order in the corpus")->required();
  scan->add_option("--families", families, "Comma list of families, or all");
  scan->add_option("--lemma", lemma, "Comma list of lemma ids, or all");
  scan->add_option("--seed", seed, "Seed for the complement search")->envname("CGT_SEED");
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--explore-minimal-lemmas", explore, "Collect statistics on the minimal-counterexample predicates");
  scan->add_option("--report", scan_report, "Report file (JSON lines)");
  scan->add_flag("--timings", timings, "Include per-record timings in the report");

  std::string recipe, out_path, format = "cayley";
  auto* construct = app.add_subcommand("construct", "Build a group and save it");
  construct->add_option("RECIPE", recipe, "Construction recipe")->required();
  construct->add_option("-o,--output", out_path, "Output file")->required();
  construct->add_option("--format", format, "cayley, perm or recipe")
      ->check(CLI::IsMember({"cayley", "perm", "recipe"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_info(load_group(file, cap));

    if (*verify) {
      const Group g = load_group(file, cap);
      CheckOptions opts;
      opts.complement.seed = seed;
      opts.per_subject = true;
      GroupChecks checks(g, opts);
      auto lemmas = parse_lemmas(lemma);
      if (lemma == "all") lemmas.insert("theorem");
      std::ofstream report;
      if (!report_path.empty()) {
        report.open(report_path, std::ios::binary);
        if (!report) throw InputError("cannot write " + report_path);
      }
      bool failed = false;
      std::cout << "group: " << g.label() << " (order " << g.order() << ")\n";
      for (const auto& r : checks.run(lemmas)) {
        print_record(r);
        failed = failed || r.status == Status::Fail;
        if (report.is_open()) report << report_line(r) << '\n';
      }
      return failed ? 1 : 0;
    }

    if (*scan) {
      ScanOptions opts;
      opts.corpus.max_order = max_order;
      opts.corpus.families = parse_families(families);
      opts.corpus.cap = cap;
      opts.lemmas = parse_lemmas(lemma);
      opts.seed = seed;
      opts.jobs = jobs;
      opts.explore = explore;
      const ScanResult result = run_scan(opts);
      std::ofstream out(scan_report, std::ios::binary);
      if (!out) throw InputError("cannot write " + scan_report);
      write_report(out, result, {max_order, families, lemma, seed}, timings);
      std::cout << summary_table(result.summary) << "report: " << scan_report << '\n';
      return result.summary.count(Status::Fail) > 0 || !result.summary.counterexamples.empty() ? 1 : 0;
    }

    if (*construct) {
      const Group g = build_recipe(recipe, cap);
      const GroupFormat f = format == "perm"     ? GroupFormat::Perm
                            : format == "recipe" ? GroupFormat::Recipe
                                                 : GroupFormat::Cayley;
      save_group(g, out_path, f);
      std::cout << "wrote " << g.label() << " (order " << g.order() << ") to " << out_path << '\n';
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

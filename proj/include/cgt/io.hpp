#pragma once

#include "cgt/group.hpp"
#include "cgt/verifier.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cgt {

enum class GroupFormat { Cayley, Perm, Recipe };

/// "degree" as the first token means perm, an integer means cayley, anything else a recipe.
GroupFormat detect_format(const std::string& text);

/// "n" followed by n rows of n indices. Throws InputError / AxiomError.
Group parse_cayley(const std::string& text, std::size_t cap = kDefaultOrderCap);
std::string format_cayley(const Group& g);

/// "degree d" followed by one generator per line as an image list.
Group parse_perm(const std::string& text, std::size_t cap = kDefaultOrderCap);
/// Right regular representation of the greedy generators; parse_perm(format_perm(G)) == G.
std::string format_perm(const Group& g);

/// Evaluates the construction grammar, e.g. "dp(sym(3),cyclic(2))" or
/// "nsd(alt(4),pcore(2))". The result is labelled with the recipe text.
Group build_recipe(const std::string& recipe, std::size_t cap = kDefaultOrderCap);

/// A path to a group file (any format) or, when no such file exists, an inline recipe.
Group load_group(const std::string& path_or_recipe, std::size_t cap = kDefaultOrderCap);
void save_group(const Group& g, const std::string& path, GroupFormat format);

std::string read_file(const std::string& path);

/// One JSON object per line with sorted keys. Timings are left out unless requested
/// so that report files are byte-stable.
std::string report_line(const VerificationReport& r, bool timings = false);

struct ReportMeta {
  std::size_t max_order = 0;
  std::string families;
  std::string lemmas;
  std::uint64_t seed = 0;
};

void write_report(std::ostream& out, const ScanResult& result, const ReportMeta& meta, bool timings = false);
/// Fixed-width per-lemma counts and theorem cells.
std::string summary_table(const ScanSummary& s);

}  // namespace cgt

#include "cgt/io.hpp"

#include "cgt/constructions.hpp"
#include "cgt/kernel.hpp"
#include "cgt/structure.hpp"

#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cgt {

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

std::uint64_t to_number(const std::string& tok, const std::string& what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError(what + ": expected a non-negative integer, got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::out_of_range&) {
    throw InputError(what + ": number too large: " + tok);
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

GroupFormat detect_format(const std::string& text) {
  const auto toks = tokens_of(text);
  if (toks.empty()) throw InputError("empty group description");
  if (toks.front() == "degree") return GroupFormat::Perm;
  if (std::all_of(toks.front().begin(), toks.front().end(), [](unsigned char c) { return std::isdigit(c); }))
    return GroupFormat::Cayley;
  return GroupFormat::Recipe;
}

// --- cayley -----------------------------------------------------------------

Group parse_cayley(const std::string& text, std::size_t cap) {
  const auto toks = tokens_of(text);
  if (toks.empty()) throw InputError("cayley: empty file");
  const std::uint64_t n = to_number(toks[0], "cayley order");
  if (n == 0) throw InputError("cayley: order must be positive");
  if (n > cap) throw InputError("cayley: order " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
  if (toks.size() != 1 + n * n) {
    std::ostringstream msg;
    msg << "cayley: expected " << n * n << " table entries, found " << toks.size() - 1;
    throw InputError(msg.str());
  }
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const std::uint64_t v = to_number(toks[1 + i], "cayley entry");
    if (v >= n) {
      std::ostringstream msg;
      msg << "closure: entry at (" << i / n << "," << i % n << ") is " << v << ", outside [0," << n << ")";
      throw AxiomError("closure", {static_cast<Elem>(i / n), static_cast<Elem>(i % n)}, msg.str());
    }
    table[i] = static_cast<Elem>(v);
  }
  return Group::from_table(n, std::move(table));
}

std::string format_cayley(const Group& g) {
  std::ostringstream out;
  const std::size_t n = g.order();
  out << n << '\n';
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  return out.str();
}

// --- perm -------------------------------------------------------------------

Group parse_perm(const std::string& text, std::size_t cap) {
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<std::vector<std::uint32_t>> gens;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (!have_degree) {
      if (toks.size() != 2 || toks[0] != "degree") throw InputError("perm: first line must be 'degree d'");
      degree = to_number(toks[1], "perm degree");
      if (degree == 0) throw InputError("perm: degree must be positive");
      have_degree = true;
      continue;
    }
    if (toks.size() != degree)
      throw InputError("perm: generator " + std::to_string(gens.size()) + " has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(degree));
    std::vector<std::uint32_t> p;
    for (const auto& t : toks) p.push_back(static_cast<std::uint32_t>(to_number(t, "perm image")));
    gens.push_back(std::move(p));
  }
  if (!have_degree) throw InputError("perm: missing 'degree d' line");
  return permutation_group(degree, gens, {}, cap);
}

std::string format_perm(const Group& g) {
  std::ostringstream out;
  const std::size_t n = g.order();
  out << "degree " << n << '\n';
  for (Elem s : g.generators()) {
    for (Elem x = 0; x < n; ++x) out << (x ? " " : "") << g.mul(x, s);
    out << '\n';
  }
  return out.str();
}

// --- recipes ----------------------------------------------------------------

namespace {

struct Term {
  std::string name;
  std::vector<Term> args;
  bool call = false;

  std::string text() const {
    if (!call) return name;
    std::string s = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i].text();
    return s + ")";
  }
};

class RecipeParser {
 public:
  explicit RecipeParser(const std::string& s) : s_(s) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + s_.substr(pos_, 1) + "'");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    throw InputError("recipe '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + what);
  }
  Term term() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != ')' && s_[pos_] != ',') ++pos_;
    std::string word = s_.substr(start, pos_ - start);
    while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) word.pop_back();
    if (word.empty()) error("expected a name or number");
    Term t{word, {}, false};
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      t.call = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return t;
      }
      for (;;) {
        t.args.push_back(term());
        skip_ws();
        if (pos_ >= s_.size()) error("missing ')'");
        if (s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        error("expected ',' or ')'");
      }
    }
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::uint64_t num(const Term& t) {
  if (t.call) throw InputError("expected a number, got " + t.text());
  return to_number(t.name, "recipe argument");
}

std::vector<std::uint64_t> nums(const Term& t, std::size_t from = 0) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = from; i < t.args.size(); ++i) out.push_back(num(t.args[i]));
  return out;
}

void arity(const Term& t, std::size_t n) {
  if (t.args.size() != n)
    throw InputError(t.name + " takes " + std::to_string(n) + " argument(s), got " + std::to_string(t.args.size()));
}

Group eval(const Term& t, std::size_t cap);

Subgroup eval_subgroup(const Group& g, const Term& t) {
  const std::string& n = t.name;
  if (!t.call) {
    if (n == "fitting") return fitting_subgroup(g);
    if (n == "center" || n == "centre") return center(g);
    if (n == "derived") return commutator_subgroup(g);
    if (n == "trivial") return Subgroup::trivial(g);
    if (n == "whole") return Subgroup::whole(g);
  } else {
    if (n == "sylow") return arity(t, 1), sylow_subgroup(g, num(t.args[0]));
    if (n == "pcore") return arity(t, 1), p_core(g, num(t.args[0]));
    if (n == "gen") {
      std::vector<Elem> gens;
      for (auto v : nums(t)) {
        if (v >= g.order()) throw InputError("gen(): element " + std::to_string(v) + " out of range");
        gens.push_back(static_cast<Elem>(v));
      }
      return subgroup_closure(g, gens);
    }
  }
  throw InputError("unknown subgroup selector '" + t.text() + "'");
}

Group eval(const Term& t, std::size_t cap) {
  const std::string& n = t.name;
  if (!t.call) {
    if (n == "quaternion8") return quaternion8();
    if (std::filesystem::is_regular_file(n)) return load_group(n, cap);
    throw InputError("unknown group '" + n + "'");
  }
  auto check = [&](const Group& g) {
    if (g.order() > cap) throw InputError(t.text() + " exceeds the order cap of " + std::to_string(cap));
    return g;
  };
  if (n == "cyclic") return arity(t, 1), check(cyclic(num(t.args[0])));
  if (n == "abelian") return check(abelian(nums(t)));
  if (n == "dihedral") return arity(t, 1), check(dihedral(num(t.args[0])));
  if (n == "sym" || n == "symmetric") return arity(t, 1), check(symmetric(num(t.args[0])));
  if (n == "alt" || n == "alternating") return arity(t, 1), check(alternating(num(t.args[0])));
  if (n == "frobenius") return arity(t, 2), check(frobenius(num(t.args[0]), num(t.args[1])));
  if (n == "dp") return arity(t, 2), direct_product(eval(t.args[0], cap), eval(t.args[1], cap), cap);
  if (n == "sd") {
    if (t.args.size() < 2) throw InputError("sd takes (A, cyclic(m), images...)");
    const Term& act = t.args[1];
    if (!act.call || act.name != "cyclic" || act.args.size() != 1)
      throw InputError("sd: the acting group must be written cyclic(m)");
    const Group a = eval(t.args[0], cap);
    std::vector<Elem> images;
    for (auto v : nums(t, 2)) images.push_back(static_cast<Elem>(v));
    return semidirect_product(ActionSpec::from_generator_images(a, num(act.args[0]), images), cap);
  }
  if (n == "nsd") {
    arity(t, 2);
    const Group g = eval(t.args[0], cap);
    return natural_semidirect(g, eval_subgroup(g, t.args[1])).group;
  }
  throw InputError("unknown construction '" + n + "'");
}

}  // namespace

Group build_recipe(const std::string& recipe, std::size_t cap) {
  const Term t = RecipeParser(recipe).parse();
  return eval(t, cap).relabelled(t.text());
}

Group load_group(const std::string& path_or_recipe, std::size_t cap) {
  if (!std::filesystem::is_regular_file(path_or_recipe)) return build_recipe(path_or_recipe, cap);
  const std::string text = read_file(path_or_recipe);
  Group g;
  switch (detect_format(text)) {
    case GroupFormat::Cayley: g = parse_cayley(text, cap); break;
    case GroupFormat::Perm: g = parse_perm(text, cap); break;
    case GroupFormat::Recipe: {
      std::string line = text;
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
      return build_recipe(line, cap);
    }
  }
  return g.relabelled(std::filesystem::path(path_or_recipe).filename().string());
}

void save_group(const Group& g, const std::string& path, GroupFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  switch (format) {
    case GroupFormat::Cayley: out << format_cayley(g); break;
    case GroupFormat::Perm: out << format_perm(g); break;
    case GroupFormat::Recipe:
      if (g.label().empty()) throw InputError("group has no recipe label to save");
      out << g.label() << '\n';
      break;
  }
  if (!out) throw InputError("failed writing " + path);
}

// --- reports ----------------------------------------------------------------

namespace {

nlohmann::json record_json(const VerificationReport& r, bool timings) {
  nlohmann::json j;
  j["group"] = r.group;
  j["lemma"] = r.lemma;
  j["subject"] = r.subject;
  j["status"] = to_string(r.status);
  j["note"] = r.note;
  j["witness"] = nlohmann::json::object();
  for (const auto& [k, v] : r.witness) j["witness"][k] = v;
  j["tuples_checked"] = r.tuples_checked;
  j["tuples_skipped"] = r.tuples_skipped;
  j["skip_reasons"] = nlohmann::json::object();
  for (const auto& [k, v] : r.skip_reasons) j["skip_reasons"][k] = v;
  if (timings) j["millis"] = r.millis;
  return j;
}

}  // namespace

std::string report_line(const VerificationReport& r, bool timings) { return record_json(r, timings).dump(); }

void write_report(std::ostream& out, const ScanResult& result, const ReportMeta& meta, bool timings) {
  for (const auto& r : result.records) out << report_line(r, timings) << '\n';
  const ScanSummary& s = result.summary;
  nlohmann::json j;
  j["groups"] = s.groups;
  j["max_order"] = meta.max_order;
  j["families"] = meta.families;
  j["lemmas"] = meta.lemmas;
  j["seed"] = meta.seed;
  j["by_lemma"] = nlohmann::json::object();
  for (const auto& [lemma, counts] : s.by_lemma)
    for (Status st : {Status::Pass, Status::Fail, Status::Skip}) {
      auto it = counts.find(st);
      j["by_lemma"][lemma][to_string(st)] = it == counts.end() ? 0 : it->second;
    }
  j["cells"] = nlohmann::json::array();
  for (const auto& [cell, count] : s.cells)
    j["cells"].push_back({{"a_group", std::get<0>(cell)},
                          {"norms_in_index_set", std::get<1>(cell)},
                          {"abelian", std::get<2>(cell)},
                          {"count", count}});
  j["counterexamples"] = s.counterexamples;
  if (s.explore)
    j["explore"] = {{"groups", s.explore->groups},
                    {"perfect_holds", s.explore->perfect_holds},
                    {"primeiro_holds", s.explore->primeiro_holds},
                    {"segundo_holds", s.explore->segundo_holds}};
  out << nlohmann::json{{"summary", j}}.dump() << '\n';
}

std::string summary_table(const ScanSummary& s) {
  std::ostringstream out;
  out << "groups scanned: " << s.groups << "\n\n";
  out << std::left << std::setw(14) << "lemma" << std::right << std::setw(8) << "PASS" << std::setw(8) << "FAIL"
      << std::setw(8) << "SKIP" << '\n';
  auto get = [](const std::map<Status, std::uint64_t>& m, Status st) {
    auto it = m.find(st);
    return it == m.end() ? std::uint64_t{0} : it->second;
  };
  for (const auto& [lemma, counts] : s.by_lemma)
    out << std::left << std::setw(14) << lemma << std::right << std::setw(8) << get(counts, Status::Pass)
        << std::setw(8) << get(counts, Status::Fail) << std::setw(8) << get(counts, Status::Skip) << '\n';
  out << "\ntheorem cells\n";
  out << std::left << std::setw(10) << "A-group" << std::setw(12) << "norms in N" << std::setw(10) << "abelian"
      << std::right << std::setw(8) << "groups" << '\n';
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& [cell, count] : s.cells)
    out << std::left << std::setw(10) << yn(std::get<0>(cell)) << std::setw(12) << yn(std::get<1>(cell))
        << std::setw(10) << yn(std::get<2>(cell)) << std::right << std::setw(8) << count << '\n';
  out << "\ncounterexamples: " << s.counterexamples.size() << '\n';
  for (const auto& c : s.counterexamples) out << "  " << c << '\n';
  if (s.explore) {
    out << "\nexploratory predicates over " << s.explore->groups << " centerless A-groups with a complement\n";
    out << "  perfect  holds in " << s.explore->perfect_holds << '\n';
    out << "  primeiro holds in " << s.explore->primeiro_holds << '\n';
    out << "  segundo  holds in " << s.explore->segundo_holds << '\n';
  }
  return out.str();
}

}  // namespace cgt

#include "earring/cli.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "earring/archipelago.hpp"
#include "earring/dsl.hpp"
#include "earring/families.hpp"
#include "earring/limits.hpp"
#include "earring/transfinite.hpp"
#include "earring/words.hpp"

namespace earring::cli {

namespace {

using nlohmann::json;
using words::ReducedWord;

// Command-line mistakes that CLI11 cannot catch for us; exit status 2.
struct UsageError {
  std::string message;
};

const std::vector<std::string> kFamilyNames = {
    "counterexample", "intro-trivial", "intro-essential", "cor1", "cor2"};

// Extra knobs for the two parameterized families.
struct ElementOptions {
  std::string word = "x3";  // cor1: the conjugated word, indices >= 3
  std::string odds;         // cor2: odds assigned 1, comma-separated
};

std::set<int> parse_support(const std::string& text) {
  std::set<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::size_t lo = pos;
    std::size_t hi = comma;
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1])))
      --hi;
    if (lo == hi)
      throw std::invalid_argument("--odds expects comma-separated integers");
    int value = 0;
    auto [next, ec] = std::from_chars(text.data() + lo, text.data() + hi, value);
    if (ec != std::errc() || next != text.data() + hi)
      throw std::invalid_argument("--odds expects comma-separated integers");
    out.insert(value);
    pos = comma + 1;
  }
  return out;
}

ReducedWord word_from_expression(const std::string& text) {
  return words::reduce(dsl::evaluate(*dsl::parse(text)));
}

// Family names take precedence; everything else is read as a word
// expression and wrapped as a finite element.
transfinite::TransfiniteElement resolve_element(const std::string& token,
                                                const ElementOptions& opts) {
  if (token == "counterexample") return transfinite::counterexample_element();
  if (token == "intro-trivial") return families::intro_trivial_element();
  if (token == "intro-essential") return families::intro_essential_element();
  if (token == "cor1")
    return families::cor1_element(
        transfinite::finite_element(word_from_expression(opts.word)));
  if (token == "cor2")
    return families::permutation_element(families::tau_of(
        families::OddChoice::from_support(parse_support(opts.odds))));
  return transfinite::finite_element(word_from_expression(token));
}

std::string load_text(const std::string& expr, const std::string& file) {
  if (expr.empty() == file.empty())
    throw UsageError{"provide exactly one of <expr> or --file"};
  if (!expr.empty()) return expr;
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<ReducedWord> evaluate_lines(const std::string& text) {
  std::vector<dsl::ParsedLine> lines = dsl::parse_lines(text);
  if (lines.empty()) throw std::runtime_error("no expressions in input");
  std::vector<ReducedWord> out;
  out.reserve(lines.size());
  for (const dsl::ParsedLine& line : lines)
    out.push_back(words::reduce(dsl::evaluate(*line.expr)));
  return out;
}

void print_words(const std::vector<ReducedWord>& ws, const std::string& format,
                 std::ostream& out) {
  if (format == "json") {
    json j;
    j["words"] = json::array();
    for (const ReducedWord& w : ws) j["words"].push_back(dsl::format(w));
    out << j.dump(2) << "\n";
    return;
  }
  for (const ReducedWord& w : ws) out << dsl::format(w) << "\n";
}

json verdict_json(const archipelago::KernelVerdict& verdict) {
  json j;
  if (const auto* in = std::get_if<archipelago::InKernelVerdict>(&verdict)) {
    j["verdict"] = "in-kernel";
    j["N"] = in->threshold;
    j["depth"] = in->verified_depth;
  } else if (const auto* refuted =
                 std::get_if<archipelago::RefutedVerdict>(&verdict)) {
    j["verdict"] = "refuted";
    j["N-max"] = refuted->threshold_max;
    j["depth"] = refuted->depth;
    j["witnesses"] = json::array();
    for (const auto& [threshold, witness] : refuted->witnesses)
      j["witnesses"].push_back({{"N", threshold},
                                {"level", witness.level},
                                {"word", dsl::format(witness.word)}});
  } else {
    const auto& unknown = std::get<archipelago::UnknownVerdict>(verdict);
    j["verdict"] = "unknown";
    j["N-max"] = unknown.threshold_max;
    j["depth"] = unknown.depth;
  }
  return j;
}

void print_classification(const transfinite::HEClassification& result,
                          int depth, const std::string& format,
                          std::ostream& out) {
  if (format == "json") {
    json j;
    if (const auto* member = std::get_if<transfinite::MemberEvidence>(&result)) {
      j["classification"] = "member";
      j["depth"] = member->verified_depth;
      j["bounds"] = json::array();
      for (const auto& [index, cap] : member->bounds)
        j["bounds"].push_back(json::array({index, cap}));
    } else if (const auto* witness =
                   std::get_if<transfinite::NotMemberEvidence>(&result)) {
      j["classification"] = "not-member";
      j["witness"] = witness->witness_index;
      j["depth"] = depth;
      j["growth"] = json::array();
      for (const auto& [level, count] : witness->growth_samples)
        j["growth"].push_back(json::array({level, count}));
    } else {
      j["classification"] = "unknown";
      j["depth"] = std::get<transfinite::UnknownMembership>(result).verified_depth;
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (const auto* member = std::get_if<transfinite::MemberEvidence>(&result)) {
    out << "classification=member depth=" << member->verified_depth << "\n";
    for (const auto& [index, cap] : member->bounds)
      out << "bound x" << index << "=" << cap << "\n";
  } else if (const auto* witness =
                 std::get_if<transfinite::NotMemberEvidence>(&result)) {
    out << "classification=not-member witness=x" << witness->witness_index
        << " depth=" << depth << "\n";
    for (const auto& [level, count] : witness->growth_samples)
      out << "growth level=" << level << " count=" << count << "\n";
  } else {
    out << "classification=unknown depth="
        << std::get<transfinite::UnknownMembership>(result).verified_depth
        << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"word calculator for the earring tower and its collapse"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_element_options = [](CLI::App* cmd, ElementOptions& opts) {
    cmd->add_option("--word", opts.word,
                    "conjugated word for the cor1 family (indices >= 3)");
    cmd->add_option("--odds", opts.odds,
                    "odds assigned 1 for the cor2 family, comma-separated");
  };

  std::string reduce_expr, reduce_file, reduce_format = "text";
  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "freely reduce word expressions");
  reduce_cmd->add_option("expr", reduce_expr, "word expression");
  reduce_cmd->add_option("--file", reduce_file,
                         "expressions file, one per line");
  add_format(reduce_cmd, reduce_format);

  std::string project_token, project_format = "text";
  ElementOptions project_opts;
  int project_level = 0;
  CLI::App* project_cmd = app.add_subcommand(
      "project", "level projection of a family element or expression");
  project_cmd->add_option("element", project_token,
                          "family name or word expression")
      ->required();
  project_cmd->add_option("--level", project_level, "projection level")
      ->required()
      ->check(CLI::PositiveNumber);
  add_element_options(project_cmd, project_opts);
  add_format(project_cmd, project_format);

  std::string subst_expr, subst_file, subst_format = "text";
  int subst_threshold = 0;
  CLI::App* subst_cmd = app.add_subcommand(
      "substitute", "collapse generators up to a threshold index");
  subst_cmd->add_option("expr", subst_expr, "word expression");
  subst_cmd->add_option("--file", subst_file, "expressions file, one per line");
  subst_cmd->add_option("--N", subst_threshold, "collapse threshold")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(subst_cmd, subst_format);

  std::string kernel_token, kernel_format = "text";
  ElementOptions kernel_opts;
  int kernel_n_max = archipelago::kDefaultThresholdMax;
  int kernel_depth = archipelago::kDefaultDepth;
  CLI::App* kernel_cmd = app.add_subcommand(
      "kernel", "search for a collapse threshold certifying triviality");
  kernel_cmd->add_option("element", kernel_token,
                         "family name or word expression")
      ->required();
  kernel_cmd->add_option("--n-max", kernel_n_max, "largest threshold to try")
      ->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--depth", kernel_depth, "verification depth")
      ->check(CLI::PositiveNumber);
  add_element_options(kernel_cmd, kernel_opts);
  add_format(kernel_cmd, kernel_format);

  std::string classify_token, classify_format = "text";
  ElementOptions classify_opts;
  int classify_depth = archipelago::kDefaultDepth;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "bounded-occurrence membership classification");
  classify_cmd->add_option("element", classify_token,
                           "family name or word expression")
      ->required();
  classify_cmd->add_option("--depth", classify_depth, "sampling depth")
      ->check(CLI::PositiveNumber);
  add_element_options(classify_cmd, classify_opts);
  add_format(classify_cmd, classify_format);

  std::string family_name, family_format = "text";
  ElementOptions family_opts;
  int family_depth = archipelago::kDefaultDepth;
  CLI::App* family_cmd = app.add_subcommand(
      "family", "show a named family element, or list the family names");
  family_cmd->add_option("name", family_name, "family name, or \"list\"")
      ->required();
  family_cmd->add_option("--depth", family_depth, "levels to display")
      ->check(CLI::PositiveNumber);
  add_element_options(family_cmd, family_opts);
  add_format(family_cmd, family_format);

  std::string harness_target, harness_format = "text";
  int harness_count = 16;
  int harness_n_max = archipelago::kDefaultThresholdMax;
  int harness_depth = archipelago::kDefaultDepth;
  CLI::App* harness_cmd = app.add_subcommand(
      "harness", "pairwise distinctness harness over a family");
  harness_cmd->add_option("target", harness_target, "family to sample")
      ->required()
      ->check(CLI::IsMember({"cor2"}));
  harness_cmd->add_option("--count", harness_count, "number of elements")
      ->check(CLI::PositiveNumber);
  harness_cmd->add_option("--n-max", harness_n_max, "largest threshold")
      ->check(CLI::PositiveNumber);
  harness_cmd->add_option("--depth", harness_depth, "search depth per pair")
      ->check(CLI::PositiveNumber);
  add_format(harness_cmd, harness_format);

  try {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("earring");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& arg : storage) argv.push_back(arg.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (reduce_cmd->parsed()) {
      print_words(evaluate_lines(load_text(reduce_expr, reduce_file)),
                  reduce_format, out);
    } else if (project_cmd->parsed()) {
      ReducedWord w = transfinite::projection_at(
          resolve_element(project_token, project_opts), project_level);
      if (project_format == "json") {
        json j;
        j["level"] = project_level;
        j["word"] = dsl::format(w);
        out << j.dump(2) << "\n";
      } else {
        out << dsl::format(w) << "\n";
      }
    } else if (subst_cmd->parsed()) {
      std::vector<ReducedWord> ws =
          evaluate_lines(load_text(subst_expr, subst_file));
      for (ReducedWord& w : ws)
        w = archipelago::substitute_collapse(w, subst_threshold);
      if (subst_format == "json") {
        json j;
        j["N"] = subst_threshold;
        j["words"] = json::array();
        for (const ReducedWord& w : ws) j["words"].push_back(dsl::format(w));
        out << j.dump(2) << "\n";
      } else {
        print_words(ws, subst_format, out);
      }
    } else if (kernel_cmd->parsed()) {
      archipelago::KernelVerdict verdict = archipelago::kernel_search(
          resolve_element(kernel_token, kernel_opts), kernel_n_max,
          kernel_depth);
      if (kernel_format == "json")
        out << verdict_json(verdict).dump(2) << "\n";
      else
        out << archipelago::to_text(verdict);
    } else if (classify_cmd->parsed()) {
      transfinite::HEClassification result = transfinite::classify_HE(
          resolve_element(classify_token, classify_opts), classify_depth);
      print_classification(result, classify_depth, classify_format, out);
    } else if (family_cmd->parsed()) {
      if (family_name == "list") {
        if (family_format == "json") {
          json j;
          j["families"] = kFamilyNames;
          out << j.dump(2) << "\n";
        } else {
          for (const std::string& name : kFamilyNames) out << name << "\n";
        }
      } else {
        limits::TruncatedSequence window = transfinite::to_truncated(
            resolve_element(family_name, family_opts), family_depth);
        if (family_format == "json") {
          json j;
          j["name"] = family_name;
          j["base"] = window.base();
          j["depth"] = window.depth();
          j["levels"] = json::array();
          for (int n = window.base(); n <= window.depth(); ++n)
            j["levels"].push_back(dsl::format(window.at(n)));
          out << j.dump(2) << "\n";
        } else {
          out << limits::to_text(window);
        }
      }
    } else if (harness_cmd->parsed()) {
      std::vector<transfinite::TransfiniteElement> elements;
      elements.reserve(static_cast<std::size_t>(harness_count));
      for (families::OddChoice& f :
           families::inequivalent_assignments(harness_count))
        elements.push_back(families::permutation_element(families::tau_of(f)));
      families::DistinctnessReport report = families::distinctness_harness(
          elements, harness_n_max, harness_depth);
      if (harness_format == "json") {
        std::size_t unseparated = 0;
        json records = json::array();
        for (const families::PairRecord& pair : report.pairs) {
          bool gap = false;
          for (int level : pair.separation_levels)
            if (level < 0) gap = true;
          if (gap) ++unseparated;
          records.push_back({{"a", pair.first},
                             {"b", pair.second},
                             {"levels", pair.separation_levels}});
        }
        json j;
        j["elements"] = report.element_count;
        j["N-max"] = report.threshold_max;
        j["depth"] = report.depth;
        j["pairs"] = report.pairs.size();
        j["unseparated"] = unseparated;
        j["records"] = std::move(records);
        out << j.dump(2) << "\n";
      } else {
        out << families::to_text(report);
      }
    }
    return 0;
  } catch (const UsageError& usage) {
    err << "error: " << usage.message << "\n";
    return 2;
  } catch (const dsl::ParseError& parse) {
    err << "error: " << parse.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace earring::cli

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "common.hpp"

namespace umrow::cli {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kParse;
    case ErrorKind::DeskScaleLimit: return kDeskScale;
    default: return kPrecondition;
  }
}

std::uint64_t effective_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("UMROW_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0') fail(ErrorKind::Parse, "UMROW_SEED is not an integer");
    return v;
  }
  return fallback;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Vec parse_vec(const std::string& text) {
  Vec v;
  for (const auto& s : split_commas(text)) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad integer vector '" + text + "'");
    }
  }
  return v;
}

Form parse_form_kind(const std::string& text) {
  if (text == "symplectic") return Form::Symplectic;
  if (text == "orthogonal") return Form::Orthogonal;
  fail(ErrorKind::Parse, "unknown form '" + text + "'");
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
  const std::string ext = ".json";
  std::string stem = path;
  if (stem.size() > ext.size() && stem.compare(stem.size() - ext.size(), ext.size(), ext) == 0)
    stem.resize(stem.size() - ext.size());
  return stem + "." + suffix + ext;
}

void print_json(const json& j) { std::cout << io::canonical(j); }

}  // namespace umrow::cli

int main(int argc, char** argv) {
  using namespace umrow::cli;
  CLI::App app{"umrow: unimodular rows over monoid rings"};
  app.require_subcommand(1);
  std::function<int()> action;

  MonoidOptions mo;
  auto* monoid = app.add_subcommand("monoid", "affine monoid geometry");
  monoid->require_subcommand(1);
  auto* analyze = monoid->add_subcommand("analyze", "normality, seminormality, complexity");
  analyze->add_option("path", mo.path, "monoid JSON")->required();
  analyze->add_option("--seminormality-bound", mo.seminormality_bound, "candidate sup-norm cap");
  analyze->callback([&] { action = [&] { return monoid_analyze(mo); }; });
  auto* hilbert = monoid->add_subcommand("hilbert", "Hilbert basis of the normalization");
  hilbert->add_option("path", mo.path, "monoid JSON")->required();
  hilbert->callback([&] { action = [&] { return monoid_hilbert(mo); }; });
  auto* decompose = monoid->add_subcommand("decompose", "pyramidal decomposition");
  decompose->add_option("path", mo.path, "monoid JSON")->required();
  decompose->add_option("--apex", mo.apex, "apex generator, e.g. 1,0");
  decompose->callback([&] { action = [&] { return monoid_decompose(mo); }; });

  RowOptions ro;
  auto* row = app.add_subcommand("row", "unimodular rows");
  row->require_subcommand(1);
  auto* check = row->add_subcommand("check", "search for a unimodularity witness");
  check->add_option("path", ro.path, "row JSON")->required();
  check->add_option("--bound", ro.bound, "witness degree bound (monoid rings)");
  check->callback([&] { action = [&] { return row_check(ro); }; });
  auto* reduce = row->add_subcommand("reduce", "reduce a row to e1 and write a transcript");
  reduce->add_option("path", ro.path, "row JSON")->required();
  reduce->add_option("--procedure", ro.procedure, "field|semilocal|radical|relative|pivot|search")
      ->check(CLI::IsMember({"field", "semilocal", "radical", "relative", "pivot", "search"}));
  reduce->add_option("--form", ro.form, "symplectic|orthogonal (overrides the file)")
      ->check(CLI::IsMember({"symplectic", "orthogonal"}));
  reduce->add_option("--relative-ideal", ro.relative_ideal, "comma-separated generators");
  reduce->add_option("-o,--out", ro.out, "transcript path");
  reduce->add_option("--max-expansions", ro.max_expansions, "search budget")
      ->check(CLI::PositiveNumber);
  reduce->add_option("--max-degree", ro.max_degree, "search pool degree")
      ->check(CLI::NonNegativeNumber);
  reduce->add_option("--seed", ro.seed, "search seed (UMROW_SEED overrides)");
  reduce->callback([&] { action = [&] { return row_reduce(ro); }; });

  std::string transcript_path;
  auto* transcript = app.add_subcommand("transcript", "transcript verification");
  transcript->require_subcommand(1);
  auto* replay = transcript->add_subcommand("replay", "recompute a transcript");
  replay->add_option("path", transcript_path, "transcript JSON")->required();
  replay->callback([&] { action = [&] { return transcript_replay(transcript_path); }; });

  GroupOptions go;
  auto* group = app.add_subcommand("group", "classical group matrices");
  group->require_subcommand(1);
  auto* gcheck = group->add_subcommand("check", "test membership in the group");
  gcheck->add_option("path", go.path, "matrix JSON")->required();
  gcheck->callback([&] { action = [&] { return group_check(go); }; });
  auto* descend = group->add_subcommand("descend", "stabilization descent");
  descend->add_option("path", go.path, "matrix JSON")->required();
  descend->add_option("--word-out", go.word_out, "epsilon word path");
  descend->add_option("--matrix-out", go.matrix_out, "beta matrix path");
  descend->callback([&] { action = [&] { return group_descend(go); }; });

  CorpusOptions co;
  auto* corpus = app.add_subcommand("corpus", "seeded experiment corpora");
  corpus->require_subcommand(1);
  auto* generate = corpus->add_subcommand("generate", "write a corpus and its manifest");
  generate->add_option("config", co.config, "config JSON")->required();
  generate->add_option("-o,--out", co.out, "output directory")->required();
  generate->callback([&] { action = [&] { return corpus_generate(co); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  try {
    return action();
  } catch (const umrow::Error& e) {
    std::cerr << "error: " << umrow::to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kParse;
  }
}

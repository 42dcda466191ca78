#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "umrow/json_io.hpp"

namespace umrow::cli {

using io::json;

enum Exit : int { kOk = 0, kFail = 1, kParse = 2, kDeskScale = 3, kPrecondition = 4 };

int exit_code(ErrorKind kind);

// UMROW_SEED, when set, overrides any seed from flags or config.
std::uint64_t effective_seed(std::uint64_t fallback);

// "1,0,-2" -> {1, 0, -2}.
Vec parse_vec(const std::string& text);
std::vector<std::string> split_commas(const std::string& text);

Form parse_form_kind(const std::string& text);

// "out.json" next to `path`: foo.json -> foo.<suffix>.json.
std::string sibling_path(const std::string& path, const std::string& suffix);

void print_json(const json& j);

struct MonoidOptions {
  std::string path;
  std::optional<long long> seminormality_bound;
  std::string apex;
};

struct RowOptions {
  std::string path;
  std::string procedure = "semilocal";
  std::string form;
  std::string relative_ideal;
  std::string out;
  std::optional<long long> bound;
  int max_expansions = SearchBudget{}.max_expansions;
  long long max_degree = SearchBudget{}.max_degree;
  std::uint64_t seed = 0;
};

struct GroupOptions {
  std::string path;
  std::string word_out;
  std::string matrix_out;
};

struct CorpusOptions {
  std::string config;
  std::string out;
};

int monoid_analyze(const MonoidOptions& o);
int monoid_hilbert(const MonoidOptions& o);
int monoid_decompose(const MonoidOptions& o);

int row_check(const RowOptions& o);
int row_reduce(const RowOptions& o);
int transcript_replay(const std::string& path);

int group_check(const GroupOptions& o);
int group_descend(const GroupOptions& o);

int corpus_generate(const CorpusOptions& o);

}  // namespace umrow::cli

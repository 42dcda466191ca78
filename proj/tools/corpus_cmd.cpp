#include <openssl/evp.h>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "common.hpp"
#include "umrow/row_corpus.hpp"

namespace umrow::cli {

namespace {

namespace fs = std::filesystem;
using R = RingElement;
using MR = MonoidRingElement;

// D = max(4, d + 2) symplectic, max(6, 2d + 4) orthogonal.
struct StabilityBound {
  long long d = 0;
  Form kind = Form::Symplectic;
  long long value() const {
    return kind == Form::Symplectic ? std::max(4LL, d + 2) : std::max(6LL, 2 * d + 4);
  }
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  Form form = Form::Symplectic;
  json carrier;
  std::vector<int> sizes;
  std::map<std::string, long long> counts;
  std::map<std::string, long long> bounds;
  std::optional<json> relative_ideal;
  std::optional<long long> dimension;

  long long bound(const std::string& key, long long fallback) const {
    auto it = bounds.find(key);
    return it == bounds.end() ? fallback : it->second;
  }
};

const std::vector<std::string> kCountKeys{"rows", "matrices", "monoids"};

ExperimentConfig parse_config(const json& j) {
  return io::guarded([&] {
    ExperimentConfig c;
    require(j.is_object(), ErrorKind::Parse, "config must be an object");
    c.seed = j.at("seed").get<std::uint64_t>();
    c.form = parse_form_kind(j.at("form").get<std::string>());
    c.carrier = j.at("carrier");
    for (const auto& s : j.at("sizes")) {
      const int m = s.get<int>();
      require(m >= 4 && m % 2 == 0, ErrorKind::Parse, "sizes must be even and >= 4");
      c.sizes.push_back(m);
    }
    require(!c.sizes.empty(), ErrorKind::Parse, "sizes must be nonempty");
    for (const auto& [key, value] : j.at("counts").items()) {
      require(std::find(kCountKeys.begin(), kCountKeys.end(), key) != kCountKeys.end(),
              ErrorKind::Parse, "unknown count '" + key + "'");
      const long long n = value.get<long long>();
      require(n > 0, ErrorKind::Parse, "count '" + key + "' must be positive");
      c.counts[key] = n;
    }
    require(!c.counts.empty(), ErrorKind::Parse, "counts must be nonempty");
    if (j.contains("bounds")) {
      for (const auto& [key, value] : j.at("bounds").items()) {
        const long long n = value.get<long long>();
        require(n > 0, ErrorKind::Parse, "bound '" + key + "' must be positive");
        c.bounds[key] = n;
      }
    }
    if (j.contains("relative_ideal")) c.relative_ideal = j.at("relative_ideal");
    if (j.contains("dimension")) {
      c.dimension = j.at("dimension").get<long long>();
      require(*c.dimension >= 0, ErrorKind::Parse, "dimension must be nonnegative");
    }
    return c;
  });
}

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t k) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag * 1000003ULL + k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::Unsupported, "SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

std::string number(long long k, int width) {
  std::ostringstream out;
  out << std::setw(width) << std::setfill('0') << k;
  return out.str();
}

class Writer {
 public:
  explicit Writer(fs::path root) : root_(std::move(root)) {}

  void put(const std::string& rel, const json& doc) {
    const fs::path p = root_ / rel;
    fs::create_directories(p.parent_path());
    const std::string text = io::canonical(doc);
    io::write_file(p.string(), doc);
    files_.push_back({{"path", rel}, {"sha256", sha256_hex(text)}});
  }

  const json& files() const { return files_; }

 private:
  fs::path root_;
  json files_ = json::array();
};

void rows_over_ring(const ExperimentConfig& c, const Ring& ring, Writer& w) {
  require(ring.kind() == RingKind::IntegersMod, ErrorKind::Parse, "row corpora need Z/n or a monoid ring");
  std::optional<Ideal> I;
  if (c.relative_ideal) I = io::decode_ideal(*c.relative_ideal, ring);
  for (int m : c.sizes) {
    const FormKind f{c.form, m / 2};
    for (long long k = 0; k < c.counts.at("rows"); ++k) {
      Sampler s(item_seed(c.seed, 1, static_cast<std::uint64_t>(m) * 1000000 + k));
      auto entries = I ? random_relative_row(s, ring, I->divisor(), f) : random_unimodular_row(s, ring, f);
      UnimodularRow<R> u{f, entries, check_unimodular(entries), I};
      validate_row(u);
      w.put("rows/row-" + std::to_string(m) + "-" + number(k, 4) + ".json", io::encode(u));
    }
  }
}

void rows_over_monoid_ring(const ExperimentConfig& c, const MonoidRing& A, Writer& w) {
  const long long degree = c.bound("support_degree", 3);
  std::optional<Ideal> I;
  if (c.relative_ideal) I = io::decode_ideal(*c.relative_ideal, A.coeffs);
  require(!I, ErrorKind::Parse, "relative monoid-ring corpora are not supported");
  for (int m : c.sizes) {
    const FormKind f{c.form, m / 2};
    for (long long k = 0; k < c.counts.at("rows"); ++k) {
      Sampler s(item_seed(c.seed, 1, static_cast<std::uint64_t>(m) * 1000000 + k));
      auto entries = random_monoid_row(s, A, f, degree);
      UnimodularRow<MR> u{f, entries, check_unimodular(entries, 2 * degree), {}};
      validate_row(u);
      w.put("rows/row-" + std::to_string(m) + "-" + number(k, 4) + ".json", io::encode(u));
    }
  }
}

void matrices(const ExperimentConfig& c, const Ring& ring, Writer& w) {
  const long long length = c.bound("word_length", 20);
  const Integer d = c.relative_ideal ? io::decode_ideal(*c.relative_ideal, ring).divisor() : Integer(1);
  for (int m : c.sizes) {
    const FormKind f{c.form, m / 2};
    for (long long k = 0; k < c.counts.at("matrices"); ++k) {
      Sampler s(item_seed(c.seed, 2, static_cast<std::uint64_t>(m) * 1000000 + k));
      const auto a = random_matrix_fixing_last(s, ring, f, static_cast<int>(length), d);
      w.put("matrices/matrix-" + std::to_string(m) + "-" + number(k, 4) + ".json",
            {{"form", io::encode(f)}, {"carrier", io::encode_carrier(ring)}, {"matrix", io::encode(a)}});
    }
  }
}

void monoids(const ExperimentConfig& c, Writer& w) {
  const auto corpus = monoid_corpus(c.seed);
  const long long count = c.counts.at("monoids");
  require(count <= static_cast<long long>(corpus.size()), ErrorKind::Parse,
          "at most " + std::to_string(corpus.size()) + " monoids are available");
  for (long long k = 0; k < count; ++k) {
    json doc = io::encode(corpus[k].monoid);
    doc["name"] = corpus[k].name;
    w.put("monoids/monoid-" + number(k, 2) + ".json", doc);
  }
}

}  // namespace

int corpus_generate(const CorpusOptions& o) {
  json raw = io::read_file(o.config);
  ExperimentConfig c = parse_config(raw);
  c.seed = effective_seed(c.seed);
  raw["seed"] = c.seed;

  Writer w(o.out);
  if (c.counts.count("rows")) {
    if (io::is_monoid_carrier(c.carrier)) {
      rows_over_monoid_ring(c, io::decode_monoid_carrier(c.carrier), w);
    } else {
      rows_over_ring(c, io::decode_ring_carrier(c.carrier), w);
    }
  }
  if (c.counts.count("matrices")) {
    require(!io::is_monoid_carrier(c.carrier), ErrorKind::Parse, "matrix corpora need Z/n");
    const Ring ring = io::decode_ring_carrier(c.carrier);
    require(ring.kind() == RingKind::IntegersMod, ErrorKind::Parse, "matrix corpora need Z/n");
    matrices(c, ring, w);
  }
  if (c.counts.count("monoids")) monoids(c, w);

  json manifest{{"seed", c.seed}, {"config", raw}, {"files", w.files()}};
  if (c.dimension) {
    const StabilityBound b{*c.dimension, c.form};
    json below = json::array();
    for (int m : c.sizes)
      if (m < b.value()) below.push_back(m);
    manifest["stability_bound"] = {{"d", b.d}, {"value", b.value()}, {"sizes_below", below}};
  }
  io::write_file((fs::path(o.out) / "manifest.json").string(), manifest);
  std::cout << "seed: " << c.seed << "\n";
  std::cout << "files: " << w.files().size() << "\n";
  std::cout << "manifest: " << (fs::path(o.out) / "manifest.json").string() << "\n";
  return kOk;
}

}  // namespace umrow::cli

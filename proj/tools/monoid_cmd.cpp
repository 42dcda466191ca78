#include "common.hpp"

namespace umrow::cli {

namespace {

const char* status_name(SeminormalStatus s) {
  switch (s) {
    case SeminormalStatus::True: return "true";
    case SeminormalStatus::False: return "false";
    case SeminormalStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

json vec_list(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(io::encode(v));
  return out;
}

}  // namespace

int monoid_analyze(const MonoidOptions& o) {
  const AffineMonoid M = io::decode_monoid(io::read_file(o.path));
  json report{{"rank", M.rank()}, {"ambient_rank", M.ambient_rank()},
              {"positive", M.is_positive()}, {"generators", vec_list(M.generators())}};
  if (!M.is_positive()) {
    print_json(report);
    return kOk;
  }
  const bool normal = is_normal(M);
  const auto semi = is_seminormal(M, o.seminormality_bound);
  report["normal"] = normal;
  report["seminormal"] = status_name(semi.status);
  report["seminormal_certified"] = semi.certified;
  report["seminormality_bound"] = semi.bound;
  if (semi.witness) report["seminormal_witness"] = io::encode(*semi.witness);
  report["phi_simplicial"] = is_phi_simplicial(M);
  report["complexity"] = complexity(M);
  report["extremal_generators"] = normal ? vec_list(extremal_generators(M)) : json(nullptr);
  report["phi"] = io::encode(section_polytope(M));
  print_json(report);
  return kOk;
}

int monoid_hilbert(const MonoidOptions& o) {
  const AffineMonoid M = io::decode_monoid(io::read_file(o.path));
  require(M.is_positive(), ErrorKind::PositivityRequired, "Hilbert basis needs a positive monoid");
  print_json({{"hilbert_basis", vec_list(hilbert_basis(M.cone(), M.group_basis()))}});
  return kOk;
}

int monoid_decompose(const MonoidOptions& o) {
  const AffineMonoid M = io::decode_monoid(io::read_file(o.path));
  Vec apex;
  if (!o.apex.empty()) {
    apex = parse_vec(o.apex);
  } else {
    require(is_normal(M), ErrorKind::Precondition, "--apex is required for non-normal monoids");
    const auto ext = extremal_generators(M);
    require(!ext.empty(), ErrorKind::Precondition, "monoid has no extremal generator");
    apex = ext.front();
  }
  const auto P = pyramidal_decomposition(M, apex);
  print_json({{"apex", io::encode(P.apex)},
              {"whole", io::encode(P.whole)},
              {"delta", io::encode(P.delta)},
              {"gamma", io::encode(P.gamma)},
              {"common", io::encode(P.common)},
              {"degree_functional", io::encode(P.degree_functional)}});
  return kOk;
}

}  // namespace umrow::cli

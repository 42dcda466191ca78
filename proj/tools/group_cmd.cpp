#include <iostream>

#include "common.hpp"

namespace umrow::cli {

namespace {

using R = RingElement;
using MR = MonoidRingElement;

template <class E>
Matrix<E> load_matrix(const json& doc, const typename E::Carrier& c, FormKind& f) {
  f = io::decode_form(doc.at("form"));
  auto a = io::decode_matrix<E>(doc.at("matrix"), c);
  require(static_cast<int>(a.size()) == f.size(), ErrorKind::SizeMismatch,
          "matrix size differs from 2n");
  return a;
}

template <class E>
int check(const json& doc, const typename E::Carrier& c) {
  FormKind f;
  const auto a = load_matrix<E>(doc, c, f);
  const int m = f.size();
  bool fixes_last = true;
  for (int i = 0; i < m; ++i)
    fixes_last = fixes_last && a[i][m - 1] == (i == m - 1 ? E::one(c) : E::zero(c));
  std::cout << "in group: " << (is_in_group(a, f) ? "yes" : "no") << "\n";
  std::cout << "last column e_2n: " << (fixes_last ? "yes" : "no") << "\n";
  return kOk;
}

template <class E>
int descend(const json& doc, const typename E::Carrier& c, const GroupOptions& o) {
  FormKind f;
  const auto alpha = load_matrix<E>(doc, c, f);
  const auto d = stabilization_descent(alpha, f);
  const FormKind smaller{f.kind, f.n - 1};
  const bool rebuilt =
      matmul(word_matrix(d.epsilon, f, c), block_sum_identity2(d.beta, c)) == alpha;
  const bool beta_ok = is_in_group(d.beta, smaller);
  const std::string word_out = o.word_out.empty() ? sibling_path(o.path, "epsilon") : o.word_out;
  const std::string matrix_out = o.matrix_out.empty() ? sibling_path(o.path, "beta") : o.matrix_out;
  io::write_file(word_out, {{"form", io::encode(f)},
                            {"carrier", io::encode_carrier(c)},
                            {"word", io::encode(d.epsilon)}});
  io::write_file(matrix_out, {{"form", io::encode(smaller)},
                              {"carrier", io::encode_carrier(c)},
                              {"matrix", io::encode(d.beta)}});
  std::cout << "epsilon: " << word_out << " (" << token_count(d.epsilon) << " tokens)\n";
  std::cout << "beta: " << matrix_out << "\n";
  std::cout << "beta in group: " << (beta_ok ? "yes" : "no") << "\n";
  std::cout << "reconstruction: " << (rebuilt ? "OK" : "FAIL") << "\n";
  return rebuilt && beta_ok ? kOk : kFail;
}

}  // namespace

int group_check(const GroupOptions& o) {
  const json doc = io::read_file(o.path);
  const json& carrier = doc.at("carrier");
  if (io::is_monoid_carrier(carrier)) return check<MR>(doc, io::decode_monoid_carrier(carrier));
  return check<R>(doc, io::decode_ring_carrier(carrier));
}

int group_descend(const GroupOptions& o) {
  const json doc = io::read_file(o.path);
  const json& carrier = doc.at("carrier");
  if (io::is_monoid_carrier(carrier))
    return descend<MR>(doc, io::decode_monoid_carrier(carrier), o);
  return descend<R>(doc, io::decode_ring_carrier(carrier), o);
}

}  // namespace umrow::cli

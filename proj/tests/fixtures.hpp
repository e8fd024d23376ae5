#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "baric/baric.hpp"
#include "baric/bowtie.hpp"
#include "baric/propcheck.hpp"

namespace fixtures {

using namespace baric;

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec F2 = FieldSpec::prime(2);
inline const FieldSpec F3 = FieldSpec::prime(3);
inline const FieldSpec F5 = FieldSpec::prime(5);

inline Vector vec(const FieldSpec& f, std::initializer_list<const char*> entries) {
  Vector v;
  for (const char* e : entries) v.push_back(parse_scalar(e, f));
  return v;
}

inline Algebra algebra(const FieldSpec& f, std::size_t dim,
                       std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, const char*>> mul) {
  StructureConstants c;
  for (const auto& [i, j, k, s] : mul) c.emplace(Triple{i, j, k}, parse_scalar(s, f));
  return Algebra(f, dim, std::move(c));
}

inline BaricAlgebra kk(const FieldSpec& f) {
  const auto k = scalar_action_model(f, 1);
  return bowtie(k, k);
}

inline BaricAlgebra d2d2(const FieldSpec& f) { return bowtie(dual_numbers(f), dual_numbers(f)); }

inline Matrix matrix(const FieldSpec& f, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(vec(f, r));
  return Matrix::from_rows(f, vs, vs.front().size());
}

}  // namespace fixtures

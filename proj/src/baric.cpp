#include "baric/baric.hpp"

#include <algorithm>

namespace baric {

WeightFunctional::WeightFunctional(Vector values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::DimensionMismatch, "empty weight functional");
  for (const auto& v : values_) {
    if (!(v.field() == values_.front().field())) throw Error(ErrorCode::FieldMismatch, "weight entries");
  }
}

WeightFunctional WeightFunctional::ones(const FieldSpec& field, std::size_t n) {
  return WeightFunctional(Vector(n, FieldElement::one(field)));
}

bool validate_weight(const Algebra& algebra, const WeightFunctional& weight) {
  if (weight.size() != algebra.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "weight length differs from dimension");
  }
  if (!(weight.field() == algebra.field())) throw Error(ErrorCode::FieldMismatch, "weight field");
  if (is_zero(weight.values())) return false;
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(weight(algebra.basis_product(i, j)) == weight[i] * weight[j])) return false;
    }
  return true;
}

BaricAlgebra::BaricAlgebra(Algebra algebra, WeightFunctional weight, std::optional<BowtieTag> provenance)
    : algebra_(std::move(algebra)), weight_(std::move(weight)), provenance_(std::move(provenance)) {
  if (!validate_weight(algebra_, weight_)) {
    throw Error(ErrorCode::WeightInvalid, "weight is zero or not multiplicative");
  }
  if (provenance_ && provenance_->left_dim + provenance_->right_dim != algebra_.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "bowtie blocks do not cover the algebra");
  }
}

Subspace BaricAlgebra::kernel() const {
  Matrix column = Matrix::from_rows(field(), std::vector<Vector>{weight_.values()}, dim());
  return span(field(), nullspace(column), dim());
}

std::vector<WeightFunctional> enumerate_weights(const Algebra& algebra, std::uint64_t cap) {
  std::vector<WeightFunctional> out;
  for_each_vector(
      algebra.field(), algebra.dim(),
      [&](const Vector& candidate) {
        if (is_zero(candidate)) return;
        WeightFunctional w(candidate);
        if (validate_weight(algebra, w)) out.push_back(std::move(w));
      },
      cap);
  return out;
}

NilKernelReport nil_kernel_report(const BaricAlgebra& algebra, std::size_t bound) {
  if (bound == 0) throw Error(ErrorCode::PreconditionFailed, "power bound must be at least 1");
  NilKernelReport report;
  report.bound = bound;
  for (const auto& x : algebra.kernel().basis_vectors()) {
    Vector power = x;
    bool vanished = is_zero(power);
    for (std::size_t e = 2; e <= bound && !vanished; ++e) {
      power = multiply(algebra.algebra(), power, x);
      vanished = is_zero(power);
    }
    if (!vanished) {
      report.nil = false;
      report.witness = x;
      return report;
    }
  }
  return report;
}

bool is_nil_kernel(const BaricAlgebra& algebra, std::size_t bound) { return nil_kernel_report(algebra, bound).nil; }

Rebased normalize_weight_one_basis(const BaricAlgebra& algebra) {
  const FieldSpec& field = algebra.field();
  const std::size_t n = algebra.dim();
  const auto& w = algebra.weight();

  // Rescale to eps_i in {0, 1}.
  std::vector<Vector> scaled;
  std::vector<bool> eps;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].is_zero()) {
      scaled.push_back(algebra.algebra().basis_vector(i));
      eps.push_back(false);
    } else {
      scaled.push_back(scale(w[i].inverse(), algebra.algebra().basis_vector(i)));
      eps.push_back(true);
    }
  }
  // Move the first weight-1 vector to the front; the weight is nonzero so one exists.
  std::size_t first = 0;
  while (!eps[first]) ++first;
  std::rotate(scaled.begin(), scaled.begin() + static_cast<std::ptrdiff_t>(first),
              scaled.begin() + static_cast<std::ptrdiff_t>(first + 1));
  std::rotate(eps.begin(), eps.begin() + static_cast<std::ptrdiff_t>(first),
              eps.begin() + static_cast<std::ptrdiff_t>(first + 1));

  Matrix transform(field, n, n);
  Vector running = zero_vector(field, n);
  FieldElement partial = FieldElement::zero(field);
  for (std::size_t m = 0; m < n; ++m) {
    running = add(running, scaled[m]);
    if (eps[m]) partial += FieldElement::one(field);
    if (partial.is_zero()) {
      throw Error(ErrorCode::CharacteristicObstruction,
                  "partial weight sum " + std::to_string(m + 1) + " vanishes in " + field.to_string());
    }
    const Vector row = scale(partial.inverse(), running);
    for (std::size_t c = 0; c < n; ++c) transform(m, c) = row[c];
  }

  Algebra rebased = change_basis(algebra.algebra(), transform);
  Vector new_weight;
  for (std::size_t m = 0; m < n; ++m) new_weight.push_back(w(transform.row(m)));
  return {BaricAlgebra(std::move(rebased), WeightFunctional(std::move(new_weight))), std::move(transform)};
}

bool is_scalar_action(const Algebra& algebra, const WeightFunctional& weight) {
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const FieldElement expected = i == k ? weight[j] : FieldElement::zero(algebra.field());
        if (!(algebra.constant(i, j, k) == expected)) return false;
      }
  return true;
}

BaricAlgebra scalar_action_model(const FieldSpec& field, std::size_t n) {
  StructureConstants constants;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) constants.emplace(Triple{i, j, i}, FieldElement::one(field));
  return BaricAlgebra(Algebra(field, n, std::move(constants)), WeightFunctional::ones(field, n));
}

std::optional<ScalarActionClassification> classify_scalar_action(const BaricAlgebra& algebra) {
  if (!is_scalar_action(algebra.algebra(), algebra.weight())) return std::nullopt;
  Rebased rebased = normalize_weight_one_basis(algebra);
  BaricAlgebra target = scalar_action_model(algebra.field(), algebra.dim());
  if (!(rebased.algebra.algebra() == target.algebra()) || !(rebased.algebra.weight() == target.weight())) {
    throw Error(ErrorCode::PreconditionFailed, "normalized scalar-action algebra differs from the model");
  }
  Matrix iso = inverse(rebased.transform);
  return ScalarActionClassification{std::move(rebased.transform), std::move(iso), std::move(target)};
}

bool baric_isomorphic_by(const Matrix& map, const BaricAlgebra& from, const BaricAlgebra& to) {
  if (map.rows() != from.dim() || map.cols() != to.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "map shape does not match the algebras");
  }
  if (from.dim() != to.dim() || rank(map) != from.dim()) return false;
  const std::size_t n = from.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(to.weight()(map.row(i)) == from.weight()[i])) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = map_row(from.algebra().basis_product(i, j), map);
      const Vector rhs = multiply(to.algebra(), map.row(i), map.row(j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

}  // namespace baric

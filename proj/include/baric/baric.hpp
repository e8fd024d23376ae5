#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "baric/algebra.hpp"

namespace baric {

/// Coordinates w_i = omega(e_i) of a linear functional on the chosen basis.
class WeightFunctional {
 public:
  explicit WeightFunctional(Vector values);

  /// The all-ones functional of dimension n.
  static WeightFunctional ones(const FieldSpec& field, std::size_t n);

  const Vector& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const FieldSpec& field() const { return values_.front().field(); }
  const FieldElement& operator[](std::size_t i) const { return values_[i]; }

  FieldElement operator()(const Vector& x) const { return dot(values_, x); }

  friend bool operator==(const WeightFunctional&, const WeightFunctional&) = default;

 private:
  Vector values_;
};

/// Block layout of an algebra built as A1 bowtie A2.
struct BowtieTag {
  std::size_t left_dim;
  std::size_t right_dim;
  WeightFunctional left_weight;
  WeightFunctional right_weight;

  friend bool operator==(const BowtieTag&, const BowtieTag&) = default;
};

/// Nonzero and multiplicative on every basis pair.
bool validate_weight(const Algebra& algebra, const WeightFunctional& weight);

// An algebra together with a validated weight homomorphism.
class BaricAlgebra {
 public:
  /// Throws WeightInvalid if the weight is zero or not multiplicative.
  BaricAlgebra(Algebra algebra, WeightFunctional weight, std::optional<BowtieTag> provenance = std::nullopt);

  const Algebra& algebra() const noexcept { return algebra_; }
  const WeightFunctional& weight() const noexcept { return weight_; }
  const std::optional<BowtieTag>& provenance() const noexcept { return provenance_; }
  const FieldSpec& field() const noexcept { return algebra_.field(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }

  /// Ker omega.
  Subspace kernel() const;

  friend bool operator==(const BaricAlgebra&, const BaricAlgebra&) = default;

 private:
  Algebra algebra_;
  WeightFunctional weight_;
  std::optional<BowtieTag> provenance_;
};

/// Every nonzero algebra homomorphism to K, by exhaustive scan of all p^n
/// functionals. Prime fields only.
std::vector<WeightFunctional> enumerate_weights(const Algebra& algebra,
                                                std::uint64_t cap = kDefaultEnumerationCap);

struct NilKernelReport {
  bool nil = true;
  std::size_t bound = 0;
  /// Kernel basis vector none of whose first `bound` left-normed powers vanished.
  std::optional<Vector> witness;
};

/// Semi-decision of nilness of Ker omega using left-normed powers
/// x, x*x, (x*x)*x, ... up to `bound` on each RREF kernel basis vector.
NilKernelReport nil_kernel_report(const BaricAlgebra& algebra, std::size_t bound);
bool is_nil_kernel(const BaricAlgebra& algebra, std::size_t bound);

struct Rebased {
  BaricAlgebra algebra;
  /// Rows are the new basis vectors in old coordinates.
  Matrix transform;
};

/// Re-expresses the algebra in a basis in which every vector has weight 1.
/// Vectors of nonzero weight are rescaled to weight 1, a weight-1 vector is
/// moved first, and then e'_n = (sum_{j<=n} eps_j)^-1 sum_{j<=n} e_j.
/// Throws CharacteristicObstruction when a partial sum vanishes in F_p.
Rebased normalize_weight_one_basis(const BaricAlgebra& algebra);

/// xy = omega(y) x, tested as c_{ij}^k = w_j delta_ik.
bool is_scalar_action(const Algebra& algebra, const WeightFunctional& weight);

/// K^n with c_{ij}^k = delta_ik and the all-ones weight, built directly.
BaricAlgebra scalar_action_model(const FieldSpec& field, std::size_t n);

struct ScalarActionClassification {
  /// Change of basis to the weight-one basis (rows = new vectors).
  Matrix transform;
  /// The baric isomorphism onto the model, as a map matrix (inverse of transform).
  Matrix isomorphism;
  BaricAlgebra target;
};

/// Present iff the scalar-action law holds (and normalization succeeds).
std::optional<ScalarActionClassification> classify_scalar_action(const BaricAlgebra& algebra);

/// Row i of `map` is the image of e_i. True iff the map is invertible,
/// multiplicative on basis pairs, and weight-preserving.
bool baric_isomorphic_by(const Matrix& map, const BaricAlgebra& from, const BaricAlgebra& to);

}  // namespace baric

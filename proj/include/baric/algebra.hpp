#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "baric/field.hpp"
#include "baric/linalg.hpp"

namespace baric {

/// Index (i, j, k) of the structure constant c_{ij}^k, i.e. the e_k
/// coefficient of e_i * e_j.
struct Triple {
  std::size_t i;
  std::size_t j;
  std::size_t k;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

using StructureConstants = std::map<Triple, FieldElement>;

// Finite-dimensional algebra over a field, given by its structure constants on
// a fixed basis. Zero constants are never stored.
class Algebra {
 public:
  Algebra(const FieldSpec& field, std::size_t dim, StructureConstants constants = {},
          std::vector<std::string> basis_names = {});

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const StructureConstants& constants() const noexcept { return constants_; }
  const std::vector<std::string>& basis_names() const noexcept { return basis_names_; }

  FieldElement constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// Coordinates of e_i * e_j.
  Vector basis_product(std::size_t i, std::size_t j) const;

  Vector zero() const { return zero_vector(field_, dim_); }
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }

  /// Structural equality of field, dimension and constants; names are labels only.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  StructureConstants constants_;
  std::vector<std::string> basis_names_;
};

Vector multiply(const Algebra& algebra, const Vector& x, const Vector& y);
Vector commutator(const Algebra& algebra, const Vector& x, const Vector& y);
Vector associator(const Algebra& algebra, const Vector& x, const Vector& y, const Vector& z);

struct PropertyFlags {
  bool commutative = false;
  bool associative = false;
  bool left_alternative = false;
  bool right_alternative = false;
  bool unital = false;
  std::optional<Vector> unit;
};

/// Every flag is decided exactly from the structure constants. The
/// alternative laws are quadratic in one argument, so they are checked on
/// (e_i, e_i, e_k) and on the polarized (e_i+e_j, e_i+e_j, e_k), which is
/// complete in every characteristic including 2.
PropertyFlags property_flags(const Algebra& algebra);

bool is_commutative(const Algebra& algebra);
bool is_associative(const Algebra& algebra);
bool is_left_alternative(const Algebra& algebra);
bool is_right_alternative(const Algebra& algebra);
std::optional<Vector> find_unit(const Algebra& algebra);

/// {a : [a, e_j] = 0 for all j}.
Subspace commutative_center(const Algebra& algebra);

/// Re-expresses the product in the basis e'_i = sum_j T(i, j) e_j.
/// Throws SingularTransform when T is not invertible.
Algebra change_basis(const Algebra& algebra, const Matrix& transform);

/// Restriction of the product to a subalgebra spanned by coordinates
/// [offset, offset + dim): the block must be closed under multiplication.
Algebra block_subalgebra(const Algebra& algebra, std::size_t offset, std::size_t dim);

}  // namespace baric

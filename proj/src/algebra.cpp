#include "baric/algebra.hpp"

namespace baric {

Algebra::Algebra(const FieldSpec& field, std::size_t dim, StructureConstants constants,
                 std::vector<std::string> basis_names)
    : field_(field), dim_(dim), basis_names_(std::move(basis_names)) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "algebra dimension must be at least 1");
  if (!basis_names_.empty() && basis_names_.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "basis name count differs from dimension");
  }
  for (auto& [t, c] : constants) {
    if (t.i >= dim || t.j >= dim || t.k >= dim) {
      throw Error(ErrorCode::DimensionMismatch, "structure constant index out of range");
    }
    if (!(c.field() == field)) throw Error(ErrorCode::FieldMismatch, "structure constant field");
    if (!c.is_zero()) constants_.emplace(t, std::move(c));
  }
}

FieldElement Algebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = constants_.find({i, j, k});
  return it == constants_.end() ? FieldElement::zero(field_) : it->second;
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vector out = zero();
  for (auto it = constants_.lower_bound({i, j, 0}); it != constants_.end() && it->first.i == i && it->first.j == j;
       ++it) {
    out[it->first.k] = it->second;
  }
  return out;
}

namespace {

void require_element(const Algebra& algebra, const Vector& x) {
  if (x.size() != algebra.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "element of length " + std::to_string(x.size()) +
                                                  " in algebra of dimension " + std::to_string(algebra.dim()));
  }
}

}  // namespace

Vector multiply(const Algebra& algebra, const Vector& x, const Vector& y) {
  require_element(algebra, x);
  require_element(algebra, y);
  Vector z = algebra.zero();
  const auto& constants = algebra.constants();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    const auto end = constants.lower_bound({i + 1, 0, 0});
    for (auto it = constants.lower_bound({i, 0, 0}); it != end; ++it) {
      const auto& [t, c] = *it;
      if (!y[t.j].is_zero()) z[t.k] += x[i] * y[t.j] * c;
    }
  }
  return z;
}

Vector commutator(const Algebra& algebra, const Vector& x, const Vector& y) {
  return sub(multiply(algebra, x, y), multiply(algebra, y, x));
}

Vector associator(const Algebra& algebra, const Vector& x, const Vector& y, const Vector& z) {
  return sub(multiply(algebra, multiply(algebra, x, y), z), multiply(algebra, x, multiply(algebra, y, z)));
}

bool is_commutative(const Algebra& algebra) {
  for (const auto& [t, c] : algebra.constants()) {
    if (!(algebra.constant(t.j, t.i, t.k) == c)) return false;
  }
  return true;
}

bool is_associative(const Algebra& algebra) {
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(associator(algebra, algebra.basis_vector(i), algebra.basis_vector(j), algebra.basis_vector(k)))) {
          return false;
        }
      }
  return true;
}

bool is_left_alternative(const Algebra& algebra) {
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector x = algebra.basis_vector(i);
      if (j != i) x = add(x, algebra.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(associator(algebra, x, x, algebra.basis_vector(k)))) return false;
      }
    }
  return true;
}

bool is_right_alternative(const Algebra& algebra) {
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector y = algebra.basis_vector(i);
      if (j != i) y = add(y, algebra.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(associator(algebra, algebra.basis_vector(k), y, y))) return false;
      }
    }
  return true;
}

std::optional<Vector> find_unit(const Algebra& algebra) {
  // Unknown u with sum_m u_m c_{mi}^k = delta_ik and sum_m u_m c_{im}^k = delta_ik.
  const std::size_t n = algebra.dim();
  const FieldSpec& field = algebra.field();
  Matrix system(field, 2 * n * n, n);
  Vector rhs = zero_vector(field, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t left_row = i * n + k;
      const std::size_t right_row = n * n + i * n + k;
      for (std::size_t m = 0; m < n; ++m) {
        system(left_row, m) = algebra.constant(m, i, k);
        system(right_row, m) = algebra.constant(i, m, k);
      }
      if (i == k) {
        rhs[left_row] = FieldElement::one(field);
        rhs[right_row] = FieldElement::one(field);
      }
    }
  return solve(system, rhs);
}

PropertyFlags property_flags(const Algebra& algebra) {
  PropertyFlags flags;
  flags.commutative = is_commutative(algebra);
  flags.associative = is_associative(algebra);
  flags.left_alternative = flags.associative || is_left_alternative(algebra);
  flags.right_alternative = flags.associative || is_right_alternative(algebra);
  flags.unit = find_unit(algebra);
  flags.unital = flags.unit.has_value();
  return flags;
}

Subspace commutative_center(const Algebra& algebra) {
  // Row m of the map a -> ([a, e_j])_j; the center is its left kernel.
  const std::size_t n = algebra.dim();
  Matrix map(algebra.field(), n, n * n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) map(m, j * n + k) = algebra.constant(m, j, k) - algebra.constant(j, m, k);
  auto kernel = nullspace(map.transpose());
  return span(algebra.field(), kernel, n);
}

Algebra change_basis(const Algebra& algebra, const Matrix& transform) {
  const std::size_t n = algebra.dim();
  if (transform.rows() != n || transform.cols() != n) {
    throw Error(ErrorCode::SingularTransform, "transform must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  const Matrix back = inverse(transform);
  const auto new_basis = transform.row_vectors();
  StructureConstants constants;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector coords = map_row(multiply(algebra, new_basis[i], new_basis[j]), back);
      for (std::size_t k = 0; k < n; ++k) {
        if (!coords[k].is_zero()) constants.emplace(Triple{i, j, k}, coords[k]);
      }
    }
  return Algebra(algebra.field(), n, std::move(constants));
}

Algebra block_subalgebra(const Algebra& algebra, std::size_t offset, std::size_t dim) {
  if (offset + dim > algebra.dim()) throw Error(ErrorCode::DimensionMismatch, "block exceeds algebra");
  StructureConstants constants;
  for (const auto& [t, c] : algebra.constants()) {
    const bool inside_args = t.i >= offset && t.i < offset + dim && t.j >= offset && t.j < offset + dim;
    if (!inside_args) continue;
    if (t.k < offset || t.k >= offset + dim) {
      throw Error(ErrorCode::PreconditionFailed, "block is not closed under multiplication");
    }
    constants.emplace(Triple{t.i - offset, t.j - offset, t.k - offset}, c);
  }
  std::vector<std::string> names;
  if (!algebra.basis_names().empty()) {
    names.assign(algebra.basis_names().begin() + static_cast<std::ptrdiff_t>(offset),
                 algebra.basis_names().begin() + static_cast<std::ptrdiff_t>(offset + dim));
  }
  return Algebra(algebra.field(), dim, std::move(constants), std::move(names));
}

}  // namespace baric

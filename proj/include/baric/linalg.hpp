#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "baric/field.hpp"

namespace baric {

/// Coordinate vector over a single field.
using Vector = std::vector<FieldElement>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const FieldElement& s, const Vector& v);
FieldElement dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
/// Parses comma-separated scalars, e.g. "1,-1/2,0".
Vector parse_vector(std::string_view text, const FieldSpec& field);
/// "[a,b,c]"
std::string format_vector(const Vector& v);

// Dense row-major matrix. Vectors are rows; a linear map x -> x*M acts on
// row vectors, so row i of a map matrix is the image of the i-th basis vector.
class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// Every row must have exactly `cols` entries.
  static Matrix from_rows(const FieldSpec& field, std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  std::vector<Vector> row_vectors() const;
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// Row vector times matrix.
Vector map_row(const Vector& x, const Matrix& m);

struct EchelonForm {
  Matrix matrix;                    // reduced row-echelon, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm echelon(const Matrix& m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m * v^T = 0}, in canonical (reduced) form.
std::vector<Vector> nullspace(const Matrix& m);
/// Some x with m * x^T = b^T, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Throws SingularTransform when m is not square or not invertible.
Matrix inverse(const Matrix& m);

// A subspace of K^n held as its RREF basis without zero rows, so equal
// subspaces compare equal structurally.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace full(const FieldSpec& field, std::size_t ambient_dim);

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Lexicographic on (dim, basis entries); only meaningful within one field.
  friend bool operator<(const Subspace& a, const Subspace& b);

  std::string to_string() const;

 private:
  friend Subspace span(const FieldSpec&, std::span<const Vector>, std::size_t);
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_;
};

Subspace span(const FieldSpec& field, std::span<const Vector> vectors, std::size_t ambient_dim);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

enum class SubspaceOp { Sum, Intersect, Contains, Equal };

struct SubspaceOpResult {
  std::optional<Subspace> space;
  std::optional<bool> flag;
};

SubspaceOpResult subspace_ops(const Subspace& a, const Subspace& b, SubspaceOp op);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Calls `visit` once for every subspace of `ambient`, in a fixed order:
/// by dimension, then RREF pivot pattern, then free entries.
void for_each_subspace(const Subspace& ambient, const std::function<void(const Subspace&)>& visit,
                       std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Subspace> enumerate_subspaces(const Subspace& ambient,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// Throws FieldNotFinite or EnumerationTooLarge unless p^n <= cap.
void require_enumerable(const FieldSpec& field, std::size_t n, std::uint64_t cap);

/// Calls `visit` for each of the p^n vectors of F_p^n.
void for_each_vector(const FieldSpec& field, std::size_t n, const std::function<void(const Vector&)>& visit,
                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace baric

#include "baric/linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace baric {

namespace {

void require_len(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

}  // namespace

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, FieldElement::zero(field)); }

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = FieldElement::one(field);
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  require_len(a, b);
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  require_len(a, b);
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const FieldElement& s, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

FieldElement dot(const Vector& a, const Vector& b) {
  require_len(a, b);
  if (a.empty()) throw Error(ErrorCode::DimensionMismatch, "dot of empty vectors");
  FieldElement acc = FieldElement::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Vector parse_vector(std::string_view text, const FieldSpec& field) {
  Vector out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(parse_scalar(piece, field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_vector(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].to_string();
  }
  return out + "]";
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::span<const Vector> rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                      ", expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].field() == field)) throw Error(ErrorCode::FieldMismatch, "matrix entry field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (!rhs(k, c).is_zero()) out(r, c) += a * rhs(k, c);
      }
    }
  return out;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ',';
    out += format_vector(row(r));
  }
  return out + "]";
}

Vector map_row(const Vector& x, const Matrix& m) {
  if (x.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector/matrix shapes");
  Vector out = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) out[c] += x[r] * m(r, c);
    }
  }
  return out;
}

EchelonForm echelon(const Matrix& input) {
  Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && m(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    m.swap_rows(lead, pivot_row);
    const FieldElement inv = m(lead, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      const FieldElement factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(lead, c).is_zero()) m(r, c) -= factor * m(lead, c);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return echelon(m).matrix; }

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const auto [reduced, pivots] = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto [reduced, pivots] = echelon(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::SingularTransform, "matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = FieldElement::one(m.field());
  }
  const auto [reduced, pivots] = echelon(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::SingularTransform, "matrix is singular");
  }
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = reduced(r, n + c);
  return out;
}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim));
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(field, ambient_dim));
}

Subspace span(const FieldSpec& field, std::span<const Vector> vectors, std::size_t ambient_dim) {
  Matrix m = Matrix::from_rows(field, vectors, ambient_dim);
  const auto [reduced, pivots] = echelon(m);
  Matrix basis(field, pivots.size(), ambient_dim);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) basis(r, c) = reduced(r, c);
  return Subspace(std::move(basis));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "vector not in ambient space");
  // Reduce v against the RREF basis; it lies in the span iff the residue is 0.
  Vector residue = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t pivot = 0;
    while (basis_(r, pivot).is_zero()) ++pivot;
    if (residue[pivot].is_zero()) continue;
    const FieldElement factor = residue[pivot];
    for (std::size_t c = pivot; c < ambient_dim(); ++c) residue[c] -= factor * basis_(r, c);
  }
  return is_zero(residue);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
      const auto& x = a.basis_(r, c);
      const auto& y = b.basis_(r, c);
      if (x == y) continue;
      if (x.field().is_finite()) return x.residue() < y.residue();
      return x.rational() < y.rational();
    }
  return false;
}

std::string Subspace::to_string() const { return basis_.to_string(); }

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "subspace fields differ");
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  auto rows = a.basis_vectors();
  auto more = b.basis_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return span(a.field(), rows, a.ambient_dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.field(), a.ambient_dim());
  // Coefficients (s, t) with s*A + t*B = 0 give s*A in the intersection.
  auto rows = a.basis_vectors();
  auto more = b.basis_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  Matrix stacked = Matrix::from_rows(a.field(), rows, a.ambient_dim());
  std::vector<Vector> common;
  for (const auto& coeffs : nullspace(stacked.transpose())) {
    Vector s(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    common.push_back(map_row(s, a.basis()));
  }
  return span(a.field(), common, a.ambient_dim());
}

SubspaceOpResult subspace_ops(const Subspace& a, const Subspace& b, SubspaceOp op) {
  require_compatible(a, b);
  switch (op) {
    case SubspaceOp::Sum: return {sum(a, b), std::nullopt};
    case SubspaceOp::Intersect: return {intersect(a, b), std::nullopt};
    case SubspaceOp::Contains: return {std::nullopt, a.contains(b)};
    case SubspaceOp::Equal: return {std::nullopt, a == b};
  }
  return {};
}

void require_enumerable(const FieldSpec& field, std::size_t n, std::uint64_t cap) {
  if (!field.is_finite()) throw Error(ErrorCode::FieldNotFinite, "enumeration needs a prime field");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / field.p()) {
      throw Error(ErrorCode::EnumerationTooLarge,
                  field.to_string() + "^" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    total *= field.p();
  }
}

void for_each_vector(const FieldSpec& field, std::size_t n, const std::function<void(const Vector&)>& visit,
                     std::uint64_t cap) {
  require_enumerable(field, n, cap);
  std::vector<std::uint64_t> digits(n, 0);
  Vector v = zero_vector(field, n);
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < n && digits[i] + 1 == field.p()) {
      digits[i] = 0;
      v[i] = FieldElement::zero(field);
      ++i;
    }
    if (i == n) return;
    ++digits[i];
    v[i] = FieldElement(field, static_cast<long>(digits[i]));
  }
}

void for_each_subspace(const Subspace& ambient, const std::function<void(const Subspace&)>& visit,
                       std::uint64_t cap) {
  const FieldSpec field = ambient.field();
  const std::size_t d = ambient.dim();
  require_enumerable(field, d, cap);
  const Matrix& frame = ambient.basis();

  for (std::size_t k = 0; k <= d; ++k) {
    // Pivot columns c_0 < ... < c_{k-1} in the coordinates of the ambient basis.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      std::vector<bool> is_pivot(d, false);
      for (auto p : pivots) is_pivot[p] = true;
      // Free slots: (row r, column c) with c > pivot_r and c not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < d; ++c)
          if (!is_pivot[c]) slots.emplace_back(r, c);

      Matrix coeffs(field, k, d);
      for (std::size_t r = 0; r < k; ++r) coeffs(r, pivots[r]) = FieldElement::one(field);
      for_each_vector(
          field, slots.size(),
          [&](const Vector& values) {
            for (std::size_t s = 0; s < slots.size(); ++s) coeffs(slots[s].first, slots[s].second) = values[s];
            auto rows = (coeffs * frame).row_vectors();
            visit(span(field, rows, ambient.ambient_dim()));
          },
          std::numeric_limits<std::uint64_t>::max());

      // Next pivot pattern in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == d - k + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
}

std::vector<Subspace> enumerate_subspaces(const Subspace& ambient, std::uint64_t cap) {
  std::vector<Subspace> out;
  for_each_subspace(ambient, [&](const Subspace& s) { out.push_back(s); }, cap);
  return out;
}

}  // namespace baric

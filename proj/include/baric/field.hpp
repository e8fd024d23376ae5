#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace baric {

enum class ErrorCode {
  FieldMismatch,
  DivisionByZero,
  ParseError,
  InvalidField,
  DimensionMismatch,
  FieldNotFinite,
  EnumerationTooLarge,
  SingularTransform,
  CharacteristicObstruction,
  WeightInvalid,
  NotABowtie,
  NotIdempotentInput,
  WeightNotOne,
  NotWeightPreserving,
  FactorsNotCommutativeUnital,
  PreconditionFailed,
  UnknownProposition,
  DuplicateTriple,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Selects the scalar field: the rationals or F_p for a prime p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InvalidField unless p is a prime that fits in 32 bits.
  static FieldSpec prime(std::uint64_t p);
  /// Parses "q" or "pN" (the CLI field selector).
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::PrimeField; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// "q" or "p<N>".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Canonical exact scalar. Rationals are kept reduced with a positive
// denominator; prime-field values are residues in [0, p).
class FieldElement {
 public:
  FieldElement() : FieldElement(FieldSpec::rationals()) {}
  explicit FieldElement(const FieldSpec& field);
  FieldElement(const FieldSpec& field, long value);
  FieldElement(const FieldSpec& field, const mpz_class& num, const mpz_class& den);

  static FieldElement zero(const FieldSpec& field) { return FieldElement(field); }
  static FieldElement one(const FieldSpec& field) { return FieldElement(field, 1); }

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only meaningful over a prime field.
  std::uint64_t residue() const;
  /// Only meaningful over the rationals.
  const mpq_class& rational() const;

  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  void require_same_field(const FieldElement& other) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement scalar_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Accepts an optional sign, decimal digits, and an optional "/digits" part.
/// Over F_p a fraction a/b means a * b^-1.
FieldElement parse_scalar(std::string_view text, const FieldSpec& field);

}  // namespace baric

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "breadthlab/error.hpp"

namespace breadthlab {

enum class FieldKind { Finite, Rational };

/// Description of a scalar domain: GF(p^n) with an explicit modulus, or Q.
///
/// `modulus` holds the coefficients of a monic irreducible polynomial over GF(p),
/// lowest degree first, so x^2 + 1 is {1, 0, 1}. An empty modulus selects the
/// default table entry for (p, n).
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> modulus;

  static FieldSpec finite(std::uint32_t p, std::uint32_t n = 1, std::vector<std::uint32_t> modulus = {});
  static FieldSpec rational() { return FieldSpec{}; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {
struct FieldData;
}

class FieldElem;

/// Handle to an interned, immutable field. Copies are cheap and compare equal
/// exactly when they describe the same field (same p, n and modulus).
class Field {
 public:
  Field() = default;

  static Field get(const FieldSpec& spec);
  static Field gf(std::uint32_t p, std::uint32_t n = 1);
  static Field rational();

  bool valid() const noexcept { return d_ != nullptr; }
  FieldKind kind() const;
  bool is_finite() const { return kind() == FieldKind::Finite; }
  bool is_rational() const { return kind() == FieldKind::Rational; }
  /// 0 for Q.
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  /// Number of elements; 0 for Q.
  std::uint32_t size() const;
  const FieldSpec& spec() const;
  /// Short label such as "gf3", "gf2^3" or "rational".
  const std::string& name() const;

  FieldElem zero() const;
  FieldElem one() const;
  /// Image of an integer under Z -> field.
  FieldElem from_int(std::int64_t v) const;
  /// Element with canonical index `i` (finite fields only).
  FieldElem element(std::uint32_t i) const;
  /// num/den reduced to lowest terms (Q only).
  FieldElem ratio(std::int64_t num, std::int64_t den) const;
  /// Finite: sum c_i w^i with coefficients in GF(p), lowest degree first.
  FieldElem from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

  /// Sum of the Galois conjugates a^(p^i), i < n. Lies in the prime subfield.
  FieldElem trace(const FieldElem& a) const;
  /// Odd characteristic or Q. Zero counts as a square.
  bool is_square(const FieldElem& a) const;
  /// Least non-square in canonical order; -1 over Q.
  FieldElem find_nonsquare() const;
  /// Least element of absolute trace 1 (finite fields).
  FieldElem least_trace_one() const;
  /// A square root if one exists in the field. Over GF(2^n) every element has one.
  std::optional<FieldElem> sqrt(const FieldElem& a) const;
  /// Index of the fixed primitive element used by the log/antilog tables.
  std::uint32_t generator_index() const;

  /// Uniform element for finite fields; integers in [-bound, bound] over Q.
  FieldElem random(std::mt19937_64& rng, std::int64_t bound = 5) const;

  const detail::FieldData* data() const noexcept { return d_; }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.d_ == b.d_; }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return a.d_ != b.d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  friend class FieldElem;

  const detail::FieldData* d_ = nullptr;
};

/// An exact scalar. Finite-field elements are stored as their canonical index
/// (p-adic packing of the polynomial coefficients); rationals as a reduced
/// fraction with positive denominator. Equality is structural.
class FieldElem {
 public:
  FieldElem() = default;

  Field field() const { return Field(f_); }
  bool is_zero() const noexcept { return a_ == 0; }
  bool is_one() const;

  /// Canonical index in 0..q-1 (finite fields).
  std::uint32_t index() const;
  std::int64_t num() const;
  std::int64_t den() const;

  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(std::int64_t e) const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
    return a.f_ == b.f_ && a.a_ == b.a_ && a.b_ == b.b_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) noexcept { return !(a == b); }

  std::string to_string() const;

 private:
  friend class Field;
  FieldElem(const detail::FieldData* f, std::int64_t a, std::int64_t b) : f_(f), a_(a), b_(b) {}

  const detail::FieldData* f_ = nullptr;
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

using Vector = std::vector<FieldElem>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vector(const Vector& v);

/// True iff a t^2 + b t + c has no root in the field.
bool quadratic_irreducible(const FieldElem& a, const FieldElem& b, const FieldElem& c);

/// "gf3", "gf2^2", "gf4", "rational" / "Q".
Field parse_field_name(const std::string& text);

}  // namespace breadthlab

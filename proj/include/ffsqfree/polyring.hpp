#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ffsqfree/ffield.hpp"

namespace ffsqfree {

/// Dense polynomial in F_q[t], coefficient i multiplying t^i.
///
/// Always normalized: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing and has degree kZeroDegree.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit UniPoly(FieldPtr field);
  UniPoly(FieldPtr field, std::vector<FieldElem> coeffs);

  static UniPoly constant(FieldPtr field, FieldElem c);
  static UniPoly monomial(FieldPtr field, FieldElem c, std::size_t degree);
  /// The polynomial t.
  static UniPoly variable(FieldPtr field);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

  FieldElem coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
  }
  /// Leading coefficient, zero for the zero polynomial.
  FieldElem leading() const noexcept { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }
  std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept {
    return a.coeffs_ == b.coeffs_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
  }

  FieldElem eval(FieldElem x) const noexcept;
  UniPoly scaled(FieldElem c) const;
  /// Multiplication by t^k.
  UniPoly shifted(std::size_t k) const;
  UniPoly monic() const;

  /// Throws FieldMismatch unless `other` lives over the same field.
  void check_same_field(const UniPoly& other) const;

 private:
  void normalize() noexcept;

  FieldPtr field_;
  std::vector<FieldElem> coeffs_;
};

struct DivRem {
  UniPoly quotient;
  UniPoly remainder;
};

DivRem divrem(const UniPoly& f, const UniPoly& g);
UniPoly operator%(const UniPoly& f, const UniPoly& g);
/// Quotient of a division known to be exact; throws InvalidArgument otherwise.
UniPoly exact_quotient(const UniPoly& f, const UniPoly& g);
bool divides(const UniPoly& d, const UniPoly& f);

UniPoly derivative(const UniPoly& f);
/// Monic gcd; gcd(f, 0) = monic(f).
UniPoly gcd(const UniPoly& f, const UniPoly& g);
UniPoly pow(const UniPoly& f, std::uint64_t e);

/// True iff no square of a nonconstant polynomial divides f.
///
/// A nonconstant f with f' = 0 is a p-th power over the perfect field F_q,
/// hence never square-free; that case is decided before the gcd test.
bool is_squarefree(const UniPoly& f);

/// Determinant of the Sylvester matrix at the actual degrees of f and g.
FieldElem resultant(const UniPoly& f, const UniPoly& g);
/// Same quantity through the Euclidean remainder sequence.
FieldElem resultant_euclid(const UniPoly& f, const UniPoly& g);

/// (-1)^{m(m-1)/2} Res_{m,m-1}(f, f') / lc(f), with f' taken at formal degree m-1.
///
/// The formal-degree Sylvester matrix makes this the universal discriminant
/// polynomial in the coefficients, so it commutes with specialization. It
/// differs from Res(f, f') at actual degrees by lc(f)^{m-1-deg f'} when p | m.
FieldElem discriminant(const UniPoly& f);

/// Bijection [0, q^n) -> monic polynomials of degree n.
///
/// Index i written in base q as sum d_j q^j gives the coefficient
/// field.element(d_j) of t^j for j < n; index 0 is t^n.
class MonicEnumerator {
 public:
  MonicEnumerator(FieldPtr field, unsigned degree);

  std::uint64_t size() const noexcept { return size_; }
  unsigned degree() const noexcept { return degree_; }
  UniPoly at(std::uint64_t index) const;
  /// Coefficients a_0..a_{n-1} of at(index) without building the polynomial.
  std::vector<FieldElem> digits(std::uint64_t index) const;

 private:
  FieldPtr field_;
  unsigned degree_;
  std::uint64_t size_;
};

/// q^n, throwing Overflow when it does not fit in 64 bits.
std::uint64_t checked_power(std::uint64_t q, unsigned n);

std::vector<UniPoly> enumerate_monic(const FieldPtr& field, unsigned degree);

/// All monic irreducibles of degree 1..max_degree, by degree then enumeration order.
std::vector<UniPoly> irreducibles_up_to(const FieldPtr& field, unsigned max_degree);

/// An element of F_q[t]/(D).
class Residue {
 public:
  /// Reduces `value` modulo the monic associate of `modulus` (degree >= 1).
  Residue(UniPoly value, UniPoly modulus);

  const UniPoly& value() const noexcept { return value_; }
  const UniPoly& modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_.is_zero(); }

  Residue& operator+=(const Residue& other);
  Residue& operator*=(const Residue& other);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend bool operator==(const Residue& a, const Residue& b) noexcept {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  void check_modulus(const Residue& other) const;

  UniPoly value_;
  UniPoly modulus_;
};

/// All q^{deg D} residues mod D; throws Overflow above `limit`.
std::vector<Residue> enumerate_residues(const UniPoly& modulus, std::uint64_t limit);

}  // namespace ffsqfree

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ffsqfree {

/// An element of F_q = F_p[u]/(m(u)).
///
/// The k coordinates c_0..c_{k-1} (coefficient of u^i) are packed into the
/// single integer `code = sum c_i p^i`.  Elements do not carry their field:
/// arithmetic goes through the owning Field, and polynomial containers check
/// that both operands share a field.
struct FieldElem {
  std::uint64_t code = 0;

  friend constexpr auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Defining data and arithmetic of F_q, q = p^k.
///
/// The modulus is the first monic irreducible of degree k over F_p when the
/// coefficient sequences (c_0, c_1, ..., c_{k-1}) are compared
/// lexicographically from the constant term up.  For k = 1 it is `u`.
class Field {
 public:
  /// Characteristic bound; primality is checked by trial division.
  static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 20;
  /// Element codes must fit in 32 bits.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

  static FieldPtr make(std::uint64_t p, unsigned k = 1);

  std::uint64_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  /// Monic modulus m(u), coefficients from u^0 to u^k.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of the class of u; equals zero in a prime field since m(u) = u.
  FieldElem generator() const;
  FieldElem from_int(std::int64_t value) const noexcept;
  /// Reduces each entry mod p and the whole sequence mod m(u).
  FieldElem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(FieldElem a) const;

  bool is_zero(FieldElem a) const noexcept { return a.code == 0; }
  bool contains(FieldElem a) const noexcept { return a.code < q_; }

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;

  /// i-th element in enumeration order; the order is by code, so element(0) is zero.
  FieldElem element(std::uint64_t index) const;
  std::vector<FieldElem> elements() const;

  /// "3" in a prime field, "u^2+2*u+1" in an extension.
  std::string format(FieldElem a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

  FieldElem mul_generic(FieldElem a, FieldElem b) const;
  void build_log_tables();

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  // log/antilog tables for small extension fields; empty otherwise.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Convenience alias for Field::make.
inline FieldPtr make_field(std::uint64_t p, unsigned k = 1) { return Field::make(p, k); }

bool is_prime(std::uint64_t n) noexcept;

}  // namespace ffsqfree

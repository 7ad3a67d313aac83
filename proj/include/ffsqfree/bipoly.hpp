#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ffsqfree/polyring.hpp"

namespace ffsqfree {

/// f(x, t) = gamma_0(t) + gamma_1(t) x + ... + gamma_l(t) x^l in F_q[t][x].
class BiPoly {
 public:
  explicit BiPoly(FieldPtr field);
  BiPoly(FieldPtr field, std::vector<UniPoly> gammas);
  /// f(x, t) = c(t), constant in x.
  static BiPoly from_t(const UniPoly& c);
  /// The polynomial x.
  static BiPoly variable(FieldPtr field);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }

  bool is_zero() const noexcept { return gammas_.empty(); }
  /// deg_x, or -1 for the zero polynomial.
  int deg_x() const noexcept { return static_cast<int>(gammas_.size()) - 1; }
  std::span<const UniPoly> gammas() const noexcept { return gammas_; }
  UniPoly gamma(std::size_t j) const;
  const UniPoly& leading() const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) noexcept {
    return a.gammas_ == b.gammas_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
  }

  /// Multiplies every coefficient by c(t).
  BiPoly scaled(const UniPoly& c) const;

  void check_same_field(const BiPoly& other) const;

 private:
  void normalize();

  FieldPtr field_;
  std::vector<UniPoly> gammas_;
};

/// Ht(f) = max_j deg gamma_j. Throws ZeroPolynomial on f = 0.
int height(const BiPoly& f);
int deg_x(const BiPoly& f);

/// Monic gcd of the gamma_j.
UniPoly content(const BiPoly& f);

struct PrimitiveDecomposition {
  UniPoly content;
  BiPoly primitive;
  bool content_squarefree;
};

/// f = content * primitive with content monic; the unit lc(gcd) stays in `primitive`.
PrimitiveDecomposition primitive_decompose(const BiPoly& f);

BiPoly derivative_x(const BiPoly& f);

/// Discriminant in x over F_q[t], with the same sign and formal-degree
/// convention as the univariate discriminant. Zero when df/dx vanishes.
UniPoly disc_x(const BiPoly& f);
bool is_separable(const BiPoly& f);

/// f(a(t), t) by Horner in x.
UniPoly evaluate(const BiPoly& f, const UniPoly& a);
/// Square-freeness of f(a(t), t); the zero value counts as not square-free.
bool value_is_squarefree(const BiPoly& f, const UniPoly& a);
/// f(x, rho) as a polynomial in x (returned as a UniPoly in its own variable).
UniPoly specialize_t(const BiPoly& f, FieldElem rho);

/// prod over alpha, beta in F_q of (x - alpha t - beta): primitive and
/// separable, yet (t^q - t)^2 divides every value f(a).
BiPoly no_squarefree_example(const FieldPtr& field);

/// Largest q accepted by no_squarefree_example; deg_x of the result is q^2.
inline constexpr std::uint64_t kMaxCounterexampleOrder = 16;

}  // namespace ffsqfree

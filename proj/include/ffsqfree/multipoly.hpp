#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ffsqfree/ffield.hpp"

namespace ffsqfree {

/// Sparse polynomial over F_q in the variables a_0..a_{n-1}.
///
/// Monomials are packed into 64-bit keys: the top 16 bits hold the total
/// degree and the low 48 bits the exponents, a_0 in the most significant
/// slot. Integer order on keys is therefore graded-lex order. Each exponent
/// slot is min(16, 48 / n_vars) bits wide, which caps the total degree;
/// exceeding it raises Overflow.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct Term {
    std::uint64_t key;
    FieldElem coeff;
  };

  MultiPoly(FieldPtr field, unsigned n_vars);
  static MultiPoly constant(FieldPtr field, unsigned n_vars, FieldElem c);
  /// The variable a_index.
  static MultiPoly variable(FieldPtr field, unsigned n_vars, unsigned index);
  static MultiPoly from_terms(FieldPtr field, unsigned n_vars,
                              const std::vector<std::pair<Exponents, FieldElem>>& terms);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  unsigned n_vars() const noexcept { return n_vars_; }
  unsigned max_total_degree() const noexcept { return max_degree_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Coefficient of the empty monomial.
  FieldElem constant_term() const noexcept;
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;

  /// Terms in descending graded-lex order.
  std::vector<std::pair<Exponents, FieldElem>> terms() const;
  std::span<const Term> raw_terms() const noexcept { return terms_; }
  FieldElem coeff(const Exponents& exps) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(FieldElem c) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept;

  /// Specialization a_i -> point[i]; a ring homomorphism to F_q.
  FieldElem evaluate(std::span<const FieldElem> point) const;

  /// a / b for b dividing a exactly; throws InvalidArgument otherwise.
  friend MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

  void check_compatible(const MultiPoly& other) const;

 private:
  std::uint64_t encode(const Exponents& exps) const;
  Exponents decode(std::uint64_t key) const;
  bool key_divides(std::uint64_t d, std::uint64_t k) const noexcept;
  void combine(const MultiPoly& other, bool subtract);

  FieldPtr field_;
  unsigned n_vars_;
  unsigned width_;
  unsigned max_degree_;
  std::vector<Term> terms_;  // ascending key, no zero coefficients
};

}  // namespace ffsqfree

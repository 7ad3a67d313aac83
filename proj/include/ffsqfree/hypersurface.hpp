#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffsqfree/bipoly.hpp"
#include "ffsqfree/multipoly.hpp"

namespace ffsqfree {

inline constexpr std::uint64_t kDefaultExhaustiveLimit = 1'000'000;

struct SymbolicOptions {
  /// Any intermediate polynomial with more terms raises Overflow.
  std::size_t term_cap = 10'000'000;
  /// When the formal t-leading coefficient is nonconstant, return the
  /// unnormalized Res(F, dF/dt) instead of raising NonconstantLeadingCoefficient.
  bool allow_nonconstant_lc = false;
};

/// F(a; t) = f(a(t), t) for the generic monic a(t) = a_0 + ... + a_{n-1} t^{n-1} + t^n.
struct GenericValue {
  unsigned n = 0;
  /// Coefficient of t^i, trailing zeros trimmed.
  std::vector<MultiPoly> tpoly;

  /// Formal t-degree, -1 if F is identically zero.
  int formal_degree() const noexcept { return static_cast<int>(tpoly.size()) - 1; }
  /// F at a concrete coefficient vector (a_0, ..., a_{n-1}).
  UniPoly specialize(const FieldPtr& field, std::span<const FieldElem> point) const;
};

GenericValue generic_evaluate(const BiPoly& f, unsigned n, const SymbolicOptions& options = {});

/// Resultant of two polynomials in t with MultiPoly coefficients (low degree
/// first) at their formal degrees, by Bareiss elimination on the Sylvester matrix.
MultiPoly sylvester_resultant(std::span<const MultiPoly> f, std::span<const MultiPoly> g,
                              const SymbolicOptions& options = {});

struct SymbolicDiscriminant {
  MultiPoly value;
  /// False when the formal leading coefficient was nonconstant and the
  /// division by it was skipped.
  bool normalized = true;
};

SymbolicDiscriminant symbolic_discriminant_ex(const GenericValue& gv, const SymbolicOptions& options = {});
/// disc_t F(a; t) as a polynomial in a_0..a_{n-1}.
MultiPoly symbolic_discriminant(const GenericValue& gv, const SymbolicOptions& options = {});

/// Res_t(c(t), F_0(a; t)); the constant 1 when c is a unit.
MultiPoly symbolic_resultant(const UniPoly& c, const GenericValue& gv0, const SymbolicOptions& options = {});

/// 2 (n deg_x f + Ht f) deg_x f.
std::int64_t degree_bound(const BiPoly& f, unsigned n);

/// Throws ConstantInX, NotSeparable or ContentNotSquarefree.
void require_hypotheses(const BiPoly& f);

struct CertifyOptions {
  SymbolicOptions symbolic;
  /// Count zeros of disc_part * res_part over F_q^n when q^n <= limit.
  bool count_zeros = true;
  std::uint64_t limit = kDefaultExhaustiveLimit;
  unsigned threads = 0;
};

struct HypersurfaceCertificate {
  std::string f;
  std::uint64_t q = 0;
  unsigned n = 0;
  MultiPoly disc_part;
  MultiPoly res_part;
  /// Formal t-degree of f_0(a(t), t).
  int formal_degree = 0;
  bool lc_normalized = true;
  int product_degree = 0;
  std::int64_t bound = 0;
  bool nontrivial = false;
  bool within_bound = false;
  std::int64_t schmidt_bound = 0;
  std::optional<std::uint64_t> zero_count;
  /// zero_count <= schmidt_bound, when counted.
  std::optional<bool> schmidt_ok;
};

HypersurfaceCertificate certify(const BiPoly& f, unsigned n, const CertifyOptions& options = {});

/// Number of a in F_q^n with disc_part(a) * res_part(a) = 0.
std::uint64_t count_zeros(const HypersurfaceCertificate& cert, const FieldPtr& field, unsigned threads = 0);

struct EquivalenceReport {
  std::uint64_t total = 0;
  /// Monic indices (MonicEnumerator order) with f(a) not square-free.
  std::vector<std::uint64_t> bad_direct;
  /// Monic indices where disc_part * res_part vanishes.
  std::vector<std::uint64_t> bad_hypersurface;
  std::vector<std::uint64_t> disagreements;
  /// Indices where deg f_0(a(t), t) falls below the formal degree.
  std::vector<std::uint64_t> degree_drop_points;
  /// n > Ht(f): the two sets must coincide.
  bool exact_required = false;
  bool agreement = false;
  /// agreement, or every disagreement is a degree-drop point when exactness is not required.
  bool ok = false;
};

EquivalenceReport verify_equivalence(const BiPoly& f, unsigned n, const HypersurfaceCertificate& cert,
                                     std::uint64_t limit = kDefaultExhaustiveLimit, unsigned threads = 0);

}  // namespace ffsqfree

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffsqfree/bipoly.hpp"
#include "ffsqfree/hypersurface.hpp"

namespace ffsqfree {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class CensusMode { Exhaustive, Sample };

std::string to_string(CensusMode mode);
/// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);

struct CensusOptions {
  std::uint64_t limit = kDefaultExhaustiveLimit;
  unsigned threads = 0;
  /// Hypersurface degree used for the (1 - density) q <= D check.
  std::optional<std::int64_t> bound_D;
};

struct CensusReport {
  std::string f;
  std::uint64_t q = 0;
  unsigned n = 0;
  CensusMode mode = CensusMode::Exhaustive;
  std::uint64_t total = 0;
  std::uint64_t squarefree = 0;
  Rational density;
  std::optional<std::int64_t> bound_D;
  /// (1 - density) q <= bound_D; exhaustive mode with bound_D only.
  std::optional<bool> bound_check;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> sample_count;
  /// 95% normal-approximation half-width, sample mode only.
  std::optional<double> half_width;
  /// deg_x f = 0: every value equals gamma_0.
  bool constant_in_x = false;
};

CensusReport count_exhaustive(const BiPoly& f, unsigned n, const CensusOptions& options = {});

/// Uniform draws from [0, q^n) mapped through MonicEnumerator.
///
/// Draws come in chunks of kSampleChunk; chunk c uses std::mt19937_64 seeded
/// by std::seed_seq{seed_lo, seed_hi, c} and rejection sampling, so results
/// depend only on (seed, samples) and not on the thread count.
CensusReport count_sample(const BiPoly& f, unsigned n, std::uint64_t samples, std::uint64_t seed,
                          const CensusOptions& options = {});

inline constexpr std::uint64_t kSampleChunk = 4096;

/// #{C mod D : f(C) = 0 mod D} by enumerating all residues.
std::uint64_t rho(const BiPoly& f, const UniPoly& D, std::uint64_t limit = kDefaultExhaustiveLimit);

struct LocalFactor {
  UniPoly prime;
  std::uint64_t rho;
  /// 1 - rho / |P|^2
  Rational factor;
};

struct EmpiricalDensity {
  unsigned n;
  Rational density;
  /// |density - c_f_truncated|
  Rational deviation;
};

struct RamsayReport {
  std::string f;
  std::uint64_t q = 0;
  unsigned B = 0;
  std::vector<LocalFactor> local_factors;
  Rational c_f_truncated;
  std::vector<EmpiricalDensity> empirical;
  /// Upper bound on |c_f - c_f_truncated|.
  Rational tail_bound;
  std::string tail_derivation;
  bool separable = false;
  bool content_squarefree = false;
  /// Irreducibility over F_q(t) is part of the asymptotic statement but is not tested.
  bool irreducibility_checked = false;
};

RamsayReport cf_truncated(const BiPoly& f, unsigned B, const CensusOptions& options = {});
RamsayReport ramsay_compare(const BiPoly& f, unsigned B, std::span<const unsigned> n_list,
                            const CensusOptions& options = {});

}  // namespace ffsqfree

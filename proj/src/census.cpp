#include "ffsqfree/census.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ffsqfree/error.hpp"
#include "ffsqfree/parallel.hpp"
#include "ffsqfree/parse.hpp"

namespace ffsqfree {

std::string to_string(CensusMode mode) { return mode == CensusMode::Exhaustive ? "exhaustive" : "sample"; }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = gen();
    if (x < limit) return x % bound;
  }
}

void check_census_input(const BiPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "census of the zero polynomial");
}

}  // namespace

CensusReport count_exhaustive(const BiPoly& f, unsigned n, const CensusOptions& options) {
  check_census_input(f);
  MonicEnumerator en(f.field_ptr(), n);
  if (en.size() > options.limit)
    fail(ErrorKind::Overflow, "q^n = " + std::to_string(en.size()) + " exceeds the exhaustive limit " +
                                  std::to_string(options.limit) + "; use sampling mode");
  CensusReport report;
  report.f = format(f);
  report.q = f.field().q();
  report.n = n;
  report.mode = CensusMode::Exhaustive;
  report.total = en.size();
  report.constant_in_x = f.deg_x() == 0;
  if (report.constant_in_x) {
    report.squarefree = is_squarefree(f.gammas()[0]) ? report.total : 0;
  } else {
    report.squarefree = parallel_reduce(en.size(), options.threads, [&](std::uint64_t begin, std::uint64_t end) {
      std::uint64_t count = 0;
      for (std::uint64_t i = begin; i < end; ++i)
        if (value_is_squarefree(f, en.at(i))) ++count;
      return count;
    });
  }
  report.density = Rational(report.squarefree) / Rational(report.total);
  report.bound_D = options.bound_D;
  if (options.bound_D) {
    // (1 - sf/total) q <= D  <=>  (total - sf) q <= D total
    const BigInt lhs = BigInt(report.total - report.squarefree) * report.q;
    const BigInt rhs = BigInt(*options.bound_D) * report.total;
    report.bound_check = lhs <= rhs;
  }
  return report;
}

CensusReport count_sample(const BiPoly& f, unsigned n, std::uint64_t samples, std::uint64_t seed,
                          const CensusOptions& options) {
  check_census_input(f);
  if (samples < 1) fail(ErrorKind::InvalidArgument, "sample count must be at least 1");
  MonicEnumerator en(f.field_ptr(), n);
  CensusReport report;
  report.f = format(f);
  report.q = f.field().q();
  report.n = n;
  report.mode = CensusMode::Sample;
  report.total = samples;
  report.seed = seed;
  report.sample_count = samples;
  report.constant_in_x = f.deg_x() == 0;
  if (report.constant_in_x) {
    report.squarefree = is_squarefree(f.gammas()[0]) ? samples : 0;
  } else {
    const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
    report.squarefree = parallel_reduce(chunks, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
      std::uint64_t count = 0;
      for (std::uint64_t c = begin; c < end; ++c) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
        std::mt19937_64 gen(seq);
        const std::uint64_t draws = std::min(kSampleChunk, samples - c * kSampleChunk);
        for (std::uint64_t s = 0; s < draws; ++s)
          if (value_is_squarefree(f, en.at(draw_below(gen, en.size())))) ++count;
      }
      return count;
    });
  }
  report.density = Rational(report.squarefree) / Rational(samples);
  const double p_hat = static_cast<double>(report.squarefree) / static_cast<double>(samples);
  report.half_width = 1.96 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples));
  return report;
}

std::uint64_t rho(const BiPoly& f, const UniPoly& D, std::uint64_t limit) {
  const UniPoly mod = D.monic();
  if (mod.degree() < 1) fail(ErrorKind::InvalidArgument, "rho needs deg D >= 1");
  const auto d = static_cast<unsigned>(mod.degree());
  const Field& F = mod.field();
  const std::uint64_t count = checked_power(F.q(), d);
  if (count > limit)
    fail(ErrorKind::Overflow, "q^deg D = " + std::to_string(count) + " exceeds the exhaustive limit " +
                                  std::to_string(limit));
  std::vector<Residue> gammas;
  for (const auto& g : f.gammas()) gammas.emplace_back(g, mod);
  std::uint64_t roots = 0;
  std::vector<FieldElem> coeffs(d);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t rest = i;
    for (unsigned j = 0; j < d; ++j) {
      coeffs[j] = F.element(rest % F.q());
      rest /= F.q();
    }
    const Residue C(UniPoly(mod.field_ptr(), coeffs), mod);
    Residue acc(UniPoly(mod.field_ptr()), mod);
    for (std::size_t j = gammas.size(); j-- > 0;) {
      acc *= C;
      acc += gammas[j];
    }
    if (acc.is_zero()) ++roots;
  }
  return roots;
}

RamsayReport cf_truncated(const BiPoly& f, unsigned B, const CensusOptions& options) {
  if (B < 1) fail(ErrorKind::InvalidArgument, "truncation degree B must be at least 1");
  require_hypotheses(f);
  const std::uint64_t q = f.field().q();
  RamsayReport report;
  report.f = format(f);
  report.q = q;
  report.B = B;
  report.separable = true;
  report.content_squarefree = true;
  report.c_f_truncated = 1;
  for (const auto& P : irreducibles_up_to(f.field_ptr(), B)) {
    const UniPoly P2 = P * P;
    const std::uint64_t r = rho(f, P2, options.limit);
    const Rational norm2 = Rational(BigInt(checked_power(q, static_cast<unsigned>(P2.degree()))));
    Rational factor = Rational(1) - Rational(r) / norm2;
    report.c_f_truncated *= factor;
    report.local_factors.push_back({P, r, std::move(factor)});
  }

  const std::int64_t l = f.deg_x();
  const UniPoly disc = disc_x(f);
  const std::int64_t bad_degree = disc.degree() + content(f).degree();
  const Rational qB1 = Rational(BigInt(checked_power(q, B + 1)));
  const Rational good_tail =
      Rational(l) / (Rational(static_cast<std::int64_t>(B) + 1) * qB1 * (Rational(1) - Rational(1, q)));
  const Rational bad_tail = Rational(l * (bad_degree / (static_cast<std::int64_t>(B) + 1))) / qB1;
  report.tail_bound = good_tail + bad_tail;
  std::ostringstream why;
  why << "tail <= l*q^-(B+1)/((B+1)(1-1/q)) + l*floor(deg(disc_x f * content)/(B+1))*q^-(B+1)"
      << " with l=" << l << ", q=" << q << ", B=" << B << ", deg(disc_x f * content)=" << bad_degree
      << "; uses rho(P^2) <= l for P coprime to disc_x f * content, rho(P^2) <= l*|P| otherwise,"
      << " #primes of degree d <= q^d/d, and 1 - prod(1 - x_P) <= sum x_P";
  report.tail_derivation = why.str();
  return report;
}

RamsayReport ramsay_compare(const BiPoly& f, unsigned B, std::span<const unsigned> n_list,
                            const CensusOptions& options) {
  RamsayReport report = cf_truncated(f, B, options);
  CensusOptions census = options;
  census.bound_D.reset();
  for (unsigned n : n_list) {
    const CensusReport c = count_exhaustive(f, n, census);
    Rational dev = c.density - report.c_f_truncated;
    if (dev < 0) dev = -dev;
    report.empirical.push_back({n, c.density, std::move(dev)});
  }
  return report;
}

}  // namespace ffsqfree

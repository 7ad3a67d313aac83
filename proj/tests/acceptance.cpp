#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ffsqfree/census.hpp"
#include "ffsqfree/error.hpp"
#include "ffsqfree/hypersurface.hpp"
#include "ffsqfree/parse.hpp"
#include "oracles.hpp"

using namespace ffsqfree;

namespace {

// Runtime budgets in seconds.
constexpr double kBudgetDensityOracle = 10;
constexpr double kBudgetBound = 120;
constexpr double kBudgetCertificate = 120;
constexpr double kBudgetCounterexample = 30;
constexpr double kBudgetEuler = 60;
constexpr double kBudgetOracles = 60;

constexpr int kRandomTrials = 1000;

const char* const kCorpus[] = {"x", "x^2 - t", "x^3 + t*x + 1", "x^4 + 2"};

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

FieldPtr field_of_order(std::uint64_t q) { return make_field(q); }

Outcome criterion_density_oracle() {
  Outcome o;
  for (std::uint64_t q : {2, 3, 5}) {
    const FieldPtr F = field_of_order(q);
    const BiPoly f = parse_bipoly("x", F);
    for (unsigned n = 2; n <= 5; ++n) {
      const auto rep = count_exhaustive(f, n);
      std::uint64_t oracle = 0;
      for (const auto& a : enumerate_monic(F, n))
        if (testing::squarefree_by_trial_division(a)) ++oracle;
      const std::string at = " at q=" + std::to_string(q) + " n=" + std::to_string(n);
      o.require(rep.density == Rational(1) - Rational(1, static_cast<std::int64_t>(q)), "density != 1 - 1/q" + at);
      o.require(rep.squarefree == oracle, "count differs from trial division" + at);
    }
  }
  return o;
}

Outcome criterion_bound() {
  Outcome o;
  int checked = 0;
  for (std::uint64_t q : {3, 5, 7, 11, 13}) {
    const FieldPtr F = field_of_order(q);
    for (const char* text : kCorpus) {
      const BiPoly f = parse_bipoly(text, F);
      if (!is_separable(f)) continue;
      for (unsigned n : {2u, 3u}) {
        if (checked_power(q, n) > 1'000'000) continue;
        CensusOptions opts;
        opts.bound_D = degree_bound(f, n);
        const auto rep = count_exhaustive(f, n, opts);
        const Rational lhs = (Rational(1) - rep.density) * Rational(static_cast<std::int64_t>(q));
        o.require(lhs <= Rational(*opts.bound_D), std::string("bound violated for ") + text + " q=" +
                                                      std::to_string(q) + " n=" + std::to_string(n));
        o.require(rep.bound_check == true, "report check disagrees with exact comparison");
        ++checked;
      }
    }
  }
  o.detail = o.ok ? std::to_string(checked) + " (f, q, n) cases" : o.detail;
  return o;
}

struct CertificateRuns {
  Outcome certificate;
  Outcome schmidt;
};

CertificateRuns criterion_certificate() {
  CertificateRuns r;
  int exact = 0, counted = 0;
  for (std::uint64_t q : {3, 5}) {
    const FieldPtr F = field_of_order(q);
    for (const char* text : kCorpus) {
      const BiPoly f = parse_bipoly(text, F);
      if (!is_separable(f)) continue;
      for (unsigned n : {1u, 2u}) {
        const std::string at = std::string(text) + " q=" + std::to_string(q) + " n=" + std::to_string(n);
        const HypersurfaceCertificate cert = certify(f, n);
        r.certificate.require(!cert.disc_part.is_zero(), "disc_part is zero for " + at);
        r.certificate.require(!cert.res_part.is_zero(), "res_part is zero for " + at);
        r.certificate.require(cert.product_degree <= cert.bound, "degree above bound for " + at);
        if (static_cast<int>(n) > height(f)) {
          const EquivalenceReport eq = verify_equivalence(f, n, cert);
          r.certificate.require(eq.agreement, "zero set differs from non-square-free set for " + at);
          ++exact;
        }
        r.schmidt.require(cert.zero_count.has_value(), "zero count missing for " + at);
        if (cert.zero_count) {
          const auto bound = static_cast<std::uint64_t>(cert.product_degree) * checked_power(q, n - 1);
          r.schmidt.require(*cert.zero_count <= bound, "zero count above D q^(n-1) for " + at);
          ++counted;
        }
      }
    }
  }
  if (r.certificate.ok) r.certificate.detail = std::to_string(exact) + " exact equivalence checks";
  if (r.schmidt.ok) r.schmidt.detail = std::to_string(counted) + " zero counts";
  return r;
}

Outcome criterion_counterexample() {
  Outcome o;
  for (auto [q, max_n] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 2}}) {
    const FieldPtr F = field_of_order(q);
    const BiPoly f = no_squarefree_example(F);
    o.require(content(f).is_one(), "family is not primitive over F_" + std::to_string(q));
    o.require(is_separable(f), "family is not separable over F_" + std::to_string(q));
    const UniPoly base = UniPoly::monomial(F, F->one(), q) - UniPoly::variable(F);
    const UniPoly witness = base * base;
    for (unsigned n = 1; n <= max_n; ++n) {
      for (const auto& a : enumerate_monic(F, n))
        o.require(divides(witness, evaluate(f, a)), "(t^q - t)^2 does not divide f(" + format(a) + ")");
      o.require(count_exhaustive(f, n).squarefree == 0, "square-free value found at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion_euler() {
  Outcome o;
  const FieldPtr F3 = field_of_order(3);
  std::vector<unsigned> ns;
  for (unsigned n = 2; n <= 10; ++n) ns.push_back(n);
  const RamsayReport r = ramsay_compare(parse_bipoly("x", F3), 4, ns);
  Rational gap = r.c_f_truncated - Rational(2, 3);
  if (gap < 0) gap = -gap;
  o.require(gap <= r.tail_bound, "|c_f_truncated - 2/3| exceeds the tail bound");
  for (const auto& e : r.empirical)
    o.require(e.density == Rational(2, 3), "density at n=" + std::to_string(e.n) + " is not 2/3");

  const FieldPtr F2 = field_of_order(2);
  std::vector<unsigned> small;
  for (unsigned n = 1; n <= 10; ++n) small.push_back(n);
  const RamsayReport z = ramsay_compare(no_squarefree_example(F2), 1, small);
  o.require(z.c_f_truncated == 0, "counterexample c_f_truncated is not 0");
  for (const auto& e : z.empirical)
    o.require(e.density == 0, "counterexample density at n=" + std::to_string(e.n) + " is not 0");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "gap %.3e <= tail %.3e", static_cast<double>(gap), static_cast<double>(r.tail_bound));
    o.detail = buf;
  }
  return o;
}

Outcome criterion_oracles() {
  Outcome o;
  for (std::uint64_t q : {2, 3}) {
    const FieldPtr F = field_of_order(q);
    for (unsigned d = 0; d <= 6; ++d)
      for (const auto& a : enumerate_monic(F, d))
        o.require(is_squarefree(a) == testing::squarefree_by_trial_division(a),
                  "is_squarefree disagrees on " + format(a));
  }

  std::mt19937_64 rng(20261016);
  const FieldPtr fields[] = {make_field(2), make_field(3), make_field(7), make_field(101), make_field(2, 3),
                             make_field(3, 2)};
  for (int pairs = 0, i = 0; pairs < kRandomTrials; ++i) {
    const FieldPtr& F = fields[static_cast<std::size_t>(i) % std::size(fields)];
    const UniPoly f = testing::random_nonzero_poly(F, 7, rng);
    const UniPoly g = testing::random_nonzero_poly(F, 7, rng);
    if (f.degree() + g.degree() == 0) continue;
    o.require(resultant(f, g) == resultant_euclid(f, g), "Sylvester and PRS resultants differ");
    ++pairs;
  }

  int checks = 0, attempts = 0;
  while (checks < kRandomTrials && attempts < 100 * kRandomTrials) {
    ++attempts;
    const FieldPtr& F = fields[static_cast<std::size_t>(attempts) % std::size(fields)];
    const BiPoly f = testing::random_bipoly(F, 3, 2, rng);
    if (f.deg_x() < 1) continue;
    const unsigned n = 1 + static_cast<unsigned>(rng() % 2);
    const GenericValue gv = generic_evaluate(f, n);
    if (gv.formal_degree() < 1) continue;
    SymbolicOptions opts;
    opts.allow_nonconstant_lc = true;
    const SymbolicDiscriminant disc = symbolic_discriminant_ex(gv, opts);
    if (!disc.normalized) continue;
    for (int k = 0; k < 5 && checks < kRandomTrials; ++k) {
      std::vector<FieldElem> point;
      for (unsigned v = 0; v < n; ++v) point.push_back(testing::random_elem(*F, rng));
      const UniPoly value = gv.specialize(F, point);
      if (value.degree() != gv.formal_degree()) continue;
      o.require(discriminant(value) == disc.value.evaluate(point),
                "symbolic discriminant disagrees after specialization for " + format(f));
      ++checks;
    }
  }
  o.require(checks == kRandomTrials, "only " + std::to_string(checks) + " specialization checks ran");
  return o;
}

Outcome criterion_reproducible() {
  Outcome o;
  const std::vector<std::vector<std::string>> configs = {
      {"density", "--p", "5", "--f", "x^2 - t", "--n", "2..4", "--format", "csv"},
      {"density", "--p", "5", "--f", "x^2 - t", "--n", "2..4", "--format", "json"},
      {"density", "--p", "101", "--f", "x^4 + 2", "--n", "3", "--mode", "sample", "--samples", "20000", "--seed",
       "7", "--format", "csv"},
      {"density", "--p", "101", "--f", "x^4 + 2", "--n", "3", "--mode", "sample", "--samples", "20000", "--seed",
       "7"},
      {"certify", "--p", "3", "--f", "x^3 + t*x + 1", "--n", "2", "--verify"},
      {"ramsay", "--p", "3", "--f", "x^2 - t", "--B", "2", "--n", "2..6"},
      {"counterexample", "--p", "2", "--max-n", "4"},
  };
  for (const auto& args : configs) {
    std::string outputs[2];
    for (auto& text : outputs) {
      std::ostringstream out, err;
      const int code = cli::run_cli(args, out, err);
      o.require(code == 0, "run failed: " + args[0] + " " + err.str());
      text = out.str();
    }
    o.require(!outputs[0].empty() && outputs[0] == outputs[1], "output differs between runs of " + args[0]);
  }
  if (o.ok) o.detail = std::to_string(configs.size()) + " configs";
  return o;
}

struct Timed {
  Outcome outcome;
  double seconds;
};

Timed timed(const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {o, elapsed.count()};
}

bool report(int index, const std::string& name, const Outcome& outcome, double seconds, double budget) {
  const bool in_time = budget <= 0 || seconds < budget;
  const bool pass = outcome.ok && in_time;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds);
  std::cout << (pass ? "PASS" : "FAIL") << " [" << index << "] " << name << " (" << timing;
  if (budget > 0) std::cout << " of " << budget << "s";
  std::cout << ")";
  if (!outcome.detail.empty()) std::cout << ": " << outcome.detail;
  if (!in_time) std::cout << ": over the runtime budget";
  std::cout << "\n";
  return pass;
}

}  // namespace

int main() {
  bool all = true;
  const Timed c1 = timed(criterion_density_oracle);
  all &= report(1, "density of f = x equals 1 - 1/q", c1.outcome, c1.seconds, kBudgetDensityOracle);
  const Timed c2 = timed(criterion_bound);
  all &= report(2, "(1 - density) q <= 2(n deg f + Ht f) deg f", c2.outcome, c2.seconds, kBudgetBound);

  CertificateRuns runs;
  const Timed c3 = timed([&] {
    runs = criterion_certificate();
    return runs.certificate;
  });
  if (!c3.outcome.ok && runs.schmidt.ok && runs.schmidt.detail.empty()) runs.schmidt = c3.outcome;
  all &= report(3, "hypersurface certificate", c3.outcome, c3.seconds, kBudgetCertificate);
  all &= report(4, "zero count <= D q^(n-1)", runs.schmidt, c3.seconds, kBudgetCertificate);

  const Timed c5 = timed(criterion_counterexample);
  all &= report(5, "no square-free values for the counterexample family", c5.outcome, c5.seconds,
                kBudgetCounterexample);
  const Timed c6 = timed(criterion_euler);
  all &= report(6, "truncated Euler product and empirical densities", c6.outcome, c6.seconds, kBudgetEuler);
  const Timed c7 = timed(criterion_oracles);
  all &= report(7, "oracle equivalence suite", c7.outcome, c7.seconds, kBudgetOracles);
  const Timed c8 = timed(criterion_reproducible);
  all &= report(8, "byte-identical reports for identical configs", c8.outcome, c8.seconds, 0);
  return all ? 0 : 1;
}

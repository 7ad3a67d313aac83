#include "doctest.h"

#include <cmath>

#include "ffsqfree/census.hpp"
#include "ffsqfree/error.hpp"
#include "ffsqfree/parse.hpp"
#include "oracles.hpp"

using namespace ffsqfree;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ffsqfree::Error");
  return ErrorKind::InvalidArgument;
}

BiPoly B(const FieldPtr& F, const char* text) { return parse_bipoly(text, F); }
UniPoly U(const FieldPtr& F, const char* text) { return parse_unipoly(text, F); }

}  // namespace

TEST_CASE("exhaustive density of f = x") {
  auto F3 = make_field(3);
  const auto r = count_exhaustive(B(F3, "x"), 2);
  CHECK(r.total == 9);
  CHECK(r.squarefree == 6);
  CHECK(r.density == Rational(2, 3));
  CHECK(to_string(r.density) == "2/3");
  CHECK_FALSE(r.bound_check);

  const auto r2 = count_exhaustive(B(make_field(2), "x"), 3);
  CHECK(r2.density == Rational(1, 2));

  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto F = q == 4 ? make_field(2, 2) : make_field(q);
    for (unsigned n = 2; n <= 4; ++n)
      CHECK(count_exhaustive(B(F, "x"), n).density == Rational(1) - Rational(1, static_cast<std::int64_t>(q)));
  }
}

TEST_CASE("exhaustive census agrees with trial division") {
  auto F3 = make_field(3);
  for (const char* text : {"x^2 - t", "x^3 + t*x + 1", "t*x + 1", "x^2 + x + t^2"}) {
    const BiPoly f = B(F3, text);
    for (unsigned n = 1; n <= 3; ++n) {
      std::uint64_t sf = 0;
      for (const auto& a : enumerate_monic(F3, n)) {
        const UniPoly v = evaluate(f, a);
        if (!v.is_zero() && testing::squarefree_by_trial_division(v)) ++sf;
      }
      CHECK(count_exhaustive(f, n).squarefree == sf);
    }
  }
}

TEST_CASE("bound check and limits") {
  auto F3 = make_field(3);
  CensusOptions opts;
  opts.bound_D = 4;
  const auto r = count_exhaustive(B(F3, "x"), 2, opts);
  REQUIRE(r.bound_check);
  CHECK(*r.bound_check);
  opts.bound_D = 0;
  CHECK_FALSE(*count_exhaustive(B(F3, "x"), 2, opts).bound_check);
  opts.limit = 8;
  CHECK(kind_of([&] { count_exhaustive(B(F3, "x"), 2, opts); }) == ErrorKind::Overflow);
  CHECK(kind_of([&] { count_exhaustive(BiPoly(F3), 2); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("constant in x") {
  auto F3 = make_field(3);
  const auto r = count_exhaustive(B(F3, "t^2 + 1"), 2);
  CHECK(r.constant_in_x);
  CHECK(r.density == 1);
  CHECK(count_exhaustive(B(F3, "t^2"), 2).density == 0);
}

TEST_CASE("sample mode") {
  auto F101 = make_field(101);
  const auto r = count_sample(B(F101, "x"), 3, 10000, 42);
  REQUIRE(r.half_width);
  CHECK(r.mode == CensusMode::Sample);
  CHECK(r.total == 10000);
  const double truth = 1.0 - 1.0 / 101.0;
  const double est = static_cast<double>(r.squarefree) / 10000.0;
  CHECK(std::abs(est - truth) <= 3 * std::max(*r.half_width, 1e-3));

  CensusOptions one, many;
  one.threads = 1;
  many.threads = 4;
  auto F5 = make_field(5);
  const auto a = count_sample(B(F5, "x^2 - t"), 4, 20000, 7, one);
  const auto b = count_sample(B(F5, "x^2 - t"), 4, 20000, 7, many);
  CHECK(a.squarefree == b.squarefree);
  CHECK(count_sample(B(F5, "x^2 - t"), 4, 20000, 8, one).squarefree != a.squarefree);

  const auto single = count_sample(B(F5, "x"), 2, 1, 1);
  CHECK(single.total == 1);
  CHECK(single.half_width == 0.0);
  CHECK(kind_of([&] { count_sample(B(F5, "x"), 2, 0, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("sampling intervals cover the exhaustive density") {
  auto F5 = make_field(5);
  const BiPoly f = B(F5, "x^2 - t");
  const Rational exact = count_exhaustive(f, 4).density;
  const double truth = static_cast<double>(exact);
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto r = count_sample(f, 4, 2000, seed);
    const double est = static_cast<double>(r.squarefree) / 2000.0;
    if (std::abs(est - truth) <= *r.half_width) ++covered;
  }
  CHECK(covered >= 24);
}

TEST_CASE("rho") {
  auto F3 = make_field(3);
  CHECK(rho(B(F3, "x"), U(F3, "t^2")) == 1);
  CHECK(rho(B(F3, "x^2 - t"), U(F3, "t^2")) == 0);
  auto F5 = make_field(5);
  CHECK(rho(B(F5, "x^2 - t"), U(F5, "(t - 1)^2")) == 2);
  CHECK(rho(B(F5, "x^2 - t"), U(F5, "2*(t - 1)^2")) == 2);
  CHECK(rho(B(F5, "t*x"), U(F5, "t^2")) == 5);
  CHECK(kind_of([&] { rho(B(F5, "x"), U(F5, "3")); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { rho(B(F5, "x"), U(F5, "t^9"), 1000); }) == ErrorKind::Overflow);
}

TEST_CASE("truncated Euler product") {
  auto F3 = make_field(3);
  const auto r = cf_truncated(B(F3, "x"), 3);
  Rational expected = 1;
  for (unsigned d = 1; d <= 3; ++d) {
    const Rational factor = Rational(1) - Rational(1, static_cast<std::int64_t>(std::pow(3, 2 * d)));
    for (std::int64_t i = 0; i < testing::necklace_count(3, static_cast<int>(d)); ++i) expected *= factor;
  }
  CHECK(r.c_f_truncated == expected);
  CHECK(r.local_factors.size() == 3 + 3 + 8);
  CHECK(r.tail_bound > 0);
  CHECK_FALSE(r.irreducibility_checked);

  auto F2 = make_field(2);
  const auto z = cf_truncated(no_squarefree_example(F2), 1);
  CHECK(z.c_f_truncated == 0);

  CHECK(kind_of([&] { cf_truncated(B(F3, "x"), 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { cf_truncated(B(F3, "x^3 - t"), 2); }) == ErrorKind::NotSeparable);
}

TEST_CASE("ramsay comparison for f = x") {
  auto F3 = make_field(3);
  const unsigned ns[] = {2, 3, 4, 5};
  const auto r = ramsay_compare(B(F3, "x"), 4, ns);
  REQUIRE(r.empirical.size() == 4);
  for (const auto& e : r.empirical) CHECK(e.density == Rational(2, 3));
  const Rational gap = r.c_f_truncated - Rational(2, 3);
  CHECK(gap > 0);
  CHECK(gap <= r.tail_bound);
}

TEST_CASE("ramsay comparison for x^2 - t over F_3") {
  auto F3 = make_field(3);
  const unsigned ns[] = {2, 3, 4, 5, 6, 7, 8};
  const auto r = ramsay_compare(B(F3, "x^2 - t"), 3, ns);
  REQUIRE(r.empirical.size() == 7);
  for (const auto& e : r.empirical) CHECK(e.deviation <= r.tail_bound + Rational(1, 20));
}

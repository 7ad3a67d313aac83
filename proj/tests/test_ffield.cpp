#include "doctest.h"

#include <random>
#include <set>

#include "ffsqfree/error.hpp"
#include "ffsqfree/ffield.hpp"
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

}  // namespace

TEST_CASE("make_field picks the first irreducible modulus") {
  auto f3 = make_field(3, 1);
  CHECK(f3->q() == 3);
  CHECK(f3->modulus() == std::vector<std::uint64_t>{0, 1});

  // Monic quadratics over F_2: u^2, u^2+u, u^2+1 = (u+1)^2 are reducible.
  auto f4 = make_field(2, 2);
  CHECK(f4->modulus() == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(f4->q() == 4);

  // Over F_3, u^2+1 is irreducible (no roots) and precedes u^2+u+2 etc.
  CHECK(make_field(3, 2)->modulus() == std::vector<std::uint64_t>{1, 0, 1});
  // (1, 0, 1) precedes (1, 1, 0): u^3+u^2+1 comes before u^3+u+1.
  CHECK(make_field(2, 3)->modulus() == std::vector<std::uint64_t>{1, 0, 1, 1});
}

TEST_CASE("make_field rejects bad requests") {
  CHECK(kind_of([] { make_field(4, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_field(1, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_field(5, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { make_field(1048583, 1); }) == ErrorKind::Overflow);
  CHECK(kind_of([] { make_field(2, 40); }) == ErrorKind::Overflow);
}

TEST_CASE("arithmetic examples") {
  auto f5 = make_field(5);
  CHECK(f5->inv(FieldElem{2}) == FieldElem{3});
  // exhaustive inverse search agrees with inv
  for (std::uint64_t a = 1; a < 5; ++a) {
    std::uint64_t found = 0;
    for (std::uint64_t b = 1; b < 5; ++b)
      if (a * b % 5 == 1) found = b;
    CHECK(f5->inv(FieldElem{a}).code == found);
  }
  CHECK(kind_of([&] { f5->inv(f5->zero()); }) == ErrorKind::DivisionByZero);

  auto f4 = make_field(2, 2);
  const FieldElem u = f4->generator();
  const FieldElem u1 = f4->add(u, f4->one());
  CHECK(f4->mul(u, u1) == f4->one());
  CHECK(f4->mul(u, u) == u1);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, k] : std::vector<std::pair<int, unsigned>>{{2, 1}, {3, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    auto F = make_field(p, k);
    CAPTURE(F->q());
    const auto all = F->elements();
    for (auto a : all) {
      CHECK(F->pow(a, F->q()) == a);
      CHECK(F->add(a, F->neg(a)) == F->zero());
      if (a.code != 0) CHECK(F->mul(a, F->inv(a)) == F->one());
      for (auto b : all) {
        CHECK(F->mul(a, b) == testing::naive_field_mul(*F, a, b));
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        CHECK(F->pow(F->add(a, b), F->p()) == F->add(F->pow(a, F->p()), F->pow(b, F->p())));
      }
    }
  }
}

TEST_CASE("randomized associativity and distributivity") {
  std::mt19937_64 rng(11);
  for (auto [p, k] : std::vector<std::pair<int, unsigned>>{{101, 1}, {3, 5}, {65521, 1}, {257, 3}}) {
    auto F = make_field(p, k);
    for (int i = 0; i < 500; ++i) {
      const auto a = testing::random_elem(*F, rng), b = testing::random_elem(*F, rng),
                 c = testing::random_elem(*F, rng);
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->mul(a, b) == testing::naive_field_mul(*F, a, b));
      if (a.code != 0) CHECK(F->mul(a, F->inv(a)) == F->one());
    }
  }
}

TEST_CASE("enumerate_field") {
  CHECK(make_field(2)->elements() == std::vector<FieldElem>{{0}, {1}});
  CHECK(make_field(3)->elements() == std::vector<FieldElem>{{0}, {1}, {2}});
  auto f4 = make_field(2, 2);
  const auto all = f4->elements();
  REQUIRE(all.size() == 4);
  CHECK(all.front() == f4->zero());
  std::set<std::uint64_t> codes;
  for (auto a : all) codes.insert(a.code);
  CHECK(codes.size() == 4);
  for (auto a : all)
    for (auto b : all) {
      CHECK(f4->contains(f4->add(a, b)));
      CHECK(f4->contains(f4->mul(a, b)));
    }
}

TEST_CASE("element text form") {
  auto f3 = make_field(3);
  CHECK(f3->format(FieldElem{2}) == "2");
  auto f9 = make_field(3, 2);
  const FieldElem u = f9->generator();
  CHECK(f9->format(f9->add(u, f9->one())) == "u+1");
  CHECK(f9->format(f9->add(f9->add(u, u), f9->one())) == "2*u+1");
  CHECK(f9->format(f9->zero()) == "0");
  auto f8 = make_field(2, 3);
  CHECK(f8->format(f8->mul(f8->generator(), f8->generator())) == "u^2");
  CHECK(f8->from_int(-1) == f8->one());
}

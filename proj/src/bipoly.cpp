#include "ffsqfree/bipoly.hpp"

#include <algorithm>
#include <string>

#include "ffsqfree/determinant.hpp"
#include "ffsqfree/error.hpp"

namespace ffsqfree {

namespace {

struct UniPolyRing {
  FieldPtr field;
  UniPoly zero() const { return UniPoly(field); }
  UniPoly one() const { return UniPoly::constant(field, field->one()); }
  bool is_zero(const UniPoly& a) const { return a.is_zero(); }
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return a * b; }
  UniPoly sub(const UniPoly& a, const UniPoly& b) const { return a - b; }
  UniPoly neg(const UniPoly& a) const { return -a; }
  UniPoly exact_div(const UniPoly& a, const UniPoly& b) const { return exact_quotient(a, b); }
};

}  // namespace

BiPoly::BiPoly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) fail(ErrorKind::InvalidArgument, "null field");
}

BiPoly::BiPoly(FieldPtr field, std::vector<UniPoly> gammas)
    : field_(std::move(field)), gammas_(std::move(gammas)) {
  if (!field_) fail(ErrorKind::InvalidArgument, "null field");
  for (const auto& g : gammas_)
    if (g.field_ptr() != field_ && !(g.field() == *field_))
      fail(ErrorKind::FieldMismatch, "coefficient over a different field");
  normalize();
}

BiPoly BiPoly::from_t(const UniPoly& c) { return BiPoly(c.field_ptr(), {c}); }

BiPoly BiPoly::variable(FieldPtr field) {
  UniPoly zero(field);
  UniPoly one = UniPoly::constant(field, field->one());
  return BiPoly(std::move(field), {zero, one});
}

void BiPoly::normalize() {
  while (!gammas_.empty() && gammas_.back().is_zero()) gammas_.pop_back();
}

void BiPoly::check_same_field(const BiPoly& other) const {
  if (field_ != other.field_ && !(*field_ == *other.field_))
    fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

UniPoly BiPoly::gamma(std::size_t j) const {
  return j < gammas_.size() ? gammas_[j] : UniPoly(field_);
}

const UniPoly& BiPoly::leading() const {
  if (gammas_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
  return gammas_.back();
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  check_same_field(other);
  if (other.gammas_.size() > gammas_.size()) gammas_.resize(other.gammas_.size(), UniPoly(field_));
  for (std::size_t j = 0; j < other.gammas_.size(); ++j) gammas_[j] += other.gammas_[j];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  check_same_field(other);
  if (other.gammas_.size() > gammas_.size()) gammas_.resize(other.gammas_.size(), UniPoly(field_));
  for (std::size_t j = 0; j < other.gammas_.size(); ++j) gammas_[j] -= other.gammas_[j];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  a.check_same_field(b);
  if (a.is_zero() || b.is_zero()) return BiPoly(a.field_);
  std::vector<UniPoly> out(a.gammas_.size() + b.gammas_.size() - 1, UniPoly(a.field_));
  for (std::size_t i = 0; i < a.gammas_.size(); ++i) {
    if (a.gammas_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.gammas_.size(); ++j) out[i + j] += a.gammas_[i] * b.gammas_[j];
  }
  return BiPoly(a.field_, std::move(out));
}

BiPoly BiPoly::operator-() const {
  BiPoly out(*this);
  for (auto& g : out.gammas_) g = -g;
  return out;
}

BiPoly BiPoly::scaled(const UniPoly& c) const {
  std::vector<UniPoly> out;
  out.reserve(gammas_.size());
  for (const auto& g : gammas_) out.push_back(g * c);
  return BiPoly(field_, std::move(out));
}

int height(const BiPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "height of the zero polynomial");
  int h = 0;
  for (const auto& g : f.gammas()) h = std::max(h, g.degree());
  return h;
}

int deg_x(const BiPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return f.deg_x();
}

UniPoly content(const BiPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "content of the zero polynomial");
  UniPoly c(f.field_ptr());
  for (const auto& g : f.gammas()) {
    if (g.is_zero()) continue;
    c = c.is_zero() ? g.monic() : gcd(c, g);
    if (c.degree() == 0) break;
  }
  return c;
}

PrimitiveDecomposition primitive_decompose(const BiPoly& f) {
  UniPoly c = content(f);
  std::vector<UniPoly> prim;
  prim.reserve(f.gammas().size());
  for (const auto& g : f.gammas()) prim.push_back(exact_quotient(g, c));
  const bool sqfree = is_squarefree(c);
  return {std::move(c), BiPoly(f.field_ptr(), std::move(prim)), sqfree};
}

BiPoly derivative_x(const BiPoly& f) {
  const Field& F = f.field();
  std::vector<UniPoly> out;
  for (std::size_t j = 1; j < f.gammas().size(); ++j)
    out.push_back(f.gammas()[j].scaled(F.from_int(static_cast<std::int64_t>(j % F.p()))));
  return BiPoly(f.field_ptr(), std::move(out));
}

UniPoly disc_x(const BiPoly& f) {
  if (f.is_zero() || f.deg_x() < 1) fail(ErrorKind::ConstantInX, "discriminant in x needs deg_x f >= 1");
  const auto l = static_cast<std::size_t>(f.deg_x());
  const BiPoly df = derivative_x(f);
  if (df.is_zero()) return UniPoly(f.field_ptr());
  std::vector<UniPoly> dcoeffs(l, UniPoly(f.field_ptr()));
  std::copy(df.gammas().begin(), df.gammas().end(), dcoeffs.begin());
  UniPolyRing ring{f.field_ptr()};
  UniPoly res = bareiss_determinant(
      sylvester_matrix<UniPoly>(f.gammas(), dcoeffs, ring.zero()), ring);
  res = exact_quotient(res, f.leading());
  if ((l * (l - 1) / 2) % 2 == 1) res = -res;
  return res;
}

bool is_separable(const BiPoly& f) { return !disc_x(f).is_zero(); }

UniPoly evaluate(const BiPoly& f, const UniPoly& a) {
  UniPoly acc(f.field_ptr());
  a.check_same_field(acc);
  for (std::size_t j = f.gammas().size(); j-- > 0;) {
    acc *= a;
    acc += f.gammas()[j];
  }
  return acc;
}

bool value_is_squarefree(const BiPoly& f, const UniPoly& a) {
  const UniPoly v = evaluate(f, a);
  return !v.is_zero() && is_squarefree(v);
}

UniPoly specialize_t(const BiPoly& f, FieldElem rho) {
  std::vector<FieldElem> out;
  out.reserve(f.gammas().size());
  for (const auto& g : f.gammas()) out.push_back(g.eval(rho));
  return UniPoly(f.field_ptr(), std::move(out));
}

BiPoly no_squarefree_example(const FieldPtr& field) {
  if (field->q() > kMaxCounterexampleOrder)
    fail(ErrorKind::Overflow, "counterexample has deg_x q^2; q = " + std::to_string(field->q()) +
                                  " exceeds " + std::to_string(kMaxCounterexampleOrder));
  const Field& F = *field;
  BiPoly out = BiPoly::from_t(UniPoly::constant(field, F.one()));
  for (auto alpha : F.elements()) {
    for (auto beta : F.elements()) {
      // x - alpha t - beta
      UniPoly shift(field, {F.neg(beta), F.neg(alpha)});
      out = out * BiPoly(field, {shift, UniPoly::constant(field, F.one())});
    }
  }
  return out;
}

}  // namespace ffsqfree

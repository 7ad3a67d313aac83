#include "ffsqfree/polyring.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ffsqfree/determinant.hpp"
#include "ffsqfree/error.hpp"

namespace ffsqfree {

namespace {

struct ScalarRing {
  const Field& field;
  FieldElem zero() const { return field.zero(); }
  FieldElem one() const { return field.one(); }
  bool is_zero(FieldElem a) const { return field.is_zero(a); }
  FieldElem mul(FieldElem a, FieldElem b) const { return field.mul(a, b); }
  FieldElem sub(FieldElem a, FieldElem b) const { return field.sub(a, b); }
  FieldElem neg(FieldElem a) const { return field.neg(a); }
  FieldElem exact_div(FieldElem a, FieldElem b) const { return field.div(a, b); }
};

}  // namespace

UniPoly::UniPoly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) fail(ErrorKind::InvalidArgument, "null field");
}

UniPoly::UniPoly(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) fail(ErrorKind::InvalidArgument, "null field");
  for (auto c : coeffs_)
    if (!field_->contains(c)) fail(ErrorKind::FieldMismatch, "coefficient outside the field");
  normalize();
}

UniPoly UniPoly::constant(FieldPtr field, FieldElem c) {
  return UniPoly(std::move(field), std::vector<FieldElem>{c});
}

UniPoly UniPoly::monomial(FieldPtr field, FieldElem c, std::size_t degree) {
  std::vector<FieldElem> coeffs(degree + 1, field->zero());
  coeffs[degree] = c;
  return UniPoly(std::move(field), std::move(coeffs));
}

UniPoly UniPoly::variable(FieldPtr field) {
  auto one = field->one();
  return monomial(std::move(field), one, 1);
}

void UniPoly::normalize() noexcept {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

void UniPoly::check_same_field(const UniPoly& other) const {
  if (field_ != other.field_ && !(*field_ == *other.field_))
    fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  check_same_field(other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] = field_->add(coeffs_[i], other.coeffs_[i]);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  check_same_field(other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] = field_->sub(coeffs_[i], other.coeffs_[i]);
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.check_same_field(b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  const Field& F = *a.field_;
  std::vector<FieldElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (F.is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return UniPoly(a.field_, std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& other) { return *this = *this * other; }

UniPoly UniPoly::operator-() const {
  UniPoly out(*this);
  for (auto& c : out.coeffs_) c = field_->neg(c);
  return out;
}

FieldElem UniPoly::eval(FieldElem x) const noexcept {
  FieldElem acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

UniPoly UniPoly::scaled(FieldElem c) const {
  std::vector<FieldElem> out(coeffs_);
  for (auto& x : out) x = field_->mul(x, c);
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<FieldElem> out(k, field_->zero());
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(leading()));
}

DivRem divrem(const UniPoly& f, const UniPoly& g) {
  f.check_same_field(g);
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& F = f.field();
  const auto dg = static_cast<std::size_t>(g.degree());
  std::vector<FieldElem> rem(f.coeffs().begin(), f.coeffs().end());
  if (rem.size() <= dg) return {UniPoly(f.field_ptr()), f};
  std::vector<FieldElem> quot(rem.size() - dg, F.zero());
  const FieldElem lc_inv = F.inv(g.leading());
  const auto gc = g.coeffs();
  for (std::size_t top = rem.size(); top-- > dg;) {
    const FieldElem c = F.mul(rem[top], lc_inv);
    if (F.is_zero(c)) continue;
    const std::size_t shift = top - dg;
    quot[shift] = c;
    for (std::size_t i = 0; i <= dg; ++i) rem[shift + i] = F.sub(rem[shift + i], F.mul(c, gc[i]));
  }
  rem.resize(dg);
  return {UniPoly(f.field_ptr(), std::move(quot)), UniPoly(f.field_ptr(), std::move(rem))};
}

UniPoly operator%(const UniPoly& f, const UniPoly& g) { return divrem(f, g).remainder; }

UniPoly exact_quotient(const UniPoly& f, const UniPoly& g) {
  auto [quot, rem] = divrem(f, g);
  if (!rem.is_zero()) fail(ErrorKind::InvalidArgument, "division is not exact");
  return quot;
}

bool divides(const UniPoly& d, const UniPoly& f) { return (f % d).is_zero(); }

UniPoly derivative(const UniPoly& f) {
  const Field& F = f.field();
  if (f.degree() < 1) return UniPoly(f.field_ptr());
  std::vector<FieldElem> out(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    out[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.p())), f.coeffs()[i]);
  return UniPoly(f.field_ptr(), std::move(out));
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  f.check_same_field(g);
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly pow(const UniPoly& f, std::uint64_t e) {
  UniPoly acc = UniPoly::constant(f.field_ptr(), f.field().one());
  UniPoly base = f;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    if (e > 1) base *= base;
  }
  return acc;
}

bool is_squarefree(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "square-freeness of the zero polynomial");
  if (f.degree() == 0) return true;
  const UniPoly df = derivative(f);
  if (df.is_zero()) return false;
  return gcd(f, df).degree() == 0;
}

FieldElem resultant(const UniPoly& f, const UniPoly& g) {
  f.check_same_field(g);
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
  if (f.degree() + g.degree() < 1)
    fail(ErrorKind::InvalidArgument, "resultant needs deg f + deg g >= 1");
  const Field& F = f.field();
  return bareiss_determinant(sylvester_matrix(f.coeffs(), g.coeffs(), F.zero()), ScalarRing{F});
}

FieldElem resultant_euclid(const UniPoly& f, const UniPoly& g) {
  f.check_same_field(g);
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
  if (f.degree() + g.degree() < 1)
    fail(ErrorKind::InvalidArgument, "resultant needs deg f + deg g >= 1");
  const Field& F = f.field();
  // Res(A, B) = (-1)^{mn} lc(B)^{m - deg R} Res(B, R) with R = A mod B.
  FieldElem acc = F.one();
  UniPoly a = f, b = g;
  while (true) {
    const auto m = static_cast<std::uint64_t>(a.degree());
    const auto n = static_cast<std::uint64_t>(b.degree());
    if (n == 0) return F.mul(acc, F.pow(b.leading(), m));
    UniPoly r = a % b;
    if (r.is_zero()) return F.zero();
    if ((m * n) % 2 == 1) acc = F.neg(acc);
    acc = F.mul(acc, F.pow(b.leading(), m - static_cast<std::uint64_t>(r.degree())));
    a = std::move(b);
    b = std::move(r);
  }
}

FieldElem discriminant(const UniPoly& f) {
  if (f.degree() < 1) fail(ErrorKind::ConstantPolynomial, "discriminant of a constant");
  const Field& F = f.field();
  const auto m = static_cast<std::size_t>(f.degree());
  const UniPoly df = derivative(f);
  if (df.is_zero()) return F.zero();
  std::vector<FieldElem> dcoeffs(m, F.zero());
  std::copy(df.coeffs().begin(), df.coeffs().end(), dcoeffs.begin());
  FieldElem res =
      bareiss_determinant(sylvester_matrix<FieldElem>(f.coeffs(), dcoeffs, F.zero()), ScalarRing{F});
  res = F.div(res, f.leading());
  if ((m * (m - 1) / 2) % 2 == 1) res = F.neg(res);
  return res;
}

std::uint64_t checked_power(std::uint64_t q, unsigned n) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / q)
      fail(ErrorKind::Overflow, std::to_string(q) + "^" + std::to_string(n) +
                                    " exceeds the index range; use sampling mode");
    out *= q;
  }
  return out;
}

MonicEnumerator::MonicEnumerator(FieldPtr field, unsigned degree)
    : field_(std::move(field)), degree_(degree), size_(checked_power(field_->q(), degree)) {}

std::vector<FieldElem> MonicEnumerator::digits(std::uint64_t index) const {
  if (index >= size_) fail(ErrorKind::InvalidArgument, "monic index out of range");
  std::vector<FieldElem> out(degree_);
  const std::uint64_t q = field_->q();
  for (unsigned j = 0; j < degree_; ++j) {
    out[j] = field_->element(index % q);
    index /= q;
  }
  return out;
}

UniPoly MonicEnumerator::at(std::uint64_t index) const {
  auto coeffs = digits(index);
  coeffs.push_back(field_->one());
  return UniPoly(field_, std::move(coeffs));
}

std::vector<UniPoly> enumerate_monic(const FieldPtr& field, unsigned degree) {
  MonicEnumerator en(field, degree);
  std::vector<UniPoly> out;
  out.reserve(en.size());
  for (std::uint64_t i = 0; i < en.size(); ++i) out.push_back(en.at(i));
  return out;
}

std::vector<UniPoly> irreducibles_up_to(const FieldPtr& field, unsigned max_degree) {
  if (max_degree < 1) fail(ErrorKind::InvalidArgument, "maximum degree must be at least 1");
  std::vector<UniPoly> primes;
  for (unsigned d = 1; d <= max_degree; ++d) {
    MonicEnumerator en(field, d);
    const std::size_t lower = primes.size();
    for (std::uint64_t i = 0; i < en.size(); ++i) {
      UniPoly cand = en.at(i);
      bool irreducible = true;
      for (std::size_t j = 0; j < lower; ++j) {
        if (2 * primes[j].degree() > static_cast<int>(d)) break;
        if (divides(primes[j], cand)) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) primes.push_back(std::move(cand));
    }
  }
  return primes;
}

Residue::Residue(UniPoly value, UniPoly modulus) : value_(std::move(value)), modulus_(modulus.monic()) {
  value_.check_same_field(modulus_);
  if (modulus_.degree() < 1) fail(ErrorKind::InvalidArgument, "residue modulus must have degree >= 1");
  if (value_.degree() >= modulus_.degree()) value_ = value_ % modulus_;
}

void Residue::check_modulus(const Residue& other) const {
  if (!(modulus_ == other.modulus_)) fail(ErrorKind::ModulusMismatch, "residues modulo different polynomials");
}

Residue& Residue::operator+=(const Residue& other) {
  check_modulus(other);
  value_ += other.value_;
  return *this;
}

Residue& Residue::operator*=(const Residue& other) {
  check_modulus(other);
  value_ = (value_ * other.value_) % modulus_;
  return *this;
}

std::vector<Residue> enumerate_residues(const UniPoly& modulus, std::uint64_t limit) {
  const UniPoly mod = modulus.monic();
  if (mod.degree() < 1) fail(ErrorKind::InvalidArgument, "residue modulus must have degree >= 1");
  const auto d = static_cast<unsigned>(mod.degree());
  const std::uint64_t count = checked_power(mod.field().q(), d);
  if (count > limit)
    fail(ErrorKind::Overflow, "q^deg D = " + std::to_string(count) + " exceeds the exhaustive limit " +
                                  std::to_string(limit));
  const Field& F = mod.field();
  std::vector<Residue> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<FieldElem> coeffs(d);
    std::uint64_t rest = i;
    for (unsigned j = 0; j < d; ++j) {
      coeffs[j] = F.element(rest % F.q());
      rest /= F.q();
    }
    out.emplace_back(UniPoly(mod.field_ptr(), std::move(coeffs)), mod);
  }
  return out;
}

}  // namespace ffsqfree

#include "ffsqfree/multipoly.hpp"

#include <algorithm>
#include <string>

#include "ffsqfree/error.hpp"

namespace ffsqfree {

namespace {

constexpr unsigned kDegreeShift = 48;
constexpr std::uint64_t kExponentMask = (std::uint64_t{1} << kDegreeShift) - 1;

unsigned key_degree(std::uint64_t key) noexcept { return static_cast<unsigned>(key >> kDegreeShift); }

}  // namespace

MultiPoly::MultiPoly(FieldPtr field, unsigned n_vars) : field_(std::move(field)), n_vars_(n_vars) {
  if (!field_) fail(ErrorKind::InvalidArgument, "null field");
  if (n_vars_ > kDegreeShift) fail(ErrorKind::Overflow, "at most 48 variables are supported");
  width_ = n_vars_ == 0 ? 0 : std::min(16u, kDegreeShift / n_vars_);
  max_degree_ = n_vars_ == 0 ? 0xffffu : (1u << width_) - 1;
}

MultiPoly MultiPoly::constant(FieldPtr field, unsigned n_vars, FieldElem c) {
  MultiPoly out(std::move(field), n_vars);
  if (c.code != 0) out.terms_.push_back({0, c});
  return out;
}

MultiPoly MultiPoly::variable(FieldPtr field, unsigned n_vars, unsigned index) {
  if (index >= n_vars) fail(ErrorKind::ArityMismatch, "variable index out of range");
  MultiPoly out(std::move(field), n_vars);
  Exponents e(n_vars, 0);
  e[index] = 1;
  out.terms_.push_back({out.encode(e), out.field_->one()});
  return out;
}

MultiPoly MultiPoly::from_terms(FieldPtr field, unsigned n_vars,
                                const std::vector<std::pair<Exponents, FieldElem>>& terms) {
  MultiPoly out(std::move(field), n_vars);
  for (const auto& [exps, c] : terms) {
    if (!out.field_->contains(c)) fail(ErrorKind::FieldMismatch, "coefficient outside the field");
    MultiPoly mono(out.field_, n_vars);
    if (c.code != 0) mono.terms_.push_back({out.encode(exps), c});
    out += mono;
  }
  return out;
}

std::uint64_t MultiPoly::encode(const Exponents& exps) const {
  if (exps.size() != n_vars_) fail(ErrorKind::ArityMismatch, "exponent vector has wrong length");
  std::uint64_t packed = 0, degree = 0;
  for (unsigned e : exps) {
    degree += e;
    packed = (packed << width_) | e;
  }
  if (degree > max_degree_)
    fail(ErrorKind::Overflow, "total degree " + std::to_string(degree) + " exceeds the packing limit " +
                                  std::to_string(max_degree_));
  return (degree << kDegreeShift) | packed;
}

MultiPoly::Exponents MultiPoly::decode(std::uint64_t key) const {
  Exponents out(n_vars_);
  const std::uint64_t mask = (std::uint64_t{1} << width_) - 1;
  for (unsigned i = n_vars_; i-- > 0;) {
    out[i] = static_cast<unsigned>(key & mask);
    key >>= width_;
  }
  return out;
}

bool MultiPoly::key_divides(std::uint64_t d, std::uint64_t k) const noexcept {
  const std::uint64_t mask = (std::uint64_t{1} << width_) - 1;
  for (unsigned i = 0; i < n_vars_; ++i) {
    if ((d & mask) > (k & mask)) return false;
    d >>= width_;
    k >>= width_;
  }
  return true;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (n_vars_ != other.n_vars_) fail(ErrorKind::ArityMismatch, "multivariate polynomials of different arity");
  if (field_ != other.field_ && !(*field_ == *other.field_))
    fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0);
}

FieldElem MultiPoly::constant_term() const noexcept {
  return !terms_.empty() && terms_[0].key == 0 ? terms_[0].coeff : field_->zero();
}

int MultiPoly::total_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(key_degree(terms_.back().key));
}

std::vector<std::pair<MultiPoly::Exponents, FieldElem>> MultiPoly::terms() const {
  std::vector<std::pair<Exponents, FieldElem>> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.emplace_back(decode(it->key), it->coeff);
  return out;
}

FieldElem MultiPoly::coeff(const Exponents& exps) const {
  const std::uint64_t key = encode(exps);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key < k; });
  return it != terms_.end() && it->key == key ? it->coeff : field_->zero();
}

void MultiPoly::combine(const MultiPoly& other, bool subtract) {
  check_compatible(other);
  const Field& F = *field_;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].key < other.terms_[j].key)) {
      out.push_back(terms_[i++]);
    } else {
      const Term& t = other.terms_[j++];
      const FieldElem c = subtract ? F.neg(t.coeff) : t.coeff;
      if (i < terms_.size() && terms_[i].key == t.key) {
        const FieldElem s = F.add(terms_[i++].coeff, c);
        if (s.code != 0) out.push_back({t.key, s});
      } else {
        out.push_back({t.key, c});
      }
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  combine(other, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  combine(other, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.field_, a.n_vars_);
  if (a.is_zero() || b.is_zero()) return out;
  if (static_cast<unsigned>(a.total_degree() + b.total_degree()) > a.max_degree_)
    fail(ErrorKind::Overflow, "product degree exceeds the packing limit " + std::to_string(a.max_degree_));
  const Field& F = *a.field_;
  const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const MultiPoly& large = &small == &a ? b : a;
  if (small.terms_.size() == 1) {
    // Adding one key to sorted keys keeps them sorted.
    const MultiPoly::Term s = small.terms_[0];
    out.terms_.reserve(large.terms_.size());
    for (const auto& t : large.terms_) out.terms_.push_back({t.key + s.key, F.mul(t.coeff, s.coeff)});
    return out;
  }
  std::vector<MultiPoly::Term> prods;
  prods.reserve(small.terms_.size() * large.terms_.size());
  for (const auto& s : small.terms_)
    for (const auto& t : large.terms_) prods.push_back({s.key + t.key, F.mul(s.coeff, t.coeff)});
  std::sort(prods.begin(), prods.end(),
            [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return x.key < y.key; });
  for (std::size_t i = 0; i < prods.size();) {
    const std::uint64_t key = prods[i].key;
    FieldElem acc = prods[i++].coeff;
    while (i < prods.size() && prods[i].key == key) acc = F.add(acc, prods[i++].coeff);
    if (acc.code != 0) out.terms_.push_back({key, acc});
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& t : out.terms_) t.coeff = field_->neg(t.coeff);
  return out;
}

MultiPoly MultiPoly::scaled(FieldElem c) const {
  MultiPoly out(field_, n_vars_);
  if (c.code == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.key, field_->mul(t.coeff, c)});
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept {
  if (a.n_vars_ != b.n_vars_ || a.terms_.size() != b.terms_.size()) return false;
  if (a.field_ != b.field_ && !(*a.field_ == *b.field_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

FieldElem MultiPoly::evaluate(std::span<const FieldElem> point) const {
  if (point.size() != n_vars_) fail(ErrorKind::ArityMismatch, "evaluation point has wrong length");
  const Field& F = *field_;
  if (terms_.empty()) return F.zero();
  // powers[i][e] = point[i]^e
  const unsigned top = key_degree(terms_.back().key);
  std::vector<std::vector<FieldElem>> powers(n_vars_, std::vector<FieldElem>(top + 1));
  for (unsigned i = 0; i < n_vars_; ++i) {
    if (!F.contains(point[i])) fail(ErrorKind::FieldMismatch, "evaluation point outside the field");
    powers[i][0] = F.one();
    for (unsigned e = 1; e <= top; ++e) powers[i][e] = F.mul(powers[i][e - 1], point[i]);
  }
  const std::uint64_t mask = (std::uint64_t{1} << width_) - 1;
  FieldElem acc = F.zero();
  for (const auto& t : terms_) {
    FieldElem v = t.coeff;
    std::uint64_t key = t.key;
    for (unsigned i = n_vars_; i-- > 0;) {
      v = F.mul(v, powers[i][key & mask]);
      key >>= width_;
    }
    acc = F.add(acc, v);
  }
  return acc;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "multivariate division by zero");
  const Field& F = *a.field_;
  if (b.is_constant()) return a.scaled(F.inv(b.terms_[0].coeff));
  using Term = MultiPoly::Term;
  const Term lead = b.terms_.back();
  const FieldElem lead_inv = F.inv(lead.coeff);
  std::vector<Term> rem = a.terms_;
  std::vector<Term> quot;
  std::vector<Term> next;
  auto not_exact = [] { fail(ErrorKind::InvalidArgument, "multivariate division is not exact"); };
  while (!rem.empty()) {
    const Term top = rem.back();
    if (key_degree(top.key) < key_degree(lead.key) || !a.key_divides(lead.key, top.key)) not_exact();
    const std::uint64_t qkey = top.key - lead.key;
    const FieldElem qc = F.mul(top.coeff, lead_inv);
    quot.push_back({qkey, qc});
    // rem -= (qc * m_qkey) * b; the leading terms cancel.
    next.clear();
    next.reserve(rem.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    const std::size_t bn = b.terms_.size() - 1;
    const std::size_t rn = rem.size() - 1;
    while (i < rn || j < bn) {
      if (j == bn || (i < rn && rem[i].key < b.terms_[j].key + qkey)) {
        next.push_back(rem[i++]);
      } else {
        const std::uint64_t key = b.terms_[j].key + qkey;
        const FieldElem c = F.neg(F.mul(qc, b.terms_[j++].coeff));
        if (i < rn && rem[i].key == key) {
          const FieldElem s = F.add(rem[i++].coeff, c);
          if (s.code != 0) next.push_back({key, s});
        } else {
          next.push_back({key, c});
        }
      }
    }
    std::swap(rem, next);
  }
  std::reverse(quot.begin(), quot.end());
  MultiPoly out(a.field_, a.n_vars_);
  out.terms_ = std::move(quot);
  return out;
}

}  // namespace ffsqfree

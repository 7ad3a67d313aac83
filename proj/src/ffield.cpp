#include "ffsqfree/ffield.hpp"

#include <algorithm>

#include "ffsqfree/error.hpp"

namespace ffsqfree {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over F_p, low degree first, used only to pick the modulus
// and for the generic multiplication path.
using Fp = std::vector<std::uint64_t>;

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t t = r0 / r1;
    std::int64_t r2 = r0 - t * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - t * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (s0 < 0) s0 += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(s0);
}

// a mod m for monic-or-not m != 0.
Fp fp_rem(Fp a, const Fp& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lc_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lc_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_rem(std::move(r), m, p);
}

Fp fp_gcd(Fp a, Fp b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Fp r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: m of degree k is irreducible iff gcd(u^{p^i} - u, m) = 1 for i <= k/2.
bool fp_irreducible(const Fp& m, std::uint64_t p) {
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  Fp h = {0, 1};  // u
  for (std::size_t i = 1; i <= k / 2; ++i) {
    // h <- h^p mod m
    Fp base = h, acc = {1};
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = fp_mulmod(acc, base, m, p);
      base = fp_mulmod(base, base, m, p);
    }
    h = acc;
    Fp diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (fp_gcd(diff, m, p).size() > 1) return false;
  }
  return true;
}

Fp first_irreducible(std::uint64_t p, unsigned k) {
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // c_0 is the most significant digit of idx.
    Fp m(k + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned j = k; j-- > 0;) {
      m[j] = rest % p;
      rest /= p;
    }
    m[k] = 1;
    if (m[0] == 0) continue;  // divisible by u
    if (fp_irreducible(m, p)) return m;
  }
  fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;

}  // namespace

FieldPtr Field::make(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) fail(ErrorKind::Overflow, "characteristic must be below 2^20");
  if (k == 0) fail(ErrorKind::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(ErrorKind::Overflow, "field order p^k must not exceed 2^32");
  }
  return FieldPtr(new Field(p, k, first_irreducible(p, k)));
}

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  if (k_ > 1 && q_ <= kLogTableLimit) build_log_tables();
}

void Field::build_log_tables() {
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](FieldElem a, std::uint64_t e) {
    FieldElem acc = one();
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = mul_generic(acc, a);
      a = mul_generic(a, a);
    }
    return acc;
  };
  FieldElem g{0};
  for (std::uint64_t c = 2; c < q_; ++c) {
    bool primitive = true;
    for (auto r : factors)
      if (slow_pow(FieldElem{c}, order / r) == one()) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = FieldElem{c};
      break;
    }
  }
  exp_.resize(order);
  log_.assign(q_, 0);
  FieldElem x = one();
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x.code);
    log_[x.code] = static_cast<std::uint32_t>(i);
    x = mul_generic(x, g);
  }
}

FieldElem Field::generator() const {
  const std::uint64_t u[2] = {0, 1};
  return from_coeffs(u);
}

FieldElem Field::from_int(std::int64_t value) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return FieldElem{static_cast<std::uint64_t>(r)};
}

FieldElem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  Fp a(coeffs.begin(), coeffs.end());
  for (auto& c : a) c %= p_;
  a = fp_rem(std::move(a), modulus_, p_);
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p_ + a[i];
  return FieldElem{code};
}

std::vector<std::uint64_t> Field::coeffs(FieldElem a) const {
  std::vector<std::uint64_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = a.code % p_;
    a.code /= p_;
  }
  return out;
}

FieldElem Field::add(FieldElem a, FieldElem b) const noexcept {
  if (k_ == 1) {
    std::uint64_t s = a.code + b.code;
    return FieldElem{s >= p_ ? s - p_ : s};
  }
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t s = a.code % p_ + b.code % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    place *= p_;
    a.code /= p_;
    b.code /= p_;
  }
  return FieldElem{out};
}

FieldElem Field::neg(FieldElem a) const noexcept {
  if (k_ == 1) return FieldElem{a.code == 0 ? 0 : p_ - a.code};
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t d = a.code % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a.code /= p_;
  }
  return FieldElem{out};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem Field::mul_generic(FieldElem a, FieldElem b) const {
  if (a.code == 0 || b.code == 0) return zero();
  const auto ca = coeffs(a), cb = coeffs(b);
  Fp r(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + ca[i] * cb[j]) % p_;
  return from_coeffs(r);
}

FieldElem Field::mul(FieldElem a, FieldElem b) const noexcept {
  if (k_ == 1) return FieldElem{a.code * b.code % p_};
  if (a.code == 0 || b.code == 0) return zero();
  if (!exp_.empty()) {
    const std::uint64_t s = std::uint64_t{log_[a.code]} + log_[b.code];
    return FieldElem{exp_[s % (q_ - 1)]};
  }
  return mul_generic(a, b);
}

FieldElem Field::inv(FieldElem a) const {
  if (a.code == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
  if (k_ == 1) return FieldElem{inv_mod(a.code, p_)};
  if (!exp_.empty()) return FieldElem{exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
  return pow(a, q_ - 2);
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem acc = one();
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
  }
  return acc;
}

FieldElem Field::element(std::uint64_t index) const {
  if (index >= q_) fail(ErrorKind::InvalidArgument, "element index out of range");
  return FieldElem{index};
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(FieldElem{i});
  return out;
}

std::string Field::format(FieldElem a) const {
  if (k_ == 1) return std::to_string(a.code);
  if (a.code == 0) return "0";
  const auto c = coeffs(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += 'u';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ffsqfree

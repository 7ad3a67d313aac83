#include "ffsqfree/hypersurface.hpp"

#include <algorithm>
#include <string>

#include "ffsqfree/determinant.hpp"
#include "ffsqfree/error.hpp"
#include "ffsqfree/parallel.hpp"
#include "ffsqfree/parse.hpp"

namespace ffsqfree {

namespace {

using TPoly = std::vector<MultiPoly>;

void enforce_cap(const MultiPoly& p, const SymbolicOptions& options) {
  if (p.term_count() > options.term_cap)
    fail(ErrorKind::Overflow, "symbolic expansion exceeded the term cap of " +
                                  std::to_string(options.term_cap) + " monomials");
}

struct MultiPolyRing {
  FieldPtr field;
  unsigned n_vars;
  const SymbolicOptions& options;

  MultiPoly zero() const { return MultiPoly(field, n_vars); }
  MultiPoly one() const { return MultiPoly::constant(field, n_vars, field->one()); }
  bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const {
    MultiPoly out = a * b;
    enforce_cap(out, options);
    return out;
  }
  MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
  MultiPoly neg(const MultiPoly& a) const { return -a; }
  MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) const { return exact_divide(a, b); }
};

void trim(TPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b, const SymbolicOptions& options) {
  if (a.empty() || b.empty()) return {};
  const MultiPoly zero(a[0].field_ptr(), a[0].n_vars());
  TPoly out(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
      enforce_cap(out[i + j], options);
    }
  }
  trim(out);
  return out;
}

TPoly lift(const UniPoly& g, unsigned n_vars) {
  TPoly out;
  out.reserve(g.coeffs().size());
  for (auto c : g.coeffs()) out.push_back(MultiPoly::constant(g.field_ptr(), n_vars, c));
  return out;
}

// Point of F_q^n for a monic index, matching MonicEnumerator::digits.
void index_to_point(const Field& F, std::uint64_t index, std::vector<FieldElem>& point) {
  for (auto& x : point) {
    x = F.element(index % F.q());
    index /= F.q();
  }
}

}  // namespace

UniPoly GenericValue::specialize(const FieldPtr& field, std::span<const FieldElem> point) const {
  std::vector<FieldElem> coeffs;
  coeffs.reserve(tpoly.size());
  for (const auto& c : tpoly) coeffs.push_back(c.evaluate(point));
  return UniPoly(field, std::move(coeffs));
}

GenericValue generic_evaluate(const BiPoly& f, unsigned n, const SymbolicOptions& options) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "generic degree n must be at least 1");
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "generic evaluation of the zero polynomial");
  const FieldPtr& field = f.field_ptr();
  // a(t) = a_0 + a_1 t + ... + a_{n-1} t^{n-1} + t^n
  TPoly a;
  for (unsigned i = 0; i < n; ++i) a.push_back(MultiPoly::variable(field, n, i));
  a.push_back(MultiPoly::constant(field, n, field->one()));
  TPoly acc;
  for (std::size_t j = f.gammas().size(); j-- > 0;) {
    acc = tpoly_mul(acc, a, options);
    TPoly g = lift(f.gammas()[j], n);
    if (g.size() > acc.size()) acc.resize(g.size(), MultiPoly(field, n));
    for (std::size_t i = 0; i < g.size(); ++i) acc[i] += g[i];
    trim(acc);
  }
  return GenericValue{n, std::move(acc)};
}

MultiPoly sylvester_resultant(std::span<const MultiPoly> f, std::span<const MultiPoly> g,
                              const SymbolicOptions& options) {
  if (f.empty() || g.empty()) fail(ErrorKind::ZeroPolynomial, "resultant needs coefficient lists");
  const MultiPoly zero(f[0].field_ptr(), f[0].n_vars());
  MultiPolyRing ring{f[0].field_ptr(), f[0].n_vars(), options};
  return bareiss_determinant(sylvester_matrix<MultiPoly>(f, g, zero), ring);
}

SymbolicDiscriminant symbolic_discriminant_ex(const GenericValue& gv, const SymbolicOptions& options) {
  const int m = gv.formal_degree();
  if (m < 1) fail(ErrorKind::ConstantPolynomial, "formal t-degree of f(a(t), t) must be at least 1");
  const FieldPtr& field = gv.tpoly[0].field_ptr();
  const Field& F = *field;
  const unsigned n_vars = gv.tpoly[0].n_vars();
  TPoly deriv;
  bool deriv_zero = true;
  for (int i = 1; i <= m; ++i) {
    deriv.push_back(gv.tpoly[i].scaled(F.from_int(i % static_cast<std::int64_t>(F.p()))));
    deriv_zero = deriv_zero && deriv.back().is_zero();
  }
  if (deriv_zero) return {MultiPoly(field, n_vars), true};
  MultiPoly det = sylvester_resultant(gv.tpoly, deriv, options);
  const MultiPoly& lc = gv.tpoly.back();
  bool normalized = true;
  if (lc.is_constant()) {
    det = det.scaled(F.inv(lc.constant_term()));
  } else if (options.allow_nonconstant_lc) {
    normalized = false;
  } else {
    fail(ErrorKind::NonconstantLeadingCoefficient,
         "formal leading coefficient of f(a(t), t) is not constant (n <= Ht f)");
  }
  const auto mm = static_cast<std::uint64_t>(m);
  if ((mm * (mm - 1) / 2) % 2 == 1) det = -det;
  return {std::move(det), normalized};
}

MultiPoly symbolic_discriminant(const GenericValue& gv, const SymbolicOptions& options) {
  return symbolic_discriminant_ex(gv, options).value;
}

MultiPoly symbolic_resultant(const UniPoly& c, const GenericValue& gv0, const SymbolicOptions& options) {
  if (c.is_zero()) fail(ErrorKind::ZeroPolynomial, "content is zero");
  if (gv0.tpoly.empty()) fail(ErrorKind::ZeroPolynomial, "f_0(a(t), t) is identically zero");
  const FieldPtr& field = gv0.tpoly[0].field_ptr();
  const unsigned n_vars = gv0.tpoly[0].n_vars();
  if (c.degree() == 0) return MultiPoly::constant(field, n_vars, field->one());
  if (!is_squarefree(c)) fail(ErrorKind::ContentNotSquarefree, "content " + format(c) + " is not square-free");
  const TPoly cc = lift(c.monic(), n_vars);
  return sylvester_resultant(cc, gv0.tpoly, options);
}

std::int64_t degree_bound(const BiPoly& f, unsigned n) {
  const std::int64_t l = deg_x(f);
  return 2 * (static_cast<std::int64_t>(n) * l + height(f)) * l;
}

void require_hypotheses(const BiPoly& f) {
  if (f.is_zero() || f.deg_x() < 1) fail(ErrorKind::ConstantInX, "f must have positive degree in x");
  if (!is_separable(f)) fail(ErrorKind::NotSeparable, format(f) + " is not separable (disc_x f = 0)");
  const UniPoly c = content(f);
  if (!is_squarefree(c)) fail(ErrorKind::ContentNotSquarefree, "content " + format(c) + " is not square-free");
}

std::uint64_t count_zeros(const HypersurfaceCertificate& cert, const FieldPtr& field, unsigned threads) {
  const std::uint64_t total = checked_power(field->q(), cert.n);
  return parallel_reduce(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<FieldElem> point(cert.n);
    std::uint64_t zeros = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      index_to_point(*field, i, point);
      if (cert.disc_part.evaluate(point).code == 0 || cert.res_part.evaluate(point).code == 0) ++zeros;
    }
    return zeros;
  });
}

HypersurfaceCertificate certify(const BiPoly& f, unsigned n, const CertifyOptions& options) {
  require_hypotheses(f);
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be at least 1");
  const auto decomposition = primitive_decompose(f);
  const GenericValue gv0 = generic_evaluate(decomposition.primitive, n, options.symbolic);
  SymbolicDiscriminant disc = symbolic_discriminant_ex(gv0, options.symbolic);
  MultiPoly res = symbolic_resultant(decomposition.content, gv0, options.symbolic);
  const MultiPoly product = disc.value * res;
  const int product_degree = product.total_degree();
  const std::int64_t bound = degree_bound(f, n);
  const std::uint64_t q = f.field().q();
  std::int64_t schmidt = std::max(product_degree, 0);
  for (unsigned i = 1; i < n; ++i) schmidt *= static_cast<std::int64_t>(q);

  HypersurfaceCertificate cert{
      .f = format(f),
      .q = q,
      .n = n,
      .disc_part = std::move(disc.value),
      .res_part = std::move(res),
      .formal_degree = gv0.formal_degree(),
      .lc_normalized = disc.normalized,
      .product_degree = product_degree,
      .bound = bound,
      .nontrivial = false,
      .within_bound = false,
      .schmidt_bound = schmidt,
      .zero_count = std::nullopt,
      .schmidt_ok = std::nullopt,
  };
  cert.nontrivial = !cert.disc_part.is_zero() && !cert.res_part.is_zero();
  cert.within_bound = cert.nontrivial && product_degree <= bound;
  if (options.count_zeros) {
    const std::uint64_t points = checked_power(q, n);
    if (points <= options.limit) {
      cert.zero_count = count_zeros(cert, f.field_ptr(), options.threads);
      cert.schmidt_ok = cert.nontrivial && static_cast<std::int64_t>(*cert.zero_count) <= schmidt;
    }
  }
  return cert;
}

namespace {

struct EquivalenceSlice {
  std::vector<std::uint64_t> bad_direct, bad_hypersurface, disagreements, drops;

  EquivalenceSlice& operator+=(const EquivalenceSlice& o) {
    auto append = [](auto& dst, const auto& src) { dst.insert(dst.end(), src.begin(), src.end()); };
    append(bad_direct, o.bad_direct);
    append(bad_hypersurface, o.bad_hypersurface);
    append(disagreements, o.disagreements);
    append(drops, o.drops);
    return *this;
  }
};

}  // namespace

EquivalenceReport verify_equivalence(const BiPoly& f, unsigned n, const HypersurfaceCertificate& cert,
                                     std::uint64_t limit, unsigned threads) {
  if (cert.n != n) fail(ErrorKind::InvalidArgument, "certificate was built for a different n");
  MonicEnumerator en(f.field_ptr(), n);
  if (en.size() > limit)
    fail(ErrorKind::Overflow, "q^n = " + std::to_string(en.size()) + " exceeds the exhaustive limit " +
                                  std::to_string(limit) + "; use sampling-mode spot checks");
  const BiPoly f0 = primitive_decompose(f).primitive;
  const EquivalenceSlice merged = parallel_reduce(en.size(), threads, [&](std::uint64_t begin, std::uint64_t end) {
    EquivalenceSlice s;
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto point = en.digits(i);
      UniPoly a = en.at(i);
      const bool direct_bad = !value_is_squarefree(f, a);
      const bool hyper_bad =
          cert.disc_part.evaluate(point).code == 0 || cert.res_part.evaluate(point).code == 0;
      if (direct_bad) s.bad_direct.push_back(i);
      if (hyper_bad) s.bad_hypersurface.push_back(i);
      if (direct_bad != hyper_bad) s.disagreements.push_back(i);
      if (evaluate(f0, a).degree() < cert.formal_degree) s.drops.push_back(i);
    }
    return s;
  });
  EquivalenceReport report;
  report.total = en.size();
  report.bad_direct = merged.bad_direct;
  report.bad_hypersurface = merged.bad_hypersurface;
  report.disagreements = merged.disagreements;
  report.degree_drop_points = merged.drops;
  report.exact_required = static_cast<int>(n) > height(f);
  report.agreement = report.disagreements.empty();
  if (report.agreement) {
    report.ok = true;
  } else if (!report.exact_required) {
    report.ok = std::includes(report.degree_drop_points.begin(), report.degree_drop_points.end(),
                              report.disagreements.begin(), report.disagreements.end());
  }
  return report;
}

}  // namespace ffsqfree

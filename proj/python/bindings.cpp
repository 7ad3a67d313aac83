#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffsqfree/census.hpp"
#include "ffsqfree/error.hpp"
#include "ffsqfree/hypersurface.hpp"
#include "ffsqfree/parse.hpp"
#include "ffsqfree/report_io.hpp"

namespace py = pybind11;
using namespace ffsqfree;

namespace {

BiPoly parse_f(const FieldPtr& field, const std::string& text) {
  return text == "@counterexample" ? no_squarefree_example(field) : parse_bipoly(text, field);
}

std::string density(std::uint64_t p, const std::string& f_text, unsigned n, unsigned k, const std::string& mode,
                    std::uint64_t samples, std::uint64_t seed, std::uint64_t limit, unsigned threads) {
  const FieldPtr field = make_field(p, k);
  const BiPoly f = parse_f(field, f_text);
  CensusOptions opts;
  opts.limit = limit;
  opts.threads = threads;
  if (f.deg_x() >= 1) opts.bound_D = degree_bound(f, n);
  if (mode == "exhaustive") return to_json(count_exhaustive(f, n, opts)).dump();
  if (mode == "sample") return to_json(count_sample(f, n, samples, seed, opts)).dump();
  fail(ErrorKind::InvalidArgument, "mode must be exhaustive or sample");
}

std::string certify_json(std::uint64_t p, const std::string& f_text, unsigned n, unsigned k, bool verify,
                         bool force, std::uint64_t limit, unsigned threads) {
  const FieldPtr field = make_field(p, k);
  const BiPoly f = parse_f(field, f_text);
  CertifyOptions opts;
  opts.symbolic.allow_nonconstant_lc = force;
  opts.limit = limit;
  opts.threads = threads;
  const HypersurfaceCertificate cert = certify(f, n, opts);
  nlohmann::json j = to_json(cert, *field);
  if (verify) j["equivalence"] = to_json(verify_equivalence(f, n, cert, limit, threads));
  return j.dump();
}

std::string ramsay_json(std::uint64_t p, const std::string& f_text, unsigned B, const std::vector<unsigned>& ns,
                        unsigned k, std::uint64_t limit) {
  const FieldPtr field = make_field(p, k);
  CensusOptions opts;
  opts.limit = limit;
  return to_json(ramsay_compare(parse_f(field, f_text), B, ns, opts)).dump();
}

}  // namespace

PYBIND11_MODULE(_ffsqfree, m) {
  m.doc() = "Square-free values of polynomials over F_q[t]";
  static py::exception<Error> error(m, "FFSqfreeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  const auto limit = kDefaultExhaustiveLimit;
  m.def(
      "canonical",
      [](std::uint64_t p, const std::string& text, unsigned k) { return format(parse_f(make_field(p, k), text)); },
      py::arg("p"), py::arg("f"), py::arg("k") = 1);
  m.def(
      "is_squarefree",
      [](std::uint64_t p, const std::string& text, unsigned k) {
        return is_squarefree(parse_unipoly(text, make_field(p, k)));
      },
      py::arg("p"), py::arg("a"), py::arg("k") = 1);
  m.def(
      "disc_x",
      [](std::uint64_t p, const std::string& text, unsigned k) { return format(disc_x(parse_f(make_field(p, k), text))); },
      py::arg("p"), py::arg("f"), py::arg("k") = 1);
  m.def("_density", &density, py::arg("p"), py::arg("f"), py::arg("n"), py::arg("k") = 1,
        py::arg("mode") = "exhaustive", py::arg("samples") = 10000, py::arg("seed") = 0, py::arg("limit") = limit,
        py::arg("threads") = 0);
  m.def("_certify", &certify_json, py::arg("p"), py::arg("f"), py::arg("n"), py::arg("k") = 1,
        py::arg("verify") = false, py::arg("force") = false, py::arg("limit") = limit, py::arg("threads") = 0);
  m.def("_ramsay", &ramsay_json, py::arg("p"), py::arg("f"), py::arg("B"), py::arg("ns"), py::arg("k") = 1,
        py::arg("limit") = limit);
}

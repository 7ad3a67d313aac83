#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ffsqfree/census.hpp"
#include "ffsqfree/error.hpp"
#include "ffsqfree/hypersurface.hpp"
#include "ffsqfree/parse.hpp"
#include "ffsqfree/report_io.hpp"

namespace ffsqfree::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultCounterexampleLimit = 9;
const char* const kCounterexampleMacro = "@counterexample";

struct RunConfig {
  std::string command;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::string f_text;
  std::string n_text;
  std::string mode = "exhaustive";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned B = 3;
  std::optional<std::uint64_t> limit_flag;
  std::string format = "json";
  std::string out = "-";
  bool verify = false;
  bool force = false;
  bool allow_degenerate = false;
  std::optional<unsigned> max_n;
  unsigned threads = 0;
};

struct Resolved {
  FieldPtr field;
  std::optional<BiPoly> f;
  std::vector<unsigned> ns;
  std::uint64_t limit = 0;
  std::string limit_source;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    fail(ErrorKind::InvalidArgument, what + " must be a non-negative integer, got \"" + text + "\"");
  return value;
}

std::vector<unsigned> parse_n_range(const std::string& text) {
  auto as_n = [](const std::string& s) {
    const std::uint64_t v = parse_u64(s, "--n");
    if (v < 1 || v > 64) fail(ErrorKind::InvalidArgument, "--n values must lie in 1..64");
    return static_cast<unsigned>(v);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {as_n(text)};
  const unsigned lo = as_n(text.substr(0, dots));
  const unsigned hi = as_n(text.substr(dots + 2));
  if (lo > hi) fail(ErrorKind::InvalidArgument, "--n range " + text + " is empty");
  std::vector<unsigned> out;
  for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

Resolved resolve(const RunConfig& cfg) {
  Resolved r;
  r.field = make_field(cfg.p, cfg.k);
  if (cfg.command == "counterexample") {
    r.limit = cfg.limit_flag.value_or(kDefaultCounterexampleLimit);
    r.limit_source = cfg.limit_flag ? "flag" : "default";
    return r;
  }
  if (cfg.limit_flag) {
    r.limit = *cfg.limit_flag;
    r.limit_source = "flag";
  } else if (const char* env = std::getenv("FFSQFREE_LIMIT"); env != nullptr && *env != '\0') {
    r.limit = parse_u64(env, "FFSQFREE_LIMIT");
    r.limit_source = "env";
  } else {
    r.limit = kDefaultExhaustiveLimit;
    r.limit_source = "default";
  }
  if (cfg.f_text.empty()) fail(ErrorKind::InvalidArgument, "--f is required");
  r.f = cfg.f_text == kCounterexampleMacro ? no_squarefree_example(r.field) : parse_bipoly(cfg.f_text, r.field);
  if (!cfg.n_text.empty()) {
    r.ns = parse_n_range(cfg.n_text);
  } else if (cfg.command == "ramsay") {
    for (unsigned n = 2; n <= 5; ++n)
      if (checked_power(r.field->q(), n) <= r.limit) r.ns.push_back(n);
  } else {
    r.ns = {2};
  }
  if (cfg.command == "ramsay" && cfg.B < 1) fail(ErrorKind::InvalidArgument, "--B must be at least 1");
  if (cfg.command == "density" && cfg.mode == "sample" && cfg.samples < 1)
    fail(ErrorKind::InvalidArgument, "--samples must be at least 1");
  return r;
}

json config_json(const RunConfig& cfg, const Resolved& r) {
  json j{{"command", cfg.command},
         {"p", cfg.p},
         {"k", cfg.k},
         {"q", r.field->q()},
         {"modulus", r.field->modulus()},
         {"limit", r.limit},
         {"limit_source", r.limit_source},
         {"format", cfg.format},
         {"out", cfg.out},
         {"threads", cfg.threads}};
  if (r.f) {
    j["f_input"] = cfg.f_text;
    j["f"] = format(*r.f);
    j["n"] = r.ns;
  }
  if (cfg.command == "density") {
    j["mode"] = cfg.mode;
    j["allow_degenerate"] = cfg.allow_degenerate;
    if (cfg.mode == "sample") {
      j["samples"] = cfg.samples;
      j["seed"] = cfg.seed;
    }
  } else if (cfg.command == "certify") {
    j["verify"] = cfg.verify;
    j["force"] = cfg.force;
  } else if (cfg.command == "ramsay") {
    j["B"] = cfg.B;
  } else if (cfg.command == "counterexample") {
    j["max_n"] = *cfg.max_n;
  }
  return j;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    out.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) fail(ErrorKind::InvalidArgument, "cannot open " + tmp.string() + " for writing");
    file << text;
    file.flush();
    if (!file) {
      file.close();
      std::filesystem::remove(tmp);
      fail(ErrorKind::InvalidArgument, "failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    fail(ErrorKind::InvalidArgument, "cannot rename output into " + path + ": " + ec.message());
  }
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

int cmd_density(const RunConfig& cfg, const Resolved& r, std::string& text) {
  const BiPoly& f = *r.f;
  std::optional<std::string> warning;
  if (cfg.allow_degenerate) {
    try {
      require_hypotheses(f);
    } catch (const Error& e) {
      warning = std::string("hypotheses bypassed: ") + e.what();
    }
  } else {
    require_hypotheses(f);
  }
  CensusOptions opts;
  opts.limit = r.limit;
  opts.threads = cfg.threads;
  std::vector<CensusReport> reports;
  bool all_pass = true;
  for (unsigned n : r.ns) {
    if (!warning) opts.bound_D = degree_bound(f, n);
    CensusReport rep = cfg.mode == "sample" ? count_sample(f, n, cfg.samples, cfg.seed, opts)
                                            : count_exhaustive(f, n, opts);
    if (rep.mode == CensusMode::Sample) rep.bound_D = opts.bound_D;
    if (rep.bound_check && !*rep.bound_check) all_pass = false;
    reports.push_back(std::move(rep));
  }
  json config = config_json(cfg, r);
  if (cfg.format == "csv") {
    std::string csv = "# config: " + config.dump() + "\n";
    if (warning) csv += "# warning: " + *warning + "\n";
    csv += csv_header() + "\n";
    for (const auto& rep : reports) csv += csv_row(rep) + "\n";
    text = std::move(csv);
  } else {
    json j{{"config", config}, {"reports", json::array()}};
    for (const auto& rep : reports) j["reports"].push_back(to_json(rep));
    j["warning"] = warning ? json(*warning) : json(nullptr);
    text = render_json(j);
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_certify(const RunConfig& cfg, const Resolved& r, std::string& text) {
  const BiPoly& f = *r.f;
  CertifyOptions opts;
  opts.symbolic.allow_nonconstant_lc = cfg.force;
  opts.limit = r.limit;
  opts.threads = cfg.threads;
  json certs = json::array();
  bool all_pass = true;
  for (unsigned n : r.ns) {
    const HypersurfaceCertificate cert = certify(f, n, opts);
    json j = to_json(cert, *r.field);
    all_pass = all_pass && cert.within_bound && cert.schmidt_ok.value_or(true);
    if (cfg.verify) {
      if (checked_power(r.field->q(), n) <= r.limit) {
        const EquivalenceReport eq = verify_equivalence(f, n, cert, r.limit, cfg.threads);
        j["equivalence"] = to_json(eq);
        all_pass = all_pass && eq.ok;
      } else {
        j["equivalence"] = nullptr;
        j["equivalence_skipped"] = "q^n exceeds the exhaustive limit " + std::to_string(r.limit);
      }
    }
    certs.push_back(std::move(j));
  }
  text = render_json(json{{"config", config_json(cfg, r)}, {"certificates", std::move(certs)}});
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_ramsay(const RunConfig& cfg, const Resolved& r, std::string& text) {
  CensusOptions opts;
  opts.limit = r.limit;
  opts.threads = cfg.threads;
  const RamsayReport rep = ramsay_compare(*r.f, cfg.B, r.ns, opts);
  text = render_json(json{{"config", config_json(cfg, r)}, {"ramsay", to_json(rep)}});
  return kExitOk;
}

int cmd_counterexample(const RunConfig& cfg, const Resolved& r, std::string& text) {
  const FieldPtr& field = r.field;
  const std::uint64_t q = field->q();
  if (q * q > r.limit)
    fail(ErrorKind::Overflow, "deg_x f = q^2 = " + std::to_string(q * q) + " exceeds --limit " +
                                  std::to_string(r.limit));
  const BiPoly f = no_squarefree_example(field);
  const UniPoly tq_t = UniPoly::monomial(field, field->one(), static_cast<unsigned>(q)) - UniPoly::variable(field);
  const UniPoly witness = tq_t * tq_t;
  const bool primitive = content(f).is_one();
  const bool separable = is_separable(f);
  json per_degree = json::array();
  std::uint64_t total = 0, divisible = 0, squarefree = 0;
  for (unsigned n = 1; n <= *cfg.max_n; ++n) {
    MonicEnumerator en(field, n);
    std::uint64_t div_n = 0, sf_n = 0;
    for (std::uint64_t i = 0; i < en.size(); ++i) {
      const UniPoly a = en.at(i);
      const UniPoly v = evaluate(f, a);
      if (divides(witness, v)) ++div_n;
      if (!v.is_zero() && is_squarefree(v)) ++sf_n;
    }
    per_degree.push_back({{"n", n}, {"total", en.size()}, {"divisible", div_n}, {"squarefree", sf_n}});
    total += en.size();
    divisible += div_n;
    squarefree += sf_n;
  }
  const bool ok = primitive && separable && divisible == total && squarefree == 0;
  json config = config_json(cfg, r);
  config["f"] = format(f);
  text = render_json(json{{"config", std::move(config)},
                          {"counterexample",
                           {{"f", format(f)},
                            {"deg_x", f.deg_x()},
                            {"primitive", primitive},
                            {"separable", separable},
                            {"witness", format(witness)},
                            {"per_degree", std::move(per_degree)},
                            {"total", total},
                            {"divisible", divisible},
                            {"squarefree", squarefree},
                            {"ok", ok}}}});
  return ok ? kExitOk : kExitCheckFailed;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonconstantLeadingCoefficient:
      return kExitNonconstantLc;
    case ErrorKind::Overflow:
      return kExitOverflow;
    default:
      return kExitInvalid;
  }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "Field characteristic")->required();
  sub->add_option("--k", cfg.k, "Extension degree")->capture_default_str();
  sub->add_option("--limit", cfg.limit_flag, "Exhaustive enumeration limit");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--out", cfg.out, "Output path, - for standard output")->capture_default_str();
  sub->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores")->capture_default_str();
}

void add_poly(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--f", cfg.f_text, "Polynomial in t and x, or @counterexample")->required();
  sub->add_option("--n", cfg.n_text, "Degree n or inclusive range a..b");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Square-free values of polynomials over F_q[t]", "ffsqfree"};
  app.require_subcommand(1);

  auto* density = app.add_subcommand("density", "Count square-free values f(a) over monic a of degree n");
  add_common(density, cfg);
  add_poly(density, cfg);
  density->add_option("--mode", cfg.mode, "Counting mode")
      ->check(CLI::IsMember({"exhaustive", "sample"}))
      ->capture_default_str();
  density->add_option("--samples", cfg.samples, "Sample count")->capture_default_str();
  density->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  density->add_flag("--allow-degenerate", cfg.allow_degenerate, "Run even if f fails the hypotheses");

  auto* cert = app.add_subcommand("certify", "Build the hypersurface certificate");
  add_common(cert, cfg);
  add_poly(cert, cfg);
  cert->add_flag("--verify", cfg.verify, "Compare against direct enumeration");
  cert->add_flag("--force", cfg.force, "Accept a nonconstant formal leading coefficient");

  auto* ramsay = app.add_subcommand("ramsay", "Truncated Euler product against empirical densities");
  add_common(ramsay, cfg);
  add_poly(ramsay, cfg);
  ramsay->add_option("--B", cfg.B, "Maximum prime degree")->capture_default_str();

  auto* counter = app.add_subcommand("counterexample", "Check the family with no square-free values");
  add_common(counter, cfg);
  counter->add_option("--max-n", cfg.max_n, "Largest degree of a to check");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("ffsqfree");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "counterexample" && !cfg.max_n) {
      cfg.max_n = cfg.p == 2 && cfg.k == 1 ? 4 : 2;
    }
    if (cfg.command != "density" && cfg.format != "json")
      fail(ErrorKind::InvalidArgument, cfg.command + " writes JSON only");
    const Resolved resolved = resolve(cfg);
    std::string text;
    int code = kExitOk;
    if (cfg.command == "density") {
      code = cmd_density(cfg, resolved, text);
    } else if (cfg.command == "certify") {
      code = cmd_certify(cfg, resolved, text);
    } else if (cfg.command == "ramsay") {
      code = cmd_ramsay(cfg, resolved, text);
    } else {
      code = cmd_counterexample(cfg, resolved, text);
    }
    write_output(cfg.out, text, out);
    if (code == kExitCheckFailed) err << "ffsqfree: a check failed; see the report\n";
    return code;
  } catch (const Error& e) {
    err << "ffsqfree: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "ffsqfree: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace ffsqfree::cli

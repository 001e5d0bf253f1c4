#include "hankel/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hankel/asymptotics.hpp"
#include "hankel/cache.hpp"
#include "hankel/coulomb.hpp"
#include "hankel/emit.hpp"
#include "hankel/engine.hpp"
#include "hankel/equilibrium.hpp"
#include "hankel/special.hpp"
#include "hankel/verify.hpp"

namespace hankel {
namespace {

struct Common {
  std::string series = "zeta";
  long n = 1;
  long nmax = 0;
  long r = 0;
  std::string digits = "auto";
  long mmax = 0;
  std::string grid;
  uint64_t seed = 1;
  long budget = 400000;
  std::string out_path;
  std::string cache_path;
  std::string format = "csv";
};

DirichletSeries series_of(const std::string& name) {
  if (name == "zeta") return DirichletSeries::zeta();
  if (name == "moebius") return DirichletSeries::moebius_series();
  throw CLI::ValidationError("--series", "unknown series '" + name + "'");
}

long parse_digits(const std::string& s, long auto_value) {
  if (s == "auto") return auto_value;
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--digits", "expects a positive integer or 'auto'");
  }
}

struct GridSpec {
  double a = 0, b = 0, step = 0;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream ss(s);
  if (!(ss >> g.a >> c1 >> g.b >> c2 >> g.step) || c1 != ':' || c2 != ':' ||
      g.step <= 0 || g.b < g.a || !ss.eof()) {
    throw CLI::ValidationError("--grid", "expects a:b:step with step > 0, b >= a");
  }
  return g;
}

void bigreal_cols(const BigReal& v, std::vector<std::string>& row) {
  auto rec = v.to_record();
  row.push_back(rec.significand);
  row.push_back(std::to_string(rec.exponent10));
}

void write_table(const Common& c, const std::string& command, const Table& t,
                 std::ostream& out) {
  std::ostringstream buf;
  if (c.format == "json") {
    emit_json(buf, command, t);
  } else {
    emit_csv(buf, t);
  }
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path, std::ios::trunc | std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path " + c.out_path);
    f << buf.str();
  } else {
    out << buf.str();
  }
}

std::vector<std::string> hankel_row(const HankelResult& h) {
  std::vector<std::string> row{h.series, std::to_string(h.n), std::to_string(h.r),
                               fmt_double(h.log10_value),
                               std::to_string(h.digits_certified),
                               std::to_string(h.working_digits), h.method};
  bigreal_cols(h.value, row);
  return row;
}

const std::vector<std::string> kHankelHeader = {
    "series", "n", "r", "log10_value", "digits_certified", "working_digits",
    "method", "significand", "exponent"};

int do_run(const std::string& command, const Common& c, std::ostream& out,
           std::ostream& err) {
  // cache: warm the store before computing; save afterwards
  const bool has_cache = !c.cache_path.empty();
  if (has_cache) {
    CacheReport rep = cache_load(c.cache_path);
    for (const auto& n : rep.notes) err << "cache: " << n << "\n";
  }

  Table t;
  if (command == "zeta") {
    long digits = parse_digits(c.digits, 60);
    BigReal z = zeta_int(c.n, make_context(std::max<long>(30, digits)));
    t.header = {"s", "digits", "significand", "exponent"};
    std::vector<std::string> row{std::to_string(c.n), std::to_string(z.certified_digits)};
    bigreal_cols(z, row);
    t.rows.push_back(std::move(row));
  } else if (command == "hankel") {
    long target = parse_digits(c.digits, 50);
    HankelResult h = hankel(HankelSpec{series_of(c.series), c.n, c.r}, target);
    t.header = kHankelHeader;
    t.rows.push_back(hankel_row(h));
  } else if (command == "hseq") {
    long target = parse_digits(c.digits, 40);
    long nmax = c.nmax > 0 ? c.nmax : c.n;
    t.header = kHankelHeader;
    std::vector<HankelResult> hs(static_cast<size_t>(nmax));
#pragma omp parallel for schedule(dynamic)
    for (long k = 1; k <= nmax; ++k) {
      hs[static_cast<size_t>(k - 1)] =
          hankel(HankelSpec{series_of(c.series), k, c.r}, target);
    }
    for (const auto& h : hs) t.rows.push_back(hankel_row(h));
  } else if (command == "ratios") {
    long target = parse_digits(c.digits, 40);
    auto rows = ratio_sequences(c.nmax > 0 ? c.nmax : 10, target);
    t.header = {"n", "r0_significand", "r0_exponent", "r1_significand",
                "r1_exponent", "digits_certified"};
    for (const auto& r : rows) {
      std::vector<std::string> row{std::to_string(r.n)};
      bigreal_cols(r.r0, row);
      bigreal_cols(r.r1, row);
      row.push_back(std::to_string(r.r0.certified_digits));
      t.rows.push_back(std::move(row));
    }
  } else if (command == "fit") {
    long target = parse_digits(c.digits, 40);
    long lo = c.n > 1 ? c.n : 20;
    long hi = c.nmax > 0 ? c.nmax : 35;
    if (c.r != 0 && c.r != 1) throw CLI::ValidationError("--r", "fit expects --r 0 or 1");
    auto rows = ratio_sequences(hi, target);
    std::vector<FitSample> samples;
    for (const auto& row : rows) {
      if (row.n < lo || row.n > hi) continue;
      samples.push_back(FitSample{row.n, c.r == 0 ? row.r0.value : row.r1.value});
    }
    FitResult f = fit_inverse_series(
        samples, c.r == 0 ? InvVariable::inv_2n_plus_1 : InvVariable::inv_2n, 5);
    t.header = {"k", "coefficient"};
    for (size_t k = 0; k < f.coefficients.size(); ++k) {
      t.rows.push_back({std::to_string(k + 1), fmt_double(f.coefficients[k])});
    }
  } else if (command == "scaling") {
    long target = parse_digits(c.digits, 40);
    if (c.r != 0 && c.r != 1) throw CLI::ValidationError("--r", "scaling expects --r 0 or 1");
    long nmax = c.nmax > 0 ? c.nmax : 20;
    HankelGrid g = hankel_grid(c.r == 0 ? nmax : 1, c.r == 1 ? nmax : 1, target);
    std::vector<HankelResult> hs = c.r == 0 ? g.h0 : g.h1;
    hs.erase(std::remove_if(hs.begin(), hs.end(),
                            [](const HankelResult& h) { return h.n < 4; }),
             hs.end());
    t.header = {"n", "A_n", "extrapolated"};
    for (size_t count = 1; count <= hs.size(); ++count) {
      std::vector<HankelResult> prefix(hs.begin(), hs.begin() + static_cast<long>(count));
      ScalingFit f = zagier_scaling(prefix, static_cast<int>(c.r));
      const auto& [n, an] = f.a_table.back();
      t.rows.push_back({std::to_string(n), fmt_double(an),
                        f.extrapolated ? fmt_double(f.estimate) : std::string()});
    }
  } else if (command == "hfun") {
    if (c.mmax < 1) throw CLI::ValidationError("--mmax", "hfun needs --mmax >= 1");
    auto table = h_table(static_cast<int>(c.n), static_cast<uint64_t>(c.mmax));
    t.header = {"n", "m", "h"};
    for (const auto& e : table) {
      t.rows.push_back({std::to_string(e.n), std::to_string(e.m), e.value.get_str()});
    }
  } else if (command == "dirichlet") {
    long digits = parse_digits(c.digits, 40);
    uint64_t M = c.mmax > 0 ? static_cast<uint64_t>(c.mmax) : 2000;
    DirichletSum ds = hankel_via_dirichlet(HankelSpec{series_of(c.series), c.n, c.r}, M,
                                           make_context(std::max<long>(30, digits)));
    t.header = {"series", "n",
                "r", "M",
                "partial_significand", "partial_exponent",
                "tail_significand", "tail_exponent"};
    std::vector<std::string> row{c.series, std::to_string(c.n), std::to_string(c.r),
                                 std::to_string(M)};
    bigreal_cols(ds.partial, row);
    bigreal_cols(ds.tail, row);
    t.rows.push_back(std::move(row));
  } else if (command == "mzv") {
    auto terms = mzv_expansion(static_cast<int>(c.n));
    t.header = {"coeff", "composition", "value"};
    std::optional<PrecisionContext> ctx;
    if (c.mmax > 0) ctx = make_context(parse_digits(c.digits, 40));
    for (const auto& term : terms) {
      std::string comp;
      for (size_t i = 0; i < term.exponents.size(); ++i) {
        comp += (i ? " " : "") + std::to_string(term.exponents[i]);
      }
      std::string val;
      if (ctx) {
        val = fmt_double(
            mzv_eval(term.exponents, static_cast<uint64_t>(c.mmax), *ctx).value.to_double());
      }
      t.rows.push_back({std::to_string(term.coeff), comp, val});
    }
  } else if (command == "selberg") {
    long nmax = c.nmax > 0 ? c.nmax : c.n;
    PrecisionContext ctx = make_context(40);
    t.header = {"n", "exact_log", "asymptotic_log", "difference"};
    for (long n = c.nmax > 0 ? 1 : c.n; n <= nmax; ++n) {
      double ex = selberg_exact_log(n, ctx).to_double();
      double as = selberg_asymptotic_log(n);
      t.rows.push_back({std::to_string(n), fmt_double(ex), fmt_double(as),
                        fmt_double(ex - as)});
    }
  } else if (command == "density") {
    GridSpec g = parse_grid(c.grid.empty() ? "0:3:0.01" : c.grid);
    t.header = {"x", "rho", "rhoP"};
    Density rho{DensityKind::rho}, rhoP{DensityKind::rhoP};
    for (double x = g.a; x <= g.b + 1e-12; x += g.step) {
      t.rows.push_back({fmt_double(x), fmt_double(density_eval(rho, x)),
                        fmt_double(density_eval(rhoP, x))});
    }
  } else if (command == "potential") {
    GridSpec g = parse_grid(c.grid.empty() ? "0:5:0.1" : c.grid);
    t.header = {"x", "closed_form", "quadrature", "abs_diff"};
    Density rho{DensityKind::rho};
    for (double x = g.a; x <= g.b + 1e-12; x += g.step) {
      double cf = log_potential_rho(x);
      double q = log_potential_quadrature(rho, x).value;
      t.rows.push_back({fmt_double(x), fmt_double(cf), fmt_double(q),
                        fmt_double(std::abs(cf - q))});
    }
  } else if (command == "gas") {
    Configuration conf = optimize(c.n, c.seed, c.budget);
    t.header = {"i", "m_i"};
    for (size_t i = 0; i < conf.m.size(); ++i) {
      t.rows.push_back({std::to_string(i + 1), std::to_string(conf.m[i])});
    }
    const double nn = static_cast<double>(c.n);
    const double predicted = -nn * nn * (std::log(2.0 * nn) - 1.5);
    std::ostringstream buf;
    if (c.format == "json") {
      emit_json(buf, "gas", t);
      // summary object appended as a second JSON document line
      Table s;
      s.header = {"n", "seed", "phi", "phi_predicted"};
      s.rows.push_back({std::to_string(c.n), std::to_string(c.seed),
                        fmt_double(conf.phi), fmt_double(predicted)});
      emit_json(buf, "gas_summary", s);
    } else {
      emit_csv(buf, t);
      buf << "n,seed,phi,phi_predicted\n"
          << c.n << ',' << c.seed << ',' << fmt_double(conf.phi) << ','
          << fmt_double(predicted) << '\n';
    }
    if (!c.out_path.empty()) {
      std::ofstream f(c.out_path, std::ios::trunc | std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output path " + c.out_path);
      f << buf.str();
    } else {
      out << buf.str();
    }
    if (has_cache) cache_save(c.cache_path);
    return 0;
  } else if (command == "plancherel") {
    long mmax = c.mmax > 0 ? c.mmax : 40;
    double z = plancherel_Z(c.n, mmax);
    t.header = {"n", "m_max", "Z"};
    t.rows.push_back({std::to_string(c.n), std::to_string(mmax), fmt_double(z)});
  } else {
    throw std::logic_error("unreachable command " + command);
  }

  write_table(c, command, t, out);
  if (has_cache) cache_save(c.cache_path);
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"hankel-lab: Hankel determinants of Dirichlet series and their asymptotics"};
  app.require_subcommand(1);

  Common c;
  std::string verify_level = "quick";
  bool verify_long = false;
  int verify_criterion = 0;

  auto add_common = [&](CLI::App* sub, std::initializer_list<std::string> flags) {
    for (const std::string& f : flags) {
      if (f == "series") sub->add_option("--series", c.series, "zeta|moebius");
      if (f == "n") sub->add_option("--n", c.n, "index / dimension / argument");
      if (f == "nmax") sub->add_option("--nmax", c.nmax, "range end");
      if (f == "r") sub->add_option("--r", c.r, "shift (or kind for fit/scaling)");
      if (f == "digits") sub->add_option("--digits", c.digits, "decimal digits or 'auto'");
      if (f == "mmax") sub->add_option("--mmax", c.mmax, "truncation cutoff");
      if (f == "grid") sub->add_option("--grid", c.grid, "a:b:step");
      if (f == "seed") sub->add_option("--seed", c.seed, "rng seed");
      if (f == "budget") sub->add_option("--budget", c.budget, "move proposals");
    }
    sub->add_option("--out", c.out_path, "output path (default stdout)");
    sub->add_option("--cache", c.cache_path, "zeta cache file")
        ->envname("HANKEL_CACHE");
    sub->add_option("--format", c.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  add_common(app.add_subcommand("zeta", "zeta(s) under the precision contract"),
             {"n", "digits"});
  add_common(app.add_subcommand("hankel", "one Hankel determinant"),
             {"series", "n", "r", "digits"});
  add_common(app.add_subcommand("hseq", "determinants n = 1..nmax"),
             {"series", "n", "nmax", "r", "digits"});
  add_common(app.add_subcommand("ratios", "ratio sequences R0, R1"),
             {"nmax", "digits"});
  add_common(app.add_subcommand("fit", "fit ratio expansions (--r picks R0/R1)"),
             {"n", "nmax", "r", "digits"});
  add_common(app.add_subcommand("scaling", "Zagier scaling constants (--r is the kind)"),
             {"r", "nmax", "digits"});
  add_common(app.add_subcommand("hfun", "h_n(m) table"), {"n", "mmax"});
  add_common(app.add_subcommand("dirichlet", "Dirichlet partial sum + tail bound"),
             {"series", "n", "r", "mmax", "digits"});
  add_common(app.add_subcommand("mzv", "multiple-zeta expansion of H_n"),
             {"n", "mmax", "digits"});
  add_common(app.add_subcommand("selberg", "Selberg integral, exact vs asymptotic"),
             {"n", "nmax"});
  add_common(app.add_subcommand("density", "equilibrium density table"), {"grid"});
  add_common(app.add_subcommand("potential", "log-potential closed form vs quadrature"),
             {"grid"});
  add_common(app.add_subcommand("gas", "discrete Coulomb gas optimization"),
             {"n", "seed", "budget"});
  add_common(app.add_subcommand("plancherel", "truncated Plancherel sum Z_n"),
             {"n", "mmax"});

  CLI::App* ver = app.add_subcommand("verify", "run the acceptance criteria");
  ver->add_option("level", verify_level, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));
  ver->add_flag("--long", verify_long, "include the optional H_100 long run");
  ver->add_option("--criterion", verify_criterion, "run a single criterion (1..14)");
  ver->add_option("--cache", c.cache_path, "zeta cache file to validate and use")
      ->envname("HANKEL_CACHE");

  std::vector<const char*> argv;
  argv.push_back("hankel-lab");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "verify") {
      if (!verify_long && std::getenv("HANKEL_LONG") != nullptr) verify_long = true;
      if (!c.cache_path.empty()) {
        CacheReport rep = cache_validate_and_repair(c.cache_path);
        for (const auto& note : rep.notes) out << "cache: " << note << "\n";
        out << "cache: " << rep.loaded << " record(s), " << rep.evicted
            << " evicted\n";
      }
      VerifyLevel lvl = verify_level == "full" ? VerifyLevel::full : VerifyLevel::quick;
      if (verify_criterion > 0) {
        CriterionResult r = run_criterion(verify_criterion, verify_long);
        print_result(out, r);
        if (r.skipped) return 77;  // ctest SKIP_RETURN_CODE
        return r.pass ? 0 : 1;
      }
      auto results = run_acceptance(lvl, verify_long, out);
      long failed = 0;
      for (const auto& r : results) {
        if (!r.pass && !r.skipped) ++failed;
      }
      out << (failed == 0 ? "all criteria passed" :
              std::to_string(failed) + " criterion/criteria FAILED") << "\n";
      return failed == 0 ? 0 : 1;
    }
    return do_run(name, c, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

std::vector<std::pair<std::string, std::string>> cli_operation_coverage() {
  return {
      {"make_context", "zeta"},
      {"zeta_int", "zeta"},
      {"log_gamma", "selberg"},
      {"log_barnes_g", "selberg"},
      {"sigma2", "verify"},
      {"num_divisors", "verify"},
      {"moebius", "dirichlet"},
      {"ordered_factorizations", "hfun"},
      {"h", "hfun"},
      {"h_table", "hfun"},
      {"dirichlet_tail_bound", "dirichlet"},
      {"build_matrix", "hankel"},
      {"determinant", "hankel"},
      {"hankel", "hankel"},
      {"hankel_via_dirichlet", "dirichlet"},
      {"hankel_bruteforce", "verify"},
      {"ratio_sequences", "ratios"},
      {"mzv_expansion", "mzv"},
      {"mzv_eval", "mzv"},
      {"fit_inverse_series", "fit"},
      {"zagier_scaling", "scaling"},
      {"leading_law_residual", "verify"},
      {"selberg_exact_log", "selberg"},
      {"selberg_asymptotic_log", "selberg"},
      {"barnes_asymptotic_log", "verify"},
      {"density_eval", "density"},
      {"normalization", "verify"},
      {"log_potential_rho", "potential"},
      {"log_potential_quadrature", "potential"},
      {"pv_residual", "verify"},
      {"phi_functional", "verify"},
      {"phi_discrete", "gas"},
      {"optimize", "gas"},
      {"empirical_cdf", "verify"},
      {"plancherel_weight", "verify"},
      {"plancherel_Z", "plancherel"},
      {"run", "(all)"},
      {"verify", "verify"},
  };
}

}  // namespace hankel

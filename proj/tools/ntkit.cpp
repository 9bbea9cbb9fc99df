// Command-line surface for the toolkit: factorization, theta, the
// Gaussian pipeline, curve local data, batch sweeps, ABC scans,
// constant fitting, and direct bound evaluation.
//
// Exit codes: 0 success; 1 invariant violation detected during a
// sweep/scan; 2 usage or input error; 3 capacity (sieve or range)
// error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ntkit/abc.hpp"
#include "ntkit/bounds.hpp"
#include "ntkit/config.hpp"
#include "ntkit/elliptic.hpp"
#include "ntkit/factorization.hpp"
#include "ntkit/gaussian.hpp"
#include "ntkit/numeric.hpp"
#include "ntkit/sieve.hpp"
#include "ntkit/sweep.hpp"

using namespace ntkit;

namespace {

struct GlobalOpts {
  std::string format = "text";
  ToolConfig config;
};

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

mpz_class parse_mpz(const std::string& s) {
  mpz_class z;
  if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a base-10 integer: " + s);
  return z;
}

// ---- factor ---------------------------------------------------------

int cmd_factor(const GlobalOpts& g, const std::string& arg) {
  const Factorization f = factorize(parse_mpz(arg));
  if (g.format == "json") {
    std::cout << "{\"value\":\"" << f.value << "\",\"factors\":[";
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "[\"" << f.factors[i].first << "\"," << f.factors[i].second << "]";
    }
    std::cout << "]}\n";
  } else if (g.format == "csv") {
    std::cout << "p,e\n";
    for (const auto& [p, e] : f.factors) std::cout << p << "," << e << "\n";
  } else {
    std::cout << f.value << " = ";
    if (f.factors.empty()) {
      std::cout << "1";
    } else {
      for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i) std::cout << " * ";
        std::cout << f.factors[i].first;
        if (f.factors[i].second > 1) std::cout << "^" << f.factors[i].second;
      }
    }
    std::cout << "\n";
  }
  return 0;
}

// ---- theta ----------------------------------------------------------

int cmd_theta(const GlobalOpts& g, double x) {
  const double t = chebyshev_theta(x, g.config.sieve_ceiling);
  if (g.format == "json")
    std::cout << "{\"x\":" << fmt_double(x) << ",\"theta\":" << fmt_double(t) << "}\n";
  else
    std::cout << fmt_double(t) << "\n";
  return 0;
}

// ---- gaussian -------------------------------------------------------

std::string gr_str(const GaussianRational& x) {
  if (x.den == GaussianInt{1, 0}) return x.num.str();
  return "(" + x.num.str() + ")/(" + x.den.str() + ")";
}

int cmd_gaussian(const GlobalOpts& g, const std::string& narg, const std::string& thr) {
  const mpz_class n = parse_mpz(narg);
  const auto gf = factor_n_plus_i(n);
  const mpz_class value = n * n + 1;
  const mpz_class radv = radical(factorize(value));
  double B;
  bool auto_thr = (thr == "auto");
  if (auto_thr) {
    // rad(n^2+1) <= e happens only at n = 1, where B(R) is undefined;
    // every exponent is 1 there, so B = 1 gives the same split
    B = radv.get_d() > std::exp(1.0) ? threshold_B(radv.get_d()) : 1.0;
  } else {
    B = std::stod(thr);
  }
  const auto d = decompose_xi(gf, B);
  const auto rec = reconstruct(d);
  const auto want = make_gaussian_rational(GaussianInt{n, -1}, GaussianInt{n, 1});
  if (!(rec == want))
    throw invariant_violation("gaussian: decomposition does not reconstruct (n-i)/(n+i)");

  if (g.format == "json") {
    std::cout << "{\"n\":\"" << n << "\",\"unit\":\"" << gf.unit.str() << "\",\"factors\":[";
    for (std::size_t i = 0; i < gf.factors.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "[\"" << gf.factors[i].first.str() << "\"," << gf.factors[i].second << "]";
    }
    std::cout << "],\"threshold\":" << fmt_double(B) << ",\"auto_threshold\":"
              << (auto_thr ? "true" : "false") << ",\"w\":\"" << gr_str(d.torsion)
              << "\",\"m\":" << d.m() << ",\"large\":[";
    for (std::size_t i = 0; i < d.large_part.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "[\"" << gr_str(d.generators[d.large_part[i].first]) << "\","
                << d.large_part[i].second << "]";
    }
    std::cout << "]}\n";
    return 0;
  }
  std::cout << "n + i = " << n << " + i, norm " << value << "\n";
  std::cout << "unit: " << gf.unit.str() << "\n";
  for (const auto& [gamma, e] : gf.factors)
    std::cout << "  (" << gamma.str() << ")^" << e << "  norm " << gamma.norm() << "\n";
  std::cout << "threshold B: " << fmt_double(B) << (auto_thr ? " (auto)" : "") << "\n";
  std::cout << "w: " << gr_str(d.torsion) << "\n";
  std::cout << "xi0 exponents:";
  if (d.small_part.empty()) std::cout << " (empty product)";
  for (const auto& [idx, e] : d.small_part)
    std::cout << " [" << gr_str(d.generators[idx]) << "]^" << e;
  std::cout << "\n";
  std::cout << "large part:";
  if (d.large_part.empty()) std::cout << " (none)";
  for (const auto& [idx, e] : d.large_part)
    std::cout << " [" << gr_str(d.generators[idx]) << "]^" << e;
  std::cout << "\n";
  std::cout << "m: " << d.m() << "\n";
  std::cout << "reconstruction: " << gr_str(rec) << " = (n-i)/(n+i) verified\n";
  return 0;
}

// ---- curve / frey ---------------------------------------------------

const char* kind_str(ReductionKind k) {
  switch (k) {
    case ReductionKind::good: return "good";
    case ReductionKind::multiplicative: return "multiplicative";
    case ReductionKind::additive: return "additive";
  }
  return "?";
}

void print_curve(const GlobalOpts& g, const CurveModel& m,
                 const std::vector<std::pair<std::string, std::string>>& extra) {
  const auto iv = curve_invariants(m);
  const mpz_class dmin = minimal_discriminant(m);
  const mpz_class N = conductor(m);
  std::vector<LocalReductionData> locals;
  for (const auto& [p, e] : factorize(abs(iv.delta)).factors)
    locals.push_back(tate_local(m, p));

  if (g.format == "json") {
    std::cout << "{\"a_invariants\":[" << m.a1 << "," << m.a2 << "," << m.a3 << ","
              << m.a4 << "," << m.a6 << "],\"c4\":\"" << iv.c4 << "\",\"c6\":\""
              << iv.c6 << "\",\"delta_eq\":\"" << iv.delta << "\",\"delta_min\":\""
              << dmin << "\",\"conductor\":\"" << N << "\",\"local\":[";
    for (std::size_t i = 0; i < locals.size(); ++i) {
      const auto& l = locals[i];
      if (i) std::cout << ",";
      std::cout << "{\"p\":\"" << l.p << "\",\"kodaira\":\"" << l.kodaira.str()
                << "\",\"f\":" << l.conductor_exponent << ",\"v_delta_min\":"
                << l.v_delta_min << ",\"kind\":\"" << kind_str(l.kind) << "\"}";
    }
    std::cout << "]";
    for (const auto& [k, v] : extra) std::cout << ",\"" << k << "\":" << v;
    std::cout << "}\n";
    return;
  }
  auto term = [](const mpz_class& coeff, const char* var) {
    if (coeff == 0) return std::string();
    std::string s = coeff < 0 ? " - " : " + ";
    const mpz_class mag = abs(coeff);
    if (mag != 1 || var[0] == '\0') s += mag.get_str();
    return s + var;
  };
  std::cout << "y^2" << term(m.a1, "xy") << term(m.a3, "y") << " = x^3"
            << term(m.a2, "x^2") << term(m.a4, "x") << term(m.a6, "") << "\n";
  std::cout << "c4 = " << iv.c4 << ", c6 = " << iv.c6 << "\n";
  std::cout << "delta_eq  = " << iv.delta << "\n";
  std::cout << "delta_min = " << dmin << "\n";
  std::cout << "conductor = " << N << "\n";
  for (const auto& l : locals)
    std::cout << "  p=" << l.p << "  " << l.kodaira.str() << "  f=" << l.conductor_exponent
              << "  v(delta_min)=" << l.v_delta_min << "  " << kind_str(l.kind) << "\n";
  for (const auto& [k, v] : extra) std::cout << k << " = " << v << "\n";
}

int cmd_curve(const GlobalOpts& g, const std::string& narg) {
  const mpz_class n = parse_mpz(narg);
  const CurveModel m = curve_for(n);
  const auto rep = exponent_product_report(n, g.config.constants.K, g.config.constants.kappa);
  std::vector<std::pair<std::string, std::string>> extra;
  extra.emplace_back("nu_product", rep.nu_product.get_str());
  extra.emplace_back("rad", rep.rad.get_str());
  extra.emplace_back("product_ratio", fmt_double(rep.ratio));
  extra.emplace_back("product_bound_holds", rep.product_bound_holds ? "true" : "false");
  extra.emplace_back("exponent_bound_holds", rep.exponent_bound_holds ? "true" : "false");
  extra.emplace_back("exponent_bound_max_ratio", fmt_double(rep.exponent_bound_max_ratio));
  print_curve(g, m, extra);
  return 0;
}

int cmd_frey(const GlobalOpts& g, const std::string& sa, const std::string& sb,
             const std::string& sc) {
  const AbcTriple t = make_abc_triple(parse_mpz(sa), parse_mpz(sb), parse_mpz(sc));
  const CurveModel m = frey_curve(t.a, t.b, t.c);
  const mpz_class abc = t.a * t.b * t.c;
  if (equation_discriminant(m) != 16 * abc * abc)
    throw invariant_violation("frey: discriminant is not 16(abc)^2");
  print_curve(g, m, {{"abc", abc.get_str()}});
  return 0;
}

// ---- sweep ----------------------------------------------------------

int cmd_sweep(const GlobalOpts& g, uint64_t from, uint64_t to, int jobs,
              const std::string& out_path) {
  const auto records = run_sweep(from, to, jobs);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("sweep: cannot open " + out_path);
  if (g.format == "csv") {
    out << kSweepCsvHeader << "\n";
    for (const auto& r : records) out << sweep_record_csv(r) << "\n";
  } else {
    for (const auto& r : records) out << sweep_record_json(r) << "\n";
  }
  std::cout << records.size() << " records -> " << out_path << "\n";
  return 0;
}

// ---- abc ------------------------------------------------------------

std::string csv_row(const AbcTriple& t, const TripleReport& rep,
                    const std::optional<Thm3Reports>& thm3) {
  std::ostringstream os;
  os << t.a << "," << t.b << "," << t.c << "," << rep.R << "," << rep.q << ","
     << fmt_double(rep.quality) << "," << rep.nu_product << "," << fmt_double(rep.eta)
     << ",";
  if (thm3) {
    os << fmt_double(thm3->case1.ratio) << "," << fmt_double(thm3->case2.ratio);
  } else {
    os << "nan,nan";
  }
  return os.str();
}

int cmd_abc_scan(const GlobalOpts& g, const std::string& in_path,
                 const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw std::invalid_argument("abc scan: cannot open " + in_path);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("abc scan: cannot open " + out_path);
  out << "a,b,c,R,q,quality,nu_product,eta,case1_ratio,case2_ratio\n";
  std::vector<TripleRejection> rejections;
  parse_triples(
      in,
      [&](const AbcTriple& t) {
        const TripleReport rep = triple_report(t);
        const auto sh = shimura_abc_check(rep, 3.0);
        if (!sh.holds)
          throw invariant_violation("abc scan: exponent-product bound failed at " +
                                    t.a.get_str() + " " + t.b.get_str() + " " +
                                    t.c.get_str());
        std::optional<Thm3Reports> thm3;
        if (rep.R >= 16) thm3 = thm3_case_reports(t, g.config.constants);
        out << csv_row(t, rep, thm3) << "\n";
      },
      &rejections);
  for (const auto& r : rejections)
    std::cerr << "rejected line " << r.line_no << ": " << r.reason << "\n";
  std::cout << "report -> " << out_path;
  if (!rejections.empty()) std::cout << " (" << rejections.size() << " rejected)";
  std::cout << "\n";
  return 0;
}

int cmd_abc_enumerate(const GlobalOpts&, uint64_t cmax, const std::string& out_path) {
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("abc enumerate: cannot open " + out_path);
  uint64_t count = 0;
  enumerate_triples(cmax, [&](const AbcTriple& t) {
    out << t.a << " " << t.b << " " << t.c << "\n";
    ++count;
  });
  std::cout << count << " triples -> " << out_path << "\n";
  return 0;
}

// ---- fit ------------------------------------------------------------

// File-based fitting: thm1/thm2 read sweep JSONL records, cor4 and
// abc-case2 read "a b c" triple lists. The per-point arithmetic is
// shared with the range sweeps, so a file covering the same range
// yields the identical value.
double fit_from_file(FitShape fs, const std::string& path, uint64_t nmin) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("fit: cannot open " + path);
  if (fs == FitShape::thm1 || fs == FitShape::thm2) {
    const uint64_t floor_n = std::max(nmin, uint64_t{16});
    double inf = std::numeric_limits<double>::infinity();
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const SweepRecord r = parse_sweep_record(line);
      if (r.n < floor_n) continue;
      inf = std::min(inf, fit_point_thm(fs == FitShape::thm1, r.n, r.p_max, r.rad));
      any = true;
    }
    if (!any) throw std::invalid_argument("fit: no usable records in " + path);
    return inf;
  }
  double inf = std::numeric_limits<double>::infinity();
  double sup = -std::numeric_limits<double>::infinity();
  bool any = false;
  parse_triples(in, [&](const AbcTriple& t) {
    if (!t.c.fits_ulong_p())
      throw capacity_error("fit: triple too large for file-based fitting");
    const uint64_t a = mpz_get_ui(t.a.get_mpz_t());
    const uint64_t b = mpz_get_ui(t.b.get_mpz_t());
    const uint64_t c = mpz_get_ui(t.c.get_mpz_t());
    const TripleStatsU64 s = triple_stats_u64(a, b, c);
    if (fs == FitShape::cor4) {
      if (b < std::max(nmin, uint64_t{16})) return;
      inf = std::min(inf, fit_point_cor4(b, s.p_max));
      any = true;
    } else {
      const double v = fit_point_abc_case2(c, s.q, s.R);
      if (v == -std::numeric_limits<double>::infinity()) return;
      sup = std::max(sup, v);
      any = true;
    }
  });
  if (!any) throw std::invalid_argument("fit: no usable triples in " + path);
  return fs == FitShape::cor4 ? inf : sup;
}

int cmd_fit(const GlobalOpts& g, const std::string& shape, uint64_t from, uint64_t to,
            uint64_t nmin, int jobs, const std::string& input) {
  FitShape fs;
  if (shape == "thm1")
    fs = FitShape::thm1;
  else if (shape == "thm2")
    fs = FitShape::thm2;
  else if (shape == "cor4")
    fs = FitShape::cor4;
  else if (shape == "abc-case2")
    fs = FitShape::abc_case2;
  else
    throw std::invalid_argument("fit: unknown shape " + shape);
  const double result = input.empty() ? fit_shape_sweep(fs, from, to, nmin, jobs)
                                      : fit_from_file(fs, input, nmin);
  if (g.format == "json")
    std::cout << "{\"shape\":\"" << shape << "\",\"value\":" << fmt_double(result) << "}\n";
  else
    std::cout << fmt_double(result) << "\n";
  return 0;
}

// ---- bounds eval ----------------------------------------------------

int cmd_bounds_eval(const GlobalOpts& g, const std::string& expr,
                    const std::vector<double>& args) {
  const BoundConstants& c = g.config.constants;
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("bounds eval: " + expr + " expects " +
                                  std::to_string(k) + " args");
  };
  double value = 0.0;
  bool boolean = false, bool_value = false;
  if (expr == "threshold_B") {
    need(1);
    value = threshold_B(args[0]);
  } else if (expr == "amgm_product_bound") {
    need(2);
    value = amgm_product_bound(args[0], static_cast<int>(args[1]));
  } else if (expr == "chain_rhs") {
    need(3);
    value = chain_rhs(args[0], args[1], static_cast<int>(args[2]), c);
  } else if (expr == "eg_arch_rhs") {
    if (args.size() < 3)
      throw std::invalid_argument("bounds eval: eg_arch_rhs expects m h_xi h1 [h2 ...]");
    const int m = static_cast<int>(args[0]);
    std::vector<double> heights(args.begin() + 2, args.end());
    value = eg_arch_rhs(m, heights, args[1], c);
  } else if (expr == "eg_nonarch_rhs") {
    if (args.size() < 4)
      throw std::invalid_argument(
          "bounds eval: eg_nonarch_rhs expects m h_xi norm_p h1 [h2 ...]");
    const int m = static_cast<int>(args[0]);
    std::vector<double> heights(args.begin() + 3, args.end());
    value = eg_nonarch_rhs(m, heights, args[1], static_cast<uint64_t>(args[2]), c);
  } else if (expr == "calculus_check") {
    need(2);
    boolean = true;
    bool_value = calculus_check(args[0], static_cast<int>(args[1]));
  } else {
    throw std::invalid_argument("bounds eval: unknown expr " + expr);
  }
  if (boolean)
    std::cout << (bool_value ? "true" : "false") << "\n";
  else
    std::cout << fmt_double(value) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"number theory toolkit: factorizations, Gaussian pipeline, curves, "
               "ABC triples, bound evaluation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  std::string config_path;
  std::vector<std::string> const_overrides;
  app.add_option("--config", config_path, "flat key = value config file");
  app.add_option("--constants", const_overrides, "override, e.g. K_d=4")->take_all();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // factor
  std::string factor_n;
  auto* sc_factor = app.add_subcommand("factor", "prime factorization of n");
  sc_factor->add_option("n", factor_n)->required();

  // theta
  double theta_x = 0;
  auto* sc_theta = app.add_subcommand("theta", "Chebyshev theta(x)");
  sc_theta->add_option("x", theta_x)->required();

  // gaussian
  std::string gauss_n, gauss_thr = "auto";
  auto* sc_gauss = app.add_subcommand("gaussian", "factor n+i and decompose (n-i)/(n+i)");
  sc_gauss->add_option("n", gauss_n)->required();
  sc_gauss->add_option("--threshold", gauss_thr, "B value or 'auto'");

  // curve
  std::string curve_n;
  auto* sc_curve = app.add_subcommand("curve", "local data of y^2 = x^3+3x+2n");
  sc_curve->add_option("n", curve_n)->required();

  // frey
  std::string frey_a, frey_b, frey_c;
  auto* sc_frey = app.add_subcommand("frey", "local data of the Frey curve of (a,b,c)");
  sc_frey->add_option("a", frey_a)->required();
  sc_frey->add_option("b", frey_b)->required();
  sc_frey->add_option("c", frey_c)->required();

  // sweep
  uint64_t sw_from = 16, sw_to = 16;
  int sw_jobs = 0;
  std::string sw_out;
  auto* sc_sweep = app.add_subcommand("sweep", "per-n records over a range");
  sc_sweep->add_option("--from", sw_from)->required();
  sc_sweep->add_option("--to", sw_to)->required();
  sc_sweep->add_option("--jobs", sw_jobs, "worker count (0 = default)");
  sc_sweep->add_option("--out", sw_out)->required();

  // abc scan / enumerate
  auto* sc_abc = app.add_subcommand("abc", "ABC triple tools");
  sc_abc->require_subcommand(1);
  std::string abc_in, abc_out;
  auto* sc_scan = sc_abc->add_subcommand("scan", "report CSV for a triple list file");
  sc_scan->add_option("--input", abc_in)->required();
  sc_scan->add_option("--out", abc_out)->required();
  uint64_t abc_cmax = 0;
  std::string abc_enum_out;
  auto* sc_enum = sc_abc->add_subcommand("enumerate", "write all coprime triples with c <= cmax");
  sc_enum->add_option("--cmax", abc_cmax)->required();
  sc_enum->add_option("--out", abc_enum_out)->required();

  // fit
  std::string fit_shape, fit_input;
  uint64_t fit_from = 16, fit_to = 16, fit_nmin = 0;
  int fit_jobs = 0;
  auto* sc_fit = app.add_subcommand("fit", "empirical constant fitting");
  sc_fit->add_option("shape", fit_shape)
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "cor4", "abc-case2"}));
  auto* fit_from_opt = sc_fit->add_option("--from", fit_from);
  auto* fit_to_opt = sc_fit->add_option("--to", fit_to);
  sc_fit->add_option("--nmin", fit_nmin, "domain floor (default 100 for thm fits, 16 for cor4)");
  sc_fit->add_option("--jobs", fit_jobs, "worker count (0 = default)");
  auto* fit_input_opt = sc_fit->add_option(
      "--input", fit_input, "fit from a sweep JSONL (thm1/thm2) or triple list file");
  fit_input_opt->excludes(fit_from_opt)->excludes(fit_to_opt);
  fit_from_opt->needs(fit_to_opt);
  fit_to_opt->needs(fit_from_opt);

  // bounds eval
  auto* sc_bounds = app.add_subcommand("bounds", "bound expression tools");
  sc_bounds->require_subcommand(1);
  std::string be_expr;
  std::vector<double> be_args;
  auto* sc_eval = sc_bounds->add_subcommand("eval", "evaluate one bound expression");
  sc_eval->add_option("--expr", be_expr)->required();
  sc_eval->add_option("--args", be_args, "numeric arguments")->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, g.config);
    for (const auto& o : const_overrides) apply_config_override(o, g.config);

    if (*sc_factor) return cmd_factor(g, factor_n);
    if (*sc_theta) return cmd_theta(g, theta_x);
    if (*sc_gauss) return cmd_gaussian(g, gauss_n, gauss_thr);
    if (*sc_curve) return cmd_curve(g, curve_n);
    if (*sc_frey) return cmd_frey(g, frey_a, frey_b, frey_c);
    if (*sc_sweep) return cmd_sweep(g, sw_from, sw_to, sw_jobs, sw_out);
    if (*sc_scan) return cmd_abc_scan(g, abc_in, abc_out);
    if (*sc_enum) return cmd_abc_enumerate(g, abc_cmax, abc_enum_out);
    if (*sc_fit) {
      if (fit_input.empty() && (fit_from_opt->count() == 0 || fit_to_opt->count() == 0))
        throw std::invalid_argument("fit: need --from/--to or --input");
      const uint64_t nmin =
          fit_nmin > 0 ? fit_nmin
                       : (fit_shape == "thm1" || fit_shape == "thm2") ? 100 : 16;
      return cmd_fit(g, fit_shape, fit_from, fit_to, nmin, fit_jobs, fit_input);
    }
    if (*sc_eval) return cmd_bounds_eval(g, be_expr, be_args);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

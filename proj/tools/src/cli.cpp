#include "theta_lab_cli/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "theta_lab/approx.hpp"
#include "theta_lab/bundle.hpp"
#include "theta_lab/curve_spec.hpp"
#include "theta_lab/error.hpp"
#include "theta_lab/hilbert_fit.hpp"
#include "theta_lab/lefschetz.hpp"
#include "theta_lab/verlinde.hpp"
#include "theta_lab_cli/report.hpp"

namespace theta_lab::cli {
namespace {

struct JacOptions {
  std::string curve;
  std::string a;
  std::string b;
  std::string klass;
  std::string m;
  long degree = 0;
};

struct BundleOptions {
  long rank = 1;
  long degree = 0;
  long genus = 2;
  long n = 1;
};

void run_verlinde(std::ostream& out, bool approx_output) {
  for (const auto& pair : admissible_pairs()) {
    const CyclotomicElement s = s_factor(pair);
    out << "S(" << pair.s() << "," << pair.t() << ")^2 = " << cyclo_to_rational(s * s);
    if (approx_output) out << "  S ~ " << format_decimal(approx_real(s), 12);
    out << "\n";
  }
  out << "p(2) = " << verlinde_p2() << "\n";
}

void run_fit(std::ostream& out, const std::string& values) {
  std::vector<BigInt> parsed;
  std::stringstream ss(values);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational r = Rational::parse(item);
    if (!r.is_integer()) fail(ErrorCode::kParseError, "fit values must be integers: " + item);
    parsed.push_back(r.numerator());
  }
  if (parsed.size() != 3) fail(ErrorCode::kParseError, "--values needs exactly three integers");
  const HilbertFit fit = fit_hilbert(parsed[0], parsed[1], parsed[2]);
  out << "gamma = " << fit.gamma << "\n";
  out << "sigma = " << fit.sigma << "\n";
  out << "pi = " << fit.pi << "\n";
  out << "symmetry_center = " << symmetry_center(fit) << "\n";
  out << "basepoints = " << fit.chern_degree.get_str() << "\n";
}

void run_lefschetz(std::ostream& out, const std::string& name) {
  LefschetzScenario scenario;
  if (name == "sym2") {
    scenario = sym2_scenario();
  } else if (name == "sym2-rejected") {
    scenario = sym2_rejected_scenario();
  } else if (name == "hom-ee") {
    scenario = hom_ee_scenario();
  } else {
    scenario = hom_ow_scenario();
  }
  out << "lefschetz_number = " << lefschetz_number(scenario) << "\n";
  const EigenSplit split = split_eigendims(scenario);
  out << "h1_plus = " << split.plus << "\n";
  out << "h1_minus = " << split.minus << "\n";
}

template <class T>
void run_jac_on(const HyperellipticCurve<T>& curve, const std::string& subop,
                const JacOptions& opts, std::ostream& out) {
  if (subop == "add") {
    const auto a = parse_class(curve, opts.a);
    const auto b = parse_class(curve, opts.b);
    out << curve.add(a, b).to_string() << "\n";
  } else if (subop == "h0") {
    out << curve.h0(parse_class(curve, opts.klass)) << "\n";
  } else if (subop == "two-torsion") {
    const auto classes = curve.two_torsion();
    for (const auto& c : classes) out << c.to_string() << "\n";
    out << "count = " << classes.size() << "\n";
  } else if (subop == "theta-int") {
    const auto [l1, l2] = curve.theta_translate_intersection(parse_class(curve, opts.m));
    out << l1.to_string() << "\n" << l2.to_string() << "\n";
  } else if (subop == "weierstrass") {
    for (const auto& p : curve.weierstrass_points()) out << p.to_string() << "\n";
  } else if (subop == "enumerate") {
    if constexpr (std::is_same_v<T, Fp>) {
      const auto classes = enumerate_pic(curve, opts.degree);
      for (const auto& c : classes) out << c.to_string() << "\n";
      out << "count = " << classes.size() << "\n";
    } else {
      fail(ErrorCode::kInvalidArgument, "enumerate needs a finite base field");
    }
  }
}

void run_bundle(std::ostream& out, const std::string& subop, const BundleOptions& opts) {
  if (subop == "chi") {
    out << chi(BundleSymbol(opts.rank, opts.degree, opts.genus)) << "\n";
  } else if (subop == "slope") {
    out << slope(BundleSymbol(opts.rank, opts.degree, opts.genus)) << "\n";
  } else if (subop == "moduli-dim") {
    out << moduli_dim(opts.n, opts.genus) << "\n";
  } else if (subop == "raynaud") {
    const auto r = raynaud_invariants(opts.genus);
    out << "mukai_rank = " << r.mukai_rank << "\n";
    out << "duplication_degree = " << r.duplication_degree << "\n";
    out << "theta_self_int_2theta = " << r.theta_self_int_2theta << "\n";
    out << "pullback_degree_on_Y = " << r.pullback_degree_on_y << "\n";
    out << "slope_Ec = " << r.slope_ec << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"theta-lab: exact computations for theta divisors on genus-2 moduli"};
  app.name("theta_lab");
  app.require_subcommand(1, 1);

  std::string format = "text";
  auto* report = app.add_subcommand("report", "Recompute every pinned constant and compare");
  report->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  bool approx_output = false;
  auto* verlinde = app.add_subcommand("verlinde", "S(s,t) table and the level-2 Verlinde value");
  verlinde->add_flag("--approx", approx_output, "also print decimal approximations of S(s,t)");

  std::string fit_values;
  auto* fit = app.add_subcommand("fit", "Fit the Hilbert polynomial to p(0), p(1), p(2)");
  fit->add_option("--values", fit_values, "comma-separated p(0),p(1),p(2)")->required();

  std::string scenario;
  auto* lefschetz = app.add_subcommand("lefschetz", "Holomorphic Lefschetz eigenspace splitting");
  lefschetz->add_option("--scenario", scenario, "sym2|sym2-rejected|hom-ee|hom-ow")
      ->required()
      ->check(CLI::IsMember({"sym2", "sym2-rejected", "hom-ee", "hom-ow"}));

  JacOptions jac_opts;
  auto* jac = app.add_subcommand("jac", "Genus-2 Jacobian arithmetic");
  jac->add_option("--curve", jac_opts.curve, "field=Q|Fp:<p>; f=c0,c1,c2,c3,c4")->required();
  jac->require_subcommand(1, 1);
  auto* jac_add = jac->add_subcommand("add", "sum of two classes");
  jac_add->add_option("--a", jac_opts.a, "u=...; v=...[; deg=d]")->required();
  jac_add->add_option("--b", jac_opts.b, "u=...; v=...[; deg=d]")->required();
  auto* jac_h0 = jac->add_subcommand("h0", "dimension of global sections of a class");
  jac_h0->add_option("--class", jac_opts.klass, "u=...; v=...; deg=d")->required();
  jac->add_subcommand("two-torsion", "the 16 classes of J[2]");
  auto* jac_theta = jac->add_subcommand("theta-int", "theta-translate intersection for M");
  jac_theta->add_option("--m", jac_opts.m, "degree-0 class u=...; v=...")->required();
  jac->add_subcommand("weierstrass", "the six Weierstrass points");
  auto* jac_enum = jac->add_subcommand("enumerate", "every class of a given degree (F_p, p <= 37)");
  jac_enum->add_option("--degree", jac_opts.degree, "degree d")->required();

  BundleOptions bundle_opts;
  auto* bundle = app.add_subcommand("bundle", "Rank/degree bookkeeping for bundles on a curve");
  bundle->require_subcommand(1, 1);
  auto* bundle_chi = bundle->add_subcommand("chi", "Euler characteristic");
  auto* bundle_slope = bundle->add_subcommand("slope", "degree / rank");
  for (auto* sub : {bundle_chi, bundle_slope}) {
    sub->add_option("--rank", bundle_opts.rank)->required();
    sub->add_option("--degree", bundle_opts.degree)->required();
    sub->add_option("--genus", bundle_opts.genus);
  }
  auto* bundle_moduli = bundle->add_subcommand("moduli-dim", "dimension n(2n+1)(g-1)");
  bundle_moduli->add_option("--n", bundle_opts.n)->required();
  bundle_moduli->add_option("--genus", bundle_opts.genus);
  auto* bundle_raynaud = bundle->add_subcommand("raynaud", "Raynaud invariant chain (g = 2)");
  bundle_raynaud->add_option("--genus", bundle_opts.genus);

  std::vector<std::string> argv_storage{"theta_lab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (report->parsed()) {
      const auto rows = build_report();
      out << (format == "json" ? render_json(rows) : render_text(rows));
      return all_match(rows) ? kExitOk : kExitDomain;
    }
    if (verlinde->parsed()) {
      run_verlinde(out, approx_output);
    } else if (fit->parsed()) {
      run_fit(out, fit_values);
    } else if (lefschetz->parsed()) {
      run_lefschetz(out, scenario);
    } else if (jac->parsed()) {
      const auto curve = new_curve(parse_curve_spec(jac_opts.curve));
      const std::string subop = jac->get_subcommands().front()->get_name();
      std::visit([&](const auto& c) { run_jac_on(c, subop, jac_opts, out); }, curve);
    } else if (bundle->parsed()) {
      run_bundle(out, bundle->get_subcommands().front()->get_name(), bundle_opts);
    }
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace theta_lab::cli

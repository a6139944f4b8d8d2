// Command-line surface for the toolkit: verification suites and exact
// computations with deterministic JSON/CSV output.  Exit codes: 0 = pass,
// 1 = a verification failed, 2 = usage error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <su2kit/reports.hpp>
#include <su2kit/suites.hpp>

namespace {

using namespace su2kit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 20240915;
constexpr int kTwoJBudget = 6;  // label budget: j <= 3 keeps every suite at desk scale

/// "3/2", "-1/2", "2", "0.5" -> twice the value, or nullopt if not a
/// half-integer.
std::optional<int> parse_two_x(const std::string& text) {
  try {
    std::size_t pos = 0;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const long long num = std::stoll(text.substr(0, slash), &pos);
      if (pos != slash) return std::nullopt;
      const std::string den_text = text.substr(slash + 1);
      const long long den = std::stoll(den_text, &pos);
      if (pos != den_text.size()) return std::nullopt;
      if (den == 1) return static_cast<int>(2 * num);
      if (den == 2) return static_cast<int>(num);
      return std::nullopt;
    }
    const double v = std::stod(text, &pos);
    if (pos != text.size()) return std::nullopt;
    const double doubled = 2.0 * v;
    const long long rounded = std::llround(doubled);
    if (std::abs(doubled - static_cast<double>(rounded)) > 1e-9) return std::nullopt;
    return static_cast<int>(rounded);
  } catch (...) {
    return std::nullopt;
  }
}

std::optional<std::array<double, 3>> parse_vector3(const std::string& text) {
  std::array<double, 3> out{};
  std::stringstream ss(text);
  std::string item;
  int count = 0;
  while (std::getline(ss, item, ',')) {
    if (count >= 3) return std::nullopt;
    try {
      std::size_t pos = 0;
      out[count] = std::stod(item, &pos);
      if (pos != item.size()) return std::nullopt;
    } catch (...) {
      return std::nullopt;
    }
    ++count;
  }
  if (count != 3) return std::nullopt;
  return out;
}

std::optional<std::array<int, 4>> parse_monomial(const std::string& text) {
  std::array<int, 4> out{};
  std::stringstream ss(text);
  std::string item;
  int count = 0;
  while (std::getline(ss, item, ',')) {
    if (count >= 4) return std::nullopt;
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(item, &pos);
      if (pos != item.size() || v < 0 || v > 64) return std::nullopt;
      out[count] = static_cast<int>(v);
    } catch (...) {
      return std::nullopt;
    }
    ++count;
  }
  if (count != 4) return std::nullopt;
  return out;
}

int emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << output_path << "\n";
    return kExitUsage;
  }
  f << text;
  return kExitPass;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

std::string identity_csv(const std::vector<IdentityReport>& reports) {
  std::string s = "identity,max_degree,status\n";
  for (const IdentityReport& r : reports) {
    s += "\"" + r.identity + "\"," + std::to_string(r.max_degree) + "," +
         (r.pass ? "pass" : "fail") + "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int run_check(const std::string& kind, int degree, double tolerance, std::uint64_t seed,
              const std::string& format, const std::string& output) {
  if (degree < 1) return usage_error("--degree must be >= 1 (got " + std::to_string(degree) + ")");
  if (!(tolerance > 0)) return usage_error("--tolerance must be > 0");

  bool pass = false;
  Json report;
  std::string csv;

  if (kind == "algebra") {
    const MatrixAlgebraReport mat = matrix_algebra_check();
    const std::vector<IdentityReport> identities = commutator_suite(degree);
    pass = mat.pass;
    Json id_json = Json::array();
    for (const IdentityReport& r : identities) {
      pass = pass && r.pass;
      id_json.push_back(to_json(r));
    }
    report = Json{{"suite", "algebra"},
                  {"degree", degree},
                  {"matrix_checks",
                   Json{{"trace_orthonormal", mat.trace_orthonormal},
                        {"products", mat.products},
                        {"commutators", mat.commutators}}},
                  {"identities", std::move(id_json)},
                  {"status", pass ? "pass" : "fail"}};
    csv = "check,status\nmatrix_algebra," + std::string(mat.pass ? "pass" : "fail") + "\n" +
          identity_csv(identities);
  } else if (kind == "ladders") {
    const LadderSuiteResult res = ladder_suite(degree);
    pass = res.pass;
    Json fixed = Json::array();
    for (const IdentityReport& r : res.fixed) fixed.push_back(to_json(r));
    Json variants = Json::array();
    for (const IdentityReport& r : res.signed_variants) variants.push_back(to_json(r));
    report = Json{{"suite", "ladders"},
                  {"degree", degree},
                  {"identities", std::move(fixed)},
                  {"signed_variants", std::move(variants)},
                  {"audit", to_json(res.audit)},
                  {"status", pass ? "pass" : "fail"}};
    std::vector<IdentityReport> all = res.fixed;
    all.insert(all.end(), res.signed_variants.begin(), res.signed_variants.end());
    csv = identity_csv(all);
  } else if (kind == "hermiticity") {
    const HermiticitySuiteResult res = hermiticity_suite(degree);
    pass = res.pass;
    Json reports = Json::array();
    for (const HermiticityReport& r : res.reports) reports.push_back(to_json(r));
    report = Json{{"suite", "hermiticity"},
                  {"degree", degree},
                  {"reports", std::move(reports)},
                  {"adjoint_sign_R",
                   res.r_ladder_adjoint_sign ? Json(scalar_string(*res.r_ladder_adjoint_sign))
                                             : Json(nullptr)},
                  {"adjoint_sign_L",
                   res.l_ladder_adjoint_sign ? Json(scalar_string(*res.l_ladder_adjoint_sign))
                                             : Json(nullptr)},
                  {"status", pass ? "pass" : "fail"}};
    csv = "op,samples,status\n";
    for (const HermiticityReport& r : res.reports) {
      csv += r.op + "," + std::to_string(r.sample_count) + "," + (r.pass ? "pass" : "fail") + "\n";
    }
  } else if (kind == "poisson") {
    const PoissonSuiteResult res = poisson_suite(seed, 20, tolerance);
    pass = res.pass;
    report = Json{{"suite", "poisson"},
                  {"seed", res.seed},
                  {"points", res.points},
                  {"tolerance", res.tolerance},
                  {"max_residuals", to_json(res.worst)},
                  {"status", pass ? "pass" : "fail"}};
    csv = "relation,max_residual\nRR," + format_double(res.worst.max_residual_rr) + "\nLL," +
          format_double(res.worst.max_residual_ll) + "\nRL," +
          format_double(res.worst.max_residual_rl) + "\nRg," +
          format_double(res.worst.max_residual_rg) + "\nLg," +
          format_double(res.worst.max_residual_lg) + "\nstatus," +
          (pass ? "pass" : "fail") + "\n";
  } else {
    return usage_error("unknown check kind: " + kind +
                       " (expected algebra, poisson, hermiticity, or ladders)");
  }

  const int code = emit(format == "csv" ? csv : report.dump(2) + "\n", output);
  if (code != kExitPass) return code;
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// spectrum / eigenfunction / gram
// ---------------------------------------------------------------------------

int run_spectrum(const std::string& jmax_text, const std::string& format,
                 const std::string& output) {
  const std::optional<int> two_j_max = parse_two_x(jmax_text);
  if (!two_j_max || *two_j_max < 0) {
    return usage_error("--jmax must be a non-negative half-integer such as 3/2 (got " +
                       jmax_text + ")");
  }
  if (*two_j_max > kTwoJBudget) {
    return usage_error("--jmax exceeds the budget j <= 3 (got " + jmax_text + ")");
  }
  const std::vector<SpectrumRow> rows = spectrum_table(*two_j_max);
  bool pass = true;
  for (const SpectrumRow& r : rows) pass = pass && r.verified;
  Json report = spectrum_to_json(rows);
  report["status"] = pass ? "pass" : "fail";
  const int code = emit(format == "csv" ? spectrum_to_csv(rows) : report.dump(2) + "\n", output);
  if (code != kExitPass) return code;
  return pass ? kExitPass : kExitFail;
}

int run_eigenfunction(const std::string& j_text, const std::string& l_text,
                      const std::string& r_text, bool normalized, const std::string& format,
                      const std::string& output) {
  const std::optional<int> two_j = parse_two_x(j_text);
  const std::optional<int> two_l = parse_two_x(l_text);
  const std::optional<int> two_r = parse_two_x(r_text);
  if (!two_j || !two_l || !two_r) {
    return usage_error("--j, --l, --r must be half-integers such as 1/2 or 0.5");
  }
  if (*two_j < 0) return usage_error("--j must satisfy j >= 0 (got " + j_text + ")");
  if (*two_j > kTwoJBudget) {
    return usage_error("--j exceeds the budget j <= 3 (got " + j_text + ")");
  }
  const SpinLabel label{*two_j, *two_l, *two_r};
  if (!label.in_range()) {
    return usage_error("label out of range: need -j <= l <= j and -j <= r <= j in integer steps "
                       "of the same parity as j (got j=" + j_text + ", l=" + l_text +
                       ", r=" + r_text + ")");
  }
  const Eigenfunction f = build_eigenfunction(label);
  Json report = eigenfunction_to_json(f);
  if (normalized) {
    const Rational n2 = norm_squared(f.poly);
    const double scale = 1.0 / std::sqrt(to_double(n2));
    Json terms = Json::array();
    for (const auto& [m, c] : f.poly.terms()) {
      const std::complex<double> z = c.to_complex();
      terms.push_back(Json{{"m", Json{m.e[0], m.e[1], m.e[2], m.e[3]}},
                           {"re", z.real() * scale},
                           {"im", z.imag() * scale}});
    }
    report["normalized_polynomial"] = Json{{"terms", std::move(terms)}};
  }
  std::string csv = "a,b,c,d,re,im\n";
  for (const auto& [m, c] : f.poly.terms()) {
    csv += std::to_string(m.e[0]) + "," + std::to_string(m.e[1]) + "," + std::to_string(m.e[2]) +
           "," + std::to_string(m.e[3]) + "," + to_fraction_string(c.re) + "," +
           to_fraction_string(c.im) + "\n";
  }
  return emit(format == "csv" ? csv : report.dump(2) + "\n", output);
}

int run_gram(const std::string& jmax_text, const std::string& format, const std::string& output) {
  const std::optional<int> two_j_max = parse_two_x(jmax_text);
  if (!two_j_max || *two_j_max < 0) {
    return usage_error("--jmax must be a non-negative half-integer such as 3/2 (got " +
                       jmax_text + ")");
  }
  if (*two_j_max > kTwoJBudget) {
    return usage_error("--jmax exceeds the budget j <= 3 (got " + jmax_text + ")");
  }
  const GramReport rep = gram_matrix(*two_j_max);
  const bool pass = rep.diagonal && rep.positive_diagonal;
  Json report = to_json(rep);
  report["status"] = pass ? "pass" : "fail";
  std::string csv = "label,entries\n";
  for (std::size_t i = 0; i < rep.labels.size(); ++i) {
    csv += "\"" + to_string(rep.labels[i]) + "\"";
    for (const ComplexRational& v : rep.matrix[i]) csv += "," + scalar_string(v);
    csv += "\n";
  }
  const int code = emit(format == "csv" ? csv : report.dump(2) + "\n", output);
  if (code != kExitPass) return code;
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// geodesic / coset / quadrature
// ---------------------------------------------------------------------------

int run_geodesic(const std::string& g0_text, const std::string& r_text, double t_final, int steps,
                 const std::string& method_text, const std::string& format,
                 const std::string& output) {
  const auto g0_coords = parse_vector3(g0_text);
  const auto r_coords = parse_vector3(r_text);
  if (!g0_coords) return usage_error("--g0 must be three comma-separated reals (got " + g0_text + ")");
  if (!r_coords) return usage_error("--R must be three comma-separated reals (got " + r_text + ")");
  if (steps < 1) return usage_error("--steps must be >= 1 (got " + std::to_string(steps) + ")");
  if (!(t_final > 0)) return usage_error("--t must be > 0");
  IntegrationMethod method = IntegrationMethod::exact;
  if (method_text == "rk4_projected") {
    method = IntegrationMethod::rk4_projected;
  } else if (method_text != "exact") {
    return usage_error("--method must be exact or rk4_projected (got " + method_text + ")");
  }
  const GroupPoint g0 = exp_su2(AlgebraElement((*g0_coords)[0], (*g0_coords)[1], (*g0_coords)[2]));
  const AlgebraElement r0((*r_coords)[0], (*r_coords)[1], (*r_coords)[2]);
  const Trajectory traj = integrate(g0, r0, t_final / steps, steps, method);
  return emit(format == "csv" ? trajectory_to_csv(traj) : trajectory_to_json(traj).dump(2) + "\n",
              output);
}

int run_coset_filter(const std::string& jmax_text, const std::string& format,
                     const std::string& output) {
  const std::optional<int> two_j_max = parse_two_x(jmax_text);
  if (!two_j_max || *two_j_max < 0) {
    return usage_error("--jmax must be a non-negative half-integer such as 2 (got " + jmax_text +
                       ")");
  }
  if (*two_j_max > kTwoJBudget) {
    return usage_error("--jmax exceeds the budget j <= 3 (got " + jmax_text + ")");
  }
  const ConstraintFilterReport filter = constraint_filter(*two_j_max);
  bool pass = filter.verified;
  Json matches = Json::array();
  std::string csv = "j,r,matched_m,constant,status\n";
  for (const SpinLabel& label : filter.survivors) {
    const MatchReport match = spherical_harmonic_match(label.two_j / 2, label.two_r / 2);
    pass = pass && match.proportional;
    matches.push_back(to_json(match));
    csv += std::to_string(match.j) + "," + std::to_string(match.r) + "," +
           (match.matched_m ? std::to_string(*match.matched_m) : "") + "," +
           scalar_string(match.constant) + "," + (match.proportional ? "proportional" : "fail") +
           "\n";
  }
  Json report{{"suite", "coset"},
              {"filter", to_json(filter)},
              {"matches", std::move(matches)},
              {"status", pass ? "pass" : "fail"}};
  const int code = emit(format == "csv" ? csv : report.dump(2) + "\n", output);
  if (code != kExitPass) return code;
  return pass ? kExitPass : kExitFail;
}

int run_coset_trajectory(const std::string& g0_text, const std::string& r_text, double t_final,
                         int steps, const std::string& format, const std::string& output) {
  const auto g0_coords = parse_vector3(g0_text);
  const auto r_coords = parse_vector3(r_text);
  if (!g0_coords) return usage_error("--g0 must be three comma-separated reals (got " + g0_text + ")");
  if (!r_coords) return usage_error("--R must be three comma-separated reals (got " + r_text + ")");
  if (steps < 2) return usage_error("--steps must be >= 2 (got " + std::to_string(steps) + ")");
  if (!(t_final > 0)) return usage_error("--t must be > 0");
  const GroupPoint g0 = exp_su2(AlgebraElement((*g0_coords)[0], (*g0_coords)[1], (*g0_coords)[2]));
  const AlgebraElement r0((*r_coords)[0], (*r_coords)[1], (*r_coords)[2]);
  const Trajectory traj = integrate(g0, r0, t_final / steps, steps, IntegrationMethod::exact);
  const ReducedTrajectory red = reduced_trajectory(traj);
  const std::vector<double> gauge = gauge_field(traj);
  return emit(format == "csv" ? reduced_trajectory_to_csv(red, gauge)
                              : reduced_trajectory_to_json(red, gauge).dump(2) + "\n",
              output);
}

int run_quadrature(const std::string& monomial_text, std::uint64_t samples, std::uint64_t seed,
                   const std::string& format, const std::string& output) {
  const auto m = parse_monomial(monomial_text);
  if (!m) {
    return usage_error("--monomial must be four comma-separated non-negative integers (got " +
                       monomial_text + ")");
  }
  if (samples < 1000) {
    return usage_error("--samples must be >= 1000 (got " + std::to_string(samples) + ")");
  }
  const GroupPolynomial p =
      GroupPolynomial::term(EntryMonomial{{(*m)[0], (*m)[1], (*m)[2], (*m)[3]}},
                            ComplexRational(1));
  const ComplexRational exact = haar_integral(p);
  const QuadratureResult q = quadrature_oracle(p, samples, seed);
  const std::complex<double> diff = q.estimate - exact.to_complex();
  const bool pass = std::abs(diff) <= 4.0 * q.std_error;
  Json report{{"monomial", Json{(*m)[0], (*m)[1], (*m)[2], (*m)[3]}},
              {"exact", Json{{"re", to_fraction_string(exact.re)},
                             {"im", to_fraction_string(exact.im)}}},
              {"quadrature", to_json(q)},
              {"abs_difference", std::abs(diff)},
              {"within_4_std_errors", pass},
              {"status", pass ? "pass" : "fail"}};
  std::string csv = "a,b,c,d,exact_re,exact_im,estimate_re,estimate_im,std_error,samples,seed,status\n";
  csv += std::to_string((*m)[0]) + "," + std::to_string((*m)[1]) + "," + std::to_string((*m)[2]) +
         "," + std::to_string((*m)[3]) + "," + to_fraction_string(exact.re) + "," +
         to_fraction_string(exact.im) + "," + format_double(q.estimate.real()) + "," +
         format_double(q.estimate.imag()) + "," + format_double(q.std_error) + "," +
         std::to_string(q.samples) + "," + std::to_string(q.seed) + "," +
         (pass ? "pass" : "fail") + "\n";
  const int code = emit(format == "csv" ? csv : report.dump(2) + "\n", output);
  if (code != kExitPass) return code;
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for free-particle dynamics on the SU(2) group manifold"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = kDefaultSeed;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", output, "Write the report to this file instead of stdout");
  };

  // check
  auto* check = app.add_subcommand("check", "Run a verification suite");
  std::string check_kind;
  int check_degree = 4;
  check->add_option("kind", check_kind, "Suite: algebra, poisson, hermiticity, or ladders")
      ->required();
  check->add_option("--degree", check_degree, "Maximum monomial degree for exact verification");
  check->add_option("--tolerance", tolerance, "Floating tolerance for pointwise checks");
  check->add_option("--seed", seed, "Seed for random phase points");
  add_common(check);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Eigenfunction tower with exact eigenvalues");
  std::string spectrum_jmax = "3/2";
  spectrum->add_option("--jmax", spectrum_jmax, "Largest spin j (half-integer, at most 3)");
  add_common(spectrum);

  // eigenfunction
  auto* eigen = app.add_subcommand("eigenfunction", "One exact eigenfunction by label");
  std::string j_text, l_text, r_text;
  bool normalized = false;
  eigen->add_option("--j", j_text, "Spin j (half-integer)")->required();
  eigen->add_option("--l", l_text, "Left weight l (half-integer)")->required();
  eigen->add_option("--r", r_text, "Right weight r (half-integer)")->required();
  eigen->add_flag("--normalized", normalized,
                  "Also emit floating coefficients scaled to unit Haar norm");
  add_common(eigen);

  // gram
  auto* gram = app.add_subcommand("gram", "Exact Gram matrix of the eigenfunction tower");
  std::string gram_jmax = "3/2";
  gram->add_option("--jmax", gram_jmax, "Largest spin j (half-integer, at most 3)");
  add_common(gram);

  // geodesic
  auto* geodesic = app.add_subcommand("geodesic", "Integrate the geodesic flow");
  std::string g0_text = "0,0,0";
  std::string r_vec_text = "0,0,1";
  double t_final = 6.2832;
  int steps = 1000;
  std::string method_text = "exact";
  geodesic->add_option("--g0", g0_text, "Initial point as three exponential coordinates");
  geodesic->add_option("--R", r_vec_text, "Body-frame velocity components");
  geodesic->add_option("--t", t_final, "Total integration time");
  geodesic->add_option("--steps", steps, "Number of steps");
  geodesic->add_option("--method", method_text, "Integrator: exact or rk4_projected");
  add_common(geodesic);

  // coset
  auto* coset = app.add_subcommand("coset",
                                   "Constraint filter and harmonic matches, or the reduced "
                                   "sphere trajectory when trajectory flags are given");
  std::string coset_jmax = "2";
  std::string coset_g0 = "0,0,0";
  std::string coset_r = "0,0,1";
  double coset_t = 1.0;
  int coset_steps = 0;
  coset->add_option("--jmax", coset_jmax, "Largest spin j for the filter (at most 3)");
  coset->add_option("--g0", coset_g0, "Initial point as three exponential coordinates");
  coset->add_option("--R", coset_r, "Body-frame velocity components");
  coset->add_option("--t", coset_t, "Total integration time");
  auto* coset_steps_opt =
      coset->add_option("--steps", coset_steps, "Number of steps (enables trajectory mode)");
  add_common(coset);

  // quadrature
  auto* quadrature = app.add_subcommand("quadrature", "Monte-Carlo oracle vs the exact integral");
  std::string monomial_text = "1,0,0,1";
  std::uint64_t samples = 100000;
  quadrature->add_option("--monomial", monomial_text,
                         "Entry exponents a,b,c,d of the monomial u11^a u12^b u21^c u22^d");
  quadrature->add_option("--samples", samples, "Number of Monte-Carlo samples (>= 1000)");
  quadrature->add_option("--seed", seed, "Random seed");
  add_common(quadrature);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) {
      return run_check(check_kind, check_degree, tolerance, seed, format, output);
    }
    if (app.got_subcommand(spectrum)) {
      return run_spectrum(spectrum_jmax, format, output);
    }
    if (app.got_subcommand(eigen)) {
      return run_eigenfunction(j_text, l_text, r_text, normalized, format, output);
    }
    if (app.got_subcommand(gram)) {
      return run_gram(gram_jmax, format, output);
    }
    if (app.got_subcommand(geodesic)) {
      return run_geodesic(g0_text, r_vec_text, t_final, steps, method_text, format, output);
    }
    if (app.got_subcommand(coset)) {
      if (coset_steps_opt->count() > 0) {
        return run_coset_trajectory(coset_g0, coset_r, coset_t, coset_steps, format, output);
      }
      return run_coset_filter(coset_jmax, format, output);
    }
    if (app.got_subcommand(quadrature)) {
      return run_quadrature(monomial_text, samples, seed, format, output);
    }
  } catch (const std::out_of_range& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return usage_error("no subcommand");
}

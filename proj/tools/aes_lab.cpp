// aes-lab: sweep the closed-form dispersion curves to CSV, run the
// verification suites, or dump a single constructed state as JSON.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aeslab/coupled_aes.hpp"
#include "aeslab/fock_core.hpp"
#include "aeslab/hamiltonian_factory.hpp"
#include "aeslab/mus_engine.hpp"
#include "aeslab/oracle.hpp"
#include "aeslab/oscillator_states.hpp"
#include "aeslab/su2_aes.hpp"
#include "aeslab/verification.hpp"

using nlohmann::json;
using namespace aeslab;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct SweepConfig {
  std::string target;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  std::map<std::string, double> fixed;
  std::string output_path;
};

struct FigureDefaults {
  double start, stop;
  int points;
  std::map<std::string, double> fixed;
};

FigureDefaults figure_defaults(const std::string& t) {
  if (t == "fig1") return {0.0, 0.9, 100, {{"phi", pi / 6.0}, {"beta_re", 1.0}, {"beta_im", 0.0}}};
  if (t == "fig2")
    return {-pi / 2.0, 3.0 * pi / 2.0, 100, {{"delta", 0.5}, {"beta_re", 1.0}, {"beta_im", 0.0}}};
  if (t == "fig3") return {0.0, 3.0, 301, {{"phi", pi / 6.0}, {"two_j", 1.0}}};
  if (t == "fig4") return {-pi / 2.0, 3.0 * pi / 2.0, 100, {{"delta", 0.5}, {"two_j", 1.0}}};
  if (t == "fig5")
    return {0.0, 0.9, 100, {{"phi", pi / 6.0}, {"mu", 1.0}, {"tau", 1.0}, {"two_j", 1.0}}};
  if (t == "fig6")
    return {-pi / 2.0, 3.0 * pi / 2.0, 100,
            {{"delta", 0.5}, {"mu", 1.0}, {"tau", 1.0}, {"two_j", 1.0}}};
  if (t == "fig7") return {0.05, 3.0, 100, {{"w", 1.0}, {"z_abs", 1.0}}};
  if (t == "fig8") return {0.01, 3.0, 300, {{"w", 1.0}, {"z_abs", 1.0}}};
  if (t == "fig9") return {0.05, 1.5, 146, {{"w", 1.0}, {"z_abs", 1.0}}};
  if (t == "fig10") return {0.05, 1.5, 146, {{"w", 1.0}, {"z_abs", 1.0}}};
  throw std::invalid_argument("unknown sweep target '" + t + "' (expected fig1..fig10)");
}

int fixed_int(const SweepConfig& cfg, const std::string& key) {
  const double v = cfg.fixed.at(key);
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9 || r < 1.0)
    throw std::invalid_argument("parameter '" + key + "' must be a positive integer");
  return static_cast<int>(r);
}

double resid(double have, double want) { return std::abs(have - want); }

void run_sweep(const SweepConfig& cfg, bool with_verify) {
  if (cfg.points < 2) throw std::invalid_argument("grid needs at least 2 points");
  const std::string& t = cfg.target;
  auto fx = [&](const std::string& key) { return cfg.fixed.at(key); };

  std::vector<std::string> header;
  // row callback fills the plotted quantities and, when asked, the residual
  // of each against the state route; column order matches header
  std::function<std::vector<double>(double, bool)> row;

  if (t == "fig1" || t == "fig2") {
    header = {t == "fig1" ? "delta" : "phi", "var_x", "var_p", "Delta"};
    if (with_verify) header.insert(header.end(), {"resid_var_x", "resid_var_p", "resid_Delta"});
    const Complex beta{fx("beta_re"), fx("beta_im")};
    row = [=](double v, bool verify) {
      const double delta = (t == "fig1") ? v : fx("delta");
      const double phi = (t == "fig1") ? fx("phi") : v;
      const DispersionReport cf = oscillator_closed_form(delta, phi, beta);
      std::vector<double> out = {cf.var_a, cf.var_b, cf.delta};
      if (verify) {
        const JointState st = oscillator_mus_recurrence(delta, phi, beta, 16, 1e-12);
        const Operators ops = build_ops(st.spec);
        const DispersionReport num = srur_report(position_op(ops), momentum_op(ops), st);
        out.insert(out.end(), {resid(num.var_a, cf.var_a), resid(num.var_b, cf.var_b),
                               resid(num.delta, cf.delta)});
      }
      return out;
    };
  } else if (t == "fig3" || t == "fig4") {
    header = {t == "fig3" ? "delta" : "phi", "var_j1_plus", "var_j1_minus", "var_j2_plus",
              "var_j2_minus", "Delta_plus", "Delta_minus"};
    if (with_verify)
      header.insert(header.end(),
                    {"resid_var_j1_plus", "resid_var_j1_minus", "resid_var_j2_plus",
                     "resid_var_j2_minus", "resid_Delta_plus", "resid_Delta_minus"});
    const int two_j = fixed_int(cfg, "two_j");
    row = [=](double v, bool verify) {
      const double delta = (t == "fig3") ? v : fx("delta");
      const double phi = (t == "fig3") ? fx("phi") : v;
      const DispersionReport p = su2_closed_form(two_j, two_j, delta, phi);
      const DispersionReport m = su2_closed_form(two_j, -two_j, delta, phi);
      std::vector<double> out = {p.var_a, m.var_a, p.var_b, m.var_b, p.delta, m.delta};
      if (verify) {
        std::vector<double> rs(6, kNan);
        for (int side = 0; side < 2; ++side) {
          const int tm = side == 0 ? two_j : -two_j;
          if (delta == 0.0 && tm != two_j) continue;  // collapsed label has no state
          const Su2MusState s = su2_mus_state(two_j, tm, delta, phi);
          const Operators ops = build_ops(s.state.spec);
          const DispersionReport num = srur_report(j1_op(ops), j2_op(ops), s.state);
          const DispersionReport& cf = side == 0 ? p : m;
          rs[side] = resid(num.var_a, cf.var_a);
          rs[2 + side] = resid(num.var_b, cf.var_b);
          rs[4 + side] = resid(num.delta, cf.delta);
        }
        out.insert(out.end(), rs.begin(), rs.end());
      }
      return out;
    };
  } else if (t == "fig5" || t == "fig6") {
    header = {t == "fig5" ? "delta" : "phi", "var_X_plus", "var_X_minus", "var_P_plus",
              "var_P_minus", "Delta_plus", "Delta_minus"};
    if (with_verify)
      header.insert(header.end(),
                    {"resid_var_X_plus", "resid_var_X_minus", "resid_var_P_plus",
                     "resid_var_P_minus", "resid_Delta_plus", "resid_Delta_minus"});
    const int two_j = fixed_int(cfg, "two_j");
    row = [=](double v, bool verify) {
      SuperXpSpec s;
      s.mu = fx("mu");
      s.tau = fx("tau");
      s.param.delta = (t == "fig5") ? v : fx("delta");
      s.param.phi = (t == "fig5") ? fx("phi") : v;
      const DispersionReport p = xp_dispersions(s, two_j, two_j);
      const DispersionReport m = xp_dispersions(s, two_j, -two_j);
      std::vector<double> out = {p.var_a, m.var_a, p.var_b, m.var_b, p.delta, m.delta};
      if (verify) {
        std::vector<double> rs(6, kNan);
        if (s.param.delta > 0.0) {  // delta = 0 belongs to the lambda = 1 family
          for (int side = 0; side < 2; ++side) {
            const int tm = side == 0 ? two_j : -two_j;
            const JointState st = general_squeezed_xp(s, two_j, tm).state;
            const auto xp = super_xp(s.mu, s.tau, st.spec);
            const DispersionReport num = srur_report(xp.first, xp.second, st);
            const DispersionReport& cf = side == 0 ? p : m;
            rs[side] = resid(num.var_a, cf.var_a);
            rs[2 + side] = resid(num.var_b, cf.var_b);
            rs[4 + side] = resid(num.delta, cf.delta);
          }
        }
        out.insert(out.end(), rs.begin(), rs.end());
      }
      return out;
    };
  } else if (t == "fig7") {
    const std::vector<double> xs = {0.5, 1.0, 2.0, 4.0};
    header = {"beta", "var_h_x0p5", "var_h_x1", "var_h_x2", "var_h_x4"};
    if (with_verify)
      header.insert(header.end(),
                    {"resid_x0p5", "resid_x1", "resid_x2", "resid_x4"});
    row = [=](double beta, bool verify) {
      std::vector<double> out, rs;
      for (double x : xs) {
        XCaseParams p;
        p.x = x;
        p.beta = beta;
        p.w = fx("w");
        const Complex z{fx("z_abs"), 0.0};
        const double closed = x_case_dispersion(p, 1, 1, z);
        out.push_back(closed);
        if (verify) {
          const CoupledAes st = x_case_eigenstates(p, 1, 1, z);
          rs.push_back(resid(energy_stats(x_case_element(p), p.w, st.state).var_e, closed));
        }
      }
      out.insert(out.end(), rs.begin(), rs.end());
      return out;
    };
  } else if (t == "fig8") {
    header = {"x_abs", "var_h_plus", "var_h_minus"};
    if (with_verify) header.insert(header.end(), {"resid_plus", "resid_minus"});
    row = [=](double x, bool verify) {
      XCaseParams p;
      p.x = x;
      p.beta = 0.0;
      p.w = fx("w");
      const Complex z{fx("z_abs"), 0.0};
      std::vector<double> out, rs;
      for (int tm : {1, -1}) {
        const double closed = x_case_dispersion(p, 1, tm, z);
        out.push_back(closed);
        if (verify) {
          const CoupledAes st = x_case_eigenstates(p, 1, tm, z);
          rs.push_back(resid(energy_stats(x_case_element(p), p.w, st.state).var_e, closed));
        }
      }
      out.insert(out.end(), rs.begin(), rs.end());
      return out;
    };
  } else if (t == "fig9" || t == "fig10") {
    const bool by_rho = (t == "fig9");
    const std::vector<double> rhos = {1.0, 2.0, 4.0};
    const std::vector<double> thetas = {5.0 * pi / 8.0, 3.0 * pi / 4.0, 7.0 * pi / 8.0, pi};
    if (by_rho)
      header = {"beta", "var_h_rho1", "var_h_rho2", "var_h_rho4"};
    else
      header = {"beta", "var_h_t5pi8", "var_h_t3pi4", "var_h_t7pi8", "var_h_tpi"};
    const std::size_t ncurves = by_rho ? rhos.size() : thetas.size();
    if (with_verify)
      for (std::size_t k = 0; k < ncurves; ++k)
        header.push_back("resid_" + header[1 + k].substr(6));
    row = [=](double beta, bool verify) {
      std::vector<double> out, rs;
      for (std::size_t k = 0; k < ncurves; ++k) {
        NonCanonicalParams p;
        p.rho = by_rho ? rhos[k] : 1.0;
        p.theta = by_rho ? pi : thetas[k];
        p.beta = beta;
        p.w = fx("w");
        const Complex z{fx("z_abs"), 0.0};
        const double closed = noncanonical_dispersion_halfspin(p, z);
        out.push_back(closed);
        if (verify) {
          // the closed curve follows the lower of the two label dispersions
          double best = 1e300;
          for (int tm : {1, -1}) {
            const CoupledAes st = noncanonical_eigenstates(p, 1, tm, z);
            best = std::min(
                best, resid(energy_stats(noncanonical_element(p), p.w, st.state).var_e, closed));
          }
          rs.push_back(best);
        }
      }
      out.insert(out.end(), rs.begin(), rs.end());
      return out;
    };
  } else {
    throw std::invalid_argument("unknown sweep target '" + t + "'");
  }

  std::ofstream os(cfg.output_path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file '" + cfg.output_path + "'");
  for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
  os << '\n';
  for (int i = 0; i < cfg.points; ++i) {
    const double v = cfg.start + (cfg.stop - cfg.start) * i / (cfg.points - 1);
    os << fmt17(v);
    for (double q : row(v, with_verify)) os << ',' << fmt17(q);
    os << '\n';
  }
  std::cout << cfg.output_path << ": " << cfg.points << " rows\n";
}

int run_verify(const std::string& suite) {
  const std::vector<CheckResult> results = run_suite(suite);
  int npass = 0;
  for (const CheckResult& r : results) {
    std::cout << format_check_line(r) << "\n";
    npass += r.pass ? 1 : 0;
  }
  std::cout << (npass == static_cast<int>(results.size()) ? "OK" : "FAILED") << " (" << npass
            << "/" << results.size() << " checks)\n";
  return npass == static_cast<int>(results.size()) ? 0 : 1;
}

Complex get_complex(const json& j, const std::string& key, Complex fallback = {}) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2)
    throw std::invalid_argument("field '" + key + "' must be a [re, im] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

double get_num(const json& j, const std::string& key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}

double get_num(const json& j, const std::string& key) {
  if (!j.contains(key)) throw std::invalid_argument("missing required field '" + key + "'");
  return j.at(key).get<double>();
}

int get_int(const json& j, const std::string& key) {
  const double v = get_num(j, key);
  if (std::abs(v - std::round(v)) > 1e-9)
    throw std::invalid_argument("field '" + key + "' must be an integer");
  return static_cast<int>(std::round(v));
}

AlgebraElement element_from_json(const json& in) {
  AlgebraElement e;
  e.alpha_minus = get_complex(in, "alpha_minus", {1.0, 0.0});
  e.alpha_plus = get_complex(in, "alpha_plus");
  e.alpha_3 = get_complex(in, "alpha_3");
  e.beta_minus = get_complex(in, "beta_minus");
  e.beta_plus = get_complex(in, "beta_plus");
  e.beta_3 = get_complex(in, "beta_3");
  return e;
}

int run_state(const std::string& params) {
  const json in = json::parse(params);
  if (!in.is_object()) throw std::invalid_argument("state parameters must be a JSON object");
  const std::string family = in.contains("family") ? in.at("family").get<std::string>()
                                                   : throw std::invalid_argument(
                                                         "missing required field 'family'");
  JointState st;
  double res = 0.0;

  if (family == "oscillator") {
    const double delta = get_num(in, "delta"), phi = get_num(in, "phi");
    const Complex beta = get_complex(in, "beta");
    st = oscillator_mus_recurrence(delta, phi, beta);
    const Operators ops = build_ops(st.spec);
    res = eigen_residual(position_op(ops), momentum_op(ops), lambda_from_delta_phi(delta, phi),
                         beta, st);
  } else if (family == "su2") {
    const Su2MusState s =
        su2_mus_state(get_int(in, "two_j"), get_int(in, "two_m"), get_num(in, "delta"),
                      get_num(in, "phi"));
    st = s.state;
    const Operators ops = build_ops(st.spec);
    res = eigen_residual(j1_op(ops), j2_op(ops), s.lambda, s.beta, st);
  } else if (family == "xp_lambda1" || family == "xp_squeezed") {
    SuperXpSpec s;
    s.mu = get_complex(in, "mu", {1.0, 0.0});
    s.tau = get_complex(in, "tau");
    s.z = get_complex(in, "z");
    Complex lambda{1.0, 0.0};
    CoupledAes ca;
    if (family == "xp_squeezed") {
      s.param.delta = get_num(in, "delta");
      s.param.phi = get_num(in, "phi");
      lambda = lambda_from_delta_phi(s.param.delta, s.param.phi);
      ca = general_squeezed_xp(s, get_int(in, "two_j"), get_int(in, "two_m"));
    } else {
      ca = scs_lambda1(s, get_int(in, "two_j"), get_int(in, "two_m"));
    }
    st = ca.state;
    const auto xp = super_xp(s.mu, s.tau, st.spec);
    res = eigen_residual(xp.first, xp.second, lambda, ca.z, st);
  } else if (family == "coupled_general" || family == "coupled_degenerate") {
    const AlgebraElement e = element_from_json(in);
    const Complex rho = get_complex(in, "rho");
    const CoupledAes ca = (family == "coupled_general")
                              ? aes_general(e, get_int(in, "two_j"), get_int(in, "two_m"), rho)
                              : aes_degenerate(e, get_int(in, "two_j"), get_int(in, "two_m"), rho);
    st = ca.state;
    res = residual(e, st, ca.z).interior;
  } else if (family == "canonical") {
    CanonicalParams p;
    p.alpha = get_num(in, "alpha", 0.0);
    p.theta_minus = get_num(in, "theta_minus", 0.0);
    p.theta_plus = get_num(in, "theta_plus", 0.0);
    p.beta = get_num(in, "beta", 0.0);
    p.varphi_minus = get_num(in, "varphi_minus", 0.0);
    p.varphi_plus = get_num(in, "varphi_plus", 0.0);
    p.r = get_num(in, "r", 0.0);
    p.alpha_3 = get_complex(in, "alpha_3");
    p.w = get_num(in, "w", 1.0);
    const Complex z = get_complex(in, "z");
    const CoupledAes ca = canonical_eigenstates(p, get_int(in, "two_j"), get_int(in, "two_m"), z);
    st = ca.state;
    res = residual(canonical_element(p), st, ca.z).interior;
  } else if (family == "x_case") {
    XCaseParams p;
    p.x = get_num(in, "x");
    p.beta = get_num(in, "beta", 0.0);
    p.alpha = get_num(in, "alpha", 0.0);
    p.theta_minus = get_num(in, "theta_minus", 0.0);
    p.theta_plus = get_num(in, "theta_plus", 0.0);
    p.varphi_minus = get_num(in, "varphi_minus", 0.0);
    p.varphi_plus = get_num(in, "varphi_plus", 0.0);
    p.alpha_3 = get_complex(in, "alpha_3");
    p.w = get_num(in, "w", 1.0);
    const Complex z = get_complex(in, "z");
    const CoupledAes ca = x_case_eigenstates(p, get_int(in, "two_j"), get_int(in, "two_m"), z);
    st = ca.state;
    res = residual(x_case_element(p), st, ca.z).interior;
  } else if (family == "noncanonical") {
    NonCanonicalParams p;
    p.rho = get_num(in, "rho", 1.0);
    p.nu = get_num(in, "nu", 0.0);
    p.beta = get_num(in, "beta", 1.0);
    p.theta = get_num(in, "theta", pi);
    p.theta_minus = get_num(in, "theta_minus", 0.0);
    p.varphi_minus = get_num(in, "varphi_minus", 0.0);
    p.w = get_num(in, "w", 1.0);
    const Complex z = get_complex(in, "z");
    const CoupledAes ca =
        noncanonical_eigenstates(p, get_int(in, "two_j"), get_int(in, "two_m"), z);
    st = ca.state;
    res = residual(noncanonical_element(p), st, ca.z).interior;
  } else {
    throw std::invalid_argument(
        "unknown family '" + family +
        "' (expected oscillator|su2|xp_lambda1|xp_squeezed|coupled_general|"
        "coupled_degenerate|canonical|x_case|noncanonical)");
  }

  json out;
  out["spec"] = {{"fock_dim", st.spec.fock_dim}, {"two_j", st.spec.two_j}};
  json coeffs = json::array();
  for (int k = 0; k < st.coeffs.size(); ++k)
    coeffs.push_back({st.coeffs(k).real(), st.coeffs(k).imag()});
  out["coeffs"] = std::move(coeffs);
  out["residual"] = res;
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebra eigenstate laboratory"};
  app.require_subcommand(1);

  auto* sweep = app.add_subcommand("sweep", "write one figure's curves as CSV");
  std::string config_path, target, out_path;
  double start = 0.0, stop = 0.0, points_d = 0.0;
  bool with_verify = false;
  auto* o_config = sweep->add_option("--config", config_path, "JSON sweep config");
  auto* o_target = sweep->add_option("--target", target, "fig1..fig10");
  auto* o_start = sweep->add_option("--start", start, "grid start");
  auto* o_stop = sweep->add_option("--stop", stop, "grid stop");
  auto* o_points = sweep->add_option("--points", points_d, "grid points (>= 2)");
  auto* o_out = sweep->add_option("--out", out_path, "output CSV path");
  sweep->add_flag("--verify", with_verify, "append dense-route residual columns");
  std::map<std::string, std::pair<CLI::Option*, double>> fixed_flags;
  for (const char* key : {"phi", "delta", "beta_re", "beta_im", "mu", "tau", "two_j", "w",
                          "z_abs"}) {
    auto& slot = fixed_flags[key];
    slot.first = sweep->add_option("--" + std::string(key), slot.second,
                                   "fixed parameter " + std::string(key));
  }

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "all|srur|eigen|oracle|hamiltonian")->required();

  auto* state = app.add_subcommand("state", "construct one state, dump JSON to stdout");
  std::string state_params;
  state->add_option("--json", state_params, "construction parameters as JSON")->required();

  try {
    app.parse(argc, argv);

    if (sweep->parsed()) {
      SweepConfig cfg;
      json jc;
      if (*o_config) {
        std::ifstream is(config_path);
        if (!is) throw std::invalid_argument("cannot read config file '" + config_path + "'");
        jc = json::parse(is);
        if (!jc.is_object()) throw std::invalid_argument("config must be a JSON object");
        if (jc.contains("target")) cfg.target = jc.at("target").get<std::string>();
        if (jc.contains("output_path")) cfg.output_path = jc.at("output_path").get<std::string>();
      }
      // precedence: figure defaults, then config file, then inline flags
      if (*o_target) cfg.target = target;
      if (cfg.target.empty())
        throw std::invalid_argument("sweep needs a target (--target figN or config file)");
      const FigureDefaults def = figure_defaults(cfg.target);
      cfg.start = def.start;
      cfg.stop = def.stop;
      cfg.points = def.points;
      cfg.fixed = def.fixed;
      if (jc.contains("grid")) {
        const json& gr = jc.at("grid");
        if (gr.contains("start")) cfg.start = gr.at("start").get<double>();
        if (gr.contains("stop")) cfg.stop = gr.at("stop").get<double>();
        if (gr.contains("points")) cfg.points = gr.at("points").get<int>();
      }
      if (jc.contains("fixed")) {
        const json& fixed = jc.at("fixed");
        if (!fixed.is_object()) throw std::invalid_argument("config 'fixed' must be an object");
        for (auto it = fixed.begin(); it != fixed.end(); ++it) {
          if (!cfg.fixed.count(it.key()))
            throw std::invalid_argument("parameter '" + it.key() + "' does not apply to " +
                                        cfg.target);
          cfg.fixed[it.key()] = it.value().get<double>();
        }
      }
      if (*o_start) cfg.start = start;
      if (*o_stop) cfg.stop = stop;
      if (*o_points) {
        if (std::abs(points_d - std::round(points_d)) > 1e-9)
          throw std::invalid_argument("--points must be an integer");
        cfg.points = static_cast<int>(std::round(points_d));
      }
      for (auto& [key, slot] : fixed_flags)
        if (*slot.first) {
          if (!cfg.fixed.count(key))
            throw std::invalid_argument("parameter '" + key + "' does not apply to " + cfg.target);
          cfg.fixed[key] = slot.second;
        }
      if (*o_out) cfg.output_path = out_path;
      if (cfg.output_path.empty()) cfg.output_path = cfg.target + ".csv";
      run_sweep(cfg, with_verify);
      return 0;
    }
    if (verify->parsed()) return run_verify(suite);
    if (state->parsed()) return run_state(state_params);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const TruncationError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

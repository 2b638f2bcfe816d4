// Command-line front end: regenerate the reference tables and evaluate any
// single quantity by every available route.
//
// Subcommands:
//   table1  oracle vs asymptotic values of I_{1,m} and I_{2,m}
//   table2  relative truncation errors of the I_{1,m} expansion
//   eval    single-quantity evaluation (I, J, invert, sigma, profile)
//
// Exit codes: 0 success, 2 usage/domain error, 3 convergence failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tricomi/airfoil.hpp"
#include "tricomi/expansion.hpp"
#include "tricomi/render.hpp"
#include "tricomi/specfun.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_noconv = 3;

struct OutputSpec {
  std::string format = "md";
  int precision = 7;
  std::string out_path;  // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputSpec& spec) {
  cmd->add_option("--format", spec.format, "Output format")
      ->check(CLI::IsMember({"md", "csv"}))
      ->capture_default_str();
  cmd->add_option("--precision", spec.precision,
                  "Significant digits for md output")
      ->check(CLI::Range(3, 15))
      ->capture_default_str();
  cmd->add_option("--out", spec.out_path, "Write output to file");
}

int write_output(const OutputSpec& spec, const std::string& text) {
  if (spec.out_path.empty()) {
    std::cout << text;
    return exit_ok;
  }
  std::ofstream f(spec.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << spec.out_path << " for writing\n";
    return exit_usage;
  }
  f << text;
  return exit_ok;
}

std::string cell(const OutputSpec& spec, double v) {
  return spec.format == "csv" ? tricomi::render::format_csv(v)
                              : tricomi::render::format_compact(v, spec.precision);
}

std::string render_table(const OutputSpec& spec, const tricomi::render::Table& t) {
  return spec.format == "csv" ? tricomi::render::render_csv(t)
                              : tricomi::render::render_markdown(t);
}

int run_table1(const std::vector<int>& m_list, const OutputSpec& spec,
               double tol) {
  using namespace tricomi;
  render::Table t;
  t.header = {"m", "I1_oracle", "I1_asym", "I2_oracle", "I2_asym"};
  bool all_converged = true;
  for (int m : m_list) {
    if (m < 2) {
      std::cerr << "error: table1 requires m >= 2, got " << m << "\n";
      return exit_usage;
    }
    auto o1 = expansion::oracle_I_direct(1, m, tol);
    auto o2 = expansion::oracle_I_direct(2, m, tol);
    all_converged = all_converged && o1.converged && o2.converged;
    t.rows.push_back({std::to_string(m), cell(spec, o1.value),
                      cell(spec, expansion::asymptotic_I(1, m, 3)),
                      cell(spec, o2.value),
                      cell(spec, expansion::asymptotic_I(2, m, 3))});
  }
  int rc = write_output(spec, render_table(spec, t));
  if (rc != exit_ok) return rc;
  if (!all_converged) {
    std::cerr << "warning: at least one oracle integral did not converge\n";
    return exit_noconv;
  }
  return exit_ok;
}

int run_table2(const std::vector<int>& m_list, const std::vector<int>& k_list,
               const OutputSpec& spec, double tol) {
  using namespace tricomi;
  for (int m : m_list)
    if (m < 2) {
      std::cerr << "error: table2 requires m >= 2, got " << m << "\n";
      return exit_usage;
    }
  auto tab = expansion::error_table(1, m_list, k_list,
                                    expansion::CoeffMethod::moment_based, tol);
  render::Table t;
  t.header = {"k"};
  for (int m : m_list) t.header.push_back("m=" + std::to_string(m));
  for (std::size_t i = 0; i < k_list.size(); ++i) {
    std::vector<std::string> row{std::to_string(k_list[i])};
    for (double e : tab.rel_error[i]) row.push_back(cell(spec, e));
    t.rows.push_back(std::move(row));
  }
  // Footnote row: the order-3 coefficient admits a variant reading in the
  // source; report the alternative k=3 errors alongside the adopted ones.
  bool has_k3 = false;
  for (int k : k_list) has_k3 = has_k3 || k == 3;
  if (has_k3) {
    auto alt = expansion::error_table(
        1, m_list, {3}, expansion::CoeffMethod::paper_closed_form, tol);
    std::vector<std::string> row{"3_alt"};
    for (double e : alt.rel_error[0]) row.push_back(cell(spec, e));
    t.rows.push_back(std::move(row));
  }
  return write_output(spec, render_table(spec, t));
}

int run_eval_I(int n, int m, int k, const std::string& method,
               const OutputSpec& spec, double tol) {
  using namespace tricomi::expansion;
  tricomi::render::Table t;
  t.header = {"method", "value"};
  bool all_converged = true;
  const bool want_all = method == "all";
  if (want_all || method == "oracle") {
    auto r = oracle_I_direct(n, m, tol);
    all_converged = all_converged && r.converged;
    t.rows.push_back({"oracle", cell(spec, r.value)});
    auto r2 = oracle_I_transformed(n, m, tol);
    all_converged = all_converged && r2.converged;
    t.rows.push_back({"oracle_transformed", cell(spec, r2.value)});
  }
  if (want_all || method == "asym") {
    if (m < 2) {
      std::cerr << "error: asymptotic I requires m >= 2\n";
      return exit_usage;
    }
    t.rows.push_back({"asym", cell(spec, asymptotic_I(n, m, k))});
  }
  int rc = write_output(spec, render_table(spec, t));
  return rc != exit_ok ? rc : (all_converged ? exit_ok : exit_noconv);
}

int run_eval_J(int n, double a, double mu, const std::string& method,
               const OutputSpec& spec, double tol) {
  using namespace tricomi::airfoil;
  AirfoilQuery q{n, a, mu};
  q.validate();
  tricomi::render::Table t;
  t.header = {"method", "value"};
  bool all_converged = true;
  const bool want_all = method == "all";
  if (want_all || method == "series")
    t.rows.push_back({"series", cell(spec, j_series(q, tol))});
  if (want_all || method == "accelerated")
    t.rows.push_back({"accelerated", cell(spec, j_accelerated(q, tol))});
  if (want_all || method == "oracle") {
    auto r = j_pv_oracle(q, tol);
    all_converged = all_converged && r.converged;
    t.rows.push_back({"oracle", cell(spec, r.value)});
  }
  int rc = write_output(spec, render_table(spec, t));
  return rc != exit_ok ? rc : (all_converged ? exit_ok : exit_noconv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Probability-integral asymptotics and airfoil PV integrals: table "
      "reproduction and single-value evaluation"};
  app.require_subcommand(1);

  double tol = 1e-12;
  app.add_option("--tol", tol, "Quadrature/series tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // table1
  auto* t1 = app.add_subcommand("table1", "Oracle vs order-3 asymptotic I_{n,m}");
  std::vector<int> t1_m{100, 1000, 10000, 100000, 1000000};
  t1->add_option("--m", t1_m, "List of m values");
  OutputSpec t1_spec;
  add_output_flags(t1, t1_spec);

  // table2
  auto* t2 = app.add_subcommand("table2", "Relative truncation errors, n = 1");
  std::vector<int> t2_m{10000, 100000, 1000000};
  std::vector<int> t2_k{0, 1, 2, 3};
  t2->add_option("--m", t2_m, "List of m values");
  t2->add_option("--k", t2_k, "List of truncation orders")
      ->check(CLI::Range(0, 3));
  OutputSpec t2_spec;
  add_output_flags(t2, t2_spec);

  // eval
  auto* ev = app.add_subcommand("eval", "Evaluate a single quantity");
  std::string subject;
  ev->add_option("subject", subject, "One of: I, J, invert, sigma, profile")
      ->required()
      ->check(CLI::IsMember({"I", "J", "invert", "sigma", "profile"}));
  int ev_n = 0, ev_m = 100, ev_k = 3, ev_sigma_m = 0;
  double ev_a = 0.5, ev_mu = 0.5, ev_y = 1.0, ev_x = 0.0;
  std::string ev_method = "all";
  ev->add_option("--n", ev_n, "Index n");
  ev->add_option("--m", ev_m, "Exponent m (subject I)");
  ev->add_option("--k", ev_k, "Truncation order (subject I)")->check(CLI::Range(0, 3));
  ev->add_option("--a", ev_a, "Station a (subject J)");
  ev->add_option("--mu", ev_mu, "Endpoint exponent mu (subjects J, sigma)");
  ev->add_option("--y", ev_y, "Target erfc value (subject invert)");
  ev->add_option("--x", ev_x, "Abscissa (subject profile)");
  ev->add_option("--sigma-m", ev_sigma_m, "Sigma index (subject sigma)")
      ->check(CLI::Range(0, 2));
  ev->add_option("--method", ev_method,
                 "oracle | asym | series | accelerated | all")
      ->check(CLI::IsMember({"oracle", "asym", "series", "accelerated", "all"}));
  OutputSpec ev_spec;
  add_output_flags(ev, ev_spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (*t1) return run_table1(t1_m, t1_spec, tol);
    if (*t2) return run_table2(t2_m, t2_k, t2_spec, tol);

    // eval
    using namespace tricomi;
    if (subject == "I") return run_eval_I(ev_n, ev_m, ev_k, ev_method, ev_spec, tol);
    if (subject == "J") return run_eval_J(ev_n, ev_a, ev_mu, ev_method, ev_spec, tol);
    render::Table t;
    t.header = {"method", "value"};
    if (subject == "invert") {
      t.rows.push_back(
          {"numeric", cell(ev_spec, expansion::invert_erfc_numeric(ev_y))});
    } else if (subject == "sigma") {
      t.rows.push_back({"closed_form",
                        cell(ev_spec, airfoil::sigma(ev_sigma_m, ev_mu,
                                                     airfoil::SigmaMethod::closed_form))});
      if (ev_method == "all")
        t.rows.push_back(
            {"direct_sum",
             cell(ev_spec, airfoil::sigma(ev_sigma_m, ev_mu,
                                          airfoil::SigmaMethod::direct_sum,
                                          std::max(tol, 1e-12)))});
    } else {  // profile
      t.rows.push_back(
          {"closed_form", cell(ev_spec, airfoil::gamma_profile(ev_n, ev_x))});
    }
    return write_output(ev_spec, render_table(ev_spec, t));
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const tricomi::specfun::convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_noconv;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_noconv;
  }
}

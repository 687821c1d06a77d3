#include "watchtower/errors.hpp"
#include "watchtower/io.hpp"
#include "watchtower/oracle.hpp"
#include "watchtower/svg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace watchtower;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void print_height(const Scalar& h) {
  std::cout << to_fraction_string(h) << " (" << to_decimal_string(h) << ")\n";
}

ImpreciseTerrain1D random_terrain(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<int> coord(0, 100);
  std::vector<UncertainVertex1D> verts;
  verts.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    int a = coord(rng), b = coord(rng);
    if (a > b) std::swap(a, b);
    verts.push_back({Scalar((long)i), Scalar(a), Scalar(b)});
  }
  return validate_terrain(std::move(verts));
}

int run_solve1d(const std::string& input, const std::string& mode, bool as_json,
                const std::string& svg_out) {
  ImpreciseTerrain1D T = parse_terrain_1d(input);
  auto t0 = std::chrono::steady_clock::now();
  Solution1D sol =
      mode == "discrete" ? solve_discrete_1d(T) : solve_continuous_1d(T);
  double millis = ms_since(t0);
  if (as_json)
    std::cout << solution_report_1d(T, sol, mode, millis).dump(2) << "\n";
  else
    print_height(sol.height);
  if (!svg_out.empty()) write_text_file(svg_out, render_svg(T, sol));
  return 0;
}

int run_solve25d_zero(const std::string& input, bool as_json) {
  ImpreciseMesh2_5D M = parse_mesh_2_5d(input);
  auto t0 = std::chrono::steady_clock::now();
  auto res = zero_watchtower(M);
  double millis = ms_since(t0);
  if (!res) {
    std::cout << "none\n";
    return 1;
  }
  if (as_json)
    std::cout << zero_report_2_5d(M, *res, millis).dump(2) << "\n";
  else
    std::cout << "guarded from vertex " << res->vertex << "\n";
  return 0;
}

int run_solve25d_approx(const std::string& input, const std::string& eps,
                        bool as_json) {
  ImpreciseMesh2_5D M = parse_mesh_2_5d(input);
  Scalar epsilon = parse_scalar(eps);
  auto t0 = std::chrono::steady_clock::now();
  ApproxResult res = approx_watchtower(M, epsilon);
  double millis = ms_since(t0);
  if (as_json)
    std::cout << approx_report_2_5d(M, res, epsilon, millis).dump(2) << "\n";
  else {
    std::cout << "vertex " << res.vertex << ", height ";
    print_height(res.height);
  }
  return 0;
}

int run_oracle(const std::string& input, unsigned grid, const std::string& mode,
               const std::string& eps) {
  json j = load_json_file(input);
  GridSpec g{grid};
  if (j.contains("triangles")) {
    ImpreciseMesh2_5D M = mesh_from_json(j);
    if (!eps.empty()) {
      print_height(oracle_2_5d_height(M, g, parse_scalar(eps)));
      return 0;
    }
    bool guarded = oracle_2_5d_zero(M, g);
    std::cout << (guarded ? "guarded" : "none") << "\n";
    return guarded ? 0 : 1;
  }
  ImpreciseTerrain1D T = terrain_from_json(j);
  OracleMode m = mode == "discrete" ? OracleMode::Discrete : OracleMode::Continuous;
  print_height(oracle_1d(T, g, m));
  return 0;
}

int run_validate(const std::string& input, const std::string& cert_path) {
  json input_json = load_json_file(input);
  json cert = load_json_file(cert_path);
  std::string reason;
  if (validate_certificate_json(input_json, cert, reason)) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "invalid: " << reason << "\n";
  return 1;
}

int run_bench(const std::vector<size_t>& sizes, unsigned long long seed) {
  for (size_t n : sizes) {
    std::mt19937_64 rng(seed);
    ImpreciseTerrain1D T = random_terrain(rng, n);
    auto t0 = std::chrono::steady_clock::now();
    Solution1D sol = solve_continuous_1d(T);
    double millis = ms_since(t0);
    std::printf("n=%zu height=%s time_ms=%.3f\n", n,
                to_fraction_string(sol.height).c_str(), millis);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shortest-watchtower solver for imprecise terrains"};
  app.require_subcommand(1);

  std::string input, mode = "continuous", svg_out, cert_path, eps;
  bool as_json = false;
  unsigned grid = 3;
  std::vector<size_t> sizes{1000, 10000};
  unsigned long long seed = 1;

  auto* solve1d = app.add_subcommand("solve1d", "Solve a 1.5D imprecise terrain");
  solve1d->add_option("--input", input)->required();
  solve1d->add_option("--mode", mode)->check(CLI::IsMember({"discrete", "continuous"}));
  solve1d->add_flag("--json", as_json);
  solve1d->add_option("--svg", svg_out);

  auto* zero = app.add_subcommand("solve25d-zero", "Zero-watchtower decision");
  zero->add_option("--input", input)->required();
  zero->add_flag("--json", as_json);

  auto* approx = app.add_subcommand("solve25d-approx", "OPT+epsilon 2.5D tower");
  approx->add_option("--input", input)->required();
  approx->add_option("--epsilon", eps)->required();
  approx->add_flag("--json", as_json);

  auto* oracle = app.add_subcommand("oracle", "Brute-force grid baseline");
  oracle->add_option("--input", input)->required();
  oracle->add_option("--grid", grid)->check(CLI::Range(2u, 64u));
  oracle->add_option("--mode", mode)->check(CLI::IsMember({"discrete", "continuous"}));
  oracle->add_option("--epsilon", eps);

  auto* validate = app.add_subcommand("validate", "Re-check a certificate");
  validate->add_option("--input", input)->required();
  validate->add_option("--cert", cert_path)->required();

  auto* bench = app.add_subcommand("bench", "Timing on seeded random terrains");
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (*solve1d) return run_solve1d(input, mode, as_json, svg_out);
    if (*zero) return run_solve25d_zero(input, as_json);
    if (*approx) return run_solve25d_approx(input, eps, as_json);
    if (*oracle) return run_oracle(input, grid, mode, eps);
    if (*validate) return run_validate(input, cert_path);
    if (*bench) return run_bench(sizes, seed);
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

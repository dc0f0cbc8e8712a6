#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <string>

#include "rosenmorse/errors.hpp"
#include "rosenmorse/ladder.hpp"
#include "rosenmorse/oracles.hpp"
#include "rosenmorse/specfun.hpp"
#include "rosenmorse/wavefn.hpp"

namespace rosenmorse::cli {

namespace {

namespace orc = rosenmorse::oracles;

double rel_dev(double got, double want) {
  const double scale = std::max(std::abs(want), std::numeric_limits<double>::min());
  return std::abs(got - want) / scale;
}

CheckResult make(std::string name, double dev, double tol, std::string detail = {}) {
  return {std::move(name), dev <= tol, dev, tol, std::move(detail)};
}

double max_abs_psi(const Eigenstate& s) {
  double m = 0.0;
  for (int i = 0; i <= 1600; ++i) m = std::max(m, std::abs(eval_state(s, -8.0 + 0.01 * i)));
  return m;
}

CheckResult check_exponents(const PotentialParams& p, const std::vector<Eigenstate>& states) {
  double dev = 0.0;
  for (const auto& s : states) {
    const auto& e = s.exponents;
    dev = std::max(dev, rel_dev((e.b + e.a) * (e.b + e.a), -e.energy + 2.0 * p.beta));
    dev = std::max(dev, rel_dev((e.b - e.a) * (e.b - e.a), -e.energy - 2.0 * p.beta));
  }
  return make("exponent_identities", dev, 1e-12);
}

CheckResult check_coefficients(const std::vector<Eigenstate>& states) {
  double dev = 0.0;
  for (const auto& s : states) {
    const auto oracle = orc::jacobi_three_term_coeffs(s.poly.params.A, s.poly.params.B, s.n);
    for (std::size_t m = 0; m < oracle.size(); ++m) {
      if (oracle[m] != 0.0) dev = std::max(dev, rel_dev(s.poly.coefficient(static_cast<int>(m)), oracle[m]));
    }
  }
  return make("coefficients_vs_three_term", dev, 1e-9);
}

CheckResult check_endpoints(const std::vector<Eigenstate>& states) {
  double dev = 0.0;
  for (const auto& s : states) {
    const int n = s.n;
    const auto [A, B] = s.poly.params;
    dev = std::max(dev, rel_dev(s.poly.coefficient(0), generalized_binomial(A + n, n)));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    dev = std::max(dev, rel_dev(s.poly.eval_w(2.0), sign * generalized_binomial(B + n, n)));
  }
  return make("endpoint_identities", dev, 1e-9);
}

CheckResult check_fd(const PotentialParams& p, const std::vector<Eigenstate>& states) {
  // The 3-point stencil error is O(h^2) and grows with the well depth, so the
  // grid N = 4000 result is combined with N = 8000 by Richardson extrapolation.
  const orc::FdResult coarse = orc::fd_eigensolver(p, orc::Grid1D{16.0, 4000});
  const orc::FdResult fine = orc::fd_eigensolver(p, orc::Grid1D{16.0, 8000});
  if (coarse.eigenvalues.size() != states.size() || fine.eigenvalues.size() != states.size()) {
    return {"energies_vs_finite_difference", false, std::numeric_limits<double>::infinity(), 2e-3,
            "finite-difference solver found " + std::to_string(coarse.eigenvalues.size()) +
                " levels, expected " + std::to_string(states.size())};
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double extrapolated = (4.0 * fine.eigenvalues[i] - coarse.eigenvalues[i]) / 3.0;
    dev = std::max(dev, rel_dev(extrapolated, states[i].exponents.energy));
  }
  return make("energies_vs_finite_difference", dev, 2e-3,
              coarse.coarse_grid ? "grid flagged as coarse" : "");
}

CheckResult check_triple(const std::vector<Eigenstate>& states) {
  double dev = 0.0;
  for (const auto& s : states) {
    const auto [A, B] = s.poly.params;
    // Odd symmetric states vanish at v = 0, so deviations are measured
    // against the largest |P| on the grid.
    constexpr double grid[] = {-0.9, -0.3, 0.0, 0.5, 0.99};
    double scale = std::numeric_limits<double>::min();
    for (double v : grid) scale = std::max(scale, std::abs(orc::jacobi_three_term(A, B, s.n, v)));
    for (double v : grid) {
      const double t = orc::jacobi_three_term(A, B, s.n, v);
      const double h = orc::jacobi_hypergeometric(A, B, s.n, v);
      const double g = orc::jacobi_binomial_expansion(A + s.n, B + s.n, s.n, v);
      dev = std::max({dev, std::abs(h - t) / scale, std::abs(g - t) / scale,
                      std::abs(g - h) / scale});
    }
  }
  return make("jacobi_triple_agreement", dev, 1e-10);
}

CheckResult check_nodes(const std::vector<Eigenstate>& states) {
  double dev = 0.0;
  std::string detail;
  for (const auto& s : states) {
    const int nodes = node_count(s, -10.0, 10.0, 2001);
    if (nodes != s.n) {
      dev = std::max(dev, static_cast<double>(std::abs(nodes - s.n)));
      detail = "state " + std::to_string(s.n) + " has " + std::to_string(nodes) + " nodes";
    }
  }
  return make("node_counts", dev, 0.0, detail);
}

CheckResult check_orthonormality(const std::vector<Eigenstate>& states, double tol) {
  double dev = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i; j < states.size(); ++j) {
      const double o = orc::overlap(states[i], states[j]);
      dev = std::max(dev, std::abs(o - (i == j ? 1.0 : 0.0)));
    }
  }
  return make("orthonormality", dev, tol);
}

CheckResult check_residual(const std::vector<Eigenstate>& states) {
  double dev = 0.0;
  for (const auto& s : states) {
    const double scale = std::abs(s.exponents.energy) * max_abs_psi(s);
    for (int i = 0; i <= 100; ++i) {
      const double x = -8.0 + 0.16 * i;
      dev = std::max(dev, std::abs(schrodinger_residual(s, x)) / scale);
    }
  }
  return make("schrodinger_residual", dev, 1e-8);
}

CheckResult check_decay(const std::vector<Eigenstate>& states) {
  double dev = 0.0;
  for (const auto& s : states) {
    const double slope = std::log(std::abs(eval_state(s, 13.0))) -
                         std::log(std::abs(eval_state(s, 12.0)));
    dev = std::max(dev, std::abs(slope + s.exponents.b + s.exponents.a));
  }
  return make("decay_rate", dev, 1e-3);
}

CheckResult check_weyl(const std::vector<Eigenstate>& states) {
  // For each state n <= 5, take the degree n+1 polynomial with parameters
  // (A_n - 1, B_n - 1) that a raising step feeds into the Weyl integral.
  double dev = 0.0;
  for (const auto& s : states) {
    if (s.n > 5) break;
    const double A = s.poly.params.A - 1.0;
    const double B = s.poly.params.B - 1.0;
    const int N = s.n + 1;
    const auto b = ShiftedPolynomial::from_doubles({A, B}, orc::jacobi_three_term_coeffs(A, B, N));
    for (double nu : {0.0658762, 0.3, 0.8}) {
      const ShiftedPolynomial c = weyl_shift(b, WeylOrder{nu});
      const double gamma_factor = std::exp(ln_gamma(A + N + 1.0) - ln_gamma(A + nu + N + 1.0));
      for (double u : {0.1, 0.5, 0.9}) {
        const double v = 2.0 * u - 1.0;
        const double quad = orc::weyl_integral_quadrature(b, A, nu, u);
        const double shape = std::pow(1.0 - u, A + nu) * gamma_factor;
        const double closed = shape * orc::jacobi_three_term(A + nu, B - nu, N, v);
        dev = std::max({dev, rel_dev(quad, closed), rel_dev(shape * c(v), quad)});
      }
    }
  }
  return make("weyl_integral_witness", dev, 1e-6);
}

CheckResult check_mirror(const PotentialParams& p, const std::vector<Eigenstate>& states) {
  const PotentialParams mirrored{p.alpha, -p.beta, p.scale};
  const auto other = build_states(mirrored);
  double dev = 0.0;
  for (std::size_t i = 0; i < states.size() && i < other.size(); ++i) {
    const double sign = (states[i].n % 2 == 0) ? 1.0 : -1.0;
    const double scale = max_abs_psi(states[i]);
    for (double x : {-2.5, -0.7, 0.0, 0.3, 1.9}) {
      dev = std::max(dev, std::abs(eval_state(states[i], x) - sign * eval_state(other[i], -x)) / scale);
    }
  }
  if (other.size() != states.size()) dev = std::numeric_limits<double>::infinity();
  return make("mirror_symmetry", dev, 1e-12);
}

CheckResult check_symmetric_path(const PotentialParams& p, const std::vector<Eigenstate>& states) {
  double dev = 0.0;
  TanhPolynomial t = seed_symmetric(p.alpha);
  for (const auto& s : states) {
    if (s.n > 0) t = raise_symmetric(t);
    const auto mono = convert_basis(s.poly);
    for (std::size_t m = 0; m < mono.size(); ++m) {
      if (t.coeffs[m] != 0.0) dev = std::max(dev, rel_dev(mono[m], t.coeffs[m] / s.norm));
    }
  }
  return make("symmetric_path_equivalence", dev, 1e-10);
}

CheckResult check_ladder(const PotentialParams& p, const std::vector<Eigenstate>& states) {
  double dev = 0.0;
  for (std::size_t n = 0; n + 1 < states.size(); ++n) {
    const double scale = max_abs_psi(states[n + 1]);
    for (double x : {-1.3, 0.0, 0.4, 2.1}) {
      dev = std::max(dev, std::abs(orc::ladder_numeric_check(p, static_cast<int>(n), x)) / scale);
    }
  }
  return make("ladder_factors", dev, 1e-9);
}

CheckResult check_seed(const PotentialParams& p) {
  return make("normalization_seed",
              rel_dev(seed_symmetric(p.alpha).coeffs[0], normalization(p, 0)), 1e-12);
}

// Runs a check, turning library errors into a failed result.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& check) {
  try {
    return check();
  } catch (const std::exception& e) {
    return {name, false, std::numeric_limits<double>::infinity(), 0.0, e.what()};
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const PotentialParams& p, const VerifyOptions& opts) {
  p.validate();
  const std::vector<Eigenstate> states = build_states(p);

  std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
      {"exponent_identities", [&] { return check_exponents(p, states); }},
      {"coefficients_vs_three_term", [&] { return check_coefficients(states); }},
      {"endpoint_identities", [&] { return check_endpoints(states); }},
      {"energies_vs_finite_difference", [&] { return check_fd(p, states); }},
      {"jacobi_triple_agreement", [&] { return check_triple(states); }},
      {"node_counts", [&] { return check_nodes(states); }},
      {"orthonormality", [&] { return check_orthonormality(states, opts.orthonormality_tol); }},
      {"schrodinger_residual", [&] { return check_residual(states); }},
      {"decay_rate", [&] { return check_decay(states); }},
      {"weyl_integral_witness", [&] { return check_weyl(states); }},
      {"mirror_symmetry", [&] { return check_mirror(p, states); }},
  };
  if (p.beta == 0.0) {
    checks.push_back({"symmetric_path_equivalence", [&] { return check_symmetric_path(p, states); }});
    checks.push_back({"ladder_factors", [&] { return check_ladder(p, states); }});
    checks.push_back({"normalization_seed", [&] { return check_seed(p); }});
  }

  std::vector<std::future<CheckResult>> pending;
  pending.reserve(checks.size());
  for (const auto& [name, fn] : checks) {
    pending.push_back(std::async(std::launch::async, guarded, name, fn));
  }
  std::vector<CheckResult> results;
  results.reserve(pending.size());
  for (auto& f : pending) results.push_back(f.get());

  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

}  // namespace rosenmorse::cli

#include "cli/cli.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include <map>
#include <ostream>

#include "cli/output.hpp"
#include "cli/verify.hpp"
#include "rosenmorse/errors.hpp"
#include "rosenmorse/spectrum.hpp"
#include "rosenmorse/wavefn.hpp"

namespace rosenmorse::cli {

namespace {

using nlohmann::json;

constexpr double kDefaultXmin = -8.0;
constexpr double kDefaultXmax = 8.0;
constexpr int kDefaultPoints = 801;

json params_json(const PotentialParams& p) { return {{"alpha", p.alpha}, {"beta", p.beta}}; }

void require_range(const CliRequest& req) {
  const double lo = req.xmin.value_or(kDefaultXmin);
  const double hi = req.xmax.value_or(kDefaultXmax);
  if (!(lo < hi)) throw DomainError("--xmin must be smaller than --xmax");
  if (req.points && *req.points < 2) throw DomainError("--points must be at least 2");
}

int do_spectrum(const CliRequest& req, const PotentialParams& p, std::ostream& out,
                std::ostream& err) {
  const auto states = build_states(p);
  if (states.empty()) {
    err << "note: no bound states for alpha=" << format_number(p.alpha)
        << " beta=" << format_number(p.beta) << '\n';
  }
  if (req.format == Format::json) {
    json doc{{"params", params_json(p)}, {"states", json::array()}};
    for (const auto& s : states) {
      doc["states"].push_back({{"n", s.n},
                               {"energy", s.exponents.energy},
                               {"a", s.exponents.a},
                               {"b", s.exponents.b},
                               {"norm", s.norm}});
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  write_csv_row(out, std::vector<std::string>{"n", "energy", "a", "b", "norm"});
  for (const auto& s : states) {
    write_csv_row(out, std::vector<std::string>{std::to_string(s.n),
                                                format_number(s.exponents.energy),
                                                format_number(s.exponents.a),
                                                format_number(s.exponents.b),
                                                format_number(s.norm)});
  }
  return kExitOk;
}

int do_coeffs(const CliRequest& req, const PotentialParams& p, std::ostream& out) {
  const Eigenstate s = build_state(p, *req.n);
  if (req.format == Format::json) {
    json doc{{"params", params_json(p)},
             {"states", json::array({{{"n", s.n},
                                      {"A", s.poly.params.A},
                                      {"B", s.poly.params.B},
                                      {"coeffs", s.poly.coefficients()}}})}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "# n=" << s.n << '\n';
  out << "# A=" << format_number(s.poly.params.A) << '\n';
  out << "# B=" << format_number(s.poly.params.B) << '\n';
  write_csv_row(out, std::vector<std::string>{"m", "c"});
  for (int m = 0; m <= s.poly.degree(); ++m) {
    write_csv_row(out, std::vector<std::string>{std::to_string(m),
                                                format_number(s.poly.coefficient(m))});
  }
  return kExitOk;
}

int do_sample(const CliRequest& req, const PotentialParams& p, std::ostream& out) {
  require_range(req);
  const Eigenstate s = build_state(p, *req.n);
  const SampleTable t = sample(s, req.xmin.value_or(kDefaultXmin), req.xmax.value_or(kDefaultXmax),
                               req.points.value_or(kDefaultPoints));
  if (req.format == Format::json) {
    json doc{{"params", params_json(p)},
             {"states", json::array({{{"n", s.n},
                                      {"energy", s.exponents.energy},
                                      {"x", t.xs},
                                      {"psi", t.psis}}})}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  write_csv_row(out, std::vector<std::string>{"x", "psi"});
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    write_csv_row(out, std::vector<double>{t.xs[i], t.psis[i]});
  }
  return kExitOk;
}

int do_plotdata(const CliRequest& req, const PotentialParams& p, std::ostream& out,
                std::ostream& err) {
  require_range(req);
  const double lo = req.xmin.value_or(kDefaultXmin);
  const double hi = req.xmax.value_or(kDefaultXmax);
  const int points = req.points.value_or(kDefaultPoints);
  const auto states = build_states(p);
  if (states.empty()) {
    err << "note: no bound states for alpha=" << format_number(p.alpha)
        << " beta=" << format_number(p.beta) << '\n';
  }

  // Each psi_n is drawn at height E_n, scaled by 0.4 of the gap to the next
  // level (0.4 for the top state).
  std::vector<double> scales(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    const double gap = (k + 1 < states.size())
                           ? states[k + 1].exponents.energy - states[k].exponents.energy
                           : 1.0;
    scales[k] = 0.4 * gap;
  }

  std::vector<SampleTable> tables;
  tables.reserve(states.size());
  for (const auto& s : states) tables.push_back(sample(s, lo, hi, points));
  std::vector<double> xs(points);
  std::vector<double> vs(points);
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    xs[i] = (i == points - 1) ? hi : lo + i * h;
    vs[i] = p.potential(xs[i]);
  }

  if (req.format == Format::json) {
    json doc{{"params", params_json(p)}, {"x", xs}, {"V", vs}, {"states", json::array()}};
    for (std::size_t k = 0; k < states.size(); ++k) {
      std::vector<double> curve(points);
      for (int i = 0; i < points; ++i) {
        curve[i] = states[k].exponents.energy + scales[k] * tables[k].psis[i];
      }
      doc["states"].push_back({{"n", states[k].n},
                               {"energy", states[k].exponents.energy},
                               {"scale", scales[k]},
                               {"psi", curve}});
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  std::vector<std::string> header{"x", "V"};
  for (const auto& s : states) {
    header.push_back("E" + std::to_string(s.n));
    header.push_back("psi" + std::to_string(s.n));
  }
  write_csv_row(out, header);
  std::vector<double> row;
  for (int i = 0; i < points; ++i) {
    row.assign({xs[i], vs[i]});
    for (std::size_t k = 0; k < states.size(); ++k) {
      row.push_back(states[k].exponents.energy);
      row.push_back(states[k].exponents.energy + scales[k] * tables[k].psis[i]);
    }
    write_csv_row(out, row);
  }
  return kExitOk;
}

int do_verify(const CliRequest& req, const PotentialParams& p, std::ostream& out,
              std::ostream& err) {
  if (!(req.tol > 0.0)) throw DomainError("--tol must be positive");
  const auto results = run_verification(p, VerifyOptions{req.tol});
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  if (req.format == Format::json) {
    json doc{{"params", params_json(p)}, {"passed", all_pass}, {"checks", json::array()}};
    for (const auto& r : results) {
      doc["checks"].push_back({{"name", r.name},
                               {"pass", r.pass},
                               {"max_deviation", r.max_deviation},
                               {"tolerance", r.tolerance},
                               {"detail", r.detail}});
    }
    out << doc.dump(2) << '\n';
  } else {
    write_csv_row(out, std::vector<std::string>{"check", "status", "max_deviation", "tolerance"});
    for (const auto& r : results) {
      write_csv_row(out, std::vector<std::string>{r.name, r.pass ? "PASS" : "FAIL",
                                                  format_number(r.max_deviation),
                                                  format_number(r.tolerance)});
    }
  }
  for (const auto& r : results) {
    if (!r.detail.empty()) err << r.name << ": " << r.detail << '\n';
  }
  if (!all_pass) err << "verification failed\n";
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int execute(const CliRequest& req, std::ostream& out, std::ostream& err) {
  const PotentialParams p{req.alpha, req.beta, std::nullopt};
  p.validate();
  switch (req.subcommand) {
    case Subcommand::spectrum:
      return do_spectrum(req, p, out, err);
    case Subcommand::coeffs:
      return do_coeffs(req, p, out);
    case Subcommand::sample:
      return do_sample(req, p, out);
    case Subcommand::plotdata:
      return do_plotdata(req, p, out, err);
    case Subcommand::verify:
      return do_verify(req, p, out, err);
  }
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of the Rosen-Morse potential", argv.empty() ? "rmorse" : argv[0]};
  app.require_subcommand(1);

  CliRequest req;
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", req.alpha, "well-depth parameter (> 0)")->required();
    sub->add_option("--beta", req.beta, "barrier parameter")->capture_default_str();
    sub->add_option("--format", req.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  const auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--xmin", req.xmin, "left end of the grid (default -8)");
    sub->add_option("--xmax", req.xmax, "right end of the grid (default 8)");
    sub->add_option("--points", req.points, "number of grid points (default 801)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "energies, exponents and norms of all bound states");
  add_common(spectrum);

  auto* coeffs = app.add_subcommand("coeffs", "shifted-basis Jacobi coefficients of state n");
  add_common(coeffs);
  coeffs->add_option("--n", req.n, "state index")->required();

  auto* sample_cmd = app.add_subcommand("sample", "psi_n on a uniform grid");
  add_common(sample_cmd);
  sample_cmd->add_option("--n", req.n, "state index")->required();
  add_grid(sample_cmd);

  auto* verify = app.add_subcommand("verify", "check closed forms against independent oracles");
  add_common(verify);
  verify->add_option("--tol", req.tol, "orthonormality tolerance")->capture_default_str();

  auto* plotdata = app.add_subcommand("plotdata", "potential, levels and offset wave functions");
  add_common(plotdata);
  add_grid(plotdata);

  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*spectrum) req.subcommand = Subcommand::spectrum;
  if (*coeffs) req.subcommand = Subcommand::coeffs;
  if (*sample_cmd) req.subcommand = Subcommand::sample;
  if (*verify) req.subcommand = Subcommand::verify;
  if (*plotdata) req.subcommand = Subcommand::plotdata;

  try {
    return execute(req, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rosenmorse::cli

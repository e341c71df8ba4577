#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "aclab/anticoherence.hpp"
#include "aclab/errors.hpp"
#include "aclab/io.hpp"
#include "aclab/majorana.hpp"
#include "aclab/search.hpp"
#include "aclab/slocc.hpp"
#include "aclab/sphere.hpp"

namespace aclab::cli {

namespace {

// Desk-scale scan bounds; --full-range lifts them.
constexpr int kDeskMaxT = 7;
constexpr int kDeskMaxN = 100;
constexpr int kFullMaxN = 500;

struct Globals {
  double tol = 1e-10;
  bool tol_given = false;
  bool json = false;
  std::string output;
  int threads = 1;
  bool full_range = false;
};

int resolve_threads(int requested) {
  if (const char* env = std::getenv("ACLAB_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw InputError("ACLAB_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string vec_json(const Eigen::Vector3d& v) {
  return "[" + format_double(v.x()) + ", " + format_double(v.y()) + ", " + format_double(v.z()) + "]";
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

std::string cmd_check(const Globals& g, const std::string& path, std::optional<int> order) {
  const auto file = read_state(path);
  std::ostringstream out;
  if (order) {
    const int t = *order;
    if (t < 1 || t > file.state.n_qubits()) throw InputError("--order must lie in [1, N]");
    const bool ok = check_reduced(file.state, t, g.tol);
    if (g.json) {
      out << "{\"t\": " << t << ", \"anticoherent\": " << bool_json(ok) << ", \"residuals\": {";
      for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
        out << (i == 0 ? "" : ", ") << '"' << to_string(kAllMethods[i])
            << "\": " << format_double(residual(kAllMethods[i], file.state, t));
      }
      out << "}}\n";
    } else {
      out << "t=" << t << ' ' << (ok ? "pass" : "fail") << '\n';
    }
    return out.str();
  }
  const auto report = analyze(file.state, g.tol);
  if (g.json) {
    out << report_json(report) << '\n';
  } else {
    out << "order " << report.order << '\n';
  }
  return out.str();
}

std::string cmd_roots(const Globals& g, const std::string& path) {
  const auto cfg = majorana_points(read_state(path).state, g.tol);
  if (!g.json) return points_to_text(cfg);
  std::ostringstream out;
  out << "{\"points\": [";
  const auto dirs = cfg.directions();
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    out << (i == 0 ? "" : ", ") << "{\"theta\": " << format_double(dirs[i].theta) << ", \"phi\": " << format_double(dirs[i].phi) << '}';
  }
  out << "]}\n";
  return out.str();
}

std::string cmd_from_points(const std::string& path) { return state_to_json(state_from_points(read_points(path))); }

std::string cmd_slocc_rep(const Globals& g, const std::string& path) {
  const auto framed = canonical_cyclic_frame(read_state(path).state);
  const double y = positive_root(framed);
  const auto rep = apply_diagonal_ilo(framed, y);
  if (!g.json) return state_to_json(rep);
  std::ostringstream out;
  out << "{\"y\": " << format_double(y) << ", \"degeneracy\": \"" << degeneracy_configuration(rep).to_string()
      << "\", \"state\": " << state_to_json(rep) << "}\n";
  return out.str();
}

std::string cmd_slocc_eq(const Globals& g, const std::string& a, const std::string& b) {
  const double tol = g.tol_given ? g.tol : 1e-6;
  const bool eq = slocc_equivalent(read_state(a).state, read_state(b).state, tol);
  if (g.json) return std::string("{\"equivalent\": ") + bool_json(eq) + "}\n";
  return eq ? "equivalent\n" : "inequivalent\n";
}

int cmd_search(const Globals& g, int t, std::optional<int> n_max, std::optional<int> n_min, bool all, std::string& text,
               std::ostream& err) {
  if (t < 1) throw InputError("t must be >= 1");
  const int hi = n_max.value_or(g.full_range ? kFullMaxN : kDeskMaxN);
  if (!g.full_range && (t > kDeskMaxT || hi > kDeskMaxN)) {
    throw InputError("beyond desk scale (t <= 7, N <= 100); pass --full-range");
  }
  if (g.full_range) err << "warning: full-range scan; large t and N can take hours\n";
  ScanOptions opts;
  opts.threads = g.threads;
  const auto records = scan(t, n_min.value_or(t + 1), hi, opts);
  std::ostringstream out;
  bool any = false;
  for (const auto& r : records) {
    any = any || r.feasible;
    if (r.feasible || all) out << scan_record_json(r) << '\n';
  }
  text = out.str();
  return any ? kOk : kInfeasible;
}

std::string plan_json(const GLPlan& p) {
  std::ostringstream out;
  out << "{\"t\": " << p.t << ", \"N\": " << p.n_qubits << ", \"symmetric\": " << bool_json(p.symmetric) << ", \"positions\": [";
  for (std::size_t i = 0; i < p.positions.size(); ++i) out << (i == 0 ? "" : ", ") << p.positions[i];
  out << "], \"x\": [";
  for (std::size_t i = 0; i < p.solution.size(); ++i) out << (i == 0 ? "" : ", ") << format_double(p.solution[i]);
  out << "], \"min_gap\": " << p.min_gap << ", \"positive\": " << bool_json(p.positive) << ", \"spaced\": " << bool_json(p.spaced)
      << ", \"success\": " << bool_json(p.success()) << "}";
  return out.str();
}

int cmd_gl(const Globals& g, int t, std::optional<int> n, bool symmetric, bool first, int n_max, std::string& text,
           std::ostream& err) {
  const int big_n = n.value_or(gl_default_n(t));
  std::optional<GLResult> result;
  if (first) {
    result = gl_first_success(t, symmetric, big_n, n_max);
    if (!result) {
      err << "no successful N in [" << big_n << ", " << n_max << "]\n";
      return kInfeasible;
    }
  } else {
    result = symmetric ? gl_construct_symmetric(t, big_n) : gl_construct(t, big_n);
  }
  if (g.json) {
    text = "{\"plan\": " + plan_json(result->plan) + ", \"state\": " + (result->state ? state_to_json(*result->state) : "null\n") + "}\n";
  } else if (result->state) {
    text = state_to_json(*result->state);
  }
  if (!result->state) {
    err << "construction failed at t=" << t << ", N=" << result->plan.n_qubits << ": " << result->plan.diagnostics << '\n';
    return kInfeasible;
  }
  return kOk;
}

std::string cmd_family(const std::string& name, const FamilyParams& params) {
  const auto exact = family_exact(name, params);
  return state_to_json(to_state(exact), &exact);
}

std::string cmd_husimi(const std::string& path, int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw InputError("grid sizes must be positive");
  return husimi_csv(husimi_grid(read_state(path).state, n_theta, n_phi));
}

std::string cmd_multipoles(const Globals& g, const std::string& path, std::optional<int> lmax_opt, bool use_husimi) {
  const auto state = read_state(path).state;
  const int lmax = lmax_opt.value_or(state.n_qubits());
  if (lmax < 0 || lmax > state.n_qubits()) throw InputError("--lmax must lie in [0, N]");
  std::function<Complex(int, int)> value;
  std::optional<MultipoleTable> table;
  std::optional<HusimiMultipoles> husimi_table;
  if (use_husimi) {
    husimi_table.emplace(husimi_multipoles(state, lmax));
    value = [&](int l, int m) { return husimi_table->at(l, m); };
  } else {
    table.emplace(multipole_coeffs(state, lmax));
    value = [&](int l, int m) { return table->at(l, m); };
  }
  std::ostringstream out;
  if (g.json) out << "[";
  else out << "l,m,re,im\n";
  bool first = true;
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex c = value(l, m);
      if (g.json) {
        out << (first ? "" : ", ") << "{\"l\": " << l << ", \"m\": " << m << ", \"re\": " << format_double(c.real())
            << ", \"im\": " << format_double(c.imag()) << '}';
      } else {
        out << l << ',' << m << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
      }
      first = false;
    }
  }
  if (g.json) out << "]\n";
  return out.str();
}

std::string cmd_symmetry(const Globals& g, const std::string& path) {
  const auto state = read_state(path).state;
  const double tol = g.tol_given ? g.tol : 1e-7;
  const auto cfg = majorana_points(state, 1e-8);
  const auto found = detect_point_group(cfg, tol);
  const auto form = canonical_group_form(state, std::max(tol, 1e-10));
  std::ostringstream out;
  if (g.json) {
    out << "{\"group\": \"" << found.report.group.to_string() << "\", \"cyclic_order\": " << found.report.max_cyclic
        << ", \"axis\": " << vec_json(found.frame.axis) << ", \"coefficient_form\": \"" << form.to_string() << "\"}\n";
  } else {
    out << "group " << found.report.group.to_string() << '\n'
        << "axis " << format_double(found.frame.axis.x()) << ' ' << format_double(found.frame.axis.y()) << ' '
        << format_double(found.frame.axis.z()) << '\n'
        << "coefficient_form " << form.to_string() << '\n';
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anticoherent spin states: checks, Majorana points, SLOCC representatives and searches"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  int threads_flag = 0;
  auto* tol_opt = app.add_option("--tol", g.tol, "Numerical tolerance")->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--output,-o", g.output, "Write output to this file");
  app.add_option("--threads", threads_flag, "Worker threads (ACLAB_THREADS overrides)");
  app.add_flag("--full-range", g.full_range, "Allow large scans (t <= 20, N <= 500)");

  std::string path, path_b, name;
  std::optional<int> order, n_opt, n_min, lmax;
  int t = 0, n_theta = 32, n_phi = 64, gl_n_max = 20000;
  bool all = false, symmetric = false, first = false, use_husimi = false;
  FamilyParams params;
  int fam_n = -1, fam_m = -1, fam_k = -1;

  auto* check = app.add_subcommand("check", "Order of anticoherence, or pass/fail at --order");
  check->add_option("state", path, "State file")->required();
  check->add_option("--order,-t", order, "Test only this order");

  auto* roots = app.add_subcommand("roots", "Majorana points of a state");
  roots->add_option("state", path, "State file")->required();

  auto* from_points = app.add_subcommand("from-points", "State from Majorana points");
  from_points->add_option("points", path, "Points file (theta phi mult)")->required();

  auto* slocc_rep = app.add_subcommand("slocc-rep", "Anticoherent SLOCC representative");
  slocc_rep->add_option("state", path, "State file")->required();

  auto* slocc_eq = app.add_subcommand("slocc-eq", "SLOCC equivalence of two states");
  slocc_eq->add_option("a", path, "First state file")->required();
  slocc_eq->add_option("b", path_b, "Second state file")->required();

  auto* search_cmd = app.add_subcommand("search", "Scan N for C_n-symmetric t-anticoherent states");
  search_cmd->add_option("t", t, "Order")->required();
  search_cmd->add_option("n_max", n_opt, "Largest N (default 100, or 500 with --full-range)");
  search_cmd->add_option("--n-min", n_min, "Smallest N (default t+1)");
  search_cmd->add_flag("--all", all, "Also print infeasible N");

  auto* gl = app.add_subcommand("gl", "Gauss-Legendre construction");
  gl->add_option("t", t, "Order")->required();
  gl->add_option("N", n_opt, "Qubits (default t(t+1)(t+2)/6)");
  gl->add_flag("--symmetric", symmetric, "Mirror-symmetric variant (even t)");
  gl->add_flag("--first", first, "Search upward from N for the first success");
  gl->add_option("--n-max", gl_n_max, "Upper bound for --first")->capture_default_str();

  auto* family = app.add_subcommand("family", "Named state families");
  family->add_option("name", name, "Family name")->required()->check(CLI::IsMember(family_names()));
  family->add_option("--N", fam_n, "Qubits");
  family->add_option("--m", fam_m, "Family index (dnh5)");
  family->add_option("--k", fam_k, "Excitations (dicke)");

  auto* husimi_cmd = app.add_subcommand("husimi", "Husimi function on a Gauss-Legendre grid (CSV)");
  husimi_cmd->add_option("state", path, "State file")->required();
  husimi_cmd->add_option("--n-theta", n_theta, "Polar nodes")->capture_default_str();
  husimi_cmd->add_option("--n-phi", n_phi, "Azimuthal nodes")->capture_default_str();

  auto* multipoles = app.add_subcommand("multipoles", "State multipoles c_lm (or Husimi Q_lm)");
  multipoles->add_option("state", path, "State file")->required();
  multipoles->add_option("--lmax", lmax, "Largest rank (default N)");
  multipoles->add_flag("--husimi", use_husimi, "Spherical-harmonic moments of the Husimi function");

  auto* symmetry = app.add_subcommand("symmetry", "Axial point group of the Majorana points");
  symmetry->add_option("state", path, "State file")->required();

  std::vector<const char*> argv{"aclab"};
  for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  g.tol_given = tol_opt->count() > 0;

  std::string text;
  int code = kOk;
  try {
    if (!(g.tol > 0.0)) throw InputError("--tol must be positive");
    g.threads = resolve_threads(threads_flag);
    if (*check) {
      text = cmd_check(g, path, order);
    } else if (*roots) {
      text = cmd_roots(g, path);
    } else if (*from_points) {
      text = cmd_from_points(path);
    } else if (*slocc_rep) {
      text = cmd_slocc_rep(g, path);
    } else if (*slocc_eq) {
      text = cmd_slocc_eq(g, path, path_b);
    } else if (*search_cmd) {
      code = cmd_search(g, t, n_opt, n_min, all, text, err);
    } else if (*gl) {
      code = cmd_gl(g, t, n_opt, symmetric, first, gl_n_max, text, err);
    } else if (*family) {
      if (fam_n >= 0) params["N"] = fam_n;
      if (fam_m >= 0) params["m"] = fam_m;
      if (fam_k >= 0) params["k"] = fam_k;
      text = cmd_family(name, params);
    } else if (*husimi_cmd) {
      text = cmd_husimi(path, n_theta, n_phi);
    } else if (*multipoles) {
      text = cmd_multipoles(g, path, lmax, use_husimi);
    } else if (*symmetry) {
      text = cmd_symmetry(g, path);
    }
  } catch (const NoRepresentativeError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const DiagnosticError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    // InputError, BadShapeError, IndexError, ZeroStateError
    err << "error: " << e.what() << '\n';
    return kInput;
  }

  if (g.output.empty()) {
    out << text;
  } else {
    try {
      write_text(g.output, text);
    } catch (const InputError& e) {
      err << "error: " << e.what() << '\n';
      return kInput;
    }
  }
  return code;
}

}  // namespace aclab::cli

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "relrep/error.hpp"
#include "relrep/fock.hpp"
#include "relrep/intertwiner.hpp"
#include "relrep/json_io.hpp"
#include "relrep/lorentz_rep.hpp"
#include "relrep/minkowski.hpp"
#include "relrep/state.hpp"
#include "relrep/su2.hpp"

namespace relrep::cli {
namespace {

// ---------------------------------------------------------------------------
// Deterministic JSON text: object keys sorted (nlohmann's default map), floats
// at 17 significant digits so identical argv gives byte-identical output.

void format_double(double v, std::ostream& os) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void dump_json(const Json& j, std::ostream& os, bool pretty, int depth = 0) {
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ',';
      first = false;
      if (pretty) os << '\n' << std::string(2 * (depth + 1), ' ');
      os << Json(it.key()).dump() << (pretty ? ": " : ":");
      dump_json(it.value(), os, pretty, depth + 1);
    }
    if (pretty) os << '\n' << std::string(2 * depth, ' ');
    os << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    os << '[';
    bool first = true;
    for (const auto& item : j) {
      if (!first) os << ',';
      first = false;
      if (pretty) os << '\n' << std::string(2 * (depth + 1), ' ');
      dump_json(item, os, pretty, depth + 1);
    }
    if (pretty) os << '\n' << std::string(2 * depth, ' ');
    os << ']';
  } else if (j.is_number_float()) {
    format_double(j.get<double>(), os);
  } else {
    os << j.dump();
  }
}

// ---------------------------------------------------------------------------
// Flag parsing helpers.

double parse_double(const std::string& text) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + text + "'");
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters in number '" + text + "'");
  return v;
}

Matrix2 pauli(int k) {
  Matrix2 s = Matrix2::Zero();
  const Complex i(0, 1);
  switch (k) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, -i, i, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

Matrix2 named_factor(const std::string& name, double value) {
  int axis = -1;
  bool rot = false;
  if (name == "rot-x" || name == "boost-x") axis = 0;
  if (name == "rot-y" || name == "boost-y") axis = 1;
  if (name == "rot-z" || name == "boost-z") axis = 2;
  rot = name.rfind("rot-", 0) == 0;
  if (axis < 0) throw ParseError("unknown generator '" + name + "' (use rot-x/y/z or boost-x/y/z)");
  const Matrix2 s = pauli(axis);
  if (rot)  // exp(-i value sigma_axis / 2)
    return std::cos(value / 2) * Matrix2::Identity() - Complex(0, 1) * std::sin(value / 2) * s;
  // exp(value sigma_axis / 2)
  return std::cosh(value / 2) * Matrix2::Identity() + std::sinh(value / 2) * s;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

/// Either eight reals "re,im,re,im,..." (row-major 2x2) or a ';'-separated
/// list of named one-parameter factors "boost-z:0.7;rot-z:1.2" multiplied
/// left to right as written (the rightmost factor acts first on vectors).
Matrix2 parse_lambda(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    Matrix2 m = Matrix2::Identity();
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(';', start);
      std::string tok = trim(text.substr(start, end == std::string::npos ? end : end - start));
      if (tok.empty()) throw ParseError("empty factor in --lambda");
      std::size_t colon = tok.find(':');
      if (colon == std::string::npos) throw ParseError("factor '" + tok + "' is missing ':'");
      m = m * named_factor(trim(tok.substr(0, colon)), parse_double(tok.substr(colon + 1)));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return m;
  }
  std::vector<double> vals;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    vals.push_back(parse_double(text.substr(start, end == std::string::npos ? end : end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (vals.size() != 8)
    throw ParseError("--lambda needs 8 reals (re,im per entry, row-major), got " +
                     std::to_string(vals.size()));
  Matrix2 m;
  m(0, 0) = {vals[0], vals[1]};
  m(0, 1) = {vals[2], vals[3]};
  m(1, 0) = {vals[4], vals[5]};
  m(1, 1) = {vals[6], vals[7]};
  return m;
}

Json real_matrix_json(const LorentzMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// The C-infinity bump used by measure-test: support |s| < 1.

double bump(double s2) { return s2 < 1.0 ? std::exp(-1.0 / (1.0 - s2)) : 0.0; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"representation toolkit for the Lorentz cover: orbits, boosts,\n"
               "little groups, spin matrices, intertwiners and a symbolic Fock algebra"};
  app.name("relrep");
  app.require_subcommand(1);

  double tol = 1e-9;
  bool pretty = false, json_flag = false;
  app.add_option("--tol", tol, "tolerance threaded to classification and group checks")
      ->capture_default_str();
  app.add_flag("--pretty", pretty, "indented JSON output");
  app.add_flag("--json", json_flag, "compact JSON output (default)");

  std::string p_text, lambda_text, rep_text, j_text, sigma_text;

  auto* c_classify = app.add_subcommand("classify", "orbit class and standard momentum of p");
  c_classify->fallthrough();
  c_classify->add_option("--p", p_text, "four-vector t,x,y,z")->required();

  auto* c_boost = app.add_subcommand("boost", "standard boost L(p) and its covering image");
  c_boost->fallthrough();
  c_boost->add_option("--p", p_text, "four-vector t,x,y,z")->required();
  double boost_mass = 0;
  auto* boost_mass_opt = c_boost->add_option("--mass", boost_mass,
                                             "mass (default: inferred from the invariant)");

  auto* c_wigner = app.add_subcommand("wigner", "little-group element W(lambda, p)");
  c_wigner->fallthrough();
  c_wigner->add_option("--p", p_text, "four-vector t,x,y,z")->required();
  c_wigner->add_option("--lambda", lambda_text, "SL(2,C) element")->required();
  double wigner_mass = 0;
  auto* wigner_mass_opt = c_wigner->add_option("--mass", wigner_mass,
                                               "mass (default: inferred from the invariant)");

  auto* c_dmat = app.add_subcommand("dmat", "spin-j matrix D^(j)(u) of an SU(2) element");
  c_dmat->fallthrough();
  c_dmat->add_option("--j", j_text, "spin (half-integer string, e.g. 3/2)")->required();
  c_dmat->add_option("--lambda", lambda_text, "SU(2) element")->required();

  auto* c_reps = app.add_subcommand("reps", "rotation and boost generators of a representation");
  c_reps->fallthrough();
  c_reps->add_option("--rep", rep_text, "label sum, e.g. \"(1/2,0)+(0,1/2)\"")->required();

  auto* c_descent = app.add_subcommand("descent", "does the representation descend to the Lorentz group");
  c_descent->fallthrough();
  c_descent->add_option("--rep", rep_text, "label sum")->required();

  auto* c_compat = app.add_subcommand("compat", "number of irreducible parts compatible with spin j");
  c_compat->fallthrough();
  c_compat->add_option("--j", j_text, "spin")->required();
  c_compat->add_option("--rep", rep_text, "label sum")->required();

  auto* c_inter = app.add_subcommand("intertwine", "orthonormal bases of the u- and v-intertwiner spaces");
  c_inter->fallthrough();
  c_inter->add_option("--j", j_text, "spin")->required();
  c_inter->add_option("--rep", rep_text, "label sum")->required();
  std::string kind = "both";
  c_inter->add_option("--kind", kind, "which space to solve")
      ->check(CLI::IsMember({"u", "v", "both"}))
      ->capture_default_str();
  double inter_mass = 0;
  auto* inter_mass_opt = c_inter->add_option("--mass", inter_mass, "species mass for boosting");
  auto* inter_p_opt = c_inter->add_option("--p", p_text, "also boost the bases to this momentum");

  auto* c_covtest = app.add_subcommand("covtest", "covariance residual of the solved intertwiners");
  c_covtest->fallthrough();
  c_covtest->add_option("--j", j_text, "spin")->required();
  c_covtest->add_option("--rep", rep_text, "label sum")->required();
  double cov_mass = 0;
  c_covtest->add_option("--mass", cov_mass, "species mass")->required();
  c_covtest->add_option("--lambda", lambda_text, "SL(2,C) element")->required();
  c_covtest->add_option("--p", p_text, "on-shell momentum")->required();
  double cov_threshold = 1e-8;
  c_covtest->add_option("--threshold", cov_threshold, "pass/fail residual bound")
      ->capture_default_str();

  auto* c_massless = app.add_subcommand("massless", "helicity intertwiners at the standard null momentum");
  c_massless->fallthrough();
  c_massless->add_option("--rep", rep_text, "single irreducible label, e.g. \"(0,1)\"")->required();
  c_massless->add_option("--sigma", sigma_text, "helicity")->required();

  auto* c_fock = app.add_subcommand("fock", "normal-order a creation/annihilation expression");
  c_fock->fallthrough();
  std::string expr_text, stats_text = "bose", species_name = "s", spin_text = "0";
  double fock_mass = 1.0;
  c_fock->add_option("--expr", expr_text, "e.g. \"a(q1)*ad(q2) + (0,1)*ad(q3)\"")->required();
  c_fock->add_option("--stats", stats_text, "species statistics")
      ->check(CLI::IsMember({"bose", "fermi"}))
      ->capture_default_str();
  c_fock->add_option("--mass", fock_mass, "species mass (numeric modes are shell-checked)")
      ->capture_default_str();
  c_fock->add_option("--spin", spin_text, "species spin (or helicity when massless)")
      ->capture_default_str();
  c_fock->add_option("--name", species_name, "species name")->capture_default_str();

  auto* c_measure = app.add_subcommand("measure-test",
                                       "grid quadrature check that d^3p M/p0 is boost-invariant");
  c_measure->fallthrough();
  double m_mass = 1.0, m_threshold = 1e-3, m_rapidity = 0.6;
  int m_n = 80;
  std::uint64_t m_seed = 12345;
  c_measure->add_option("--mass", m_mass, "shell mass")->check(CLI::PositiveNumber)->capture_default_str();
  c_measure->add_option("--n", m_n, "grid points per axis")->check(CLI::Range(8, 400))->capture_default_str();
  c_measure->add_option("--seed", m_seed, "seed for the three random boosts")->capture_default_str();
  c_measure->add_option("--rapidity", m_rapidity, "largest boost rapidity")->capture_default_str();
  c_measure->add_option("--threshold", m_threshold, "pass/fail relative-error bound")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("relrep");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return 1;
  }

  Json result;
  std::vector<std::string> diagnostics;
  std::string command;
  int exit_code = 0;

  try {
    if (app.got_subcommand(c_classify)) {
      command = "classify";
      ShellInfo info = classify(parse_four_vector(p_text), tol);
      result["class"] = to_string(info.shell);
      result["invariant"] = info.invariant;
      result["k"] = to_json(info.standard);
    } else if (app.got_subcommand(c_boost)) {
      command = "boost";
      FourVector p = parse_four_vector(p_text);
      ShellInfo info = classify(p, tol);
      double mass = boost_mass;
      if (boost_mass_opt->count() == 0) {
        mass = info.invariant;
        if (info.shell == ShellClass::MassivePos)
          diagnostics.push_back("mass inferred from the invariant");
      }
      Matrix2 l = standard_boost(p, mass, tol);
      result["class"] = to_string(info.shell);
      result["mass"] = mass;
      result["matrix"] = to_json(Matrix(l));
      result["covering"] = real_matrix_json(covering(l));
    } else if (app.got_subcommand(c_wigner)) {
      command = "wigner";
      FourVector p = parse_four_vector(p_text);
      Matrix2 lambda = parse_lambda(lambda_text);
      ShellInfo info = classify(p, tol);
      double mass = wigner_mass_opt->count() > 0 ? wigner_mass : info.invariant;
      Matrix2 w = wigner_rotation(lambda, p, mass, tol);
      result["class"] = to_string(info.shell);
      result["matrix"] = to_json(Matrix(w));
      if (info.shell == ShellClass::MasslessPos) {
        MasslessLittleParams par = massless_params(w, tol);
        result["theta"] = par.theta;
        result["alpha"] = par.alpha;
        result["beta"] = par.beta;
      } else {
        Su2AxisAngle aa = su2_axis_angle(w, tol);
        result["s"] = aa.s;
        result["phi"] = aa.phi;
        result["axis"] = Json::array({aa.axis[0], aa.axis[1], aa.axis[2]});
      }
    } else if (app.got_subcommand(c_dmat)) {
      command = "dmat";
      HalfInt j = parse_half_int(j_text);
      Matrix d = wigner_D(j, parse_lambda(lambda_text), tol);
      result["j"] = to_string(j);
      result["dim"] = static_cast<int>(d.rows());
      result["matrix"] = to_json(d);
    } else if (app.got_subcommand(c_reps)) {
      command = "reps";
      RepSum rep = parse_rep_sum(rep_text);
      GeneratorSet g = generators_sum(rep);
      Json jj = Json::array(), kk = Json::array();
      for (int i = 0; i < 3; ++i) {
        jj.push_back(to_json(g.j[i]));
        kk.push_back(to_json(g.k[i]));
      }
      result["rep"] = to_string(rep);
      result["dim"] = g.dim();
      result["j"] = jj;
      result["k"] = kk;
    } else if (app.got_subcommand(c_descent)) {
      command = "descent";
      RepSum rep = parse_rep_sum(rep_text);
      result["rep"] = to_string(rep);
      result["class"] = to_string(descent_classification(rep));
    } else if (app.got_subcommand(c_compat)) {
      command = "compat";
      HalfInt j = parse_half_int(j_text);
      RepSum rep = parse_rep_sum(rep_text);
      result["j"] = to_string(j);
      result["rep"] = to_string(rep);
      result["multiplicity"] = compatibility(j, rep);
    } else if (app.got_subcommand(c_inter)) {
      command = "intertwine";
      HalfInt j = parse_half_int(j_text);
      RepSum rep = parse_rep_sum(rep_text);
      result["j"] = to_string(j);
      result["rep"] = to_string(rep);
      result["multiplicity"] = compatibility(j, rep);
      std::vector<CoefficientTensor> us, vs;
      if (kind != "v") us = solve_u_zero(j, rep);
      if (kind != "u") vs = solve_v_zero(j, rep);
      Json ub = Json::array(), vb = Json::array();
      for (const auto& u : us) ub.push_back(to_json(u));
      for (const auto& v : vs) vb.push_back(to_json(v));
      if (kind != "v") result["u_basis"] = ub;
      if (kind != "u") result["v_basis"] = vb;
      if (inter_p_opt->count() > 0) {
        if (inter_mass_opt->count() == 0)
          throw ParseError("intertwine --p also needs --mass for the species");
        FourVector p = parse_four_vector(p_text);
        SpeciesDescriptor species{"species", inter_mass, j, Statistics::Bose};
        FieldSpec spec{rep, species};
        Json ubp = Json::array(), vbp = Json::array();
        for (const auto& u : us) ubp.push_back(to_json(boost_coefficients(spec, u, p, tol)));
        for (const auto& v : vs) vbp.push_back(to_json(boost_coefficients(spec, v, p, tol)));
        if (kind != "v") result["u_at_p"] = ubp;
        if (kind != "u") result["v_at_p"] = vbp;
      }
    } else if (app.got_subcommand(c_covtest)) {
      command = "covtest";
      HalfInt j = parse_half_int(j_text);
      RepSum rep = parse_rep_sum(rep_text);
      Matrix2 lambda = parse_lambda(lambda_text);
      FourVector p = parse_four_vector(p_text);
      SpeciesDescriptor species{"species", cov_mass, j, Statistics::Bose};
      FieldSpec spec{rep, species};
      std::vector<CoefficientTensor> us = solve_u_zero(j, rep);
      std::vector<CoefficientTensor> vs = solve_v_zero(j, rep);
      if (us.empty()) throw NumericError("no intertwiners: compatibility(j, rep) is zero");
      double ru = 0, rv = 0;
      for (const auto& u : us) ru = std::max(ru, covariance_residual(spec, u, lambda, p, tol));
      for (const auto& v : vs) rv = std::max(rv, covariance_residual(spec, v, lambda, p, tol));
      bool pass = ru <= cov_threshold && rv <= cov_threshold;
      result["residual_u"] = ru;
      result["residual_v"] = rv;
      result["threshold"] = cov_threshold;
      result["pass"] = pass;
      if (!pass) {
        err << "covariance residual above threshold\n";
        exit_code = 2;
      }
    } else if (app.got_subcommand(c_massless)) {
      command = "massless";
      RepSum rep = parse_rep_sum(rep_text);
      if (rep.parts.size() != 1)
        throw ParseError("massless expects a single irreducible label, got '" + rep_text + "'");
      HalfInt sigma = parse_half_int(sigma_text);
      const RepLabel& label = rep.parts.front();
      auto u = solve_massless(CoefficientTensor::Kind::U, sigma, label);
      auto v = solve_massless(CoefficientTensor::Kind::V, sigma, label);
      result["rep"] = to_string(label);
      result["sigma"] = to_string(sigma);
      result["u_exists"] = u.has_value();
      result["v_exists"] = v.has_value();
      result["u"] = u ? to_json(*u) : Json();
      result["v"] = v ? to_json(*v) : Json();
    } else if (app.got_subcommand(c_fock)) {
      command = "fock";
      Statistics stats = stats_text == "fermi" ? Statistics::Fermi : Statistics::Bose;
      SpeciesDescriptor species{species_name, fock_mass, parse_half_int(spin_text), stats};
      validate(species);
      OperatorSum e = parse_operator_expression(expr_text, species);
      result["stats"] = to_string(stats);
      result["normal_form"] = to_string(e);
      result["terms"] = to_json(e);
    } else if (app.got_subcommand(c_measure)) {
      command = "measure-test";
      const double support = 4.0;
      std::mt19937_64 rng(m_seed);
      std::normal_distribution<double> gauss;
      std::uniform_real_distribution<double> uni(0.5 * m_rapidity, m_rapidity);
      std::vector<LorentzMatrix> lams;
      std::vector<double> etas;
      for (int b = 0; b < 3; ++b) {
        double nx = 0, ny = 0, nz = 0, r = 0;
        do {
          nx = gauss(rng);
          ny = gauss(rng);
          nz = gauss(rng);
          r = std::sqrt(nx * nx + ny * ny + nz * nz);
        } while (r < 0.1);
        double eta = uni(rng);
        Matrix2 dir = (nx * pauli(0) + ny * pauli(1) + nz * pauli(2)) / r;
        Matrix2 bmat = std::cosh(eta / 2) * Matrix2::Identity() + std::sinh(eta / 2) * dir;
        lams.push_back(covering(bmat));
        etas.push_back(eta);
      }
      // Grid wide enough that the boosted support never reaches the edge.
      const double pmax = std::sqrt(m_mass * m_mass + support * support);
      const double extent = std::cosh(m_rapidity) * support + std::sinh(m_rapidity) * pmax + 0.5;
      const double h = 2 * extent / m_n;
      double ref = 0;
      double boosted[3] = {0, 0, 0};
      for (int ix = 0; ix < m_n; ++ix) {
        double px = -extent + (ix + 0.5) * h;
        for (int iy = 0; iy < m_n; ++iy) {
          double py = -extent + (iy + 0.5) * h;
          for (int iz = 0; iz < m_n; ++iz) {
            double pz = -extent + (iz + 0.5) * h;
            double r2 = px * px + py * py + pz * pz;
            double p0 = std::sqrt(m_mass * m_mass + r2);
            double w = m_mass / p0;
            ref += w * bump(r2 / (support * support));
            FourVector p{p0, px, py, pz};
            for (int b = 0; b < 3; ++b) {
              FourVector q = apply(lams[b], p);
              double q2 = q.x * q.x + q.y * q.y + q.z * q.z;
              boosted[b] += w * bump(q2 / (support * support));
            }
          }
        }
      }
      const double cell = h * h * h;
      ref *= cell;
      double max_rel = 0;
      Json bj = Json::array(), ej = Json::array();
      for (int b = 0; b < 3; ++b) {
        boosted[b] *= cell;
        max_rel = std::max(max_rel, std::abs(boosted[b] - ref) / ref);
        bj.push_back(boosted[b]);
        ej.push_back(etas[b]);
      }
      bool pass = max_rel <= m_threshold;
      result["mass"] = m_mass;
      result["n"] = m_n;
      result["seed"] = m_seed;
      result["rapidities"] = ej;
      result["reference"] = ref;
      result["boosted"] = bj;
      result["max_rel_error"] = max_rel;
      result["threshold"] = m_threshold;
      result["pass"] = pass;
      if (!pass) {
        err << "quadrature drift above threshold\n";
        exit_code = 2;
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Json envelope;
  envelope["schema_version"] = "1";
  envelope["command"] = command;
  envelope["tol"] = tol;
  envelope["result"] = result;
  envelope["diagnostics"] = diagnostics;
  dump_json(envelope, out, pretty);
  out << "\n";
  return exit_code;
}

}  // namespace relrep::cli

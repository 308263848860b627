#include "homequiv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "homequiv/certificate.hpp"
#include "homequiv/equivalence.hpp"
#include "homequiv/errors.hpp"
#include "homequiv/milnor.hpp"
#include "homequiv/orbit.hpp"
#include "homequiv/pencil.hpp"
#include "homequiv/text.hpp"
#include "homequiv/witness.hpp"

namespace homequiv::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string vars;
  bool json = false;
  bool timing = false;
  std::string certificate_path;
  std::string output_path;
  double tol = 1e-6;
  std::size_t max_steps = 1U << 16U;
  unsigned max_degree = 0;
  bool max_degree_set = false;
  bool witness = false;
  bool conclude = false;
  std::vector<std::string> positional;
};

// Exit code carried alongside a finished report.
struct Outcome {
  Json result;
  int code = kSuccess;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "@file" reads the polynomial from a file.
std::string input_text(const std::string& arg) { return !arg.empty() && arg.front() == '@' ? read_file(arg.substr(1)) : arg; }

std::vector<std::string> resolve_vars(const Options& opt, const std::vector<std::string>& texts) {
  if (!opt.vars.empty()) return split_vars(opt.vars);
  std::vector<std::string> vars;
  for (const auto& t : texts)
    for (auto& name : collect_identifiers(t))
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(std::move(name));
  std::sort(vars.begin(), vars.end());
  return vars;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

Json float_matrix(const FloatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      row.push_back("(" + format_double(m(r, c).real()) + "," + format_double(m(r, c).imag()) + ")");
    }
    rows.push_back(row);
  }
  return rows;
}

Json certificate_json(const EquivalenceCertificate& cert, const std::vector<std::string>& vars) {
  Json out = Json::object();
  for (const auto& [key, value] : certificate_fields(cert, vars)) {
    if (key == "format" || key == "vars" || key == "n" || key == "d" || key == "f") continue;
    if (key == "exceptional_coefficients" || key == "waypoints" || key == "segment_root_counts") {
      Json arr = Json::array();
      std::istringstream in(value);
      for (std::string tok; in >> tok;) {
        if (key == "segment_root_counts") {
          arr.push_back(std::stoul(tok));
        } else {
          arr.push_back(tok);
        }
      }
      out[key] = arr;
    } else if (key == "m" || key == "generic_rank") {
      out[key] = std::stoul(value);
    } else if (key == "condition_a" || key == "condition_b") {
      out[key] = value == "true";
    } else {
      out[key] = value;
    }
  }
  return out;
}

void write_certificate_file(const std::string& path, const EquivalenceCertificate& cert,
                            const std::vector<std::string>& vars) {
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  write_certificate(file, cert, vars);
}

Json witness_json(const WitnessResult& w) {
  Json out = Json::object();
  out["residual"] = w.residual;
  out["steps"] = w.steps;
  out["condition"] = w.u.condition();
  out["u"] = float_matrix(w.u);
  out["u_inverse"] = float_matrix(w.u.inverse());
  return out;
}

Outcome cmd_milnor(const Options& opt, const std::vector<std::string>& vars, const HomPoly& f) {
  Outcome o;
  o.result["n"] = f.nvars();
  o.result["d"] = f.degree();
  const MilnorSummary s = milnor_summary(f);
  o.result["hilbert"] = opt.max_degree_set ? hilbert_series(f, opt.max_degree) : s.hilbert;
  o.result["artinian"] = s.artinian;
  o.result["milnor"] = s.milnor_number ? std::to_string(*s.milnor_number) : "infinite";
  o.result["degenerate_linear"] = s.degenerate_linear;
  (void)vars;
  return o;
}

Outcome cmd_jac_equal(const HomPoly& f, const HomPoly& g) {
  Outcome o;
  const JacobianComparison c = compare_jacobians(f, g);
  o.result["comparison"] = to_string(c);
  o.result["equal"] = c == JacobianComparison::equal;
  o.code = c == JacobianComparison::equal ? kSuccess : kNegative;
  return o;
}

Outcome cmd_tangent_dim(const HomPoly& f) {
  Outcome o;
  const OrbitTangent t = tangent_space(f);
  const Subspace piece = ideal_piece(jacobian(f), f.degree());
  o.result["n"] = f.nvars();
  o.result["d"] = f.degree();
  o.result["tangent_dim"] = t.dim();
  o.result["ideal_piece_dim"] = piece.dim();
  o.result["equal_to_ideal_piece"] = piece == t.span;
  o.result["euler_membership"] = t.span.contains(f.coordinates());
  return o;
}

Outcome cmd_decide(const Options& opt, const std::vector<std::string>& vars, const HomPoly& f, const HomPoly& g) {
  Outcome o;
  const EquivalenceCertificate cert = decide_right_equivalent(f, g);
  o.result = certificate_json(cert, vars);
  if (!opt.certificate_path.empty()) write_certificate_file(opt.certificate_path, cert, vars);
  if (cert.verdict != Verdict::equivalent) {
    o.code = kNegative;
    return o;
  }
  if (opt.witness) o.result["witness"] = witness_json(find_witness(f, g, cert, opt.tol, opt.max_steps));
  return o;
}

Outcome cmd_verify_iso(const Options& opt, const std::vector<std::string>& vars, const HomPoly& f, const HomPoly& g,
                       const std::string& matrix_path) {
  Outcome o;
  std::istringstream matrix_text(read_file(matrix_path));
  const IsoCandidate cand(read_linear_map(matrix_text));
  if (f.degree() != g.degree()) throw DimensionError("f and g have different degrees");

  if (f.degree() <= 2) {
    const Verdict v = special_low_degree(f, g);
    o.result["route"] = "low-degree";
    o.result["verdict"] = to_string(v);
    o.code = v == Verdict::equivalent ? kSuccess : kNegative;
    return o;
  }
  const bool iso = verify_iso(f, g, cand);
  o.result["route"] = "jacobian-pullback";
  o.result["iso"] = iso;
  if (!iso) {
    o.code = kNegative;
    return o;
  }
  if (opt.conclude || !opt.certificate_path.empty()) {
    const EquivalenceCertificate cert = conclude_equivalence(f, g, cand);
    o.result["conclusion"] = certificate_json(cert, vars);
    if (!opt.certificate_path.empty()) write_certificate_file(opt.certificate_path, cert, vars);
  }
  return o;
}

Outcome cmd_witness(const Options& opt, const HomPoly& f, const HomPoly& g) {
  Outcome o;
  const EquivalenceCertificate cert = decide_right_equivalent(f, g);
  o.result["verdict"] = to_string(cert.verdict);
  if (cert.verdict != Verdict::equivalent) {
    o.code = kNegative;
    return o;
  }
  const WitnessResult w = find_witness(f, g, cert, opt.tol, opt.max_steps);
  o.result["witness"] = witness_json(w);
  if (!opt.output_path.empty()) {
    std::ofstream file(opt.output_path);
    if (!file) throw Error("cannot write '" + opt.output_path + "'");
    write_witness(file, w);
  }
  return o;
}

Outcome cmd_verify_witness(const Options& opt, const HomPoly& f, const HomPoly& g, const std::string& path) {
  Outcome o;
  std::istringstream text(read_file(path));
  const LoadedWitness w = read_witness(text);
  const double residual = verify_witness(f, g, w.u);
  o.result["residual"] = residual;
  o.result["recorded_residual"] = w.residual;
  o.result["tol"] = opt.tol;
  o.result["within_tol"] = residual <= opt.tol;
  o.code = residual <= opt.tol ? kSuccess : kNegative;
  return o;
}

void render_text(std::ostream& out, const Json& value, const std::string& key);

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

void render_text(std::ostream& out, const Json& value, const std::string& key) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) render_text(out, v, key.empty() ? k : key + "." + k);
    return;
  }
  out << key << ':';
  if (value.is_array()) {
    const bool nested = !value.empty() && value.front().is_array();
    for (std::size_t r = 0; r < value.size(); ++r) {
      if (nested) {
        out << (r ? " ;" : "");
        for (const auto& e : value[r]) out << ' ' << scalar_text(e);
      } else {
        out << ' ' << scalar_text(value[r]);
      }
    }
  } else {
    out << ' ' << scalar_text(value);
  }
  out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-equivalence of homogeneous polynomials via Jacobian ideals", "homequiv"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--vars", opt.vars, "Comma-separated variable names (default: identifiers found, sorted)");
    sub->add_flag("--json", opt.json, "Emit the report as JSON");
    sub->add_flag("--timing", opt.timing, "Include wall-clock time in the report");
  };
  auto* milnor = app.add_subcommand("milnor", "Hilbert function, Artinian flag and Milnor number of M(f)");
  milnor->add_option("f", opt.positional, "Polynomial text or @file")->required()->expected(1);
  milnor->add_option("--max-degree", opt.max_degree, "Tabulate the Hilbert function up to this degree")
      ->each([&](const std::string&) { opt.max_degree_set = true; });

  auto* jac = app.add_subcommand("jac-equal", "Compare the Jacobian ideals of f and g");
  jac->add_option("polys", opt.positional, "f g")->required()->expected(2);

  auto* tangent = app.add_subcommand("tangent-dim", "Dimension of the GL(n) orbit tangent at f");
  tangent->add_option("f", opt.positional, "Polynomial text or @file")->required()->expected(1);

  auto* decide = app.add_subcommand("decide", "Decide right-equivalence when J_f = J_g");
  decide->add_option("polys", opt.positional, "f g")->required()->expected(2);
  decide->add_option("--certificate", opt.certificate_path, "Write the certificate document here");
  decide->add_flag("--witness", opt.witness, "Also integrate a numeric GL(n) witness");

  auto* iso = app.add_subcommand("verify-iso", "Check that a linear substitution carries J_g onto J_f");
  iso->add_option("args", opt.positional, "f g matrix-file")->required()->expected(3);
  iso->add_flag("--conclude", opt.conclude, "Run the pencil between f and g o u");
  iso->add_option("--certificate", opt.certificate_path, "Write the conclusion certificate here (implies --conclude)");

  auto* witness = app.add_subcommand("witness", "Numeric u in GL(n) with g o u ~ f");
  witness->add_option("polys", opt.positional, "f g")->required()->expected(2);
  witness->add_option("--output", opt.output_path, "Write the witness block here");

  auto* verify = app.add_subcommand("verify-witness", "Residual of a stored witness");
  verify->add_option("args", opt.positional, "f g witness-file")->required()->expected(3);

  for (auto* sub : {milnor, jac, tangent, decide, iso, witness, verify}) common(sub);
  for (auto* sub : {decide, witness, verify}) {
    sub->add_option("--tol", opt.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  }
  for (auto* sub : {decide, witness}) sub->add_option("--max-steps", opt.max_steps, "Step budget for integration");

  try {
    // A leading space keeps CLI11 from reading "-x^3-y^3" as a short-option cluster.
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
      const bool negative_poly = it->size() > 1 && (*it)[0] == '-' && (*it)[1] != '-' && *it != "-h";
      reversed.push_back(negative_poly ? " " + *it : *it);
    }
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParse;
  }

  const auto started = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    const std::size_t poly_count = command == "milnor" || command == "tangent-dim" ? 1 : 2;
    std::vector<std::string> texts;
    for (std::size_t k = 0; k < poly_count; ++k) texts.push_back(input_text(opt.positional[k]));
    const std::vector<std::string> vars = resolve_vars(opt, texts);
    std::vector<HomPoly> polys;
    for (const auto& t : texts) polys.push_back(parse_poly(t, vars));

    Json report = Json::object();
    report["command"] = command;
    Json inputs = Json::object();
    inputs["vars"] = vars;
    inputs["f"] = to_string(polys[0], vars);
    if (poly_count == 2) inputs["g"] = to_string(polys[1], vars);
    report["inputs"] = inputs;

    Outcome o;
    if (command == "milnor") {
      o = cmd_milnor(opt, vars, polys[0]);
    } else if (command == "jac-equal") {
      o = cmd_jac_equal(polys[0], polys[1]);
    } else if (command == "tangent-dim") {
      o = cmd_tangent_dim(polys[0]);
    } else if (command == "decide") {
      o = cmd_decide(opt, vars, polys[0], polys[1]);
    } else if (command == "verify-iso") {
      o = cmd_verify_iso(opt, vars, polys[0], polys[1], opt.positional[2]);
    } else if (command == "witness") {
      o = cmd_witness(opt, polys[0], polys[1]);
    } else {
      o = cmd_verify_witness(opt, polys[0], polys[1], opt.positional[2]);
    }
    report["result"] = o.result;
    if (opt.timing) {
      report["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    report["version"] = kVersion;

    if (opt.json) {
      out << report.dump(2) << '\n';
    } else {
      render_text(out, report, "");
    }
    return o.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const SingularMatrixError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidCertificate;
  } catch (const InternalError& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSemantic;
  }
}

}  // namespace homequiv::cli

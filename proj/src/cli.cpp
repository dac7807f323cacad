#include "liecoh/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "liecoh/catalog.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/json_io.hpp"
#include "liecoh/report.hpp"
#include "liecoh/weights.hpp"

namespace liecoh::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

LieAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

OneForm parse_form(const std::string& csv, const LieAlgebra& g, const std::string& option) {
  Vector coeffs;
  try {
    coeffs = parse_rational_list(csv);
  } catch (const ParseError& e) {
    throw ParseError(option, e.what());
  }
  if (coeffs.size() != g.dim()) {
    throw ParseError(option, "expected " + std::to_string(g.dim()) + " coefficients, got " +
                                 std::to_string(coeffs.size()));
  }
  return OneForm(std::move(coeffs));
}

std::string betti_string(const std::vector<std::size_t>& b) {
  std::string s = "[";
  for (std::size_t p = 0; p < b.size(); ++p) s += (p ? ", " : "") + std::to_string(b[p]);
  return s + "]";
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// --- subcommands -----------------------------------------------------------

int cmd_validate(const std::string& path, std::ostream& out) {
  const StructureTable table = parse_structure_table(read_file(path));
  const ValidationReport report = validate_lie_algebra(table);
  if (!report.ok()) {
    out << "INVALID: Jacobi identity fails\n";
    for (const auto& d : report.defects) {
      out << "  triple (" << d.i + 1 << "," << d.j + 1 << "," << d.k + 1
          << "): defect " << to_string(ExteriorForm::from_one_form(OneForm(d.defect))) << "\n";
    }
    return kInputFailure;
  }
  const LieAlgebra g = LieAlgebra::create(table);
  out << "OK\n";
  out << "dim: " << g.dim() << "\n";
  out << "class: " << to_string(classify(g)) << "\n";
  out << "unimodular: " << (is_unimodular(g) ? "true" : "false") << "\n";
  out << "b1: " << closed_one_forms(g).dim() << "\n";
  return kOk;
}

int cmd_cohomology(const std::string& path, const std::string& omega_csv, bool reps, bool json,
                   std::ostream& out) {
  const LieAlgebra g = load_algebra(path);
  const OneForm w = parse_form(omega_csv, g, "--omega");
  const CohomologyResult r = compute_cohomology(g, w);
  if (json) {
    print_json(out, cohomology_to_json(r, reps));
    return kOk;
  }
  out << "omega: " << to_string(w) << "\n";
  out << "betti: " << betti_string(r.betti) << "\n";
  out << "euler characteristic: " << euler_characteristic(r) << "\n";
  if (reps) {
    for (std::size_t p = 0; p < r.representatives.size(); ++p) {
      for (const auto& f : r.representatives[p]) out << "H^" << p << ": " << to_string(f) << "\n";
    }
  }
  return kOk;
}

int cmd_weights(const std::string& path, bool json, std::ostream& out) {
  const LieAlgebra g = load_algebra(path);
  const WeightData w = adapted_basis(g);
  if (json) {
    print_json(out, weights_to_json(w));
    return kOk;
  }
  out << "closed block k: " << w.closed_block << "\n";
  out << "adapted basis (columns in e_1..e_n):\n";
  for (std::size_t c = 0; c < w.adapted_change.cols(); ++c) {
    std::string v;
    for (std::size_t r = 0; r < w.adapted_change.rows(); ++r) {
      v += (r ? ", " : "") + w.adapted_change(r, c).get_str();
    }
    out << "  f" << c + 1 << " = (" << v << ")\n";
  }
  out << "weights:\n";
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    out << "  alpha" << i + 1 << " = " << to_string(w.weights[i]) << "\n";
  }
  out << "weight sum zero: " << (weight_sum_check(w) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_omega_set(const std::string& path, bool json, std::ostream& out) {
  const LieAlgebra g = load_algebra(path);
  const OmegaSet s = omega_set(adapted_basis(g));
  if (json) {
    print_json(out, omega_set_to_json(s));
    return kOk;
  }
  for (const auto& f : s.elements) out << to_string(f) << "\n";
  return kOk;
}

int cmd_scan(const std::string& path, const std::string& direction_csv, bool json, std::ostream& out) {
  const LieAlgebra g = load_algebra(path);
  const ScanTable t = scan_line(g, parse_form(direction_csv, g, "--direction"));
  if (json) {
    print_json(out, scan_to_json(t));
    return kOk;
  }
  out << "direction: " << to_string(t.direction) << "\n";
  for (const auto& row : t.rows) {
    out << (row.generic ? "generic  " : "critical ") << "lambda = " << std::left << std::setw(8)
        << row.lambda.get_str() << " betti = " << betti_string(row.betti) << "\n";
  }
  out << "generic lambda = 1 + max |critical lambda|, outside the critical set\n";
  return kOk;
}

int cmd_novikov(const std::string& path, const std::string& omega_csv, const std::string& lambda_text,
                const std::string& morse_csv, bool json, std::ostream& out) {
  const LieAlgebra g = load_algebra(path);
  const OneForm w = parse_form(omega_csv, g, "--omega");
  Rational lambda;
  try {
    lambda = parse_rational(lambda_text);
  } catch (const ParseError& e) {
    throw ParseError("--lambda", e.what());
  }
  std::vector<std::size_t> morse;
  for (const Rational& q : parse_rational_list(morse_csv)) {
    if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p()) {
      throw ParseError("--morse", "counts must be nonnegative integers");
    }
    morse.push_back(q.get_num().get_ui());
  }
  const NovikovReport r = novikov_report(g, w, lambda, morse);
  if (json) {
    print_json(out, novikov_to_json(r));
    return kOk;
  }
  out << "omega: " << to_string(w) << ", lambda: " << lambda.get_str() << "\n";
  out << "p  m_p  b_p  verdict\n";
  for (std::size_t p = 0; p < r.betti.size(); ++p) {
    out << std::left << std::setw(3) << p << std::setw(5) << r.morse_counts[p] << std::setw(5)
        << r.betti[p] << (r.verdicts[p] == Verdict::holds ? "holds" : "violated") << "\n";
  }
  out << "overall: " << (r.all_hold() ? "holds" : "violated") << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  return kOk;
}

int cmd_example(const std::string& name, const std::vector<std::string>& params, const std::string& emit,
                std::ostream& out) {
  Parameters parsed;
  for (const auto& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw ParseError("--param", "expected key=value, got '" + p + "'");
    try {
      parsed[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError("--param", e.what());
    }
  }
  const CatalogEntry entry = load_example(name, parsed);
  Json doc = algebra_to_json(entry.algebra);
  doc["name"] = entry.name;
  doc["provenance"] = entry.provenance;
  const std::string text = doc.dump(2) + "\n";
  if (emit.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(emit, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw IoError("cannot write '" + emit + "'");
  out << "wrote " << emit << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of Lie algebras with the deformed differential d + omega^"};
  app.require_subcommand(1);

  std::string file, omega, direction, lambda, morse, name, emit;
  std::vector<std::string> params;
  bool reps = false, json = false;

  auto* validate = app.add_subcommand("validate", "check the Jacobi identity");
  validate->add_option("file", file, "algebra JSON")->required();

  auto* cohomology = app.add_subcommand("cohomology", "Betti numbers of H^*_omega(g)");
  cohomology->add_option("file", file, "algebra JSON")->required();
  cohomology->add_option("--omega", omega, "closed 1-form, e.g. 1,0,0")->required();
  cohomology->add_flag("--reps", reps, "print representative cocycles");
  cohomology->add_flag("--json", json, "machine-readable output");

  auto* weights = app.add_subcommand("weights", "adapted basis and adjoint weights");
  weights->add_option("file", file, "algebra JSON")->required();
  weights->add_flag("--json", json, "machine-readable output");

  auto* omega_cmd = app.add_subcommand("omega-set", "subset sums of the weights");
  omega_cmd->add_option("file", file, "algebra JSON")->required();
  omega_cmd->add_flag("--json", json, "machine-readable output");

  auto* scan = app.add_subcommand("scan", "cohomology along lambda * direction");
  scan->add_option("file", file, "algebra JSON")->required();
  scan->add_option("--direction", direction, "closed 1-form")->required();
  scan->add_flag("--json", json, "machine-readable output");

  auto* novikov = app.add_subcommand("novikov", "compare Morse counts with b_p(lambda, omega)");
  novikov->add_option("file", file, "algebra JSON")->required();
  novikov->add_option("--omega", omega, "closed 1-form")->required();
  novikov->add_option("--lambda", lambda, "rational scale")->required();
  novikov->add_option("--morse", morse, "m_0,...,m_n")->required();
  novikov->add_flag("--json", json, "machine-readable output");

  auto* example = app.add_subcommand("example", "emit a built-in algebra as JSON");
  example->add_option("name", name, "abelian | heisenberg3 | sol3 | euclid3")->required();
  example->add_option("--param", params, "k=<q> or n=<int>");
  example->add_option("--emit", emit, "write to this file instead of stdout");

  std::vector<const char*> argv{"liecoh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputFailure;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, out);
    if (cohomology->parsed()) return cmd_cohomology(file, omega, reps, json, out);
    if (weights->parsed()) return cmd_weights(file, json, out);
    if (omega_cmd->parsed()) return cmd_omega_set(file, json, out);
    if (scan->parsed()) return cmd_scan(file, direction, json, out);
    if (novikov->parsed()) return cmd_novikov(file, omega, lambda, morse, json, out);
    if (example->parsed()) return cmd_example(name, params, emit, out);
  } catch (const JacobiError& e) {
    err << "error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const NotRationallyTriangularizable& e) {
    err << "error: not rationally triangularizable: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  }
  return kInputFailure;
}

}  // namespace liecoh::cli

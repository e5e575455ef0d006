// algkit: validates algebroid definition files and runs the lift / deform /
// torsion / pn-check / bialgebroid-check verifiers over exact arithmetic.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 JSON parse error,
// 3 semantic error in the definition or the command line.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "algkit/calculus.hpp"
#include "algkit/definition.hpp"
#include "algkit/lifts.hpp"
#include "algkit/pn.hpp"
#include "algkit/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitSemanticError = 3;

struct Options {
  std::string file;
  std::string tensor;
  std::string endo;
  bool json = false;
  std::string output;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw algkit::SemanticError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const algkit::FiberMultivector& named_multivector(const algkit::ParsedDefinition& def,
                                                  const std::string& name) {
  auto it = def.multivectors.find(name);
  if (it == def.multivectors.end()) {
    if (def.endomorphisms.count(name))
      throw algkit::SemanticError("tensors." + name,
                                  "kind mismatch: endomorphism where multivector expected");
    throw algkit::SemanticError("tensors." + name, "unknown tensor name");
  }
  return it->second;
}

const algkit::EndoTensor& named_endo(const algkit::ParsedDefinition& def,
                                     const std::string& name) {
  auto it = def.endomorphisms.find(name);
  if (it == def.endomorphisms.end()) {
    if (def.multivectors.count(name))
      throw algkit::SemanticError("tensors." + name,
                                  "kind mismatch: multivector where endomorphism expected");
    throw algkit::SemanticError("tensors." + name, "unknown tensor name");
  }
  return it->second;
}

void run_validate(const algkit::ParsedDefinition& def, algkit::Report& report) {
  algkit::ValidationReport v = algkit::validate(def.algebroid);
  report.checks = v.checks;
  algkit::LieCheck lie = algkit::is_lie(def.algebroid);
  algkit::CheckReport row{"jacobi", lie.is_lie, std::nullopt, "Jacobi identity on basis triples"};
  if (!lie.is_lie) {
    if (lie.witness_triple) {
      const auto& t = *lie.witness_triple;
      row.witness = "(e" + std::to_string(t[0]) + ",e" + std::to_string(t[1]) + ",e" +
                    std::to_string(t[2]) + "): jacobiator = " + lie.witness_value->to_string();
    } else {
      row.notes = "not a pre-Lie structure";
    }
  }
  report.checks.push_back(std::move(row));
}

void run_lift(const algkit::ParsedDefinition& def, const Options& opt, algkit::Report& report,
              std::string& value_out) {
  const algkit::FiberMultivector& T = named_multivector(def, opt.tensor);
  algkit::SpaceMultivector lifted = algkit::complete_lift(def.algebroid, T);
  value_out = lifted.to_string();
  report.checks.push_back({"lift(" + opt.tensor + ")", true, value_out,
                           "complete lift d_T on E"});
  algkit::CheckReport linear{"lift_linearity", algkit::fiber_degree_at_most(lifted, 1),
                             std::nullopt, "lifted field is linear"};
  if (!linear.pass) linear.witness = value_out;
  report.checks.push_back(std::move(linear));
}

void run_deform(const algkit::ParsedDefinition& def, const Options& opt, algkit::Report& report,
                std::string& value_out) {
  const algkit::EndoTensor& N = named_endo(def, opt.endo);
  const algkit::Algebroid& A = def.algebroid;
  algkit::SpaceMultivector route1 = algkit::lambda_n_lie(A, N);
  algkit::SpaceMultivector route2 = algkit::lambda_n_local(A, N);
  value_out = route1.to_string();
  report.checks.push_back({"lambda_n", true, value_out, "Λ_N = £_{J(N)}Λ"});
  algkit::CheckReport agree{"lambda_n_routes_agree", route1 == route2, std::nullopt,
                            "Lie-derivative route equals the local formula"};
  if (!agree.pass)
    agree.witness = "lie route = " + route1.to_string() + " vs local = " + route2.to_string();
  report.checks.push_back(std::move(agree));

  algkit::Algebroid deformed = algkit::deformed_algebroid(A, N);
  std::ostringstream brackets;
  bool first = true;
  for (int i = 1; i <= deformed.rank(); ++i)
    for (int j = i + 1; j <= deformed.rank(); ++j) {
      algkit::Section out =
          algkit::bracket_sections(deformed, algkit::Section::basis(deformed, i),
                                   algkit::Section::basis(deformed, j));
      if (out.is_zero()) continue;
      if (!first) brackets << "; ";
      brackets << "[e" << i << ",e" << j << "] = " << out.to_string();
      first = false;
    }
  report.checks.push_back({"deformed_brackets", true,
                           first ? std::string("0") : brackets.str(),
                           "structure constants of the deformed bracket"});
}

void run_torsion(const algkit::ParsedDefinition& def, const Options& opt,
                 algkit::Report& report, std::string& value_out) {
  const algkit::EndoTensor& N = named_endo(def, opt.endo);
  algkit::VectorTwoForm torsion = algkit::nijenhuis_torsion(def.algebroid, N);
  value_out = torsion.to_string();
  algkit::CheckReport row{"torsion_vanishes", torsion.is_zero(), std::nullopt,
                          "T^Λ_N(X,Y) = N[X,Y]_N − [NX,NY]"};
  if (!row.pass) row.witness = value_out;
  report.checks.push_back(std::move(row));
  report.checks.push_back(algkit::is_nijenhuis(def.algebroid, N));
}

void run_pn_check(const algkit::ParsedDefinition& def, const Options& opt,
                  algkit::Report& report) {
  const algkit::FiberMultivector& P = named_multivector(def, opt.tensor);
  const algkit::EndoTensor& N = named_endo(def, opt.endo);
  for (auto& row : algkit::check_pn(def.algebroid, P, N)) report.checks.push_back(std::move(row));
  for (auto& row : algkit::diagram_report(def.algebroid, P, N))
    report.checks.push_back(std::move(row));
}

void run_bialgebroid(const algkit::ParsedDefinition& def, const Options& opt,
                     algkit::Report& report) {
  const algkit::FiberMultivector& P = named_multivector(def, opt.tensor);
  for (auto& row : algkit::bialgebroid_suite(def.algebroid, P))
    report.checks.push_back(std::move(row));
}

void emit(const algkit::Report& report, const Options& opt, const std::string& value_out) {
  const char* color_env = std::getenv("ALGKIT_COLOR");
  const bool color = !(color_env && std::string(color_env) == "0");
  std::string text;
  if (opt.json) {
    text = algkit::render_report_json(report);
  } else if (!value_out.empty()) {
    text = value_out + "\n";
  } else {
    text = algkit::render_report_text(report, color);
  }
  if (!opt.output.empty()) {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw algkit::SemanticError(opt.output, "cannot open output file");
    out << text;
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for Lie algebroid definition files"};
  app.require_subcommand(1);

  Options opt;
  std::string command;
  auto add_common = [&](CLI::App* sub, bool tensor, bool endo) {
    sub->add_option("file", opt.file, "definition file (JSON)")->required();
    if (tensor) sub->add_option("--tensor", opt.tensor, "named multivector")->required();
    if (endo) sub->add_option("--endo", opt.endo, "named endomorphism")->required();
    sub->add_flag("--json", opt.json, "emit the JSON report");
    sub->add_option("--output", opt.output, "write the report to a file");
    sub->callback([&command, sub]() { command = sub->get_name(); });
  };
  add_common(app.add_subcommand("validate", "check the algebroid axioms and Jacobi"), false,
             false);
  add_common(app.add_subcommand("lift", "print the complete lift of a tensor"), true, false);
  add_common(app.add_subcommand("deform", "print Λ_N and the deformed structure"), false, true);
  add_common(app.add_subcommand("torsion", "print the Nijenhuis torsion of N"), false, true);
  auto* pn = app.add_subcommand("pn-check", "full Poisson-Nijenhuis + diagram report");
  add_common(pn, true, true);
  add_common(app.add_subcommand("bialgebroid-check", "Fp22/Fp23/Fp24 suite for P"), true, false);

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string input = slurp(opt.file);
    algkit::ParsedDefinition def = [&]() {
      try {
        return algkit::parse_definition(input);
      } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        std::exit(kExitParseError);
      }
    }();

    algkit::Report report;
    report.command = command + " " + (def.name.empty() ? opt.file : def.name);
    report.input_digest = algkit::fnv1a_hex(input);

    std::string value_out;
    if (command == "validate") {
      run_validate(def, report);
      value_out.clear();
    } else if (command == "lift") {
      run_lift(def, opt, report, value_out);
    } else if (command == "deform") {
      run_deform(def, opt, report, value_out);
    } else if (command == "torsion") {
      run_torsion(def, opt, report, value_out);
    } else if (command == "pn-check") {
      run_pn_check(def, opt, report);
    } else if (command == "bialgebroid-check") {
      run_bialgebroid(def, opt, report);
    }

    emit(report, opt, opt.json ? std::string() : value_out);
    return report.all_pass() ? kExitPass : kExitCheckFailed;
  } catch (const algkit::SemanticError& e) {
    std::cerr << "semantic error: " << e.what() << "\n";
    return kExitSemanticError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemanticError;
  }
}

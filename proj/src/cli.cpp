// Copyright 2026 The conebound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "conebound/cli.hpp"

#include <cstdint>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "conebound/compressor.hpp"
#include "conebound/instance_gen.hpp"
#include "conebound/io.hpp"
#include "conebound/trace_text.hpp"
#include "conebound/verifier.hpp"
#include "json.hpp"

namespace conebound {

namespace {

using Json = nlohmann::ordered_json;

class MissingHidden : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int report_error(std::ostream& err, int exit_code, const char* code, const std::string& message,
                 Json extra = Json::object()) {
  Json e;
  e["code"] = code;
  e["exit"] = exit_code;
  e["message"] = message;
  for (auto& [k, v] : extra.items()) e[k] = v;
  err << Json{{"error", std::move(e)}}.dump() << "\n";
  return exit_code;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

Json verdict_json(const Verdict& v) {
  Json o;
  o["ok"] = v.ok;
  if (v.certificate) {
    Json c = Json::array();
    for (const BigInt& e : v.certificate->coeffs) c.push_back(to_decimal(e));
    o["certificate"] = std::move(c);
  }
  if (v.index) o["index"] = *v.index;
  return o;
}

BigInt positive_decimal(const std::string& text, const char* flag) {
  BigInt v;
  try {
    v = parse_decimal(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + " expects a decimal integer");
  }
  if (v < 1) throw UsageError(std::string(flag) + " must be at least 1");
  return v;
}

struct Options {
  std::string input;
  std::string solution;
  std::string out;
  std::string mode = "all";
  std::uint64_t budget = 0;
  std::size_t n = 0;
  std::string d = "1";
  std::uint64_t gen_d = 1;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string scale = "1000000";
  std::uint64_t max_entry = 30;
  std::uint64_t retry_cap = 10'000;
};

int cmd_compress(const Options& o, std::ostream& out) {
  const InstanceFile f = load_instance(read_text_file(o.input));
  const CompressOutput result = compress(f.problem, o.budget);
  emit(out, o.out, emit_result(make_result(result)));
  return kExitOk;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const InstanceFile f = load_instance(read_text_file(o.input));
  out << narrate(compress(f.problem, o.budget));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const InstanceFile f = load_instance(read_text_file(o.input));
  const std::vector<BigInt> x = parse_solution(read_text_file(o.solution));
  if (x.size() != f.problem.n) {
    throw ValidationError(ValidationFailure::kLengthMismatch,
                          "solution has " + std::to_string(x.size()) + " entries, expected " +
                              std::to_string(f.problem.n));
  }
  const bool all = o.mode == "all";
  if ((all || o.mode == "matrix") && !f.hidden) {
    throw MissingHidden("mode '" + o.mode + "' needs the instance's hidden section");
  }

  Json verdicts = Json::object();
  bool ok = true;
  const auto record = [&](const char* name, const Verdict& v) {
    verdicts[name] = verdict_json(v);
    ok = ok && v.ok;
  };
  if (all || o.mode == "lambda") {
    record("lambda", lambda_membership(x, f.problem.y, f.problem.d, o.budget));
  }
  if (all || o.mode == "matrix") record("matrix", matrix_check(f.hidden->matrix, x, f.problem.d));
  if (all || o.mode == "bound") record("bound", bound_check(x, f.problem.n, f.problem.d));

  Json report{{"ok", ok}, {"verdicts", verdicts}};
  out << report.dump(2) << "\n";
  if (!ok) {
    return report_error(err, kExitVerificationFailed, "verification_failed",
                        "solution failed verification", Json{{"verdicts", verdicts}});
  }
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.gen_d < 1) throw UsageError("--d must be at least 1");
  GeneratorOptions g;
  g.n = o.n;
  g.d = o.gen_d;
  g.m = o.m == 0 ? o.n : o.m;
  g.seed = o.seed;
  g.scale = positive_decimal(o.scale, "--scale");
  g.max_entry = o.max_entry;
  g.retry_cap = o.retry_cap;
  if (g.max_entry < 1 || g.retry_cap < 1) {
    throw UsageError("--max-entry and --retry-cap must be at least 1");
  }
  emit(out, o.out, emit_instance(to_instance_file(generate(g))));
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  const Ratio b = bound_value(o.n, positive_decimal(o.d, "--d"));
  out << b.str() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compress an integer witness vector into one with small entries",
               "conebound"};
  app.require_subcommand(1);
  Options o;

  auto* compress_cmd = app.add_subcommand("compress", "Compress the witness of an instance file");
  compress_cmd->add_option("input", o.input, "Instance file")->required();
  compress_cmd->add_option("--out", o.out, "Result file (default: stdout)");
  compress_cmd->add_option("--budget", o.budget, "Max coefficient vectors per bound scan")
      ->default_val(kDefaultCompressBudget);

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("input", o.input, "Instance file")->required();
  verify_cmd->add_option("solution", o.solution, "File with an \"x\" array")->required();
  verify_cmd->add_option("--mode", o.mode, "lambda, matrix, bound or all")
      ->check(CLI::IsMember({"lambda", "matrix", "bound", "all"}));
  verify_cmd->add_option("--budget", o.budget, "Max coefficient vectors for the lambda scan")
      ->default_val(kDefaultVerifyBudget);

  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded instance with a hidden matrix");
  generate_cmd->add_option("--n", o.n, "Dimension")->required();
  generate_cmd->add_option("--d", o.gen_d, "Coefficient cap")->required();
  generate_cmd->add_option("--m", o.m, "Hidden rows (default: n)");
  generate_cmd->add_option("--seed", o.seed, "mt19937_64 seed");
  generate_cmd->add_option("--scale", o.scale, "Witness multiplier (decimal)");
  generate_cmd->add_option("--max-entry", o.max_entry, "Cap on planted entries");
  generate_cmd->add_option("--retry-cap", o.retry_cap, "Draws allowed per hidden row");
  generate_cmd->add_option("--out", o.out, "Instance file (default: stdout)");

  auto* bound_cmd = app.add_subcommand("bound", "Print the bound on the largest entry");
  bound_cmd->add_option("--n", o.n, "Dimension")->required();
  bound_cmd->add_option("--d", o.d, "Coefficient cap (decimal)")->required();

  auto* trace_cmd = app.add_subcommand("trace", "Narrate the construction step by step");
  trace_cmd->add_option("input", o.input, "Instance file")->required();
  trace_cmd->add_option("--budget", o.budget, "Max coefficient vectors per bound scan")
      ->default_val(kDefaultCompressBudget);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, kExitUsage, "usage_error", e.what());
  }

  try {
    if (compress_cmd->parsed()) return cmd_compress(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (generate_cmd->parsed()) return cmd_generate(o, out);
    if (bound_cmd->parsed()) return cmd_bound(o, out);
    if (trace_cmd->parsed()) return cmd_trace(o, out);
    return report_error(err, kExitUsage, "usage_error", "no subcommand");
  } catch (const UsageError& e) {
    return report_error(err, kExitUsage, "usage_error", e.what());
  } catch (const ParseError& e) {
    return report_error(err, kExitUsage, "parse_error", e.what());
  } catch (const ValidationError& e) {
    return report_error(err, kExitValidation, "validation_error", e.what(),
                        Json{{"kind", to_string(e.kind())}});
  } catch (const BudgetExceeded& e) {
    return report_error(err, kExitBudget, "budget_exceeded", e.what(),
                        Json{{"required", to_decimal(e.required())}, {"budget", e.budget()}});
  } catch (const MissingHidden& e) {
    return report_error(err, kExitMissingHidden, "missing_hidden_section", e.what());
  } catch (const RejectionCapExceeded& e) {
    return report_error(err, kExitRejectionCap, "rejection_cap_exceeded", e.what());
  } catch (const std::exception& e) {
    return report_error(err, kExitInternal, "internal_error", e.what());
  }
}

}  // namespace conebound

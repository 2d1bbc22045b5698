// Command-line interface for parking-function and k-Naples computations.
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 resource-limit refusal.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "naples/core.hpp"
#include "naples/enumeration.hpp"
#include "naples/fibers.hpp"
#include "naples/format.hpp"
#include "naples/oracle.hpp"
#include "naples/paths.hpp"
#include "naples/qstats.hpp"
#include "naples/render.hpp"
#include "naples/types.hpp"
#include "naples/verify.hpp"

namespace {

using namespace naples;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceLimit = 3;

struct GlobalOptions {
  std::string format = "json";
  int threads = 0;
  std::string seed = "none";
  int max_n = 0;  // 0 = per-operation default
};

int enumeration_ceiling(const GlobalOptions& global) {
  if (global.max_n > 0) return global.max_n;
  if (const char* env = std::getenv("NAPLES_MAX_N")) {
    return std::max(1, std::atoi(env));
  }
  return kDefaultEnumerationCeiling;
}

void emit_count(const GlobalOptions& global, int n, int k, const std::string& method,
                const BigInt& count) {
  switch (parse_output_format(global.format)) {
    case OutputFormat::Json:
      std::cout << JsonValue::object()
                       .add("n", JsonValue::number(n))
                       .add("k", JsonValue::number(k))
                       .add("method", JsonValue::string(method))
                       .add("count", JsonValue::number(count))
                       .str()
                << '\n';
      break;
    case OutputFormat::Csv:
      std::cout << "n,k,method,count\n"
                << n << ',' << k << ',' << method << ',' << count.str() << '\n';
      break;
    case OutputFormat::Latex:
      std::cout << count.str() << '\n';
      break;
  }
}

int run_count(const GlobalOptions& global, int n, int k, const std::string& method) {
  const NaplesParameter kk(k);
  BigInt value;
  if (method == "closed") {
    if (k != 0) {
      std::cerr << "count: --method closed requires --k 0\n";
      return kExitInvalidInput;
    }
    value = count_pf_closed(n);
  } else if (method == "recursive") {
    value = count_npf_recursive(n, kk);
  } else if (method == "permsum") {
    value = count_npf_permsum(n, kk, global.threads, enumeration_ceiling(global));
  } else {
    std::cerr << "count: unknown method " << method << '\n';
    return kExitInvalidInput;
  }
  emit_count(global, n, k, method, value);
  return 0;
}

int run_fiber(const GlobalOptions& global, const std::string& sigma_text, int k, bool list) {
  const Permutation sigma(parse_sequence(sigma_text));
  const NaplesParameter kk(k);
  const BigInt size = fiber_size(sigma, kk);

  switch (parse_output_format(global.format)) {
    case OutputFormat::Json: {
      JsonValue out = JsonValue::object()
                          .add("sigma", JsonValue::string(sequence_to_string(sigma.values())))
                          .add("k", JsonValue::number(k))
                          .add("fiber_size", JsonValue::number(size));
      if (list) {
        JsonValue members = JsonValue::array();
        for (const ParkingPreference& p : fiber_members(sigma, kk)) {
          members.push_back(JsonValue::string(sequence_to_string(p.values())));
        }
        out.add("members", std::move(members));
      }
      std::cout << out.str() << '\n';
      break;
    }
    case OutputFormat::Csv: {
      if (list) {
        std::cout << "member\n";
        for (const ParkingPreference& p : fiber_members(sigma, kk)) {
          std::cout << sequence_to_string(p.values()) << '\n';
        }
      } else {
        std::cout << "sigma,k,fiber_size\n"
                  << sequence_to_string(sigma.values()) << ',' << k << ',' << size.str() << '\n';
      }
      break;
    }
    case OutputFormat::Latex: {
      if (list) {
        bool first = true;
        for (const ParkingPreference& p : fiber_members(sigma, kk)) {
          if (!first) std::cout << ", ";
          first = false;
          std::cout << sequence_to_string(p.values());
        }
        std::cout << '\n';
      } else {
        std::cout << size.str() << '\n';
      }
      break;
    }
  }
  return 0;
}

int run_gf(const GlobalOptions& global, int n, bool logarithmic) {
  const IndexedSeries series =
      logarithmic ? log_gf(n) : fiber_gf_direct(n, global.threads, enumeration_ceiling(global));
  switch (parse_output_format(global.format)) {
    case OutputFormat::Json:
      std::cout << JsonValue::object()
                       .add("n", JsonValue::number(n))
                       .add("kind", JsonValue::string(logarithmic ? "log" : "fiber"))
                       .add("terms", series_to_json(series))
                       .str()
                << '\n';
      break;
    case OutputFormat::Csv:
      std::cout << series_to_csv(series);
      break;
    case OutputFormat::Latex:
      std::cout << latex_series(series) << '\n';
      break;
  }
  return 0;
}

int run_qdist(const GlobalOptions& global, int n, int k) {
  const QPolynomial dist =
      area_distribution(n, NaplesParameter(k), global.threads, enumeration_ceiling(global));
  switch (parse_output_format(global.format)) {
    case OutputFormat::Json: {
      JsonValue coeffs = JsonValue::array();
      for (int e = 0; e <= dist.degree(); ++e) {
        coeffs.push_back(JsonValue::number(dist.coefficient(e)));
      }
      std::cout << JsonValue::object()
                       .add("n", JsonValue::number(n))
                       .add("k", JsonValue::number(k))
                       .add("coeffs", std::move(coeffs))
                       .str()
                << '\n';
      break;
    }
    case OutputFormat::Csv:
      std::cout << polynomial_to_csv(dist);
      break;
    case OutputFormat::Latex:
      std::cout << latex_polynomial(dist) << '\n';
      break;
  }
  return 0;
}

int run_area(const GlobalOptions& global, const std::string& pref_text, int k) {
  const ParkingPreference pref(parse_sequence(pref_text));
  const long long value = area_k(pref, NaplesParameter(k));
  switch (parse_output_format(global.format)) {
    case OutputFormat::Json:
      std::cout << JsonValue::object()
                       .add("pref", JsonValue::string(sequence_to_string(pref.values())))
                       .add("k", JsonValue::number(k))
                       .add("value", JsonValue::number(value))
                       .str()
                << '\n';
      break;
    case OutputFormat::Csv:
      std::cout << "pref,k,value\n"
                << sequence_to_string(pref.values()) << ',' << k << ',' << value << '\n';
      break;
    case OutputFormat::Latex:
      std::cout << value << '\n';
      break;
  }
  return 0;
}

std::string steps_string(const LatticePath& path) {
  std::string s;
  for (Step step : path.steps) s += step == Step::South ? 'S' : 'E';
  return s;
}

int run_path(const GlobalOptions& global, const std::string& pref_text, int k, bool has_k,
             const std::string& render) {
  const ParkingPreference pref(parse_sequence(pref_text));
  LatticePath path;
  if (has_k) {
    path = decreasing_to_klattice(pref, NaplesParameter(k));
  } else {
    path = pf_to_labeled_dyck(pref);
  }

  if (render == "tikz") {
    std::cout << render_tikz(path, has_k ? k : 0);
    return 0;
  }
  if (render == "svg") {
    std::cout << render_svg(path, has_k ? k : 0);
    return 0;
  }

  switch (parse_output_format(global.format)) {
    case OutputFormat::Json: {
      JsonValue out = JsonValue::object()
                          .add("pref", JsonValue::string(sequence_to_string(pref.values())))
                          .add("steps", JsonValue::string(steps_string(path)));
      if (!path.labels.empty()) {
        JsonValue labels = JsonValue::array();
        for (int label : path.labels) labels.push_back(JsonValue::number(label));
        out.add("labels", std::move(labels));
      }
      std::cout << out.str() << '\n';
      break;
    }
    case OutputFormat::Csv: {
      std::cout << "steps,labels\n"
                << steps_string(path) << ',' << sequence_to_string(path.labels) << '\n';
      break;
    }
    case OutputFormat::Latex:
      std::cout << render_tikz(path, has_k ? k : 0);
      break;
  }
  return 0;
}

int run_verify(const GlobalOptions& global, int n_max) {
  const VerificationReport report = verify(n_max, global.threads);
  switch (parse_output_format(global.format)) {
    case OutputFormat::Json: {
      JsonValue checks = JsonValue::array();
      for (const CheckResult& c : report.checks) {
        JsonValue item = JsonValue::object()
                             .add("check", JsonValue::string(c.name))
                             .add("params", JsonValue::string(c.params))
                             .add("passed", JsonValue::boolean(c.passed));
        if (!c.passed) item.add("counterexample", JsonValue::string(c.counterexample));
        checks.push_back(std::move(item));
      }
      std::cout << JsonValue::object()
                       .add("n_max", JsonValue::number(n_max))
                       .add("all_passed", JsonValue::boolean(report.all_passed()))
                       .add("checks", std::move(checks))
                       .str()
                << '\n';
      break;
    }
    case OutputFormat::Csv: {
      std::cout << "check,params,status,counterexample\n";
      for (const CheckResult& c : report.checks) {
        std::cout << c.name << ',' << '"' << c.params << '"' << ','
                  << (c.passed ? "pass" : "fail") << ',' << '"' << c.counterexample << '"'
                  << '\n';
      }
      break;
    }
    case OutputFormat::Latex: {
      std::cout << "\\begin{tabular}{l|l|l}\ncheck & range & status \\\\\n\\hline\n";
      for (const CheckResult& c : report.checks) {
        std::cout << c.name << " & " << c.params << " & " << (c.passed ? "pass" : "fail")
                  << " \\\\\n";
      }
      std::cout << "\\end{tabular}\n";
      break;
    }
  }
  return report.all_passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parking functions and k-Naples parking functions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions global;
  app.add_option("--format", global.format, "output format: json, csv, or latex")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "csv", "latex"}));
  app.add_option("--threads", global.threads,
                 "worker threads for permutation sweeps (0 = hardware)");
  app.add_option("--seed", global.seed, "reserved; every computation is deterministic")
      ->check(CLI::IsMember({"none"}));
  app.add_option("--max-n", global.max_n, "override the enumeration size ceilings");

  auto* count = app.add_subcommand("count", "count k-Naples parking functions");
  int count_n = 0;
  int count_k = 0;
  std::string count_method = "recursive";
  count->add_option("--n", count_n, "length")->required();
  count->add_option("--k", count_k, "backup distance")->default_val(0);
  count->add_option("--method", count_method, "closed, recursive, or permsum")
      ->default_val("recursive")
      ->check(CLI::IsMember({"closed", "recursive", "permsum"}));

  auto* fiber = app.add_subcommand("fiber", "fiber of a permutation under the outcome map");
  std::string fiber_sigma;
  int fiber_k = 0;
  bool fiber_list = false;
  fiber->add_option("--sigma", fiber_sigma, "permutation, e.g. 23514")->required();
  fiber->add_option("--k", fiber_k, "backup distance")->default_val(0);
  fiber->add_flag("--list", fiber_list, "list the members instead of just the size");

  auto* gf = app.add_subcommand("gf", "fiber-size generating function");
  int gf_n = 0;
  bool gf_log = false;
  gf->add_option("--n", gf_n, "length")->required();
  gf->add_flag("--log", gf_log, "logarithmic variant (multiplicative indices)");

  auto* qdist = app.add_subcommand("qdist", "area_k distribution polynomial");
  int qdist_n = 0;
  int qdist_k = 0;
  qdist->add_option("--n", qdist_n, "length")->required();
  qdist->add_option("--k", qdist_k, "backup distance")->default_val(0);

  auto* area_cmd = app.add_subcommand("area", "area_k statistic of a preference");
  std::string area_pref;
  int area_k_value = 0;
  area_cmd->add_option("--pref", area_pref, "preference tuple, e.g. 322")->required();
  area_cmd->add_option("--k", area_k_value, "backup distance")->default_val(0);

  auto* path_cmd = app.add_subcommand("path", "lattice path of a preference");
  std::string path_pref;
  int path_k = 0;
  std::string path_render;
  path_cmd->add_option("--pref", path_pref, "preference tuple")->required();
  auto* path_k_opt =
      path_cmd->add_option("--k", path_k, "treat as decreasing tuple with this backup distance");
  path_cmd->add_option("--render", path_render, "emit a drawing: tikz or svg")
      ->check(CLI::IsMember({"tikz", "svg"}));

  auto* verify_cmd = app.add_subcommand("verify", "cross-validate the implementation");
  int verify_n_max = 0;
  verify_cmd->add_option("--n-max", verify_n_max, "largest length to check (<= 8)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (count->parsed()) return run_count(global, count_n, count_k, count_method);
    if (fiber->parsed()) return run_fiber(global, fiber_sigma, fiber_k, fiber_list);
    if (gf->parsed()) return run_gf(global, gf_n, gf_log);
    if (qdist->parsed()) return run_qdist(global, qdist_n, qdist_k);
    if (area_cmd->parsed()) return run_area(global, area_pref, area_k_value);
    if (path_cmd->parsed()) {
      return run_path(global, path_pref, path_k, path_k_opt->count() > 0, path_render);
    }
    if (verify_cmd->parsed()) return run_verify(global, verify_n_max);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return 0;
}

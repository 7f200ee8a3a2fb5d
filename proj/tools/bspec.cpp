#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bspec/runner.hpp"

using namespace bspec;

namespace {

struct Common {
  std::string file;
  std::string json;
  RunConfig cfg;
};

void add_common(CLI::App* app, Common& c, bool json_required = false) {
  app->add_option("file", c.file, "Spec document")->required()->check(CLI::ExistingFile);
  auto* j = app->add_option("--json", c.json, "Write the JSON report to PATH ('-' for stdout)");
  if (json_required) j->required();
  app->add_option("--thread-bound", c.cfg.thread_bound, "Maximum number of enumerated threads");
  app->add_option("--cert-depth", c.cfg.cert_depth, "Uniform-limit steps required in certificates");
  app->add_option("--uniq-bound", c.cfg.uniq_bound, "Candidate bound for uniqueness and enumeration");
  app->add_option("--seed", c.cfg.seed, "Seed for randomized instances (enables them in full runs)")
      ->each([&c](const std::string&) { c.cfg.randomized = true; });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ConfigError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

dsl::Workspace load(const Common& c) { return dsl::build(dsl::parse(read_file(c.file)), c.cfg.uniq_bound); }

int emit(const Report& r, const Common& c) {
  if (c.json != "-") std::cout << emit_human(r, {color_from_env(), false});
  if (!c.json.empty()) {
    std::string j = emit_json(r) + "\n";
    if (c.json == "-") {
      std::cout << j;
    } else {
      std::ofstream out(c.json, std::ios::binary);
      if (!out) fail(ErrorKind::ConfigError, "cannot write " + c.json);
      out << j;
    }
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker for direct and inverse limits of Bishop spaces"};
  app.require_subcommand(1);

  Common check_c;
  std::string suite;
  auto* check = app.add_subcommand("check", "Run law suites on a document");
  add_common(check, check_c);
  check->add_option("--suite", suite, "Law group or suite block name");

  Common limit_c;
  std::string direct, inverse;
  auto* limit = app.add_subcommand("limit", "Compute a direct or inverse limit");
  add_common(limit, limit_c);
  auto* d_opt = limit->add_option("--direct", direct, "Covariant spectrum");
  auto* i_opt = limit->add_option("--inverse", inverse, "Contravariant spectrum");
  d_opt->excludes(i_opt);

  Common iso_c;
  std::string cofinal, pool, spectrum;
  auto* iso = app.add_subcommand("iso", "Check a cofinality or duality isomorphism");
  add_common(iso, iso_c);
  auto* c_opt = iso->add_option("--cofinal", cofinal, "Cofinal subset block");
  auto* p_opt = iso->add_option("--duality", pool, "Pool block");
  iso->add_option("--spectrum", spectrum, "Spectrum for --cofinal");
  c_opt->excludes(p_opt);

  Common report_c;
  std::string report_suite;
  auto* report = app.add_subcommand("report", "Run all suites and write a JSON report");
  add_common(report, report_c, true);
  report->add_option("--suite", report_suite, "Law group or suite block name");

  std::string print_file;
  auto* print = app.add_subcommand("print", "Print a document in canonical form");
  print->add_option("file", print_file, "Spec document")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return emit(run_suite(load(check_c), suite, check_c.cfg), check_c);
    if (*report) return emit(run_suite(load(report_c), report_suite, report_c.cfg), report_c);
    if (*limit) {
      if (direct.empty() && inverse.empty()) {
        std::cerr << "limit needs --direct or --inverse\n";
        return 2;
      }
      bool is_direct = !direct.empty();
      return emit(run_limit(load(limit_c), is_direct ? direct : inverse, is_direct, limit_c.cfg), limit_c);
    }
    if (*iso) {
      dsl::Workspace ws = load(iso_c);
      if (!cofinal.empty())
        return emit(run_cofinal_iso(ws, cofinal, spectrum.empty() ? std::nullopt : std::optional(spectrum), iso_c.cfg),
                    iso_c);
      if (!pool.empty()) return emit(run_duality(ws, pool, iso_c.cfg), iso_c);
      std::cerr << "iso needs --cofinal or --duality\n";
      return 2;
    }
    if (*print) {
      std::cout << dsl::print(dsl::parse(read_file(print_file)));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}

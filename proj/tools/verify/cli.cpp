#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <future>
#include <iomanip>
#include <json.hpp>
#include <ostream>

#include "g2s6/errors.hpp"

namespace g2s6::cli {

inline constexpr const char* kVersion = "0.1.0";

std::vector<verify::SuiteReport> run_suites(const std::vector<std::string>& suites, const verify::SuiteOptions& options) {
  std::vector<std::future<std::vector<verify::SuiteReport>>> jobs;
  jobs.reserve(suites.size());
  for (const auto& name : suites) {
    jobs.push_back(std::async(std::launch::async, [name, &options] { return verify::run_suite(name, options); }));
  }
  std::vector<verify::SuiteReport> all;
  // get() on every future before rethrowing so no task outlives `options`.
  std::exception_ptr first_error;
  for (auto& job : jobs) {
    try {
      auto part = job.get();
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.check.name < b.check.name; });
  return all;
}

std::string to_json(const std::vector<verify::SuiteReport>& reports, std::uint64_t seed) {
  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["seed"] = seed;
  doc["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    doc["suites"].push_back({
        {"suite", r.check.name},
        {"backend", std::string(backend_name(r.check.backend))},
        {"cases", r.check.cases},
        {"failures", r.check.failures},
        {"max_residual", r.check.max_residual},
        {"seed", r.seed},
        {"elapsed_ms", r.elapsed_ms},
    });
  }
  return doc.dump(2);
}

namespace {

void write_text(std::ostream& out, const std::vector<verify::SuiteReport>& reports) {
  std::size_t failed = 0;
  for (const auto& r : reports) {
    const auto& c = r.check;
    if (!c.passed()) ++failed;
    out << (c.passed() ? "PASS " : "FAIL ") << std::left << std::setw(44) << c.name << std::setw(6)
        << backend_name(c.backend) << " cases=" << c.cases << " failures=" << c.failures
        << " max_residual=" << std::setprecision(3) << c.max_residual << " (" << std::fixed << std::setprecision(1)
        << r.elapsed_ms << " ms)" << std::defaultfloat << '\n';
  }
  out << reports.size() - failed << "/" << reports.size() << " checks passed\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification of the G2 matrix model, the nearly Kahler S^6 and the pointwise Chern argument", "g2s6"};
  app.require_subcommand(1);

  std::string suite;
  verify::SuiteOptions options;
  std::size_t samples = 0;
  double tol = 0.0;
  std::string format = "text";

  std::vector<std::string> choices = verify::suite_names();
  choices.push_back("all");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(choices));
  CLI::Option* samples_opt =
      verify_cmd->add_option("--samples", samples, "Override every randomized sample count")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", options.seed, "Master seed")->capture_default_str();
  CLI::Option* tol_opt =
      verify_cmd->add_option("--tol", tol, "Override every float pass threshold")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  // CLI11 parses in reverse order of a vector argument.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  if (*samples_opt) options.samples = samples;
  if (*tol_opt) options.tol = tol;

  std::vector<std::string> selected;
  if (suite == "all") {
    selected = verify::suite_names();
  } else {
    selected = {suite};
  }

  std::vector<verify::SuiteReport> reports;
  try {
    reports = run_suites(selected, options);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    return kExitNumerical;
  }

  if (format == "json") {
    out << to_json(reports, options.seed) << "\n";
  } else {
    write_text(out, reports);
  }
  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.check.passed(); });
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace g2s6::cli

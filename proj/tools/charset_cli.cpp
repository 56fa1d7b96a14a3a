#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charset/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContradictory = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIterationLimit = 3;

bool parseCondition(const std::string& text, charset::RunOptions& ro) {
  if (text == "find") {
    ro.cond = charset::LoopCondition::FindExhaustion;
    return true;
  }
  if (text == "never") {
    ro.cond = charset::LoopCondition::Never;
    return true;
  }
  constexpr std::string_view prefix = "bound=";
  if (text.rfind(prefix, 0) != 0 || text.size() == prefix.size()) return false;
  const std::string digits = text.substr(prefix.size());
  if (digits.find_first_not_of("0123456789") != std::string::npos) return false;
  ro.cond = charset::LoopCondition::Bounded;
  ro.bound = std::stoul(digits);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic sets of polynomial systems over the rationals"};

  std::vector<std::string> paths;
  std::vector<std::string> algs{"charset"};
  std::string cond = "find";
  std::string sort = "refine";
  std::string format = "json";
  charset::RunOptions ro;
  bool noTiming = false;

  app.add_option("files", paths, "System files ('-' reads standard input)")->required();
  app.add_option("--alg", algs, "Algorithms to run")
      ->check(CLI::IsMember({"charset", "charsetw", "rittwu", "rittwuw"}))
      ->delimiter(',');
  app.add_option("--cond", cond, "AutoSet loop condition: find, never or bound=k");
  app.add_option("--sort", sort, "Reductend ordering in find")->check(CLI::IsMember({"refine", "degtuple"}));
  app.add_flag("--certificates", ro.certificates, "Track and verify cofactors over the inputs (disables SC)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--trace", ro.trace, "Include every reduction step in the report");
  app.add_flag("--no-timing", noTiming, "Report millis as 0 for reproducible output");
  app.add_option("--max-loops", ro.maxLoops, "Outer loop limit before reporting iteration-limit")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }
  if (!parseCondition(cond, ro)) {
    std::cerr << "invalid --cond '" << cond << "' (expected find, never or bound=k)\n";
    return kExitInputError;
  }
  ro.sort = sort == "refine" ? charset::SortStrategy::Refine : charset::SortStrategy::DegreeTuple;
  ro.timing = !noTiming;

  std::vector<charset::Algorithm> algorithms;
  for (const auto& a : algs) algorithms.push_back(*charset::parseAlgorithm(a));

  charset::BenchmarkResult result;
  try {
    result = charset::runBenchmark(paths, algorithms, ro, std::cin);
  } catch (const charset::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const auto fmt = format == "json" ? charset::ReportFormat::Json : charset::ReportFormat::Table;
  std::cout << charset::renderReports(result.reports, fmt);
  for (const auto& e : result.errors) std::cerr << e.path << ": " << e.message << '\n';

  if (!result.errors.empty()) return kExitInputError;
  bool limit = false, contradictory = false;
  for (const auto& r : result.reports) {
    limit = limit || r.status == charset::Status::IterationLimit;
    contradictory = contradictory || r.status == charset::Status::Contradictory;
  }
  if (limit) return kExitIterationLimit;
  if (contradictory) return kExitContradictory;
  return kExitOk;
}

#include <iostream>
#include <string>
#include <vector>

#include "qpt/errors.hpp"
#include "qpt/harness/config.hpp"
#include "qpt/harness/report.hpp"
#include "qpt/harness/runner.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace qpt::harness;
  const std::vector<std::string> args(argv + 1, argv + argc);

  ExperimentConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "qptest: " << e.what() << "\nRun 'qptest --help' for usage.\n";
    return kExitUsage;
  }

  try {
    const ExperimentReport report = run(config);
    write_report(emit_report(report, config.format), config.out);
    std::cerr << "qptest: " << to_string(config.mode) << " finished " << report.verdicts.size()
              << " trials in " << report.duration.count() << " s\n";
  } catch (const qpt::ParseError& e) {
    std::cerr << "qptest: input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const qpt::InvalidArgument& e) {
    std::cerr << "qptest: input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const OutputError& e) {
    std::cerr << "qptest: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

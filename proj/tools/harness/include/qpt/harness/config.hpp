#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpt/bits.hpp"
#include "qpt/truth_table.hpp"

namespace qpt::harness {

// Bad command line: unknown flag or mode, malformed value. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --help / --version; carries the text to print. Exit code 0.
struct HelpRequested {
  std::string text;
};

enum class Mode { kLin, kSym, kBlr, kCsym, kBv, kCampaign };
enum class Format { kJson, kCsv };

std::string to_string(Mode mode);
std::string to_string(Format format);

// Function generator grammar:
//   linear:<a1..an>            f(x) = a.x
//   symmetric:<v0..vn>         f(x) = v[weight(x)]
//   random:<n>                 uniform random table
//   perturbed:<base>,flips=<k> base with k distinct outputs flipped
struct GeneratorSpec {
  enum class Kind { kLinear, kSymmetric, kRandom, kPerturbed };

  Kind kind;
  std::string text;
  int n = 0;
  Index coefficients = 0;
  std::vector<std::uint8_t> values;
  Index flips = 0;
  std::shared_ptr<const GeneratorSpec> base;
};

/// Throws UsageError.
GeneratorSpec parse_generator(std::string_view text);

struct FileSource {
  std::string path;
};

using FunctionSource = std::variant<FileSource, GeneratorSpec>;

struct ExperimentConfig {
  Mode mode = Mode::kLin;
  FunctionSource source;
  std::optional<double> eps;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  Format format = Format::kJson;
  std::optional<std::string> out;
  int n_max = kDefaultMaxArity;
  unsigned threads = 1;
  // campaign only
  Mode campaign_test = Mode::kLin;
  std::vector<double> grid{1e-2, 1e-3, 1e-4, 1e-5};
};

/// args excludes the program name. Throws UsageError or HelpRequested.
ExperimentConfig parse_config(const std::vector<std::string>& args);

/// Materializes the function under test. Generator randomness comes from the
/// instance stream of `seed`. Throws qpt::ParseError / qpt::InvalidArgument.
TruthTable build_function(const FunctionSource& source, std::uint64_t seed,
                          int n_max = kDefaultMaxArity);

std::string describe(const FunctionSource& source);

}  // namespace qpt::harness

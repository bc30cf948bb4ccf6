#include "qpt/harness/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>

#include "qpt/errors.hpp"
#include "qpt/rng.hpp"

namespace qpt::harness {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kLin: return "lin";
    case Mode::kSym: return "sym";
    case Mode::kBlr: return "blr";
    case Mode::kCsym: return "csym";
    case Mode::kBv: return "bv";
    case Mode::kCampaign: return "campaign";
  }
  return "?";
}

std::string to_string(Format format) {
  return format == Format::kJson ? "json" : "csv";
}

namespace {

constexpr std::string_view kFlipsKey = ",flips=";

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw UsageError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

Index parse_bits(std::string_view text, std::string_view what) {
  try {
    return parse_bitstring(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

double parse_eps(const std::string& text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError("malformed eps '" + text + "'");
  }
  if (!(value > 0.0 && value < 1.0)) {
    throw UsageError("eps must lie in (0, 1), got " + text);
  }
  return value;
}

Mode parse_mode(const std::string& name) {
  for (Mode m : {Mode::kLin, Mode::kSym, Mode::kBlr, Mode::kCsym, Mode::kBv, Mode::kCampaign}) {
    if (to_string(m) == name) return m;
  }
  throw UsageError("unknown mode '" + name + "'");
}

}  // namespace

GeneratorSpec parse_generator(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("generator spec '" + std::string(text) + "' lacks a kind prefix");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  GeneratorSpec spec{};
  spec.text = std::string(text);

  if (kind == "linear") {
    spec.kind = GeneratorSpec::Kind::kLinear;
    spec.coefficients = parse_bits(body, "linear coefficients");
    spec.n = static_cast<int>(body.size());
  } else if (kind == "symmetric") {
    spec.kind = GeneratorSpec::Kind::kSymmetric;
    parse_bits(body, "symmetric values");
    for (char c : body) spec.values.push_back(static_cast<std::uint8_t>(c - '0'));
    spec.n = static_cast<int>(body.size()) - 1;
    if (spec.n < 1) throw UsageError("symmetric spec needs at least two weight values");
  } else if (kind == "random") {
    spec.kind = GeneratorSpec::Kind::kRandom;
    const auto n = parse_count(body, "random arity");
    if (n < 1 || n > static_cast<std::uint64_t>(kHardMaxArity)) {
      throw UsageError("random arity out of range");
    }
    spec.n = static_cast<int>(n);
  } else if (kind == "perturbed") {
    spec.kind = GeneratorSpec::Kind::kPerturbed;
    const auto at = body.rfind(kFlipsKey);
    if (at == std::string_view::npos) {
      throw UsageError("perturbed spec needs ',flips=<k>'");
    }
    spec.flips = parse_count(body.substr(at + kFlipsKey.size()), "flip count");
    spec.base = std::make_shared<const GeneratorSpec>(parse_generator(body.substr(0, at)));
    spec.n = spec.base->n;
  } else {
    throw UsageError("unknown generator kind '" + std::string(kind) + "'");
  }
  return spec;
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Quantum and classical property testers for Boolean functions", "qptest"};
  app.require_subcommand(1, 1);

  ExperimentConfig config;
  std::string fn_path;
  std::string gen_text;
  std::string eps_text;
  std::string format_text = "json";
  std::string out_path;
  std::string test_text = "lin";
  std::vector<std::string> grid_text;

  struct ModeInfo {
    Mode mode;
    const char* help;
  };
  const ModeInfo modes[] = {
      {Mode::kLin, "quantum linearity test (BV + amplitude amplification)"},
      {Mode::kSym, "quantum symmetry test (P_S measurements + amplitude amplification)"},
      {Mode::kBlr, "classical BLR linearity test"},
      {Mode::kCsym, "classical same-weight symmetry test"},
      {Mode::kBv, "single Bernstein-Vazirani run per trial"},
      {Mode::kCampaign, "sweep an eps grid and fit the oracle-call scaling"},
  };

  for (const auto& info : modes) {
    CLI::App* sub = app.add_subcommand(to_string(info.mode), info.help);
    sub->add_option("--fn", fn_path, "truth-table file");
    sub->add_option("--gen", gen_text, "function generator spec");
    sub->add_option("--eps", eps_text, "distance parameter in (0, 1)");
    sub->add_option("--trials", config.trials, "number of trials (default 1000)");
    sub->add_option("--seed", config.seed, "master seed (default 0)");
    sub->add_option("--format", format_text, "json | csv (default json)");
    sub->add_option("--out", out_path, "output path (default stdout)");
    sub->add_option("--n-max", config.n_max, "largest accepted arity (default 20)");
    sub->add_option("--threads", config.threads, "worker threads (default 1)");
    if (info.mode == Mode::kCampaign) {
      sub->add_option("--test", test_text, "tester to sweep: lin | sym (default lin)");
      sub->add_option("--grid", grid_text, "eps values (default 1e-2,1e-3,1e-4,1e-5)")
          ->delimiter(',');
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    if (what.empty()) what = e.get_name();
    throw UsageError(what);
  }

  const auto chosen = app.get_subcommands();
  config.mode = parse_mode(chosen.front()->get_name());

  if (!fn_path.empty() && !gen_text.empty()) {
    throw UsageError("--fn and --gen are mutually exclusive");
  }
  if (!fn_path.empty()) {
    config.source = FileSource{fn_path};
  } else if (!gen_text.empty()) {
    config.source = parse_generator(gen_text);
  } else {
    throw UsageError("missing function source: pass --fn <path> or --gen <spec>");
  }

  if (!eps_text.empty()) config.eps = parse_eps(eps_text);
  const bool needs_eps = config.mode == Mode::kLin || config.mode == Mode::kSym ||
                         config.mode == Mode::kBlr || config.mode == Mode::kCsym;
  if (needs_eps && !config.eps) throw UsageError("--eps is required for this mode");

  if (config.trials < 1) throw UsageError("trials must be >= 1");
  if (config.threads < 1) throw UsageError("threads must be >= 1");
  if (config.n_max < 1 || config.n_max > kHardMaxArity) {
    throw UsageError("--n-max must lie in [1, " + std::to_string(kHardMaxArity) + "]");
  }

  if (format_text == "json") {
    config.format = Format::kJson;
  } else if (format_text == "csv") {
    config.format = Format::kCsv;
  } else {
    throw UsageError("unknown format '" + format_text + "'");
  }
  if (!out_path.empty()) config.out = out_path;

  if (config.mode == Mode::kCampaign) {
    config.campaign_test = parse_mode(test_text);
    if (config.campaign_test != Mode::kLin && config.campaign_test != Mode::kSym) {
      throw UsageError("campaign --test must be lin or sym");
    }
    if (!grid_text.empty()) {
      config.grid.clear();
      for (const auto& g : grid_text) config.grid.push_back(parse_eps(g));
    }
    if (config.grid.size() < 2) throw UsageError("campaign grid needs at least two eps values");
  }
  return config;
}

namespace {

TruthTable generate(const GeneratorSpec& spec, Rng& rng, int n_max) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::kLinear:
      return linear_fn(spec.n, spec.coefficients, n_max);
    case GeneratorSpec::Kind::kSymmetric:
      return symmetric_fn(spec.values, n_max);
    case GeneratorSpec::Kind::kRandom:
      return random_fn(spec.n, rng, n_max);
    case GeneratorSpec::Kind::kPerturbed:
      return perturb(generate(*spec.base, rng, n_max), spec.flips, rng);
  }
  throw InvalidArgument("unknown generator kind");
}

}  // namespace

TruthTable build_function(const FunctionSource& source, std::uint64_t seed, int n_max) {
  if (const auto* file = std::get_if<FileSource>(&source)) {
    return load_truth_table(file->path, n_max);
  }
  Rng rng = derive_stream(seed, kInstanceStream);
  return generate(std::get<GeneratorSpec>(source), rng, n_max);
}

std::string describe(const FunctionSource& source) {
  if (const auto* file = std::get_if<FileSource>(&source)) return "file:" + file->path;
  return std::get<GeneratorSpec>(source).text;
}

}  // namespace qpt::harness

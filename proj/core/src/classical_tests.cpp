#include "qpt/classical_tests.hpp"

#include <cmath>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InvalidArgument("eps must lie in (0, 1), got " + std::to_string(eps));
  }
}

template <typename Instance>
ClassicalVerdict repeat(OracleHandle& oracle, double eps, Rng& rng, Instance instance) {
  const std::uint64_t planned = classical_repetitions(eps);
  const std::uint64_t calls_before = oracle.calls();
  ClassicalVerdict verdict{true, 0, planned, std::nullopt, 0};
  while (verdict.rounds_run < planned) {
    ++verdict.rounds_run;
    auto outcome = instance(oracle, rng);
    if (!outcome.accepted) {
      verdict.accepted = false;
      verdict.failing_witness = outcome.witness;
      break;
    }
  }
  verdict.oracle_calls = oracle.calls() - calls_before;
  return verdict;
}

}  // namespace

std::uint64_t classical_repetitions(double eps) {
  check_eps(eps);
  return static_cast<std::uint64_t>(std::ceil(std::log(3.0) / eps));
}

InstanceOutcome blr_instance(OracleHandle& oracle, Rng& rng) {
  const Index size = domain_size(oracle.arity());
  // With replacement: x == y is allowed.
  const Index x = uniform_below(rng, size);
  const Index y = uniform_below(rng, size);
  const Index z = x ^ y;
  const bool fx = oracle.query(x);
  const bool fy = oracle.query(y);
  const bool fz = oracle.query(z);
  if (fz == (fx != fy)) return {true, std::nullopt};
  return {false, BlrWitness{x, y, z}};
}

ClassicalVerdict blr_test(OracleHandle& oracle, double eps, Rng& rng) {
  return repeat(oracle, eps, rng, blr_instance);
}

Index rank_in_weight_class(Index x, int n) {
  // Count strings of equal weight that precede x lexicographically: at each 1
  // bit (scanning from x1), all completions with a 0 there come first.
  Index rank = 0;
  int remaining = hamming_weight(x);
  for (int pos = 0; pos < n && remaining > 0; ++pos) {
    const int free_positions = n - pos - 1;
    if ((x >> free_positions) & 1) {
      rank += binomial(free_positions, remaining);
      --remaining;
    }
  }
  return rank;
}

Index unrank_in_weight_class(Index rank, int weight, int n) {
  Index x = 0;
  int remaining = weight;
  for (int pos = 0; pos < n && remaining > 0; ++pos) {
    const int free_positions = n - pos - 1;
    const Index with_zero = binomial(free_positions, remaining);
    if (rank >= with_zero) {
      rank -= with_zero;
      x |= Index{1} << free_positions;
      --remaining;
    }
  }
  return x;
}

InstanceOutcome classical_symmetry_instance(OracleHandle& oracle, Rng& rng) {
  const int n = oracle.arity();
  if (n < 2) throw InvalidArgument("classical symmetry test needs n >= 2");
  const Index size = domain_size(n);
  // Skip 0...0 (index 0) and 1...1 (index N-1).
  const Index x = 1 + uniform_below(rng, size - 2);
  const int weight = hamming_weight(x);
  const Index class_size = binomial(n, weight);
  const Index own_rank = rank_in_weight_class(x, n);
  Index partner_rank = uniform_below(rng, class_size - 1);
  if (partner_rank >= own_rank) ++partner_rank;
  const Index y = unrank_in_weight_class(partner_rank, weight, n);

  const bool fx = oracle.query(x);
  const bool fy = oracle.query(y);
  if (fx == fy) return {true, std::nullopt};
  return {false, SymmetryWitness{x, y}};
}

ClassicalVerdict classical_symmetry_test(OracleHandle& oracle, double eps, Rng& rng) {
  check_eps(eps);
  if (oracle.arity() < 2) throw InvalidArgument("classical symmetry test needs n >= 2");
  return repeat(oracle, eps, rng, classical_symmetry_instance);
}

bool witness_holds(const TruthTable& table, const Witness& witness) {
  if (const auto* w = std::get_if<BlrWitness>(&witness)) {
    return w->z == (w->x ^ w->y) && table(w->z) != (table(w->x) != table(w->y));
  }
  const auto& w = std::get<SymmetryWitness>(witness);
  return w.x != w.y && hamming_weight(w.x) == hamming_weight(w.y) &&
         table(w.x) != table(w.y);
}

}  // namespace qpt

#pragma once

#include <cstdint>
#include <optional>

#include "qpt/state_vector.hpp"
#include "qpt/truth_table.hpp"

namespace qpt {

/// Black-box access to a truth table with query accounting.
///
/// Cost model: one call per point evaluation, one per |v_f> preparation, two
/// per reflection I - 2|v_f><v_f| (uncompute and recompute around a
/// reflection about the uniform state). The counter never decreases.
///
/// Holds a reference; the table must outlive the handle.
class OracleHandle {
 public:
  explicit OracleHandle(const TruthTable& table) : table_(&table) {}
  OracleHandle(TruthTable&&) = delete;

  bool query(Index x) {
    ++calls_;
    return (*table_)(x);
  }

  StateVector phase_state();

  /// s -> (I - 2|v_f><v_f|) s
  void reflect_phase_state(StateVector& s);

  std::uint64_t calls() const { return calls_; }
  int arity() const { return table_->arity(); }
  const TruthTable& table() const { return *table_; }

 private:
  const StateVector& axis();

  const TruthTable* table_;
  std::uint64_t calls_ = 0;
  std::optional<StateVector> axis_;
};

}  // namespace qpt

#include "qpt/oracle.hpp"

namespace qpt {

StateVector OracleHandle::phase_state() {
  ++calls_;
  return qpt::phase_state(*table_);
}

void OracleHandle::reflect_phase_state(StateVector& s) {
  calls_ += 2;
  reflect_about_state(s, axis(), Reflection::kThroughAxis);
}

const StateVector& OracleHandle::axis() {
  if (!axis_) axis_ = qpt::phase_state(*table_);
  return *axis_;
}

}  // namespace qpt

#pragma once

#include <cstdint>

namespace upp::perf {

// Element-visit counters for the by-sequence operators. Thread-local so
// concurrent callers do not race; read/reset them on the thread that ran the
// operator.
struct Counters {
  std::uint64_t lowerPseudoInverseVisits = 0;
  std::uint64_t upperPseudoInverseVisits = 0;
  std::uint64_t compositionVisits = 0;

  void reset() { *this = Counters{}; }
};

Counters& counters();

}  // namespace upp::perf

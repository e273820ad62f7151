// Thread-local sink for non-fatal conditioning warnings.
//
// Several closed forms contain factors (reflection Gammas, cosecants)
// that stay finite but amplify roundoff when a parameter sits close to
// an integer without being treated as one.  Evaluators keep going and
// record a note here; callers that care (the CLI, tests) drain the sink
// around a call.  The sink is thread-local, so the evaluators remain
// safe to use concurrently.

#ifndef FPINT_WARNINGS_HPP
#define FPINT_WARNINGS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace fpint {

struct ConditioningWarning {
  std::string context;         // which evaluator, which parameter
  double distance_to_integer;  // how close the offending value sat
};

// Record a warning on the current thread's sink.
void warn_conditioning(std::string context, double distance);

// Return the warnings accumulated on this thread and clear the sink.
std::vector<ConditioningWarning> drain_warnings();

// Number of warnings currently pending on this thread.
std::size_t pending_warning_count();

}  // namespace fpint

#endif  // FPINT_WARNINGS_HPP

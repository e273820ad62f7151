#include "fpint/warnings.hpp"

#include <utility>

namespace fpint {

namespace {
thread_local std::vector<ConditioningWarning> t_sink;
}  // namespace

void warn_conditioning(std::string context, double distance) {
  t_sink.push_back({std::move(context), distance});
}

std::vector<ConditioningWarning> drain_warnings() {
  std::vector<ConditioningWarning> out;
  out.swap(t_sink);
  return out;
}

std::size_t pending_warning_count() { return t_sink.size(); }

}  // namespace fpint

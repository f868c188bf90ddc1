#pragma once

#include <cstddef>
#include <functional>

namespace mesofringe {

/// Worker count for grid evaluation: MESOFRINGE_THREADS when set to a
/// positive integer, otherwise std::thread::hardware_concurrency().
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Each index must write only its own output
/// slot; results do not depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mesofringe

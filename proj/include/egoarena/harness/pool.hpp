#pragma once

#include <functional>
#include <vector>

namespace egoarena {

// Runs independent jobs on up to `workers` threads (1 = inline, in order).
// Jobs must write their results to distinct slots. The first exception thrown
// by any job is rethrown after all threads have joined.
void run_jobs(const std::vector<std::function<void()>>& jobs, int workers);

}  // namespace egoarena

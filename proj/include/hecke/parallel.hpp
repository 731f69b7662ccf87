#ifndef HECKE_PARALLEL_HPP
#define HECKE_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace hecke {

// Runs fill(i) for i in [0, n), distributing indices over config().jobs threads.
// Callers write results into per-index slots and reduce in index order, so the
// outcome does not depend on the job count.
void for_indices(std::int64_t n, const std::function<void(std::int64_t)>& fill);

} // namespace hecke

#endif

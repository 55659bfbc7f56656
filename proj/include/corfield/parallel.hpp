#pragma once

#include <cstddef>
#include <functional>

namespace corfield {

// Process-wide worker cap set by the CLI --threads flag. 0 means "use
// hardware concurrency".
void set_worker_count(int n);
int worker_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous index blocks,
// one per worker; every fn(i) writes only to slot i of its output, so the
// result is identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace corfield

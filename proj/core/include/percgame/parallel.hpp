#pragma once

#include <cstddef>
#include <functional>

namespace percgame {

// Resolves 0 to the hardware concurrency (at least 1).
unsigned resolve_threads(unsigned threads) noexcept;

// Runs fn(i) for i in [0, count) on up to `threads` workers. Work items must
// write only to their own slots; the first exception thrown is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace percgame

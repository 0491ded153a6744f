#pragma once

#include <cstddef>
#include <functional>

namespace fxc {

/// 0 means one worker per hardware thread.
[[nodiscard]] std::size_t resolve_threads(std::size_t requested) noexcept;

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work items
/// must write only to their own slot; results are then independent of the
/// thread count. If items throw, the exception of the lowest index is
/// rethrown after all workers finish.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace fxc

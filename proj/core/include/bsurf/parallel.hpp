#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>

namespace bsurf {

/// Caps the worker count used by `parallel_for`; 0 restores the hardware default.
void set_max_threads(unsigned n) noexcept;
unsigned max_threads() noexcept;

namespace detail {
void run_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk);
}

/// Calls body(i) for i in [0, n) over contiguous chunks. Results must be written
/// to per-index slots so that reductions afterwards do not depend on the thread
/// count. If several indices throw, the exception of the lowest index wins.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  detail::run_chunks(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) body(i);
  });
}

}  // namespace bsurf

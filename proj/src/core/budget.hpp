#pragma once

#include <cstdint>

namespace pcc::budget {

// Global cap on search nodes across the exact solvers. 0 means unlimited.
void set_limit(std::uint64_t nodes);
std::uint64_t limit();

// Resets the spend counter of the calling thread.
void reset();
std::uint64_t spent();

// Counts n search nodes; throws GuardExceeded once the cap is spent.
void tick(std::uint64_t n = 1);

}  // namespace pcc::budget

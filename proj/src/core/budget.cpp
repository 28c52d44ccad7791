#include "core/budget.hpp"

#include <atomic>

#include "core/errors.hpp"

namespace pcc::budget {

namespace {
std::atomic<std::uint64_t> g_limit{0};
thread_local std::uint64_t t_spent = 0;
}  // namespace

void set_limit(std::uint64_t nodes) { g_limit.store(nodes, std::memory_order_relaxed); }

std::uint64_t limit() { return g_limit.load(std::memory_order_relaxed); }

void reset() { t_spent = 0; }

std::uint64_t spent() { return t_spent; }

void tick(std::uint64_t n) {
  t_spent += n;
  const std::uint64_t cap = limit();
  if (cap != 0 && t_spent > cap)
    throw GuardExceeded("work budget exhausted (" + std::to_string(cap) +
                        " search nodes); raise PCC_MAX_WORK");
}

}  // namespace pcc::budget

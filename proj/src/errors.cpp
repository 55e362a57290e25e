#include "gammacalc/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace gammacalc {

namespace {

std::size_t initial_budget()
{
  if (char const *env = std::getenv("GAMMACALC_BUDGET")) {
    try {
      std::size_t pos = 0;
      unsigned long long value = std::stoull(env, &pos);
      if (pos == std::string(env).size() && value > 0)
        return static_cast<std::size_t>(value);
    } catch (std::exception const &) {
    }
  }
  return 100000;
}

std::atomic<std::size_t> &budget_ref()
{
  static std::atomic<std::size_t> budget{initial_budget()};
  return budget;
}

} // anonymous namespace

std::size_t element_budget() { return budget_ref().load(); }

void set_element_budget(std::size_t budget) { budget_ref().store(budget); }

void check_budget(std::size_t count, char const *what)
{
  if (count > element_budget())
    throw SizeGuard(std::string(what) + " needs " + std::to_string(count) +
                    " elements, budget is " +
                    std::to_string(element_budget()));
}

} // namespace gammacalc

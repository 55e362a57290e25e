#ifndef GAMMACALC_LAW_REPORT_HPP
#define GAMMACALC_LAW_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gammacalc {

struct Violation
{
  std::string law;
  nlohmann::ordered_json witness;
};

// Outcome of an exhaustive law check. Only the first few witnesses per law
// are kept; the per-law counts are exact.
struct LawReport
{
  std::string suite;
  std::size_t checked = 0;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;

  bool ok() const { return violation_count == 0; }

  void check(bool holds, std::string const &law,
             nlohmann::ordered_json witness = {})
  {
    ++checked;
    if (holds)
      return;
    ++violation_count;
    if (violations.size() < max_witnesses)
      violations.push_back({law, std::move(witness)});
  }

  void merge(LawReport const &other)
  {
    checked += other.checked;
    violation_count += other.violation_count;
    for (auto const &v : other.violations) {
      if (violations.size() < max_witnesses)
        violations.push_back(v);
    }
  }

  nlohmann::ordered_json to_json() const
  {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["checked"] = checked;
    j["violations"] = nlohmann::ordered_json::array();
    for (auto const &v : violations)
      j["violations"].push_back({{"law", v.law}, {"witness", v.witness}});
    return j;
  }

  static constexpr std::size_t max_witnesses = 16;
};

} // namespace gammacalc

#endif // GAMMACALC_LAW_REPORT_HPP

#ifndef GAMMACALC_TESTS_ORACLES_HPP
#define GAMMACALC_TESTS_ORACLES_HPP

// Reference computations written without the library, for cross-checks.

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Table = std::vector<std::size_t>;

// Every pointed map from {0..m} to {0..n} as a table, generated by counting
// in base n+1 with table[m] as the fastest digit.
inline std::vector<Table> all_maps(std::size_t m, std::size_t n)
{
  std::vector<Table> out;
  Table t(m + 1, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i > m) {
      out.push_back(t);
      return;
    }
    for (std::size_t v = 0; v <= n; ++v) {
      t[i] = v;
      fill(i + 1);
    }
  };
  fill(1);
  return out;
}

inline std::size_t power(std::size_t b, std::size_t e)
{
  std::size_t r = 1;
  while (e--)
    r *= b;
  return r;
}

inline std::size_t factorial(std::size_t n)
{ return n <= 1 ? 1 : n * factorial(n - 1); }

// Bell numbers from the Bell triangle.
inline std::size_t bell(std::size_t n)
{
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row)
      next.push_back(next.back() + v);
    row = next;
  }
  return row.front();
}

// Equivalence closure by repeated relabelling; returns a canonical class
// label per element with the basepoint class labelled 0 and the rest
// numbered by first occurrence.
inline Table closure(std::size_t n,
                     std::vector<std::pair<std::size_t, std::size_t>> const &rel)
{
  Table label(n + 1);
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : rel) {
      std::size_t la = label[a], lb = label[b];
      if (la == lb)
        continue;
      std::size_t keep = std::min(la, lb), drop = std::max(la, lb);
      for (auto &l : label)
        if (l == drop)
          l = keep;
      changed = true;
    }
  }
  Table out(n + 1, 0);
  std::map<std::size_t, std::size_t> renumber;
  renumber[label[0]] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    auto it = renumber.find(label[i]);
    if (it == renumber.end())
      it = renumber.emplace(label[i], renumber.size()).first;
    out[i] = it->second;
  }
  return out;
}

// Set partitions of {1..n} with blocks ordered by least element.
inline std::vector<std::vector<std::vector<std::size_t>>> partitions(
    std::size_t n)
{
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      go(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    go(i + 1);
    cur.pop_back();
  };
  go(1);
  return out;
}

} // namespace oracle

#endif // GAMMACALC_TESTS_ORACLES_HPP

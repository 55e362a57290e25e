#ifndef GAMMACALC_UNION_FIND_HPP
#define GAMMACALC_UNION_FIND_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace gammacalc {

class UnionFind
{
public:
  explicit UnionFind(std::size_t n) : _parent(n), _rank(n, 0)
  { std::iota(_parent.begin(), _parent.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (_rank[a] < _rank[b])
      std::swap(a, b);
    _parent[b] = a;
    if (_rank[a] == _rank[b])
      ++_rank[a];
  }

  std::size_t size() const { return _parent.size(); }

  // Class labels numbered by first occurrence, with the class of node 0
  // labelled 0. Returns the number of labels.
  std::size_t label(std::vector<std::size_t> &labels)
  {
    std::vector<std::size_t> root_label(_parent.size(), npos);
    labels.assign(_parent.size(), 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < _parent.size(); ++i) {
      std::size_t r = find(i);
      if (root_label[r] == npos)
        root_label[r] = next++;
      labels[i] = root_label[r];
    }
    return next;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::vector<std::size_t> _parent;
  std::vector<unsigned char> _rank;
};

} // namespace gammacalc

#endif // GAMMACALC_UNION_FIND_HPP

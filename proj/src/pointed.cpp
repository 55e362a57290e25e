#include "gammacalc/pointed.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gammacalc/errors.hpp"
#include "gammacalc/union_find.hpp"

namespace gammacalc {

FinPointedSet::FinPointedSet(std::size_t size) : _size(size) {}

FinPointedSet::FinPointedSet(std::size_t size, std::vector<std::string> labels)
: _size(size),
  _labels(std::move(labels))
{
  if (!_labels.empty() && _labels.size() != size + 1)
    throw std::invalid_argument("label count must equal cardinality");
}

std::string FinPointedSet::label(Elem x) const
{
  if (x < _labels.size())
    return _labels[x];
  return std::to_string(x);
}

FinPointedSet gamma_object(std::size_t n) { return FinPointedSet(n); }

PointedMap::PointedMap(std::size_t cod, std::vector<Elem> table)
: _cod(cod),
  _table(std::move(table))
{
  if (_table.empty())
    throw std::invalid_argument("map table must contain the basepoint");
  if (_table[0] != 0)
    throw std::invalid_argument("map does not preserve the basepoint");
  for (Elem y : _table) {
    if (y > cod)
      throw std::invalid_argument("map value out of range");
  }
}

PointedMap PointedMap::identity(std::size_t n)
{
  std::vector<Elem> table(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    table[i] = i;
  return PointedMap(n, std::move(table));
}

PointedMap PointedMap::zero(std::size_t dom, std::size_t cod)
{ return PointedMap(cod, std::vector<Elem>(dom + 1, 0)); }

bool PointedMap::is_injective() const
{
  std::vector<bool> seen(_cod + 1, false);
  for (std::size_t i = 1; i < _table.size(); ++i) {
    if (_table[i] == 0 || seen[_table[i]])
      return false;
    seen[_table[i]] = true;
  }
  return true;
}

bool PointedMap::is_surjective() const
{
  std::vector<bool> hit(_cod + 1, false);
  for (Elem y : _table)
    hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool PointedMap::operator<(PointedMap const &other) const
{
  if (_cod != other._cod)
    return _cod < other._cod;
  return _table < other._table;
}

PointedMap compose(PointedMap const &g, PointedMap const &f)
{
  if (f.cod() != g.dom())
    throw std::invalid_argument("composing maps with mismatched ends");
  std::vector<Elem> table(f.dom() + 1);
  for (std::size_t i = 0; i <= f.dom(); ++i)
    table[i] = g(f(i));
  return PointedMap(g.cod(), std::move(table));
}

PointedMap inverse(PointedMap const &f)
{
  if (f.dom() != f.cod() || !f.is_bijective())
    throw std::invalid_argument("map is not invertible");
  std::vector<Elem> table(f.dom() + 1);
  for (std::size_t i = 0; i <= f.dom(); ++i)
    table[f(i)] = i;
  return PointedMap(f.dom(), std::move(table));
}

std::size_t hom_count(std::size_t m, std::size_t n)
{
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (count > std::numeric_limits<std::size_t>::max() / (n + 1))
      throw SizeGuard("hom-set size overflows");
    count *= n + 1;
  }
  return count;
}

std::size_t map_index(PointedMap const &f)
{
  std::size_t index = 0;
  for (std::size_t i = 1; i <= f.dom(); ++i)
    index = index * (f.cod() + 1) + f(i);
  return index;
}

PointedMap map_at(std::size_t m, std::size_t n, std::size_t index)
{
  std::vector<Elem> table(m + 1, 0);
  for (std::size_t i = m; i >= 1; --i) {
    table[i] = index % (n + 1);
    index /= n + 1;
  }
  if (index != 0)
    throw std::invalid_argument("map index out of range");
  return PointedMap(n, std::move(table));
}

SmashProduct smash(FinPointedSet const &x, FinPointedSet const &y)
{
  if (y.size() != 0 &&
      x.size() > std::numeric_limits<std::size_t>::max() / y.size())
    throw SizeGuard("smash product size overflows");
  return SmashProduct{FinPointedSet(x.size() * y.size()), x.size(), y.size()};
}

PointedMap smash_maps(PointedMap const &f, PointedMap const &g)
{
  std::size_t m = f.dom(), n = g.dom();
  std::vector<Elem> table(m * n + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j)
      table[smash_pair(n, i, j)] = smash_pair(g.cod(), f(i), g(j));
  }
  return PointedMap(f.cod() * g.cod(), std::move(table));
}

WedgeSum wedge(FinPointedSet const &x, FinPointedSet const &y)
{
  std::size_t n = x.size() + y.size();
  std::vector<Elem> left(x.size() + 1), right(y.size() + 1);
  for (std::size_t i = 0; i <= x.size(); ++i)
    left[i] = i;
  for (std::size_t j = 1; j <= y.size(); ++j)
    right[j] = x.size() + j;
  right[0] = 0;
  return WedgeSum{FinPointedSet(n),
                  PointedMap(n, std::move(left)),
                  PointedMap(n, std::move(right))};
}

MapSpace map_space(FinPointedSet const &x, FinPointedSet const &y)
{
  std::size_t count = hom_count(x.size(), y.size());
  return MapSpace{FinPointedSet(count - 1), x.size(), y.size()};
}

PointedMap ev(FinPointedSet const &x, FinPointedSet const &y)
{
  MapSpace hom = map_space(x, y);
  SmashProduct dom = smash(hom.set, x);
  std::vector<Elem> table(dom.set.size() + 1, 0);
  for (Elem f = 1; f <= hom.set.size(); ++f) {
    PointedMap fm = hom.map(f);
    for (Elem a = 1; a <= x.size(); ++a)
      table[dom.pair(f, a)] = fm(a);
  }
  return PointedMap(y.size(), std::move(table));
}

PointedMap gamma_coev(FinPointedSet const &x, FinPointedSet const &y)
{
  SmashProduct xy = smash(x, y);
  MapSpace hom = map_space(y, xy.set);
  std::vector<Elem> table(x.size() + 1, 0);
  for (Elem a = 1; a <= x.size(); ++a) {
    std::vector<Elem> image(y.size() + 1, 0);
    for (Elem b = 1; b <= y.size(); ++b)
      image[b] = xy.pair(a, b);
    table[a] = hom.index(PointedMap(xy.set.size(), std::move(image)));
  }
  return PointedMap(hom.set.size(), std::move(table));
}

PointedMap compose_hom(FinPointedSet const &x,
                       FinPointedSet const &y,
                       FinPointedSet const &z)
{
  MapSpace yz = map_space(y, z), xy = map_space(x, y), xz = map_space(x, z);
  SmashProduct dom = smash(yz.set, xy.set);
  std::vector<Elem> table(dom.set.size() + 1, 0);
  for (Elem g = 1; g <= yz.set.size(); ++g) {
    PointedMap gm = yz.map(g);
    for (Elem f = 1; f <= xy.set.size(); ++f)
      table[dom.pair(g, f)] = xz.index(compose(gm, xy.map(f)));
  }
  return PointedMap(xz.set.size(), std::move(table));
}

Quotient quotient_by_relations(FinPointedSet const &x,
                               std::vector<std::pair<Elem, Elem>> const &rel)
{
  UnionFind uf(x.cardinality());
  for (auto const &[a, b] : rel) {
    if (a > x.size() || b > x.size())
      throw std::invalid_argument("relation mentions an element out of range");
    uf.unite(a, b);
  }
  std::vector<std::size_t> labels;
  std::size_t classes = uf.label(labels);
  return Quotient{FinPointedSet(classes - 1),
                  PointedMap(classes - 1, std::move(labels))};
}

Quotient collapse_subset(FinPointedSet const &x,
                         std::vector<Elem> const &subset)
{
  std::vector<std::pair<Elem, Elem>> rel;
  rel.reserve(subset.size());
  for (Elem s : subset)
    rel.emplace_back(0, s);
  return quotient_by_relations(x, rel);
}

std::vector<PointedMap> symmetric_group(std::size_t n)
{
  std::vector<Elem> perm(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    perm[i] = i;
  std::vector<PointedMap> result;
  do {
    result.emplace_back(n, perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return result;
}

bool GroupAction::is_action() const
{
  if (acts.size() != permutations.size())
    return false;
  for (auto const &a : acts) {
    if (a.dom() != carrier.size() || a.cod() != carrier.size() ||
        !a.is_bijective())
      return false;
  }
  auto position = [this](PointedMap const &p) {
    auto it = std::find(permutations.begin(), permutations.end(), p);
    return static_cast<std::size_t>(it - permutations.begin());
  };
  for (std::size_t s = 0; s < permutations.size(); ++s) {
    for (std::size_t t = 0; t < permutations.size(); ++t) {
      std::size_t st = position(compose(permutations[s], permutations[t]));
      if (st == permutations.size())
        return false;
      if (!(acts[st] == compose(acts[s], acts[t])))
        return false;
    }
  }
  return true;
}

bool sigma_is_free(GroupAction const &action, std::vector<Elem> const &subset)
{
  std::vector<bool> member(action.carrier.cardinality(), false);
  for (Elem x : subset)
    member[x] = true;

  bool is_free = true;
  for (Elem x : subset) {
    for (std::size_t s = 0; s < action.permutations.size(); ++s) {
      Elem y = action.acts[s](x);
      if (!member[y])
        throw SubsetNotInvariant("element " + std::to_string(x) +
                                 " leaves the subset");
      if (y == x && !(action.permutations[s] ==
                      PointedMap::identity(action.degree)))
        is_free = false;
    }
  }
  return is_free;
}

} // namespace gammacalc

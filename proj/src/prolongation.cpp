#include "gammacalc/prolongation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gammacalc/errors.hpp"
#include "gammacalc/union_find.hpp"

namespace gammacalc {

using json = nlohmann::ordered_json;

namespace {

// Index of y after alpha, where y: n -> x is given by its digits.
std::size_t precompose_index(std::vector<Elem> const &y,
                             PointedMap const &alpha,
                             std::size_t x)
{
  std::size_t index = 0;
  for (Elem i = 1; i <= alpha.dom(); ++i)
    index = index * (x + 1) + y[alpha(i)];
  return index;
}

std::vector<Elem> digits(std::size_t m, std::size_t x, std::size_t index)
{ return map_at(m, x, index).table(); }

std::size_t checked_add(std::size_t a, std::size_t b)
{
  if (a > static_cast<std::size_t>(-1) - b)
    throw SizeGuard("coend size overflows");
  return a + b;
}

std::size_t checked_mul(std::size_t a, std::size_t b)
{
  if (a != 0 && b > static_cast<std::size_t>(-1) / a)
    throw SizeGuard("coend size overflows");
  return a * b;
}

} // anonymous namespace

CoendTable::CoendTable(GammaSet const &a, std::size_t target,
                       std::size_t max_degree)
: _target(target),
  _max_degree(max_degree)
{
  if (max_degree > a.bound())
    throw DegreeMismatch("coend degree exceeds the bound");
  std::size_t d = max_degree;
  _level_sizes.resize(d + 1);
  _hom_sizes.resize(d + 1);
  _offsets.assign(d + 2, 1);
  for (std::size_t n = 0; n <= d; ++n) {
    _level_sizes[n] = a.level(n);
    _hom_sizes[n] = hom_count(n, target);
    _offsets[n + 1] =
        checked_add(_offsets[n], checked_mul(_level_sizes[n], _hom_sizes[n]));
  }
  std::size_t total = _offsets[d + 1];
  check_budget(total, "coend");

  UnionFind uf(total);
  for (std::size_t m = 1; m <= d; ++m) {
    if (_level_sizes[m] == 0)
      continue;
    for (std::size_t n = 0; n <= d; ++n) {
      std::size_t count = hom_count(m, n);
      for (std::size_t h = 0; h < count; ++h) {
        PointedMap alpha = map_at(m, n, h);
        for (std::size_t y = 0; y < _hom_sizes[n]; ++y) {
          std::size_t ya = precompose_index(digits(n, target, y), alpha, target);
          for (Elem x = 1; x <= _level_sizes[m]; ++x) {
            Elem ax = a.act(m, n, h, x);
            std::size_t lhs = ax == 0 ? 0 : node_index(n, ax, y);
            uf.unite(lhs, node_index(m, x, ya));
          }
        }
      }
    }
  }

  std::size_t count = uf.label(_labels);
  _classes = FinPointedSet(count - 1);
  _witnesses.reserve(count - 1);
  for (std::size_t i = 1; i < total; ++i) {
    if (_labels[i] == _witnesses.size() + 1)
      _witnesses.push_back(node(i));
  }
}

std::size_t CoendTable::node_index(std::size_t n, Elem a, Elem eval) const
{ return _offsets[n] + (a - 1) * _hom_sizes[n] + eval; }

CoendElement CoendTable::node(std::size_t i) const
{
  std::size_t n = 1;
  while (_offsets[n + 1] <= i)
    ++n;
  std::size_t r = i - _offsets[n];
  return CoendElement{n, r / _hom_sizes[n] + 1, r % _hom_sizes[n]};
}

Elem CoendTable::class_of(std::size_t n, Elem a, Elem eval) const
{
  if (a == 0)
    return 0;
  if (n > _max_degree)
    throw DegreeMismatch("representative degree " + std::to_string(n) +
                         " exceeds the coend degree " +
                         std::to_string(_max_degree));
  return _labels[node_index(n, a, eval)];
}

LoweringIndex::LoweringIndex(GammaSet const &a, std::size_t d)
: _degree(d),
  _entries(a.bound() + 1)
{
  for (std::size_t n = d + 1; n <= a.bound(); ++n) {
    _entries[n].resize(a.level(n) + 1);
    std::vector<bool> found(a.level(n) + 1, false);
    found[0] = true;
    std::size_t missing = a.level(n);
    for (std::size_t m = 1; m <= d && missing > 0; ++m) {
      std::size_t count = hom_count(m, n);
      for (std::size_t h = 0; h < count && missing > 0; ++h) {
        for (Elem x = 1; x <= a.level(m); ++x) {
          Elem y = a.act(m, n, h, x);
          if (!found[y]) {
            found[y] = true;
            --missing;
            _entries[n][y] = Entry{m, x, map_at(m, n, h)};
          }
        }
      }
    }
    if (missing > 0)
      throw NotGenerated("degree " + std::to_string(n) +
                         " is not generated in degree " + std::to_string(d));
  }
}

Elem class_of_any(CoendTable const &t, LoweringIndex const &low,
                  std::size_t n, Elem a, PointedMap const &y)
{
  if (a == 0)
    return 0;
  if (n <= t.max_degree())
    return t.class_of(n, a, y);
  auto const &e = low(n, a);
  return t.class_of(e.degree, e.label, compose(y, e.alpha));
}

bool presented_in_degree(GammaSet const &a, std::size_t d)
{
  if (d >= a.bound())
    return true;
  for (std::size_t k = 0; k <= a.bound(); ++k) {
    CoendTable t(a, k, d);
    if (t.classes().size() != a.level(k))
      return false;
    std::vector<Elem> image(t.classes().size() + 1, 0);
    std::vector<bool> hit(a.level(k) + 1, false);
    for (Elem c = 1; c <= t.classes().size(); ++c) {
      auto const &w = t.witness(c);
      image[c] = a.act(w.degree, k, w.eval, w.label);
      if (image[c] == 0 || hit[image[c]])
        return false;
      hit[image[c]] = true;
    }
  }
  return true;
}

std::size_t presentation_degree(GammaSet const &a)
{
  for (std::size_t d = 0; d < a.bound(); ++d) {
    if (presented_in_degree(a, d))
      return d;
  }
  return a.bound();
}

CoendTable prolong(GammaSet const &a, std::size_t x,
                   std::optional<std::size_t> degree)
{
  std::size_t d = degree.value_or(a.bound());
  if (d > a.bound())
    throw DegreeMismatch("coend degree exceeds the bound");
  if (!presented_in_degree(a, d))
    throw NotGenerated("not presented in degree " + std::to_string(d));
  return CoendTable(a, x, d);
}

PointedMap prolong_map(GammaSet const &a,
                       CoendTable const &tx,
                       CoendTable const &ty,
                       PointedMap const &f)
{
  (void)a;
  if (f.dom() != tx.target() || f.cod() != ty.target())
    throw DegreeMismatch("map does not match the prolongation targets");
  std::vector<Elem> table(tx.classes().size() + 1, 0);
  std::vector<bool> seen(table.size(), false);
  for (std::size_t i = 1; i < tx.node_count(); ++i) {
    CoendElement e = tx.node(i);
    PointedMap y = map_at(e.degree, tx.target(), e.eval);
    Elem image = ty.class_of(e.degree, e.label, compose(f, y));
    Elem c = tx.class_of_node(i);
    if (seen[c] && table[c] != image)
      throw std::logic_error("prolonged map is not well defined");
    seen[c] = true;
    table[c] = image;
  }
  return PointedMap(ty.classes().size(), std::move(table));
}

PointedMap prolong_nat(GammaMap const &theta,
                       CoendTable const &ta,
                       CoendTable const &tb)
{
  if (ta.target() != tb.target())
    throw DegreeMismatch("prolongations at different pointed sets");
  std::vector<Elem> table(ta.classes().size() + 1, 0);
  std::vector<bool> seen(table.size(), false);
  for (std::size_t i = 1; i < ta.node_count(); ++i) {
    CoendElement e = ta.node(i);
    Elem image = tb.class_of(e.degree, theta(e.degree, e.label), e.eval);
    Elem c = ta.class_of_node(i);
    if (seen[c] && table[c] != image)
      throw std::logic_error("prolonged transformation is not well defined");
    seen[c] = true;
    table[c] = image;
  }
  return PointedMap(tb.classes().size(), std::move(table));
}

PointedMap strength(std::size_t x, CoendTable const &ty, CoendTable const &txy)
{
  std::size_t y = ty.target();
  if (txy.target() != x * y)
    throw DegreeMismatch("strength target is not the smash product");
  std::size_t s = ty.classes().size();
  std::vector<Elem> table(x * s + 1, 0);
  for (Elem e = 1; e <= x; ++e) {
    std::vector<bool> seen(s + 1, false);
    for (std::size_t i = 1; i < ty.node_count(); ++i) {
      CoendElement w = ty.node(i);
      std::vector<Elem> yt = digits(w.degree, y, w.eval);
      for (auto &v : yt)
        v = smash_pair(y, e, v);
      Elem image = txy.class_of(w.degree, w.label,
                                map_index(PointedMap(x * y, std::move(yt))));
      Elem c = ty.class_of_node(i);
      if (c == 0)
        continue;
      if (seen[c] && table[smash_pair(s, e, c)] != image)
        throw std::logic_error("strength is not well defined");
      seen[c] = true;
      table[smash_pair(s, e, c)] = image;
    }
  }
  return PointedMap(txy.classes().size(), std::move(table));
}

PointedMap costrength(CoendTable const &tx, std::size_t y,
                      CoendTable const &txy)
{
  std::size_t x = tx.target();
  if (txy.target() != x * y)
    throw DegreeMismatch("costrength target is not the smash product");
  std::size_t s = tx.classes().size();
  std::vector<Elem> table(s * y + 1, 0);
  for (Elem e = 1; e <= y; ++e) {
    for (Elem c = 1; c <= s; ++c) {
      auto const &w = tx.witness(c);
      std::vector<Elem> yt = digits(w.degree, x, w.eval);
      for (auto &v : yt)
        v = smash_pair(y, v, e);
      table[smash_pair(y, c, e)] = txy.class_of(
          w.degree, w.label, map_index(PointedMap(x * y, std::move(yt))));
    }
  }
  return PointedMap(txy.classes().size(), std::move(table));
}

DayLevel::DayLevel(GammaSet const &a, GammaSet const &b,
                   std::size_t da, std::size_t db, std::size_t p)
: _db(db),
  _p(p)
{
  _a_sizes.assign(a.levels().begin(), a.levels().begin() + da + 1);
  _b_sizes.assign(b.levels().begin(), b.levels().begin() + db + 1);
  _offsets.assign((da + 1) * (db + 1) + 1, 1);
  for (std::size_t m = 0; m <= da; ++m) {
    for (std::size_t n = 0; n <= db; ++n) {
      std::size_t block = m * (db + 1) + n;
      std::size_t size = checked_mul(checked_mul(_a_sizes[m], _b_sizes[n]),
                                     hom_count(m * n, p));
      _offsets[block + 1] = checked_add(_offsets[block], size);
    }
  }
  std::size_t total = _offsets.back();
  check_budget(total, "Day convolution");

  UnionFind uf(total);
  auto index = [&](std::size_t m, std::size_t n, Elem x, Elem y,
                   std::size_t eval) -> std::size_t {
    if (x == 0 || y == 0)
      return 0;
    std::size_t h = hom_count(m * n, p);
    return _offsets[m * (db + 1) + n] + ((x - 1) * _b_sizes[n] + (y - 1)) * h +
           eval;
  };

  // (A(alpha) a, b, y) ~ (a, b, y (alpha smash n))
  for (std::size_t m1 = 1; m1 <= da; ++m1) {
    for (std::size_t m = 0; m <= da; ++m) {
      std::size_t count = hom_count(m1, m);
      for (std::size_t n = 1; n <= db; ++n) {
        if (_b_sizes[n] == 0)
          continue;
        std::size_t hy = hom_count(m * n, p);
        for (std::size_t h = 0; h < count; ++h) {
          PointedMap alpha = smash_maps(map_at(m1, m, h),
                                        PointedMap::identity(n));
          for (std::size_t y = 0; y < hy; ++y) {
            std::size_t ya = precompose_index(digits(m * n, p, y), alpha, p);
            for (Elem x = 1; x <= _a_sizes[m1]; ++x) {
              Elem ax = a.act(m1, m, h, x);
              for (Elem v = 1; v <= _b_sizes[n]; ++v)
                uf.unite(index(m, n, ax, v, y), index(m1, n, x, v, ya));
            }
          }
        }
      }
    }
  }

  // (a, B(beta) b, y) ~ (a, b, y (m smash beta))
  for (std::size_t n1 = 1; n1 <= db; ++n1) {
    for (std::size_t n = 0; n <= db; ++n) {
      std::size_t count = hom_count(n1, n);
      for (std::size_t m = 1; m <= da; ++m) {
        if (_a_sizes[m] == 0)
          continue;
        std::size_t hy = hom_count(m * n, p);
        for (std::size_t h = 0; h < count; ++h) {
          PointedMap beta = smash_maps(PointedMap::identity(m),
                                       map_at(n1, n, h));
          for (std::size_t y = 0; y < hy; ++y) {
            std::size_t yb = precompose_index(digits(m * n, p, y), beta, p);
            for (Elem v = 1; v <= _b_sizes[n1]; ++v) {
              Elem bv = b.act(n1, n, h, v);
              for (Elem x = 1; x <= _a_sizes[m]; ++x)
                uf.unite(index(m, n, x, bv, y), index(m, n1, x, v, yb));
            }
          }
        }
      }
    }
  }

  std::size_t count = uf.label(_labels);
  _witnesses.reserve(count - 1);
  for (std::size_t i = 1; i < total; ++i) {
    if (_labels[i] == _witnesses.size() + 1)
      _witnesses.push_back(node(i));
  }
}

DayElement DayLevel::node(std::size_t i) const
{
  std::size_t block = 0;
  while (_offsets[block + 1] <= i)
    ++block;
  std::size_t m = block / (_db + 1), n = block % (_db + 1);
  std::size_t h = hom_count(m * n, _p);
  std::size_t r = i - _offsets[block];
  std::size_t pair = r / h;
  return DayElement{m, n, pair / _b_sizes[n] + 1, pair % _b_sizes[n] + 1,
                    r % h};
}

Elem DayLevel::class_of(std::size_t m, std::size_t n, Elem a, Elem b,
                        Elem eval) const
{
  if (a == 0 || b == 0)
    return 0;
  if (m >= _a_sizes.size() || n > _db)
    throw DegreeMismatch("representative degree exceeds the Day degrees");
  std::size_t h = hom_count(m * n, _p);
  return _labels[_offsets[m * (_db + 1) + n] +
                 ((a - 1) * _b_sizes[n] + (b - 1)) * h + eval];
}

DaySmash day_smash(GammaSet const &a, GammaSet const &b,
                   std::size_t da, std::size_t db,
                   std::optional<std::size_t> bound)
{
  if (da > a.bound() || db > b.bound())
    throw DegreeMismatch("Day degree exceeds the bound");
  if (!presented_in_degree(a, da))
    throw NotGenerated("left factor is not presented in degree " +
                       std::to_string(da));
  if (!presented_in_degree(b, db))
    throw NotGenerated("right factor is not presented in degree " +
                       std::to_string(db));
  std::size_t d = bound.value_or(da * db);

  DaySmash result;
  result.da = da;
  result.db = db;
  std::vector<std::size_t> levels(d + 1);
  for (std::size_t p = 0; p <= d; ++p) {
    result.levels.emplace_back(a, b, da, db, p);
    levels[p] = result.levels.back().size();
  }
  auto const &lv = result.levels;
  result.set = GammaSet::from_actions(levels, [&](PointedMap const &alpha) {
    std::size_t p = alpha.dom(), q = alpha.cod();
    std::vector<Elem> table(levels[p] + 1, 0);
    for (Elem c = 1; c <= levels[p]; ++c) {
      auto const &w = lv[p].witness(c);
      PointedMap y = map_at(w.m * w.n, p, w.eval);
      table[c] = lv[q].class_of(w.m, w.n, w.a, w.b,
                                map_index(compose(alpha, y)));
    }
    return PointedMap(levels[q], std::move(table));
  });
  return result;
}

LawReport check_binatural(GammaSet const &a, GammaSet const &b,
                          GammaSet const &c, BinaturalFamily const &family)
{
  LawReport report;
  report.suite = "binaturality";
  std::size_t da = family.da, db = family.db;
  if (c.bound() < da * db)
    throw DegreeMismatch("target bound is below the product of the degrees");
  for (std::size_t m = 1; m <= da; ++m) {
    for (std::size_t m1 = 0; m1 <= da; ++m1) {
      for (std::size_t n = 1; n <= db; ++n) {
        for (std::size_t n1 = 0; n1 <= db; ++n1) {
          std::size_t ca = hom_count(m, m1), cb = hom_count(n, n1);
          auto const &f = family.at(m, n);
          auto const &f1 = family.at(m1, n1);
          for (std::size_t ha = 0; ha < ca; ++ha) {
            PointedMap alpha = map_at(m, m1, ha);
            for (std::size_t hb = 0; hb < cb; ++hb) {
              PointedMap beta = map_at(n, n1, hb);
              std::size_t gamma = map_index(smash_maps(alpha, beta));
              bool holds = true;
              json witness;
              for (Elem x = 1; x <= a.level(m) && holds; ++x) {
                for (Elem y = 1; y <= b.level(n) && holds; ++y) {
                  Elem lhs = c.act(m * n, m1 * n1, gamma,
                                   f(smash_pair(b.level(n), x, y)));
                  Elem ax = a.act(m, m1, ha, x), by = b.act(n, n1, hb, y);
                  Elem rhs = f1(smash_pair(b.level(n1), ax, by));
                  if (lhs != rhs) {
                    holds = false;
                    witness = json{{"alpha", alpha.table()},
                                   {"beta", beta.table()},
                                   {"a", x},
                                   {"b", y}};
                  }
                }
              }
              report.check(holds, "binatural", witness);
            }
          }
        }
      }
    }
  }
  return report;
}

GammaMap smash_pair(GammaSet const &a, GammaSet const &b,
                    DaySmash const &day, GammaSet const &c,
                    BinaturalFamily const &family)
{
  if (family.da != day.da || family.db != day.db)
    throw DegreeMismatch("family degrees differ from the Day degrees");
  if (c.bound() != day.set.bound())
    throw DegreeMismatch("target bound differs from the Day bound");
  LawReport report = check_binatural(a, b, c, family);
  if (!report.ok())
    throw BinaturalityViolation(report.violations.front().witness.dump());

  GammaMap result;
  for (std::size_t p = 0; p <= c.bound(); ++p) {
    auto const &level = day.levels[p];
    std::vector<Elem> table(level.size() + 1, 0);
    std::vector<bool> seen(table.size(), false);
    for (std::size_t i = 1; i < level.node_count(); ++i) {
      DayElement e = level.node(i);
      Elem v = family.at(e.m, e.n)(smash_pair(b.level(e.n), e.a, e.b));
      Elem image = c.act(e.m * e.n, p, e.eval, v);
      Elem cls = level.class_of_node(i);
      if (seen[cls] && table[cls] != image)
        throw BinaturalityViolation("induced map is not well defined");
      seen[cls] = true;
      table[cls] = image;
    }
    result.components.emplace_back(c.level(p), std::move(table));
  }
  return result;
}

BinaturalFamily smash_unpair(GammaSet const &a, GammaSet const &b,
                             DaySmash const &day, GammaSet const &c,
                             GammaMap const &h)
{
  BinaturalFamily family;
  family.da = day.da;
  family.db = day.db;
  if (day.set.bound() < day.da * day.db)
    throw DegreeMismatch("Day bound is below the product of the degrees");
  for (std::size_t m = 0; m <= day.da; ++m) {
    for (std::size_t n = 0; n <= day.db; ++n) {
      std::size_t mn = m * n;
      std::size_t s = b.level(n);
      std::vector<Elem> table(a.level(m) * s + 1, 0);
      std::size_t id = map_index(PointedMap::identity(mn));
      for (Elem x = 1; x <= a.level(m); ++x) {
        for (Elem y = 1; y <= s; ++y)
          table[smash_pair(s, x, y)] =
              h(mn, day.levels[mn].class_of(m, n, x, y, id));
      }
      family.maps.emplace_back(c.level(mn), std::move(table));
    }
  }
  return family;
}

CircleProduct circle(GammaSet const &a, GammaSet const &b,
                     std::optional<std::size_t> degree)
{
  std::size_t d = degree.value_or(a.bound());
  if (d > a.bound())
    throw DegreeMismatch("coend degree exceeds the bound");
  if (!presented_in_degree(a, d))
    throw NotGenerated("not presented in degree " + std::to_string(d));

  CircleProduct result;
  result.degree = d;
  std::vector<std::size_t> levels(b.bound() + 1);
  for (std::size_t k = 0; k <= b.bound(); ++k) {
    result.tables.emplace_back(a, b.level(k), d);
    levels[k] = result.tables.back().classes().size();
  }
  auto const &tables = result.tables;
  result.set = GammaSet::from_actions(levels, [&](PointedMap const &alpha) {
    std::size_t k = alpha.dom(), k1 = alpha.cod();
    PointedMap balpha = b.action(alpha);
    std::vector<Elem> table(levels[k] + 1, 0);
    for (Elem c = 1; c <= levels[k]; ++c) {
      auto const &w = tables[k].witness(c);
      PointedMap y = map_at(w.degree, b.level(k), w.eval);
      table[c] = tables[k1].class_of(w.degree, w.label, compose(balpha, y));
    }
    return PointedMap(levels[k1], std::move(table));
  });
  return result;
}

PointedMap block_inclusion(std::size_t m, std::size_t n, Elem i)
{
  std::vector<Elem> table(n + 1, 0);
  for (Elem j = 1; j <= n; ++j)
    table[j] = smash_pair(n, i, j);
  return PointedMap(m * n, std::move(table));
}

BinaturalFamily assembly_family(GammaSet const &a, GammaSet const &b,
                                CircleProduct const &circ,
                                std::size_t da, std::size_t db)
{
  if (b.bound() < da * db)
    throw DegreeMismatch("right factor bound is below the product degree");
  if (da > circ.degree)
    throw DegreeMismatch("circle product computed below the left degree");
  BinaturalFamily family;
  family.da = da;
  family.db = db;
  for (std::size_t m = 0; m <= da; ++m) {
    for (std::size_t n = 0; n <= db; ++n) {
      std::size_t mn = m * n;
      std::size_t s = b.level(n);
      std::vector<Elem> table(a.level(m) * s + 1, 0);
      for (Elem y = 1; y <= s; ++y) {
        std::vector<Elem> z(m + 1, 0);
        for (Elem i = 1; i <= m; ++i)
          z[i] = b.act(block_inclusion(m, n, i), y);
        std::size_t zi = map_index(PointedMap(b.level(mn), std::move(z)));
        for (Elem x = 1; x <= a.level(m); ++x)
          table[smash_pair(s, x, y)] = circ.tables[mn].class_of(m, x, zi);
      }
      family.maps.emplace_back(circ.set.level(mn), std::move(table));
    }
  }
  return family;
}

Assembly assembly(GammaSet const &a, GammaSet const &b,
                  std::size_t da, std::size_t db)
{
  Assembly result;
  result.circ = circle(a, b, da);
  result.day = day_smash(a, b, da, db, b.bound());
  for (std::size_t p = 0; p <= b.bound(); ++p) {
    auto const &level = result.day.levels[p];
    auto const &target = result.circ.tables[p];
    std::vector<Elem> table(level.size() + 1, 0);
    std::vector<bool> seen(table.size(), false);
    for (std::size_t i = 1; i < level.node_count(); ++i) {
      DayElement e = level.node(i);
      PointedMap y = map_at(e.m * e.n, p, e.eval);
      std::vector<Elem> z(e.m + 1, 0);
      for (Elem j = 1; j <= e.m; ++j)
        z[j] = b.act(compose(y, block_inclusion(e.m, e.n, j)), e.b);
      Elem image = target.class_of(
          e.m, e.a, map_index(PointedMap(b.level(p), std::move(z))));
      Elem cls = level.class_of_node(i);
      if (seen[cls] && table[cls] != image)
        throw BinaturalityViolation("assembly is not well defined");
      seen[cls] = true;
      table[cls] = image;
    }
    result.map.components.emplace_back(result.circ.set.level(p),
                                       std::move(table));
  }
  return result;
}

CircleProlongIso circle_prolong_iso(GammaSet const &a, GammaSet const &b,
                                    CircleProduct const &circ, std::size_t x)
{
  CircleProlongIso result;
  result.report.suite = "circle-prolongation";
  result.inner = CoendTable(b, x, b.bound());
  result.outer = CoendTable(a, result.inner.classes().size(), circ.degree);
  result.composite = CoendTable(circ.set, x, circ.set.bound());
  auto const &inner = result.inner;
  auto const &outer = result.outer;
  auto const &composite = result.composite;
  std::size_t inner_size = inner.classes().size();

  // Members of every class of (A o B)(n), for the well-definedness check.
  std::vector<std::vector<std::vector<std::size_t>>> members(
      circ.set.bound() + 1);
  for (std::size_t n = 0; n <= circ.set.bound(); ++n) {
    auto const &t = circ.tables[n];
    members[n].resize(t.classes().size() + 1);
    for (std::size_t i = 1; i < t.node_count(); ++i)
      members[n][t.class_of_node(i)].push_back(i);
  }

  std::vector<Elem> fwd(composite.classes().size() + 1, 0);
  std::vector<bool> seen(fwd.size(), false);
  bool forward_ok = true;
  for (std::size_t i = 1; i < composite.node_count(); ++i) {
    CoendElement e = composite.node(i);
    PointedMap y = map_at(e.degree, x, e.eval);
    Elem cls = composite.class_of_node(i);
    for (std::size_t node : members[e.degree][e.label]) {
      CoendElement inner_rep = circ.tables[e.degree].node(node);
      PointedMap z = map_at(inner_rep.degree, b.level(e.degree), inner_rep.eval);
      std::vector<Elem> w(inner_rep.degree + 1, 0);
      for (Elem j = 1; j <= inner_rep.degree; ++j)
        w[j] = inner.class_of(e.degree, z(j), y);
      Elem image = outer.class_of(inner_rep.degree, inner_rep.label,
                                  PointedMap(inner_size, std::move(w)));
      if (seen[cls] && fwd[cls] != image)
        forward_ok = false;
      seen[cls] = true;
      fwd[cls] = image;
    }
  }
  result.report.check(forward_ok, "forward-well-defined");
  result.forward = PointedMap(outer.classes().size(), std::move(fwd));

  std::vector<Elem> bwd(outer.classes().size() + 1, 0);
  std::vector<bool> seen_b(bwd.size(), false);
  bool backward_ok = true;
  for (std::size_t i = 1; i < outer.node_count(); ++i) {
    CoendElement e = outer.node(i);
    PointedMap w = map_at(e.degree, inner_size, e.eval);
    std::size_t total = 0;
    for (Elem j = 1; j <= e.degree; ++j) {
      if (w(j) != 0)
        total += inner.witness(w(j)).degree;
    }
    if (total > b.bound())
      throw SizeGuard("wedge degree " + std::to_string(total) +
                      " exceeds the bound " + std::to_string(b.bound()));
    std::vector<Elem> z(e.degree + 1, 0);
    std::vector<Elem> y(total + 1, 0);
    std::size_t offset = 0;
    for (Elem j = 1; j <= e.degree; ++j) {
      if (w(j) == 0)
        continue;
      auto const &rep = inner.witness(w(j));
      PointedMap yj = map_at(rep.degree, x, rep.eval);
      std::vector<Elem> iota(rep.degree + 1, 0);
      for (Elem t = 1; t <= rep.degree; ++t) {
        iota[t] = offset + t;
        y[offset + t] = yj(t);
      }
      z[j] = b.act(PointedMap(total, std::move(iota)), rep.label);
      offset += rep.degree;
    }
    Elem c = circ.tables[total].class_of(
        e.degree, e.label, PointedMap(b.level(total), std::move(z)));
    Elem image = composite.class_of(total, c, PointedMap(x, std::move(y)));
    Elem cls = outer.class_of_node(i);
    if (seen_b[cls] && bwd[cls] != image)
      backward_ok = false;
    seen_b[cls] = true;
    bwd[cls] = image;
  }
  result.report.check(backward_ok, "backward-well-defined");
  result.backward = PointedMap(composite.classes().size(), std::move(bwd));

  result.report.check(
      compose(result.backward, result.forward) ==
          PointedMap::identity(composite.classes().size()),
      "backward-after-forward");
  result.report.check(
      compose(result.forward, result.backward) ==
          PointedMap::identity(outer.classes().size()),
      "forward-after-backward");
  return result;
}

} // namespace gammacalc

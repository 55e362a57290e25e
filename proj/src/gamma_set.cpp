#include "gammacalc/gamma_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "gammacalc/errors.hpp"

namespace gammacalc {

using json = nlohmann::ordered_json;

GammaSet::GammaSet(std::vector<std::size_t> levels, Tables tables)
: _levels(std::move(levels)),
  _tables(std::move(tables))
{
  if (_levels.empty())
    throw std::invalid_argument("a Gamma-set needs at least degree 0");
  if (_levels[0] != 0)
    throw std::invalid_argument("degree 0 must be a single point");
  std::size_t d = bound();
  if (_tables.size() != d + 1)
    throw std::invalid_argument("action table has the wrong number of rows");
  for (std::size_t m = 0; m <= d; ++m) {
    if (_tables[m].size() != d + 1)
      throw std::invalid_argument("action table has the wrong shape");
    for (std::size_t n = 0; n <= d; ++n) {
      auto const &t = _tables[m][n];
      std::size_t width = _levels[m] + 1;
      if (t.size() != hom_count(m, n) * width)
        throw std::invalid_argument("action table for " + std::to_string(m) +
                                    ">" + std::to_string(n) +
                                    " has the wrong size");
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] > _levels[n] || (i % width == 0 && t[i] != 0))
          throw std::invalid_argument("action entry out of range");
      }
    }
  }
}

GammaSet GammaSet::tabulate(std::vector<std::size_t> levels, ActFn const &act)
{
  std::size_t d = levels.size() - 1;
  Tables tables(d + 1, std::vector<std::vector<Elem>>(d + 1));
  for (std::size_t m = 0; m <= d; ++m) {
    std::size_t width = levels[m] + 1;
    for (std::size_t n = 0; n <= d; ++n) {
      std::size_t count = hom_count(m, n);
      auto &t = tables[m][n];
      t.assign(count * width, 0);
      for (std::size_t h = 0; h < count; ++h) {
        PointedMap alpha = map_at(m, n, h);
        for (Elem x = 1; x <= levels[m]; ++x)
          t[h * width + x] = act(alpha, x);
      }
    }
  }
  return GammaSet(std::move(levels), std::move(tables));
}

GammaSet GammaSet::from_actions(
    std::vector<std::size_t> levels,
    std::function<PointedMap(PointedMap const &alpha)> const &action)
{
  std::size_t d = levels.size() - 1;
  Tables tables(d + 1, std::vector<std::vector<Elem>>(d + 1));
  for (std::size_t m = 0; m <= d; ++m) {
    for (std::size_t n = 0; n <= d; ++n) {
      std::size_t count = hom_count(m, n);
      auto &t = tables[m][n];
      t.reserve(count * (levels[m] + 1));
      for (std::size_t h = 0; h < count; ++h) {
        PointedMap image = action(map_at(m, n, h));
        if (image.dom() != levels[m])
          throw std::invalid_argument("action map has the wrong domain");
        t.insert(t.end(), image.table().begin(), image.table().end());
      }
    }
  }
  return GammaSet(std::move(levels), std::move(tables));
}

PointedMap GammaSet::action(PointedMap const &alpha) const
{
  std::size_t m = alpha.dom(), n = alpha.cod();
  std::size_t h = map_index(alpha);
  std::vector<Elem> table(_levels[m] + 1);
  for (Elem x = 0; x <= _levels[m]; ++x)
    table[x] = act(m, n, h, x);
  return PointedMap(_levels[n], std::move(table));
}

GammaMap identity_map(GammaSet const &a)
{
  GammaMap id;
  for (std::size_t k = 0; k <= a.bound(); ++k)
    id.components.push_back(PointedMap::identity(a.level(k)));
  return id;
}

GammaMap compose(GammaMap const &g, GammaMap const &f)
{
  if (g.components.size() != f.components.size())
    throw DegreeMismatch("composing Gamma-maps with different bounds");
  GammaMap gf;
  for (std::size_t k = 0; k < f.components.size(); ++k)
    gf.components.push_back(compose(g.components[k], f.components[k]));
  return gf;
}

LawReport validate(GammaSet const &a)
{
  LawReport report;
  report.suite = "gamma-set";
  std::size_t d = a.bound();

  for (std::size_t k = 0; k <= d; ++k) {
    PointedMap id = PointedMap::identity(k);
    bool holds = a.action(id) == PointedMap::identity(a.level(k));
    report.check(holds, "identity", json{{"degree", k}});
  }

  for (std::size_t l = 0; l <= d; ++l) {
    for (std::size_t m = 0; m <= d; ++m) {
      std::size_t lm = hom_count(l, m);
      for (std::size_t g = 0; g < lm; ++g) {
        PointedMap gm = map_at(l, m, g);
        for (std::size_t n = 0; n <= d; ++n) {
          std::size_t mn = hom_count(m, n);
          for (std::size_t f = 0; f < mn; ++f) {
            PointedMap fm = map_at(m, n, f);
            std::size_t fg = map_index(compose(fm, gm));
            bool holds = true;
            Elem bad = 0;
            for (Elem x = 1; x <= a.level(l) && holds; ++x) {
              if (a.act(l, n, fg, x) != a.act(m, n, f, a.act(l, m, g, x))) {
                holds = false;
                bad = x;
              }
            }
            if (holds) {
              ++report.checked;
            } else {
              report.check(false, "composition",
                           json{{"first", gm.table()},
                                {"then", fm.table()},
                                {"element", bad}});
            }
          }
        }
      }
    }
  }
  return report;
}

LawReport check_natural(GammaSet const &a,
                        GammaSet const &b,
                        GammaMap const &theta)
{
  LawReport report;
  report.suite = "naturality";
  std::size_t d = a.bound();
  if (b.bound() != d || theta.components.size() != d + 1)
    throw DegreeMismatch("naturality check across different bounds");
  for (std::size_t k = 0; k <= d; ++k) {
    auto const &c = theta.components[k];
    report.check(c.dom() == a.level(k) && c.cod() == b.level(k),
                 "component-shape", json{{"degree", k}});
    if (c.dom() != a.level(k) || c.cod() != b.level(k))
      return report;
  }
  for (std::size_t m = 0; m <= d; ++m) {
    for (std::size_t n = 0; n <= d; ++n) {
      std::size_t count = hom_count(m, n);
      for (std::size_t h = 0; h < count; ++h) {
        bool holds = true;
        Elem bad = 0;
        for (Elem x = 1; x <= a.level(m) && holds; ++x) {
          if (theta(n, a.act(m, n, h, x)) != b.act(m, n, h, theta(m, x))) {
            holds = false;
            bad = x;
          }
        }
        if (holds) {
          ++report.checked;
        } else {
          report.check(false, "naturality",
                       json{{"map", map_at(m, n, h).table()},
                            {"element", bad}});
        }
      }
    }
  }
  return report;
}

bool is_levelwise_bijective(GammaMap const &theta)
{
  return std::all_of(theta.components.begin(), theta.components.end(),
                     [](PointedMap const &c) {
                       return c.dom() == c.cod() && c.is_bijective();
                     });
}

bool is_isomorphism(GammaSet const &a, GammaSet const &b,
                    GammaMap const &theta)
{ return check_natural(a, b, theta).ok() && is_levelwise_bijective(theta); }

GammaSet representable(std::size_t n, std::size_t bound)
{
  std::vector<std::size_t> levels(bound + 1);
  for (std::size_t k = 0; k <= bound; ++k)
    levels[k] = hom_count(n, k) - 1;
  return GammaSet::tabulate(levels, [n](PointedMap const &alpha, Elem f) {
    return map_index(compose(alpha, map_at(n, alpha.dom(), f)));
  });
}

GammaMap representable_map(PointedMap const &alpha, std::size_t bound)
{
  std::size_t m = alpha.dom(), n = alpha.cod();
  GammaMap theta;
  for (std::size_t k = 0; k <= bound; ++k) {
    std::size_t count = hom_count(n, k);
    std::vector<Elem> table(count);
    for (std::size_t f = 0; f < count; ++f)
      table[f] = map_index(compose(map_at(n, k, f), alpha));
    theta.components.emplace_back(hom_count(m, k) - 1, std::move(table));
  }
  return theta;
}

GammaMap yoneda_map(GammaSet const &a, std::size_t n, Elem x)
{
  if (n > a.bound())
    throw DegreeMismatch("Yoneda degree exceeds the bound");
  GammaMap theta;
  for (std::size_t k = 0; k <= a.bound(); ++k) {
    std::size_t count = hom_count(n, k);
    std::vector<Elem> table(count);
    for (std::size_t f = 0; f < count; ++f)
      table[f] = a.act(n, k, f, x);
    theta.components.emplace_back(a.level(k), std::move(table));
  }
  return theta;
}

GammaSubobject::GammaSubobject(GammaSet const &a, bool full)
{
  for (std::size_t k = 0; k <= a.bound(); ++k) {
    std::vector<bool> level(a.level(k) + 1, full);
    level[0] = true;
    _member.push_back(std::move(level));
  }
}

std::size_t GammaSubobject::cardinality(std::size_t k) const
{ return static_cast<std::size_t>(
      std::count(_member[k].begin(), _member[k].end(), true)); }

std::vector<Elem> GammaSubobject::elements(std::size_t k) const
{
  std::vector<Elem> result;
  for (Elem x = 1; x < _member[k].size(); ++x) {
    if (_member[k][x])
      result.push_back(x);
  }
  return result;
}

bool GammaSubobject::subset_of(GammaSubobject const &other) const
{
  if (_member.size() != other._member.size())
    return false;
  for (std::size_t k = 0; k < _member.size(); ++k) {
    for (std::size_t x = 0; x < _member[k].size(); ++x) {
      if (_member[k][x] && !other._member[k][x])
        return false;
    }
  }
  return true;
}

GammaSubobject subobject_generated(
    GammaSet const &a,
    std::vector<std::pair<std::size_t, Elem>> const &generators)
{
  GammaSubobject s(a);
  std::vector<std::pair<std::size_t, Elem>> todo;
  for (auto const &[k, x] : generators) {
    if (k > a.bound() || x > a.level(k))
      throw std::invalid_argument("generator out of range");
    if (!s.contains(k, x)) {
      s.insert(k, x);
      todo.emplace_back(k, x);
    }
  }
  while (!todo.empty()) {
    auto [m, x] = todo.back();
    todo.pop_back();
    for (std::size_t n = 0; n <= a.bound(); ++n) {
      std::size_t count = hom_count(m, n);
      for (std::size_t h = 0; h < count; ++h) {
        Elem y = a.act(m, n, h, x);
        if (!s.contains(n, y)) {
          s.insert(n, y);
          todo.emplace_back(n, y);
        }
      }
    }
  }
  return s;
}

bool is_closed(GammaSet const &a, GammaSubobject const &s)
{
  for (std::size_t m = 0; m <= a.bound(); ++m) {
    auto elems = s.elements(m);
    for (std::size_t n = 0; n <= a.bound(); ++n) {
      std::size_t count = hom_count(m, n);
      for (std::size_t h = 0; h < count; ++h) {
        for (Elem x : elems) {
          if (!s.contains(n, a.act(m, n, h, x)))
            return false;
        }
      }
    }
  }
  return true;
}

GammaSubobject skeleton(GammaSet const &a, std::size_t n)
{
  std::vector<std::pair<std::size_t, Elem>> gens;
  for (std::size_t k = 1; k <= std::min(n, a.bound()); ++k) {
    for (Elem x = 1; x <= a.level(k); ++x)
      gens.emplace_back(k, x);
  }
  return subobject_generated(a, gens);
}

bool generated_in_degree(GammaSet const &a, std::size_t d)
{ return skeleton(a, d) == GammaSubobject(a, true); }

Latching latching(GammaSet const &a, std::size_t n)
{
  if (n == 0 || n > a.bound())
    throw DegreeMismatch("latching degree out of range");
  GammaSubobject lower = skeleton(a, n - 1);
  Latching result;
  result.member.assign(a.level(n) + 1, false);
  for (Elem x = 0; x <= a.level(n); ++x)
    result.member[x] = lower.contains(n, x);
  result.action.carrier = FinPointedSet(a.level(n));
  result.action.degree = n;
  result.action.permutations = symmetric_group(n);
  for (auto const &p : result.action.permutations)
    result.action.acts.push_back(a.action(p));
  return result;
}

GammaSubobject boundary(std::size_t n, std::size_t bound)
{
  if (n == 0)
    return GammaSubobject(representable(0, bound));
  return skeleton(representable(n, bound), n - 1);
}

GammaSubobject outer_boundary(std::size_t n, std::size_t bound)
{
  GammaSet g = representable(n, bound);
  GammaSubobject s(g);
  for (std::size_t k = 0; k <= bound; ++k) {
    for (Elem f = 1; f <= g.level(k); ++f) {
      PointedMap fm = map_at(n, k, f);
      auto const &t = fm.table();
      if (std::find(t.begin() + 1, t.end(), Elem{0}) != t.end())
        s.insert(k, f);
    }
  }
  return s;
}

SubGammaSet sub_gamma_set(GammaSet const &a, GammaSubobject const &s)
{
  if (!is_closed(a, s))
    throw SubobjectNotClosed("subset is not closed under the action");
  std::size_t d = a.bound();
  SubGammaSet result;
  std::vector<std::vector<Elem>> members(d + 1);
  std::vector<std::size_t> levels(d + 1);
  result.position.resize(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    members[k] = s.elements(k);
    members[k].insert(members[k].begin(), 0);
    levels[k] = members[k].size() - 1;
    result.position[k].assign(a.level(k) + 1, 0);
    for (Elem i = 0; i < members[k].size(); ++i)
      result.position[k][members[k][i]] = i;
    result.inclusion.components.emplace_back(a.level(k), members[k]);
  }
  result.set = GammaSet::tabulate(
      levels, [&](PointedMap const &alpha, Elem i) {
        Elem y = a.act(alpha, members[alpha.dom()][i]);
        return result.position[alpha.cod()][y];
      });
  return result;
}

GammaSubobject restrict_subobject(SubGammaSet const &t,
                                  GammaSubobject const &s)
{
  GammaSubobject r(t.set);
  for (std::size_t k = 0; k <= t.set.bound(); ++k) {
    for (Elem i = 1; i <= t.set.level(k); ++i) {
      if (s.contains(k, t.inclusion(k, i)))
        r.insert(k, i);
    }
  }
  return r;
}

namespace {

// Builds the quotient Gamma-set from levelwise projections; the action is
// read off first-occurrence witnesses and checked on every element.
GammaQuotient induce_quotient(GammaSet const &a, std::vector<Quotient> q)
{
  std::size_t d = a.bound();
  std::vector<std::size_t> levels(d + 1);
  std::vector<std::vector<Elem>> witness(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    levels[k] = q[k].set.size();
    witness[k].assign(levels[k] + 1, 0);
    for (Elem x = a.level(k); x >= 1; --x)
      witness[k][q[k].projection(x)] = x;
  }

  for (std::size_t m = 0; m <= d; ++m) {
    for (std::size_t n = 0; n <= d; ++n) {
      std::size_t count = hom_count(m, n);
      for (std::size_t h = 0; h < count; ++h) {
        for (Elem x = 1; x <= a.level(m); ++x) {
          Elem lhs = q[n].projection(a.act(m, n, h, x));
          Elem rhs = q[n].projection(
              a.act(m, n, h, witness[m][q[m].projection(x)]));
          if (lhs != rhs)
            throw SubobjectNotClosed("relation is not compatible with " +
                                     std::to_string(m) + ">" +
                                     std::to_string(n) + " map " +
                                     std::to_string(h));
        }
      }
    }
  }

  GammaQuotient result;
  result.set = GammaSet::tabulate(
      levels, [&](PointedMap const &alpha, Elem c) {
        return q[alpha.cod()].projection(
            a.act(alpha, witness[alpha.dom()][c]));
      });
  for (auto &qk : q)
    result.projection.components.push_back(std::move(qk.projection));
  return result;
}

} // anonymous namespace

GammaQuotient quotient_gamma(GammaSet const &a, GammaSubobject const &s)
{
  if (!is_closed(a, s))
    throw SubobjectNotClosed("collapsed subset is not a subobject");
  std::vector<Quotient> q;
  for (std::size_t k = 0; k <= a.bound(); ++k)
    q.push_back(collapse_subset(FinPointedSet(a.level(k)), s.elements(k)));
  return induce_quotient(a, std::move(q));
}

GammaQuotient quotient_by_congruence(
    GammaSet const &a,
    std::vector<std::vector<std::pair<Elem, Elem>>> const &relations)
{
  if (relations.size() != a.bound() + 1)
    throw DegreeMismatch("one relation list per degree expected");
  std::vector<Quotient> q;
  for (std::size_t k = 0; k <= a.bound(); ++k)
    q.push_back(quotient_by_relations(FinPointedSet(a.level(k)), relations[k]));
  return induce_quotient(a, std::move(q));
}

GammaQuotient orbit_quotient(GammaSet const &a,
                             std::vector<GammaMap> const &automorphisms)
{
  std::vector<std::vector<std::pair<Elem, Elem>>> rel(a.bound() + 1);
  for (auto const &theta : automorphisms) {
    for (std::size_t k = 0; k <= a.bound(); ++k) {
      for (Elem x = 1; x <= a.level(k); ++x)
        rel[k].emplace_back(x, theta(k, x));
    }
  }
  return quotient_by_congruence(a, rel);
}

GammaWedge wedge(GammaSet const &a, GammaSet const &b)
{
  if (a.bound() != b.bound())
    throw DegreeMismatch("wedge of Gamma-sets with different bounds");
  std::size_t d = a.bound();
  std::vector<std::size_t> levels(d + 1);
  GammaWedge result;
  for (std::size_t k = 0; k <= d; ++k) {
    levels[k] = a.level(k) + b.level(k);
    WedgeSum w = wedge(FinPointedSet(a.level(k)), FinPointedSet(b.level(k)));
    result.left.components.push_back(w.left);
    result.right.components.push_back(w.right);
  }
  result.set = GammaSet::tabulate(levels, [&](PointedMap const &alpha, Elem x) {
    std::size_t m = alpha.dom(), n = alpha.cod();
    if (x <= a.level(m))
      return a.act(alpha, x);
    Elem y = b.act(alpha, x - a.level(m));
    return y == 0 ? Elem{0} : a.level(n) + y;
  });
  return result;
}

GammaSet truncate(GammaSet const &a, std::size_t bound)
{
  if (bound > a.bound())
    throw DegreeMismatch("truncation above the stored bound");
  std::vector<std::size_t> levels(a.levels().begin(),
                                  a.levels().begin() + bound + 1);
  GammaSet::Tables tables(bound + 1);
  for (std::size_t m = 0; m <= bound; ++m)
    tables[m].assign(a.tables()[m].begin(), a.tables()[m].begin() + bound + 1);
  return GammaSet(std::move(levels), std::move(tables));
}

std::optional<CofibrancyWitness> cofibrancy_witness(GammaSet const &a)
{
  for (std::size_t n = 1; n <= a.bound(); ++n) {
    Latching lat = latching(a, n);
    std::vector<Elem> free_part;
    for (Elem x = 1; x <= a.level(n); ++x) {
      if (!lat.member[x])
        free_part.push_back(x);
    }
    if (sigma_is_free(lat.action, free_part))
      continue;
    for (Elem x : free_part) {
      for (std::size_t s = 1; s < lat.action.permutations.size(); ++s) {
        if (lat.action.acts[s](x) == x)
          return CofibrancyWitness{n, x, lat.action.permutations[s]};
      }
    }
  }
  return std::nullopt;
}

bool is_cofibrant(GammaSet const &a)
{ return !cofibrancy_witness(a).has_value(); }

SphereRemark sphere_remark_check(std::size_t bound)
{
  SphereRemark result;
  result.bound = bound;
  result.report.suite = "sphere-remark";
  if (bound < 2) {
    result.vacuous = true;
    result.iso = true;
    return result;
  }

  GammaSet g2 = representable(2, bound);
  GammaSubobject bd = boundary(2, bound);
  GammaSubobject ob = outer_boundary(2, bound);
  result.report.check(ob.subset_of(bd), "outer-boundary-inside-boundary");

  SubGammaSet t = sub_gamma_set(g2, bd);
  GammaQuotient q = quotient_gamma(t.set, restrict_subobject(t, ob));
  for (std::size_t k = 0; k <= bound; ++k) {
    result.boundary_levels.push_back(bd.cardinality(k));
    result.outer_levels.push_back(ob.cardinality(k));
    result.quotient_levels.push_back(q.set.level(k) + 1);
  }

  // The covering face 1 -> 2 is the pointed map 2 -> 1 sending both to 1.
  Elem face = map_index(PointedMap(1, {0, 1, 1}));
  Elem cls = q.projection(1, t.position[1][face]);
  GammaSet g1 = representable(1, bound);
  GammaMap theta = yoneda_map(q.set, 1, cls);
  result.report.merge(check_natural(g1, q.set, theta));
  result.report.check(is_levelwise_bijective(theta), "levelwise-bijective");
  result.iso = result.report.ok();
  return result;
}

bool refines(Partition const &finer, Partition const &coarser)
{
  for (auto const &block : finer) {
    bool inside = false;
    for (auto const &big : coarser) {
      if (std::includes(big.begin(), big.end(), block.begin(), block.end())) {
        inside = true;
        break;
      }
    }
    if (!inside)
      return false;
  }
  return true;
}

namespace {

// Zero-free surjections n -> k are the covering non-degenerate elements;
// the canonical one in each orbit numbers blocks by their least element.
bool is_canonical_cover(PointedMap const &f)
{
  Elem top = 0;
  for (Elem j = 1; j <= f.dom(); ++j) {
    if (f(j) == 0 || f(j) > top + 1)
      return false;
    top = std::max(top, f(j));
  }
  return top == f.cod();
}

Partition blocks_of(PointedMap const &f)
{
  Partition p(f.cod());
  for (Elem j = 1; j <= f.dom(); ++j)
    p[f(j) - 1].push_back(j);
  return p;
}

} // anonymous namespace

PartitionCorrespondence partition_correspondence(std::size_t n,
                                                 std::size_t bound)
{
  if (bound < n)
    throw DegreeMismatch("partition correspondence needs bound >= n");
  PartitionCorrespondence result;
  result.n = n;
  result.report.suite = "partitions";
  GammaSet g = representable(n, bound);
  GammaSubobject ob = outer_boundary(n, bound);

  for (std::size_t k = 1; k <= n; ++k) {
    for (Elem f = 1; f <= g.level(k); ++f) {
      PointedMap fm = map_at(n, k, f);
      if (!fm.is_surjective())
        continue;
      auto const &t = fm.table();
      if (std::find(t.begin() + 1, t.end(), Elem{0}) != t.end())
        continue;
      if (!is_canonical_cover(fm))
        continue;
      GammaSubobject s = subobject_generated(g, {{k, f}});
      result.report.check(!s.subset_of(ob), "not-in-outer-boundary",
                          json{{"degree", k}, {"element", f}});
      result.cells.push_back({blocks_of(fm), f, std::move(s)});
    }
  }

  // Every orbit member generates the same subobject as its representative.
  for (auto const &cell : result.cells) {
    std::size_t k = cell.blocks.size();
    PointedMap fm = map_at(n, k, cell.element);
    for (auto const &sigma : symmetric_group(k)) {
      Elem other = map_index(compose(sigma, fm));
      result.report.check(subobject_generated(g, {{k, other}}) ==
                              cell.subobject,
                          "orbit-invariance",
                          json{{"degree", k}, {"element", other}});
    }
  }

  for (auto const &p : result.cells) {
    for (auto const &q : result.cells) {
      bool contained = p.subobject.subset_of(q.subobject);
      bool finer = refines(q.blocks, p.blocks);
      result.report.check(contained == finer, "order-reversing",
                          json{{"p", p.blocks}, {"q", q.blocks}});
      if (&p != &q)
        result.report.check(!(p.subobject == q.subobject), "injective",
                            json{{"p", p.blocks}, {"q", q.blocks}});
    }
  }
  return result;
}

SphereCofiber cofiber_sequence_spheres(std::size_t n, std::size_t bound)
{
  SphereCofiber result;
  result.n = n;
  result.report.suite = "cofiber-sequence";
  GammaSet g = representable(n, bound);
  GammaSubobject bd = boundary(n, bound);
  GammaSubobject ob = outer_boundary(n, bound);
  result.report.check(ob.subset_of(bd), "outer-boundary-inside-boundary");

  GammaQuotient middle = quotient_gamma(g, ob);
  GammaQuotient last = quotient_gamma(g, bd);
  SubGammaSet t = sub_gamma_set(g, bd);
  GammaQuotient first = quotient_gamma(t.set, restrict_subobject(t, ob));

  std::size_t d = bound;
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<Elem> inc(first.set.level(k) + 1, 0);
    for (Elem i = 1; i <= t.set.level(k); ++i) {
      Elem c = first.projection(k, i);
      Elem image = middle.projection(k, t.inclusion(k, i));
      if (c != 0 && inc[c] != 0)
        result.report.check(inc[c] == image, "inclusion-well-defined");
      inc[c] = image;
    }
    result.inclusion.components.emplace_back(middle.set.level(k), inc);

    std::vector<Elem> proj(middle.set.level(k) + 1, 0);
    std::vector<bool> seen(middle.set.level(k) + 1, false);
    for (Elem x = 1; x <= g.level(k); ++x) {
      Elem c = middle.projection(k, x);
      Elem image = last.projection(k, x);
      if (seen[c])
        result.report.check(proj[c] == image, "projection-well-defined");
      seen[c] = true;
      proj[c] = image;
    }
    result.projection.components.emplace_back(last.set.level(k), proj);
  }

  result.report.merge(
      check_natural(first.set, middle.set, result.inclusion));
  result.report.merge(
      check_natural(middle.set, last.set, result.projection));
  for (std::size_t k = 0; k <= d; ++k) {
    auto const &i = result.inclusion.components[k];
    auto const &p = result.projection.components[k];
    result.report.check(i.is_injective(), "inclusion-injective",
                        json{{"degree", k}});
    result.report.check(p.is_surjective(), "projection-surjective",
                        json{{"degree", k}});
    std::vector<bool> in_image(middle.set.level(k) + 1, false);
    for (Elem c = 0; c <= first.set.level(k); ++c)
      in_image[i(c)] = true;
    for (Elem c = 0; c <= middle.set.level(k); ++c)
      result.report.check(in_image[c] == (p(c) == 0), "exact",
                          json{{"degree", k}, {"element", c}});
  }

  // The first term is the union of the images of the proper partitions,
  // each a copy of the sphere of lower degree.
  std::vector<std::vector<bool>> covered(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    covered[k].assign(middle.set.level(k) + 1, false);
    covered[k][0] = true;
  }
  for (std::size_t k = 1; k < n && k <= d; ++k) {
    GammaSet gk = representable(k, bound);
    GammaQuotient sk = quotient_gamma(gk, outer_boundary(k, bound));
    for (Elem f = 1; f <= g.level(k); ++f) {
      PointedMap fm = map_at(n, k, f);
      if (!is_canonical_cover(fm))
        continue;
      GammaMap psi;
      bool well_defined = true;
      for (std::size_t j = 0; j <= d; ++j) {
        std::vector<Elem> table(sk.set.level(j) + 1, 0);
        std::vector<bool> seen(sk.set.level(j) + 1, false);
        for (Elem h = 1; h <= gk.level(j); ++h) {
          Elem c = sk.projection(j, h);
          Elem image = middle.projection(
              j, map_index(compose(map_at(k, j, h), fm)));
          if (seen[c] && table[c] != image)
            well_defined = false;
          seen[c] = true;
          table[c] = image;
          covered[j][image] = true;
        }
        psi.components.emplace_back(middle.set.level(j), std::move(table));
      }
      json w{{"partition", blocks_of(fm)}};
      result.report.check(well_defined, "partition-image-well-defined", w);
      result.report.check(check_natural(sk.set, middle.set, psi).ok(),
                          "partition-image-natural", w);
      bool injective = std::all_of(
          psi.components.begin(), psi.components.end(),
          [](PointedMap const &c) { return c.is_injective(); });
      result.report.check(injective, "partition-image-injective", w);
    }
  }
  for (std::size_t k = 0; k <= d; ++k) {
    auto const &i = result.inclusion.components[k];
    std::vector<bool> in_image(middle.set.level(k) + 1, false);
    for (Elem c = 0; c <= first.set.level(k); ++c)
      in_image[i(c)] = true;
    result.report.check(in_image == covered[k], "union-of-partition-images",
                        json{{"degree", k}});
  }

  result.first = std::move(first.set);
  result.middle = std::move(middle.set);
  result.last = std::move(last.set);
  return result;
}

FiltrationCheck filtration_quotient_check(GammaSet const &a, std::size_t n)
{
  if (n == 0 || n > a.bound())
    throw DegreeMismatch("filtration degree out of range");
  if (auto w = cofibrancy_witness(a))
    throw NotCofibrant("element " + std::to_string(w->element) +
                       " in degree " + std::to_string(w->degree) +
                       " has a non-trivial stabiliser");

  FiltrationCheck result;
  result.n = n;
  result.report.suite = "filtration-quotient";
  std::size_t d = a.bound();

  SubGammaSet t = sub_gamma_set(a, skeleton(a, n));
  GammaQuotient lhs = quotient_gamma(t.set,
                                     restrict_subobject(t, skeleton(a, n - 1)));

  Latching lat = latching(a, n);
  std::vector<Elem> cells{0};
  std::vector<Elem> cell_of(a.level(n) + 1, 0);
  for (Elem x = 1; x <= a.level(n); ++x) {
    if (!lat.member[x]) {
      cell_of[x] = cells.size();
      cells.push_back(x);
    }
  }
  std::size_t r = cells.size() - 1;

  GammaSet g = representable(n, d);
  GammaQuotient gq = quotient_gamma(g, boundary(n, d));
  std::vector<std::vector<Elem>> lift(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    lift[k].assign(gq.set.level(k) + 1, 0);
    for (Elem x = g.level(k); x >= 1; --x)
      lift[k][gq.projection(k, x)] = x;
  }
  auto perms = symmetric_group(n);

  std::vector<Quotient> coinv(d + 1);
  std::vector<std::size_t> levels(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    std::size_t s = gq.set.level(k);
    std::vector<std::pair<Elem, Elem>> rel;
    for (std::size_t p = 0; p < perms.size(); ++p) {
      auto const &sigma_a = lat.action.acts[p];
      for (Elem i = 1; i <= r; ++i) {
        Elem j = cell_of[sigma_a(cells[i])];
        for (Elem c = 1; c <= s; ++c) {
          PointedMap x = map_at(n, k, lift[k][c]);
          Elem c2 = gq.projection(k, map_index(compose(x, perms[p])));
          rel.emplace_back(smash_pair(s, j, c), smash_pair(s, i, c2));
        }
      }
    }
    coinv[k] = quotient_by_relations(FinPointedSet(r * s), rel);
    levels[k] = coinv[k].set.size();
  }

  std::vector<std::vector<Elem>> witness(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    witness[k].assign(levels[k] + 1, 0);
    for (Elem z = r * gq.set.level(k); z >= 1; --z)
      witness[k][coinv[k].projection(z)] = z;
  }
  result.rhs = GammaSet::tabulate(levels, [&](PointedMap const &alpha, Elem c) {
    std::size_t m = alpha.dom(), k = alpha.cod();
    std::size_t sm = gq.set.level(m), sk = gq.set.level(k);
    Elem z = witness[m][c];
    Elem i = (z - 1) / sm + 1, x = (z - 1) % sm + 1;
    return coinv[k].projection(smash_pair(sk, i, gq.set.act(alpha, x)));
  });

  // [cell smash x] |-> class of a(x)(cell)
  auto image_of = [&](std::size_t k, Elem i, Elem c) -> Elem {
    PointedMap x = map_at(n, k, lift[k][c]);
    Elem y = a.act(x, cells[i]);
    return lhs.projection(k, t.position[k][y]);
  };

  for (std::size_t k = 0; k <= d; ++k) {
    std::size_t s = gq.set.level(k);
    std::vector<Elem> table(levels[k] + 1, 0);
    std::vector<bool> seen(levels[k] + 1, false);
    std::map<Elem, std::pair<Elem, Elem>> plain_hit;
    for (Elem i = 1; i <= r; ++i) {
      for (Elem c = 1; c <= s; ++c) {
        Elem z = smash_pair(s, i, c);
        Elem cls = coinv[k].projection(z);
        Elem y = image_of(k, i, c);
        if (seen[cls] && table[cls] != y)
          result.report.check(false, "comparison-well-defined",
                              json{{"degree", k}, {"cell", z}});
        seen[cls] = true;
        table[cls] = y;
        if (y == 0)
          continue;
        auto [it, fresh] = plain_hit.emplace(y, std::make_pair(i, c));
        if (!fresh && result.plain_injective) {
          result.plain_injective = false;
          auto const &[i0, c0] = it->second;
          result.plain_witness = json{
              {"degree", k},
              {"image", y},
              {"first", {{"cell", cells[i0]}, {"operator", lift[k][c0]}}},
              {"second", {{"cell", cells[i]}, {"operator", lift[k][c]}}}};
        }
      }
    }
    result.comparison.components.emplace_back(lhs.set.level(k),
                                              std::move(table));
  }

  result.report.merge(validate(result.rhs));
  result.report.merge(check_natural(result.rhs, lhs.set, result.comparison));
  result.report.check(is_levelwise_bijective(result.comparison),
                      "comparison-bijective");
  result.iso = result.report.ok();
  result.lhs = std::move(lhs.set);
  return result;
}

} // namespace gammacalc

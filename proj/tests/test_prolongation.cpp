#include <doctest.h>

#include <set>

#include "gammacalc/errors.hpp"
#include "gammacalc/gamma_set.hpp"
#include "gammacalc/prolongation.hpp"
#include "gammacalc/theories.hpp"
#include "oracles.hpp"

using namespace gammacalc;

namespace {

// Y smash X -> X smash Y.
PointedMap swap_map(std::size_t y, std::size_t x)
{
  std::vector<Elem> t(x * y + 1, 0);
  for (Elem i = 1; i <= y; ++i)
    for (Elem j = 1; j <= x; ++j)
      t[smash_pair(x, i, j)] = smash_pair(y, j, i);
  return PointedMap(x * y, std::move(t));
}

GammaSet outer_quotient()
{
  GammaSubobject ob = outer_boundary(2, 3);
  return quotient_gamma(representable(2, 3), ob).set;
}

GammaSet powerset(std::size_t bound)
{ return tabulate(PowersetFormula(), bound); }

} // namespace

TEST_CASE("co-Yoneda: prolongation agrees with the Gamma-set in range")
{
  std::vector<GammaSet> samples{
      representable(2, 3), sub_gamma_set(representable(2, 3), boundary(2, 3)).set,
      outer_quotient(), powerset(3)};
  for (auto const &a : samples) {
    CHECK(validate(a).ok());
    for (std::size_t k = 0; k <= a.bound(); ++k) {
      CoendTable t = prolong(a, k);
      CHECK(t.classes().size() == a.level(k));
      std::set<Elem> hit;
      Elem id = map_index(PointedMap::identity(k));
      for (Elem x = 1; x <= a.level(k); ++x)
        hit.insert(t.class_of(k, x, id));
      CHECK(hit.size() == a.level(k));
      CHECK_FALSE(hit.count(0));
      // Every representative [a, y] is the class of A(y)(a).
      for (std::size_t i = 1; i < t.node_count(); ++i) {
        CoendElement e = t.node(i);
        Elem image = a.act(map_at(e.degree, k, e.eval), e.label);
        CHECK(t.class_of_node(i) == (image == 0 ? 0 : t.class_of(k, image, id)));
      }
    }
  }
}

TEST_CASE("prolonged representables are smash powers")
{
  for (std::size_t n = 0; n <= 3; ++n) {
    GammaSet g = representable(n, 3);
    for (std::size_t x = 0; x <= 5; ++x) {
      CoendTable t = prolong(g, x, n < 3 ? n : 3);
      CHECK(t.classes().cardinality() == oracle::power(x + 1, n));
      if (n == 0)
        continue;
      // [id_n, y] for the maps y: n -> X enumerates the classes once.
      std::set<Elem> seen;
      Elem id = map_index(PointedMap::identity(n));
      for (std::size_t h = 1; h < hom_count(n, x); ++h) {
        Elem c = t.class_of(n, id, h);
        CHECK(c != 0);
        seen.insert(c);
      }
      CHECK(seen.size() == t.classes().size());
    }
  }
}

TEST_CASE("the outer quotient at two points")
{
  GammaSet q = outer_quotient();
  CHECK(prolong(q, 2).classes().cardinality() == 5);
  for (std::size_t x = 0; x <= 4; ++x)
    CHECK(prolong(q, x, 2).classes().cardinality() == x * x + 1);
}

TEST_CASE("prolong_map is a functor")
{
  std::vector<GammaSet> samples{representable(2, 2), outer_quotient(),
                                powerset(2)};
  for (auto const &a : samples) {
    std::size_t d = presentation_degree(a);
    std::vector<CoendTable> t;
    for (std::size_t x = 0; x <= 3; ++x)
      t.push_back(prolong(a, x, d));
    for (std::size_t x = 0; x <= 3; ++x) {
      CHECK(prolong_map(a, t[x], t[x], PointedMap::identity(x)) ==
            PointedMap::identity(t[x].classes().size()));
      for (std::size_t y = 0; y <= 3; ++y)
        for (auto const &ft : oracle::all_maps(x, y)) {
          PointedMap f(y, ft);
          PointedMap pf = prolong_map(a, t[x], t[y], f);
          for (std::size_t z = 0; z <= 2; ++z)
            for (auto const &gt : oracle::all_maps(y, z)) {
              PointedMap g(z, gt);
              CHECK(prolong_map(a, t[x], t[z], compose(g, f)) ==
                    compose(prolong_map(a, t[y], t[z], g), pf));
            }
        }
    }
  }
}

TEST_CASE("prolongation extends the action")
{
  GammaSet a = powerset(3);
  std::vector<CoendTable> t;
  for (std::size_t k = 0; k <= 3; ++k)
    t.push_back(prolong(a, k));
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t l = 0; l <= 3; ++l)
      for (std::size_t h = 0; h < hom_count(k, l); ++h) {
        PointedMap f = map_at(k, l, h);
        PointedMap pf = prolong_map(a, t[k], t[l], f);
        Elem idk = map_index(PointedMap::identity(k));
        Elem idl = map_index(PointedMap::identity(l));
        for (Elem x = 1; x <= a.level(k); ++x) {
          Elem image = a.act(f, x);
          CHECK(pf(t[k].class_of(k, x, idk)) ==
                (image == 0 ? 0 : t[l].class_of(l, image, idl)));
        }
      }
}

TEST_CASE("strength laws")
{
  std::vector<GammaSet> samples{representable(2, 2), outer_quotient(),
                                powerset(2)};
  for (auto const &a : samples) {
    std::size_t d = presentation_degree(a);
    auto t = [&](std::size_t x) { return prolong(a, x, d); };
    for (std::size_t y = 0; y <= 3; ++y) {
      CoendTable ty = t(y);
      CHECK(strength(1, ty, ty) == PointedMap::identity(ty.classes().size()));
      CHECK(strength(0, ty, t(0)).dom() == 0);
      for (std::size_t x1 = 0; x1 <= 2; ++x1)
        for (std::size_t x2 = 0; x2 <= 2; ++x2) {
          CoendTable t2 = t(x2 * y), t12 = t(x1 * x2 * y);
          PointedMap inner = smash_maps(PointedMap::identity(x1),
                                        strength(x2, ty, t2));
          CHECK(compose(strength(x1, t2, t12), inner) ==
                strength(x1 * x2, ty, t12));
        }
      for (std::size_t x = 0; x <= 3; ++x) {
        CoendTable tx = t(x), txy = t(x * y), tyx = t(y * x);
        PointedMap s = strength(y, tx, tyx);
        PointedMap swap = swap_map(tx.classes().size(), y);
        PointedMap flip = prolong_map(a, tyx, txy, swap_map(y, x));
        CHECK(costrength(tx, y, txy) == compose(flip, compose(s, swap)));
      }
    }
  }
}

TEST_CASE("Day smash of representables")
{
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) {
      DaySmash day = day_smash(representable(a, 2), representable(b, 2), a, b, 3);
      CHECK(validate(day.set).ok());
      for (std::size_t k = 0; k <= 3; ++k)
        CHECK(day.set.level(k) + 1 == oracle::power(k + 1, a * b));
    }
}

TEST_CASE("Day smash unit and zero")
{
  std::vector<GammaSet> samples{representable(2, 2), powerset(2)};
  for (auto const &a : samples) {
    std::size_t da = presentation_degree(a);
    GammaSet one = representable(1, 2);
    DaySmash day = day_smash(a, one, da, 1, 2);
    BinaturalFamily unit;
    unit.da = da;
    unit.db = 1;
    for (std::size_t m = 0; m <= da; ++m)
      for (std::size_t n = 0; n <= 1; ++n) {
        std::vector<Elem> table(a.level(m) * one.level(n) + 1, 0);
        for (Elem x = 1; x <= a.level(m); ++x)
          for (Elem y = 1; y <= one.level(n); ++y) {
            PointedMap g = smash_maps(PointedMap::identity(m), map_at(1, n, y));
            table[smash_pair(one.level(n), x, y)] = a.act(g, x);
          }
        unit.maps.emplace_back(a.level(m * n), std::move(table));
      }
    GammaMap h = smash_pair(a, one, day, a, unit);
    CHECK(is_isomorphism(day.set, a, h));

    DaySmash zero = day_smash(a, representable(0, 2), da, 0, 2);
    for (std::size_t k = 0; k <= 2; ++k)
      CHECK(zero.set.level(k) == 0);
  }
}

TEST_CASE("binatural families and the Day smash")
{
  GammaSet a = representable(1, 2), b = representable(2, 2);
  GammaSet c = representable(2, 2);
  DaySmash day = day_smash(a, b, 1, 2);
  BinaturalFamily family;
  family.da = 1;
  family.db = 2;
  for (std::size_t m = 0; m <= 1; ++m)
    for (std::size_t n = 0; n <= 2; ++n) {
      std::vector<Elem> table(a.level(m) * b.level(n) + 1, 0);
      for (Elem x = 1; x <= a.level(m); ++x)
        for (Elem y = 1; y <= b.level(n); ++y)
          table[smash_pair(b.level(n), x, y)] =
              map_index(smash_maps(map_at(1, m, x), map_at(2, n, y)));
      family.maps.emplace_back(c.level(m * n), std::move(table));
    }
  CHECK(check_binatural(a, b, c, family).ok());
  GammaMap h = smash_pair(a, b, day, c, family);
  CHECK(is_isomorphism(day.set, c, h));

  BinaturalFamily back = smash_unpair(a, b, day, c, h);
  CHECK(back.maps == family.maps);

  BinaturalFamily bad = family;
  std::vector<Elem> t = bad.maps[1 * 3 + 1].table();
  std::swap(t[1], t[2]);
  bad.maps[1 * 3 + 1] = PointedMap(c.level(1), t);
  CHECK_FALSE(check_binatural(a, b, c, bad).ok());
  CHECK_THROWS_AS(smash_pair(a, b, day, c, bad), BinaturalityViolation);
}

TEST_CASE("circle products of representables")
{
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n) {
      CircleProduct circ = circle(representable(m, 2), representable(n, 2), m);
      CHECK(validate(circ.set).ok());
      for (std::size_t k = 0; k <= 2; ++k)
        CHECK(circ.set.level(k) + 1 == oracle::power(k + 1, m * n));
    }
}

TEST_CASE("assembly")
{
  for (std::size_t a = 1; a <= 2; ++a)
    for (std::size_t b = 1; b <= 2; ++b) {
      std::size_t bound = a * b;
      GammaSet ga = representable(a, bound), gb = representable(b, bound);
      Assembly as = assembly(ga, gb, a, b);
      CHECK(check_natural(as.day.set, as.circ.set, as.map).ok());
      CHECK(is_levelwise_bijective(as.map));
      BinaturalFamily f = assembly_family(ga, gb, as.circ, a, b);
      CHECK(check_binatural(ga, gb, as.circ.set, f).ok());
    }

  GammaSet p = powerset(2);
  Assembly as = assembly(p, p, 2, 2);
  CHECK(check_natural(as.day.set, as.circ.set, as.map).ok());
  CHECK_FALSE(is_levelwise_bijective(as.map));
  std::vector<std::size_t> day_levels{0, 3, 18}, circ_levels{0, 1, 6};
  CHECK(as.day.set.levels() == day_levels);
  CHECK(as.circ.set.levels() == circ_levels);
  CHECK_FALSE(as.map.components[1].is_bijective());
}

TEST_CASE("prolonging a circle product")
{
  GammaSet g2 = representable(2, 3);
  CircleProduct circ = circle(g2, g2, 2);
  for (std::size_t x = 0; x <= 1; ++x) {
    CircleProlongIso iso = circle_prolong_iso(g2, g2, circ, x);
    CHECK(iso.report.ok());
    CHECK(iso.composite.classes().cardinality() == oracle::power(x + 1, 4));
    CHECK(iso.forward.is_bijective());
    CHECK(compose(iso.backward, iso.forward) ==
          PointedMap::identity(iso.composite.classes().size()));
  }
  CHECK(circle_prolong_iso(g2, g2, circ, 1).composite.classes().cardinality() ==
        16);
}

TEST_CASE("presentation degrees and errors")
{
  CHECK(presentation_degree(representable(2, 3)) == 2);
  CHECK(presentation_degree(representable(0, 3)) == 0);
  CHECK(presentation_degree(powerset(3)) == 3);
  CHECK(presented_in_degree(outer_quotient(), 2));
  CHECK_FALSE(presented_in_degree(outer_quotient(), 1));
  CHECK_THROWS_AS(prolong(powerset(3), 2, 2), NotGenerated);
  CHECK_THROWS_AS(day_smash(powerset(2), powerset(2), 1, 1), NotGenerated);
  CHECK_THROWS_AS(circle(powerset(2), powerset(2), 3), DegreeMismatch);
}

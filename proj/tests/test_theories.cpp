#include <doctest.h>

#include <set>

#include "gammacalc/errors.hpp"
#include "gammacalc/theories.hpp"
#include "oracles.hpp"

using namespace gammacalc;

namespace {

// Bitmask of S x T inside {1..mn} under the lexicographic pairing.
Elem product_mask(std::size_t n, Elem s, Elem t)
{
  Elem out = 0;
  for (Elem i = 1; i <= 16; ++i)
    for (Elem j = 1; j <= n; ++j)
      if ((s >> (i - 1) & 1) && (t >> (j - 1) & 1))
        out |= Elem(1) << ((i - 1) * n + j - 1);
  return out;
}

// Direct image of a subset of {1..m} along a pointed map.
Elem image_mask(PointedMap const &f, Elem s)
{
  Elem out = 0;
  for (Elem i = 1; i <= f.dom(); ++i)
    if ((s >> (i - 1) & 1) && f(i) != 0)
      out |= Elem(1) << (f(i) - 1);
  return out;
}

} // namespace

TEST_CASE("the powerset formula")
{
  PowersetFormula p;
  for (std::size_t k = 0; k <= 4; ++k)
    CHECK(p.level(k) + 1 == oracle::power(2, k));
  CHECK(p.level(2) + 1 == 4);
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n)
      for (auto const &t : oracle::all_maps(m, n)) {
        PointedMap f(n, t);
        for (Elem s = 1; s < (Elem(1) << m); ++s)
          CHECK(p.act(f, s) == image_mask(f, s));
      }
  CHECK_THROWS_AS(p.level(64), SizeGuard);
}

TEST_CASE("prolonged powerset counts subsets")
{
  GammaTheory th = free_semilattice_theory(3);
  for (std::size_t x = 0; x <= 3; ++x)
    CHECK(prolong(th.carrier, x).classes().cardinality() ==
          oracle::power(2, x));
  CHECK(prolong(th.carrier, 2).classes().cardinality() == 4);
}

TEST_CASE("shipped theories validate")
{
  for (std::size_t bound = 1; bound <= 3; ++bound) {
    LawReport r = validate_theory(trivial_theory(bound));
    CHECK(r.ok());
    CHECK(r.checked > 0);
    CHECK(validate_theory(free_semilattice_theory(bound)).ok());
  }
  CHECK(validate_theory(representable_theory(2, 2)).ok());
  CHECK(validate_theory(representable_theory(0, 2)).ok());
}

TEST_CASE("unit law of the powerset theory")
{
  GammaTheory th = free_semilattice_theory(2);
  // u is the singleton {1}; mult of [S, i |-> {i}] is S.
  CHECK(th.unit.components[1](1) == 1);
  for (std::size_t k = 0; k <= 2; ++k)
    for (Elem s = 1; s <= th.carrier.level(k); ++s) {
      std::vector<Elem> z(k + 1, 0);
      for (Elem i = 1; i <= k; ++i)
        z[i] = Elem(1) << (i - 1);
      CHECK(th.formula->substitute(k, s, z, k) == s);
    }
}

TEST_CASE("corrupted multiplication is reported")
{
  GammaTheory th = free_semilattice_theory(2);
  std::vector<Elem> t = th.mult.components[2].table();
  REQUIRE(t.size() > 2);
  std::swap(t[1], t[2]);
  th.mult.components[2] = PointedMap(th.carrier.level(2), t);
  LawReport r = validate_theory(th);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.violations.empty());

  GammaTheory ok = free_semilattice_theory(2);
  GammaMap bad_unit = ok.unit;
  bad_unit.components[1] = PointedMap(ok.carrier.level(1), {0, 0});
  CHECK_FALSE(validate_theory(make_theory("bad-unit", ok.carrier, bad_unit,
                                          ok.mult, 2)).ok());
}

TEST_CASE("the endomorphism ring of the powerset theory")
{
  GammaTheory th = free_semilattice_theory(3);
  EndomorphismRing er = endomorphism_gamma_ring(th);
  CHECK(validate_ring(er.ring).ok());
  CHECK(er.two_path.ok());
  CHECK(er.two_path.checked > 0);
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n) {
      if (!er.ring.defined(m, n))
        continue;
      PointedMap const &mult = er.ring.at(m, n);
      std::size_t ln = th.carrier.level(n);
      for (Elem s = 1; s <= th.carrier.level(m); ++s)
        for (Elem t = 1; t <= ln; ++t)
          CHECK(mult(smash_pair(ln, s, t)) == product_mask(n, s, t));
    }
}

TEST_CASE("the trivial theory gives the unit ring")
{
  GammaTheory th = trivial_theory(3);
  EndomorphismRing er = endomorphism_gamma_ring(th);
  CHECK(validate_ring(er.ring).ok());
  CHECK(er.two_path.ok());
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n) {
      if (!er.ring.defined(m, n))
        continue;
      std::size_t ln = th.carrier.level(n);
      for (Elem x = 1; x <= th.carrier.level(m); ++x)
        for (Elem y = 1; y <= ln; ++y)
          CHECK(er.ring.at(m, n)(smash_pair(ln, x, y)) ==
                map_index(smash_maps(map_at(1, m, x), map_at(1, n, y))));
    }
}

TEST_CASE("a corrupted ring fails validation")
{
  EndomorphismRing er = endomorphism_gamma_ring(free_semilattice_theory(2));
  GammaRing ring = er.ring;
  std::vector<Elem> t = ring.at(1, 2).table();
  std::swap(t[1], t[2]);
  ring.mult[1 * 3 + 2] = PointedMap(ring.carrier.level(2), t);
  CHECK_FALSE(validate_ring(ring).ok());
}

TEST_CASE("the assembly is lax monoidal")
{
  GammaTheory p = free_semilattice_theory(2);
  CHECK(check_assembly_lax(p.carrier, p.carrier, 2).ok());
  GammaSet g1 = representable(1, 2), g2 = representable(2, 2);
  CHECK(check_assembly_lax(g1, g2, 1).ok());
  CHECK(check_assembly_lax(g2, g1, 2).ok());
}

TEST_CASE("theory errors")
{
  GammaTheory p = free_semilattice_theory(2);
  GammaMap bad = p.mult;
  bad.components.pop_back();
  CHECK_THROWS_AS(make_theory("bad", p.carrier, p.unit, bad, 2), TheoryInvalid);
}

#include <doctest.h>

#include <random>
#include <set>

#include "gammacalc/errors.hpp"
#include "gammacalc/pointed.hpp"
#include "oracles.hpp"

using namespace gammacalc;

TEST_CASE("gamma objects")
{
  CHECK(gamma_object(0).size() == 0);
  CHECK(gamma_object(0).cardinality() == 1);
  CHECK(gamma_object(1).cardinality() == 2);
  CHECK(gamma_object(3).size() == 3);
  CHECK_THROWS_AS(FinPointedSet(2, {"*", "a"}), std::invalid_argument);
  FinPointedSet labelled(1, {"*", "a"});
  CHECK(labelled.label(1) == "a");
}

TEST_CASE("pointed maps")
{
  CHECK_THROWS_AS(PointedMap(2, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PointedMap(2, {0, 3}), std::invalid_argument);
  PointedMap f(2, {0, 2, 1});
  CHECK(f.is_bijective());
  CHECK(compose(f, f) == PointedMap::identity(2));
  CHECK(inverse(f) == f);
  CHECK_FALSE(PointedMap(2, {0, 1, 1}).is_injective());
}

TEST_CASE("smash pairing is lexicographic")
{
  for (std::size_t x = 0; x <= 4; ++x) {
    for (std::size_t y = 0; y <= 4; ++y) {
      SmashProduct s = smash(gamma_object(x), gamma_object(y));
      CHECK(s.set.size() == x * y);
      std::size_t next = 1;
      for (Elem a = 1; a <= x; ++a) {
        for (Elem b = 1; b <= y; ++b) {
          CHECK(s.pair(a, b) == next);
          CHECK(s.unpair(next) == std::make_pair(a, b));
          ++next;
        }
      }
      for (Elem a = 0; a <= x; ++a)
        CHECK(s.pair(a, 0) == 0);
    }
  }
  // Two sets with three elements each smash to five elements.
  CHECK(smash(gamma_object(2), gamma_object(2)).set.cardinality() == 5);
  CHECK(smash(gamma_object(3), gamma_object(0)).set.cardinality() == 1);
}

TEST_CASE("smash unit, symmetry and associativity")
{
  for (std::size_t y = 0; y <= 4; ++y) {
    SmashProduct s = smash(gamma_object(1), gamma_object(y));
    for (Elem b = 0; b <= y; ++b)
      CHECK(s.pair(1, b) == b);
  }
  for (std::size_t x = 0; x <= 3; ++x) {
    for (std::size_t y = 0; y <= 3; ++y) {
      auto xy = smash(gamma_object(x), gamma_object(y));
      auto yx = smash(gamma_object(y), gamma_object(x));
      for (Elem a = 1; a <= x; ++a) {
        for (Elem b = 1; b <= y; ++b) {
          auto [b2, a2] = yx.unpair(yx.pair(b, a));
          CHECK(xy.pair(a2, b2) == xy.pair(a, b));
        }
      }
      for (std::size_t z = 0; z <= 3; ++z) {
        std::set<Elem> seen;
        for (Elem a = 1; a <= x; ++a) {
          for (Elem b = 1; b <= y; ++b) {
            for (Elem c = 1; c <= z; ++c) {
              Elem left = smash_pair(z, smash_pair(y, a, b), c);
              Elem right = smash_pair(y * z, a, smash_pair(z, b, c));
              CHECK(left == right);
              seen.insert(left);
            }
          }
        }
        CHECK(seen.size() == x * y * z);
      }
    }
  }
}

TEST_CASE("smash of maps is functorial")
{
  for (auto const &ft : oracle::all_maps(2, 2)) {
    for (auto const &gt : oracle::all_maps(2, 1)) {
      PointedMap f(2, ft), g(1, gt);
      PointedMap fg = smash_maps(f, g);
      for (Elem a = 1; a <= 2; ++a)
        for (Elem b = 1; b <= 2; ++b)
          CHECK(fg(smash_pair(2, a, b)) == smash_pair(1, f(a), g(b)));
    }
  }
  CHECK(smash_maps(PointedMap::identity(2), PointedMap::identity(3)) ==
        PointedMap::identity(6));
}

TEST_CASE("wedge")
{
  for (std::size_t x = 0; x <= 3; ++x) {
    for (std::size_t y = 0; y <= 3; ++y) {
      WedgeSum w = wedge(gamma_object(x), gamma_object(y));
      CHECK(w.set.cardinality() == (x + 1) + (y + 1) - 1);
      CHECK(w.left.is_injective());
      CHECK(w.right.is_injective());
      std::set<Elem> image;
      for (Elem a = 0; a <= x; ++a)
        image.insert(w.left(a));
      for (Elem b = 0; b <= y; ++b)
        image.insert(w.right(b));
      CHECK(image.size() == w.set.cardinality());
    }
  }
  // Two sets with two elements each.
  CHECK(wedge(gamma_object(1), gamma_object(1)).set.cardinality() == 3);
  CHECK(wedge(gamma_object(3), gamma_object(0)).set.size() == 3);
}

TEST_CASE("map spaces enumerate all pointed maps")
{
  CHECK(map_space(gamma_object(2), gamma_object(1)).set.cardinality() == 4);
  CHECK(map_space(gamma_object(1), gamma_object(3)).set.cardinality() == 4);
  CHECK(map_space(gamma_object(3), gamma_object(0)).set.cardinality() == 1);
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      MapSpace ms = map_space(gamma_object(m), gamma_object(n));
      auto tables = oracle::all_maps(m, n);
      REQUIRE(ms.set.cardinality() == tables.size());
      CHECK(ms.set.cardinality() == oracle::power(n + 1, m));
      for (std::size_t i = 0; i < tables.size(); ++i) {
        CHECK(ms.map(i).table() == tables[i]);
        CHECK(ms.index(ms.map(i)) == i);
      }
      CHECK(ms.map(0) == PointedMap::zero(m, n));
    }
  }
  CHECK_THROWS_AS(hom_count(40, 40), SizeGuard);
}

TEST_CASE("evaluation agrees with table lookup")
{
  for (std::size_t x = 0; x <= 3; ++x) {
    for (std::size_t y = 0; y <= 3; ++y) {
      PointedMap e = ev(gamma_object(x), gamma_object(y));
      auto tables = oracle::all_maps(x, y);
      for (std::size_t f = 0; f < tables.size(); ++f)
        for (Elem a = 0; a <= x; ++a)
          CHECK(e(smash_pair(x, f, a)) == tables[f][a]);
    }
  }
}

TEST_CASE("coevaluation and evaluation")
{
  CHECK(gamma_coev(gamma_object(0), gamma_object(2)) ==
        PointedMap::zero(0, 0));
  for (std::size_t x = 0; x <= 3; ++x) {
    for (std::size_t y = 0; y <= 3; ++y) {
      PointedMap g = gamma_coev(gamma_object(x), gamma_object(y));
      PointedMap e = ev(gamma_object(y), gamma_object(x * y));
      PointedMap round = compose(e, smash_maps(g, PointedMap::identity(y)));
      CHECK(round == PointedMap::identity(x * y));
      for (Elem a = 1; a <= x; ++a) {
        PointedMap ga = map_at(y, x * y, g(a));
        for (Elem b = 1; b <= y; ++b)
          CHECK(ga(b) == smash_pair(y, a, b));
      }
    }
  }
}

TEST_CASE("internal composition")
{
  for (std::size_t x = 0; x <= 2; ++x) {
    for (std::size_t y = 0; y <= 2; ++y) {
      for (std::size_t z = 0; z <= 2; ++z) {
        PointedMap c =
            compose_hom(gamma_object(x), gamma_object(y), gamma_object(z));
        std::size_t hxy = hom_count(x, y), hyz = hom_count(y, z);
        for (std::size_t g = 0; g < hyz; ++g) {
          for (std::size_t f = 0; f < hxy; ++f) {
            PointedMap gf = compose(map_at(y, z, g), map_at(x, y, f));
            CHECK(c(smash_pair(hxy - 1, g, f)) == map_index(gf));
          }
        }
        // ev o (c smash id) = ev o (id smash ev)
        PointedMap exz = ev(gamma_object(x), gamma_object(z));
        PointedMap eyz = ev(gamma_object(y), gamma_object(z));
        PointedMap exy = ev(gamma_object(x), gamma_object(y));
        PointedMap lhs = compose(exz, smash_maps(c, PointedMap::identity(x)));
        PointedMap rhs = compose(
            eyz, smash_maps(PointedMap::identity(hyz - 1), exy));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("internal composition is associative")
{
  for (std::size_t w = 0; w <= 2; ++w)
    for (std::size_t x = 0; x <= 2; ++x)
      for (std::size_t y = 0; y <= 2; ++y)
        for (std::size_t z = 0; z <= 2; ++z) {
          auto W = gamma_object(w), X = gamma_object(x);
          auto Y = gamma_object(y), Z = gamma_object(z);
          std::size_t yz = hom_count(y, z) - 1, wx = hom_count(w, x) - 1;
          PointedMap left = compose(
              compose_hom(W, X, Z),
              smash_maps(compose_hom(X, Y, Z), PointedMap::identity(wx)));
          PointedMap right = compose(
              compose_hom(W, Y, Z),
              smash_maps(PointedMap::identity(yz), compose_hom(W, X, Y)));
          CHECK(left == right);
        }
}

TEST_CASE("smash is left adjoint to the map space")
{
  for (std::size_t x = 0; x <= 2; ++x) {
    for (std::size_t y = 0; y <= 2; ++y) {
      for (std::size_t z = 0; z <= 2; ++z) {
        std::size_t hyz = hom_count(y, z);
        std::set<std::vector<Elem>> images;
        for (auto const &gt : oracle::all_maps(x * y, z)) {
          PointedMap g(z, gt);
          std::vector<Elem> hat(x + 1, 0);
          for (Elem a = 1; a <= x; ++a) {
            std::vector<Elem> row(y + 1, 0);
            for (Elem b = 1; b <= y; ++b)
              row[b] = g(smash_pair(y, a, b));
            hat[a] = map_index(PointedMap(z, row));
          }
          PointedMap gh(hyz - 1, hat);
          PointedMap back = compose(ev(gamma_object(y), gamma_object(z)),
                                    smash_maps(gh, PointedMap::identity(y)));
          CHECK(back == g);
          images.insert(hat);
        }
        CHECK(images.size() == oracle::power(hyz, x));
      }
    }
  }
}

TEST_CASE("quotients agree with an equivalence closure oracle")
{
  Quotient q = quotient_by_relations(gamma_object(3), {});
  CHECK(q.projection == PointedMap::identity(3));
  q = quotient_by_relations(gamma_object(3), {{1, 0}, {2, 0}, {3, 0}});
  CHECK(q.set.size() == 0);
  q = quotient_by_relations(gamma_object(3), {{1, 2}});
  CHECK(q.set.size() == 2);
  CHECK(q.projection.table() == std::vector<Elem>{0, 1, 1, 2});
  CHECK_THROWS_AS(quotient_by_relations(gamma_object(2), {{1, 3}}),
                  std::invalid_argument);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng() % 8;
    std::vector<std::pair<Elem, Elem>> rel;
    std::size_t count = rng() % 5;
    for (std::size_t i = 0; i < count && n > 0; ++i)
      rel.emplace_back(rng() % (n + 1), rng() % (n + 1));
    Quotient r = quotient_by_relations(gamma_object(n), rel);
    CHECK(r.projection.table() == oracle::closure(n, rel));
    CHECK(r.projection.is_surjective());
    // Quotienting again by the collapsed relation is an isomorphism.
    std::vector<std::pair<Elem, Elem>> again;
    for (auto [a, b] : rel)
      again.emplace_back(r.projection(a), r.projection(b));
    Quotient s = quotient_by_relations(r.set, again);
    CHECK(s.projection.is_bijective());
  }
}

TEST_CASE("collapsing a subset")
{
  CHECK(collapse_subset(gamma_object(3), {0}).projection ==
        PointedMap::identity(3));
  CHECK(collapse_subset(gamma_object(3), {}).projection ==
        PointedMap::identity(3));
  CHECK(collapse_subset(gamma_object(3), {1, 2, 3}).set.size() == 0);
  Quotient q = collapse_subset(gamma_object(4), {2, 4});
  CHECK(q.set.cardinality() == 3);
  CHECK(q.projection.table() == std::vector<Elem>{0, 1, 0, 2, 0});
}

TEST_CASE("symmetric groups and free actions")
{
  for (std::size_t n = 0; n <= 4; ++n) {
    auto g = symmetric_group(n);
    CHECK(g.size() == oracle::factorial(n));
    CHECK(std::set<PointedMap>(g.begin(), g.end()).size() == g.size());
  }
  // The swap acting on two free elements.
  auto perms = symmetric_group(2);
  GroupAction free_swap{gamma_object(2), 2, perms, perms};
  CHECK(free_swap.is_action());
  CHECK(sigma_is_free(free_swap, {1, 2}));

  GroupAction fixed{gamma_object(3), 2, perms,
                    {PointedMap::identity(3), PointedMap(3, {0, 2, 1, 3})}};
  CHECK(fixed.is_action());
  CHECK_FALSE(sigma_is_free(fixed, {3}));
  CHECK(sigma_is_free(fixed, {1, 2}));
  CHECK_THROWS_AS(sigma_is_free(fixed, {1}), SubsetNotInvariant);

  GroupAction broken{gamma_object(2), 2, perms,
                     {PointedMap(2, {0, 2, 1}), PointedMap(2, {0, 2, 1})}};
  CHECK_FALSE(broken.is_action());
}

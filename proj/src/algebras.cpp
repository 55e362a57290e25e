#include "gammacalc/algebras.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gammacalc/errors.hpp"

namespace gammacalc {

using json = nlohmann::ordered_json;

namespace {

PointedMap iterate(SetMonad const &t, PointedMap f, std::size_t times)
{
  for (std::size_t i = 0; i < times; ++i)
    f = t.map_table(f);
  return f;
}

PointedMap swap_map(std::size_t a, std::size_t b)
{
  std::vector<Elem> table(a * b + 1, 0);
  for (Elem i = 1; i <= a; ++i) {
    for (Elem j = 1; j <= b; ++j)
      table[smash_pair(b, i, j)] = smash_pair(a, j, i);
  }
  return PointedMap(a * b, std::move(table));
}

// Quotient of the algebra b by the pair f, g on underlying sets, with the
// structure induced through T of the projection.
AlgebraCoequalizer coequalize(SetMonad const &t, std::size_t a,
                              Algebra const &b, PointedMap const &f,
                              PointedMap const &g)
{
  std::vector<std::pair<Elem, Elem>> rel;
  for (Elem x = 1; x <= a; ++x)
    rel.emplace_back(f(x), g(x));
  Quotient q = quotient_by_relations(FinPointedSet(b.carrier), rel);
  PointedMap tq = t.map_table(q.projection);

  std::size_t tqs = t.apply(q.set.size());
  std::vector<Elem> structure(tqs + 1, 0);
  std::vector<bool> seen(tqs + 1, false);
  seen[0] = true;
  for (Elem s = 1; s <= t.apply(b.carrier); ++s) {
    Elem image = tq(s);
    Elem value = q.projection(b.structure(s));
    if (seen[image] && structure[image] != value)
      throw StructureNotInduced("quotient identifies elements of T with "
                                "different images");
    seen[image] = true;
    structure[image] = value;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw StructureNotInduced("T of the projection is not surjective");

  AlgebraCoequalizer result;
  result.algebra = Algebra{q.set.size(), PointedMap(q.set.size(), structure)};
  result.projection = q.projection;
  for (Elem e = 1; e <= q.set.size(); ++e) {
    if (structure[t.unit(q.set.size(), e)] != e)
      throw StructureNotInduced("induced structure violates the unit law");
  }
  try {
    if (!check_algebra(t, result.algebra).ok())
      throw StructureNotInduced("induced structure violates the algebra laws");
    result.revalidated = true;
  } catch (SizeGuard const &) {
    result.revalidated = false;
  }

  // Quotient of T(B) by T(f), T(g), compared with T of the quotient.
  try {
    PointedMap tf = t.map_table(f), tg = t.map_table(g);
    std::vector<std::pair<Elem, Elem>> trel;
    for (Elem w = 1; w <= tf.dom(); ++w)
      trel.emplace_back(tf(w), tg(w));
    Quotient tq2 = quotient_by_relations(FinPointedSet(t.apply(b.carrier)),
                                         trel);
    std::vector<Elem> cmp(tq2.set.size() + 1, 0);
    bool defined = true;
    for (Elem s = 1; s <= t.apply(b.carrier); ++s) {
      Elem c = tq2.projection(s);
      if (cmp[c] != 0 && cmp[c] != tq(s))
        defined = false;
      cmp[c] = tq(s);
    }
    if (defined) {
      result.comparison = PointedMap(tqs, std::move(cmp));
      result.preserved = result.comparison.is_bijective();
    }
  } catch (SizeGuard const &) {
    result.preserved = false;
  }
  return result;
}

} // anonymous namespace

LawReport check_algebra(SetMonad const &t, Algebra const &a)
{
  LawReport report;
  report.suite = "algebra:" + t.name();
  std::size_t x = a.carrier, tx = t.apply(x);
  report.check(a.structure.dom() == tx && a.structure.cod() == x, "shape");
  if (!report.ok())
    return report;
  for (Elem e = 1; e <= x; ++e)
    report.check(a.structure(t.unit(x, e)) == e, "unit", {{"element", e}});
  std::size_t ttx = t.apply(tx);
  check_budget(ttx, "algebra check");
  for (Elem w = 1; w <= ttx; ++w)
    report.check(a.structure(t.mult(x, w)) ==
                     a.structure(t.map(a.structure, w)),
                 "multiplication", {{"element", w}});
  return report;
}

void require_algebra(SetMonad const &t, Algebra const &a)
{
  LawReport r = check_algebra(t, a);
  if (!r.ok())
    throw AlgebraInvalid("structure violates " + r.violations.front().law);
}

Algebra free_algebra(SetMonad const &t, std::size_t x)
{ return Algebra{t.apply(x), t.mult_table(x)}; }

std::vector<Algebra> enumerate_algebras(SetMonad const &t, std::size_t x)
{
  std::size_t tx = t.apply(x);
  std::size_t count = hom_count(tx, x);
  check_budget(count, "algebra enumeration");
  PointedMap eta = t.unit_table(x);
  PointedMap mu = t.mult_table(x);
  std::vector<Algebra> result;
  for (std::size_t h = 0; h < count; ++h) {
    PointedMap xi = map_at(tx, x, h);
    if (compose(xi, eta) != PointedMap::identity(x))
      continue;
    if (compose(xi, mu) != compose(xi, t.map_table(xi)))
      continue;
    result.push_back(Algebra{x, xi});
  }
  return result;
}

bool is_algebra_morphism(SetMonad const &t, Algebra const &a,
                         Algebra const &b, PointedMap const &f)
{
  if (f.dom() != a.carrier || f.cod() != b.carrier)
    return false;
  for (Elem s = 1; s <= t.apply(a.carrier); ++s) {
    if (f(a.structure(s)) != b.structure(t.map(f, s)))
      return false;
  }
  return true;
}

std::vector<PointedMap> algebra_morphisms(SetMonad const &t, Algebra const &a,
                                          Algebra const &b)
{
  std::size_t count = hom_count(a.carrier, b.carrier);
  check_budget(count, "morphism enumeration");
  std::vector<PointedMap> result;
  for (std::size_t h = 0; h < count; ++h) {
    PointedMap f = map_at(a.carrier, b.carrier, h);
    if (is_algebra_morphism(t, a, b, f))
      result.push_back(f);
  }
  return result;
}

Elem EnrichedHom::element(PointedMap const &f) const
{
  auto it = std::find(maps.begin(), maps.end(), map_index(f));
  if (it == maps.end())
    throw std::out_of_range("map is not an algebra morphism");
  return static_cast<Elem>(it - maps.begin());
}

namespace {

EnrichedHom equalizer_hom(SetMonad const &t, Algebra const &a,
                          Algebra const &b)
{
  std::size_t x = a.carrier, y = b.carrier;
  std::size_t count = hom_count(x, y);
  check_budget(count, "enriched hom");
  MapSpace hom = map_space(FinPointedSet(x), FinPointedSet(y));
  std::size_t tx = t.apply(x);

  EnrichedHom result;
  result.dom = x;
  result.cod = y;
  for (Elem f = 0; f < count; ++f) {
    PointedMap fm = hom.map(f);
    PointedMap tf = t.map_table(fm);
    // E(xi_X, Y)(f) = f o xi_X and E(TX, xi_Y)(phi(f)) = xi_Y o T(f).
    bool equal = true;
    for (Elem s = 1; s <= tx && equal; ++s)
      equal = fm(a.structure(s)) == b.structure(tf(s));
    if (f == 0 && !equal)
      throw AlgebraInvalid("the zero morphism is not an algebra morphism");
    if (equal)
      result.maps.push_back(f);
  }
  result.set = FinPointedSet(result.maps.size() - 1);
  return result;
}

} // anonymous namespace

EnrichedHom enriched_hom_algebras(SetMonad const &t, Algebra const &a,
                                  Algebra const &b)
{
  require_algebra(t, a);
  require_algebra(t, b);
  return equalizer_hom(t, a, b);
}

LawReport split_coequalizer_check(SetMonad const &t, Algebra const &a)
{
  LawReport report;
  report.suite = "split coequalizer:" + t.name();
  std::size_t x = a.carrier, tx = t.apply(x);
  PointedMap d0 = t.mult_table(x);
  PointedMap d1 = t.map_table(a.structure);
  PointedMap const &e = a.structure;
  PointedMap s = t.unit_table(x);
  PointedMap ts = t.unit_table(tx);

  report.check(compose(e, d0) == compose(e, d1), "coequalizes");
  report.check(compose(e, s) == PointedMap::identity(x), "section of e");
  report.check(compose(d0, ts) == PointedMap::identity(tx), "section of d0");
  report.check(compose(d1, ts) == compose(s, e), "splitting");

  std::vector<std::pair<Elem, Elem>> rel;
  for (Elem w = 1; w <= d0.dom(); ++w)
    rel.emplace_back(d0(w), d1(w));
  Quotient q = quotient_by_relations(FinPointedSet(tx), rel);
  std::vector<Elem> induced(q.set.size() + 1, 0);
  bool defined = true;
  for (Elem c = 1; c <= tx; ++c) {
    Elem k = q.projection(c);
    if (induced[k] != 0 && induced[k] != e(c))
      defined = false;
    induced[k] = e(c);
  }
  report.check(defined, "quotient map well defined");
  if (defined)
    report.check(PointedMap(x, induced).is_bijective(), "quotient is X",
                 {{"classes", q.set.size()}, {"carrier", x}});
  return report;
}

AlgebraCoequalizer algebra_coequalizer(SetMonad const &t, Algebra const &a,
                                       Algebra const &b, PointedMap const &f,
                                       PointedMap const &g,
                                       PointedMap const &section)
{
  require_algebra(t, a);
  require_algebra(t, b);
  if (!is_algebra_morphism(t, a, b, f) || !is_algebra_morphism(t, a, b, g))
    throw AlgebraInvalid("parallel pair is not a pair of algebra maps");
  if (section.dom() != b.carrier || section.cod() != a.carrier ||
      compose(f, section) != PointedMap::identity(b.carrier) ||
      compose(g, section) != PointedMap::identity(b.carrier))
    throw NotReflexive("section is not a common section of the pair");
  return coequalize(t, a.carrier, b, f, g);
}

AlgebraCoequalizer canonical_coequalizer(SetMonad const &t, Algebra const &a)
{
  require_algebra(t, a);
  std::size_t x = a.carrier, tx = t.apply(x);
  PointedMap f = t.mult_table(x);
  PointedMap g = t.map_table(a.structure);
  PointedMap section = t.map_table(t.unit_table(x));
  if (compose(f, section) != PointedMap::identity(tx) ||
      compose(g, section) != PointedMap::identity(tx))
    throw NotReflexive("canonical pair lacks its common section");
  return coequalize(t, t.apply(tx), free_algebra(t, x), f, g);
}

Tensor tensor_algebra(SetMonad const &t, std::size_t z, Algebra const &a)
{
  require_algebra(t, a);
  std::size_t x = a.carrier, tx = t.apply(x);
  PointedMap id = PointedMap::identity(z);
  Algebra target = free_algebra(t, z * x);
  PointedMap f = t.map_table(smash_maps(id, a.structure));
  PointedMap g = compose(t.mult_table(z * x),
                         t.map_table(t.strength_table(z, x)));
  PointedMap section = t.map_table(smash_maps(id, t.unit_table(x)));
  if (compose(f, section) != PointedMap::identity(target.carrier) ||
      compose(g, section) != PointedMap::identity(target.carrier))
    throw NotReflexive("tensor pair lacks its common section");
  Tensor result;
  result.coequalizer = coequalize(t, t.apply(z * tx), target, f, g);
  result.unit = compose(result.coequalizer.projection, t.unit_table(z * x));
  return result;
}

Algebra cotensor_algebra(SetMonad const &t, Algebra const &a, std::size_t z)
{
  require_algebra(t, a);
  std::size_t x = a.carrier;
  MapSpace hom = map_space(FinPointedSet(z), FinPointedSet(x));
  std::size_t m = hom.set.size();
  // Z smash Map(Z, X) -> Map(Z, X) smash Z -> X.
  PointedMap evaluation =
      compose(ev(FinPointedSet(z), FinPointedSet(x)), swap_map(z, m));
  std::size_t tm = t.apply(m);
  std::vector<Elem> structure(tm + 1, 0);
  for (Elem w = 1; w <= tm; ++w) {
    std::vector<Elem> f(z + 1, 0);
    for (Elem e = 1; e <= z; ++e)
      f[e] = a.structure(t.map(evaluation, t.strength(z, m, e, w)));
    structure[w] = hom.index(PointedMap(x, std::move(f)));
  }
  return Algebra{m, PointedMap(m, std::move(structure))};
}

LawReport check_cotensor(SetMonad const &t, Algebra const &a, std::size_t z,
                         Algebra const &cotensor)
{
  LawReport report;
  report.suite = "cotensor:" + t.name();
  std::size_t x = a.carrier, m = cotensor.carrier;
  report.check(m == hom_count(z, x) - 1 &&
                   cotensor.structure.dom() == t.apply(m) &&
                   cotensor.structure.cod() == m,
               "shape");
  if (!report.ok())
    return report;
  for (Elem f = 1; f <= m; ++f)
    report.check(cotensor.structure(t.unit(m, f)) == f, "unit",
                 {{"element", f}});
  for (Elem e = 1; e <= z; ++e) {
    std::vector<Elem> table(m + 1, 0);
    for (Elem f = 1; f <= m; ++f)
      table[f] = map_at(z, x, f)(e);
    report.check(is_algebra_morphism(t, cotensor, a, PointedMap(x, table)),
                 "evaluation is a morphism", {{"point", e}});
  }
  return report;
}

AdjunctionCheck tensor_adjunction(SetMonad const &t, std::size_t z,
                                  Algebra const &x, Algebra const &y)
{
  AdjunctionCheck result;
  LawReport &report = result.report;
  report.suite = "tensor adjunction:" + t.name();
  Tensor tz = tensor_algebra(t, z, x);
  Algebra const &zx = tz.algebra();
  require_algebra(t, y);
  EnrichedHom left = equalizer_hom(t, zx, y);
  EnrichedHom hom = equalizer_hom(t, x, y);
  std::size_t h = hom.set.size();
  std::size_t right_count = hom_count(z, h);
  result.left = left.set.cardinality();
  result.right = right_count;
  report.check(result.left == result.right, "cardinality",
               {{"left", result.left}, {"right", result.right}});

  std::size_t xs = x.carrier;
  auto forward = [&](PointedMap const &f) -> PointedMap {
    std::vector<Elem> table(z + 1, 0);
    for (Elem e = 1; e <= z; ++e) {
      std::vector<Elem> g(xs + 1, 0);
      for (Elem a = 1; a <= xs; ++a)
        g[a] = f(tz.unit(smash_pair(xs, e, a)));
      table[e] = hom.element(PointedMap(y.carrier, g));
    }
    return PointedMap(h, std::move(table));
  };
  auto backward = [&](PointedMap const &g) -> PointedMap {
    std::vector<Elem> k(z * xs + 1, 0);
    for (Elem e = 1; e <= z; ++e) {
      PointedMap ge = hom.map(g(e));
      for (Elem a = 1; a <= xs; ++a)
        k[smash_pair(xs, e, a)] = ge(a);
    }
    PointedMap tk = t.map_table(PointedMap(y.carrier, k));
    PointedMap const &q = tz.coequalizer.projection;
    std::vector<Elem> table(zx.carrier + 1, 0);
    for (Elem w = 1; w <= tk.dom(); ++w) {
      Elem c = q(w), v = y.structure(tk(w));
      if (table[c] != 0 && table[c] != v)
        throw StructureNotInduced("map does not descend to the tensor");
      table[c] = v;
    }
    return PointedMap(y.carrier, std::move(table));
  };

  for (Elem i = 0; i < left.set.cardinality(); ++i) {
    PointedMap f = left.map(i);
    try {
      PointedMap back = backward(forward(f));
      report.check(back == f, "left inverse", {{"map", f.table()}});
    } catch (std::exception const &ex) {
      report.check(false, "left inverse",
                   {{"map", f.table()}, {"error", ex.what()}});
    }
  }
  for (std::size_t gi = 0; gi < right_count; ++gi) {
    PointedMap g = map_at(z, h, gi);
    try {
      PointedMap f = backward(g);
      report.check(is_algebra_morphism(t, zx, y, f), "image is a morphism",
                   {{"map", g.table()}});
      report.check(forward(f) == g, "right inverse", {{"map", g.table()}});
    } catch (std::exception const &ex) {
      report.check(false, "right inverse",
                   {{"map", g.table()}, {"error", ex.what()}});
    }
  }
  return result;
}

AdjunctionCheck cotensor_adjunction(SetMonad const &t, std::size_t z,
                                    Algebra const &x, Algebra const &y)
{
  AdjunctionCheck result;
  LawReport &report = result.report;
  report.suite = "cotensor adjunction:" + t.name();
  Algebra xz = cotensor_algebra(t, x, z);
  report.merge(check_cotensor(t, x, z, xz));
  require_algebra(t, y);
  EnrichedHom left = equalizer_hom(t, y, xz);
  EnrichedHom hom = equalizer_hom(t, y, x);
  std::size_t h = hom.set.size();
  std::size_t right_count = hom_count(z, h);
  result.left = left.set.cardinality();
  result.right = right_count;
  report.check(result.left == result.right, "cardinality",
               {{"left", result.left}, {"right", result.right}});

  std::size_t ys = y.carrier;
  auto forward = [&](PointedMap const &f) -> PointedMap {
    std::vector<Elem> table(z + 1, 0);
    for (Elem e = 1; e <= z; ++e) {
      std::vector<Elem> g(ys + 1, 0);
      for (Elem b = 1; b <= ys; ++b)
        g[b] = map_at(z, x.carrier, f(b))(e);
      table[e] = hom.element(PointedMap(x.carrier, g));
    }
    return PointedMap(h, std::move(table));
  };
  auto backward = [&](PointedMap const &g) -> PointedMap {
    std::vector<Elem> table(ys + 1, 0);
    for (Elem b = 1; b <= ys; ++b) {
      std::vector<Elem> fe(z + 1, 0);
      for (Elem e = 1; e <= z; ++e)
        fe[e] = hom.map(g(e))(b);
      table[b] = map_index(PointedMap(x.carrier, fe));
    }
    return PointedMap(xz.carrier, std::move(table));
  };

  for (Elem i = 0; i < left.set.cardinality(); ++i) {
    PointedMap f = left.map(i);
    try {
      report.check(backward(forward(f)) == f, "left inverse",
                   {{"map", f.table()}});
    } catch (std::exception const &ex) {
      report.check(false, "left inverse",
                   {{"map", f.table()}, {"error", ex.what()}});
    }
  }
  for (std::size_t gi = 0; gi < right_count; ++gi) {
    PointedMap g = map_at(z, h, gi);
    PointedMap f = backward(g);
    bool morphism = is_algebra_morphism(t, y, xz, f);
    report.check(morphism, "image is a morphism", {{"map", g.table()}});
    if (morphism)
      report.check(forward(f) == g, "right inverse", {{"map", g.table()}});
  }
  return result;
}

LawReport cotensor_composition(SetMonad const &t, Algebra const &a,
                               std::size_t z1, std::size_t z2)
{
  LawReport report;
  report.suite = "cotensor composition:" + t.name();
  std::size_t x = a.carrier;
  Algebra whole = cotensor_algebra(t, a, z1 * z2);
  Algebra inner = cotensor_algebra(t, a, z1);
  Algebra outer = cotensor_algebra(t, inner, z2);
  std::vector<Elem> table(whole.carrier + 1, 0);
  for (Elem f = 1; f <= whole.carrier; ++f) {
    PointedMap fm = map_at(z1 * z2, x, f);
    std::vector<Elem> g(z2 + 1, 0);
    for (Elem e2 = 1; e2 <= z2; ++e2) {
      std::vector<Elem> h(z1 + 1, 0);
      for (Elem e1 = 1; e1 <= z1; ++e1)
        h[e1] = fm(smash_pair(z2, e1, e2));
      g[e2] = map_index(PointedMap(x, h));
    }
    table[f] = map_index(PointedMap(inner.carrier, g));
  }
  PointedMap iso(outer.carrier, std::move(table));
  report.check(whole.carrier == outer.carrier, "cardinality",
               {{"whole", whole.carrier}, {"iterated", outer.carrier}});
  report.check(iso.is_bijective(), "bijective");
  report.check(is_algebra_morphism(t, whole, outer, iso), "morphism");
  return report;
}

BarResolution bar_resolution(SetMonad const &t, Algebra const &a,
                             std::size_t k)
{
  require_algebra(t, a);
  BarResolution bar;
  LawReport &report = bar.report;
  report.suite = "bar:" + t.name();
  std::size_t x = a.carrier;
  // power[i] = |T^i X|.
  std::vector<std::size_t> power{x};
  for (std::size_t i = 1; i <= k + 1; ++i) {
    power.push_back(t.apply(power.back()));
    check_budget(power.back(), "bar resolution");
  }
  for (std::size_t n = 0; n <= k; ++n)
    bar.sizes.push_back(power[n + 1]);

  bar.augmentation = a.structure;
  bar.extra_unit = t.unit_table(x);
  bar.faces.resize(k + 1);
  for (std::size_t n = 1; n <= k; ++n) {
    bar.faces[n].push_back(iterate(t, a.structure, n));
    for (std::size_t i = 1; i <= n; ++i)
      bar.faces[n].push_back(iterate(t, t.mult_table(power[i - 1]), n - i));
  }
  bar.degeneracies.resize(k);
  for (std::size_t n = 0; n < k; ++n) {
    for (std::size_t i = 0; i <= n; ++i)
      bar.degeneracies[n].push_back(
          iterate(t, t.unit_table(power[i]), n - i + 1));
    bar.extra.push_back(t.unit_table(power[n + 1]));
  }

  auto const &d = bar.faces;
  auto const &s = bar.degeneracies;
  if (k >= 1)
    report.check(compose(a.structure, d[1][0]) ==
                     compose(a.structure, d[1][1]),
                 "augmentation");
  for (std::size_t n = 2; n <= k; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i)
        report.check(compose(d[n - 1][i], d[n][j]) ==
                         compose(d[n - 1][j - 1], d[n][i]),
                     "face-face", {{"level", n}, {"i", i}, {"j", j}});
    }
  }
  for (std::size_t n = 0; n < k; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= n + 1; ++i) {
        PointedMap lhs = compose(d[n + 1][i], s[n][j]);
        json w = {{"level", n}, {"i", i}, {"j", j}};
        if (i == j || i == j + 1)
          report.check(lhs == PointedMap::identity(bar.sizes[n]),
                       "face-degeneracy identity", w);
        else if (i < j)
          report.check(lhs == compose(s[n - 1][j - 1], d[n][i]),
                       "face-degeneracy below", w);
        else
          report.check(lhs == compose(s[n - 1][j], d[n][i - 1]),
                       "face-degeneracy above", w);
      }
    }
  }
  for (std::size_t n = 0; n + 2 <= k; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= j; ++i)
        report.check(compose(s[n + 1][i], s[n][j]) ==
                         compose(s[n + 1][j + 1], s[n][i]),
                     "degeneracy-degeneracy",
                     {{"level", n}, {"i", i}, {"j", j}});
    }
  }

  report.check(compose(a.structure, bar.extra_unit) ==
                   PointedMap::identity(x),
               "extra degeneracy unit");
  for (std::size_t n = 0; n < k; ++n) {
    report.check(compose(d[n + 1][n + 1], bar.extra[n]) ==
                     PointedMap::identity(bar.sizes[n]),
                 "extra degeneracy last face", {{"level", n}});
    for (std::size_t i = 0; i <= n; ++i) {
      PointedMap lhs = compose(d[n + 1][i], bar.extra[n]);
      PointedMap rhs = n == 0 ? compose(bar.extra_unit, a.structure)
                              : compose(bar.extra[n - 1], d[n][i]);
      report.check(lhs == rhs, "extra degeneracy face",
                   {{"level", n}, {"i", i}});
    }
  }
  return bar;
}

MonoidModule restrict_along_lambda(SetMonad const &t, Algebra const &a)
{
  require_algebra(t, a);
  MonoidModule mod;
  mod.monoid = endomorphism_monoid(t);
  mod.carrier = a.carrier;
  mod.action = compose(a.structure, lambda_map(t, a.carrier));
  return mod;
}

LawReport free_module_comparison(SetMonad const &t, std::size_t x)
{
  LawReport report;
  report.suite = "free module:" + t.name();
  MonoidModule mod = restrict_along_lambda(t, free_algebra(t, x));
  PointedMap lx = lambda_map(t, x);
  std::size_t n = mod.monoid.size;
  for (Elem e = 1; e <= x; ++e) {
    for (Elem a = 1; a <= n; ++a)
      report.check(mod.action(smash_pair(n, t.unit(x, e), a)) ==
                       lx(smash_pair(n, e, a)),
                   "free module", {{"size", x}, {"elements", {e, a}}});
  }
  return report;
}

} // namespace gammacalc

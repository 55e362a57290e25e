#include "gammacalc/monads.hpp"

#include <string>

#include "gammacalc/errors.hpp"

namespace gammacalc {

using json = nlohmann::ordered_json;

namespace {

// e smash -: Y -> X smash Y.
PointedMap left_smash(std::size_t x, std::size_t y, Elem e)
{
  std::vector<Elem> table(y + 1, 0);
  for (Elem j = 1; j <= y; ++j)
    table[j] = smash_pair(y, e, j);
  return PointedMap(x * y, std::move(table));
}

// A smash B -> B smash A.
PointedMap swap_map(std::size_t a, std::size_t b)
{
  std::vector<Elem> table(a * b + 1, 0);
  for (Elem i = 1; i <= a; ++i) {
    for (Elem j = 1; j <= b; ++j)
      table[smash_pair(b, i, j)] = smash_pair(a, j, i);
  }
  return PointedMap(a * b, std::move(table));
}

PointedMonoid monoid_from(std::string name, std::size_t size,
                          std::vector<std::vector<Elem>> const &rows)
{
  PointedMonoid m;
  m.name = std::move(name);
  m.size = size;
  m.unit = 1;
  m.table.assign((size + 1) * (size + 1), 0);
  for (Elem a = 1; a <= size; ++a) {
    for (Elem b = 1; b <= size; ++b)
      m.table[a * (size + 1) + b] = rows[a - 1][b - 1];
  }
  return m;
}

} // anonymous namespace

PointedMap SetMonad::map_table(PointedMap const &f) const
{
  std::size_t s = apply(f.dom());
  check_budget(s, "functor table");
  std::vector<Elem> table(s + 1, 0);
  for (Elem t = 1; t <= s; ++t)
    table[t] = map(f, t);
  return PointedMap(apply(f.cod()), std::move(table));
}

PointedMap SetMonad::unit_table(std::size_t x) const
{
  std::vector<Elem> table(x + 1, 0);
  for (Elem e = 1; e <= x; ++e)
    table[e] = unit(x, e);
  return PointedMap(apply(x), std::move(table));
}

PointedMap SetMonad::mult_table(std::size_t x) const
{
  std::size_t s = apply(apply(x));
  check_budget(s, "multiplication table");
  std::vector<Elem> table(s + 1, 0);
  for (Elem t = 1; t <= s; ++t)
    table[t] = mult(x, t);
  return PointedMap(apply(x), std::move(table));
}

PointedMap SetMonad::strength_table(std::size_t x, std::size_t y) const
{
  std::size_t ty = apply(y);
  check_budget(x * ty, "strength table");
  std::vector<Elem> table(x * ty + 1, 0);
  for (Elem e = 1; e <= x; ++e) {
    for (Elem t = 1; t <= ty; ++t)
      table[smash_pair(ty, e, t)] = strength(x, y, e, t);
  }
  return PointedMap(apply(x * y), std::move(table));
}

LawReport validate_monoid(PointedMonoid const &m)
{
  LawReport report;
  report.suite = "monoid:" + m.name;
  std::size_t n = m.size;
  report.check(m.table.size() == (n + 1) * (n + 1), "table shape");
  if (!report.ok())
    return report;
  report.check(m.unit >= 1 && m.unit <= n, "unit in range");
  for (Elem a = 0; a <= n; ++a) {
    for (Elem b = 0; b <= n; ++b) {
      Elem ab = m(a, b);
      report.check(ab <= n, "closed", {{"a", a}, {"b", b}});
      if (a == 0 || b == 0)
        report.check(ab == 0, "absorbing basepoint", {{"a", a}, {"b", b}});
    }
  }
  if (!report.ok())
    return report;
  for (Elem a = 1; a <= n; ++a) {
    report.check(m(m.unit, a) == a && m(a, m.unit) == a, "unit", {{"a", a}});
    for (Elem b = 1; b <= n; ++b) {
      for (Elem c = 1; c <= n; ++c)
        report.check(m(m(a, b), c) == m(a, m(b, c)), "associativity",
                     {{"a", a}, {"b", b}, {"c", c}});
    }
  }
  return report;
}

PointedMonoid unit_monoid()
{ return monoid_from("S0", 1, {{1}}); }

PointedMonoid sign_monoid()
{ return monoid_from("sign", 2, {{1, 2}, {2, 1}}); }

PointedMonoid nilpotent_monoid()
{ return monoid_from("nilpotent", 2, {{1, 2}, {2, 0}}); }

Elem MonoidMonad::map(PointedMap const &f, Elem t) const
{
  if (t == 0)
    return 0;
  std::size_t s = _m.size;
  return smash_pair(s, f((t - 1) / s + 1), (t - 1) % s + 1);
}

Elem MonoidMonad::unit(std::size_t, Elem e) const
{ return smash_pair(_m.size, e, _m.unit); }

Elem MonoidMonad::mult(std::size_t, Elem t) const
{
  if (t == 0)
    return 0;
  std::size_t s = _m.size;
  Elem inner = (t - 1) / s + 1, b = (t - 1) % s + 1;
  Elem e = (inner - 1) / s + 1, a = (inner - 1) % s + 1;
  return smash_pair(s, e, _m(a, b));
}

Elem MonoidMonad::strength(std::size_t, std::size_t y, Elem e, Elem t) const
{
  if (e == 0 || t == 0)
    return 0;
  std::size_t s = _m.size;
  Elem y0 = (t - 1) / s + 1, a = (t - 1) % s + 1;
  return smash_pair(s, smash_pair(y, e, y0), a);
}

Elem FormulaMonad::map(PointedMap const &f, Elem t) const
{ return t == 0 ? 0 : _f->act(f, t); }

Elem FormulaMonad::unit(std::size_t x, Elem e) const
{ return e == 0 ? 0 : _f->act(PointedMap(x, {0, e}), _f->unit()); }

Elem FormulaMonad::mult(std::size_t x, Elem t) const
{
  if (t == 0)
    return 0;
  // t is the class [t, id] in the degree T(X) part.
  std::size_t s = _f->level(x);
  std::vector<Elem> z(s + 1);
  for (Elem i = 0; i <= s; ++i)
    z[i] = i;
  return _f->substitute(s, t, z, x);
}

Elem FormulaMonad::strength(std::size_t x, std::size_t y, Elem e,
                            Elem t) const
{
  if (e == 0 || t == 0)
    return 0;
  return _f->act(left_smash(x, y, e), t);
}

bool FormulaMonad::monoid_induced() const
{ return _f->monoid_induced(); }

CoendTable const &CoendMonad::table(std::size_t x) const
{
  auto it = _tables.find(x);
  if (it == _tables.end())
    it = _tables.emplace(x, CoendTable(_th.carrier, x, _th.square.degree))
             .first;
  return it->second;
}

std::size_t CoendMonad::apply(std::size_t x) const
{ return table(x).classes().size(); }

Elem CoendMonad::map(PointedMap const &f, Elem t) const
{
  if (t == 0)
    return 0;
  auto const &w = table(f.dom()).witness(t);
  PointedMap y = map_at(w.degree, f.dom(), w.eval);
  return table(f.cod()).class_of(w.degree, w.label, compose(f, y));
}

Elem CoendMonad::unit(std::size_t x, Elem e) const
{
  if (e == 0)
    return 0;
  return table(x).class_of(1, _th.unit(1, 1), PointedMap(x, {0, e}));
}

Elem CoendMonad::mult(std::size_t x, Elem t) const
{
  if (t == 0)
    return 0;
  GammaSet const &a = _th.carrier;
  std::size_t d = a.bound();
  std::size_t s = apply(x);
  auto const &w = table(s).witness(t);
  PointedMap y = map_at(w.degree, s, w.eval);
  std::size_t m = w.degree;

  std::vector<CoendElement> inner(m + 1);
  std::size_t total = 0;
  for (Elem i = 1; i <= m; ++i) {
    if (y(i) != 0) {
      inner[i] = table(x).witness(y(i));
      total += inner[i].degree;
    }
  }

  if (total <= d) {
    // Wedge of the inner representatives: z_i lands in degree total along
    // the i-th summand inclusion, and the evaluations are concatenated.
    std::vector<Elem> family(m + 1, 0), eval(total + 1, 0);
    std::size_t offset = 0;
    for (Elem i = 1; i <= m; ++i) {
      if (y(i) == 0)
        continue;
      std::size_t ni = inner[i].degree;
      std::vector<Elem> incl(ni + 1, 0);
      PointedMap yi = map_at(ni, x, inner[i].eval);
      for (Elem j = 1; j <= ni; ++j) {
        incl[j] = offset + j;
        eval[offset + j] = yi(j);
      }
      family[i] = a.act(PointedMap(total, incl), inner[i].label);
      offset += ni;
    }
    Elem c = _th.square.tables[total].class_of(
        m, w.label, PointedMap(a.level(total), family));
    return class_of_any(table(x), _th.lowering, total, _th.mult(total, c),
                        PointedMap(x, eval));
  }
  if (x <= d) {
    // Push each inner representative forward to degree x.
    std::vector<Elem> family(m + 1, 0);
    for (Elem i = 1; i <= m; ++i) {
      if (y(i) != 0)
        family[i] = a.act(map_at(inner[i].degree, x, inner[i].eval),
                          inner[i].label);
    }
    Elem c = _th.square.tables[x].class_of(m, w.label,
                                           PointedMap(a.level(x), family));
    return class_of_any(table(x), _th.lowering, x, _th.mult(x, c),
                        PointedMap::identity(x));
  }
  throw SizeGuard("multiplication at size " + std::to_string(x) +
                  " leaves the bound " + std::to_string(d));
}

Elem CoendMonad::strength(std::size_t x, std::size_t y, Elem e, Elem t) const
{
  if (e == 0 || t == 0)
    return 0;
  auto const &w = table(y).witness(t);
  PointedMap yv = map_at(w.degree, y, w.eval);
  return table(x * y).class_of(w.degree, w.label,
                               compose(left_smash(x, y, e), yv));
}

MonadPtr monad_from_theory(GammaTheory const &th)
{
  LawReport r = validate_theory(th);
  if (!r.ok())
    throw TheoryInvalid(th.name + " violates " + r.violations.front().law);
  if (th.formula)
    return std::make_shared<FormulaMonad>(th.formula);
  return std::make_shared<CoendMonad>(th);
}

MonadPtr monoid_to_monad(PointedMonoid const &m)
{
  LawReport r = validate_monoid(m);
  if (!r.ok())
    throw std::invalid_argument(m.name + " violates " +
                                r.violations.front().law);
  return std::make_shared<MonoidMonad>(m);
}

LawReport compare_monad_routes(GammaTheory const &th, std::size_t max_size,
                               std::size_t max_mult_size)
{
  LawReport report;
  report.suite = "routes:" + th.name;
  if (!th.formula)
    throw std::invalid_argument("theory has no formula route");
  CoendMonad coend(th);
  FormulaMonad formula(th.formula);
  TheoryFormula const &f = *th.formula;

  // beta_X: [a, y] |-> A(y)(a).
  std::vector<PointedMap> beta;
  for (std::size_t x = 0; x <= max_size; ++x) {
    CoendTable const &t = coend.table(x);
    std::size_t n = t.classes().size();
    std::vector<Elem> table(n + 1, 0);
    for (Elem c = 1; c <= n; ++c) {
      auto const &w = t.witness(c);
      table[c] = f.act(map_at(w.degree, x, w.eval), w.label);
    }
    report.check(n == f.level(x), "size", {{"size", x}, {"coend", n},
                                           {"formula", f.level(x)}});
    PointedMap b(f.level(x), std::move(table));
    report.check(b.is_injective(), "comparison injective", {{"size", x}});
    beta.push_back(std::move(b));
  }
  if (!report.ok())
    return report;

  for (std::size_t x = 0; x <= max_size; ++x) {
    for (Elem e = 1; e <= x; ++e)
      report.check(beta[x](coend.unit(x, e)) == formula.unit(x, e), "unit",
                   {{"size", x}, {"element", e}});
    for (std::size_t y = 0; y <= max_size; ++y) {
      std::size_t count = hom_count(x, y);
      for (std::size_t h = 0; h < count; ++h) {
        PointedMap g = map_at(x, y, h);
        for (Elem c = 1; c <= coend.apply(x); ++c)
          report.check(beta[y](coend.map(g, c)) == formula.map(g, beta[x](c)),
                       "functor", {{"map", g.table()}, {"class", c}});
      }
      if (x * y > max_size)
        continue;
      for (Elem e = 1; e <= x; ++e) {
        for (Elem c = 1; c <= coend.apply(y); ++c)
          report.check(beta[x * y](coend.strength(x, y, e, c)) ==
                           formula.strength(x, y, e, beta[y](c)),
                       "strength", {{"sizes", {x, y}}, {"element", e},
                                    {"class", c}});
      }
    }
  }

  for (std::size_t x = 0; x <= max_mult_size && x <= max_size; ++x) {
    std::size_t s = coend.apply(x);
    CoendTable const &tt = coend.table(s);
    for (Elem c = 1; c <= tt.classes().size(); ++c) {
      auto const &w = tt.witness(c);
      PointedMap y = compose(beta[x], map_at(w.degree, s, w.eval));
      Elem outer = f.act(y, w.label);
      report.check(beta[x](coend.mult(x, c)) == formula.mult(x, outer),
                   "multiplication", {{"size", x}, {"class", c}});
    }
  }
  return report;
}

LawReport check_strong_monad(SetMonad const &t, std::size_t max_size)
{
  LawReport report;
  report.suite = "strong monad:" + t.name();
  std::size_t top = max_size;
  report.check(t.apply(0) == 0, "zero object");

  for (std::size_t x = 0; x <= top; ++x) {
    std::size_t tx = t.apply(x), ttx = t.apply(tx), tttx = t.apply(ttx);
    check_budget(tttx, "monad law scan");
    PointedMap id = PointedMap::identity(x);
    PointedMap eta = t.unit_table(x);
    PointedMap mu = t.mult_table(x);
    for (Elem a = 1; a <= tx; ++a) {
      report.check(t.map(id, a) == a, "functor identity",
                   {{"size", x}, {"element", a}});
      report.check(t.mult(x, t.unit(tx, a)) == a, "left unit",
                   {{"size", x}, {"element", a}});
      report.check(t.mult(x, t.map(eta, a)) == a, "right unit",
                   {{"size", x}, {"element", a}});
    }
    for (Elem w = 1; w <= tttx; ++w)
      report.check(t.mult(x, t.mult(tx, w)) == t.mult(x, t.map(mu, w)),
                   "associativity", {{"size", x}, {"element", w}});

    for (std::size_t y = 0; y <= top; ++y) {
      std::size_t count = hom_count(x, y);
      for (std::size_t h = 0; h < count; ++h) {
        PointedMap f = map_at(x, y, h);
        PointedMap tf = t.map_table(f);
        for (Elem e = 1; e <= x; ++e)
          report.check(t.map(f, t.unit(x, e)) == t.unit(y, f(e)),
                       "unit natural", {{"map", f.table()}, {"element", e}});
        for (Elem w = 1; w <= ttx; ++w)
          report.check(t.map(f, t.mult(x, w)) == t.mult(y, t.map(tf, w)),
                       "multiplication natural",
                       {{"map", f.table()}, {"element", w}});
        for (std::size_t z = 0; z <= top; ++z) {
          std::size_t count2 = hom_count(y, z);
          for (std::size_t h2 = 0; h2 < count2; ++h2) {
            PointedMap g = map_at(y, z, h2);
            PointedMap gf = compose(g, f);
            for (Elem a = 1; a <= tx; ++a)
              report.check(t.map(gf, a) == t.map(g, t.map(f, a)),
                           "functor composition",
                           {{"f", f.table()}, {"g", g.table()},
                            {"element", a}});
          }
        }
      }
    }
  }

  for (std::size_t x = 0; x <= top; ++x) {
    for (std::size_t y = 0; y <= top; ++y) {
      std::size_t ty = t.apply(y), tty = t.apply(ty);
      if (x == 1) {
        for (Elem a = 1; a <= ty; ++a)
          report.check(t.strength(1, y, 1, a) == a, "strength unit",
                       {{"size", y}, {"element", a}});
      }
      for (Elem e = 1; e <= x; ++e) {
        for (Elem e2 = 1; e2 <= y; ++e2)
          report.check(t.strength(x, y, e, t.unit(y, e2)) ==
                           t.unit(x * y, smash_pair(y, e, e2)),
                       "strong unit", {{"sizes", {x, y}},
                                       {"elements", {e, e2}}});
      }
      for (std::size_t z = 0; z <= top; ++z) {
        std::size_t tz = t.apply(z);
        for (Elem e1 = 1; e1 <= x; ++e1) {
          for (Elem e2 = 1; e2 <= y; ++e2) {
            for (Elem a = 1; a <= tz; ++a)
              report.check(t.strength(x * y, z, smash_pair(y, e1, e2), a) ==
                               t.strength(x, y * z, e1,
                                          t.strength(y, z, e2, a)),
                           "strength associativity",
                           {{"sizes", {x, y, z}}, {"elements", {e1, e2, a}}});
          }
        }
      }
      PointedMap sigma = t.strength_table(x, y);
      for (Elem e = 1; e <= x; ++e) {
        for (Elem w = 1; w <= tty; ++w)
          report.check(t.mult(x * y, t.map(sigma, t.strength(x, ty, e, w))) ==
                           t.strength(x, y, e, t.mult(y, w)),
                       "strong multiplication",
                       {{"sizes", {x, y}}, {"element", e}, {"inner", w}});
      }
      for (std::size_t x1 = 0; x1 <= top; ++x1) {
        for (std::size_t y1 = 0; y1 <= top; ++y1) {
          std::size_t cf = hom_count(x, x1), cg = hom_count(y, y1);
          for (std::size_t hf = 0; hf < cf; ++hf) {
            PointedMap f = map_at(x, x1, hf);
            for (std::size_t hg = 0; hg < cg; ++hg) {
              PointedMap g = map_at(y, y1, hg);
              PointedMap fg = smash_maps(f, g);
              for (Elem e = 1; e <= x; ++e) {
                for (Elem a = 1; a <= ty; ++a)
                  report.check(t.map(fg, t.strength(x, y, e, a)) ==
                                   t.strength(x1, y1, f(e), t.map(g, a)),
                               "strength natural",
                               {{"f", f.table()}, {"g", g.table()},
                                {"element", e}, {"class", a}});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

LawReport check_commutativity(SetMonad const &t, std::size_t max_size)
{
  LawReport report;
  report.suite = "commutativity:" + t.name();
  std::size_t top = max_size;
  // sigma'_{A,B} = T(swap) o sigma_{B,A} o swap.
  auto costrength = [&](std::size_t a, std::size_t b, Elem s, Elem e) {
    return t.map(swap_map(b, a), t.strength(b, a, e, s));
  };
  for (std::size_t x = 0; x <= top; ++x) {
    for (std::size_t y = 0; y <= top; ++y) {
      std::size_t tx = t.apply(x), ty = t.apply(y);
      PointedMap sigma = t.strength_table(x, y);
      std::vector<Elem> co(tx * y + 1, 0);
      for (Elem s = 1; s <= tx; ++s) {
        for (Elem e = 1; e <= y; ++e)
          co[smash_pair(y, s, e)] = costrength(x, y, s, e);
      }
      PointedMap cosigma(t.apply(x * y), co);
      for (Elem s = 1; s <= tx; ++s) {
        for (Elem a = 1; a <= ty; ++a) {
          Elem lhs = t.mult(x * y, t.map(sigma, costrength(x, ty, s, a)));
          Elem rhs = t.mult(x * y, t.map(cosigma, t.strength(tx, y, s, a)));
          report.check(lhs == rhs, "commutative",
                       {{"sizes", {x, y}}, {"elements", {s, a}}});
        }
      }
    }
  }
  return report;
}

Strength monad_strength(SetMonad const &t)
{
  return [&t](std::size_t x, std::size_t y, Elem e, Elem a) {
    return t.strength(x, y, e, a);
  };
}

Enrichment functor_enrichment(SetMonad const &t)
{
  return [&t](PointedMap const &f) { return t.map_table(f); };
}

std::vector<PointedMap> strength_to_enrichment(SetMonad const &t,
                                               Strength const &sigma,
                                               std::size_t x, std::size_t y)
{
  std::size_t h = hom_count(x, y);
  std::size_t tx = t.apply(x), ty = t.apply(y);
  PointedMap evaluation = ev(FinPointedSet(x), FinPointedSet(y));
  std::vector<PointedMap> result;
  result.reserve(h);
  for (std::size_t f = 0; f < h; ++f) {
    std::vector<Elem> table(tx + 1, 0);
    if (f != 0) {
      for (Elem a = 1; a <= tx; ++a)
        table[a] = t.map(evaluation, sigma(h - 1, x, f, a));
    }
    result.emplace_back(ty, std::move(table));
  }
  return result;
}

PointedMap enrichment_to_strength(SetMonad const &t, Enrichment const &phi,
                                  std::size_t x, std::size_t y)
{
  std::size_t ty = t.apply(y);
  std::vector<Elem> table(x * ty + 1, 0);
  for (Elem e = 1; e <= x; ++e) {
    PointedMap image = phi(left_smash(x, y, e));
    for (Elem a = 1; a <= ty; ++a)
      table[smash_pair(ty, e, a)] = image(a);
  }
  return PointedMap(t.apply(x * y), std::move(table));
}

PointedMap enrichment_as_map(std::vector<PointedMap> const &phi,
                             std::size_t tx, std::size_t ty)
{
  std::size_t h = hom_count(tx, ty);
  std::vector<Elem> table(phi.size(), 0);
  for (std::size_t f = 0; f < phi.size(); ++f)
    table[f] = map_index(phi[f]);
  return PointedMap(h - 1, std::move(table));
}

LawReport check_strength_enrichment(SetMonad const &t, std::size_t max_size)
{
  LawReport report;
  report.suite = "strength-enrichment:" + t.name();
  std::size_t top = max_size;
  Strength sigma = monad_strength(t);
  Enrichment phi = functor_enrichment(t);

  // The enrichment induced by sigma, evaluated at a single map.
  Enrichment phi_sigma = [&](PointedMap const &f) {
    std::size_t a = f.dom(), b = f.cod();
    std::size_t h = hom_count(a, b);
    PointedMap evaluation = ev(FinPointedSet(a), FinPointedSet(b));
    Elem fi = map_index(f);
    std::vector<Elem> table(t.apply(a) + 1, 0);
    if (fi != 0) {
      for (Elem s = 1; s <= t.apply(a); ++s)
        table[s] = t.map(evaluation, sigma(h - 1, a, fi, s));
    }
    return PointedMap(t.apply(b), std::move(table));
  };
  // The strength induced by phi.
  Strength sigma_phi = [&](std::size_t a, std::size_t b, Elem e, Elem s) {
    if (e == 0 || s == 0)
      return Elem{0};
    return t.map(left_smash(a, b, e), s);
  };

  for (std::size_t x = 0; x <= top; ++x) {
    for (std::size_t y = 0; y <= top; ++y) {
      PointedMap direct = t.strength_table(x, y);
      PointedMap back = enrichment_to_strength(t, phi_sigma, x, y);
      report.check(direct == back, "strength round trip",
                   {{"sizes", {x, y}}});

      std::vector<PointedMap> start = strength_to_enrichment(t, sigma_phi, x, y);
      std::size_t h = hom_count(x, y);
      for (std::size_t f = 0; f < h; ++f) {
        PointedMap tf = phi(map_at(x, y, f));
        report.check(start[f] == tf, "enrichment round trip",
                     {{"sizes", {x, y}}, {"map", map_at(x, y, f).table()}});
      }
      report.check(phi(PointedMap::zero(x, y)) ==
                       PointedMap::zero(t.apply(x), t.apply(y)),
                   "zero morphism", {{"sizes", {x, y}}});
    }
  }
  return report;
}

PointedMonoid endomorphism_monoid(SetMonad const &t)
{
  PointedMonoid m;
  m.name = "T(I):" + t.name();
  m.size = t.apply(1);
  m.unit = t.unit(1, 1);
  std::size_t n = m.size;
  m.table.assign((n + 1) * (n + 1), 0);
  for (Elem a = 1; a <= n; ++a) {
    for (Elem b = 1; b <= n; ++b)
      m.table[a * (n + 1) + b] = t.mult(1, t.strength(n, 1, a, b));
  }
  return m;
}

PointedMap lambda_map(SetMonad const &t, std::size_t x)
{
  std::size_t n = t.apply(1);
  std::vector<Elem> table(x * n + 1, 0);
  for (Elem e = 1; e <= x; ++e) {
    for (Elem a = 1; a <= n; ++a)
      table[smash_pair(n, e, a)] = t.strength(x, 1, e, a);
  }
  return PointedMap(t.apply(x), std::move(table));
}

LambdaReport check_lambda(SetMonad const &t, std::size_t max_size)
{
  LambdaReport result;
  LawReport &report = result.laws;
  report.suite = "lambda:" + t.name();
  std::size_t top = max_size;
  PointedMonoid m = endomorphism_monoid(t);
  report.merge(validate_monoid(m));
  MonoidMonad tm(m);
  std::size_t n = m.size;

  for (std::size_t x = 0; x <= top; ++x) {
    PointedMap lx = lambda_map(t, x);
    PointedMap lxm = lambda_map(t, x * n);
    result.bijective.push_back(lx.is_bijective());
    for (Elem e = 1; e <= x; ++e) {
      report.check(lx(tm.unit(x, e)) == t.unit(x, e), "unit triangle",
                   {{"size", x}, {"element", e}});
      for (Elem a = 1; a <= n; ++a) {
        for (Elem b = 1; b <= n; ++b) {
          Elem w = smash_pair(n, smash_pair(n, e, a), b);
          Elem lhs = lx(tm.mult(x, w));
          Elem rhs = t.mult(x, t.map(lx, lxm(w)));
          report.check(lhs == rhs, "multiplication square",
                       {{"size", x}, {"elements", {e, a, b}}});
        }
      }
    }
    for (std::size_t y = 0; y <= top; ++y) {
      PointedMap ly = lambda_map(t, y);
      PointedMap lxy = lambda_map(t, x * y);
      std::size_t count = hom_count(x, y);
      for (std::size_t h = 0; h < count; ++h) {
        PointedMap f = map_at(x, y, h);
        for (Elem e = 1; e <= x; ++e) {
          for (Elem a = 1; a <= n; ++a)
            report.check(t.map(f, lx(smash_pair(n, e, a))) ==
                             ly(smash_pair(n, f(e), a)),
                         "natural", {{"map", f.table()}, {"elements", {e, a}}});
        }
      }
      for (Elem e = 1; e <= x; ++e) {
        for (Elem e2 = 1; e2 <= y; ++e2) {
          for (Elem a = 1; a <= n; ++a) {
            Elem s = smash_pair(n, e2, a);
            report.check(lxy(tm.strength(x, y, e, s)) ==
                             t.strength(x, y, e, ly(s)),
                         "strong", {{"sizes", {x, y}},
                                    {"elements", {e, e2, a}}});
          }
        }
      }
    }
  }
  return result;
}

LawReport check_module(MonoidModule const &mod)
{
  LawReport report;
  report.suite = "module:" + mod.monoid.name;
  PointedMonoid const &m = mod.monoid;
  std::size_t n = m.size;
  report.check(mod.action.dom() == mod.carrier * n &&
                   mod.action.cod() == mod.carrier,
               "action shape");
  if (!report.ok())
    return report;
  for (Elem x = 1; x <= mod.carrier; ++x) {
    report.check(mod.action(smash_pair(n, x, m.unit)) == x, "unit",
                 {{"element", x}});
    for (Elem a = 1; a <= n; ++a) {
      Elem xa = mod.action(smash_pair(n, x, a));
      for (Elem b = 1; b <= n; ++b)
        report.check(mod.action(smash_pair(n, xa, b)) ==
                         mod.action(smash_pair(n, x, m(a, b))),
                     "associativity", {{"element", x}, {"monoid", {a, b}}});
    }
  }
  return report;
}

} // namespace gammacalc

#include "gammacalc/theories.hpp"

#include <string>

#include "gammacalc/errors.hpp"

namespace gammacalc {

using json = nlohmann::ordered_json;

namespace {

std::size_t pow_checked(std::size_t base, std::size_t exp)
{
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > static_cast<std::size_t>(-1) / base)
      throw SizeGuard("degree too large for an element index");
    r *= base;
  }
  return r;
}

// id_m smash (1 -> n, 1 |-> j): m -> mn.
PointedMap column_inclusion(std::size_t m, std::size_t n, Elem j)
{
  std::vector<Elem> table(m + 1, 0);
  for (Elem i = 1; i <= m; ++i)
    table[i] = smash_pair(n, i, j);
  return PointedMap(m * n, std::move(table));
}

GammaMap formula_mult(TheoryFormula const &f, GammaSet const &carrier,
                      CircleProduct const &square)
{
  GammaMap mult;
  for (std::size_t k = 0; k <= carrier.bound(); ++k) {
    auto const &t = square.tables[k];
    std::size_t s = carrier.level(k);
    std::vector<Elem> table(t.classes().size() + 1, 0);
    std::vector<bool> seen(table.size(), false);
    for (std::size_t i = 1; i < t.node_count(); ++i) {
      CoendElement e = t.node(i);
      Elem value = f.substitute(e.degree, e.label,
                                map_at(e.degree, s, e.eval).table(), k);
      Elem c = t.class_of_node(i);
      if (seen[c] && table[c] != value)
        throw TheoryInvalid("multiplication is not constant on a class in "
                            "degree " + std::to_string(k));
      seen[c] = true;
      table[c] = value;
    }
    mult.components.emplace_back(s, std::move(table));
  }
  return mult;
}

} // anonymous namespace

std::size_t PowersetFormula::level(std::size_t k) const
{
  if (k >= 8 * sizeof(std::size_t) - 1)
    throw SizeGuard("powerset of " + std::to_string(k) + " elements");
  return (std::size_t{1} << k) - 1;
}

Elem PowersetFormula::act(PointedMap const &alpha, Elem x) const
{
  level(alpha.dom());
  level(alpha.cod());
  Elem r = 0;
  for (Elem i = 1; i <= alpha.dom(); ++i) {
    if ((x >> (i - 1)) & 1) {
      Elem j = alpha(i);
      if (j != 0)
        r |= Elem{1} << (j - 1);
    }
  }
  return r;
}

Elem PowersetFormula::substitute(std::size_t m, Elem a,
                                 std::vector<Elem> const &z,
                                 std::size_t) const
{
  Elem r = 0;
  for (Elem i = 1; i <= m; ++i) {
    if ((a >> (i - 1)) & 1)
      r |= z[i];
  }
  return r;
}

std::string RepresentableFormula::name() const
{ return "representable" + std::to_string(_n); }

std::size_t RepresentableFormula::level(std::size_t k) const
{ return pow_checked(k + 1, _n) - 1; }

Elem RepresentableFormula::act(PointedMap const &alpha, Elem x) const
{ return map_index(compose(alpha, map_at(_n, alpha.dom(), x))); }

Elem RepresentableFormula::unit() const
{ return level(1); }

Elem RepresentableFormula::substitute(std::size_t m, Elem a,
                                      std::vector<Elem> const &z,
                                      std::size_t k) const
{
  PointedMap f = map_at(_n, m, a);
  std::vector<Elem> table(_n + 1, 0);
  for (Elem j = 1; j <= _n; ++j) {
    Elem i = f(j);
    if (i != 0)
      table[j] = map_at(_n, k, z[i])(j);
  }
  return map_index(PointedMap(k, std::move(table)));
}

GammaSet tabulate(TheoryFormula const &formula, std::size_t bound)
{
  std::vector<std::size_t> levels(bound + 1);
  for (std::size_t k = 0; k <= bound; ++k)
    levels[k] = formula.level(k);
  return GammaSet::tabulate(levels, [&](PointedMap const &alpha, Elem x) {
    return formula.act(alpha, x);
  });
}

GammaTheory make_theory(FormulaPtr formula, std::size_t bound)
{
  if (bound < 1)
    throw std::invalid_argument("a theory needs degree 1");
  GammaTheory th;
  th.name = formula->name();
  th.formula = formula;
  th.carrier = tabulate(*formula, bound);
  std::size_t d = formula->presentation_degree(bound);
  if (d < 1)
    d = 1;
  th.lowering = LoweringIndex(th.carrier, d);
  th.square = circle(th.carrier, th.carrier, d);
  th.unit = yoneda_map(th.carrier, 1, formula->unit());
  th.mult = formula_mult(*formula, th.carrier, th.square);
  return th;
}

GammaTheory make_theory(std::string name, GammaSet carrier, GammaMap unit,
                        GammaMap mult, std::size_t degree)
{
  GammaTheory th;
  th.name = std::move(name);
  th.carrier = std::move(carrier);
  th.lowering = LoweringIndex(th.carrier, degree);
  th.square = circle(th.carrier, th.carrier, degree);
  std::size_t d = th.carrier.bound();
  if (unit.components.size() != d + 1 || mult.components.size() != d + 1)
    throw TheoryInvalid("unit or multiplication has the wrong bound");
  for (std::size_t k = 0; k <= d; ++k) {
    if (unit.components[k].dom() != k ||
        unit.components[k].cod() != th.carrier.level(k))
      throw TheoryInvalid("unit has the wrong shape in degree " +
                          std::to_string(k));
    if (mult.components[k].dom() != th.square.set.level(k) ||
        mult.components[k].cod() != th.carrier.level(k))
      throw TheoryInvalid("multiplication has the wrong shape in degree " +
                          std::to_string(k));
  }
  th.unit = std::move(unit);
  th.mult = std::move(mult);
  return th;
}

GammaTheory trivial_theory(std::size_t bound)
{
  auto th = make_theory(std::make_shared<RepresentableFormula>(1), bound);
  th.name = "trivial";
  return th;
}

GammaTheory representable_theory(std::size_t n, std::size_t bound)
{ return make_theory(std::make_shared<RepresentableFormula>(n), bound); }

GammaTheory free_semilattice_theory(std::size_t bound)
{ return make_theory(std::make_shared<PowersetFormula>(), bound); }

LawReport validate_theory(GammaTheory const &th)
{
  LawReport report;
  report.suite = "theory:" + th.name;
  GammaSet const &a = th.carrier;
  std::size_t d = a.bound();
  auto const &tables = th.square.tables;

  GammaSet gamma1 = representable(1, d);
  LawReport unit_nat = check_natural(gamma1, a, th.unit);
  for (auto &v : unit_nat.violations)
    v.law = "unit natural: " + v.law;
  report.merge(unit_nat);
  LawReport mult_nat = check_natural(th.square.set, a, th.mult);
  for (auto &v : mult_nat.violations)
    v.law = "mult natural: " + v.law;
  report.merge(mult_nat);

  Elem u = th.unit(1, 1);
  for (std::size_t k = 0; k <= d; ++k) {
    std::size_t s = a.level(k);
    std::vector<Elem> iota(k + 1, 0);
    for (Elem j = 1; j <= k; ++j)
      iota[j] = th.unit(k, j);
    PointedMap unit_family(s, iota);
    for (Elem x = 1; x <= s; ++x) {
      Elem left = th.mult(k, tables[k].class_of(1, u, PointedMap(s, {0, x})));
      report.check(left == x, "left unit", {{"degree", k}, {"element", x}});
      Elem right = th.mult(k, class_of_any(tables[k], th.lowering, k, x,
                                            unit_family));
      report.check(right == x, "right unit", {{"degree", k}, {"element", x}});
    }
  }

  for (std::size_t k = 0; k <= d; ++k) {
    std::size_t s = a.level(k);
    for (std::size_t n = 1; n <= d; ++n) {
      std::size_t cn = th.square.set.level(n);
      std::size_t count = hom_count(n, s);
      for (Elem c = 1; c <= cn; ++c) {
        auto const &w = tables[n].witness(c);
        PointedMap z = map_at(w.degree, a.level(n), w.eval);
        Elem mc = th.mult(n, c);
        for (std::size_t yi = 0; yi < count; ++yi) {
          PointedMap y = map_at(n, s, yi);
          Elem lhs = th.mult(k, class_of_any(tables[k], th.lowering, n, mc, y));
          std::vector<Elem> inner(w.degree + 1, 0);
          for (Elem i = 1; i <= w.degree; ++i)
            inner[i] = th.mult(k, class_of_any(tables[k], th.lowering, n,
                                               z(i), y));
          Elem rhs = th.mult(k, tables[k].class_of(
                                    w.degree, w.label,
                                    PointedMap(s, std::move(inner))));
          report.check(lhs == rhs, "associativity",
                       {{"degree", k}, {"inner_degree", n}, {"class", c},
                        {"eval", y.table()}});
        }
      }
    }
  }
  return report;
}

LawReport validate_ring(GammaRing const &ring)
{
  LawReport report;
  report.suite = "ring:" + ring.name;
  GammaSet const &a = ring.carrier;
  std::size_t d = a.bound();

  LawReport unit_nat = check_natural(representable(1, d), a, ring.unit);
  report.merge(unit_nat);

  for (std::size_t m = 0; m <= d; ++m) {
    for (std::size_t n = 0; m * n <= d && n <= d; ++n) {
      for (std::size_t m1 = 0; m1 <= d; ++m1) {
        for (std::size_t n1 = 0; m1 * n1 <= d && n1 <= d; ++n1) {
          std::size_t ca = hom_count(m, m1), cb = hom_count(n, n1);
          for (std::size_t ha = 0; ha < ca; ++ha) {
            for (std::size_t hb = 0; hb < cb; ++hb) {
              PointedMap alpha = map_at(m, m1, ha), beta = map_at(n, n1, hb);
              PointedMap ab = smash_maps(alpha, beta);
              for (Elem x = 1; x <= a.level(m); ++x) {
                for (Elem y = 1; y <= a.level(n); ++y) {
                  Elem lhs = ring.at(m1, n1)(smash_pair(
                      a.level(n1), a.act(m, m1, ha, x), a.act(n, n1, hb, y)));
                  Elem rhs = a.act(ab, ring.at(m, n)(
                                           smash_pair(a.level(n), x, y)));
                  report.check(lhs == rhs, "binatural",
                               {{"alpha", alpha.table()},
                                {"beta", beta.table()},
                                {"left", x}, {"right", y}});
                }
              }
            }
          }
        }
      }
    }
  }

  Elem u = ring.unit(1, 1);
  for (std::size_t n = 0; n <= d; ++n) {
    for (Elem x = 1; x <= a.level(n); ++x) {
      report.check(ring.at(1, n)(smash_pair(a.level(n), u, x)) == x,
                   "left unit", {{"degree", n}, {"element", x}});
      report.check(ring.at(n, 1)(smash_pair(a.level(1), x, u)) == x,
                   "right unit", {{"degree", n}, {"element", x}});
    }
  }

  for (std::size_t l = 1; l <= d; ++l) {
    for (std::size_t m = 1; l * m <= d; ++m) {
      for (std::size_t n = 1; l * m * n <= d; ++n) {
        for (Elem x = 1; x <= a.level(l); ++x) {
          for (Elem y = 1; y <= a.level(m); ++y) {
            Elem xy = ring.at(l, m)(smash_pair(a.level(m), x, y));
            for (Elem z = 1; z <= a.level(n); ++z) {
              Elem yz = ring.at(m, n)(smash_pair(a.level(n), y, z));
              Elem lhs = ring.at(l * m, n)(smash_pair(a.level(n), xy, z));
              Elem rhs = ring.at(l, m * n)(smash_pair(a.level(m * n), x, yz));
              report.check(lhs == rhs, "associativity",
                           {{"degrees", {l, m, n}}, {"elements", {x, y, z}}});
            }
          }
        }
      }
    }
  }
  return report;
}

EndomorphismRing endomorphism_gamma_ring(GammaTheory const &th)
{
  EndomorphismRing result;
  GammaRing &ring = result.ring;
  ring.name = th.name;
  ring.carrier = th.carrier;
  ring.unit = th.unit;
  GammaSet const &a = th.carrier;
  std::size_t d = a.bound();
  auto const &tables = th.square.tables;
  result.two_path.suite = "ring two-path:" + th.name;

  ring.mult.resize((d + 1) * (d + 1));
  for (std::size_t m = 0; m <= d; ++m) {
    for (std::size_t n = 0; n <= d; ++n) {
      if (m * n > d)
        continue;
      std::size_t mn = m * n, sm = a.level(m), sn = a.level(n);
      std::vector<Elem> table(sm * sn + 1, 0);
      for (Elem y = 1; y <= sn; ++y) {
        // Assembly: x smash y |-> [x, i |-> A(kappa_i)(y)].
        std::vector<Elem> z(m + 1, 0);
        for (Elem i = 1; i <= m; ++i)
          z[i] = a.act(block_inclusion(m, n, i), y);
        PointedMap zm(a.level(mn), std::move(z));
        for (Elem x = 1; x <= sm; ++x) {
          Elem value =
              th.mult(mn, class_of_any(tables[mn], th.lowering, m, x, zm));
          table[smash_pair(sn, x, y)] = value;

          // Strength at the degree-1 representable: x smash [y, id] |->
          // [y, j |-> x smash e_j], then the unit isomorphism
          // x smash e_j |-> A(id_m smash e_j)(x), then mult.
          std::vector<Elem> w(n + 1, 0);
          for (Elem j = 1; j <= n; ++j)
            w[j] = a.act(column_inclusion(m, n, j), x);
          Elem other = th.mult(mn, class_of_any(tables[mn], th.lowering, n, y,
                                                PointedMap(a.level(mn), w)));
          result.two_path.check(value == other, "assembly vs strength",
                                {{"degrees", {m, n}}, {"left", x},
                                 {"right", y}});
        }
      }
      ring.mult[m * (d + 1) + n] = PointedMap(a.level(mn), std::move(table));
    }
  }
  return result;
}

LawReport check_assembly_lax(GammaSet const &a, GammaSet const &b,
                             std::size_t da)
{
  LawReport report;
  report.suite = "assembly lax";
  std::size_t d = a.bound();
  if (b.bound() != d)
    throw DegreeMismatch("Gamma-sets with different bounds");
  GammaSet gamma1 = representable(1, d);

  // Left unit: Gamma^1 o A at 1 smash x is the class of [1, 1 |-> x], which
  // corresponds to x.
  CircleProduct left = circle(gamma1, a, 1);
  for (std::size_t k = 0; k <= d; ++k) {
    for (Elem x = 1; x <= a.level(k); ++x) {
      Elem c = left.tables[k].class_of(1, 1, PointedMap(a.level(k), {0, x}));
      auto const &w = left.tables[k].witness(c);
      Elem image = map_at(w.degree, a.level(k), w.eval)(w.label);
      report.check(image == x, "left unit", {{"degree", k}, {"element", x}});
    }
  }

  // Right unit: [x, i |-> e_i] corresponds to A(id)(x) = x by co-Yoneda.
  CircleProduct right = circle(a, gamma1, da);
  LoweringIndex low(a, da);
  for (std::size_t m = 0; m <= d; ++m) {
    std::vector<Elem> e(m + 1, 0);
    for (Elem i = 1; i <= m; ++i)
      e[i] = i;
    PointedMap id(m, e);
    for (Elem x = 1; x <= a.level(m); ++x) {
      Elem c = class_of_any(right.tables[m], low, m, x, id);
      auto const &w = right.tables[m].witness(c);
      Elem image = a.act(map_at(w.degree, m, w.eval), w.label);
      report.check(image == x, "right unit", {{"degree", m}, {"element", x}});
    }
  }

  // Associativity: after the comparison of iterated prolongations, the two
  // routes from A smash B smash C agree iff for each block i the inner
  // representatives [B(kappa_i)(y), p |-> C(kappa_p)(z)] and
  // (B o C)(kappa_i)[y, j |-> C(kappa_j)(z)] coincide. Here the pair is
  // (a, b) in the roles of B and C.
  CircleProduct bc = circle(a, b, da);
  LoweringIndex low_a(a, da);
  for (std::size_t l = 1; l <= d; ++l) {
    for (std::size_t m = 1; l * m <= d; ++m) {
      for (std::size_t n = 1; l * m * n <= d; ++n) {
        std::size_t lm = l * m, mn = m * n, lmn = l * m * n;
        for (Elem z = 1; z <= b.level(n); ++z) {
          std::vector<Elem> outer(lm + 1, 0);
          for (Elem p = 1; p <= lm; ++p)
            outer[p] = b.act(block_inclusion(lm, n, p), z);
          PointedMap outer_map(b.level(lmn), outer);
          std::vector<Elem> inner(m + 1, 0);
          for (Elem j = 1; j <= m; ++j)
            inner[j] = b.act(block_inclusion(m, n, j), z);
          PointedMap inner_map(b.level(mn), inner);
          for (Elem y = 1; y <= a.level(m); ++y) {
            Elem yz = class_of_any(bc.tables[mn], low_a, m, y, inner_map);
            for (Elem i = 1; i <= l; ++i) {
              PointedMap kappa = block_inclusion(l, mn, i);
              Elem lhs = class_of_any(bc.tables[lmn], low_a, lm,
                                      a.act(block_inclusion(l, m, i), y),
                                      outer_map);
              Elem rhs = bc.set.act(kappa, yz);
              report.check(lhs == rhs, "associativity",
                           {{"degrees", {l, m, n}}, {"block", i},
                            {"elements", {y, z}}});
            }
          }
        }
      }
    }
  }
  return report;
}

} // namespace gammacalc

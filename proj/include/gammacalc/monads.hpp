#ifndef GAMMACALC_MONADS_HPP
#define GAMMACALC_MONADS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gammacalc/law_report.hpp"
#include "gammacalc/pointed.hpp"
#include "gammacalc/prolongation.hpp"
#include "gammacalc/theories.hpp"

namespace gammacalc {

// A strong monad on finite pointed sets, evaluated elementwise. Objects are
// given by their number of non-basepoint elements; smash products use the
// lexicographic pairing, so the associativity and unit isomorphisms of the
// smash product are identities on indices.
class SetMonad
{
public:
  virtual ~SetMonad() = default;

  virtual std::string name() const = 0;
  virtual std::size_t apply(std::size_t x) const = 0;

  // T(f)(t) for t in T(dom f).
  virtual Elem map(PointedMap const &f, Elem t) const = 0;
  // eta_X(e).
  virtual Elem unit(std::size_t x, Elem e) const = 0;
  // mu_X(t) for t in T(T(X)).
  virtual Elem mult(std::size_t x, Elem t) const = 0;
  // sigma_{X,Y}(e smash t) in T(X smash Y) for e in X, t in T(Y).
  virtual Elem strength(std::size_t x, std::size_t y, Elem e, Elem t) const = 0;

  // True for monads of the form - smash M.
  virtual bool monoid_induced() const { return false; }

  PointedMap map_table(PointedMap const &f) const;
  PointedMap unit_table(std::size_t x) const;
  PointedMap mult_table(std::size_t x) const;
  // X smash T(Y) -> T(X smash Y).
  PointedMap strength_table(std::size_t x, std::size_t y) const;
};

using MonadPtr = std::shared_ptr<SetMonad const>;

// A finite monoid with absorbing basepoint 0. Elements 1..size; the table is
// indexed a * (size + 1) + b.
struct PointedMonoid
{
  std::string name;
  std::size_t size = 0;
  Elem unit = 1;
  std::vector<Elem> table;

  Elem operator()(Elem a, Elem b) const { return table[a * (size + 1) + b]; }
};

LawReport validate_monoid(PointedMonoid const &m);

// S^0 = {0, 1}.
PointedMonoid unit_monoid();
// {0, 1, g} with g * g = 1, the two-element group with a basepoint added.
PointedMonoid sign_monoid();
// {0, 1, a} with a * a = 0.
PointedMonoid nilpotent_monoid();

// The monad T(X) = X smash M of a pointed monoid. The element x smash a is
// smash_pair(|M|, x, a).
class MonoidMonad : public SetMonad
{
public:
  explicit MonoidMonad(PointedMonoid m) : _m(std::move(m)) {}

  PointedMonoid const &monoid() const { return _m; }

  std::string name() const override { return "smash:" + _m.name; }
  std::size_t apply(std::size_t x) const override { return x * _m.size; }
  Elem map(PointedMap const &f, Elem t) const override;
  Elem unit(std::size_t x, Elem e) const override;
  Elem mult(std::size_t x, Elem t) const override;
  Elem strength(std::size_t x, std::size_t y, Elem e,
                Elem t) const override;
  bool monoid_induced() const override { return true; }

private:
  PointedMonoid _m;
};

// The prolongation of a formula theory, evaluated through co-Yoneda: T(X) is
// the degree |X| part of the theory, and a class [a, y] corresponds to A(y)(a).
class FormulaMonad : public SetMonad
{
public:
  explicit FormulaMonad(FormulaPtr f) : _f(std::move(f)) {}

  TheoryFormula const &formula() const { return *_f; }

  std::string name() const override { return _f->name(); }
  std::size_t apply(std::size_t x) const override { return _f->level(x); }
  Elem map(PointedMap const &f, Elem t) const override;
  Elem unit(std::size_t x, Elem e) const override;
  Elem mult(std::size_t x, Elem t) const override;
  Elem strength(std::size_t x, std::size_t y, Elem e,
                Elem t) const override;
  bool monoid_induced() const override;

private:
  FormulaPtr _f;
};

// The prolongation of a tabulated theory, computed by coends: eta_X(x) is the
// class of [u, 1 |-> x], mu_X combines representatives along wedge
// inclusions and applies the theory multiplication, and sigma is the
// strength of the prolongation. Coend tables are built on demand and cached.
// Throws SizeGuard when a wedge of representatives leaves the bound.
class CoendMonad : public SetMonad
{
public:
  explicit CoendMonad(GammaTheory th) : _th(std::move(th)) {}

  GammaTheory const &theory() const { return _th; }
  CoendTable const &table(std::size_t x) const;

  std::string name() const override { return "coend:" + _th.name; }
  std::size_t apply(std::size_t x) const override;
  Elem map(PointedMap const &f, Elem t) const override;
  Elem unit(std::size_t x, Elem e) const override;
  Elem mult(std::size_t x, Elem t) const override;
  Elem strength(std::size_t x, std::size_t y, Elem e,
                Elem t) const override;

private:
  GammaTheory _th;
  mutable std::map<std::size_t, CoendTable> _tables;
};

// The formula route when the theory has one, the coend route otherwise.
// Throws TheoryInvalid if the theory fails validation.
MonadPtr monad_from_theory(GammaTheory const &th);
MonadPtr monoid_to_monad(PointedMonoid const &m);

// Compares the coend route with the formula route: the co-Yoneda comparison
// must be a bijection carrying unit, functoriality and strength across for
// all sizes <= max_size, and multiplication for sizes <= max_mult_size.
LawReport compare_monad_routes(GammaTheory const &th, std::size_t max_size,
                               std::size_t max_mult_size);

// Scans below cover every object with at most max_size non-basepoint
// elements.

// Functor, monad and strong monad laws.
LawReport check_strong_monad(SetMonad const &t, std::size_t max_size);

// The two composites T(X) smash T(Y) -> T(X smash Y); informational.
LawReport check_commutativity(SetMonad const &t, std::size_t max_size);

// sigma_{X,Y}(e smash t), as a function of the sizes of X and Y.
using Strength =
    std::function<Elem(std::size_t x, std::size_t y, Elem e, Elem t)>;

// An enrichment sends f: A -> B to a map T(A) -> T(B).
using Enrichment = std::function<PointedMap(PointedMap const &f)>;

Strength monad_strength(SetMonad const &t);

// The enrichment f |-> T(f) of a functor on finite pointed sets.
Enrichment functor_enrichment(SetMonad const &t);

// phi(f) = T(ev) o sigma_{Map(X,Y), X}(f smash -), listed by the map index
// of f: X -> Y.
std::vector<PointedMap> strength_to_enrichment(SetMonad const &t,
                                               Strength const &sigma,
                                               std::size_t x, std::size_t y);

// sigma(e smash t) = phi_{Y, X smash Y}(gamma(e))(t), as a table
// X smash T(Y) -> T(X smash Y).
PointedMap enrichment_to_strength(SetMonad const &t, Enrichment const &phi,
                                  std::size_t x, std::size_t y);

// Encodes a listed enrichment as a pointed map Map(X, Y) -> Map(TX, TY).
// Throws SizeGuard if the target map space is too large to index.
PointedMap enrichment_as_map(std::vector<PointedMap> const &phi,
                             std::size_t tx, std::size_t ty);

// Both round trips as table equalities.
LawReport check_strength_enrichment(SetMonad const &t, std::size_t max_size);

// T(I) with multiplication mu_I o sigma_{T(I), I}.
PointedMonoid endomorphism_monoid(SetMonad const &t);

// lambda_X = sigma_{X, I}: X smash T(I) -> T(X).
PointedMap lambda_map(SetMonad const &t, std::size_t x);

struct LambdaReport
{
  LawReport laws;
  std::vector<bool> bijective;  // indexed by non-basepoint size
};

// Unit triangle, multiplication square, naturality and compatibility with
// strengths for lambda, plus bijectivity at each size.
LambdaReport check_lambda(SetMonad const &t, std::size_t max_size);

struct MonoidModule
{
  PointedMonoid monoid;
  std::size_t carrier = 0;
  PointedMap action;  // carrier smash monoid -> carrier
};

LawReport check_module(MonoidModule const &m);

} // namespace gammacalc

#endif // GAMMACALC_MONADS_HPP

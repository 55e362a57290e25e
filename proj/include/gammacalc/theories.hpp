#ifndef GAMMACALC_THEORIES_HPP
#define GAMMACALC_THEORIES_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gammacalc/gamma_set.hpp"
#include "gammacalc/law_report.hpp"
#include "gammacalc/pointed.hpp"
#include "gammacalc/prolongation.hpp"

namespace gammacalc {

// A Gamma-theory given by closed formulas in every degree, so that its
// prolongation can be evaluated at any finite pointed set by co-Yoneda.
class TheoryFormula
{
public:
  virtual ~TheoryFormula() = default;

  virtual std::string name() const = 0;

  // Non-basepoint elements in degree k. Throws SizeGuard on overflow.
  virtual std::size_t level(std::size_t k) const = 0;

  virtual Elem act(PointedMap const &alpha, Elem x) const = 0;

  // The image of the generator of degree 1.
  virtual Elem unit() const = 0;

  // The multiplication of [a, z] for a in degree m and z = (0, z_1, ..., z_m)
  // with entries in degree k.
  virtual Elem substitute(std::size_t m, Elem a, std::vector<Elem> const &z,
                          std::size_t k) const = 0;

  // Degree in which the theory is presented, or the bound if larger.
  virtual std::size_t presentation_degree(std::size_t bound) const = 0;

  // True if the induced monad is of the form - smash M.
  virtual bool monoid_induced() const { return false; }
};

using FormulaPtr = std::shared_ptr<TheoryFormula const>;

// Degree k holds the subsets of {1..k} as bitmasks; the empty set is the
// basepoint. Multiplication is union.
class PowersetFormula : public TheoryFormula
{
public:
  std::string name() const override { return "powerset"; }
  std::size_t level(std::size_t k) const override;
  Elem act(PointedMap const &alpha, Elem x) const override;
  Elem unit() const override { return 1; }
  Elem substitute(std::size_t m, Elem a, std::vector<Elem> const &z,
                  std::size_t k) const override;
  std::size_t presentation_degree(std::size_t bound) const override
  { return bound; }
};

// The representable of degree n with the diagonal as unit; multiplication
// takes the diagonal of a family of maps.
class RepresentableFormula : public TheoryFormula
{
public:
  explicit RepresentableFormula(std::size_t n) : _n(n) {}

  std::size_t degree() const { return _n; }

  std::string name() const override;
  std::size_t level(std::size_t k) const override;
  Elem act(PointedMap const &alpha, Elem x) const override;
  Elem unit() const override;
  Elem substitute(std::size_t m, Elem a, std::vector<Elem> const &z,
                  std::size_t k) const override;
  std::size_t presentation_degree(std::size_t bound) const override
  { return _n < bound ? _n : bound; }

  // Degree 1 gives the identity monad, which is - smash S^0.
  bool monoid_induced() const override { return _n == 1; }

private:
  std::size_t _n;
};

GammaSet tabulate(TheoryFormula const &formula, std::size_t bound);

struct GammaTheory
{
  std::string name;
  GammaSet carrier;
  GammaMap unit;           // from the representable of degree 1
  CircleProduct square;    // carrier o carrier
  GammaMap mult;           // square -> carrier
  LoweringIndex lowering;  // rewrites elements into the coend degree
  FormulaPtr formula;      // null for theories given only by tables
};

// Tabulates the formula up to the bound and builds mult from the circle
// product. Throws TheoryInvalid if mult is not constant on coend classes.
GammaTheory make_theory(FormulaPtr formula, std::size_t bound);

// A theory from explicit tables. Throws TheoryInvalid on ill-typed maps.
GammaTheory make_theory(std::string name, GammaSet carrier, GammaMap unit,
                        GammaMap mult, std::size_t degree);

GammaTheory trivial_theory(std::size_t bound);
GammaTheory representable_theory(std::size_t n, std::size_t bound);
GammaTheory free_semilattice_theory(std::size_t bound);

// Naturality of unit and mult, the two unit laws and associativity, checked
// on every representative up to the bound.
LawReport validate_theory(GammaTheory const &th);

// A monoid for the Day product, with multiplication given as the binatural
// family carrier(m) smash carrier(n) -> carrier(mn), defined for mn <= bound.
struct GammaRing
{
  std::string name;
  GammaSet carrier;
  GammaMap unit;
  std::vector<PointedMap> mult;

  PointedMap const &at(std::size_t m, std::size_t n) const
  { return mult[m * (carrier.bound() + 1) + n]; }
  bool defined(std::size_t m, std::size_t n) const
  { return m * n <= carrier.bound(); }
};

// Binaturality, unit and associativity wherever the degrees stay in range.
LawReport validate_ring(GammaRing const &ring);

struct EndomorphismRing
{
  GammaRing ring;
  // Agreement of the assembly route with the route through the strength of
  // the induced monad on Gamma-sets, evaluated at the degree-1 representable.
  LawReport two_path;
};

// mult = theory mult after the assembly map.
EndomorphismRing endomorphism_gamma_ring(GammaTheory const &th);

// Unit and associativity of the assembly as a lax monoidal transformation,
// checked elementwise on representatives up to the bound. The associativity
// check uses a and b as the two inner factors; da is the coend degree for a.
LawReport check_assembly_lax(GammaSet const &a, GammaSet const &b,
                             std::size_t da);

} // namespace gammacalc

#endif // GAMMACALC_THEORIES_HPP

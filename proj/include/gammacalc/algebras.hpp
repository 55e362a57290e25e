#ifndef GAMMACALC_ALGEBRAS_HPP
#define GAMMACALC_ALGEBRAS_HPP

#include <cstddef>
#include <vector>

#include "gammacalc/law_report.hpp"
#include "gammacalc/monads.hpp"
#include "gammacalc/pointed.hpp"

namespace gammacalc {

// An algebra (X, xi) with xi: T(X) -> X; carrier is the number of
// non-basepoint elements of X.
struct Algebra
{
  std::size_t carrier = 0;
  PointedMap structure;
};

LawReport check_algebra(SetMonad const &t, Algebra const &a);

// Throws AlgebraInvalid unless check_algebra passes.
void require_algebra(SetMonad const &t, Algebra const &a);

// (T X, mu_X).
Algebra free_algebra(SetMonad const &t, std::size_t x);

// Every structure map T(X) -> X satisfying the algebra laws, in map order.
std::vector<Algebra> enumerate_algebras(SetMonad const &t, std::size_t x);

bool is_algebra_morphism(SetMonad const &t, Algebra const &a,
                         Algebra const &b, PointedMap const &f);

// Brute force over all pointed maps, in map order.
std::vector<PointedMap> algebra_morphisms(SetMonad const &t, Algebra const &a,
                                          Algebra const &b);

// The equalizer of f |-> f o xi_X and f |-> xi_Y o T(f) on Map(X, Y),
// pointed by the zero morphism. maps[i] is the map index of element i.
struct EnrichedHom
{
  FinPointedSet set;
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<Elem> maps;

  PointedMap map(Elem i) const { return map_at(dom, cod, maps[i]); }
  // Element of the hom for a morphism, or throws std::out_of_range.
  Elem element(PointedMap const &f) const;
};

EnrichedHom enriched_hom_algebras(SetMonad const &t, Algebra const &a,
                                  Algebra const &b);

// T T X => T X -> X with d0 = mu_X, d1 = T(xi), split by eta_{TX} and
// eta_X, together with the direct check that the quotient of T X by the
// pair is X.
LawReport split_coequalizer_check(SetMonad const &t, Algebra const &a);

struct AlgebraCoequalizer
{
  Algebra algebra;
  PointedMap projection;
  // The comparison from the coequalizer of T(f), T(g) to T of the quotient.
  PointedMap comparison;
  bool preserved = false;
  // False when T T of the quotient exceeds the budget; the laws then follow
  // from the unit law and surjectivity of T of the projection, both checked.
  bool revalidated = false;
};

// Coequalizer of algebra maps f, g: A -> B with common section s: B -> A.
// Throws NotReflexive if s is not a common section, AlgebraInvalid if f or g
// is not a morphism, StructureNotInduced if the quotient carries no
// structure.
AlgebraCoequalizer algebra_coequalizer(SetMonad const &t, Algebra const &a,
                                       Algebra const &b, PointedMap const &f,
                                       PointedMap const &g,
                                       PointedMap const &section);

// The coequalizer of mu_X, T(xi): T T X => T X with common section T(eta_X).
// Both maps are morphisms of free algebras by construction, so only the
// section is checked.
AlgebraCoequalizer canonical_coequalizer(SetMonad const &t, Algebra const &a);

struct Tensor
{
  AlgebraCoequalizer coequalizer;
  PointedMap unit;  // Z smash X -> T(Z smash X) -> Z (x) X

  Algebra const &algebra() const { return coequalizer.algebra; }
};

// The coequalizer of T(Z smash xi) and mu o T(sigma) on
// T(Z smash T X) => T(Z smash X), with common section T(Z smash eta).
Tensor tensor_algebra(SetMonad const &t, std::size_t z, Algebra const &a);

// Carrier Map(Z, X) with structure w |-> (e |-> xi(T(ev)(sigma'(w smash e)))).
Algebra cotensor_algebra(SetMonad const &t, Algebra const &a, std::size_t z);

// The unit law of the cotensor and, for every e in Z, that evaluation at e
// is a morphism to X. As the evaluations are jointly injective this implies
// the multiplication law without enumerating T T of the carrier.
LawReport check_cotensor(SetMonad const &t, Algebra const &a, std::size_t z,
                         Algebra const &cotensor);

struct AdjunctionCheck
{
  std::size_t left = 0;   // |Hom(Z (x) X, Y)| including the basepoint
  std::size_t right = 0;  // |Map(Z, Hom(X, Y))| including the basepoint
  LawReport report;
};

// Hom(Z (x) X, Y) = Map(Z, Hom(X, Y)) with both maps checked mutually
// inverse.
AdjunctionCheck tensor_adjunction(SetMonad const &t, std::size_t z,
                                  Algebra const &x, Algebra const &y);

// Hom(Y, X^Z) = Map(Z, Hom(Y, X)) with both maps checked mutually inverse.
AdjunctionCheck cotensor_adjunction(SetMonad const &t, std::size_t z,
                                    Algebra const &x, Algebra const &y);

// X^(Z1 smash Z2) = (X^Z1)^Z2 via f |-> (e2 |-> (e1 |-> f(e1 smash e2))).
LawReport cotensor_composition(SetMonad const &t, Algebra const &a,
                               std::size_t z1, std::size_t z2);

// Levels B_n = T^{n+1} X for n <= k. faces[n][i] = d_i: B_n -> B_{n-1},
// degeneracies[n][i] = s_i: B_n -> B_{n+1} for n < k, extra[n] = eta_{B_n}
// for n < k, and augmentation = xi with extra_unit = eta_X.
struct BarResolution
{
  std::vector<std::size_t> sizes;
  std::vector<std::vector<PointedMap>> faces;
  std::vector<std::vector<PointedMap>> degeneracies;
  std::vector<PointedMap> extra;
  PointedMap augmentation;
  PointedMap extra_unit;
  LawReport report;
};

// Throws SizeGuard if an iterated T exceeds the budget.
BarResolution bar_resolution(SetMonad const &t, Algebra const &a,
                             std::size_t k);

// (X, xi o lambda_X) as a T(I)-module.
MonoidModule restrict_along_lambda(SetMonad const &t, Algebra const &a);

// For the free algebra on X, the restricted action on eta_X(e) smash t
// equals lambda_X(e smash t).
LawReport free_module_comparison(SetMonad const &t, std::size_t x);

} // namespace gammacalc

#endif // GAMMACALC_ALGEBRAS_HPP

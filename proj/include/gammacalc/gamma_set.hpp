#ifndef GAMMACALC_GAMMA_SET_HPP
#define GAMMACALC_GAMMA_SET_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gammacalc/law_report.hpp"
#include "gammacalc/pointed.hpp"

namespace gammacalc {

// A functor from finite pointed sets to pointed sets, truncated to degrees
// 0..bound. The action of every pointed map m -> n with m, n <= bound is
// stored as a table; tables for hom(m, n) are laid out by map_index.
class GammaSet
{
public:
  using ActFn = std::function<Elem(PointedMap const &alpha, Elem x)>;
  using Tables = std::vector<std::vector<std::vector<Elem>>>;

  GammaSet() : _levels{0} {}
  GammaSet(std::vector<std::size_t> levels, Tables tables);

  // Builds the tables by calling act(alpha, x) for x != 0.
  static GammaSet tabulate(std::vector<std::size_t> levels, ActFn const &act);

  // Builds the tables from whole action maps, one call per pointed map.
  static GammaSet from_actions(
      std::vector<std::size_t> levels,
      std::function<PointedMap(PointedMap const &alpha)> const &action);

  std::size_t bound() const { return _levels.size() - 1; }

  // Number of non-basepoint elements in degree k.
  std::size_t level(std::size_t k) const { return _levels.at(k); }
  std::vector<std::size_t> const &levels() const { return _levels; }

  Elem act(std::size_t m, std::size_t n, std::size_t h, Elem x) const
  { return _tables[m][n][h * (_levels[m] + 1) + x]; }

  Elem act(PointedMap const &alpha, Elem x) const
  { return act(alpha.dom(), alpha.cod(), map_index(alpha), x); }

  PointedMap action(PointedMap const &alpha) const;

  Tables const &tables() const { return _tables; }

private:
  std::vector<std::size_t> _levels;
  Tables _tables;
};

// Componentwise map of Gamma-sets with a common bound.
struct GammaMap
{
  std::vector<PointedMap> components;

  std::size_t bound() const { return components.size() - 1; }
  Elem operator()(std::size_t k, Elem x) const { return components[k](x); }
};

GammaMap identity_map(GammaSet const &a);
GammaMap compose(GammaMap const &g, GammaMap const &f);

LawReport validate(GammaSet const &a);
LawReport check_natural(GammaSet const &a,
                        GammaSet const &b,
                        GammaMap const &theta);
bool is_levelwise_bijective(GammaMap const &theta);
bool is_isomorphism(GammaSet const &a, GammaSet const &b,
                    GammaMap const &theta);

// The representable functor of degree n: degree k holds the pointed maps
// n -> k and acts by postcomposition.
GammaSet representable(std::size_t n, std::size_t bound);

// Precomposition with a pointed map alpha: m -> n gives a natural map from
// the representable of degree n to that of degree m.
GammaMap representable_map(PointedMap const &alpha, std::size_t bound);

// The natural map out of the representable of degree n sending the identity
// to x in a(n).
GammaMap yoneda_map(GammaSet const &a, std::size_t n, Elem x);

class GammaSubobject
{
public:
  GammaSubobject() = default;
  explicit GammaSubobject(GammaSet const &a, bool full = false);

  std::size_t bound() const { return _member.size() - 1; }
  bool contains(std::size_t k, Elem x) const { return _member[k][x]; }
  void insert(std::size_t k, Elem x) { _member[k][x] = true; }

  // Including the basepoint.
  std::size_t cardinality(std::size_t k) const;
  std::vector<Elem> elements(std::size_t k) const;

  bool subset_of(GammaSubobject const &other) const;
  bool operator==(GammaSubobject const &other) const
  { return _member == other._member; }

private:
  std::vector<std::vector<bool>> _member;
};

GammaSubobject subobject_generated(
    GammaSet const &a,
    std::vector<std::pair<std::size_t, Elem>> const &generators);

bool is_closed(GammaSet const &a, GammaSubobject const &s);

// Generated by all elements of degree <= n.
GammaSubobject skeleton(GammaSet const &a, std::size_t n);

bool generated_in_degree(GammaSet const &a, std::size_t d);

struct Latching
{
  std::vector<bool> member;
  GroupAction action;
};

// The part of a(n) generated by lower degrees, with the action of the
// symmetric group on a(n).
Latching latching(GammaSet const &a, std::size_t n);

GammaSubobject boundary(std::size_t n, std::size_t bound);
GammaSubobject outer_boundary(std::size_t n, std::size_t bound);

struct SubGammaSet
{
  GammaSet set;
  GammaMap inclusion;
  // position[k][x] is the index of x in the subobject, or 0.
  std::vector<std::vector<Elem>> position;
};

SubGammaSet sub_gamma_set(GammaSet const &a, GammaSubobject const &s);

// Restricts a subobject of a to the sub Gamma-set carried by t.
GammaSubobject restrict_subobject(SubGammaSet const &t,
                                  GammaSubobject const &s);

struct GammaQuotient
{
  GammaSet set;
  GammaMap projection;
};

GammaQuotient quotient_gamma(GammaSet const &a, GammaSubobject const &s);

// Levelwise quotient by the given relations. Throws SubobjectNotClosed if
// the relations do not generate a congruence.
GammaQuotient quotient_by_congruence(
    GammaSet const &a,
    std::vector<std::vector<std::pair<Elem, Elem>>> const &relations);

// Quotient by the orbits of a family of automorphisms.
GammaQuotient orbit_quotient(GammaSet const &a,
                             std::vector<GammaMap> const &automorphisms);

struct GammaWedge
{
  GammaSet set;
  GammaMap left;
  GammaMap right;
};

GammaWedge wedge(GammaSet const &a, GammaSet const &b);

GammaSet truncate(GammaSet const &a, std::size_t bound);

struct CofibrancyWitness
{
  std::size_t degree;
  Elem element;
  PointedMap permutation;
};

// Free action of the symmetric group on the complement of the latching
// object in each degree. The witness is a non-latching element fixed by a
// non-identity permutation.
std::optional<CofibrancyWitness> cofibrancy_witness(GammaSet const &a);
bool is_cofibrant(GammaSet const &a);

struct SphereRemark
{
  std::size_t bound = 0;
  std::vector<std::size_t> boundary_levels;
  std::vector<std::size_t> outer_levels;
  std::vector<std::size_t> quotient_levels;
  bool iso = false;
  bool vacuous = false;
  LawReport report;
};

// Compares the quotient of the boundary by the outer boundary in degree 2
// with the representable of degree 1, via the covering face 1 -> 2.
// Bounds below 2 are reported as vacuous.
SphereRemark sphere_remark_check(std::size_t bound);

using Partition = std::vector<std::vector<Elem>>;

bool refines(Partition const &finer, Partition const &coarser);

struct PartitionCell
{
  Partition blocks;
  Elem element;
  GammaSubobject subobject;
};

struct PartitionCorrespondence
{
  std::size_t n = 0;
  std::vector<PartitionCell> cells;
  LawReport report;
};

// Monogenic subobjects of the representable of degree n generated by
// non-degenerate covering elements, one per orbit, with containment compared
// against refinement of the underlying partitions.
PartitionCorrespondence partition_correspondence(std::size_t n,
                                                 std::size_t bound);

struct SphereCofiber
{
  std::size_t n = 0;
  GammaSet first;
  GammaSet middle;
  GammaSet last;
  GammaMap inclusion;
  GammaMap projection;
  LawReport report;
};

SphereCofiber cofiber_sequence_spheres(std::size_t n, std::size_t bound);

struct FiltrationCheck
{
  std::size_t n = 0;
  GammaSet lhs;
  GammaSet rhs;
  GammaMap comparison;
  bool iso = false;
  bool plain_injective = true;
  nlohmann::ordered_json plain_witness;
  LawReport report;
};

// Compares sk_n / sk_{n-1} with the symmetric coinvariants of
// (a(n) / latching) smash (representable / boundary), and records whether
// the form without coinvariants is injective. Throws NotCofibrant.
FiltrationCheck filtration_quotient_check(GammaSet const &a, std::size_t n);

} // namespace gammacalc

#endif // GAMMACALC_GAMMA_SET_HPP

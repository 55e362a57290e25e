#ifndef GAMMACALC_POINTED_HPP
#define GAMMACALC_POINTED_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gammacalc {

// Elements of a finite pointed set {0, 1, ..., n}; 0 is the basepoint.
using Elem = std::size_t;

class FinPointedSet
{
public:
  FinPointedSet() = default;
  explicit FinPointedSet(std::size_t size);
  FinPointedSet(std::size_t size, std::vector<std::string> labels);

  // Number of non-basepoint elements.
  std::size_t size() const { return _size; }
  std::size_t cardinality() const { return _size + 1; }

  std::vector<std::string> const &labels() const { return _labels; }
  std::string label(Elem x) const;

  bool operator==(FinPointedSet const &other) const
  { return _size == other._size; }

private:
  std::size_t _size = 0;
  std::vector<std::string> _labels;
};

// The skeletal object with n non-basepoint elements.
FinPointedSet gamma_object(std::size_t n);

class PointedMap
{
public:
  PointedMap() : _table{0} {}
  PointedMap(std::size_t cod, std::vector<Elem> table);

  static PointedMap identity(std::size_t n);
  static PointedMap zero(std::size_t dom, std::size_t cod);

  std::size_t dom() const { return _table.size() - 1; }
  std::size_t cod() const { return _cod; }
  std::vector<Elem> const &table() const { return _table; }

  Elem operator()(Elem x) const { return _table[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  bool operator==(PointedMap const &other) const
  { return _cod == other._cod && _table == other._table; }
  bool operator<(PointedMap const &other) const;

private:
  std::size_t _cod = 0;
  std::vector<Elem> _table;
};

// g after f.
PointedMap compose(PointedMap const &g, PointedMap const &f);
PointedMap inverse(PointedMap const &f);

// Number of pointed maps from a set with m non-basepoint elements to one with
// n, i.e. (n+1)^m. Throws SizeGuard on overflow.
std::size_t hom_count(std::size_t m, std::size_t n);

// Pointed maps m -> n are numbered by reading f(1), ..., f(m) as base-(n+1)
// digits with f(1) most significant, so the zero map has index 0.
std::size_t map_index(PointedMap const &f);
PointedMap map_at(std::size_t m, std::size_t n, std::size_t index);

// Lexicographic smash: for nonzero x, y the pair (x, y) is (x-1)*|Y| + y,
// where |Y| counts non-basepoint elements.
struct SmashProduct
{
  FinPointedSet set;
  std::size_t left_size = 0;
  std::size_t right_size = 0;

  Elem pair(Elem x, Elem y) const
  { return (x == 0 || y == 0) ? 0 : (x - 1) * right_size + y; }

  std::pair<Elem, Elem> unpair(Elem z) const
  {
    if (z == 0)
      return {0, 0};
    return {(z - 1) / right_size + 1, (z - 1) % right_size + 1};
  }
};

SmashProduct smash(FinPointedSet const &x, FinPointedSet const &y);

inline Elem smash_pair(std::size_t right_size, Elem x, Elem y)
{ return (x == 0 || y == 0) ? 0 : (x - 1) * right_size + y; }

// f smash g on the lexicographic products.
PointedMap smash_maps(PointedMap const &f, PointedMap const &g);

struct WedgeSum
{
  FinPointedSet set;
  PointedMap left;
  PointedMap right;
};

WedgeSum wedge(FinPointedSet const &x, FinPointedSet const &y);

// Elements of the map space are the pointed maps, numbered as in map_index.
struct MapSpace
{
  FinPointedSet set;
  std::size_t dom = 0;
  std::size_t cod = 0;

  PointedMap map(Elem e) const { return map_at(dom, cod, e); }
  Elem index(PointedMap const &f) const { return map_index(f); }
};

MapSpace map_space(FinPointedSet const &x, FinPointedSet const &y);

// Map(X, Y) smash X -> Y.
PointedMap ev(FinPointedSet const &x, FinPointedSet const &y);

// X -> Map(Y, X smash Y), x |-> (y |-> x smash y).
PointedMap gamma_coev(FinPointedSet const &x, FinPointedSet const &y);

// Map(Y, Z) smash Map(X, Y) -> Map(X, Z).
PointedMap compose_hom(FinPointedSet const &x,
                       FinPointedSet const &y,
                       FinPointedSet const &z);

struct Quotient
{
  FinPointedSet set;
  PointedMap projection;
};

// Classes are numbered by first occurrence scanning 1, 2, ...; the class of
// the basepoint is 0.
Quotient quotient_by_relations(FinPointedSet const &x,
                               std::vector<std::pair<Elem, Elem>> const &rel);

Quotient collapse_subset(FinPointedSet const &x,
                         std::vector<Elem> const &subset);

// All permutations of {1, ..., n} as pointed maps, lexicographic by table.
std::vector<PointedMap> symmetric_group(std::size_t n);

// An action of the symmetric group of degree n on a pointed set. Entry i of
// acts is the action of permutations[i].
struct GroupAction
{
  FinPointedSet carrier;
  std::size_t degree = 0;
  std::vector<PointedMap> permutations;
  std::vector<PointedMap> acts;

  // Checks that acts is a homomorphism into pointed bijections.
  bool is_action() const;
};

// True iff the group acts freely on the invariant subset. Throws
// SubsetNotInvariant if the subset is not closed under the action.
bool sigma_is_free(GroupAction const &action, std::vector<Elem> const &subset);

} // namespace gammacalc

#endif // GAMMACALC_POINTED_HPP

#ifndef GAMMACALC_PROLONGATION_HPP
#define GAMMACALC_PROLONGATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gammacalc/gamma_set.hpp"
#include "gammacalc/pointed.hpp"

namespace gammacalc {

// A representative (a, y) with a in A(degree) and y the pointed map
// degree -> X with index eval.
struct CoendElement
{
  std::size_t degree = 0;
  Elem label = 0;
  Elem eval = 0;
};

// Classes of the coend of A(n) smash Map(n, X) over n <= max_degree.
// Representatives are numbered by degree, then label, then eval; classes by
// first occurrence, with the basepoint class 0.
class CoendTable
{
public:
  CoendTable() = default;
  CoendTable(GammaSet const &a, std::size_t target, std::size_t max_degree);

  FinPointedSet const &classes() const { return _classes; }
  std::size_t target() const { return _target; }
  std::size_t max_degree() const { return _max_degree; }

  std::size_t node_count() const { return _labels.size(); }
  CoendElement node(std::size_t i) const;
  std::size_t node_index(std::size_t n, Elem a, Elem eval) const;

  Elem class_of(std::size_t n, Elem a, Elem eval) const;
  Elem class_of(std::size_t n, Elem a, PointedMap const &y) const
  { return class_of(n, a, map_index(y)); }
  Elem class_of_node(std::size_t i) const { return _labels[i]; }

  // First representative of a non-basepoint class.
  CoendElement const &witness(Elem c) const { return _witnesses.at(c - 1); }

private:
  FinPointedSet _classes;
  std::size_t _target = 0;
  std::size_t _max_degree = 0;
  std::vector<std::size_t> _level_sizes;
  std::vector<std::size_t> _offsets;
  std::vector<std::size_t> _hom_sizes;
  std::vector<Elem> _labels;
  std::vector<CoendElement> _witnesses;
};

// Rewrites elements of degree above d as A(alpha)(a') with a' of degree at
// most d. Throws NotGenerated if some element has no such preimage.
class LoweringIndex
{
public:
  struct Entry
  {
    std::size_t degree = 0;
    Elem label = 0;
    PointedMap alpha;
  };

  LoweringIndex() = default;
  LoweringIndex(GammaSet const &a, std::size_t d);

  std::size_t degree() const { return _degree; }
  Entry const &operator()(std::size_t n, Elem x) const
  { return _entries[n][x]; }

private:
  std::size_t _degree = 0;
  std::vector<std::vector<Entry>> _entries;
};

// Class of [a, y] for a of any degree, lowering a when needed.
Elem class_of_any(CoendTable const &t, LoweringIndex const &low,
                  std::size_t n, Elem a, PointedMap const &y);

// The value of the prolongation of A at a pointed set with x non-basepoint
// elements, as a coend over degrees <= degree (default: the bound). Throws
// NotGenerated if A is not presented in that degree.
CoendTable prolong(GammaSet const &a, std::size_t x,
                   std::optional<std::size_t> degree = std::nullopt);

// True iff for every k <= bound the coend over degrees <= d evaluated at k
// maps bijectively onto A(k).
bool presented_in_degree(GammaSet const &a, std::size_t d);

// Smallest d with presented_in_degree(a, d).
std::size_t presentation_degree(GammaSet const &a);

PointedMap prolong_map(GammaSet const &a,
                       CoendTable const &tx,
                       CoendTable const &ty,
                       PointedMap const &f);

PointedMap prolong_nat(GammaMap const &theta,
                       CoendTable const &ta,
                       CoendTable const &tb);

// X smash A(Y) -> A(X smash Y), x smash [a, y] |-> [a, j |-> x smash y(j)].
PointedMap strength(std::size_t x, CoendTable const &ty, CoendTable const &txy);

// A(X) smash Y -> A(X smash Y).
PointedMap costrength(CoendTable const &tx, std::size_t y,
                      CoendTable const &txy);

struct DayElement
{
  std::size_t m = 0;
  std::size_t n = 0;
  Elem a = 0;
  Elem b = 0;
  Elem eval = 0;
};

// Classes of the coend of A(m) smash B(n) smash Map(mn, p).
class DayLevel
{
public:
  DayLevel() = default;
  DayLevel(GammaSet const &a, GammaSet const &b,
           std::size_t da, std::size_t db, std::size_t p);

  std::size_t size() const { return _witnesses.size(); }
  std::size_t node_count() const { return _labels.size(); }
  DayElement node(std::size_t i) const;
  Elem class_of(std::size_t m, std::size_t n, Elem a, Elem b, Elem eval) const;
  Elem class_of_node(std::size_t i) const { return _labels[i]; }
  DayElement const &witness(Elem c) const { return _witnesses.at(c - 1); }

private:
  std::size_t _db = 0;
  std::size_t _p = 0;
  std::vector<std::size_t> _a_sizes, _b_sizes;
  std::vector<std::size_t> _offsets;
  std::vector<Elem> _labels;
  std::vector<DayElement> _witnesses;
};

struct DaySmash
{
  GammaSet set;
  std::size_t da = 0;
  std::size_t db = 0;
  std::vector<DayLevel> levels;
};

// Day convolution over degrees m <= da, n <= db. The bound defaults to
// da * db. Throws NotGenerated if A or B is not presented in the degree.
DaySmash day_smash(GammaSet const &a, GammaSet const &b,
                   std::size_t da, std::size_t db,
                   std::optional<std::size_t> bound = std::nullopt);

// A family A(m) smash B(n) -> C(mn) indexed by m <= da, n <= db.
struct BinaturalFamily
{
  std::size_t da = 0;
  std::size_t db = 0;
  std::vector<PointedMap> maps;

  PointedMap const &at(std::size_t m, std::size_t n) const
  { return maps[m * (db + 1) + n]; }
};

// Throws BinaturalityViolation if the family is not binatural.
GammaMap smash_pair(GammaSet const &a, GammaSet const &b,
                    DaySmash const &day, GammaSet const &c,
                    BinaturalFamily const &family);

BinaturalFamily smash_unpair(GammaSet const &a, GammaSet const &b,
                             DaySmash const &day, GammaSet const &c,
                             GammaMap const &h);

LawReport check_binatural(GammaSet const &a, GammaSet const &b,
                          GammaSet const &c, BinaturalFamily const &family);

struct CircleProduct
{
  GammaSet set;
  std::size_t degree = 0;
  std::vector<CoendTable> tables;
};

// Level k is the prolongation of A at B(k), with coend degree for A.
CircleProduct circle(GammaSet const &a, GammaSet const &b,
                     std::optional<std::size_t> degree = std::nullopt);

// i-th block inclusion n -> mn, j |-> (i, j).
PointedMap block_inclusion(std::size_t m, std::size_t n, Elem i);

// A(m) smash B(n) -> (A o B)(mn), a smash b |-> [a, i |-> B(kappa_i)(b)].
BinaturalFamily assembly_family(GammaSet const &a, GammaSet const &b,
                                CircleProduct const &circ,
                                std::size_t da, std::size_t db);

struct Assembly
{
  DaySmash day;
  CircleProduct circ;
  GammaMap map;
};

// The assembly A smash B -> A o B at degrees up to the bound of B.
Assembly assembly(GammaSet const &a, GammaSet const &b,
                  std::size_t da, std::size_t db);

struct CircleProlongIso
{
  CoendTable composite;  // prolongation of A o B at X
  CoendTable inner;      // prolongation of B at X
  CoendTable outer;      // prolongation of A at the classes of inner
  PointedMap forward;
  PointedMap backward;
  LawReport report;
};

// The comparison between prolonging A o B and prolonging B then A. The
// backward direction embeds representatives along wedge inclusions.
CircleProlongIso circle_prolong_iso(GammaSet const &a, GammaSet const &b,
                                    CircleProduct const &circ, std::size_t x);

} // namespace gammacalc

#endif // GAMMACALC_PROLONGATION_HPP

#ifndef GAMMACALC_GAMMA_CAT_HPP
#define GAMMACALC_GAMMA_CAT_HPP

#include <cstddef>
#include <vector>

#include "gammacalc/pointed.hpp"

namespace gammacalc {

// A Segal operator k -> n: k pairwise disjoint subsets of {1, ..., n}.
// It corresponds to the pointed map n -> k sending j to the index of the
// piece containing it, or to 0.
class GammaOperator
{
public:
  GammaOperator(std::size_t n, std::vector<std::vector<Elem>> pieces);

  std::size_t dom() const { return _pieces.size(); }
  std::size_t cod() const { return _n; }
  std::vector<std::vector<Elem>> const &pieces() const { return _pieces; }

  bool operator==(GammaOperator const &other) const
  { return _n == other._n && _pieces == other._pieces; }

private:
  std::size_t _n;
  std::vector<std::vector<Elem>> _pieces;
};

GammaOperator operator_from_pointed_map(PointedMap const &f);
PointedMap operator_to_pointed_map(GammaOperator const &op);

// phi after psi, for psi: l -> k and phi: k -> n; the result is l -> n with
// pieces the unions of the phi pieces indexed by each psi piece.
GammaOperator compose_operators(GammaOperator const &psi,
                                GammaOperator const &phi);

bool is_invertible(GammaOperator const &op);
bool is_covering(GammaOperator const &op);

// The (k+1)^n operators k -> n, ordered by the index of their pointed map.
std::vector<GammaOperator> enumerate_operators(std::size_t k, std::size_t n);

// Smash of two morphisms of the opposite category along the lexicographic
// identification m smash n = mn.
PointedMap smash_on_maps(PointedMap const &f, PointedMap const &g);

} // namespace gammacalc

#endif // GAMMACALC_GAMMA_CAT_HPP

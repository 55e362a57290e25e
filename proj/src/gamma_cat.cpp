#include "gammacalc/gamma_cat.hpp"

#include <algorithm>
#include <stdexcept>

#include "gammacalc/errors.hpp"

namespace gammacalc {

GammaOperator::GammaOperator(std::size_t n,
                             std::vector<std::vector<Elem>> pieces)
: _n(n),
  _pieces(std::move(pieces))
{
  std::vector<bool> used(n + 1, false);
  for (auto &piece : _pieces) {
    std::sort(piece.begin(), piece.end());
    for (Elem j : piece) {
      if (j == 0 || j > n)
        throw std::invalid_argument("piece element out of range");
      if (used[j])
        throw std::invalid_argument("pieces are not disjoint");
      used[j] = true;
    }
  }
}

GammaOperator operator_from_pointed_map(PointedMap const &f)
{
  std::vector<std::vector<Elem>> pieces(f.cod());
  for (Elem j = 1; j <= f.dom(); ++j) {
    if (f(j) != 0)
      pieces[f(j) - 1].push_back(j);
  }
  return GammaOperator(f.dom(), std::move(pieces));
}

PointedMap operator_to_pointed_map(GammaOperator const &op)
{
  std::vector<Elem> table(op.cod() + 1, 0);
  for (std::size_t i = 0; i < op.dom(); ++i) {
    for (Elem j : op.pieces()[i])
      table[j] = i + 1;
  }
  return PointedMap(op.dom(), std::move(table));
}

GammaOperator compose_operators(GammaOperator const &psi,
                                GammaOperator const &phi)
{
  if (psi.cod() != phi.dom())
    throw DegreeMismatch("composing operators with mismatched ends");
  std::vector<std::vector<Elem>> pieces;
  pieces.reserve(psi.dom());
  for (auto const &outer : psi.pieces()) {
    std::vector<Elem> piece;
    for (Elem i : outer) {
      auto const &inner = phi.pieces()[i - 1];
      piece.insert(piece.end(), inner.begin(), inner.end());
    }
    pieces.push_back(std::move(piece));
  }
  return GammaOperator(phi.cod(), std::move(pieces));
}

bool is_covering(GammaOperator const &op)
{
  std::size_t covered = 0;
  for (auto const &piece : op.pieces())
    covered += piece.size();
  return covered == op.cod();
}

bool is_invertible(GammaOperator const &op)
{
  if (op.dom() != op.cod() || !is_covering(op))
    return false;
  return std::all_of(op.pieces().begin(), op.pieces().end(),
                     [](auto const &piece) { return piece.size() == 1; });
}

std::vector<GammaOperator> enumerate_operators(std::size_t k, std::size_t n)
{
  std::vector<GammaOperator> result;
  std::size_t count = hom_count(n, k);
  result.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    result.push_back(operator_from_pointed_map(map_at(n, k, i)));
  return result;
}

PointedMap smash_on_maps(PointedMap const &f, PointedMap const &g)
{ return smash_maps(f, g); }

} // namespace gammacalc

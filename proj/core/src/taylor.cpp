#include "bmres/taylor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace bmres {

std::vector<int> FreeComplex::ranks() const {
  std::vector<int> r;
  r.reserve(basis.size());
  for (const auto& b : basis) r.push_back(static_cast<int>(b.size()));
  return r;
}

int face_sign(GenSet sigma, GenSet tau) {
  GenSet removed = sigma ^ tau;
  if ((tau & sigma) != tau || popcount(removed) != 1 || !(sigma & removed))
    throw std::invalid_argument("face_sign: not a codimension-1 face");
  int j = popcount(sigma & (removed - 1)) + 1;
  return (j % 2 == 1) ? 1 : -1;
}

FreeComplex build_taylor(const MonomialIdeal& ideal) {
  const int q = ideal.num_gens();
  FreeComplex c;
  c.num_vars = ideal.num_vars();
  c.basis.resize(static_cast<std::size_t>(q) + 1);
  for (GenSet s = 0; s < (GenSet{1} << q); ++s)
    c.basis[static_cast<std::size_t>(popcount(s))].push_back(s);

  // row index of each subset within its degree (ascending bitmask order)
  std::unordered_map<GenSet, int> pos;
  for (const auto& degree : c.basis)
    for (std::size_t i = 0; i < degree.size(); ++i)
      pos[degree[i]] = static_cast<int>(i);

  c.diff.resize(c.basis.size());
  for (int d = 1; d <= q; ++d) {
    auto& cols = c.diff[static_cast<std::size_t>(d)];
    cols.resize(c.basis[static_cast<std::size_t>(d)].size());
    for (std::size_t col = 0; col < cols.size(); ++col) {
      GenSet sigma = c.basis[static_cast<std::size_t>(d)][col];
      Monomial ls = ideal.lcm_of(sigma);
      for (GenSet t = sigma; t; t &= t - 1) {
        GenSet tau = sigma ^ (t & -t);
        cols[col].push_back(Entry{pos.at(tau), face_sign(sigma, tau),
                                  quotient(ls, ideal.lcm_of(tau))});
      }
      std::sort(cols[col].begin(), cols[col].end(),
                [](const Entry& a, const Entry& b) { return a.row < b.row; });
    }
  }
  return c;
}

bool d_squared_is_zero(const FreeComplex& c) {
  for (int d = 2; d <= c.top_degree(); ++d) {
    const auto& hi = c.diff[static_cast<std::size_t>(d)];
    const auto& lo = c.diff[static_cast<std::size_t>(d - 1)];
    for (const auto& col : hi) {
      std::map<std::pair<int, Monomial>, long long> acc;
      for (const Entry& e1 : col)
        for (const Entry& e2 : lo[static_cast<std::size_t>(e1.row)]) {
          // the monomial parts multiply; accumulate per (row, product)
          std::vector<int> prod(static_cast<std::size_t>(c.num_vars));
          for (int i = 0; i < c.num_vars; ++i)
            prod[static_cast<std::size_t>(i)] = e1.mono[i] + e2.mono[i];
          acc[{e2.row, Monomial(std::move(prod))}] += e1.coeff * e2.coeff;
        }
      for (const auto& [key, total] : acc)
        if (total != 0) return false;
    }
  }
  return true;
}

DirectedSubsetGraph build_graph(const MonomialIdeal& ideal) {
  return DirectedSubsetGraph{ideal.num_gens()};
}

}  // namespace bmres

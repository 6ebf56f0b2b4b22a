#pragma once

#include <optional>
#include <random>
#include <vector>

#include "bmres/monomial.hpp"

namespace bmres_test {

/// Random ideal with 1..max_gens generators in 1..max_vars variables,
/// exponents in 0..max_exp (never the unit monomial), minimalized.
inline bmres::MonomialIdeal random_ideal(std::mt19937& rng, int max_vars = 4,
                                         int max_gens = 5, int max_exp = 3) {
  std::uniform_int_distribution<int> vars_dist(1, max_vars);
  std::uniform_int_distribution<int> gens_dist(1, max_gens);
  int n = vars_dist(rng);
  int g = gens_dist(rng);
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  std::vector<bmres::Monomial> gens;
  while (static_cast<int>(gens.size()) < g) {
    std::vector<int> e(static_cast<std::size_t>(n));
    int total = 0;
    for (int& x : e) {
      x = exp_dist(rng);
      total += x;
    }
    if (total == 0) continue;  // skip the unit monomial
    gens.emplace_back(std::move(e));
  }
  return bmres::minimalize(gens);
}

struct RandomInstance {
  bmres::MonomialIdeal j;                    // the random ideal J
  bmres::MonomialIdeal ideal;                // J or its Artinian reduction
  std::optional<std::vector<int>> artinian;  // the n_i used, if any
};

/// Random instance; with probability 1/2 an Artinian reduction with
/// exponents n_i <= 3 is applied.
inline RandomInstance random_instance(std::mt19937& rng) {
  bmres::MonomialIdeal j = random_ideal(rng);
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng) == 0) return {j, j, std::nullopt};
  std::uniform_int_distribution<int> n_dist(1, 3);
  std::vector<int> n(static_cast<std::size_t>(j.num_vars()));
  for (int& x : n) x = n_dist(rng);
  return {j, bmres::artinian_reduction(j, n), n};
}

}  // namespace bmres_test

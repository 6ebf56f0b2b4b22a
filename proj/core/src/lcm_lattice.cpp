#include "bmres/lcm_lattice.hpp"

#include <algorithm>
#include <numeric>

namespace bmres {

LcmLattice::LcmLattice(const MonomialIdeal& ideal) {
  const int q = ideal.num_gens();
  const std::size_t count = std::size_t{1} << q;

  // lcm of every subset, via the parent with the lowest bit cleared
  std::vector<PointId> raw_id(count);
  std::vector<Monomial> raw_points;
  std::unordered_map<Monomial, PointId, MonomialHash> raw_index;
  auto intern = [&](const Monomial& m) {
    auto [it, inserted] =
        raw_index.emplace(m, static_cast<PointId>(raw_points.size()));
    if (inserted) raw_points.push_back(m);
    return it->second;
  };
  raw_id[0] = intern(Monomial::one(ideal.num_vars()));
  for (std::size_t s = 1; s < count; ++s) {
    int low = __builtin_ctzll(s);
    const Monomial& rest = raw_points[static_cast<std::size_t>(
        raw_id[s & (s - 1)])];
    raw_id[s] = intern(lcm(rest, ideal.gen(low)));
  }

  // deterministic point order
  std::vector<PointId> order(raw_points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return raw_points[static_cast<std::size_t>(a)] <
           raw_points[static_cast<std::size_t>(b)];
  });
  std::vector<PointId> remap(raw_points.size());
  points_.reserve(raw_points.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[static_cast<std::size_t>(order[i])] = static_cast<PointId>(i);
    points_.push_back(raw_points[static_cast<std::size_t>(order[i])]);
  }

  subset_point_.resize(count);
  fibers_.resize(points_.size());
  for (std::size_t s = 0; s < count; ++s) {
    PointId p = remap[static_cast<std::size_t>(raw_id[s])];
    subset_point_[s] = p;
    fibers_[static_cast<std::size_t>(p)].push_back(static_cast<GenSet>(s));
  }
  for (auto& fiber : fibers_)
    std::sort(fiber.begin(), fiber.end(), [](GenSet a, GenSet b) {
      int ca = popcount(a), cb = popcount(b);
      return ca != cb ? ca > cb : a < b;
    });

  j_div_.resize(points_.size());
  pure_div_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    index_.emplace(points_[i], static_cast<PointId>(i));
    GenSet jd = 0, pd = 0;
    for (int g = 0; g < q; ++g)
      if (ideal.gen(g).divides(points_[i])) {
        GenSet bit = GenSet{1} << g;
        if (ideal.j_part_mask() & bit) jd |= bit;
        if (ideal.pure_power_mask() & bit) pd |= bit;
      }
    j_div_[i] = jd;
    pure_div_[i] = pd;
  }
  unit_ = index_.at(Monomial::one(ideal.num_vars()));
  top_ = subset_point_[count - 1];
}

LcmLattice::PointId LcmLattice::find(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace bmres

#include "bmres/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bmres {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::one(int num_vars) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(num_vars), 0));
}

Monomial Monomial::power(int num_vars, int var, int e) {
  std::vector<int> v(static_cast<std::size_t>(num_vars), 0);
  v[static_cast<std::size_t>(var)] = e;
  return Monomial(std::move(v));
}

bool Monomial::is_unit() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (exp_.size() != other.exp_.size())
    throw std::invalid_argument("variable count mismatch");
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

int Monomial::total_degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0);
}

bool Monomial::operator<(const Monomial& other) const {
  int da = total_degree(), db = other.total_degree();
  if (da != db) return da < db;
  return exp_ < other.exp_;
}

std::string Monomial::csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (i) os << ',';
    os << exp_[i];
  }
  return os.str();
}

std::string Monomial::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << (i + 1);
    if (exp_[i] > 1) os << '^' << exp_[i];
    first = false;
  }
  return first ? "1" : os.str();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("variable count mismatch");
  std::vector<int> v(static_cast<std::size_t>(a.num_vars()));
  for (int i = 0; i < a.num_vars(); ++i)
    v[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
  return Monomial(std::move(v));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument("quotient: not divisible");
  std::vector<int> v(static_cast<std::size_t>(a.num_vars()));
  for (int i = 0; i < a.num_vars(); ++i)
    v[static_cast<std::size_t>(i)] = a[i] - b[i];
  return Monomial(std::move(v));
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Monomial lcm_of(std::span<const Monomial> ms, int num_vars) {
  Monomial acc = Monomial::one(num_vars);
  for (const Monomial& m : ms) {
    if (m.num_vars() != num_vars)
      throw std::invalid_argument("lcm_of: variable count mismatch");
    acc = lcm(acc, m);
  }
  return acc;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> gens,
                             GenSet j_part_mask, GenSet pure_power_mask)
    : num_vars_(num_vars),
      gens_(std::move(gens)),
      j_part_mask_(j_part_mask),
      pure_power_mask_(pure_power_mask) {
  if (gens_.empty()) throw std::invalid_argument("empty generating set");
  if (num_gens() > kMaxGenerators)
    throw std::length_error("too many generators");
  for (const Monomial& g : gens_)
    if (g.num_vars() != num_vars_)
      throw std::invalid_argument("generator length mismatch");
  for (int i = 0; i < num_gens(); ++i)
    for (int j = 0; j < num_gens(); ++j)
      if (i != j && gens_[static_cast<std::size_t>(i)].divides(
                        gens_[static_cast<std::size_t>(j)]))
        throw std::invalid_argument("generators are not an antichain");
}

Monomial MonomialIdeal::lcm_of(GenSet s) const {
  Monomial acc = Monomial::one(num_vars_);
  for (GenSet t = s; t; t &= t - 1)
    acc = lcm(acc, gens_[static_cast<std::size_t>(__builtin_ctz(t))]);
  return acc;
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  int n = gens[0].num_vars();
  for (const Monomial& g : gens)
    if (g.num_vars() != n)
      throw std::invalid_argument("generator length mismatch");
  std::vector<Monomial> keep;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < gens.size() && minimal; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i])) {
        // strict divisor kills it; for duplicates keep the first occurrence
        if (gens[j] != gens[i] || j < i) minimal = false;
      }
    }
    if (minimal) keep.push_back(gens[i]);
  }
  GenSet all = (GenSet{1} << keep.size()) - 1;
  return MonomialIdeal(n, std::move(keep), all, 0);
}

MonomialIdeal artinian_reduction(const MonomialIdeal& j,
                                 const std::vector<int>& n) {
  if (static_cast<int>(n.size()) != j.num_vars())
    throw std::domain_error("artinian exponent list length mismatch");
  for (int e : n)
    if (e < 1) throw std::domain_error("artinian exponents must be >= 1");
  std::vector<Monomial> cand = j.gens();
  for (int i = 0; i < j.num_vars(); ++i)
    cand.push_back(Monomial::power(j.num_vars(), i, n[static_cast<std::size_t>(i)]));
  MonomialIdeal flat = minimalize(cand);
  // J-part = mingens(J) ∩ mingens(I); the rest are surviving pure powers.
  GenSet jmask = 0;
  for (int i = 0; i < flat.num_gens(); ++i) {
    for (const Monomial& g : j.gens())
      if (g == flat.gen(i)) {
        jmask |= GenSet{1} << i;
        break;
      }
  }
  GenSet pure = flat.full_set() & ~jmask;
  return MonomialIdeal(flat.num_vars(), flat.gens(), jmask, pure);
}

}  // namespace bmres

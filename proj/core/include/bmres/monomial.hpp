#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bmres {

/// Subsets of generator indices, as bitmasks over bits 0..q-1.
using GenSet = std::uint32_t;

/// Hard cap on the number of generators (bitmask tables must fit memory).
inline constexpr int kMaxGenerators = 24;

inline int popcount(GenSet s) { return __builtin_popcount(s); }

/// A monomial as an exponent vector of fixed length.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  /// The unit monomial 1 in n variables.
  static Monomial one(int num_vars);
  /// x_i^e (0-based variable index).
  static Monomial power(int num_vars, int var, int e);

  int num_vars() const { return static_cast<int>(exp_.size()); }
  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exp_; }

  bool is_unit() const;
  bool divides(const Monomial& other) const;
  int total_degree() const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Deterministic total order: total degree, then lexicographic exponents.
  bool operator<(const Monomial& other) const;

  /// Exponent CSV, e.g. "1,1,0".
  std::string csv() const;
  /// Symbolic form, e.g. "x1^2*x2"; "1" for the unit.
  std::string pretty() const;

private:
  std::vector<int> exp_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial quotient(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// A monomial ideal given by its minimal generating set.
///
/// Generator indices are fixed at construction and never reordered; the
/// Taylor sign convention depends on this order.  For Artinian reductions
/// the constructor records which generators are the J-part and which are
/// the pure variable powers.
class MonomialIdeal {
public:
  /// Builds the ideal from generators assumed to already be an antichain.
  /// Throws std::invalid_argument if they are not minimal or not uniform.
  MonomialIdeal(int num_vars, std::vector<Monomial> gens,
                GenSet j_part_mask, GenSet pure_power_mask);

  int num_vars() const { return num_vars_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  const std::vector<Monomial>& gens() const { return gens_; }
  const Monomial& gen(int i) const { return gens_[static_cast<std::size_t>(i)]; }

  GenSet full_set() const { return (GenSet{1} << num_gens()) - 1; }
  /// Generators marked as coming from J (empty metadata => all of them).
  GenSet j_part_mask() const { return j_part_mask_; }
  GenSet pure_power_mask() const { return pure_power_mask_; }

  /// lcm of the generators selected by `s` (the unit for s = 0).
  Monomial lcm_of(GenSet s) const;

private:
  int num_vars_ = 0;
  std::vector<Monomial> gens_;
  GenSet j_part_mask_ = 0;
  GenSet pure_power_mask_ = 0;
};

/// Entrywise max; the empty collection yields the unit.
Monomial lcm_of(std::span<const Monomial> ms, int num_vars);

/// Divisibility-minimal sublist, duplicates removed, relative order kept.
/// Throws std::invalid_argument on an empty list or mixed lengths.
MonomialIdeal minimalize(const std::vector<Monomial>& gens);

/// J + (x_1^{n_1}, ..., x_N^{n_N}), minimalized.  The J-part of the result
/// is mingens(J) ∩ mingens(I).  Throws std::domain_error if some n_i < 1.
MonomialIdeal artinian_reduction(const MonomialIdeal& j,
                                 const std::vector<int>& n);

}  // namespace bmres

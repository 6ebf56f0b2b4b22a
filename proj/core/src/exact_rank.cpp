#include "bmres/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bmres {

namespace {

struct Overflow {};

template <typename T>
T checked_mul(T a, T b) {
  if constexpr (std::is_same_v<T, long long>) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  } else {
    return a * b;
  }
}

template <typename T>
T checked_sub(T a, T b) {
  if constexpr (std::is_same_v<T, long long>) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  } else {
    return a - b;
  }
}

// Bareiss fraction-free elimination; intermediate entries are minors of
// the input, so every division below is exact.
template <typename T>
int bareiss_rank(const IntMatrix& m) {
  std::vector<std::vector<T>> a(static_cast<std::size_t>(m.rows));
  for (int r = 0; r < m.rows; ++r) {
    a[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(m.cols));
    for (int c = 0; c < m.cols; ++c)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          m.at(r, c);
  }
  int rank = 0;
  T prev = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    // pivot: smallest nonzero magnitude keeps intermediates small
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      const T& v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (v == 0) continue;
      if (pivot < 0) pivot = r;
      else {
        auto mag = [](const T& x) { return x < 0 ? T(-x) : x; };
        if (mag(v) < mag(a[static_cast<std::size_t>(pivot)]
                          [static_cast<std::size_t>(col)]))
          pivot = r;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)],
              a[static_cast<std::size_t>(pivot)]);
    const T piv =
        a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    for (int r = rank + 1; r < m.rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const auto& prow = a[static_cast<std::size_t>(rank)];
      const T head = row[static_cast<std::size_t>(col)];
      for (int c = col; c < m.cols; ++c) {
        T v = checked_sub(
            checked_mul(piv, row[static_cast<std::size_t>(c)]),
            checked_mul(head, prow[static_cast<std::size_t>(c)]));
        row[static_cast<std::size_t>(c)] = v / prev;
      }
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_over_q(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  try {
    return bareiss_rank<long long>(m);
  } catch (const Overflow&) {
    return bareiss_rank<boost::multiprecision::cpp_int>(m);
  }
}

int rank_mod_p(const IntMatrix& m, int p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: p must be prime");
  std::vector<std::vector<int>> a(static_cast<std::size_t>(m.rows));
  for (int r = 0; r < m.rows; ++r) {
    a[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(m.cols));
    for (int c = 0; c < m.cols; ++c) {
      long long v = m.at(r, c) % p;
      if (v < 0) v += p;
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          static_cast<int>(v);
    }
  }
  auto inv_mod = [p](int x) {
    int result = 1, base = x, e = p - 2;  // Fermat
    while (e) {
      if (e & 1) result = static_cast<int>(1ll * result * base % p);
      base = static_cast<int>(1ll * base * base % p);
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)],
              a[static_cast<std::size_t>(pivot)]);
    int piv_inv = inv_mod(
        a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
    for (int r = rank + 1; r < m.rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const auto& prow = a[static_cast<std::size_t>(rank)];
      int factor = static_cast<int>(
          1ll * row[static_cast<std::size_t>(col)] * piv_inv % p);
      if (!factor) continue;
      for (int c = col; c < m.cols; ++c) {
        long long v = row[static_cast<std::size_t>(c)] -
                      1ll * factor * prow[static_cast<std::size_t>(c)] % p;
        row[static_cast<std::size_t>(c)] = static_cast<int>((v % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace bmres

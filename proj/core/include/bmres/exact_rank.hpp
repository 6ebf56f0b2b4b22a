#pragma once

#include <cstdint>
#include <vector>

namespace bmres {

/// Small dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> data;

  IntMatrix() = default;
  IntMatrix(int r, int c)
      : rows(r), cols(c),
        data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
  long long& at(int r, int c) {
    return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                static_cast<std::size_t>(c)];
  }
  long long at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                static_cast<std::size_t>(c)];
  }
};

/// Exact rank over the rationals (fraction-free elimination; falls back to
/// arbitrary-precision integers if 64-bit intermediates would overflow).
int rank_over_q(const IntMatrix& m);

/// Rank over the prime field F_p.
int rank_mod_p(const IntMatrix& m, int p);

}  // namespace bmres

#include "hilbert/linalg.hpp"

#include <stdexcept>

namespace hilbert {

std::vector<std::vector<Rat>> nullspace(const Matrix<Rat>& m, std::size_t cols) {
  Matrix<Int> e;
  e.reserve(m.size());
  for (const auto& row : m) {
    Int den_lcm = 1;
    for (const auto& x : row) den_lcm = lcm(den_lcm, x.get_den());
    std::vector<Int> irow(cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < cols && j < row.size(); ++j) {
      irow[j] = row[j].get_num() * (den_lcm / row[j].get_den());
      nonzero = nonzero || irow[j] != 0;
    }
    if (nonzero) e.push_back(std::move(irow));
  }

  std::vector<std::size_t> pivot_cols;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < e.size(); ++c) {
    std::size_t p = r;
    while (p < e.size() && e[p][c] == 0) ++p;
    if (p == e.size()) continue;
    std::swap(e[r], e[p]);
    for (std::size_t i = r + 1; i < e.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int cross = e[r][c] * e[i][j] - e[i][c] * e[r][j];
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), cross.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("fraction-free elimination produced an inexact division");
        e[i][j] = std::move(q);
      }
      e[i][c] = 0;
    }
    prev = e[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(cols);
    x[f] = 1;
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = pivot_cols[k];
      Rat acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (e[k][j] != 0 && x[j] != 0) acc += Rat(e[k][j]) * x[j];
      }
      x[pc] = -acc / Rat(e[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace hilbert

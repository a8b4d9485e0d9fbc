#include "hilbert/guess.hpp"

#include <string>
#include <vector>

#include "hilbert/error.hpp"
#include "hilbert/linalg.hpp"

namespace hilbert {

std::optional<RationalFn> find_linear_recurrence(const Series& f, std::size_t max_den_deg) {
  const std::size_t n_max = f.order();
  if (n_max < 2 * max_den_deg + kGuessGuard) {
    throw Error(Errc::InsufficientOrder, "recurrence search up to degree " + std::to_string(max_den_deg) +
                                             " needs order >= " + std::to_string(2 * max_den_deg + kGuessGuard));
  }
  const std::size_t num_deg = max_den_deg;
  for (std::size_t d = 0; d <= max_den_deg; ++d) {
    // Unknowns q_0..q_d; the tail of Q*f beyond num_deg must vanish.
    Matrix<Rat> rows;
    for (std::size_t n = num_deg + 1; n <= n_max; ++n) {
      std::vector<Rat> row(d + 1);
      for (std::size_t i = 0; i <= d; ++i) row[i] = f[n - i];
      rows.push_back(std::move(row));
    }
    for (const auto& q : nullspace(rows, d + 1)) {
      if (q[0] == 0) continue;
      UniPoly den{std::vector<Rat>(q.begin(), q.end())};
      Series qf = Series::from_poly(den, n_max) * f;
      std::vector<Rat> num(num_deg + 1);
      for (std::size_t i = 0; i <= num_deg; ++i) num[i] = qf[i];
      RationalFn candidate(UniPoly(std::move(num)), den);
      if (expand_rational(candidate, n_max) == f) return candidate;
    }
  }
  return std::nullopt;
}

std::optional<BiPoly> guess_algebraic_equation(const Series& f, std::size_t dz, std::size_t dt) {
  const std::size_t n_max = f.order();
  if (n_max + 1 < (dz + 1) * (dt + 1) + kGuessGuard) {
    throw Error(Errc::InsufficientOrder, "algebraic guess with dz=" + std::to_string(dz) + ", dt=" +
                                             std::to_string(dt) + " needs order >= " +
                                             std::to_string((dz + 1) * (dt + 1) + kGuessGuard));
  }
  std::vector<Series> powers{Series::one(n_max)};
  for (std::size_t j = 1; j <= dz; ++j) powers.push_back(powers.back() * f);

  for (std::size_t zd = 1; zd <= dz; ++zd) {
    for (std::size_t td = 0; td <= dt; ++td) {
      const std::size_t cols = (zd + 1) * (td + 1);
      auto column = [td](std::size_t i, std::size_t j) { return j * (td + 1) + i; };
      Matrix<Rat> rows;
      for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<Rat> row(cols);
        for (std::size_t j = 0; j <= zd; ++j) {
          for (std::size_t i = 0; i <= td && i <= n; ++i) row[column(i, j)] = powers[j][n - i];
        }
        rows.push_back(std::move(row));
      }
      auto kernel = nullspace(rows, cols);
      if (kernel.empty()) continue;
      BiPoly p;
      for (std::size_t j = 0; j <= zd; ++j) {
        for (std::size_t i = 0; i <= td; ++i) p += BiPoly::term(kernel.front()[column(i, j)], i, j);
      }
      return p.normalized();
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> annihilator_residual(const BiPoly& p, const Series& f) {
  return evaluate(p, f).valuation();
}

}  // namespace hilbert

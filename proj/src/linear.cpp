#include "hyperfan/linear.hpp"

#include <algorithm>

namespace hyperfan {

namespace {

// Dense tableau simplex, maximization, Bland's rule.  Constraints Ax <= b
// with b >= 0, x >= 0; slack variables complete the initial basis.
struct Simplex {
  std::size_t m, n;                 // constraints, structural variables
  std::vector<std::vector<Rational>> t;  // m+1 rows, n+m+1 cols (last = rhs)
  std::vector<std::size_t> basis;

  Simplex(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
          const std::vector<Rational>& c)
      : m(a.size()), n(c.size()), t(m + 1, std::vector<Rational>(n + m + 1, Rational(0))),
        basis(m) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
      t[i][n + i] = 1;
      t[i][n + m] = b[i];
      basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational piv = t[row][col];
    for (auto& x : t[row]) x /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rational f = t[i][col];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  Rational solve() {
    for (;;) {
      std::size_t enter = n + m;
      for (std::size_t j = 0; j < n + m; ++j) {
        if (t[m][j] < 0) { enter = j; break; }  // Bland: lowest index
      }
      if (enter == n + m) break;
      std::size_t leave = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        if (leave == m) { leave = i; continue; }
        Rational ri = t[i][n + m] / t[i][enter];
        Rational rl = t[leave][n + m] / t[leave][enter];
        if (ri < rl || (ri == rl && basis[i] < basis[leave])) leave = i;
      }
      if (leave == m) throw DomainError("unbounded linear program");
      pivot(leave, enter);
    }
    return t[m][n + m];
  }

  Rational value_of(std::size_t var) const {
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] == var) return t[i][n + m];
    return Rational(0);
  }
};

}  // namespace

StrictFeasibility strictly_feasible(const std::vector<std::vector<Integer>>& strict_rows,
                                    std::size_t num_vars,
                                    const std::vector<std::vector<Integer>>& nonstrict_rows) {
  // t_j = p_j - q_j with 0 <= p_j, q_j <= 1; maximize s subject to
  // A(p - q) >= s for strict rows, B(p - q) >= 0 for non-strict ones.
  const std::size_t d = num_vars;
  const std::size_t ncols = 2 * d + 1;  // p, q, s
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  auto add_geq_row = [&](const std::vector<Integer>& coeff, bool with_slack) {
    if (coeff.size() != d) throw InvalidInputError("inequality row has wrong arity");
    std::vector<Rational> row(ncols, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = Rational(-coeff[j]);
      row[d + j] = Rational(coeff[j]);
    }
    if (with_slack) row[2 * d] = 1;
    a.push_back(std::move(row));
    b.push_back(Rational(0));
  };
  for (const auto& r : strict_rows) add_geq_row(r, true);
  for (const auto& r : nonstrict_rows) add_geq_row(r, false);
  for (std::size_t j = 0; j < 2 * d + 1; ++j) {  // box: p, q <= 1, s <= 1
    std::vector<Rational> row(ncols, Rational(0));
    row[j] = 1;
    a.push_back(std::move(row));
    b.push_back(Rational(1));
  }
  std::vector<Rational> c(ncols, Rational(0));
  c[2 * d] = 1;

  Simplex sx(a, b, c);
  Rational opt = sx.solve();
  StrictFeasibility out;
  out.feasible = opt > 0;
  if (out.feasible) {
    out.witness.resize(d);
    for (std::size_t j = 0; j < d; ++j) out.witness[j] = sx.value_of(j) - sx.value_of(d + j);
    for (const auto& r : strict_rows) {
      Rational lhs(0);
      for (std::size_t j = 0; j < d; ++j) lhs += Rational(r[j]) * out.witness[j];
      if (lhs <= 0) throw DomainError("simplex witness fails a strict inequality");
    }
  }
  return out;
}

}  // namespace hyperfan

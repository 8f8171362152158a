#include "qnve/linear_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qnve {

namespace {

// Smaller is simpler: constants first, then fewer terms, then lower degree.
auto pivot_rank(const MPoly& p) {
  return std::make_tuple(p.is_constant() ? 0 : 1, p.size(), p.total_degree());
}

void add_condition(std::vector<MPoly>& conditions, const MPoly& pivot) {
  if (pivot.is_constant()) return;
  MPoly m = pivot.monic();
  if (std::find(conditions.begin(), conditions.end(), m) == conditions.end()) conditions.push_back(std::move(m));
}

}  // namespace

LinearSolution solve_parametric_linear(const LinearSystem& system) {
  const std::size_t rows = system.coeffs.size();
  if (system.rhs.size() != rows) throw std::invalid_argument("linear system: rhs size mismatch");
  const std::size_t cols = rows == 0 ? 0 : system.coeffs[0].size();
  for (const auto& row : system.coeffs)
    if (row.size() != cols) throw std::invalid_argument("linear system: ragged coefficient matrix");

  // Augmented matrix; the last column is the right-hand side.
  Matrix<MPoly> a(rows, std::vector<MPoly>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(system.coeffs[i].begin(), system.coeffs[i].end(), a[i].begin());
    a[i][cols] = system.rhs[i];
  }

  LinearSolution out;
  MPoly previous(1L);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][col].is_zero()) continue;
      if (best == rows || pivot_rank(a[i][col]) < pivot_rank(a[best][col])) best = i;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const MPoly& pivot = a[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j <= cols; ++j)
        a[i][j] = divide_or_throw(pivot * a[i][j] - a[i][col] * a[r][j], previous);
      a[i][col] = MPoly{};
    }
    add_condition(out.degeneration_conditions, pivot);
    out.pivot_columns.push_back(col);
    previous = pivot;
    ++r;
  }

  for (std::size_t i = r; i < rows; ++i) {
    if (!a[i][cols].is_zero()) {
      out.kind = SolutionKind::Inconsistent;
      out.obstruction = a[i][cols];
      return out;
    }
  }

  for (std::size_t col = 0; col < cols; ++col)
    if (std::find(out.pivot_columns.begin(), out.pivot_columns.end(), col) == out.pivot_columns.end())
      out.free_columns.push_back(col);
  out.kind = out.free_columns.empty() ? SolutionKind::Unique : SolutionKind::Family;

  auto back_substitute = [&](std::vector<RatFunc> values, bool with_rhs) {
    for (std::size_t k = out.pivot_columns.size(); k-- > 0;) {
      const std::size_t pc = out.pivot_columns[k];
      RatFunc acc = with_rhs ? RatFunc(a[k][cols]) : RatFunc{};
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (!a[k][j].is_zero() && !values[j].is_zero()) acc -= RatFunc(a[k][j]) * values[j];
      values[pc] = acc / RatFunc(a[k][pc]);
    }
    return values;
  };

  out.particular = back_substitute(std::vector<RatFunc>(cols), true);
  for (std::size_t f : out.free_columns) {
    std::vector<RatFunc> seed(cols);
    seed[f] = RatFunc(1L);
    out.kernel.push_back(back_substitute(std::move(seed), false));
  }
  return out;
}

LinearSolution solve_parametric_linear(const std::vector<MPoly>& equations, const std::vector<Var>& unknowns) {
  LinearSystem system;
  for (const auto& eq : equations) {
    std::vector<MPoly> row;
    MPoly rest = eq;
    for (Var u : unknowns) {
      if (eq.degree(u) > 1) throw std::invalid_argument("equation is not linear in " + var_name(u) + ": " + to_string(eq));
      MPoly cu = eq.coeff(u, 1);
      for (Var w : unknowns)
        if (cu.contains(w)) throw std::invalid_argument("equation has a product of unknowns: " + to_string(eq));
      rest -= cu * MPoly::variable(u);
      row.push_back(std::move(cu));
    }
    system.coeffs.push_back(std::move(row));
    system.rhs.push_back(-rest);
  }
  return solve_parametric_linear(system);
}

std::vector<MPoly> primitive_vector(const std::vector<RatFunc>& v) {
  MPoly lcm(1L);
  for (const auto& entry : v) {
    if (entry.is_zero() || entry.den().is_constant()) continue;
    lcm = divide_or_throw(lcm * entry.den(), poly_gcd(lcm, entry.den()));
  }
  std::vector<MPoly> out;
  out.reserve(v.size());
  for (const auto& entry : v) {
    if (entry.is_zero()) {
      out.emplace_back();
    } else {
      out.push_back(divide_or_throw(lcm * entry.num(), entry.den()));
    }
  }
  const MPoly g = gcd_all(out);
  if (g.is_zero()) return out;
  Rational sign_fix(1);
  for (auto& p : out) p = divide_or_throw(p, g);
  // Make integer coefficients with gcd 1 and a positive leading coefficient.
  Integer num_gcd(0);
  Integer den_lcm(1);
  for (const auto& p : out)
    for (const auto& t : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  for (const auto& p : out)
    if (!p.is_zero()) {
      if (p.leading_coeff() < 0) sign_fix = -1;
      break;
    }
  const Rational scale = sign_fix * Rational(den_lcm, num_gcd);
  for (auto& p : out) p *= scale;
  return out;
}

std::vector<std::vector<MPoly>> polynomial_kernel(const Matrix<MPoly>& coeffs) {
  LinearSystem system{coeffs, std::vector<MPoly>(coeffs.size())};
  const auto solution = solve_parametric_linear(system);
  std::vector<std::vector<MPoly>> basis;
  for (std::size_t i = 0; i < solution.kernel.size(); ++i) {
    auto v = primitive_vector(solution.kernel[i]);
    // Orient each vector by its own free unknown rather than the first entry.
    if (v[solution.free_columns[i]].leading_coeff() < 0)
      for (auto& p : v) p = -p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qnve

#include "toda_rpp/identities/alpha.hpp"

#include <vector>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

int alpha_clause(const Partition& lambda, int l) {
  for (int i = 1; i <= lambda.r(); ++i)
    if (lambda.part_ext(i) - i == l) return i;
  for (int j = 1; j <= lambda.c(); ++j)
    if (j - 1 - lambda.conj_ext(j) == l) return -j;
  return 0;
}

Scalar alpha(const Partition& lambda, int n, const TodaSolution& sol, int u, int v) {
  const int clause = alpha_clause(lambda, v - u);
  const std::string where = "alpha(" + std::to_string(u) + "," + std::to_string(v) + ")";
  if (clause == 0) throw UndefinedAlpha(where + " lies on no defining diagonal");
  const int r = lambda.r(), c = lambda.c();
  if (clause > 0) {
    const int i = clause;
    const int k = u - i;
    if (k >= n) throw RangeError(where + " needs k = " + std::to_string(k) + " >= n");
    return sol.a(r - i, c - lambda.part_ext(i), n - k - 1);
  }
  const int j = -clause;
  const int k = u - lambda.conj_ext(j);
  if (k >= n) throw RangeError(where + " needs k = " + std::to_string(k) + " >= n");
  return sol.b(r - lambda.conj_ext(j), c - j, n - k);
}

Scalar rpp_weight(const Partition& lambda, int n, const TodaSolution& sol, const RppTable& pi) {
  if (!(pi.shape() == lambda)) throw ShapeError("filling has shape " + pi.shape().to_string() + ", expected " + lambda.to_string());
  std::vector<Scalar> num, den;
  for (Cell cell : lambda.cells()) {
    for (int k = 1; k <= pi.at(cell); ++k) {
      const int u = cell.i + k - 1;
      try {
        Scalar top = alpha(lambda, n, sol, u, cell.j + k - 2);
        Scalar bottom = alpha(lambda, n, sol, u, cell.j + k - 1);
        if (top.is_zero() || bottom.is_zero()) throw WeightError("zero alpha");
        num.push_back(std::move(top));
        den.push_back(std::move(bottom));
      } catch (const UndefinedAlpha& e) {
        throw WeightError("cell (" + std::to_string(cell.i) + "," + std::to_string(cell.j) + "): " + e.what());
      } catch (const RangeError& e) {
        throw WeightError("cell (" + std::to_string(cell.i) + "," + std::to_string(cell.j) + "): " + e.what());
      } catch (const WeightError& e) {
        throw WeightError("cell (" + std::to_string(cell.i) + "," + std::to_string(cell.j) + "): " + e.what());
      }
    }
  }
  return product(num) / product(den);
}

GridWindow sample_window_for(const Partition& lambda, int n) {
  const int r = lambda.r(), c = lambda.c();
  return GridWindow{0, r + n + 1, 0, c + n + r + 1};
}

}  // namespace toda_rpp

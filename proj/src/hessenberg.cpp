#include "tsb/hessenberg.hpp"

#include "tsb/epsilon.hpp"

namespace tsb {

HessMatrix<XPoly> build_D_matrix(int n) {
  if (n < 1) throw std::invalid_argument("build_D_matrix: n must be >= 1");
  const int size = n + 1;
  const EpsilonTable eps(size);
  const PascalTriangle binom(size);
  HessMatrix<XPoly> d(size);
  for (int c = 1; c <= size; ++c) {
    d(1, c) = XPoly::monomial(c - 1, eps.minus(c - 1));
    d(2, c) = XPoly(eps.minus(c).scaled(Rational(1, c)));
  }
  for (int r = 3; r <= size; ++r) {
    for (int c = r - 1; c <= size; ++c) {
      d(r, c) = XPoly(eps.minus(c - r + 2).scaled(binom(c - 1, r - 3)));
    }
  }
  return d;
}

XPoly beta_tilde_determinant(int n) {
  if (n < 0) throw std::invalid_argument("beta_tilde_determinant: n must be non-negative");
  if (n == 0) return XPoly::one();
  const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
  return hessenberg_det(build_D_matrix(n)).scaled(sign / factorial(n - 1));
}

std::vector<XPoly> beta_tilde_determinant_family(int max_n) {
  if (max_n < 0) throw std::invalid_argument("beta_tilde_determinant: n must be non-negative");
  std::vector<XPoly> polys;
  polys.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) polys.push_back(beta_tilde_determinant(n));
  return polys;
}

}  // namespace tsb

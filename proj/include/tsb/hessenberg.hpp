#ifndef TSB_HESSENBERG_HPP
#define TSB_HESSENBERG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tsb/dense_poly.hpp"

namespace tsb {

/// Square matrix over a commutative ring T, stored dense, indexed 1-based as
/// h(j, l). Meant to be upper Hessenberg (h(j, l) = 0 when j - l >= 2); the
/// determinant routine checks this.
template <class T>
class HessMatrix {
 public:
  explicit HessMatrix(int n) : n_(n), entries_(checked_cells(n), T::zero()) {}

  int order() const { return n_; }
  const T& operator()(int j, int l) const { return entries_[index(j, l)]; }
  T& operator()(int j, int l) { return entries_[index(j, l)]; }

  bool is_upper_hessenberg() const {
    for (int j = 3; j <= n_; ++j) {
      for (int l = 1; l <= j - 2; ++l) {
        if (!(*this)(j, l).is_zero()) return false;
      }
    }
    return true;
  }

 private:
  static std::size_t checked_cells(int n) {
    if (n < 0) throw std::invalid_argument("HessMatrix: negative order");
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  }
  std::size_t index(int j, int l) const {
    if (j < 1 || j > n_ || l < 1 || l > n_) {
      throw std::out_of_range("HessMatrix index (" + std::to_string(j) + ", " +
                              std::to_string(l) + ")");
    }
    return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(l - 1);
  }

  int n_;
  std::vector<T> entries_;
};

/// Determinant by the leading-minor recurrence
///   H_0 = 1,  H_m = sum_{l=0}^{m-1} (-1)^(m-1-l) Q_l^{m-2} h(l+1, m) H_l,
/// with Q_l^k the product of subdiagonal entries h(j+2, j+1) for j = l..k
/// (empty product 1). Throws std::invalid_argument for a matrix with a
/// nonzero entry below the first subdiagonal.
template <class T>
T hessenberg_det(const HessMatrix<T>& m) {
  if (!m.is_upper_hessenberg()) {
    throw std::invalid_argument("hessenberg_det: matrix is not upper Hessenberg");
  }
  const int n = m.order();
  std::vector<T> minors{T::one()};
  minors.reserve(static_cast<std::size_t>(n) + 1);
  for (int order = 1; order <= n; ++order) {
    // Walk l downward so Q_l^{order-2} grows by one subdiagonal factor per step.
    T q = T::one();
    T sum = T::zero();
    for (int l = order - 1; l >= 0; --l) {
      if (l < order - 1) q = q * m(l + 2, l + 1);
      const T term = q * m(l + 1, order) * minors[static_cast<std::size_t>(l)];
      if ((order - 1 - l) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    minors.push_back(std::move(sum));
  }
  return minors.back();
}

/// The (n+1) x (n+1) matrix whose determinant, scaled by (-1)^n / (n-1)!,
/// gives beta~_n(lambda|x):
///   row 1:      eps^-(c-1) x^(c-1)
///   row 2:      eps^-(c) / c
///   row r >= 3: eps^-(c-r+2) C(c-1, r-3) for c >= r-1, zero otherwise.
/// Throws std::invalid_argument for n < 1.
HessMatrix<XPoly> build_D_matrix(int n);

/// (-1)^n / (n-1)! det D_n for n >= 1, and 1 for n = 0.
XPoly beta_tilde_determinant(int n);
std::vector<XPoly> beta_tilde_determinant_family(int max_n);

}  // namespace tsb

#endif  // TSB_HESSENBERG_HPP

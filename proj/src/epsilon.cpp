#include "tsb/epsilon.hpp"

#include <stdexcept>

namespace tsb {

LambdaPoly epsilon(int n, Sign sign) {
  if (n < 0) throw std::invalid_argument("epsilon: n must be non-negative");
  const Rational s = sign == Sign::Plus ? Rational(1) : Rational(-1);
  LambdaPoly result = LambdaPoly::one();
  for (int j = 1; j < n; ++j) result *= LambdaPoly{Rational(1), s * Rational(j)};
  return result;
}

EpsilonTable::EpsilonTable(int max_n) {
  if (max_n < 0) throw std::invalid_argument("EpsilonTable: max_n must be non-negative");
  plus_.reserve(static_cast<std::size_t>(max_n) + 1);
  minus_.reserve(static_cast<std::size_t>(max_n) + 1);
  plus_.push_back(LambdaPoly::one());
  minus_.push_back(LambdaPoly::one());
  for (int n = 1; n <= max_n; ++n) {
    const Rational j(n - 1);
    plus_.push_back(plus_.back() * LambdaPoly{Rational(1), j});
    minus_.push_back(minus_.back() * LambdaPoly{Rational(1), -j});
  }
}

PascalTriangle::PascalTriangle(int max_n) {
  if (max_n < 0) throw std::invalid_argument("PascalTriangle: max_n must be non-negative");
  rows_.reserve(static_cast<std::size_t>(max_n) + 1);
  rows_.push_back({Rational(1)});
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational(1));
    for (int k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
    rows_.push_back(std::move(row));
  }
}

const Rational& PascalTriangle::operator()(int n, int k) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("PascalTriangle: row out of range");
  if (k < 0 || k > n) return zero_;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace tsb

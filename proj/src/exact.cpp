#include "surface_links/exact.hpp"

#include <stdexcept>
#include <utility>

namespace surface_links {

bool is_symmetric(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  }
  return true;
}

Inertia inertia(const IntMatrix& input) {
  if (!is_symmetric(input)) throw std::invalid_argument("matrix is not square and symmetric");
  const std::size_t n = input.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = input[i][j];
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  Inertia out;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (a[i][i] != 0) piv = i;
    if (piv == n) {
      // zero diagonal: a[i][i] + 2a[i][j] + a[j][j] = 2a[i][j] after adding j to i
      for (std::size_t i = k; i < n && piv == n; ++i)
        for (std::size_t j = i + 1; j < n && piv == n; ++j)
          if (a[i][j] != 0) {
            for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
            for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
            piv = i;
          }
    }
    if (piv == n) {
      out.zero += static_cast<int>(n - k);
      det = 0;
      break;
    }
    swap_index(k, piv);
    const Rational p = a[k][k];
    det *= p;
    (p > 0 ? out.positive : out.negative)++;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rational f = a[r][k] / p;
      for (std::size_t c = k + 1; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (std::size_t r = k + 1; r < n; ++r) a[r][k] = a[k][r] = 0;
  }
  if (boost::multiprecision::denominator(det) != 1) throw std::logic_error("determinant of integer matrix is not integral");
  out.det = boost::multiprecision::numerator(det);
  return out;
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace surface_links

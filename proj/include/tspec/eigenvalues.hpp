#ifndef TSPEC_EIGENVALUES_HPP
#define TSPEC_EIGENVALUES_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "tspec/matrix.hpp"

namespace tspec {

/// Coefficients in ascending degree; the characteristic polynomial is monic.
using Polynomial = std::vector<Rational>;

/// det(x I - m), via reduction to upper Hessenberg form by similarity.
inline Polynomial characteristic_polynomial(const RatMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (sgn(h(i, j)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    for (std::size_t k = j + 2; k < n; ++k) {
      if (sgn(h(k, j)) == 0) continue;
      const Rational u = h(k, j) / h(j + 1, j);
      for (std::size_t c = 0; c < n; ++c) h(k, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, k);
    }
  }

  // p[k] is the characteristic polynomial of the leading k x k block.
  std::vector<Polynomial> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next(k + 2);
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] += p[k][d];
      next[d] -= h(k, k) * p[k][d];
    }
    Rational sub = 1;
    for (std::size_t i = k; i-- > 0;) {
      sub *= h(i + 1, i);
      if (sgn(sub) == 0) break;
      const Rational coeff = h(i, k) * sub;
      if (sgn(coeff) == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coeff * p[i][d];
    }
    p[k + 1] = std::move(next);
  }
  return p[n];
}

struct RationalEigenvalues {
  /// Distinct rational roots in increasing order with algebraic multiplicities.
  std::vector<std::pair<Rational, std::size_t>> values;
  /// True iff the characteristic polynomial splits into linear factors over Q.
  bool split = true;
};

namespace detail {

inline mpz_class eval(const std::vector<mpz_class>& poly, const mpz_class& y) {
  mpz_class acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * y + poly[i];
  return acc;
}

/// Divides a monic integer polynomial by (x - y); y must be a root.
inline std::vector<mpz_class> deflate(const std::vector<mpz_class>& poly, const mpz_class& y) {
  const std::size_t deg = poly.size() - 1;
  std::vector<mpz_class> out(deg);
  mpz_class carry = 0;
  for (std::size_t i = deg; i-- > 0;) {
    carry = poly[i + 1] + carry * y;
    out[i] = carry;
  }
  return out;
}

}  // namespace detail

inline RationalEigenvalues rational_eigenvalues(const RatMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "eigenvalues of non-square matrix");
  RationalEigenvalues result;
  const std::size_t n = m.rows();
  if (n == 0) return result;

  // Scale to an integer matrix: its eigenvalues are algebraic integers, so the
  // rational ones are integers bounded by the infinity norm.
  mpz_class denom = 1;
  for (const auto& x : m.entries()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  const RatMatrix scaled = m * Rational(denom);
  mpz_class bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row = 0;
    for (std::size_t j = 0; j < n; ++j) row += abs(scaled(i, j).get_num());
    bound = std::max(bound, row);
  }

  const Polynomial cp = characteristic_polynomial(scaled);
  std::vector<mpz_class> poly;
  poly.reserve(cp.size());
  for (const auto& c : cp) poly.push_back(c.get_num());

  std::vector<std::pair<Rational, std::size_t>> found;
  std::size_t zero_mult = 0;
  while (poly.size() > 1 && poly.front() == 0) {
    poly.erase(poly.begin());
    ++zero_mult;
  }
  if (zero_mult) found.emplace_back(Rational(0), zero_mult);

  if (poly.size() > 1) bound = std::min(bound, mpz_class(abs(poly.front())));
  if (bound > 100000000) throw Error(Errc::Unsupported, "eigenvalue search bound too large");
  for (mpz_class y = 1; poly.size() > 1 && y <= bound; ++y) {
    for (int s : {1, -1}) {
      const mpz_class cand = y * s;
      std::size_t mult = 0;
      while (poly.size() > 1 && poly.front() % cand == 0 && detail::eval(poly, cand) == 0) {
        poly = detail::deflate(poly, cand);
        ++mult;
      }
      if (mult) found.emplace_back(Rational(cand, denom), mult);
    }
  }
  for (auto& [value, mult] : found) value.canonicalize();
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::size_t total = 0;
  for (const auto& [value, mult] : found) total += mult;
  result.values = std::move(found);
  result.split = total == n;
  return result;
}

}  // namespace tspec

#endif  // TSPEC_EIGENVALUES_HPP

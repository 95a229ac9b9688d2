#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgpoly/bigint.hpp"

namespace hgpoly {

/// Dense univariate polynomial with exact integer coefficients; index = degree.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs);
  static UniPoly constant(const BigInt& c);
  /// (a + b t)^k
  static UniPoly binomial_power(long a, long b, std::size_t k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  BigInt eval(const BigInt& t) const;
  UniPoly derivative() const;

  /// Exact quotient by (1 - t)^k; nullopt if (1 - t)^k does not divide.
  std::optional<UniPoly> divide_one_minus_t_power(std::size_t k) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const BigInt& c, const UniPoly& a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// e.g. `1 - 3*t^2 + 2*t^3`; the zero polynomial prints as `0`.
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Sparse bivariate polynomial over the integers, keyed by (x-degree, y-degree).
/// No zero coefficient is ever stored.
class BiPoly {
 public:
  using Exponent = std::pair<std::uint32_t, std::uint32_t>;
  using Terms = std::map<Exponent, BigInt>;

  BiPoly() = default;
  static BiPoly constant(const BigInt& c);
  static BiPoly monomial(std::uint32_t i, std::uint32_t j, const BigInt& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(std::uint32_t i, std::uint32_t j) const;
  /// Adds c to the (i, j) coefficient, erasing it if the result is zero.
  void add_term(std::uint32_t i, std::uint32_t j, const BigInt& c);

  /// -1 for the zero polynomial.
  long degree_x() const;
  long degree_y() const;

  friend BiPoly operator+(const BiPoly& p, const BiPoly& q);
  friend BiPoly operator-(const BiPoly& p, const BiPoly& q);
  friend BiPoly operator*(const BiPoly& p, const BiPoly& q);
  friend BiPoly operator*(const BigInt& c, const BiPoly& p);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Terms sorted by (i, j) ascending, e.g. `1 + 3*x^2*y + 3*x^3*y^2 + x^3*y^3`.
  std::string to_string() const;

 private:
  Terms terms_;
};

BiPoly add(const BiPoly& p, const BiPoly& q);
BiPoly mul(const BiPoly& p, const BiPoly& q);
BiPoly scale(const BiPoly& p, const BigInt& c);
BiPoly partial_x(const BiPoly& p);
/// x * p
BiPoly shift_x(const BiPoly& p);
/// Substitutes y = c and collects in x.
UniPoly eval_y(const BiPoly& p, long c);
/// A univariate polynomial in x viewed as a BiPoly with no y terms.
BiPoly from_x_poly(const UniPoly& p);

/// Exact binomial coefficients C(a, b) for a <= rows, built by Pascal's rule.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t rows);
  const BigInt& operator()(std::size_t a, std::size_t b) const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_{0};
};

/// Vertex-induced to edge-induced polynomial:
///   S(x, y) = sum beta_ij x^i (1 - x)^(n - i) (1 + y)^j.
/// Throws DegreeExceedsN if P has x-degree above n.
BiPoly p_to_s(const BiPoly& vertex_poly, std::size_t n);

/// Edge-induced to vertex-induced polynomial:
///   P(x, y) = sum theta_ij x^i (1 + x)^(n - i) (y - 1)^j.
BiPoly s_to_p(const BiPoly& edge_poly, std::size_t n);

/// First k_max + 1 power-series coefficients of num(t) / (1 - t)^denom_power.
std::vector<BigInt> expand_series(const UniPoly& num, std::size_t denom_power, std::size_t k_max);

/// Coefficient form of the P/S relation, counting pairs (W, L) with |W| = i,
/// |L| = j and L a set of edges inside W in two ways:
///   sum_{r >= j} beta_{i,r} C(r, j) = sum_{l=0}^{i} theta_{i-l,j} C(n - (i - l), l).
/// Returns the first (i, j) where the two sides differ, or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> find_coefficient_identity_violation(
    const BiPoly& vertex_poly, const BiPoly& edge_poly, std::size_t n);

}  // namespace hgpoly

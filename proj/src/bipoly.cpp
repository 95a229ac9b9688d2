#include "hgpoly/bipoly.hpp"

#include <algorithm>
#include <cctype>

#include "hgpoly/error.hpp"

namespace hgpoly {

BigInt parse_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::ParseError, "empty integer literal");
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw Error(ErrorCode::ParseError, "not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text), 10);
}

namespace {

// Appends `coeff * monomial` to `out` with sign-aware joining.
void append_term(std::string& out, const BigInt& coeff, const std::string& monomial) {
  const bool negative = sgn(coeff) < 0;
  const BigInt magnitude = abs(coeff);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += to_decimal(magnitude);
  } else if (magnitude == 1) {
    out += monomial;
  } else {
    out += to_decimal(magnitude) + "*" + monomial;
  }
}

std::string power(char var, std::uint64_t e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const BigInt& c) { return UniPoly({c}); }

UniPoly UniPoly::binomial_power(long a, long b, std::size_t k) {
  UniPoly base({BigInt(a), BigInt(b)});
  UniPoly out = constant(1);
  for (std::size_t i = 0; i < k; ++i) out = out * base;
  return out;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UniPoly::eval(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return UniPoly(std::move(out));
}

std::optional<UniPoly> UniPoly::divide_one_minus_t_power(std::size_t k) const {
  std::vector<BigInt> cur = coeffs_;
  for (std::size_t step = 0; step < k; ++step) {
    if (cur.empty()) return UniPoly{};
    // p = (1 - t) q  <=>  q_k = a_0 + ... + a_k, and the full sum must vanish.
    BigInt running = 0;
    std::vector<BigInt> q;
    q.reserve(cur.size());
    for (const auto& a : cur) {
      running += a;
      q.push_back(running);
    }
    if (q.back() != 0) return std::nullopt;
    q.pop_back();
    cur = std::move(q);
  }
  return UniPoly(std::move(cur));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(const BigInt& c, const UniPoly& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(char var) const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) append_term(out, coeffs_[k], power(var, k));
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const BigInt& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(std::uint32_t i, std::uint32_t j, const BigInt& c) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

BigInt BiPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BiPoly::add_term(std::uint32_t i, std::uint32_t j, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long BiPoly::degree_x() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e.first));
  return d;
}

long BiPoly::degree_y() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e.second));
  return d;
}

BiPoly operator+(const BiPoly& p, const BiPoly& q) {
  BiPoly out = p;
  for (const auto& [e, c] : q.terms_) out.add_term(e.first, e.second, c);
  return out;
}

BiPoly operator-(const BiPoly& p, const BiPoly& q) {
  BiPoly out = p;
  for (const auto& [e, c] : q.terms_) out.add_term(e.first, e.second, -c);
  return out;
}

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
  BiPoly out;
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      out.add_term(ep.first + eq.first, ep.second + eq.second, cp * cq);
    }
  }
  return out;
}

BiPoly operator*(const BigInt& c, const BiPoly& p) {
  if (c == 0) return {};
  BiPoly out = p;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

std::string BiPoly::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono = power('x', e.first);
    const std::string ypart = power('y', e.second);
    if (!ypart.empty()) mono = mono.empty() ? ypart : mono + "*" + ypart;
    append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

BiPoly add(const BiPoly& p, const BiPoly& q) { return p + q; }
BiPoly mul(const BiPoly& p, const BiPoly& q) { return p * q; }
BiPoly scale(const BiPoly& p, const BigInt& c) { return c * p; }

BiPoly partial_x(const BiPoly& p) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.first > 0) out.add_term(e.first - 1, e.second, c * static_cast<unsigned long>(e.first));
  }
  return out;
}

BiPoly shift_x(const BiPoly& p) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.first + 1, e.second, c);
  return out;
}

UniPoly eval_y(const BiPoly& p, long c) {
  std::vector<BigInt> out(static_cast<std::size_t>(p.degree_x() + 1));
  const BigInt base(c);
  for (const auto& [e, v] : p.terms()) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), e.second);
    out[e.first] += v * pw;
  }
  return UniPoly(std::move(out));
}

BiPoly from_x_poly(const UniPoly& p) {
  BiPoly out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out.add_term(static_cast<std::uint32_t>(k), 0, p.coeffs()[k]);
  return out;
}

// ---------------------------------------------------------------- transforms

BinomialTable::BinomialTable(std::size_t rows) : rows_(rows + 1) {
  for (std::size_t a = 0; a <= rows; ++a) {
    rows_[a].resize(a + 1);
    rows_[a][0] = 1;
    rows_[a][a] = 1;
    for (std::size_t b = 1; b < a; ++b) rows_[a][b] = rows_[a - 1][b - 1] + rows_[a - 1][b];
  }
}

const BigInt& BinomialTable::operator()(std::size_t a, std::size_t b) const {
  if (a >= rows_.size() || b > a) return zero_;
  return rows_[a][b];
}

namespace {

// Shared kernel of both transforms:
//   sum c_ij x^i (1 + x_sign x)^(n - i) (y + y_shift)^j
BiPoly binomial_substitution(const BiPoly& p, std::size_t n, int x_sign, int y_shift) {
  if (p.degree_x() > static_cast<long>(n)) {
    throw Error(ErrorCode::DegreeExceedsN, "x-degree " + std::to_string(p.degree_x()) + " exceeds n=" +
                                               std::to_string(n));
  }
  const auto max_j = static_cast<std::size_t>(std::max(p.degree_y(), 0L));
  const BinomialTable binom(std::max(n, max_j));
  std::vector<std::vector<BigInt>> acc(n + 1, std::vector<BigInt>(max_j + 1));
  for (const auto& [e, c] : p.terms()) {
    const auto [i, j] = e;
    for (std::size_t a = 0; a + i <= n; ++a) {
      BigInt xa = c * binom(n - i, a);
      if (x_sign < 0 && (a & 1)) xa = -xa;
      for (std::size_t b = 0; b <= j; ++b) {
        // (y + s)^j contributes C(j, b) s^(j - b) y^b with s = +-1.
        BigInt term = xa * binom(j, b);
        if (y_shift < 0 && ((j - b) & 1)) term = -term;
        acc[i + a][b] += term;
      }
    }
  }
  BiPoly out;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= max_j; ++j) {
      out.add_term(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), acc[i][j]);
    }
  }
  return out;
}

}  // namespace

BiPoly p_to_s(const BiPoly& vertex_poly, std::size_t n) { return binomial_substitution(vertex_poly, n, -1, +1); }

BiPoly s_to_p(const BiPoly& edge_poly, std::size_t n) { return binomial_substitution(edge_poly, n, +1, -1); }

std::vector<BigInt> expand_series(const UniPoly& num, std::size_t denom_power, std::size_t k_max) {
  std::vector<BigInt> series(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) series[k] = num[k];
  for (std::size_t step = 0; step < denom_power; ++step) {
    for (std::size_t k = 1; k <= k_max; ++k) series[k] += series[k - 1];
  }
  return series;
}

std::optional<std::pair<std::size_t, std::size_t>> find_coefficient_identity_violation(
    const BiPoly& vertex_poly, const BiPoly& edge_poly, std::size_t n) {
  const auto max_r = static_cast<std::size_t>(std::max({vertex_poly.degree_y(), edge_poly.degree_y(), 0L}));
  const BinomialTable binom(std::max(n, max_r));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= max_r; ++j) {
      BigInt lhs = 0;
      for (std::size_t r = j; r <= max_r; ++r) {
        lhs += vertex_poly.coeff(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(r)) * binom(r, j);
      }
      BigInt rhs = 0;
      for (std::size_t l = 0; l <= i; ++l) {
        const std::size_t s = i - l;
        rhs += edge_poly.coeff(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(j)) * binom(n - s, l);
      }
      if (lhs != rhs) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace hgpoly

#include "hgpoly/sr_algebra.hpp"

#include <string>

#include "hgpoly/enumerate.hpp"
#include "hgpoly/error.hpp"

namespace hgpoly {

std::vector<BigInt> f_vector(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  return independence_poly(h, limits, exec).coeffs();
}

std::vector<BigInt> h_vector(const std::vector<BigInt>& f, std::size_t d) {
  if (f.size() != d + 1) {
    throw Error(ErrorCode::LengthMismatch, "f-vector has " + std::to_string(f.size()) +
                                               " entries; dimension d=" + std::to_string(d) + " needs " +
                                               std::to_string(d + 1));
  }
  UniPoly sum;
  for (std::size_t i = 0; i <= d; ++i) {
    sum = sum + f[i] * (UniPoly::binomial_power(0, 1, i) * UniPoly::binomial_power(1, -1, d - i));
  }
  std::vector<BigInt> out = sum.coeffs();
  out.resize(d + 1);
  return out;
}

UniPoly face_numerator(const std::vector<BigInt>& f, std::size_t n) {
  UniPoly sum;
  for (std::size_t i = 0; i < f.size(); ++i) {
    sum = sum + f[i] * (UniPoly::binomial_power(0, 1, i) * UniPoly::binomial_power(1, -1, n - i));
  }
  return sum;
}

UniPoly k_polynomial(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  return eval_y(edge_induced_poly(h, limits, exec), -1);
}

std::vector<BigInt> hilbert_function_from_f(const std::vector<BigInt>& f, std::size_t k_max) {
  const BinomialTable binom(k_max);
  std::vector<BigInt> out(k_max + 1);
  out[0] = f.empty() ? BigInt(0) : f[0];
  for (std::size_t k = 1; k <= k_max; ++k) {
    // t^i / (1 - t)^i contributes C(k - 1, i - 1) to t^k.
    for (std::size_t i = 1; i < f.size() && i <= k; ++i) out[k] += f[i] * binom(k - 1, i - 1);
  }
  return out;
}

std::vector<BigInt> hilbert_function(const Hypergraph& h, std::size_t k_max, const Limits& limits,
                                     ExecPolicy exec) {
  auto via_k = expand_series(k_polynomial(h, limits, exec), h.num_vertices(), k_max);
  auto via_f = hilbert_function_from_f(f_vector(h, limits, exec), k_max);
  if (via_k != via_f) {
    for (std::size_t k = 0; k <= k_max; ++k) {
      if (via_k[k] != via_f[k]) {
        throw Error(ErrorCode::InternalMismatch, "Hilbert function routes disagree at degree " + std::to_string(k) +
                                                     ": " + to_decimal(via_k[k]) + " vs " + to_decimal(via_f[k]));
      }
    }
  }
  return via_k;
}

std::size_t krull_dim_of(const std::vector<BigInt>& f) { return f.empty() ? 0 : f.size() - 1; }

BigInt multiplicity_of(const std::vector<BigInt>& f) { return f.empty() ? BigInt(0) : f.back(); }

std::size_t krull_dim(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  return krull_dim_of(f_vector(h, limits, exec));
}

BigInt multiplicity(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  return multiplicity_of(f_vector(h, limits, exec));
}

UniPoly exterior_face_poly(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  return independence_poly(h, limits, exec);
}

SRInvariants sr_invariants(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  SRInvariants inv;
  inv.n = h.num_vertices();
  inv.f = f_vector(h, limits, exec);
  inv.krull_dim = krull_dim_of(inv.f);
  inv.multiplicity = multiplicity_of(inv.f);
  inv.h = h_vector(inv.f, inv.krull_dim);
  inv.k_polynomial = k_polynomial(h, limits, exec);
  auto reduced = inv.k_polynomial.divide_one_minus_t_power(inv.n - inv.krull_dim);
  if (!reduced) {
    throw Error(ErrorCode::InternalMismatch, "(1 - t)^(n - d) does not divide the K-polynomial " +
                                                 inv.k_polynomial.to_string());
  }
  inv.reduced_numerator = std::move(*reduced);
  return inv;
}

}  // namespace hgpoly

#pragma once

#include <cstddef>
#include <vector>

#include "hgpoly/bipoly.hpp"
#include "hgpoly/exec.hpp"
#include "hgpoly/hypergraph.hpp"

namespace hgpoly {

/// Invariants of the Stanley-Reisner ring R = K[x_1..x_n] / I_H of the
/// independence complex of H.
struct SRInvariants {
  std::size_t n = 0;
  std::vector<BigInt> f;  // f_{-1} = 1, f_0, ..., f_{d-1}
  std::vector<BigInt> h;  // h_0, ..., h_d
  std::size_t krull_dim = 0;
  BigInt multiplicity;
  UniPoly k_polynomial;  // numerator of the Hilbert series over (1 - t)^n
  /// k_polynomial / (1 - t)^(n - d): numerator of the reduced form over (1 - t)^d.
  UniPoly reduced_numerator;
};

/// Face counts of the independence complex (coefficients of P_H(t, 0)).
std::vector<BigInt> f_vector(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

/// h with sum h_i t^i = sum f_{i-1} t^i (1 - t)^(d - i). Throws LengthMismatch
/// unless f has exactly d + 1 entries.
std::vector<BigInt> h_vector(const std::vector<BigInt>& f, std::size_t d);

/// K(R, t) = S_H(t, -1).
UniPoly k_polynomial(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

/// dim R_k for k = 0..k_max by two independent routes: expanding
/// K(R, t) / (1 - t)^n, and summing f_{i-1} t^i / (1 - t)^i termwise.
/// Throws InternalMismatch if they disagree.
std::vector<BigInt> hilbert_function(const Hypergraph& h, std::size_t k_max, const Limits& limits = {},
                                     ExecPolicy exec = {});

/// Hilbert function from the f-vector alone: dim R_k = sum_i f_{i-1} C(k-1, i-1).
std::vector<BigInt> hilbert_function_from_f(const std::vector<BigInt>& f, std::size_t k_max);

std::size_t krull_dim(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});
BigInt multiplicity(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

/// Hilbert series of the exterior face ring R / (x_1^2, ..., x_n^2); equals
/// the face polynomial P_H(t, 0).
UniPoly exterior_face_poly(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

/// sum_i f_{i-1} t^i (1 - t)^(n - i)
UniPoly face_numerator(const std::vector<BigInt>& f, std::size_t n);

/// Krull dimension and multiplicity read off an f-vector.
std::size_t krull_dim_of(const std::vector<BigInt>& f);
BigInt multiplicity_of(const std::vector<BigInt>& f);

SRInvariants sr_invariants(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

}  // namespace hgpoly

#pragma once

#include "hgpoly/bipoly.hpp"
#include "hgpoly/exec.hpp"
#include "hgpoly/hypergraph.hpp"

namespace hgpoly {

/// P_H(x, y): coefficient of x^i y^j counts i-vertex subsets W containing
/// exactly j edges. Sweeps all 2^n subsets in Gray-code order.
/// Throws LimitExceeded when n > limits.max_vertices.
BiPoly vertex_induced_poly(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

/// S_H(x, y): coefficient of x^i y^j counts j-edge subsets whose union has
/// exactly i vertices (the empty subset gives the constant 1).
/// Throws LimitExceeded when m > limits.max_edges.
BiPoly edge_induced_poly(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

/// P_H(t, 0): independent sets counted by size.
UniPoly independence_poly(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

namespace reference {

// Straight-from-the-definition serial versions: one full recount per subset,
// no Gray code, no incremental state. Test oracles for the kernels above.
BiPoly vertex_induced_poly(const Hypergraph& h);
BiPoly edge_induced_poly(const Hypergraph& h);
UniPoly independence_poly(const Hypergraph& h);

}  // namespace reference

}  // namespace hgpoly

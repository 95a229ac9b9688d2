#pragma once

#include <cstddef>

namespace hgpoly {

/// Size limits for exhaustive computations. Exceeding one is always an error,
/// never a silent truncation.
struct Limits {
  std::size_t max_vertices = 24;           // 2^n vertex subsets
  std::size_t max_edges = 24;              // 2^m edge subsets
  std::size_t max_homology_vertices = 14;  // 2^n restricted complexes
};

/// Selects the serial reference kernel or the OpenMP kernel. Both produce
/// identical results; `threads == 0` leaves the OpenMP default in place.
struct ExecPolicy {
  bool parallel = false;
  int threads = 0;

  static ExecPolicy serial() { return {}; }
  static ExecPolicy omp(int threads = 0) { return {true, threads}; }
};

}  // namespace hgpoly

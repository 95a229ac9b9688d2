#include "hgpoly/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "hgpoly/bigint.hpp"
#include "hgpoly/error.hpp"

namespace hgpoly {

SimplicialComplex SimplicialComplex::from_faces(std::size_t ground_size, std::vector<VertexMask> faces) {
  if (ground_size > kMaxVertices) throw Error(ErrorCode::LimitExceeded, "ground set larger than 64");
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  const VertexMask all = full_mask(ground_size);
  for (VertexMask f : faces) {
    if (f & ~all) throw Error(ErrorCode::UnknownVertex, "face leaves the ground set");
    for (VertexMask m = f; m != 0; m &= m - 1) {
      if (!std::binary_search(faces.begin(), faces.end(), f & ~(m & -m))) {
        throw Error(ErrorCode::ParseError, "face family is not closed under subsets");
      }
    }
  }
  if (!faces.empty() && faces.front() != 0) throw Error(ErrorCode::ParseError, "nonvoid complex lacks the empty face");
  SimplicialComplex c;
  c.ground_size_ = ground_size;
  c.faces_ = std::move(faces);
  return c;
}

bool SimplicialComplex::contains(VertexMask face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

long SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  int best = 0;
  for (VertexMask f : faces_) best = std::max(best, popcount(f));
  return best - 1;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 2), 0);
  for (VertexMask f : faces_) ++counts[static_cast<std::size_t>(popcount(f))];
  return counts;
}

SimplicialComplex independence_complex(const Hypergraph& h, const Limits& limits) {
  if (h.num_vertices() > std::min<std::size_t>(limits.max_vertices, 62)) {
    throw Error(ErrorCode::LimitExceeded, "vertex count n = " + std::to_string(h.num_vertices()) +
                                              " exceeds the configured limit " + std::to_string(limits.max_vertices));
  }
  std::vector<VertexMask> faces;
  const VertexMask all = h.all_vertices();
  for (VertexMask w = 0;; ++w) {
    if (is_independent_unchecked(h.edges(), w)) faces.push_back(w);
    if (w == all) break;
  }
  return SimplicialComplex::from_faces(h.num_vertices(), std::move(faces));
}

SimplicialComplex SimplicialComplex::independent_subsets(std::size_t ground_size,
                                                         const std::vector<bool>& independent, VertexMask b) {
  SimplicialComplex out;
  out.ground_size_ = ground_size;
  // (s - b) & b steps through the subsets of b in increasing order.
  VertexMask s = 0;
  do {
    if (independent[s]) out.faces_.push_back(s);
    s = (s - b) & b;
  } while (s != 0);
  return out;
}

SimplicialComplex restrict(const SimplicialComplex& complex, VertexMask b) {
  if (b & ~full_mask(complex.ground_size())) {
    throw Error(ErrorCode::UnknownVertex, "restriction set leaves the ground set");
  }
  SimplicialComplex out;
  out.ground_size_ = complex.ground_size_;
  for (VertexMask f : complex.faces_) {
    if ((f & ~b) == 0) out.faces_.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------- exact rank

namespace {

bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_mul_overflow(a, b, &out); }
bool checked_sub(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_sub_overflow(a, b, &out); }
bool checked_mul(const BigInt& a, const BigInt& b, BigInt& out) {
  out = a * b;
  return true;
}
bool checked_sub(const BigInt& a, const BigInt& b, BigInt& out) {
  out = a - b;
  return true;
}
std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return gcd(a, b); }
bool is_negative(std::int64_t a) { return a < 0; }
bool is_negative(const BigInt& a) { return sgn(a) < 0; }

template <class Int>
using Row = std::vector<std::pair<std::uint32_t, Int>>;

// Divides out the row content and makes the leading entry positive.
template <class Int>
void normalize(Row<Int>& row) {
  Int g = 0;
  for (const auto& [c, v] : row) g = gcd_of(g, v);
  if (is_negative(row.front().second)) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) v /= g;
  }
}

// row <- pivot_lead * row - row_lead * pivot, which clears row's leading entry.
template <class Int>
bool eliminate(Row<Int>& row, const Row<Int>& pivot) {
  const Int a = pivot.front().second;
  const Int b = row.front().second;
  Row<Int> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    Int value = 0;
    std::uint32_t col;
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      col = row[i].first;
      if (!checked_mul(a, row[i].second, value)) return false;
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      col = pivot[j].first;
      Int t;
      if (!checked_mul(b, pivot[j].second, t) || !checked_sub(Int(0), t, value)) return false;
      ++j;
    } else {
      col = row[i].first;
      Int x;
      Int y;
      if (!checked_mul(a, row[i].second, x) || !checked_mul(b, pivot[j].second, y) || !checked_sub(x, y, value)) {
        return false;
      }
      ++i;
      ++j;
    }
    if (value != 0) out.emplace_back(col, value);
  }
  row = std::move(out);
  if (!row.empty()) normalize(row);
  return true;
}

// Incremental echelon form: each incoming row is reduced against the pivot
// rows owning its leading column until it vanishes or claims a new column.
template <class Int>
std::optional<std::size_t> rank_impl(const std::vector<SparseRow>& rows, std::size_t cols, PivotOrder order) {
  const bool reversed = order == PivotOrder::HighestColumn;
  std::vector<Row<Int>> pivot_of(cols);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const SparseRow& src = rows[reversed ? rows.size() - 1 - k : k];
    Row<Int> row;
    row.reserve(src.size());
    for (const auto& [c, v] : src) {
      if (v != 0) row.emplace_back(reversed ? static_cast<std::uint32_t>(cols - 1 - c) : c, Int(v));
    }
    if (reversed) std::reverse(row.begin(), row.end());
    if (row.empty()) continue;
    normalize(row);
    while (!row.empty() && !pivot_of[row.front().first].empty()) {
      if (!eliminate(row, pivot_of[row.front().first])) return std::nullopt;
    }
    if (!row.empty()) {
      const auto lead = row.front().first;
      pivot_of[lead] = std::move(row);
      ++rank;
    }
  }
  return rank;
}

void check_columns(const std::vector<SparseRow>& rows, std::size_t cols) {
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].first >= cols || (k > 0 && row[k - 1].first >= row[k].first)) {
        throw Error(ErrorCode::IndexOutOfRange, "sparse row columns must be sorted and below " + std::to_string(cols));
      }
    }
  }
}

}  // namespace

std::size_t exact_rank(const std::vector<SparseRow>& rows, std::size_t cols, PivotOrder order) {
  check_columns(rows, cols);
  if (auto r = rank_impl<std::int64_t>(rows, cols, order)) return *r;
  return *rank_impl<BigInt>(rows, cols, order);
}

std::size_t exact_rank_bigint(const std::vector<SparseRow>& rows, std::size_t cols, PivotOrder order) {
  check_columns(rows, cols);
  return *rank_impl<BigInt>(rows, cols, order);
}

// ---------------------------------------------------------------- homology

namespace {

std::vector<std::vector<VertexMask>> faces_by_size(const SimplicialComplex& complex) {
  std::vector<std::vector<VertexMask>> by_size(static_cast<std::size_t>(complex.dimension() + 2));
  for (VertexMask f : complex.faces()) by_size[static_cast<std::size_t>(popcount(f))].push_back(f);
  return by_size;
}

std::vector<SparseRow> boundary_between(const std::vector<VertexMask>& upper, const std::vector<VertexMask>& lower) {
  std::vector<SparseRow> rows;
  rows.reserve(upper.size());
  for (VertexMask f : upper) {
    SparseRow row;
    int position = 0;
    for (VertexMask m = f; m != 0; m &= m - 1, ++position) {
      const VertexMask sub = f & ~(m & -m);
      const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      row.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), (position & 1) ? -1 : 1);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<SparseRow> boundary_rows(const SimplicialComplex& complex, std::size_t s, std::size_t* cols_out) {
  const auto by_size = faces_by_size(complex);
  if (s == 0 || s >= by_size.size()) {
    if (cols_out) *cols_out = (s > 0 && s - 1 < by_size.size()) ? by_size[s - 1].size() : 0;
    return {};
  }
  if (cols_out) *cols_out = by_size[s - 1].size();
  return boundary_between(by_size[s], by_size[s - 1]);
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, PivotOrder order) {
  if (complex.is_void()) return {};
  const auto by_size = faces_by_size(complex);
  const std::size_t top = by_size.size();
  // rank_into[s] = rank of the boundary from s-vertex faces down to (s-1)-vertex faces.
  std::vector<std::size_t> rank_into(top + 1, 0);
  for (std::size_t s = 1; s < top; ++s) {
    rank_into[s] = exact_rank(boundary_between(by_size[s], by_size[s - 1]), by_size[s - 1].size(), order);
  }
  std::vector<std::size_t> dims(top);
  for (std::size_t s = 0; s < top; ++s) dims[s] = by_size[s].size() - rank_into[s] - rank_into[s + 1];
  return dims;
}

std::size_t reduced_betti_at(const std::vector<std::size_t>& dims, long q) {
  const long k = q + 1;
  if (k < 0 || k >= static_cast<long>(dims.size())) return 0;
  return dims[static_cast<std::size_t>(k)];
}

long reduced_euler_from_homology(const std::vector<std::size_t>& dims) {
  long chi = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) chi += (k % 2 == 1 ? 1 : -1) * static_cast<long>(dims[k]);
  return chi;
}

long reduced_euler_from_faces(const SimplicialComplex& complex) {
  long chi = 0;
  for (VertexMask f : complex.faces()) chi += (popcount(f) % 2 == 1) ? 1 : -1;
  return chi;
}

}  // namespace hgpoly

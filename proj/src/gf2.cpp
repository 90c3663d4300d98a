#include "commgraph/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace cg {

namespace {

std::uint64_t low_mask(int len) { return (std::uint64_t{1} << len) - 1; }

void require_same_len(const Gf2Vec& u, const Gf2Vec& v, const char* op) {
  if (u.len() != v.len()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(u.len()) + " vs " +
                                std::to_string(v.len()) + ")");
  }
}

}  // namespace

Gf2Vec::Gf2Vec(std::uint64_t bits, int len) : bits_(bits), len_(len) {
  if (len < 0 || len > kMaxLen) {
    throw std::invalid_argument("Gf2Vec: length " + std::to_string(len) +
                                " outside [0, " + std::to_string(kMaxLen) + "]");
  }
  if (bits & ~low_mask(len)) {
    throw std::invalid_argument("Gf2Vec: set bit at position >= len");
  }
}

Gf2Vec Gf2Vec::unit(int index, int len) {
  if (index < 1 || index > len) {
    throw std::invalid_argument("Gf2Vec::unit: index " + std::to_string(index) +
                                " outside [1, " + std::to_string(len) + "]");
  }
  return Gf2Vec(std::uint64_t{1} << (index - 1), len);
}

bool Gf2Vec::coeff(int index) const {
  if (index < 1 || index > len_) {
    throw std::invalid_argument("Gf2Vec::coeff: index out of range");
  }
  return (bits_ >> (index - 1)) & 1;
}

int Gf2Vec::max_support_index() const { return static_cast<int>(std::bit_width(bits_)); }

std::vector<int> Gf2Vec::support() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

Gf2Vec xor_add(const Gf2Vec& u, const Gf2Vec& v) {
  require_same_len(u, v, "xor_add");
  return Gf2Vec(u.bits() ^ v.bits(), u.len());
}

int parity_and(const Gf2Vec& u, const Gf2Vec& v) {
  require_same_len(u, v, "parity_and");
  return std::popcount(u.bits() & v.bits()) & 1;
}

Gf2Matrix::Gf2Matrix(int nrows, int ncols) : ncols_(ncols) {
  if (nrows < 0 || ncols < 0 || ncols > Gf2Vec::kMaxLen) {
    throw std::invalid_argument("Gf2Matrix: bad shape");
  }
  rows_.assign(static_cast<std::size_t>(nrows), Gf2Vec::zero(ncols));
}

Gf2Matrix::Gf2Matrix(std::vector<Gf2Vec> rows, int ncols) : rows_(std::move(rows)), ncols_(ncols) {
  for (const Gf2Vec& r : rows_) {
    if (r.len() != ncols_) {
      throw std::invalid_argument("Gf2Matrix: row length != ncols");
    }
  }
}

void Gf2Matrix::set_row(int r, const Gf2Vec& v) {
  if (v.len() != ncols_) {
    throw std::invalid_argument("Gf2Matrix::set_row: row length != ncols");
  }
  rows_.at(static_cast<std::size_t>(r)) = v;
}

Gf2Vec apply(const Gf2Matrix& m, const Gf2Vec& x) {
  if (x.len() != m.ncols()) {
    throw std::invalid_argument("apply: vector length != ncols");
  }
  if (m.nrows() > Gf2Vec::kMaxLen) {
    throw std::invalid_argument("apply: result would exceed the word budget");
  }
  std::uint64_t out = 0;
  for (int r = 0; r < m.nrows(); ++r) {
    out |= std::uint64_t(std::popcount(m.row(r).bits() & x.bits()) & 1) << r;
  }
  return Gf2Vec(out, m.nrows());
}

namespace {

// Reduced row echelon form of the row words; returns pivot columns (0-based,
// ascending). Rows end up with rref[i] having its pivot in pivots[i].
std::vector<int> rref_inplace(std::vector<std::uint64_t>& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col = 0; col < ncols && next < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t p = next;
    while (p < rows.size() && !(rows[p] & bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && (rows[i] & bit)) rows[i] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(pivots.size());
  return pivots;
}

}  // namespace

int rank(const Gf2Matrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(m.nrows()));
  for (const Gf2Vec& r : m.rows()) rows.push_back(r.bits());
  return static_cast<int>(rref_inplace(rows, m.ncols()).size());
}

std::vector<Gf2Vec> nullspace(const Gf2Matrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(m.nrows()));
  for (const Gf2Vec& r : m.rows()) rows.push_back(r.bits());
  const std::vector<int> pivots = rref_inplace(rows, m.ncols());

  std::vector<bool> is_pivot(static_cast<std::size_t>(m.ncols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Gf2Vec> basis;
  basis.reserve(static_cast<std::size_t>(m.ncols()) - pivots.size());
  for (int free = 0; free < m.ncols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::uint64_t vec = std::uint64_t{1} << free;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i] & (std::uint64_t{1} << free)) {
        vec |= std::uint64_t{1} << pivots[i];
      }
    }
    basis.emplace_back(vec, m.ncols());
  }
  return basis;
}

std::vector<Gf2Vec> span_enumerate(const std::vector<Gf2Vec>& basis,
                                   std::size_t max_elements) {
  const std::size_t k = basis.size();
  if (k >= 63 || (std::size_t{1} << k) > max_elements) {
    throw std::length_error("span_enumerate: 2^" + std::to_string(k) +
                            " elements exceeds the enumeration cap");
  }
  const int len = basis.empty() ? 0 : basis.front().len();
  for (const Gf2Vec& b : basis) {
    if (b.len() != len) {
      throw std::invalid_argument("span_enumerate: mixed dimensions");
    }
  }
  std::vector<Gf2Vec> out;
  out.reserve(std::size_t{1} << k);
  std::uint64_t cur = 0;
  out.emplace_back(cur, len);
  for (std::size_t i = 1; i < (std::size_t{1} << k); ++i) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))].bits();
    out.emplace_back(cur, len);
  }
  return out;
}

}  // namespace cg

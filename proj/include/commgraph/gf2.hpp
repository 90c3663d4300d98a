#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cg {

// Bit-packed vector over GF(2). The coefficient of basis vector i
// (1-based) lives at bit i-1, so a whole vector is one machine word.
class Gf2Vec {
 public:
  static constexpr int kMaxLen = 62;

  Gf2Vec() = default;
  Gf2Vec(std::uint64_t bits, int len);

  static Gf2Vec zero(int len) { return Gf2Vec(0, len); }
  // Basis vector with a single 1 at 1-based position index.
  static Gf2Vec unit(int index, int len);

  std::uint64_t bits() const { return bits_; }
  int len() const { return len_; }
  bool is_zero() const { return bits_ == 0; }
  // 1-based coefficient access.
  bool coeff(int index) const;
  // Highest 1-based index with a set coefficient, 0 for the zero vector.
  int max_support_index() const;
  std::vector<int> support() const;

  bool operator==(const Gf2Vec&) const = default;

 private:
  std::uint64_t bits_ = 0;
  int len_ = 0;
};

// Componentwise sum over GF(2); lengths must agree.
Gf2Vec xor_add(const Gf2Vec& u, const Gf2Vec& v);

// Parity of the popcount of the bitwise AND (GF(2) inner product).
int parity_and(const Gf2Vec& u, const Gf2Vec& v);

// Row-major matrix over GF(2); all rows share the same length.
class Gf2Matrix {
 public:
  Gf2Matrix(int nrows, int ncols);
  Gf2Matrix(std::vector<Gf2Vec> rows, int ncols);

  int nrows() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  const Gf2Vec& row(int r) const { return rows_[r]; }
  void set_row(int r, const Gf2Vec& v);
  const std::vector<Gf2Vec>& rows() const { return rows_; }

 private:
  std::vector<Gf2Vec> rows_;
  int ncols_ = 0;
};

// y = M x with y_r = <row_r, x>.
Gf2Vec apply(const Gf2Matrix& m, const Gf2Vec& x);

// Row rank over GF(2); the input is not modified.
int rank(const Gf2Matrix& m);

// Basis of {x : Mx = 0}, echelon-ordered by ascending free column.
std::vector<Gf2Vec> nullspace(const Gf2Matrix& m);

inline constexpr std::size_t kDefaultSpanCap = std::size_t{1} << 20;

// All 2^k subset sums of an independent basis, Gray-code order starting
// from zero. Throws std::length_error when 2^k exceeds max_elements.
std::vector<Gf2Vec> span_enumerate(const std::vector<Gf2Vec>& basis,
                                   std::size_t max_elements = kDefaultSpanCap);

}  // namespace cg

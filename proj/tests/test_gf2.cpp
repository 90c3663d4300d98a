#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "commgraph/gf2.hpp"
#include "commgraph/group.hpp"

using namespace cg;

namespace {

Gf2Vec from_indices(std::initializer_list<int> idx, int len) {
  Gf2Vec v = Gf2Vec::zero(len);
  for (int i : idx) v = xor_add(v, Gf2Vec::unit(i, len));
  return v;
}

Gf2Vec random_vec(std::mt19937_64& rng, int len) {
  return Gf2Vec(rng() & ((std::uint64_t{1} << len) - 1), len);
}

Gf2Matrix random_matrix(std::mt19937_64& rng, int nrows, int ncols) {
  std::vector<Gf2Vec> rows;
  for (int r = 0; r < nrows; ++r) rows.push_back(random_vec(rng, ncols));
  return Gf2Matrix(std::move(rows), ncols);
}

}  // namespace

TEST_CASE("vector construction enforces the no-high-bits invariant") {
  CHECK_THROWS_AS(Gf2Vec(0b100, 2), std::invalid_argument);
  CHECK_THROWS_AS(Gf2Vec(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Gf2Vec(0, 63), std::invalid_argument);
  CHECK_THROWS_AS(Gf2Vec::unit(5, 4), std::invalid_argument);
  CHECK(Gf2Vec::unit(3, 4).bits() == 0b100);
  CHECK(Gf2Vec::zero(6).is_zero());
}

TEST_CASE("support helpers") {
  const Gf2Vec v = from_indices({1, 3, 5}, 6);
  CHECK(v.support() == std::vector<int>{1, 3, 5});
  CHECK(v.max_support_index() == 5);
  CHECK(Gf2Vec::zero(6).max_support_index() == 0);
  CHECK(v.coeff(3));
  CHECK_FALSE(v.coeff(2));
}

TEST_CASE("xor_add on small examples") {
  // 0101 and 0011 as index sets over a basis of four.
  const Gf2Vec a = from_indices({1, 3}, 4);
  const Gf2Vec b = from_indices({1, 2}, 4);
  CHECK(xor_add(a, b) == from_indices({2, 3}, 4));
  CHECK(xor_add(a, a).is_zero());
  CHECK(xor_add(a, Gf2Vec::zero(4)) == a);
  CHECK_THROWS_AS(xor_add(a, Gf2Vec::zero(5)), std::invalid_argument);
}

TEST_CASE("xor_add is associative and commutative") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const Gf2Vec a = random_vec(rng, 16), b = random_vec(rng, 16), c = random_vec(rng, 16);
    CHECK(xor_add(a, b) == xor_add(b, a));
    CHECK(xor_add(xor_add(a, b), c) == xor_add(a, xor_add(b, c)));
  }
}

TEST_CASE("parity_and on small examples") {
  const Gf2Vec ones = from_indices({1, 2, 3, 4}, 4);
  CHECK(parity_and(ones, ones) == 0);
  const Gf2Vec e1 = Gf2Vec::unit(1, 4);
  CHECK(parity_and(e1, e1) == 1);
  CHECK(parity_and(ones, Gf2Vec::zero(4)) == 0);
  CHECK_THROWS_AS(parity_and(e1, Gf2Vec::zero(5)), std::invalid_argument);
}

TEST_CASE("rank of identity and zero matrices") {
  std::vector<Gf2Vec> id_rows;
  for (int i = 1; i <= 3; ++i) id_rows.push_back(Gf2Vec::unit(i, 3));
  CHECK(rank(Gf2Matrix(id_rows, 3)) == 3);
  CHECK(rank(Gf2Matrix(3, 3)) == 0);
}

TEST_CASE("rank of phi at x1 for m = 5 matches the image count") {
  const GroupParams p(5);
  const Gf2Matrix phi = phi_matrix(p, Gf2Vec::unit(1, 5));

  // Oracle: the image size of c -> B(x1, c) over all 32 vectors is 2^rank.
  std::set<std::uint64_t> image;
  for (std::uint64_t c = 0; c < 32; ++c) {
    image.insert(form_B(p, Gf2Vec::unit(1, 5), Gf2Vec(c, 5)).bits());
  }
  CHECK(image.size() == 8);
  CHECK(rank(phi) == 3);
}

TEST_CASE("nullspace of trivial matrices") {
  CHECK(nullspace(Gf2Matrix(2, 3)).size() == 3);
  std::vector<Gf2Vec> id_rows;
  for (int i = 1; i <= 3; ++i) id_rows.push_back(Gf2Vec::unit(i, 3));
  CHECK(nullspace(Gf2Matrix(id_rows, 3)).empty());
}

TEST_CASE("nullspace of phi at x1 for m = 5 spans {x1, x2}") {
  const GroupParams p(5);
  const Gf2Vec x1 = Gf2Vec::unit(1, 5);
  const std::vector<Gf2Vec> basis = nullspace(phi_matrix(p, x1));
  std::set<std::uint64_t> got;
  for (const Gf2Vec& s : span_enumerate(basis)) got.insert(s.bits());

  // Oracle: brute force over all 32 vectors.
  std::set<std::uint64_t> want;
  for (std::uint64_t c = 0; c < 32; ++c) {
    if (form_B(p, x1, Gf2Vec(c, 5)).is_zero()) want.insert(c);
  }
  CHECK(got == want);
  CHECK(want == std::set<std::uint64_t>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("nullspace basis spans the whole kernel on small random matrices") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int ncols = 1 + int(rng() % 10);
    const int nrows = 1 + int(rng() % 10);
    const Gf2Matrix m = random_matrix(rng, nrows, ncols);

    std::set<std::uint64_t> want;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << ncols); ++x) {
      if (apply(m, Gf2Vec(x, ncols)).is_zero()) want.insert(x);
    }
    std::set<std::uint64_t> got;
    for (const Gf2Vec& s : span_enumerate(nullspace(m))) got.insert(s.bits());
    CHECK(got == want);
  }
}

TEST_CASE("nullspace vectors are in the kernel and rank-nullity holds") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const int ncols = 1 + int(rng() % 20);
    const int nrows = 1 + int(rng() % 20);
    const Gf2Matrix m = random_matrix(rng, nrows, ncols);
    const std::vector<Gf2Vec> basis = nullspace(m);
    CHECK(rank(m) + int(basis.size()) == ncols);
    for (const Gf2Vec& b : basis) {
      bool in_kernel = true;
      for (const Gf2Vec& row : m.rows()) {
        if (parity_and(row, b) != 0) in_kernel = false;
      }
      CHECK(in_kernel);
    }
  }
}

TEST_CASE("span_enumerate small examples") {
  CHECK(span_enumerate({}).size() == 1);
  CHECK(span_enumerate({}).front().is_zero());

  const Gf2Vec e1 = Gf2Vec::unit(1, 4);
  const std::vector<Gf2Vec> two = span_enumerate({e1});
  REQUIRE(two.size() == 2);
  CHECK(two[0].is_zero());
  CHECK(two[1] == e1);

  const std::vector<Gf2Vec> four = span_enumerate({e1, Gf2Vec::unit(2, 4)});
  std::set<std::uint64_t> got;
  for (const Gf2Vec& s : four) got.insert(s.bits());
  CHECK(got == std::set<std::uint64_t>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("span_enumerate yields 2^k distinct sums for independent bases") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int len = 14;
    // Grow a random independent set by rank checks.
    std::vector<Gf2Vec> basis;
    while (int(basis.size()) < 12) {
      const Gf2Vec cand = random_vec(rng, len);
      std::vector<Gf2Vec> probe = basis;
      probe.push_back(cand);
      if (rank(Gf2Matrix(probe, len)) == int(probe.size())) basis.push_back(cand);
    }
    const std::vector<Gf2Vec> span = span_enumerate(basis);
    std::set<std::uint64_t> distinct;
    for (const Gf2Vec& s : span) distinct.insert(s.bits());
    CHECK(span.size() == (std::size_t{1} << basis.size()));
    CHECK(distinct.size() == span.size());
  }
}

TEST_CASE("span_enumerate rejects oversized bases") {
  std::vector<Gf2Vec> big;
  for (int i = 1; i <= 21; ++i) big.push_back(Gf2Vec::unit(i, 30));
  CHECK_THROWS_AS(span_enumerate(big), std::length_error);
  CHECK_NOTHROW(span_enumerate(big, std::size_t{1} << 21));
}

TEST_CASE("apply matches row-by-row inner products") {
  std::mt19937_64 rng(5);
  const Gf2Matrix m = random_matrix(rng, 6, 9);
  const Gf2Vec x = random_vec(rng, 9);
  const Gf2Vec y = apply(m, x);
  for (int r = 0; r < m.nrows(); ++r) {
    CHECK(int(y.coeff(r + 1)) == parity_and(m.row(r), x));
  }
}

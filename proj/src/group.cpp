#include "commgraph/group.hpp"

#include <bit>
#include <stdexcept>

namespace cg {

namespace {

std::uint64_t low_mask(int len) { return (std::uint64_t{1} << len) - 1; }

void require_v(const GroupParams& p, const Gf2Vec& v, const char* op) {
  if (v.len() != p.m()) {
    throw std::invalid_argument(std::string(op) + ": V part has length " +
                                std::to_string(v.len()) + ", expected m = " +
                                std::to_string(p.m()));
  }
}

void require_element(const GroupParams& p, const GroupElement& g, const char* op) {
  require_v(p, g.v, op);
  if (g.w.len() != p.w_dim()) {
    throw std::invalid_argument(std::string(op) + ": W part has length " +
                                std::to_string(g.w.len()) + ", expected m-2 = " +
                                std::to_string(p.w_dim()));
  }
}

void require_group_level(const GroupParams& p, const char* op) {
  if (p.m() < 4) {
    throw std::invalid_argument(std::string(op) +
                                ": group-level operations require m >= 4");
  }
}

// One-sided cocycle sum in word form: component k collects the pairs
// (i, j = i+k+1) with a_i = c_j = 1.
std::uint64_t f_eval_bits(std::uint64_t a, std::uint64_t c, int m) {
  std::uint64_t out = 0;
  for (int k = 1; k <= m - 2; ++k) {
    out |= std::uint64_t(std::popcount(a & (c >> (k + 1))) & 1) << (k - 1);
  }
  return out;
}

}  // namespace

GroupParams::GroupParams(int m) : m_(m) {
  if (m < 3 || m > Gf2Vec::kMaxLen) {
    throw std::invalid_argument("GroupParams: m = " + std::to_string(m) +
                                " outside [3, " + std::to_string(Gf2Vec::kMaxLen) + "]");
  }
}

GroupElement identity(const GroupParams& p) {
  require_group_level(p, "identity");
  return GroupElement{Gf2Vec::zero(p.m()), Gf2Vec::zero(p.w_dim())};
}

Gf2Vec f_basis(const GroupParams& p, int i, int j) {
  if (i < 1 || i > p.m() || j < 1 || j > p.m()) {
    throw std::invalid_argument("f_basis: index outside [1, m]");
  }
  if (j >= i + 2) {
    return Gf2Vec::unit(j - i - 1, p.w_dim());
  }
  return Gf2Vec::zero(p.w_dim());
}

Gf2Vec f_eval(const GroupParams& p, const Gf2Vec& a, const Gf2Vec& c) {
  require_v(p, a, "f_eval");
  require_v(p, c, "f_eval");
  return Gf2Vec(f_eval_bits(a.bits(), c.bits(), p.m()), p.w_dim());
}

bool cocycle_check(const GroupParams& p, const Gf2Vec& a, const Gf2Vec& c,
                   const Gf2Vec& e) {
  const Gf2Vec lhs = xor_add(f_eval(p, a, c), f_eval(p, xor_add(a, c), e));
  const Gf2Vec rhs = xor_add(f_eval(p, c, e), f_eval(p, a, xor_add(c, e)));
  return lhs == rhs;
}

GroupElement multiply(const GroupParams& p, const GroupElement& g,
                      const GroupElement& h) {
  require_group_level(p, "multiply");
  require_element(p, g, "multiply");
  require_element(p, h, "multiply");
  return GroupElement{xor_add(g.v, h.v),
                      xor_add(f_eval(p, g.v, h.v), xor_add(g.w, h.w))};
}

GroupElement inverse(const GroupParams& p, const GroupElement& g) {
  require_group_level(p, "inverse");
  require_element(p, g, "inverse");
  return GroupElement{g.v, xor_add(g.w, f_eval(p, g.v, g.v))};
}

GroupElement square(const GroupParams& p, const GroupElement& g) {
  require_group_level(p, "square");
  require_element(p, g, "square");
  return GroupElement{Gf2Vec::zero(p.m()), f_eval(p, g.v, g.v)};
}

GroupElement commutator(const GroupParams& p, const GroupElement& g,
                        const GroupElement& h) {
  require_group_level(p, "commutator");
  require_element(p, g, "commutator");
  require_element(p, h, "commutator");
  return GroupElement{Gf2Vec::zero(p.m()), form_B(p, g.v, h.v)};
}

Gf2Vec form_B(const GroupParams& p, const Gf2Vec& u, const Gf2Vec& v) {
  require_group_level(p, "form_B");
  require_v(p, u, "form_B");
  require_v(p, v, "form_B");
  return Gf2Vec(f_eval_bits(u.bits(), v.bits(), p.m()) ^
                    f_eval_bits(v.bits(), u.bits(), p.m()),
                p.w_dim());
}

bool commutes(const GroupParams& p, const Gf2Vec& u, const Gf2Vec& v) {
  require_group_level(p, "commutes");
  require_v(p, u, "commutes");
  require_v(p, v, "commutes");
  for (int k = 1; k <= p.m() - 2; ++k) {
    const int parity = std::popcount((u.bits() & (v.bits() >> (k + 1))) ^
                                     (v.bits() & (u.bits() >> (k + 1)))) &
                       1;
    if (parity) return false;
  }
  return true;
}

Gf2Matrix phi_matrix(const GroupParams& p, const Gf2Vec& v) {
  require_group_level(p, "phi_matrix");
  require_v(p, v, "phi_matrix");
  std::vector<Gf2Vec> rows;
  rows.reserve(static_cast<std::size_t>(p.w_dim()));
  // Row k has bit j-1 set iff v_{j-k-1} + v_{j+k+1} = 1, so that
  // row_k . c is component k of B(v, c).
  for (int k = 1; k <= p.m() - 2; ++k) {
    const std::uint64_t row =
        ((v.bits() << (k + 1)) ^ (v.bits() >> (k + 1))) & low_mask(p.m());
    rows.emplace_back(row, p.m());
  }
  return Gf2Matrix(std::move(rows), p.m());
}

GroupElement embed_element(const GroupParams& from, const GroupElement& g) {
  require_group_level(from, "embed_element");
  require_element(from, g, "embed_element");
  return GroupElement{Gf2Vec(g.v.bits(), from.m() + 1),
                      Gf2Vec(g.w.bits(), from.w_dim() + 1)};
}

namespace {

std::string basis_sum(const Gf2Vec& vec, char symbol) {
  if (vec.is_zero()) return "0";
  std::string out;
  for (int i : vec.support()) {
    if (!out.empty()) out += '+';
    out += symbol;
    out += std::to_string(i);
  }
  return out;
}

}  // namespace

std::string v_to_string(const Gf2Vec& v) { return basis_sum(v, 'x'); }
std::string w_to_string(const Gf2Vec& w) { return basis_sum(w, 'y'); }

std::string to_string(const GroupParams& p, const GroupElement& g) {
  require_element(p, g, "to_string");
  return "(" + v_to_string(g.v) + ", " + w_to_string(g.w) + ")";
}

}  // namespace cg

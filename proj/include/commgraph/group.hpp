#pragma once

#include <string>

#include "commgraph/gf2.hpp"

namespace cg {

// Family parameter: V has dimension m, W has dimension m-2. The raw
// cocycle is defined for m >= 3; group and graph semantics need m >= 4.
class GroupParams {
 public:
  explicit GroupParams(int m);

  int m() const { return m_; }
  int w_dim() const { return m_ - 2; }

 private:
  int m_ = 0;
};

// Element (v, w) of the central extension: v carries the V part, w the
// W part. The identity is (0, 0).
struct GroupElement {
  Gf2Vec v;
  Gf2Vec w;

  bool operator==(const GroupElement&) const = default;
};

GroupElement identity(const GroupParams& p);

// Cocycle value on basis vectors: zero when j is i or i+1 or when i > j,
// and the W basis vector with index j-i-1 when j >= i+2.
Gf2Vec f_basis(const GroupParams& p, int i, int j);

// Bilinear extension of f_basis over the supports of a and c.
Gf2Vec f_eval(const GroupParams& p, const Gf2Vec& a, const Gf2Vec& c);

// The 2-cocycle identity f(a,c) + f(a+c,e) = f(c,e) + f(a,c+e).
bool cocycle_check(const GroupParams& p, const Gf2Vec& a, const Gf2Vec& c,
                   const Gf2Vec& e);

// (a,b) * (c,d) = (a+c, f(a,c) + b + d).
GroupElement multiply(const GroupParams& p, const GroupElement& g,
                      const GroupElement& h);

// (a,b)^-1 = (a, b + f(a,a)).
GroupElement inverse(const GroupParams& p, const GroupElement& g);

// (v,w)^2 = (0, f(v,v)); squares always land in the centre.
GroupElement square(const GroupParams& p, const GroupElement& g);

// [g,h] = g^-1 h^-1 g h = (0, B(g.v, h.v)).
GroupElement commutator(const GroupParams& p, const GroupElement& g,
                        const GroupElement& h);

// Alternating form B(u,v) = f(u,v) + f(v,u): component k is the parity of
// the pairs (i,j) with |i-j| = k+1, u_i = v_j = 1.
Gf2Vec form_B(const GroupParams& p, const Gf2Vec& u, const Gf2Vec& v);

// True iff B(u,v) = 0, i.e. (u,*) and (v,*) commute.
bool commutes(const GroupParams& p, const Gf2Vec& u, const Gf2Vec& v);

// Matrix of c -> B(v,c), shape (m-2) x m; its kernel is the centralizer
// of (v,0) modulo the centre.
Gf2Matrix phi_matrix(const GroupParams& p, const Gf2Vec& v);

// Coordinate embedding into the next family member: pads the V part and
// the W part with one trailing zero coordinate each.
GroupElement embed_element(const GroupParams& from, const GroupElement& g);

// "(x1+x3, y1)" rendering for reports and counterexamples.
std::string to_string(const GroupParams& p, const GroupElement& g);
std::string v_to_string(const Gf2Vec& v);
std::string w_to_string(const Gf2Vec& w);

}  // namespace cg

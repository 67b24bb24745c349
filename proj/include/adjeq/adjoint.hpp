#pragma once

#include <vector>

#include "adjeq/errors.hpp"
#include "adjeq/ring.hpp"
#include "adjeq/root_system.hpp"
#include "adjeq/signs.hpp"

namespace adjeq {

/// v = sum v_a e^a + sum vhat_s ehat^s, coordinates in canonical weight order.
template <CommutativeRing R>
struct AdjointVector {
  SystemId system;
  std::vector<typename R::Element> coords;

  const typename R::Element& operator[](Weight w) const { return coords[w.pos]; }
  typename R::Element& operator[](Weight w) { return coords[w.pos]; }
};

/// The elementary root unipotent x_rho(xi).
template <CommutativeRing R>
struct Elementary {
  RootIndex rho;
  typename R::Element xi;
};

/// g = x_1 x_2 ... x_n; acting on v applies x_n first.
template <CommutativeRing R>
using Word = std::vector<Elementary<R>>;

template <CommutativeRing R>
AdjointVector<R> zero_vector(const RootSystem& rs, const R& ring) {
  return {rs.id(), std::vector<typename R::Element>(rs.dimension(), ring.zero())};
}

template <CommutativeRing R>
AdjointVector<R> basis_vector(const RootSystem& rs, Weight w, const R& ring) {
  if (w.pos < 0 || w.pos >= rs.dimension()) throw IndexOutOfRange("weight out of range");
  AdjointVector<R> v = zero_vector(rs, ring);
  v.coords[w.pos] = ring.one();
  return v;
}

/// Vector whose coordinate at weight position p is the polynomial variable v<p>.
AdjointVector<PolynomialRing> generic_vector(const RootSystem& rs);

template <CommutativeRing R>
void check_compatible(const RootSystem& rs, const AdjointVector<R>& v) {
  if (v.system != rs.id()) throw Mismatch("vector belongs to " + v.system.name() + ", not " + rs.id().name());
  if (static_cast<int>(v.coords.size()) != rs.dimension())
    throw Mismatch("vector has " + std::to_string(v.coords.size()) + " coordinates, expected " +
                   std::to_string(rs.dimension()));
}

/// sum_s <beta, alpha_s> vhat_s.
template <CommutativeRing R>
typename R::Element zero_weight_combo(const RootSystem& rs, const R& ring, RootIndex beta, const AdjointVector<R>& v) {
  typename R::Element acc = ring.zero();
  for (int s = 1; s <= rs.rank(); ++s)
    if (const int c = rs.pairing(beta, s); c != 0) ring.add_assign(acc, times(ring, v[rs.zero_weight(s)], c));
  return acc;
}

/// w = x_rho(xi) v, coordinatewise:
///   w_l  = v_l + N_{rho,l-rho} xi v_{l-rho}            when l, l-rho are roots,
///   wh_s = vh_s + m_s(rho) xi v_{-rho},
///   w_rho = v_rho - sum_s <rho,alpha_s> xi vh_s - xi^2 v_{-rho},
/// and w_l = v_l for every other root l.
template <CommutativeRing R>
AdjointVector<R> apply_elementary(const RootSystem& rs, const SignTable& signs, const R& ring,
                                  const Elementary<R>& x, const AdjointVector<R>& v) {
  check_compatible(rs, v);
  if (signs.system() != rs.id()) throw Mismatch("sign table belongs to another system");
  if (x.rho < 0 || x.rho >= rs.size()) throw InvalidRoot("elementary root out of range");
  if (ring.is_zero(x.xi)) return v;

  AdjointVector<R> w = v;
  const RootIndex rho = x.rho;
  const RootIndex minus = rs.negate(rho);
  const auto& v_minus = v[rs.root_weight(minus)];

  for (RootIndex mu = 0; mu < rs.size(); ++mu) {
    const RootIndex lambda = rs.sum(rho, mu);
    if (lambda == kNoRoot) continue;
    const auto& src = v[rs.root_weight(mu)];
    if (ring.is_zero(src)) continue;
    auto delta = ring.mul(x.xi, src);
    ring.add_assign(w[rs.root_weight(lambda)], signs(rho, mu) > 0 ? delta : ring.neg(delta));
  }

  if (!ring.is_zero(v_minus)) {
    const auto xi_v = ring.mul(x.xi, v_minus);
    for (int s = 1; s <= rs.rank(); ++s)
      if (const int m = rs.coeff(rho, s); m != 0) ring.add_assign(w[rs.zero_weight(s)], times(ring, xi_v, m));
  }

  auto correction = ring.mul(x.xi, zero_weight_combo(rs, ring, rho, v));
  if (!ring.is_zero(v_minus)) ring.add_assign(correction, ring.mul(ring.mul(x.xi, x.xi), v_minus));
  ring.add_assign(w[rs.root_weight(rho)], ring.neg(correction));
  return w;
}

/// Applies the factors right to left, so the word acts as the product it lists.
template <CommutativeRing R>
AdjointVector<R> apply_word(const RootSystem& rs, const SignTable& signs, const R& ring, const Word<R>& word,
                            AdjointVector<R> v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_elementary(rs, signs, ring, *it, v);
  return v;
}

/// [x_a(t), x_b(u)] = x_a(t) x_b(u) x_a(-t) x_b(-u).
template <CommutativeRing R>
Word<R> commutator_word(const R& ring, RootIndex a, const typename R::Element& t, RootIndex b,
                        const typename R::Element& u) {
  return {{a, t}, {b, u}, {a, ring.neg(t)}, {b, ring.neg(u)}};
}

}  // namespace adjeq

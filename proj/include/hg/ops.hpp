#pragma once

#include <map>

#include "hg/finite_function.hpp"
#include "hg/hypergroup.hpp"

namespace hg {

// Union of supports: A * B = union over (a, b) of supp(delta_a * delta_b).
inline ElementSet support_product(const Hypergroup& H, const ElementSet& A,
                                  const ElementSet& B) {
  ElementSet out;
  for (const auto& a : A)
    for (const auto& b : B)
      for (const auto& [z, v] : H.convolve(a, b).entries()) out.insert(z);
  return out;
}

inline Rational haar_mass(const Hypergroup& H, const ElementSet& A) {
  Rational s(0);
  for (const auto& a : A) s += H.haar_weight(a);
  return s;
}

// Translation L_x f(y) = (delta_x * delta_y)(f). The support of L_x f is
// contained in x~ * supp(f); evaluation runs over exactly that candidate set.
inline FiniteFunction translate(const Hypergroup& H, const Element& x,
                                const FiniteFunction& f) {
  H.require_member(x);
  std::map<Element, Rational> acc;
  ElementSet candidates =
      support_product(H, ElementSet{H.involution(x)}, f.support());
  for (const auto& y : candidates) {
    Rational v = pair_measure(H.convolve(x, y), f);
    if (v != 0) acc[y] = v;
  }
  return FiniteFunction::from_map(acc);
}

// f~(x) = f(x~); values are rational, so no conjugation is involved.
inline FiniteFunction tilde(const Hypergroup& H, const FiniteFunction& f) {
  std::map<Element, Rational> acc;
  for (const auto& [x, v] : f.entries()) acc[H.involution(x)] += v;
  return FiniteFunction::from_map(acc);
}

// Haar convolution of finitely supported functions:
//   (f *_h g)(x) = sum_t f(t) (L_{t~} g)(x) h(t).
inline FiniteFunction convolve_functions(const Hypergroup& H,
                                         const FiniteFunction& f,
                                         const FiniteFunction& g) {
  std::map<Element, Rational> acc;
  for (const auto& [t, ft] : f.entries()) {
    const Rational w = ft * H.haar_weight(t);
    FiniteFunction shifted = translate(H, H.involution(t), g);
    for (const auto& [x, v] : shifted.entries()) acc[x] += w * v;
  }
  return FiniteFunction::from_map(acc);
}

// Norms in ell^r(H, h) for r = 1 and the exact square for r = 2.
inline Rational l1_haar(const Hypergroup& H, const FiniteFunction& f) {
  Rational s(0);
  for (const auto& [x, v] : f.entries())
    s += (v < 0 ? -v : v) * H.haar_weight(x);
  return s;
}

inline Rational l2sq_haar(const Hypergroup& H, const FiniteFunction& f) {
  Rational s(0);
  for (const auto& [x, v] : f.entries()) s += v * v * H.haar_weight(x);
  return s;
}

inline Rational haar_integral(const Hypergroup& H, const FiniteFunction& f) {
  Rational s(0);
  for (const auto& [x, v] : f.entries()) s += v * H.haar_weight(x);
  return s;
}

}  // namespace hg

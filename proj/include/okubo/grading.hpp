#pragma once

// The canonical (Z/3)^2-grading of O_{alpha,beta} (deg z~_{i,j} = (i,j)), the
// cube-class homomorphism Phi and the resulting normal form and Weyl group.

#include <array>
#include <string>
#include <vector>

#include "okubo/algebra.hpp"
#include "okubo/group.hpp"

namespace okubo {

/// The nine degrees: (0,0) first, then kBasis order.
inline constexpr std::array<BasisIndex, 9> kDegrees = {
    {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 2}, {1, 2}, {2, 1}}};

/// Position of (i mod 3, j mod 3) in kDegrees.
int degree_position(int i, int j);
inline int degree_position(BasisIndex h) { return degree_position(h.i, h.j); }
BasisIndex degree_add(BasisIndex a, BasisIndex b);

struct PhiMap {
  std::array<CubeClass, 9> classes;  // indexed like kDegrees
  const CubeClass& at(BasisIndex h) const { return classes[degree_position(h)]; }
};

template <ExactField F>
PhiMap phi_gamma(const OkuboAlgebra<F>& a);

/// Failing pairs (g, h) with Phi(g+h) != Phi(g)Phi(h); empty when Phi is a
/// homomorphism.
std::vector<std::pair<BasisIndex, BasisIndex>> phi_homomorphism_failures(const PhiMap& phi);

/// 0, 1 or 2: the image has 3^rank elements.
int phi_image_rank(const PhiMap& phi);

/// Degrees h for which (u*u)*(u*u) != n(u,u*u) u with u = z~_h.
template <ExactField F>
std::vector<BasisIndex> square_identity_failures(const OkuboAlgebra<F>& a);

enum class NormalFormKind { Split, OneParameter, TwoParameter, TwoParameterSwapped };
std::string to_string(NormalFormKind k);

template <ExactField F>
struct NormalForm {
  NormalFormKind kind = NormalFormKind::Split;
  /// (O, Gamma) is equivalent to O_{first, second} with its canonical grading.
  /// For OneParameter first is 1; for Split both are 1.
  typename F::Elem first{};
  typename F::Elem second{};
  BasisIndex x_degree{};
  BasisIndex y_degree{};
  std::string text;  // "split", "one_parameter(3)", "two_parameter(2,3)", ...
};

template <ExactField F>
NormalForm<F> classify_grading(const OkuboAlgebra<F>& a);

/// Rank-2 orientation for an explicit choice of homogeneous generators
/// x = z~_a, y = z~_b (Phi(a), Phi(b) must generate the image).
template <ExactField F>
NormalForm<F> classify_with_generators(const OkuboAlgebra<F>& a, BasisIndex x_degree, BasisIndex y_degree);

/// {f in SL(2,3) : Phi(f.h) = Phi(h) for all h}.
MatrixGroup2 weyl_group_via_formula(const PhiMap& phi);

template <ExactField F>
MatrixGroup2 weyl_group_via_formula(const OkuboAlgebra<F>& a) {
  return weyl_group_via_formula(phi_gamma(a));
}

template <ExactField F>
std::string phi_class_text(const OkuboAlgebra<F>& a, const CubeClass& c) {
  return cube_class_text(a.field(), c);
}

}  // namespace okubo

#pragma once

// Automorphism and isomorphism enumeration.  A linear map is an 8x8 matrix
// whose column a is the image of z~_a.  Maps are built from a generator pair
// (x, y) = images of (z~_{1,0}, z~_{0,1}) through a fixed word basis and
// accepted only after checking all 64 basis products and the norm.

#include <optional>
#include <string>
#include <vector>

#include "okubo/algebra.hpp"
#include "okubo/grading.hpp"
#include "okubo/group.hpp"
#include "okubo/matrix_model.hpp"

namespace okubo {

template <ExactField F>
using ElemKey = std::decay_t<decltype(std::declval<const F&>().key(std::declval<const typename F::Elem&>()))>;
template <ExactField F>
using MapKey = std::vector<ElemKey<F>>;
template <ExactField F>
using MapGroup = ConcreteGroup<Matrix<F>, MapKey<F>>;

/// One step of the word basis: z~_target = sign * (z~_left * z~_right), with
/// positions in kBasis order.  Positions 0 and 2 are the generators.
struct WordStep {
  int target;
  int left;
  int right;
  int sign;
};
/// Steps are evaluated in the listed order.
inline constexpr std::array<WordStep, 6> kWordBasis = {{
    {1, 0, 0, 1},    // z~_{2,0} = z~_{1,0} * z~_{1,0}
    {3, 2, 2, 1},    // z~_{0,2} = z~_{0,1} * z~_{0,1}
    {4, 0, 2, -1},   // z~_{1,1} = -(z~_{1,0} * z~_{0,1})
    {5, 1, 3, -1},   // z~_{2,2} = -(z~_{2,0} * z~_{0,2})
    {7, 0, 4, -1},   // z~_{2,1} = -(z~_{1,0} * z~_{1,1})
    {6, 4, 2, -1},   // z~_{1,2} = -(z~_{1,1} * z~_{0,1})
}};

template <ExactField F>
MapKey<F> map_key(const F& f, const Matrix<F>& m);

template <ExactField F>
typename OkuboAlgebra<F>::Vector apply_map(const F& f, const Matrix<F>& m, const typename OkuboAlgebra<F>::Vector& v);

/// Column images of the word basis in `target` for z~_{1,0} -> x, z~_{0,1} -> y.
template <ExactField F>
Matrix<F> word_basis_map(const OkuboAlgebra<F>& target, const typename OkuboAlgebra<F>::Vector& x,
                         const typename OkuboAlgebra<F>::Vector& y);

/// Empty string if m : a -> b is an isometric algebra isomorphism, otherwise
/// a description of the first failure.
template <ExactField F>
std::string isomorphism_failure(const OkuboAlgebra<F>& a, const OkuboAlgebra<F>& b, const Matrix<F>& m);

template <ExactField F>
std::optional<Matrix<F>> extend_from_generators(const OkuboAlgebra<F>& a, const OkuboAlgebra<F>& b,
                                                const typename OkuboAlgebra<F>::Vector& x,
                                                const typename OkuboAlgebra<F>::Vector& y);

/// Map z~_a -> z~_{f(a)} (no scalars).
template <ExactField F>
Matrix<F> permutation_map(const F& f, const Mat2F3& m);

/// The matrix f with column images deg(phi(z~_{1,0})), deg(phi(z~_{0,1})),
/// provided phi sends every z~_a to a multiple of z~_{f(a)}.
template <ExactField F>
std::optional<Mat2F3> induced_degree_map(const F& f, const Matrix<F>& m);

/// Builds the group on an explicitly closed set of maps.
template <ExactField F>
MapGroup<F> map_group(const F& f, const std::vector<Matrix<F>>& maps);

// ---------------------------------------------------------------------------

template <ExactField F>
struct GradingAutomorphisms {
  MapGroup<F> group;
  std::size_t candidates = 0;  // generator pairs that passed the scalar filter
};

/// Aut(Gamma) for the canonical grading.  Finite fields need q <= 9.
template <ExactField F>
GradingAutomorphisms<F> grading_automorphisms(const OkuboAlgebra<F>& a);

struct StabilizerResult {
  ElementSet elements;        // indices into the automorphism group
  bool character_form = true; // every element is z~_h -> chi(h) z~_h, chi a mu_3-valued character
  std::size_t mu3 = 1;        // |mu_3(F)|
};

template <ExactField F>
StabilizerResult stabilizer_subgroup(const OkuboAlgebra<F>& a, const MapGroup<F>& aut);

struct WeylFromAut {
  FiniteGroup quotient;
  std::vector<int> projection;         // aut index -> coset index
  std::vector<Mat2F3> induced;         // per coset
  bool induced_well_defined = true;
  bool matches_formula = false;        // same matrix set and isomorphic groups
};

template <ExactField F>
WeylFromAut weyl_from_aut(const F& f, const MapGroup<F>& aut, const StabilizerResult& stab, const MatrixGroup2& formula);

template <ExactField F>
struct Section {
  std::vector<Mat2F3> weyl;        // W(Gamma) elements (formula group order)
  std::vector<Matrix<F>> images;   // section(weyl[i])
  bool homomorphic = false;        // s(fg) = s(f)s(g) on all pairs
  bool lifts = false;              // induced_degree_map(s(f)) = f
};

/// Rank 0: conjugate of the permutation maps z~_a -> z~_{f(a)}.  Rank 1: the
/// powers of the order-3 map x -> x, y -> -x*y.  Rank 2 throws WrongRank.
template <ExactField F>
Section<F> splitting_section(const OkuboAlgebra<F>& a);

// ---------------------------------------------------------------------------

struct FullAutF2 {
  std::size_t valid_pairs = 0;
  std::size_t accepted = 0;
  MapGroup<GaloisField> group;
};

/// Every automorphism of O_{1,1} over GF(2), via generator pairs.
FullAutF2 full_aut_f2();

using Mat3Group = ConcreteGroup<Mat3, Mat3>;

struct UnitaryGroups {
  std::shared_ptr<const GaloisField> f4;
  GaloisField::Elem omega = 0;
  Mat3Group u;
  ElementSet su;               // indices into u
  Mat3Group pu;                // normalized representatives
  std::vector<int> projection; // u index -> pu index
  ElementSet psu;              // indices into pu
  FiniteGroup su_table;
  FiniteGroup psu_table;
  std::vector<int> psu_embedding;  // psu_table index -> pu index
};

/// Scale so that the first nonzero row-major entry is 1.
Mat3 projective_normalize(const GaloisField& f, const Mat3& m);
/// conj(m)^T with conj(x) = x^2.
Mat3 unitary_adjoint(const GaloisField& f, const Mat3& m);

UnitaryGroups unitary_f4();

struct PauliOrbit {
  std::vector<Mat3> orbit;         // sorted
  std::vector<Mat3> expected;      // sorted union of F4^x z_{i,j}
  ElementSet stabilizer;           // indices into u
  bool stabilizer_diagonal = true;
};

PauliOrbit orbit_of_pauli_x(const UnitaryGroups& g);

struct ConjHomomorphism {
  std::vector<int> u_to_aut;     // u index -> aut index (-1 if not an automorphism)
  std::vector<int> pu_to_aut;    // pu index -> aut index
  ElementSet kernel;             // indices into u
  bool all_automorphisms = true;
  bool homomorphic = false;      // verified on the PU table
  bool image_equals_aut = false;
};

ConjHomomorphism conj_homomorphism(const UnitaryGroups& g, const OkuboAlgebra<GaloisField>& split,
                                   const MapGroup<GaloisField>& aut);

struct PsuSemidirect {
  ElementSet pauli;    // psu_table indices
  ElementSet q8;       // psu_table indices
  bool q8_in_psu = false;
  SemidirectResult result;
};

/// The image of the Pauli group and the pullback of the section applied to
/// the two quaternion generators.
PsuSemidirect psu_semidirect(const UnitaryGroups& g, const ConjHomomorphism& conj,
                             const MapGroup<GaloisField>& aut);

struct IsomorphismSearch {
  std::optional<Matrix<GaloisField>> map;
  std::size_t x_candidates = 0;
  std::size_t pairs_tested = 0;
};

/// An isomorphism a -> b over a common finite field with q <= 7.
IsomorphismSearch find_isomorphism(const OkuboAlgebra<GaloisField>& a, const OkuboAlgebra<GaloisField>& b);

}  // namespace okubo

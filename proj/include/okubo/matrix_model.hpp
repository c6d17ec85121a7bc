#pragma once

// 3x3 matrix realizations over finite fields: sl(3) with the omega-twisted
// product, the Pauli basis z_{i,j}, symbol algebras with an involution of the
// second kind, and hermitian forms over quadratic extensions.

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "okubo/algebra.hpp"

namespace okubo {

/// Row-major 3x3 matrix over a GaloisField.
using Mat3 = std::array<GaloisField::Elem, 9>;

Mat3 mat3_zero();
Mat3 mat3_identity();
Mat3 mat3_add(const GaloisField& f, const Mat3& a, const Mat3& b);
Mat3 mat3_sub(const GaloisField& f, const Mat3& a, const Mat3& b);
Mat3 mat3_scale(const GaloisField& f, GaloisField::Elem c, const Mat3& a);
Mat3 mat3_mul(const GaloisField& f, const Mat3& a, const Mat3& b);
GaloisField::Elem mat3_trace(const GaloisField& f, const Mat3& a);
GaloisField::Elem mat3_det(const GaloisField& f, const Mat3& a);
std::string mat3_format(const GaloisField& f, const Mat3& a);  // "[a,b,c;d,e,f;g,h,i]"

/// Sum of the principal 2x2 minors.
GaloisField::Elem sr_form(const GaloisField& f, const Mat3& a);
/// tr(a)tr(b) - tr(ab).
GaloisField::Elem sr_polar(const GaloisField& f, const Mat3& a, const Mat3& b);

/// x*y = w xy - w^2 yx - (w - w^2)/3 tr(xy) 1 on trace-zero matrices.
Mat3 star_product(const GaloisField& f, GaloisField::Elem omega, const Mat3& x, const Mat3& y);

/// The generators x = diag(1, w, w^2) and y (cyclic shift) with
/// x^3 = y^3 = 1 and yx = w xy.
std::array<Mat3, 2> pauli_generators(const GaloisField& f, GaloisField::Elem omega);

/// z_{i,j} = w^{-ij}/(w - w^2) x^i y^j, indexed like kBasis.
std::array<Mat3, 8> pauli_basis(const GaloisField& f, GaloisField::Elem omega);

/// Coordinates of a trace-zero matrix in the z_{i,j} basis, or nullopt if m
/// is not in their span.
std::optional<std::array<GaloisField::Elem, 8>> z_coordinates(const GaloisField& f, GaloisField::Elem omega,
                                                               const Mat3& m);

struct Sl3IsoCheck {
  /// 9x8 matrix whose column a is the row-major entries of z_a.
  Matrix<GaloisField> map;
  std::size_t products_checked = 0;
  std::size_t pairings_checked = 0;
};

/// Verifies that z~_{i,j} -> z_{i,j} is an isometric isomorphism from
/// O_{1,1} onto (sl(3), *, sr).  Throws StructureMismatch otherwise.
Sl3IsoCheck sl3_iso_check(std::shared_ptr<const GaloisField> f, GaloisField::Elem omega);

// ---------------------------------------------------------------------------
// Hermitian forms over a quadratic extension K/F.

using KVector = std::vector<GaloisField::Elem>;

struct HermitianForm {
  QuadraticExtension kf;
  Matrix<GaloisField> gram;  // over K, gram = conj(gram)^T

  std::size_t dim() const { return gram.rows(); }
  /// h(u, v) = u^T g conj(v); linear in the first slot.
  GaloisField::Elem operator()(const KVector& u, const KVector& v) const;
};

/// Validates hermitian symmetry and nondegeneracy (DegenerateForm otherwise).
HermitianForm make_hermitian_form(const QuadraticExtension& kf, Matrix<GaloisField> gram);

/// Random nondegenerate hermitian form of the given dimension.
HermitianForm random_hermitian_form(const QuadraticExtension& kf, std::size_t dim, std::mt19937_64& rng);

/// Basis u_1..u_n with h(u_i, u_i) = 1 and h(u_i, u_j) = 0.  Dimensions 1-4.
std::vector<KVector> hermitian_orthonormalize(const HermitianForm& h);

/// Gram matrix of h on the given vectors.
Matrix<GaloisField> hermitian_gram(const HermitianForm& h, const std::vector<KVector>& basis);

// ---------------------------------------------------------------------------
// Symbol algebras (alpha, beta)_{K, w}: x^3 = alpha, y^3 = beta, yx = w xy,
// stored by structure constants on the monomials x^i y^j (index 3i + j).

struct SymbolAlgebra {
  std::shared_ptr<const GaloisField> k;
  GaloisField::Elem omega = 0;
  GaloisField::Elem alpha = 0;
  GaloisField::Elem beta = 0;

  using Element = std::array<GaloisField::Elem, 9>;
  Element multiply(const Element& a, const Element& b) const;
  /// Reduced trace: 3 times the coefficient of 1.
  GaloisField::Elem trace(const Element& a) const;
  Element star(const Element& a, const Element& b) const;
  /// Involution fixing x and y, acting on K by the Frobenius of K/F.
  Element tau(const QuadraticExtension& kf, const Element& a) const;
  /// z_{i,j} = w^{-ij}/(w - w^2) x^i y^j, indexed like kBasis.
  std::array<Element, 8> z_basis() const;
};

struct SymbolSkewResult {
  /// F-dimension of the trace-zero part (K = F) or of its tau-skew part.
  std::size_t dimension = 0;
  bool z_basis_skew = true;     // tau(z_a) = -z_a for every a (K != F case)
  bool closed = true;           // products of z_a stay F-combinations of z_b
  bool matches_okubo = true;    // structure constants and norm equal O_{alpha,beta}
  /// Structure constants in the z-basis, coeffs[a][b] = coefficients of z_a * z_b over F.
  std::array<std::array<std::array<GaloisField::Elem, 8>, 8>, 8> products{};
  std::vector<std::string> failures;
};

/// F a prime field; either K = F with w in F, or K a quadratic extension of
/// F containing w.  alpha, beta are elements of F.
SymbolSkewResult symbol_algebra_skew(std::shared_ptr<const GaloisField> f, std::shared_ptr<const GaloisField> k,
                                     GaloisField::Elem omega, GaloisField::Elem alpha, GaloisField::Elem beta);

}  // namespace okubo

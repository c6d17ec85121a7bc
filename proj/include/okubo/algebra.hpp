#pragma once

// The Okubo algebra O_{alpha,beta}: an 8-dimensional algebra on the basis
// z~_{i,j}, (i,j) in (Z/3)^2 \ {(0,0)}, with products given by signed
// structure constants carrying optional alpha / beta factors.

#include <array>
#include <compare>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "okubo/field.hpp"
#include "okubo/linalg.hpp"

namespace okubo {

struct BasisIndex {
  int i = 0;
  int j = 0;
  auto operator<=>(const BasisIndex&) const = default;
};

/// Fixed enumeration order; also the row/column order of the printed table.
inline constexpr std::array<BasisIndex, 8> kBasis = {
    {{1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 2}, {1, 2}, {2, 1}}};

/// Position of (i mod 3, j mod 3) in kBasis, or -1 for (0,0).
int basis_position(int i, int j);
inline int basis_position(BasisIndex b) { return basis_position(b.i, b.j); }
std::string basis_label(BasisIndex b);  // "z̃_{1,0}"

struct StructureTerm {
  int sign = 0;  // 0, +1, -1
  int alpha_carry = 0;
  int beta_carry = 0;
  std::optional<BasisIndex> target;
  bool operator==(const StructureTerm&) const = default;
};

/// Product of two basis elements, symbolic in alpha and beta.
StructureTerm structure_product(BasisIndex a, BasisIndex b);

using StructureTable = std::array<std::array<StructureTerm, 8>, 8>;

StructureTable structure_table();
/// Reads 64 records "(i,j) (i',j') sign acarry bcarry (i'',j'')" ('-' for no
/// target, '#' starts a comment).
StructureTable parse_structure_table(std::istream& in);
StructureTable load_structure_table(const std::string& path);
std::string format_structure_table(const StructureTable& table);

template <ExactField F>
class OkuboAlgebra {
 public:
  using FieldType = F;
  using Elem = typename F::Elem;
  using Vector = std::array<Elem, 8>;

  struct Entry {
    int target = -1;  // position in kBasis, -1 for a zero product
    Elem coeff{};
  };

  OkuboAlgebra(std::shared_ptr<const F> field, Elem alpha, Elem beta);

  const F& field() const { return *field_; }
  const std::shared_ptr<const F>& field_ptr() const { return field_; }
  const Elem& alpha() const { return alpha_; }
  const Elem& beta() const { return beta_; }
  std::string name() const;  // "O_{1,3} over GF(7)"

  const Entry& entry(int a, int b) const { return entries_[a * 8 + b]; }
  /// polar(z~_a, z~_{-a}); every other basis pairing is zero.
  const Elem& pairing(int a) const { return pairing_[a]; }

  Vector zero() const;
  Vector basis(int position) const;
  Vector random(std::mt19937_64& rng) const;
  Vector add(const Vector& x, const Vector& y) const;
  Vector sub(const Vector& x, const Vector& y) const;
  Vector scale(const Elem& c, const Vector& x) const;
  bool equal(const Vector& x, const Vector& y) const;
  bool is_zero(const Vector& x) const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Elem norm(const Vector& x) const;
  Elem polar(const Vector& x, const Vector& y) const;

  /// 8x8 polar Gram matrix in the z~ basis.
  Matrix<F> gram() const;
  /// Matrices of y -> x*y and y -> y*x (columns are images of basis vectors).
  Matrix<F> left_multiplication(const Vector& x) const;
  Matrix<F> right_multiplication(const Vector& x) const;

  std::string format(const Vector& x) const;

 private:
  std::shared_ptr<const F> field_;
  Elem alpha_;
  Elem beta_;
  std::array<Entry, 64> entries_;
  std::array<Elem, 8> pairing_;
  std::array<int, 8> opposite_;
};

enum class IdempotentClass { Quaternionic, Quadratic, Singular };
std::string to_string(IdempotentClass c);

struct IdempotentInfo {
  IdempotentClass cls;
  std::size_t centralizer_dim;
  std::size_t norm_rank;
};

/// All nonzero e with e*e = e, in canonical order.  Requires q <= 9.
std::vector<OkuboAlgebra<GaloisField>::Vector> find_idempotents(const OkuboAlgebra<GaloisField>& a);

/// Char-3 taxonomy by the rank of the norm on {x : e*x = x*e}.
IdempotentInfo classify_idempotent(const OkuboAlgebra<GaloisField>& a,
                                   const OkuboAlgebra<GaloisField>::Vector& e);

/// Advances x to the next vector in canonical (odometer) order; false on wrap.
bool next_vector(const GaloisField& f, std::array<GaloisField::Elem, 8>& x);

extern template class OkuboAlgebra<GaloisField>;
extern template class OkuboAlgebra<RationalField>;

}  // namespace okubo

#pragma once

// Exact scalar fields: GF(p), GF(p^k) and the rationals.
//
// Finite-field elements are plain indices into the canonical element order:
// the element c_0 + c_1 t + ... + c_{k-1} t^{k-1} has index sum c_i p^i, so
// comparing indices is lexicographic comparison of coefficient vectors with
// the leading coefficient most significant.  Every "least element" choice in
// the library uses this order.  Arithmetic goes through the field object, in
// the style of table-driven GF implementations.

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "okubo/error.hpp"

namespace okubo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Prime, Extension, Rationals };

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;  // 0 for the rationals
  std::uint32_t k = 1;
  // Ascending coefficients, length k+1, monic.  Empty unless kind == Extension.
  std::vector<std::uint32_t> modulus;

  std::uint64_t order() const;  // 0 for the rationals
  bool finite() const { return kind != FieldKind::Rationals; }
  std::string name() const;      // "GF(7)", "GF(4)", "Q"
  std::string modulus_text() const;

  bool operator==(const FieldDescriptor&) const = default;
};

bool is_prime(std::uint64_t n);

/// Validating constructor for field descriptors.  Extension moduli are
/// checked for monicity and irreducibility by exhaustive factor search.
FieldDescriptor make_field(FieldKind kind, std::uint32_t p = 0, std::uint32_t k = 1,
                           std::vector<std::uint32_t> modulus = {});

/// GF(q) with the library's fixed moduli:
///   GF(4) = GF(2)[t]/(t^2+t+1), GF(9) = GF(3)[t]/(t^2+1),
///   GF(25) = GF(5)[t]/(t^2+2),  GF(49) = GF(7)[t]/(t^2+1).
/// Other prime powers use the least irreducible monic modulus.
FieldDescriptor standard_field(std::uint64_t q);

/// "2", "4", "7", "GF(9)", "Q".
FieldDescriptor parse_field_spec(std::string_view spec);

class GaloisField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool is_finite = true;
  static constexpr std::uint64_t kMaxOrder = 10000;

  explicit GaloisField(FieldDescriptor descriptor);
  static std::shared_ptr<const GaloisField> create(const FieldDescriptor& descriptor);
  static std::shared_ptr<const GaloisField> create(std::uint64_t q) {
    return create(standard_field(q));
  }

  const FieldDescriptor& descriptor() const { return desc_; }
  std::uint32_t characteristic() const { return desc_.p; }
  std::uint32_t degree() const { return desc_.k; }
  std::uint32_t order() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool less(Elem a, Elem b) const { return a < b; }

  Elem add(Elem a, Elem b) const {
    if (desc_.k == 1) {
      Elem s = a + b;
      return s >= q_ ? s - q_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem from_int(long long v) const;

  /// Element with the given canonical index; indices run over [0, q).
  Elem element(std::uint32_t index) const { return index; }
  std::uint32_t index(Elem a) const { return a; }
  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  /// x -> x^p.
  Elem frobenius(Elem a) const { return pow(a, desc_.p); }
  /// Least primitive element under the canonical order.
  Elem generator() const { return generator_; }
  /// Discrete log to base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;

  std::string format(Elem a) const;
  Elem parse(std::string_view text) const;
  Elem random(std::mt19937_64& rng) const;
  std::uint64_t key(Elem a) const { return a; }

 private:
  Elem add_digits(Elem a, Elem b) const;

  FieldDescriptor desc_;
  std::uint32_t q_ = 0;
  Elem generator_ = 1;
  std::vector<Elem> exp_;            // length 2(q-1)
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<Elem> neg_table_;
  std::vector<Elem> add_table_;      // q*q, only for small extension fields
};

class RationalField {
 public:
  using Elem = Rational;
  static constexpr bool is_finite = false;

  static std::shared_ptr<const RationalField> create() {
    return std::make_shared<const RationalField>();
  }

  FieldDescriptor descriptor() const { return FieldDescriptor{}; }
  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  /// Numerator first, then denominator.
  bool less(const Elem& a, const Elem& b) const;

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, std::uint64_t e) const;
  Elem from_int(long long v) const { return Rational(v); }

  std::string format(const Elem& a) const;
  Elem parse(std::string_view text) const;
  /// Small random rational: numerator in [-9, 9], denominator in [1, 5].
  Elem random(std::mt19937_64& rng) const;
  std::string key(const Elem& a) const { return format(a); }
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Elem& a, std::mt19937_64& rng) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.eq(a, a) } -> std::same_as<bool>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.random(rng) } -> std::convertible_to<typename F::Elem>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

// ---------------------------------------------------------------------------
// Cube roots of unity and cube classes F^x / (F^x)^3.

std::optional<GaloisField::Elem> primitive_cube_root(const GaloisField& f);
inline std::optional<Rational> primitive_cube_root(const RationalField&) { return std::nullopt; }

/// Element of F^x/(F^x)^3.  For finite fields with 3 | q-1 the class is an
/// exponent e in Z/3 with a^((q-1)/3) = w^e (w the least primitive cube
/// root); otherwise the group is trivial.  For the rationals the class is the
/// cube-free positive integer prod p^(v_p mod 3).
class CubeClass {
 public:
  static CubeClass finite(int exponent, bool group_nontrivial);
  static CubeClass rational(std::map<std::uint64_t, int> prime_exponents);

  bool is_identity() const;
  CubeClass operator*(const CubeClass& other) const;
  CubeClass inverse() const;
  bool operator==(const CubeClass& other) const = default;
  bool operator<(const CubeClass& other) const;

  bool is_rational() const { return rational_; }
  int exponent() const { return exponent_; }
  const std::map<std::uint64_t, int>& primes() const { return primes_; }
  /// Cube-free positive integer for rational classes.
  BigInt cube_free_value() const;

 private:
  bool rational_ = false;
  bool nontrivial_group_ = false;
  int exponent_ = 0;
  std::map<std::uint64_t, int> primes_;
};

CubeClass cube_class(const GaloisField& f, GaloisField::Elem a);
CubeClass cube_class(const RationalField& f, const Rational& a);

/// Least element of the class (finite) or the cube-free integer (rational),
/// in canonical textual form.
std::string cube_class_text(const GaloisField& f, const CubeClass& c);
std::string cube_class_text(const RationalField& f, const CubeClass& c);

/// Exact rational cube root, if one exists.
std::optional<Rational> rational_cube_root(const Rational& a);
std::optional<BigInt> integer_cube_root(const BigInt& a);

/// Some c in F with c^3 = a, least under the canonical order; nullopt if a is
/// not a cube.
std::optional<GaloisField::Elem> cube_root(const GaloisField& f, GaloisField::Elem a);
inline std::optional<Rational> cube_root(const RationalField&, const Rational& a) {
  return rational_cube_root(a);
}

// ---------------------------------------------------------------------------
// Quadratic extensions K/F of finite fields, F the prime field of K.

struct QuadraticExtension {
  std::shared_ptr<const GaloisField> base;
  std::shared_ptr<const GaloisField> ext;

  static QuadraticExtension make(std::shared_ptr<const GaloisField> base,
                                 std::shared_ptr<const GaloisField> ext);
  /// The nontrivial F-automorphism x -> x^|F|.
  GaloisField::Elem conj(GaloisField::Elem a) const { return ext->pow(a, base->order()); }
  GaloisField::Elem embed(GaloisField::Elem a) const;
  bool in_base(GaloisField::Elem a) const { return conj(a) == a; }
  GaloisField::Elem restrict_to_base(GaloisField::Elem a) const;
};

/// Least beta in K with beta * conj(beta) = alpha.
GaloisField::Elem solve_norm_equation(const QuadraticExtension& kf, GaloisField::Elem alpha);

// ---------------------------------------------------------------------------
// Dynamically typed field handles, used at the API boundary.

class Field {
 public:
  using Impl = std::variant<std::shared_ptr<const GaloisField>, std::shared_ptr<const RationalField>>;

  static Field make(const FieldDescriptor& descriptor);
  static Field parse(std::string_view spec) { return make(parse_field_spec(spec)); }

  const FieldDescriptor& descriptor() const { return desc_; }
  const Impl& impl() const { return impl_; }
  bool same_as(const Field& other) const { return desc_ == other.desc_; }

  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit([&](const auto& ptr) -> decltype(auto) { return fn(*ptr); }, impl_);
  }

 private:
  FieldDescriptor desc_;
  Impl impl_;
};

class FieldElement {
 public:
  using Value = std::variant<GaloisField::Elem, Rational>;

  FieldElement(Field field, Value value) : field_(std::move(field)), value_(std::move(value)) {}
  static FieldElement parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  const Value& value() const { return value_; }
  std::string to_string() const;
  bool is_zero() const;

 private:
  Field field_;
  Value value_;
};

enum class FieldOp { Add, Sub, Mul, Div, Neg, Inv };

/// Checked arithmetic on dynamic elements; Neg and Inv ignore b.
FieldElement field_arith(FieldOp op, const FieldElement& a, const FieldElement& b);
FieldElement field_arith(FieldOp op, const FieldElement& a);
bool field_equal(const FieldElement& a, const FieldElement& b);

}  // namespace okubo

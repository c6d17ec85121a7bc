#include "okubo/identities.hpp"

#include <random>

namespace okubo {

namespace {

template <ExactField F>
class Checker {
 public:
  using Vector = typename OkuboAlgebra<F>::Vector;

  Checker(const OkuboAlgebra<F>& a, IdentityReport& r) : a_(a), r_(r) {}

  void pair(const Vector& x, const Vector& y) {
    const F& f = a_.field();
    ++r_.pairs;
    const auto xy = a_.multiply(x, y);
    const auto nx = a_.norm(x);
    if (!f.eq(a_.norm(xy), f.mul(nx, a_.norm(y)))) note(r_.multiplicativity_failures, "n(x*y) = n(x)n(y)", x, y);
    const auto nxy = a_.scale(nx, y);
    if (!a_.equal(a_.multiply(xy, x), nxy)) note(r_.left_composition_failures, "(x*y)*x = n(x)y", x, y);
    if (!a_.equal(a_.multiply(x, a_.multiply(y, x)), nxy))
      note(r_.right_composition_failures, "x*(y*x) = n(x)y", x, y);
  }

  void triple(const Vector& x, const Vector& y, const Vector& z) {
    ++r_.triples;
    if (!a_.field().eq(a_.polar(a_.multiply(x, y), z), a_.polar(x, a_.multiply(y, z))))
      note(r_.associativity_failures, "n(x*y,z) = n(x,y*z)", x, y, &z);
  }

 private:
  void note(std::uint64_t& counter, const char* what, const Vector& x, const Vector& y, const Vector* z = nullptr) {
    ++counter;
    if (r_.examples.size() < 5) r_.examples.push_back({what, a_.format(x), a_.format(y), z ? a_.format(*z) : ""});
  }

  const OkuboAlgebra<F>& a_;
  IdentityReport& r_;
};

}  // namespace

template <ExactField F>
IdentityReport identity_suite(const OkuboAlgebra<F>& a, const IdentityOptions& options) {
  const F& f = a.field();
  IdentityReport r;
  Checker<F> check(a, r);
  std::mt19937_64 rng(options.seed);

  r.isotropic = f.is_zero(a.norm(a.basis(0)));
  r.gram_nondegenerate = !f.is_zero(determinant(f, a.gram()));
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q)
      for (int s = 0; s < 8; ++s) check.triple(a.basis(p), a.basis(q), a.basis(s));

  bool exhaustive = false;
  if constexpr (F::is_finite) {
    std::uint64_t q16 = 1;
    for (int i = 0; i < 16 && q16 <= options.pair_cap; ++i) q16 *= f.order();
    exhaustive = q16 <= options.pair_cap;
  }
  r.exhaustive = exhaustive;
  if constexpr (F::is_finite) {
    if (exhaustive) {
      auto x = a.zero();
      do {
        auto y = a.zero();
        do {
          check.pair(x, y);
          check.triple(x, y, a.random(rng));
        } while (next_vector(f, y));
      } while (next_vector(f, x));
      return r;
    }
  }
  const std::uint64_t n = F::is_finite ? options.pair_cap : options.rational_pairs;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto x = a.random(rng);
    const auto y = a.random(rng);
    check.pair(x, y);
    check.triple(x, y, a.random(rng));
  }
  return r;
}

template IdentityReport identity_suite(const OkuboAlgebra<GaloisField>&, const IdentityOptions&);
template IdentityReport identity_suite(const OkuboAlgebra<RationalField>&, const IdentityOptions&);

}  // namespace okubo

#include "doctest.h"

#include <set>

#include "okubo/matrix_model.hpp"
#include "support.hpp"

using namespace okubo;

namespace {

using GF = GaloisField;
using Elem = GF::Elem;

Mat3 diag(Elem a, Elem b, Elem c) {
  Mat3 m{};
  m[0] = a;
  m[4] = b;
  m[8] = c;
  return m;
}

Mat3 random_traceless(const GF& f, std::mt19937_64& rng) {
  Mat3 m;
  for (auto& e : m) e = f.random(rng);
  m[8] = f.sub(f.neg(m[0]), m[4]);
  return m;
}

Elem omega_of(const GF& f) { return *primitive_cube_root(f); }

void check_orthonormal(const HermitianForm& h) {
  const auto& k = *h.kf.ext;
  const auto basis = hermitian_orthonormalize(h);
  REQUIRE(basis.size() == h.dim());
  REQUIRE(hermitian_gram(h, basis) == Matrix<GF>::identity(k, h.dim()));
}

}  // namespace

TEST_CASE("3x3 helpers") {
  const auto f = GF::create(7);
  const Mat3 a = {1, 2, 3, 4, 5, 6, 0, 1, 2};
  CHECK(mat3_trace(*f, a) == 1u);
  CHECK(mat3_det(*f, a) == f->from_int(1 * (5 * 2 - 6) - 2 * (4 * 2 - 0) + 3 * (4 - 0)));
  CHECK(mat3_mul(*f, a, mat3_identity()) == a);
  CHECK(mat3_format(*f, a) == "[1,2,3;4,5,6;0,1,2]");
  CHECK(mat3_add(*f, a, mat3_sub(*f, mat3_zero(), a)) == mat3_zero());
}

TEST_CASE("sr form") {
  const auto f7 = GF::create(7);
  CHECK(sr_form(*f7, mat3_identity()) == 3u);
  const auto f4 = GF::create(4);
  const auto w = omega_of(*f4);
  CHECK(sr_form(*f4, diag(1, w, f4->mul(w, w))) == 0u);

  std::mt19937_64 rng(1);
  for (std::uint64_t q : {4, 7, 13}) {
    const auto f = GF::create(q);
    for (int i = 0; i < 300; ++i) {
      Mat3 a, b;
      for (auto& e : a) e = f->random(rng);
      for (auto& e : b) e = f->random(rng);
      const auto t = [&](const Mat3& m) { return mat3_trace(*f, m); };
      REQUIRE(sr_polar(*f, a, b) == f->sub(f->mul(t(a), t(b)), t(mat3_mul(*f, a, b))));
      REQUIRE(sr_polar(*f, a, b) ==
              f->sub(f->sub(sr_form(*f, mat3_add(*f, a, b)), sr_form(*f, a)), sr_form(*f, b)));
    }
  }
}

TEST_CASE("star product") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {4, 7, 13}) {
    CAPTURE(q);
    const auto f = GF::create(q);
    const auto w = omega_of(*f);
    const int trials = q == 4 ? 10000 : 1000;
    for (int i = 0; i < trials; ++i) {
      const auto x = random_traceless(*f, rng), y = random_traceless(*f, rng);
      const auto xy = star_product(*f, w, x, y);
      REQUIRE(mat3_trace(*f, xy) == 0u);
      REQUIRE(sr_form(*f, xy) == f->mul(sr_form(*f, x), sr_form(*f, y)));
      const auto nx_y = mat3_scale(*f, sr_form(*f, x), y);
      REQUIRE(star_product(*f, w, xy, x) == nx_y);
      REQUIRE(star_product(*f, w, x, star_product(*f, w, y, x)) == nx_y);
    }
    CHECK(star_product(*f, w, mat3_zero(), mat3_zero()) == mat3_zero());
  }
  const auto f7 = GF::create(7);
  CHECK(error_code([&] { star_product(*f7, 3, mat3_zero(), mat3_zero()); }) == ErrorCode::NoOmega);
  CHECK(error_code([&] { star_product(*f7, 1, mat3_zero(), mat3_zero()); }) == ErrorCode::NoOmega);
  CHECK(error_code([&] { star_product(*f7, 2, mat3_identity(), mat3_zero()); }) == ErrorCode::NotTraceZero);
  const auto f3 = GF::create(3);
  CHECK(error_code([&] { star_product(*f3, 1, mat3_zero(), mat3_zero()); }) == ErrorCode::WrongCharacteristic);
}

TEST_CASE("Pauli basis") {
  for (std::uint64_t q : {4, 7, 13, 16}) {
    const auto f = GF::create(q);
    const auto w = omega_of(*f);
    const auto [x, y] = pauli_generators(*f, w);
    CHECK(mat3_mul(*f, y, x) == mat3_scale(*f, w, mat3_mul(*f, x, y)));
    CHECK(mat3_mul(*f, x, mat3_mul(*f, x, x)) == mat3_identity());
    CHECK(mat3_mul(*f, y, mat3_mul(*f, y, y)) == mat3_identity());
    const auto z = pauli_basis(*f, w);
    const auto s = f->inv(f->sub(w, f->mul(w, w)));
    CHECK(z[0] == mat3_scale(*f, s, diag(1, w, f->mul(w, w))));
    for (const auto& m : z) CHECK(mat3_trace(*f, m) == 0u);
  }
}

TEST_CASE("z coordinates") {
  std::mt19937_64 rng(3);
  const auto f = GF::create(7);
  const auto w = omega_of(*f);
  const auto z = pauli_basis(*f, w);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_traceless(*f, rng);
    const auto c = z_coordinates(*f, w, m);
    REQUIRE(c.has_value());
    Mat3 back{};
    for (int p = 0; p < 8; ++p) back = mat3_add(*f, back, mat3_scale(*f, (*c)[p], z[p]));
    REQUIRE(back == m);
  }
  CHECK_FALSE(z_coordinates(*f, w, mat3_identity()).has_value());
}

TEST_CASE("sl(3) realizes the split algebra") {
  for (std::uint64_t q : {4, 7, 13, 16, 19}) {
    CAPTURE(q);
    const auto f = GF::create(q);
    const auto r = sl3_iso_check(f, omega_of(*f));
    CHECK(r.products_checked == 64);
    CHECK(r.pairings_checked == 36);
    CHECK(rank(*f, r.map) == 8);
  }
  CHECK(omega_of(*GF::create(7)) == 2u);
  CHECK(omega_of(*GF::create(13)) == 3u);
  // The other primitive root also works: z_{i,j} just relabels.
  const auto f7 = GF::create(7);
  CHECK_NOTHROW(sl3_iso_check(f7, 4));
}

TEST_CASE("hermitian orthonormalization") {
  const auto f2 = GF::create(2), f4 = GF::create(4);
  const auto kf = QuadraticExtension::make(f2, f4);
  const auto f3 = GF::create(3), f9 = GF::create(9);
  const auto kf9 = QuadraticExtension::make(f3, f9);

  SUBCASE("identity gives the standard basis") {
    const auto h = make_hermitian_form(kf, Matrix<GF>::identity(*f4, 3));
    const auto basis = hermitian_orthonormalize(h);
    const std::set<KVector> got(basis.begin(), basis.end());
    CHECK(got == std::set<KVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  }
  SUBCASE("all nondegenerate diagonal forms") {
    // Diagonal entries of a hermitian form lie in the base field.
    for (const auto& [ext, base] : {std::pair{kf, f2}, std::pair{kf9, f3}}) {
      for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Elem> d(n, 1);
        while (true) {
          Matrix<GF> g(*ext.ext, n, n);
          for (std::size_t i = 0; i < n; ++i) g(i, i) = ext.embed(d[i]);
          check_orthonormal(make_hermitian_form(ext, g));
          std::size_t i = 0;
          while (i < n && d[i] + 1 == base->order()) d[i++] = 1;
          if (i == n) break;
          ++d[i];
        }
      }
    }
  }
  SUBCASE("random dense forms") {
    std::mt19937_64 rng(17);
    const auto kf25 = QuadraticExtension::make(GF::create(5), GF::create(25));
    for (const auto* ext : {&kf, &kf9, &kf25})
      for (int i = 0; i < 100; ++i) check_orthonormal(random_hermitian_form(*ext, 1 + i % 4, rng));
  }
  SUBCASE("rejected forms") {
    Matrix<GF> zero(*f4, 2, 2);
    CHECK(error_code([&] { make_hermitian_form(kf, zero); }) == ErrorCode::DegenerateForm);
    Matrix<GF> skew(*f4, 2, 2);
    skew(0, 1) = 2;  // t, whose conjugate is 1+t
    skew(1, 0) = 2;
    CHECK(error_code([&] { make_hermitian_form(kf, skew); }) == ErrorCode::InvalidArgument);
    const HermitianForm raw{kf, zero};
    CHECK(error_code([&] { hermitian_orthonormalize(raw); }) == ErrorCode::DegenerateForm);
  }
}

TEST_CASE("symbol algebra relations") {
  const auto f7 = GF::create(7);
  const SymbolAlgebra a{f7, 2, 3, 5};
  SymbolAlgebra::Element x{}, y{}, one{};
  x[3] = 1;
  y[1] = 1;
  one[0] = 1;
  const auto xx = a.multiply(x, x), yy = a.multiply(y, y);
  auto scaled = [](SymbolAlgebra::Element e, Elem c) {
    e[0] = c;
    return e;
  };
  CHECK(a.multiply(xx, x) == scaled({}, 3));
  CHECK(a.multiply(yy, y) == scaled({}, 5));
  SymbolAlgebra::Element xy{};
  xy[4] = 2;  // w xy
  CHECK(a.multiply(y, x) == xy);
  CHECK(a.multiply(one, x) == x);
  CHECK(a.trace(one) == 3u);
}

TEST_CASE("symbol algebras reproduce O_{alpha,beta}") {
  SUBCASE("GF(4) over GF(2)") {
    const auto f2 = GF::create(2), f4 = GF::create(4);
    const auto r = symbol_algebra_skew(f2, f4, omega_of(*f4), 1, 1);
    CHECK(r.dimension == 8);
    CHECK(r.z_basis_skew);
    CHECK(r.closed);
    CHECK(r.matches_okubo);
    CHECK(r.failures.empty());
    const OkuboAlgebra<GF> o(f2, 1, 1);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) CHECK(r.products[a][b] == o.multiply(o.basis(a), o.basis(b)));
  }
  SUBCASE("split over GF(7)") {
    const auto f7 = GF::create(7);
    const auto r = symbol_algebra_skew(f7, f7, 2, 1, 3);
    CHECK(r.dimension == 8);
    CHECK(r.matches_okubo);
  }
  SUBCASE("GF(25) over GF(5)") {
    const auto f5 = GF::create(5), f25 = GF::create(25);
    const auto r = symbol_algebra_skew(f5, f25, omega_of(*f25), 2, 3);
    CHECK(r.dimension == 8);
    CHECK(r.z_basis_skew);
    CHECK(r.matches_okubo);
  }
  SUBCASE("bad input") {
    const auto f3 = GF::create(3), f9 = GF::create(9);
    CHECK(error_code([&] { symbol_algebra_skew(f3, f9, 1, 1, 1); }) == ErrorCode::WrongCharacteristic);
    const auto f7 = GF::create(7);
    CHECK(error_code([&] { symbol_algebra_skew(f7, f7, 3, 1, 1); }) == ErrorCode::BadExtension);
    const auto f4 = GF::create(4);
    CHECK(error_code([&] { symbol_algebra_skew(f4, f4, omega_of(*f4), 1, 1); }) == ErrorCode::BadExtension);
  }
}

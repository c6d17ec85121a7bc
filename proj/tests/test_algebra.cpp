#include "doctest.h"

#include <sstream>

#include "okubo/algebra.hpp"
#include "support.hpp"

using namespace okubo;

namespace {

using GF = GaloisField;
using QF = RationalField;

template <ExactField F>
OkuboAlgebra<F> algebra(std::shared_ptr<const F> f, const char* alpha, const char* beta) {
  return OkuboAlgebra<F>(f, f->parse(alpha), f->parse(beta));
}

int pos(int i, int j) { return basis_position(i, j); }

// Split product read straight off the defining rule for O_{1,1}:
// z_{i,j} * z_{i',j'} = 0 if d = 2 or (i+i', j+j') = 0, -z_{i+i',j+j'} if d = 1,
// z_{i+i',j+j'} otherwise, where d = ij' - ji' mod 3.
std::pair<int, int> split_rule(BasisIndex a, BasisIndex b) {
  const int d = ((a.i * b.j - a.j * b.i) % 3 + 3) % 3;
  const int si = (a.i + b.i) % 3, sj = (a.j + b.j) % 3;
  if (d == 2 || (si == 0 && sj == 0)) return {-1, 0};
  return {basis_position(si, sj), d == 1 ? -1 : 1};
}

}  // namespace

TEST_CASE("basis order and labels") {
  CHECK(kBasis.size() == 8);
  CHECK(pos(1, 0) == 0);
  CHECK(pos(2, 1) == 7);
  CHECK(pos(0, 0) == -1);
  CHECK(pos(4, -2) == pos(1, 1));
  CHECK(basis_label({1, 2}) == "z̃_{1,2}");
}

TEST_CASE("golden structure table") {
  const auto golden = load_structure_table(std::string(OKUBO_DATA_DIR) + "/okubo_table.txt");
  const auto table = structure_table();
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CAPTURE(basis_label(kBasis[a]));
      CAPTURE(basis_label(kBasis[b]));
      CHECK(table[a][b] == golden[a][b]);
      CHECK((table[a][b].sign == 0) == !table[a][b].target.has_value());
    }
  // The text form reparses to itself.
  std::istringstream in(format_structure_table(table));
  CHECK(parse_structure_table(in) == table);
}

TEST_CASE("structure table parser rejects bad input") {
  std::istringstream shortfile("(1,0) (1,0) 1 0 0 (2,0)\n");
  CHECK(error_code([&] { parse_structure_table(shortfile); }) == ErrorCode::ParseError);
  std::istringstream inconsistent("(1,0) (1,0) 0 0 0 (2,0)\n");
  CHECK(error_code([&] { parse_structure_table(inconsistent); }) == ErrorCode::ParseError);
  CHECK(error_code([] { load_structure_table("/nonexistent/table.txt"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("structure product examples") {
  const auto t = structure_product({1, 0}, {0, 1});
  CHECK(t.sign == -1);
  CHECK(t.target == BasisIndex{1, 1});
  CHECK(structure_product({0, 1}, {1, 0}).sign == 0);
  const auto s = structure_product({2, 2}, {2, 2});
  CHECK(s.sign == 1);
  CHECK(s.alpha_carry == 1);
  CHECK(s.beta_carry == 1);
  CHECK(s.target == BasisIndex{1, 1});
}

TEST_CASE("split algebra follows the defining rule") {
  for (std::uint64_t q : {2, 4, 7}) {
    const auto f = GF::create(q);
    const OkuboAlgebra<GF> o(f, 1, 1);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const auto [target, sign] = split_rule(kBasis[a], kBasis[b]);
        const auto& e = o.entry(a, b);
        REQUIRE(e.target == target);
        if (target >= 0) REQUIRE(e.coeff == (sign > 0 ? f->one() : f->neg(f->one())));
      }
  }
}

TEST_CASE("multiplication examples") {
  const auto f7 = GF::create(7);
  const auto o = algebra(f7, "3", "1");
  CHECK(o.equal(o.multiply(o.basis(pos(1, 0)), o.basis(pos(1, 0))), o.basis(pos(2, 0))));
  CHECK(o.equal(o.multiply(o.basis(pos(2, 0)), o.basis(pos(2, 0))), o.scale(3, o.basis(pos(1, 0)))));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto y = o.random(rng);
    CHECK(o.is_zero(o.multiply(o.zero(), y)));
    CHECK(o.is_zero(o.multiply(y, o.zero())));
  }
  CHECK(error_code([&] { algebra(f7, "0", "1"); }) == ErrorCode::ZeroElement);
  CHECK(o.name() == "O_{3,1} over GF(7)");
}

TEST_CASE("multiplication is bilinear") {
  const auto q = std::make_shared<const QF>();
  const auto o = algebra(q, "2", "-5/3");
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto x = o.random(rng), y = o.random(rng), z = o.random(rng);
    const auto c = q->random(rng);
    REQUIRE(o.equal(o.multiply(o.add(x, o.scale(c, y)), z), o.add(o.multiply(x, z), o.scale(c, o.multiply(y, z)))));
    REQUIRE(o.equal(o.multiply(z, o.add(x, o.scale(c, y))), o.add(o.multiply(z, x), o.scale(c, o.multiply(z, y)))));
  }
}

TEST_CASE("norm and polar form") {
  const auto f7 = GF::create(7);
  const auto o = algebra(f7, "3", "5");
  const auto& f = *f7;
  for (int a = 0; a < 8; ++a) CHECK(o.norm(o.basis(a)) == 0u);
  const auto x = o.basis(pos(1, 0)), y = o.basis(pos(2, 0));
  // polar from the quadratic form directly
  CHECK(f.sub(f.sub(o.norm(o.add(x, y)), o.norm(x)), o.norm(y)) == 3u);
  CHECK(o.polar(x, y) == 3u);
  CHECK(o.polar(x, o.basis(pos(0, 1))) == 0u);

  // Closed form: n = a c10 c20 + b c01 c02 + ab (c11 c22 + c12 c21).
  std::mt19937_64 rng(2);
  const auto alpha = o.alpha(), beta = o.beta();
  for (int i = 0; i < 500; ++i) {
    const auto v = o.random(rng);
    auto c = [&](int ii, int jj) { return v[pos(ii, jj)]; };
    const auto expected = f.add(
        f.add(f.mul(alpha, f.mul(c(1, 0), c(2, 0))), f.mul(beta, f.mul(c(0, 1), c(0, 2)))),
        f.mul(f.mul(alpha, beta), f.add(f.mul(c(1, 1), c(2, 2)), f.mul(c(1, 2), c(2, 1)))));
    REQUIRE(o.norm(v) == expected);
    const auto w = o.random(rng);
    REQUIRE(o.polar(v, w) == f.sub(f.sub(o.norm(o.add(v, w)), o.norm(v)), o.norm(w)));
  }
}

TEST_CASE("polar Gram matrix is nondegenerate") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
    const auto f = GF::create(q);
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b) {
        const OkuboAlgebra<GF> o(f, a, b);
        REQUIRE_FALSE(f->is_zero(determinant(*f, o.gram())));
      }
  }
  const auto q = std::make_shared<const QF>();
  for (const char* ab : {"1", "2", "-3/7", "12"}) {
    const auto o = algebra(q, ab, "3");
    CHECK_FALSE(q->is_zero(determinant(*q, o.gram())));
  }
}

TEST_CASE("multiplication matrices") {
  const auto f = GF::create(5);
  const auto o = algebra(f, "2", "3");
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto x = o.random(rng), y = o.random(rng);
    const auto l = o.left_multiplication(x), r = o.right_multiplication(y);
    const auto xy = o.multiply(x, y);
    for (int a = 0; a < 8; ++a) {
      GaloisField::Elem lx = 0, ry = 0;
      for (int b = 0; b < 8; ++b) {
        lx = f->add(lx, f->mul(l(a, b), y[b]));
        ry = f->add(ry, f->mul(r(a, b), x[b]));
      }
      REQUIRE(lx == xy[a]);
      REQUIRE(ry == xy[a]);
    }
  }
}

TEST_CASE("cube scalings give isomorphic algebras") {
  // With alpha = a^3, beta = b^3 we have z~_{i,j} = a^i b^j z_{i,j} (0 <= i,j <= 2), so
  // z_{i,j} -> a^-i b^-j z~_{i,j} carries O_{1,1} onto O_{alpha,beta}.
  auto run = [](auto f, auto a, auto b) {
    using F = typename std::decay_t<decltype(*f)>;
    const OkuboAlgebra<F> split(f, f->one(), f->one());
    const OkuboAlgebra<F> o(f, f->pow(a, 3), f->pow(b, 3));
    auto image = [&](const typename OkuboAlgebra<F>::Vector& v) {
      auto out = v;
      const auto ai = f->inv(a), bi = f->inv(b);
      for (int k = 0; k < 8; ++k) out[k] = f->mul(v[k], f->mul(f->pow(ai, kBasis[k].i), f->pow(bi, kBasis[k].j)));
      return out;
    };
    for (int p = 0; p < 8; ++p)
      for (int q = 0; q < 8; ++q) {
        const auto x = split.basis(p), y = split.basis(q);
        REQUIRE(o.equal(image(split.multiply(x, y)), o.multiply(image(x), image(y))));
        REQUIRE(f->eq(o.polar(image(x), image(y)), split.polar(x, y)));
      }
  };
  run(GF::create(7), 3u, 5u);
  run(GF::create(13), 2u, 6u);
  const auto q = std::make_shared<const QF>();
  run(q, q->parse("2"), q->parse("-1/3"));
}

TEST_CASE("product of orthogonal homogeneous elements") {
  // For homogeneous x, y of independent degrees with x*y = 0:
  // n(y*x, (y*x)*(y*x)) = -n(y, y*y) n(x, x*x).
  auto run = [](const auto& o) {
    const auto& f = o.field();
    int checked = 0;
    for (int p = 0; p < 8; ++p)
      for (int q = 0; q < 8; ++q) {
        const auto x = o.basis(p), y = o.basis(q);
        const bool dependent = p == q || basis_position(2 * kBasis[p].i, 2 * kBasis[p].j) == q;
        if (dependent || !o.is_zero(o.multiply(x, y))) continue;
        const auto yx = o.multiply(y, x);
        const auto lhs = o.polar(yx, o.multiply(yx, yx));
        const auto rhs = f.neg(f.mul(o.polar(y, o.multiply(y, y)), o.polar(x, o.multiply(x, x))));
        REQUIRE(f.eq(lhs, rhs));
        ++checked;
      }
    CHECK(checked > 0);
  };
  run(algebra(GF::create(7), "1", "3"));
  run(algebra(GF::create(4), "t", "1+t"));
  run(algebra(std::make_shared<const QF>(), "2", "3"));
}

TEST_CASE("idempotents") {
  const auto f2 = GF::create(2);
  const OkuboAlgebra<GF> o2(f2, 1, 1);
  CHECK_FALSE(find_idempotents(o2).empty());

  const auto f3 = GF::create(3);
  const OkuboAlgebra<GF> o3(f3, 1, 1);
  const auto idems = find_idempotents(o3);
  // brute force over all 3^8 vectors
  std::vector<OkuboAlgebra<GF>::Vector> brute;
  auto v = o3.zero();
  while (next_vector(*f3, v))
    if (o3.equal(o3.multiply(v, v), v)) brute.push_back(v);
  CHECK(idems == brute);
  CHECK_FALSE(idems.empty());

  std::size_t singular = 0, quaternionic = 0;
  for (const auto& e : idems) {
    const auto info = classify_idempotent(o3, e);
    CHECK((info.norm_rank == 1 || info.norm_rank == 2 || info.norm_rank == 4));
    if (info.cls == IdempotentClass::Singular) ++singular;
    if (info.cls == IdempotentClass::Quaternionic) ++quaternionic;
  }
  CHECK(singular > 0);
  CHECK(quaternionic > 0);

  CHECK(error_code([&] { classify_idempotent(o3, o3.basis(0)); }) == ErrorCode::NotIdempotent);
  CHECK(error_code([&] { classify_idempotent(o2, find_idempotents(o2).front()); }) ==
        ErrorCode::WrongCharacteristic);
  CHECK(error_code([] { find_idempotents(OkuboAlgebra<GF>(GF::create(11), 1, 1)); }) == ErrorCode::FieldTooLarge);
}

TEST_CASE("vector odometer") {
  const auto f = GF::create(2);
  auto v = std::array<GF::Elem, 8>{};
  std::size_t count = 1;
  while (next_vector(*f, v)) ++count;
  CHECK(count == 256);
  CHECK(v == std::array<GF::Elem, 8>{});
}

#include "doctest.h"

#include "okubo/identities.hpp"

using namespace okubo;

TEST_CASE("exhaustive over GF(2)") {
  const OkuboAlgebra<GaloisField> o(GaloisField::create(2), 1, 1);
  const auto r = identity_suite(o);
  CHECK(r.exhaustive);
  CHECK(r.pairs == 65536);
  CHECK(r.triples == 65536 + 512);
  CHECK(r.passed());
  CHECK(r.examples.empty());
}

TEST_CASE("sampling plan") {
  const OkuboAlgebra<GaloisField> o3(GaloisField::create(3), 1, 1);
  IdentityOptions small;
  small.pair_cap = 2000;
  const auto r3 = identity_suite(o3, small);
  CHECK_FALSE(r3.exhaustive);
  CHECK(r3.pairs == 2000);
  CHECK(r3.passed());

  const auto q = std::make_shared<const RationalField>();
  IdentityOptions opt;
  opt.rational_pairs = 500;
  const OkuboAlgebra<RationalField> oq(q, q->parse("2"), q->parse("3"));
  const auto rq = identity_suite(oq, opt);
  CHECK_FALSE(rq.exhaustive);
  CHECK(rq.pairs == 500);
  CHECK(rq.passed());
}

TEST_CASE("every structure constant pair over small fields") {
  IdentityOptions opt;
  opt.pair_cap = 300;
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
    const auto f = GaloisField::create(q);
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b) {
        CAPTURE(q);
        CAPTURE(a);
        CAPTURE(b);
        const auto r = identity_suite(OkuboAlgebra<GaloisField>(f, a, b), opt);
        REQUIRE(r.passed());
      }
  }
}

TEST_CASE("rational structure constants") {
  const auto q = std::make_shared<const RationalField>();
  IdentityOptions opt;
  opt.rational_pairs = 200;
  for (const char* a : {"1", "2", "-1/2", "7/9"})
    for (const char* b : {"1", "3", "-4", "5/6"}) {
      const OkuboAlgebra<RationalField> o(q, q->parse(a), q->parse(b));
      REQUIRE(identity_suite(o, opt).passed());
    }
}

TEST_CASE("seeded runs are reproducible") {
  const OkuboAlgebra<GaloisField> o(GaloisField::create(7), 1, 3);
  IdentityOptions opt;
  opt.pair_cap = 100;
  opt.seed = 42;
  const auto a = identity_suite(o, opt);
  const auto b = identity_suite(o, opt);
  CHECK(a.pairs == b.pairs);
  CHECK(a.triples == b.triples);
}

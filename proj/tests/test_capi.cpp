#include "doctest.h"

#include <memory>
#include <string>

#include "json.hpp"
#include "okubo.h"

namespace {

struct Deleter {
  void operator()(okb_field* p) const { okb_field_free(p); }
  void operator()(okb_scalar* p) const { okb_scalar_free(p); }
  void operator()(okb_algebra* p) const { okb_algebra_free(p); }
  void operator()(okb_vector* p) const { okb_vector_free(p); }
  void operator()(okb_report* p) const { okb_report_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Deleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  okb_string_free(s);
  return out;
}

Owned<okb_field> field(const char* spec) {
  okb_field* f = nullptr;
  REQUIRE(okb_field_new(spec, &f) == OKB_OK);
  return Owned<okb_field>(f);
}

Owned<okb_algebra> algebra(const okb_field* f, const char* a, const char* b) {
  okb_algebra* out = nullptr;
  REQUIRE(okb_algebra_new(f, a, b, &out) == OKB_OK);
  return Owned<okb_algebra>(out);
}

Owned<okb_vector> basis(const okb_algebra* a, int i) {
  okb_vector* v = nullptr;
  REQUIRE(okb_vector_basis(a, i, &v) == OKB_OK);
  return Owned<okb_vector>(v);
}

Owned<okb_vector> product(const okb_vector* x, const okb_vector* y) {
  okb_vector* v = nullptr;
  REQUIRE(okb_multiply(x, y, &v) == OKB_OK);
  return Owned<okb_vector>(v);
}

std::string format(const okb_vector* v) {
  char* s = nullptr;
  REQUIRE(okb_vector_format(v, &s) == OKB_OK);
  return take(s);
}

std::string scalar_text(const okb_scalar* s) {
  char* out = nullptr;
  REQUIRE(okb_scalar_to_string(s, &out) == OKB_OK);
  return take(out);
}

}  // namespace

TEST_CASE("fields") {
  const auto f = field("GF(9)");
  CHECK(okb_field_order(f.get()) == 9);
  CHECK(okb_field_characteristic(f.get()) == 3);
  char* name = nullptr;
  REQUIRE(okb_field_name(f.get(), &name) == OKB_OK);
  CHECK(take(name) == "GF(9)");
  const auto q = field("Q");
  CHECK(okb_field_order(q.get()) == 0);
  CHECK(okb_field_characteristic(q.get()) == 0);

  okb_field* bad = nullptr;
  CHECK(okb_field_new("6", &bad) == OKB_NON_PRIME_CHARACTERISTIC);
  CHECK(bad == nullptr);
  CHECK(std::string(okb_last_error()).find("6") != std::string::npos);
  CHECK(okb_field_new(nullptr, &bad) == OKB_INVALID_ARGUMENT);
  CHECK(std::string(okb_status_string(OKB_WRONG_RANK)) == "WrongRank");
  CHECK(std::string(okb_status_string(OKB_OK)) == "Ok");
}

TEST_CASE("scalars") {
  const auto f = field("7");
  okb_scalar *a = nullptr, *b = nullptr, *c = nullptr;
  REQUIRE(okb_scalar_parse(f.get(), "3", &a) == OKB_OK);
  REQUIRE(okb_scalar_parse(f.get(), "5", &b) == OKB_OK);
  Owned<okb_scalar> oa(a), ob(b);
  REQUIRE(okb_scalar_arith(OKB_MUL, a, b, &c) == OKB_OK);
  Owned<okb_scalar> oc(c);
  CHECK(scalar_text(c) == "1");
  okb_scalar* inv = nullptr;
  REQUIRE(okb_scalar_arith(OKB_INV, a, nullptr, &inv) == OKB_OK);
  Owned<okb_scalar> oinv(inv);
  int eq = 0;
  REQUIRE(okb_scalar_equal(inv, b, &eq) == OKB_OK);
  CHECK(eq == 1);

  okb_scalar* zero = nullptr;
  REQUIRE(okb_scalar_parse(f.get(), "0", &zero) == OKB_OK);
  Owned<okb_scalar> ozero(zero);
  okb_scalar* out = nullptr;
  CHECK(okb_scalar_arith(OKB_DIV, a, zero, &out) == OKB_DIVISION_BY_ZERO);
  CHECK(out == nullptr);

  const auto q = field("Q");
  okb_scalar* r = nullptr;
  REQUIRE(okb_scalar_parse(q.get(), "-4/6", &r) == OKB_OK);
  Owned<okb_scalar> orr(r);
  CHECK(scalar_text(r) == "-2/3");
  CHECK(okb_scalar_arith(OKB_ADD, a, r, &out) == OKB_MIXED_FIELDS);
}

TEST_CASE("algebra products") {
  const auto f = field("7");
  const auto a = algebra(f.get(), "3", "1");
  char* name = nullptr;
  REQUIRE(okb_algebra_name(a.get(), &name) == OKB_OK);
  CHECK(take(name) == "O_{3,1} over GF(7)");

  const auto z20 = basis(a.get(), 1);
  const auto sq = product(z20.get(), z20.get());
  CHECK(format(sq.get()) == "(3)·z̃_{1,0}");

  okb_vector* v = nullptr;
  REQUIRE(okb_vector_parse(a.get(), "[1, 0, 0, 1, 2, 0, 0, 0]", &v) == OKB_OK);
  Owned<okb_vector> ov(v);
  char* text = nullptr;
  REQUIRE(okb_vector_to_string(v, &text) == OKB_OK);
  CHECK(take(text) == "[1,0,0,1,2,0,0,0]");

  // n(x*y) = n(x)n(y)
  const auto w = basis(a.get(), 6);
  const auto vw = product(v, w.get());
  okb_scalar *nv = nullptr, *nw = nullptr, *nvw = nullptr, *prod = nullptr;
  REQUIRE(okb_norm(v, &nv) == OKB_OK);
  REQUIRE(okb_norm(w.get(), &nw) == OKB_OK);
  REQUIRE(okb_norm(vw.get(), &nvw) == OKB_OK);
  Owned<okb_scalar> o1(nv), o2(nw), o3(nvw);
  REQUIRE(okb_scalar_arith(OKB_MUL, nv, nw, &prod) == OKB_OK);
  Owned<okb_scalar> o4(prod);
  int eq = 0;
  REQUIRE(okb_scalar_equal(prod, nvw, &eq) == OKB_OK);
  CHECK(eq == 1);

  okb_scalar* pol = nullptr;
  REQUIRE(okb_polar(basis(a.get(), 0).get(), basis(a.get(), 1).get(), &pol) == OKB_OK);
  Owned<okb_scalar> opol(pol);
  CHECK(scalar_text(pol) == "3");

  okb_vector* bad = nullptr;
  CHECK(okb_vector_basis(a.get(), 8, &bad) == OKB_INVALID_ARGUMENT);
  CHECK(okb_vector_parse(a.get(), "1 2 3", &bad) == OKB_PARSE_ERROR);
  const auto other = algebra(f.get(), "1", "1");
  CHECK(okb_multiply(v, basis(other.get(), 0).get(), &bad) == OKB_MIXED_FIELDS);
  okb_algebra* zero = nullptr;
  CHECK(okb_algebra_new(f.get(), "0", "1", &zero) == OKB_ZERO_ELEMENT);
}

TEST_CASE("reports") {
  okb_request req{};
  req.command = "weyl";
  req.field = "7";
  req.beta = "3";
  req.seed = 1;
  okb_report* r = nullptr;
  REQUIRE(okb_run(&req, &r) == OKB_OK);
  Owned<okb_report> owned(r);
  CHECK(okb_report_passed(r) == 1);
  const auto j = nlohmann::json::parse(okb_report_json(r));
  CHECK(j["schema"] == 1);
  CHECK(j["formula"]["order"] == 3);
  CHECK(std::string(okb_report_failures(r)) == "[]");
  CHECK(std::string(okb_report_text(r)).find("result: PASS") != std::string::npos);

  okb_request bad{};
  bad.command = "idem";
  bad.field = "7";
  okb_report* none = nullptr;
  CHECK(okb_run(&bad, &none) == OKB_WRONG_CHARACTERISTIC);
  CHECK(none == nullptr);
  bad.command = nullptr;
  CHECK(okb_run(&bad, &none) == OKB_INVALID_ARGUMENT);
}

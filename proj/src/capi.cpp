#include "okubo.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <variant>

#include "okubo/algebra.hpp"
#include "okubo/report.hpp"

using namespace okubo;

struct okb_field {
  Field field;
};

struct okb_scalar {
  FieldElement value;
};

struct okb_algebra {
  using Impl = std::variant<std::shared_ptr<const OkuboAlgebra<GaloisField>>,
                            std::shared_ptr<const OkuboAlgebra<RationalField>>>;
  Field field;
  Impl impl;
};

struct okb_vector {
  using Value = std::variant<OkuboAlgebra<GaloisField>::Vector, OkuboAlgebra<RationalField>::Vector>;
  okb_algebra algebra;  // copies of shared handles, so vectors outlive the algebra handle
  Value value;
};

struct okb_report {
  bool passed;
  std::string text;
  std::string json;
  std::string failures;
};

namespace {

thread_local std::string last_error;

okb_status to_status(ErrorCode c) { return static_cast<okb_status>(static_cast<int>(c) + 1); }

template <class Fn>
okb_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return OKB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return OKB_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return OKB_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
decltype(auto) visit_vectors(const okb_vector* x, const okb_vector* y, Fn&& fn) {
  if (x->algebra.impl.index() != y->algebra.impl.index() || x->value.index() != y->value.index())
    throw Error(ErrorCode::MixedFields, "vectors belong to different algebras");
  return std::visit(
      [&](const auto& alg) {
        using V = typename std::decay_t<decltype(*alg)>::Vector;
        const auto* other = std::get_if<std::decay_t<decltype(alg)>>(&y->algebra.impl);
        if (!other || (*other)->name() != alg->name() || !x->algebra.field.same_as(y->algebra.field))
          throw Error(ErrorCode::MixedFields, "vectors belong to different algebras");
        return fn(*alg, std::get<V>(x->value), std::get<V>(y->value));
      },
      x->algebra.impl);
}

template <class F>
FieldElement wrap(const Field& field, const typename F::Elem& e) {
  return FieldElement(field, FieldElement::Value(e));
}

}  // namespace

extern "C" {

const char* okb_status_string(okb_status status) {
  if (status == OKB_OK) return "Ok";
  if (status == OKB_INTERNAL_ERROR) return "InternalError";
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(ErrorCode::WrongRank)) return "Unknown";
  return error_name(static_cast<ErrorCode>(code)).data();
}

const char* okb_last_error(void) { return last_error.c_str(); }

void okb_string_free(char* s) { std::free(s); }

okb_status okb_field_new(const char* spec, okb_field** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new okb_field{Field::parse(spec)};
  });
}

void okb_field_free(okb_field* f) { delete f; }

okb_status okb_field_name(const okb_field* f, char** out) {
  return guarded([&] {
    require(f, "field");
    require(out, "out");
    *out = dup(f->field.descriptor().name());
  });
}

uint64_t okb_field_order(const okb_field* f) { return f ? f->field.descriptor().order() : 0; }

uint32_t okb_field_characteristic(const okb_field* f) { return f ? f->field.descriptor().p : 0; }

okb_status okb_scalar_parse(const okb_field* f, const char* text, okb_scalar** out) {
  return guarded([&] {
    require(f, "field");
    require(text, "text");
    require(out, "out");
    *out = new okb_scalar{FieldElement::parse(f->field, text)};
  });
}

void okb_scalar_free(okb_scalar* s) { delete s; }

okb_status okb_scalar_to_string(const okb_scalar* s, char** out) {
  return guarded([&] {
    require(s, "scalar");
    require(out, "out");
    *out = dup(s->value.to_string());
  });
}

okb_status okb_scalar_arith(okb_op op, const okb_scalar* a, const okb_scalar* b, okb_scalar** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    if (op < OKB_ADD || op > OKB_INV) throw Error(ErrorCode::InvalidArgument, "unknown operation");
    const auto fop = static_cast<FieldOp>(op);
    if (op == OKB_NEG || op == OKB_INV) {
      *out = new okb_scalar{field_arith(fop, a->value)};
    } else {
      require(b, "b");
      *out = new okb_scalar{field_arith(fop, a->value, b->value)};
    }
  });
}

okb_status okb_scalar_equal(const okb_scalar* a, const okb_scalar* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = field_equal(a->value, b->value) ? 1 : 0;
  });
}

okb_status okb_algebra_new(const okb_field* f, const char* alpha, const char* beta, okb_algebra** out) {
  return guarded([&] {
    require(f, "field");
    require(alpha, "alpha");
    require(beta, "beta");
    require(out, "out");
    auto impl = std::visit(
        [&](const auto& fp) -> okb_algebra::Impl {
          using F = std::remove_const_t<typename std::decay_t<decltype(fp)>::element_type>;
          return std::make_shared<const OkuboAlgebra<F>>(fp, fp->parse(alpha), fp->parse(beta));
        },
        f->field.impl());
    *out = new okb_algebra{f->field, std::move(impl)};
  });
}

void okb_algebra_free(okb_algebra* a) { delete a; }

okb_status okb_algebra_name(const okb_algebra* a, char** out) {
  return guarded([&] {
    require(a, "algebra");
    require(out, "out");
    *out = dup(std::visit([](const auto& alg) { return alg->name(); }, a->impl));
  });
}

okb_status okb_vector_basis(const okb_algebra* a, int index, okb_vector** out) {
  return guarded([&] {
    require(a, "algebra");
    require(out, "out");
    if (index < 0 || index > 7) throw Error(ErrorCode::InvalidArgument, "basis index must be in 0..7");
    auto value = std::visit([&](const auto& alg) -> okb_vector::Value { return alg->basis(index); }, a->impl);
    *out = new okb_vector{*a, std::move(value)};
  });
}

okb_status okb_vector_parse(const okb_algebra* a, const char* text, okb_vector** out) {
  return guarded([&] {
    require(a, "algebra");
    require(text, "text");
    require(out, "out");
    std::string s(text);
    for (char& c : s)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(s);
    std::vector<std::string> parts;
    for (std::string t; in >> t;) parts.push_back(t);
    if (parts.size() != 8) throw Error(ErrorCode::ParseError, "expected 8 coordinates, got " + std::to_string(parts.size()));
    auto value = std::visit(
        [&](const auto& alg) -> okb_vector::Value {
          auto v = alg->zero();
          for (int i = 0; i < 8; ++i) v[i] = alg->field().parse(parts[i]);
          return v;
        },
        a->impl);
    *out = new okb_vector{*a, std::move(value)};
  });
}

void okb_vector_free(okb_vector* v) { delete v; }

okb_status okb_vector_to_string(const okb_vector* v, char** out) {
  return guarded([&] {
    require(v, "vector");
    require(out, "out");
    std::string s = "[";
    std::visit(
        [&](const auto& alg) {
          using V = typename std::decay_t<decltype(*alg)>::Vector;
          const auto& x = std::get<V>(v->value);
          for (int i = 0; i < 8; ++i) s += (i ? "," : "") + alg->field().format(x[i]);
        },
        v->algebra.impl);
    *out = dup(s + "]");
  });
}

okb_status okb_vector_format(const okb_vector* v, char** out) {
  return guarded([&] {
    require(v, "vector");
    require(out, "out");
    *out = dup(std::visit(
        [&](const auto& alg) {
          using V = typename std::decay_t<decltype(*alg)>::Vector;
          return alg->format(std::get<V>(v->value));
        },
        v->algebra.impl));
  });
}

okb_status okb_multiply(const okb_vector* x, const okb_vector* y, okb_vector** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    auto value = visit_vectors(x, y, [](const auto& alg, const auto& a, const auto& b) -> okb_vector::Value {
      return alg.multiply(a, b);
    });
    *out = new okb_vector{x->algebra, std::move(value)};
  });
}

okb_status okb_norm(const okb_vector* x, okb_scalar** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = new okb_scalar{std::visit(
        [&](const auto& alg) {
          using A = std::decay_t<decltype(*alg)>;
          return wrap<typename A::FieldType>(x->algebra.field, alg->norm(std::get<typename A::Vector>(x->value)));
        },
        x->algebra.impl)};
  });
}

okb_status okb_polar(const okb_vector* x, const okb_vector* y, okb_scalar** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = new okb_scalar{visit_vectors(x, y, [&](const auto& alg, const auto& a, const auto& b) {
      using A = std::decay_t<decltype(alg)>;
      return wrap<typename A::FieldType>(x->algebra.field, alg.polar(a, b));
    })};
  });
}

okb_status okb_run(const okb_request* request, okb_report** out) {
  return guarded([&] {
    require(request, "request");
    require(out, "out");
    require(request->command, "command");
    RunRequest req;
    req.command = request->command;
    if (request->field) req.field = request->field;
    if (request->alpha) req.alpha = request->alpha;
    if (request->beta) req.beta = request->beta;
    if (request->target_alpha) req.target_alpha = request->target_alpha;
    if (request->target_beta) req.target_beta = request->target_beta;
    req.seed = request->seed;
    const Report r = run_report(req);
    *out = new okb_report{r.passed, r.text, r.json.dump(2), r.failures.dump()};
  });
}

void okb_report_free(okb_report* r) { delete r; }

int okb_report_passed(const okb_report* r) { return r && r->passed ? 1 : 0; }

const char* okb_report_text(const okb_report* r) { return r ? r->text.c_str() : ""; }

const char* okb_report_json(const okb_report* r) { return r ? r->json.c_str() : ""; }

const char* okb_report_failures(const okb_report* r) { return r ? r->failures.c_str() : ""; }

}  // extern "C"

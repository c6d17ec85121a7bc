// Acceptance suite: one line per criterion, exact comparisons, wall-clock
// limits where the criterion has one.  Exit status 0 iff every line passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "okubo/autgroup.hpp"
#include "okubo/grading.hpp"
#include "okubo/identities.hpp"
#include "okubo/matrix_model.hpp"

using namespace okubo;

namespace {

using GF = GaloisField;
using QF = RationalField;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

std::shared_ptr<const QF> rationals() { return std::make_shared<const QF>(); }

OkuboAlgebra<GF> gf(std::uint64_t q, GF::Elem a = 1, GF::Elem b = 1) { return {GF::create(q), a, b}; }

OkuboAlgebra<QF> rat(const char* a, const char* b) {
  const auto q = rationals();
  return {q, q->parse(a), q->parse(b)};
}

bool bijective(std::vector<int> images) {
  std::sort(images.begin(), images.end());
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i)) return false;
  return true;
}

std::string num(std::size_t n) { return std::to_string(n); }

// ---------------------------------------------------------------------------

Outcome golden_table() {
  Outcome o;
  const auto golden = load_structure_table(std::string(OKUBO_DATA_DIR) + "/okubo_table.txt");
  const auto table = structure_table();
  int mismatches = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (!(table[a][b] == golden[a][b])) ++mismatches;
  o.expect(mismatches == 0, std::to_string(mismatches) + " symbolic entries differ");
  // Over Q with alpha = 2, beta = 3 every coefficient +-2^i 3^j is distinct,
  // so the numeric table carries the symbolic one.
  const auto alg = rat("2", "3");
  const auto& q = alg.field();
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& g = golden[a][b];
      const auto& e = alg.entry(a, b);
      if (g.sign == 0) {
        o.expect(e.target < 0, "nonzero product where the table has 0");
        continue;
      }
      Rational c(g.sign);
      for (int k = 0; k < g.alpha_carry; ++k) c = q.mul(c, alg.alpha());
      for (int k = 0; k < g.beta_carry; ++k) c = q.mul(c, alg.beta());
      const auto pos = std::find(kBasis.begin(), kBasis.end(), *g.target) - kBasis.begin();
      o.expect(e.target == pos && e.coeff == c, "numeric entry differs");
    }
  o.detail = o.ok ? "64/64 products" : o.detail;
  return o;
}

Outcome identity_suite_all() {
  Outcome o;
  std::ostringstream summary;
  auto run = [&](const auto& alg, const IdentityOptions& opt, const std::string& label) {
    const auto r = identity_suite(alg, opt);
    const auto failures = r.multiplicativity_failures + r.left_composition_failures +
                          r.right_composition_failures + r.associativity_failures;
    o.expect(r.passed(), label + ": " + std::to_string(failures) + " failures");
    summary << label << " " << r.pairs << (r.exhaustive ? " (all)" : "") << ", ";
  };
  IdentityOptions big;
  big.pair_cap = 100000;
  IdentityOptions small;
  small.pair_cap = 10000;
  small.rational_pairs = 10000;
  run(gf(2), big, "GF(2)");
  run(gf(3), big, "GF(3)");
  run(gf(4), small, "GF(4)");
  run(gf(7), small, "GF(7)");
  run(rat("1", "1"), small, "Q");
  if (o.ok) {
    o.detail = summary.str();
    o.detail.resize(o.detail.size() - 2);
    o.detail += " pairs";
  }
  return o;
}

Outcome phi_homomorphism() {
  Outcome o;
  const auto f7 = GF::create(7);
  for (const auto& [a, b] : {std::pair{1u, 1u}, std::pair{1u, 3u}, std::pair{3u, 3u}}) {
    const auto failures = phi_homomorphism_failures(phi_gamma(OkuboAlgebra<GF>(f7, a, b)));
    o.expect(failures.empty(), "GF(7) (" + num(a) + "," + num(b) + "): " + num(failures.size()) + " failing pairs");
  }
  const auto failures = phi_homomorphism_failures(phi_gamma(rat("2", "3")));
  o.expect(failures.empty(), "Q (2,3): " + num(failures.size()) + " failing pairs");
  if (o.ok) o.detail = "4 x 81 pairs";
  return o;
}

template <class A>
void weyl_case(Outcome& o, const A& alg, std::size_t expected, std::ostringstream& summary) {
  const auto formula = weyl_group_via_formula(alg);
  const auto aut = grading_automorphisms(alg);
  const auto stab = stabilizer_subgroup(alg, aut.group);
  const auto w = weyl_from_aut(alg.field(), aut.group, stab, formula);
  o.expect(formula.order() == expected, alg.name() + ": formula order " + num(formula.order()));
  o.expect(w.quotient.order() == expected, alg.name() + ": quotient order " + num(w.quotient.order()));
  o.expect(w.matches_formula, alg.name() + ": computations disagree");
  summary << formula.order() << " ";
}

Outcome weyl_orders() {
  Outcome o;
  std::ostringstream s;
  for (std::uint64_t q : {2, 3, 4, 7}) weyl_case(o, gf(q), 24, s);
  weyl_case(o, gf(7, 1, 3), 3, s);
  weyl_case(o, rat("2", "3"), 1, s);
  if (o.ok) o.detail = "orders " + s.str() + "(both methods)";
  return o;
}

Outcome aut_orders() {
  Outcome o;
  std::ostringstream s;
  for (const auto& [q, expected] : {std::pair{4u, 216u}, std::pair{2u, 24u}, std::pair{3u, 24u}}) {
    const auto alg = gf(q);
    const auto aut = grading_automorphisms(alg);
    const auto& g = aut.group;
    const auto stab = stabilizer_subgroup(alg, g);
    o.expect(g.order() == expected, "GF(" + num(q) + "): |Aut| = " + num(g.order()));
    o.expect(stab.elements.size() == stab.mu3 * stab.mu3, "GF(" + num(q) + "): |Stab| != |mu_3|^2");
    ElementSet image;
    for (const auto& m : splitting_section(alg).images) {
      const auto idx = g.find(m);
      o.expect(idx.has_value(), "section leaves Aut(Gamma)");
      if (idx) image.push_back(*idx);
    }
    std::sort(image.begin(), image.end());
    o.expect(semidirect_check(g.table(), stab.elements, image).holds, "GF(" + num(q) + "): section does not split");
    s << g.order() << " = " << stab.elements.size() << "x" << image.size() << ", ";
  }
  if (o.ok) {
    o.detail = s.str();
    o.detail.resize(o.detail.size() - 2);
  }
  return o;
}

Outcome unitary_orbit() {
  Outcome o;
  const auto g = unitary_f4();
  const auto orbit = orbit_of_pauli_x(g);
  o.expect(g.u.order() == 648, "|U| = " + num(g.u.order()));
  o.expect(g.pu.order() == 216, "|PU| = " + num(g.pu.order()));
  o.expect(g.psu.size() == 72, "|PSU| = " + num(g.psu.size()));
  o.expect(orbit.orbit.size() == 24, "orbit size " + num(orbit.orbit.size()));
  o.expect(orbit.orbit == orbit.expected, "orbit differs from the union of F4^x z_{i,j}");
  o.expect(orbit.stabilizer.size() == 27 && orbit.stabilizer_diagonal, "stabilizer is not the 27 diagonal unitaries");
  if (o.ok) o.detail = "|U|=648 |PU|=216 |PSU|=72 orbit=24 stabilizer=27";
  return o;
}

Outcome conjugation_image() {
  Outcome o;
  const auto g = unitary_f4();
  const OkuboAlgebra<GF> split(g.f4, 1, 1);
  const auto aut = grading_automorphisms(split);
  const auto conj = conj_homomorphism(g, split, aut.group);
  // Set equality checked here directly on the matrices.
  std::set<MapKey<GF>> image, graded;
  const auto& f = *g.f4;
  bool all_known = true;
  for (int idx : conj.pu_to_aut) {
    if (idx < 0) {
      all_known = false;
      continue;
    }
    image.insert(map_key(f, aut.group.element(idx)));
  }
  for (const auto& m : aut.group.elements()) graded.insert(map_key(f, m));
  o.expect(all_known && conj.all_automorphisms, "some conjugation is not a grading automorphism");
  o.expect(conj.homomorphic, "conjugation is not a homomorphism");
  o.expect(image == graded, "image has " + num(image.size()) + " maps, Aut(Gamma) has " + num(graded.size()));
  if (o.ok) o.detail = "image = Aut(Gamma_{1,1}), 216 maps";
  return o;
}

Outcome pu_psu_structure() {
  Outcome o;
  const auto g = unitary_f4();
  const auto affine = affine_sl23();
  const auto iso = small_group_isomorphic(g.pu.table(), affine);
  o.expect(iso.has_value(), "PU(3,4) not isomorphic to (Z/3)^2 x| SL(2,3)");
  if (iso) {
    o.expect(bijective(*iso) && is_homomorphism(g.pu.table(), affine, *iso), "returned map is not an isomorphism");
  }
  const OkuboAlgebra<GF> split(g.f4, 1, 1);
  const auto aut = grading_automorphisms(split);
  const auto conj = conj_homomorphism(g, split, aut.group);
  const auto psu = psu_semidirect(g, conj, aut.group);
  o.expect(psu.q8_in_psu && psu.q8.size() == 8, "Q8 image not in PSU");
  o.expect(psu.pauli.size() == 9, "Pauli image has " + num(psu.pauli.size()) + " elements");
  o.expect(psu.result.holds, "PSU semidirect check: " + psu.result.reason);
  if (o.ok) o.detail = "verified isomorphism; PSU = 9 x| 8";
  return o;
}

Outcome full_aut() {
  Outcome o;
  const auto full = full_aut_f2();
  const auto g = unitary_f4();
  o.expect(full.group.order() == 216, "|Aut(O)| = " + num(full.group.order()));
  const auto iso = small_group_isomorphic(full.group.table(), g.pu.table());
  o.expect(iso.has_value() && bijective(*iso) && is_homomorphism(full.group.table(), g.pu.table(), *iso),
           "Aut(O) not isomorphic to PU(3,4)");
  if (o.ok) o.detail = "order 216, isomorphic to PU(3,4)";
  return o;
}

Outcome isomorphisms() {
  Outcome o;
  for (const auto& [q, b] : {std::pair{7u, 3u}, std::pair{3u, 2u}}) {
    const auto src = gf(q, 1, b), dst = gf(q);
    const auto r = find_isomorphism(src, dst);
    o.expect(r.map.has_value(), src.name() + ": no isomorphism");
    if (r.map) {
      const auto why = isomorphism_failure(src, dst, *r.map);
      o.expect(why.empty(), src.name() + ": " + why);
      o.expect(rank(src.field(), *r.map) == 8, src.name() + ": map is singular");
    }
  }
  if (o.ok) o.detail = "O_{1,3}/GF(7) and O_{1,2}/GF(3) -> split, verified";
  return o;
}

Outcome idempotents() {
  Outcome o;
  const auto alg = gf(3);
  std::size_t singular = 0, quaternionic = 0, quadratic = 0, unexpected = 0;
  const auto idems = find_idempotents(alg);
  for (const auto& e : idems) {
    try {
      const auto info = classify_idempotent(alg, e);
      switch (info.cls) {
        case IdempotentClass::Singular: ++singular; break;
        case IdempotentClass::Quaternionic: ++quaternionic; break;
        case IdempotentClass::Quadratic: ++quadratic; break;
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::UnexpectedRank) throw;
      ++unexpected;
    }
  }
  o.expect(singular > 0, "no singular idempotent");
  o.expect(quaternionic > 0, "no quaternionic idempotent");
  o.expect(unexpected == 0, num(unexpected) + " idempotents with unexpected rank");
  o.detail = num(idems.size()) + " idempotents: " + num(quaternionic) + " quaternionic, " + num(quadratic) +
             " quadratic, " + num(singular) + " singular" + (o.ok ? "" : "; " + o.detail);
  return o;
}

Outcome hermitian() {
  Outcome o;
  std::size_t forms = 0;
  auto check = [&](const HermitianForm& h) {
    ++forms;
    const auto basis = hermitian_orthonormalize(h);
    if (hermitian_gram(h, basis) != Matrix<GF>::identity(*h.kf.ext, h.dim())) o.expect(false, "Gram is not 1");
  };
  const auto f2 = GF::create(2), f3 = GF::create(3);
  const auto k4 = QuadraticExtension::make(f2, GF::create(4));
  const auto k9 = QuadraticExtension::make(f3, GF::create(9));
  // Diagonal entries of a hermitian form are in F; over GF(2) the only
  // nondegenerate diagonal form in each dimension is the identity.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<GF::Elem> d(n, 1);
    while (true) {
      Matrix<GF> g(*k4.ext, n, n);
      for (std::size_t i = 0; i < n; ++i) g(i, i) = k4.embed(d[i]);
      check(make_hermitian_form(k4, g));
      std::size_t i = 0;
      while (i < n && d[i] + 1 == f2->order()) d[i++] = 1;
      if (i == n) break;
      ++d[i];
    }
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) check(random_hermitian_form(k4, 3, rng));
  for (int i = 0; i < 100; ++i) check(random_hermitian_form(k9, 3, rng));
  if (o.ok) o.detail = num(forms) + " forms";
  return o;
}

Outcome matrix_model() {
  Outcome o;
  for (std::uint64_t q : {4, 7, 13}) {
    const auto f = GF::create(q);
    try {
      const auto r = sl3_iso_check(f, *primitive_cube_root(*f));
      o.expect(r.products_checked == 64, "GF(" + num(q) + "): products checked " + num(r.products_checked));
    } catch (const Error& e) {
      o.expect(false, "GF(" + num(q) + "): " + e.what());
    }
  }
  const auto f2 = GF::create(2), f4 = GF::create(4);
  const auto r = symbol_algebra_skew(f2, f4, *primitive_cube_root(*f4), 1, 1);
  o.expect(r.dimension == 8 && r.z_basis_skew && r.closed, "skew part is not an 8-dimensional algebra");
  o.expect(r.matches_okubo, "symbol algebra differs from O_{1,1}/GF(2)");
  const OkuboAlgebra<GF> split(f2, 1, 1);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (r.products[a][b] != split.multiply(split.basis(a), split.basis(b))) o.expect(false, "product differs");
  if (o.ok) o.detail = "sl(3) over GF(4), GF(7), GF(13); (1,1)_{GF(4)} skew = O_{1,1}/GF(2)";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden multiplication table", 1, golden_table},
      {2, "composition identities", 30, identity_suite_all},
      {3, "Phi is a homomorphism", 0, phi_homomorphism},
      {4, "Weyl group trichotomy", 60, weyl_orders},
      {5, "grading automorphism groups", 0, aut_orders},
      {6, "unitary groups and Pauli orbit", 120, unitary_orbit},
      {7, "conjugation image is Aut(Gamma_{1,1})", 0, conjugation_image},
      {8, "PU and PSU structure", 120, pu_psu_structure},
      {9, "full Aut over GF(2)", 60, full_aut},
      {10, "isomorphisms to the split algebra", 300, isomorphisms},
      {11, "char-3 idempotent census", 60, idempotents},
      {12, "hermitian orthonormalization", 0, hermitian},
      {13, "matrix model cross-check", 0, matrix_model},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      out.ok = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit)";
    }
    if (!out.ok) ++failed;
    std::printf("[%s] %2d %s (%.2f s): %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

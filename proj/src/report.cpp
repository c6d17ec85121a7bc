#include "okubo/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "okubo/autgroup.hpp"
#include "okubo/identities.hpp"

namespace okubo {

using nlohmann::json;

namespace {

class Checks {
 public:
  explicit Checks(Report& r) : r_(r) {}
  bool expect(bool ok, const std::string& check, json detail = nullptr) {
    if (!ok) {
      r_.passed = false;
      json rec = {{"check", check}};
      if (!detail.is_null()) rec["detail"] = std::move(detail);
      r_.failures.push_back(std::move(rec));
    }
    return ok;
  }

 private:
  Report& r_;
};

std::string index_text(BasisIndex b) { return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")"; }

json invariants_json(const GroupInvariants& inv) {
  json hist = json::object();
  for (const auto& [o, n] : inv.order_histogram) hist[std::to_string(o)] = n;
  return {{"order", inv.order},
          {"center", inv.center},
          {"derived", inv.derived},
          {"sylow2", inv.sylow2},
          {"sylow2_unique", inv.sylow2_unique},
          {"abelianization", inv.abelianization},
          {"order_histogram", hist}};
}

std::string invariants_text(const GroupInvariants& inv) {
  std::ostringstream out;
  out << "order " << inv.order << ", center " << inv.center << ", derived " << inv.derived << ", Sylow-2 "
      << inv.sylow2 << (inv.sylow2_unique ? " (normal)" : "") << ", abelianization [";
  for (std::size_t i = 0; i < inv.abelianization.size(); ++i) out << (i ? "," : "") << inv.abelianization[i];
  out << "]";
  return out.str();
}

template <ExactField F>
json matrix_json(const F& f, const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(f.format(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <ExactField F>
std::string matrix_text(const F& f, const Matrix<F>& m, const std::string& indent) {
  std::size_t w = 1;
  for (const auto& e : m.data()) w = std::max(w, f.format(e).size());
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto s = f.format(m(r, c));
      out << (c ? " " : "") << std::string(w - s.size(), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

template <ExactField F>
std::string entry_text(const OkuboAlgebra<F>& a, int p, int q) {
  const F& f = a.field();
  const auto& e = a.entry(p, q);
  if (e.target < 0) return "0";
  const std::string label = basis_label(kBasis[e.target]);
  if (f.eq(e.coeff, f.one())) return label;
  if (f.eq(e.coeff, f.neg(f.one()))) return "-" + label;
  return f.format(e.coeff) + "·" + label;
}

std::string pad(const std::string& s, std::size_t w) {
  const std::size_t d = display_width(s);
  return s + std::string(w > d ? w - d : 0, ' ');
}

json header(const RunRequest& req, const std::string& field_name) {
  return {{"schema", 1}, {"command", req.command}, {"field", field_name}};
}

struct Context {
  const RunRequest& req;
  Report& report;
  Checks checks;
  std::ostringstream text;
};

template <class Fn>
void with_field(const std::string& spec, Fn&& fn) {
  const Field field = Field::parse(spec);
  std::visit([&](const auto& ptr) { fn(ptr); }, field.impl());
}

template <ExactField F>
OkuboAlgebra<F> make_algebra(const std::shared_ptr<const F>& f, const std::string& alpha, const std::string& beta) {
  return OkuboAlgebra<F>(f, f->parse(alpha), f->parse(beta));
}

// ---------------------------------------------------------------------------

template <ExactField F>
void table_report(Context& ctx, const OkuboAlgebra<F>& a) {
  json rows = json::array();
  for (int p = 0; p < 8; ++p) {
    json row = json::array();
    for (int q = 0; q < 8; ++q) row.push_back(entry_text(a, p, q));
    rows.push_back(row);
  }
  json labels = json::array();
  for (const auto& b : kBasis) labels.push_back(basis_label(b));
  ctx.report.json["basis"] = labels;
  ctx.report.json["table"] = rows;
  ctx.text << format_multiplication_table(a);
}

template <ExactField F>
void verify_report(Context& ctx, const OkuboAlgebra<F>& a) {
  IdentityOptions opt;
  opt.seed = ctx.req.seed;
  const auto r = identity_suite(a, opt);
  json ex = json::array();
  for (const auto& e : r.examples) ex.push_back({{"identity", e.identity}, {"x", e.x}, {"y", e.y}, {"z", e.z}});
  ctx.report.json["identities"] = {{"exhaustive", r.exhaustive},
                                   {"pairs", r.pairs},
                                   {"triples", r.triples},
                                   {"multiplicativity_failures", r.multiplicativity_failures},
                                   {"left_composition_failures", r.left_composition_failures},
                                   {"right_composition_failures", r.right_composition_failures},
                                   {"associativity_failures", r.associativity_failures},
                                   {"gram_nondegenerate", r.gram_nondegenerate},
                                   {"isotropic", r.isotropic},
                                   {"examples", ex}};
  auto& c = ctx.checks;
  c.expect(r.multiplicativity_failures == 0, "n(x*y) = n(x)n(y)", r.multiplicativity_failures);
  c.expect(r.left_composition_failures == 0, "(x*y)*x = n(x)y", r.left_composition_failures);
  c.expect(r.right_composition_failures == 0, "x*(y*x) = n(x)y", r.right_composition_failures);
  c.expect(r.associativity_failures == 0, "n(x*y,z) = n(x,y*z)", r.associativity_failures);
  c.expect(r.gram_nondegenerate, "polar form nondegenerate");
  c.expect(r.isotropic, "n(z~_{1,0}) = 0");
  ctx.text << "pairs checked: " << r.pairs << (r.exhaustive ? " (exhaustive)" : " (random)") << "\n"
           << "triples checked: " << r.triples << "\n"
           << "n(x*y) = n(x)n(y): " << r.multiplicativity_failures << " failures\n"
           << "(x*y)*x = n(x)y: " << r.left_composition_failures << " failures\n"
           << "x*(y*x) = n(x)y: " << r.right_composition_failures << " failures\n"
           << "n(x*y,z) = n(x,y*z): " << r.associativity_failures << " failures\n"
           << "polar form nondegenerate: " << (r.gram_nondegenerate ? "yes" : "no") << "\n"
           << "norm isotropic: " << (r.isotropic ? "yes" : "no") << "\n";
}

template <ExactField F>
void phi_report(Context& ctx, const OkuboAlgebra<F>& a) {
  const F& f = a.field();
  const auto phi = phi_gamma(a);
  const auto failures = phi_homomorphism_failures(phi);
  const auto square = square_identity_failures(a);
  const int rank = phi_image_rank(phi);
  const auto weyl = weyl_group_via_formula(phi);
  const auto nf = classify_grading(a);
  json entries = json::array();
  ctx.text << "Phi:\n";
  for (std::size_t h = 0; h < kDegrees.size(); ++h) {
    const auto cls = cube_class_text(f, phi.classes[h]);
    entries.push_back({index_text(kDegrees[h]), cls});
    ctx.text << "  " << index_text(kDegrees[h]) << " -> [" << cls << "]\n";
  }
  auto& j = ctx.report.json;
  j["alpha"] = f.format(a.alpha());
  j["beta"] = f.format(a.beta());
  j["phi"] = entries;
  j["homomorphism_failures"] = failures.size();
  j["square_identity_failures"] = square.size();
  j["image_rank"] = rank;
  j["weyl_order"] = weyl.order();
  j["normal_form"] = nf.text;
  ctx.checks.expect(failures.empty(), "Phi is a homomorphism", failures.size());
  ctx.checks.expect(square.empty(), "(u*u)*(u*u) = n(u,u*u)u", square.size());
  ctx.text << "homomorphism failures: " << failures.size() << "\n"
           << "square identity failures: " << square.size() << "\n"
           << "image rank: " << rank << "\n"
           << "Weyl order: " << weyl.order() << "\n"
           << "normal form: " << nf.text << "\n";
}

template <ExactField F>
void weyl_report(Context& ctx, const OkuboAlgebra<F>& a) {
  const F& f = a.field();
  const auto formula = weyl_group_via_formula(a);
  const auto aut = grading_automorphisms(a);
  const auto stab = stabilizer_subgroup(a, aut.group);
  const auto w = weyl_from_aut(f, aut.group, stab, formula);
  json mats = json::array();
  for (const auto& m : formula.elements()) mats.push_back(m.to_string());
  ctx.report.json["formula"] = {{"order", formula.order()}, {"elements", mats}};
  ctx.report.json["quotient"] = {{"aut_order", aut.group.order()},
                                 {"stab_order", stab.elements.size()},
                                 {"order", w.quotient.order()},
                                 {"induced_well_defined", w.induced_well_defined}};
  ctx.report.json["agree"] = w.matches_formula;
  ctx.checks.expect(w.induced_well_defined, "Aut(Gamma) permutes the degrees linearly");
  ctx.checks.expect(w.matches_formula, "quotient Weyl group equals formula Weyl group");
  ctx.text << "Weyl group from Phi-invariance: order " << formula.order() << "\n";
  for (const auto& m : formula.elements()) ctx.text << "  " << m.to_string() << "\n";
  ctx.text << "Aut(Gamma)/Stab(Gamma): " << aut.group.order() << "/" << stab.elements.size() << " = "
           << w.quotient.order() << "\n"
           << "agree: " << (w.matches_formula ? "yes" : "no") << "\n";
}

template <ExactField F>
void aut_report(Context& ctx, const OkuboAlgebra<F>& a) {
  const F& f = a.field();
  const auto aut = grading_automorphisms(a);
  const auto& g = aut.group;
  const auto stab = stabilizer_subgroup(a, g);
  const auto formula = weyl_group_via_formula(a);
  const auto w = weyl_from_aut(f, g, stab, formula);
  const int rank = phi_image_rank(phi_gamma(a));
  const auto inv = group_invariants(g.table());
  auto& c = ctx.checks;

  ElementSet section_image;
  std::string section_kind;
  bool section_ok = true;
  if (rank < 2) {
    const auto s = splitting_section(a);
    section_kind = rank == 0 ? "permutation" : "order-3";
    section_ok = s.homomorphic && s.lifts;
    for (const auto& m : s.images) {
      const auto idx = g.find(m);
      if (!idx) {
        section_ok = false;
        continue;
      }
      section_image.push_back(*idx);
    }
    std::sort(section_image.begin(), section_image.end());
  } else {
    section_kind = "trivial";
    section_image = {g.table().identity()};
  }
  const auto split = semidirect_check(g.table(), stab.elements, section_image);

  auto& j = ctx.report.json;
  j["alpha"] = f.format(a.alpha());
  j["beta"] = f.format(a.beta());
  j["candidates"] = aut.candidates;
  j["aut"] = invariants_json(inv);
  j["stab"] = {{"order", stab.elements.size()}, {"mu3", stab.mu3}, {"character_form", stab.character_form}};
  j["weyl"] = {{"order", w.quotient.order()}, {"agrees_with_formula", w.matches_formula}};
  j["section"] = {{"kind", section_kind}, {"order", section_image.size()}, {"verified", section_ok}};
  j["semidirect"] = {{"holds", split.holds}, {"reason", split.reason}};

  c.expect(stab.elements.size() == stab.mu3 * stab.mu3, "|Stab| = |mu_3(F)|^2",
           {{"stab", stab.elements.size()}, {"mu3", stab.mu3}});
  c.expect(stab.character_form, "Stab consists of character maps");
  c.expect(g.order() == stab.elements.size() * formula.order(), "|Aut| = |Stab||W|");
  c.expect(w.matches_formula, "quotient Weyl group equals formula Weyl group");
  c.expect(section_ok, "section is a homomorphic lift");
  c.expect(split.holds, "Aut(Gamma) = Stab x| section", split.reason);

  ctx.text << "Aut(Gamma): " << invariants_text(inv) << "\n"
           << "Stab(Gamma): order " << stab.elements.size() << " (|mu_3(F)|^2 = " << stab.mu3 * stab.mu3 << ")"
           << (stab.character_form ? ", character maps" : ", NOT character maps") << "\n"
           << "W(Gamma): order " << w.quotient.order() << (w.matches_formula ? ", agrees with formula" : ", MISMATCH")
           << "\n"
           << "section (" << section_kind << "): order " << section_image.size()
           << (section_ok ? ", verified" : ", FAILED") << "\n"
           << "semidirect: " << (split.holds ? "yes" : "no (" + split.reason + ")") << "\n";
}

void autfull_report(Context& ctx) {
  const auto full = full_aut_f2();
  const auto& g = full.group;
  const auto f2 = GaloisField::create(2);
  const OkuboAlgebra<GaloisField> o(f2, 1, 1);
  const auto graded = grading_automorphisms(o);
  ElementSet sub;
  bool contained = true;
  for (const auto& m : graded.group.elements()) {
    if (auto idx = g.find(m))
      sub.push_back(*idx);
    else
      contained = false;
  }
  std::sort(sub.begin(), sub.end());
  contained = contained && g.table().is_subgroup(sub);
  const auto unitary = unitary_f4();
  const bool iso = small_group_isomorphic(g.table(), unitary.pu.table()).has_value();
  const auto inv = group_invariants(g.table());
  auto& j = ctx.report.json;
  j["valid_pairs"] = full.valid_pairs;
  j["accepted"] = full.accepted;
  j["aut"] = invariants_json(inv);
  j["grading_subgroup"] = {{"order", sub.size()}, {"contained", contained}};
  j["isomorphic_to_pu"] = iso;
  auto& c = ctx.checks;
  c.expect(g.order() == 216, "|Aut(O)| = 216", g.order());
  c.expect(full.valid_pairs == full.accepted && full.accepted == g.order(), "generator pairs biject with Aut(O)",
           {{"pairs", full.valid_pairs}, {"accepted", full.accepted}});
  c.expect(contained && sub.size() == 24, "Aut(Gamma) is a subgroup of order 24", sub.size());
  c.expect(iso, "Aut(O) isomorphic to PU(3,4)");
  ctx.text << "generator pairs: " << full.valid_pairs << ", accepted: " << full.accepted << "\n"
           << "Aut(O): " << invariants_text(inv) << "\n"
           << "Aut(Gamma) subgroup: order " << sub.size() << (contained ? "" : " (NOT contained)") << "\n"
           << "isomorphic to PU(3,4): " << (iso ? "yes" : "no") << "\n";
}

void unitary_report(Context& ctx) {
  const auto g = unitary_f4();
  const GaloisField& f = *g.f4;
  const auto orbit = orbit_of_pauli_x(g);
  const OkuboAlgebra<GaloisField> split(g.f4, 1, 1);
  const auto aut = grading_automorphisms(split);
  const auto conj = conj_homomorphism(g, split, aut.group);
  const auto psu = psu_semidirect(g, conj, aut.group);
  const bool pu_affine = small_group_isomorphic(g.pu.table(), affine_sl23()).has_value();
  const bool pauli_normal = !psu.pauli.empty() && g.psu_table.is_normal(psu.pauli);
  std::size_t u_kernel_scalars = 0;
  for (int k : conj.kernel) {
    const auto& m = g.u.element(k);
    if (m[1] == 0 && m[2] == 0 && m[3] == 0 && m[5] == 0 && m[6] == 0 && m[7] == 0 && m[0] == m[4] && m[4] == m[8])
      ++u_kernel_scalars;
  }
  json q8 = json::array();
  for (int e : psu.q8) q8.push_back(mat3_format(f, g.pu.element(g.psu_embedding[e])));
  const auto [px, py] = pauli_generators(f, g.omega);

  auto& j = ctx.report.json;
  j["U"] = g.u.order();
  j["SU"] = g.su.size();
  j["PU"] = g.pu.order();
  j["PSU"] = g.psu.size();
  j["orbit"] = orbit.orbit.size();
  j["orbit_equals_scaled_z"] = orbit.orbit == orbit.expected;
  j["stabilizer"] = orbit.stabilizer.size();
  j["stabilizer_diagonal"] = orbit.stabilizer_diagonal;
  j["conjugation"] = {{"kernel", conj.kernel.size()},
                      {"kernel_scalar", u_kernel_scalars == conj.kernel.size()},
                      {"homomorphic", conj.homomorphic},
                      {"image_equals_aut_gamma", conj.image_equals_aut}};
  j["pu_isomorphic_to_affine_sl23"] = pu_affine;
  j["psu"] = {{"invariants", invariants_json(group_invariants(g.psu_table))},
              {"pauli_image", psu.pauli.size()},
              {"pauli_normal", pauli_normal},
              {"pauli_generators", {mat3_format(f, px), mat3_format(f, py)}},
              {"q8_image", psu.q8.size()},
              {"q8_elements", q8},
              {"semidirect", psu.result.holds}};

  auto& c = ctx.checks;
  c.expect(g.u.order() == 648, "|U(3,4)| = 648", g.u.order());
  c.expect(g.su.size() == 216, "|SU(3,4)| = 216", g.su.size());
  c.expect(g.pu.order() == 216, "|PU(3,4)| = 216", g.pu.order());
  c.expect(g.psu.size() == 72, "|PSU(3,4)| = 72", g.psu.size());
  c.expect(orbit.orbit.size() == 24 && orbit.orbit == orbit.expected, "orbit of x is the union of F4^x z_{i,j}");
  c.expect(orbit.stabilizer.size() == 27 && orbit.stabilizer_diagonal, "stabilizer of x is the 27 diagonal unitaries");
  c.expect(conj.all_automorphisms && conj.homomorphic && conj.image_equals_aut,
           "conjugation maps PU(3,4) onto Aut(Gamma_{1,1})");
  c.expect(conj.kernel.size() == 3 && u_kernel_scalars == 3, "conjugation kernel is the scalars");
  c.expect(pu_affine, "PU(3,4) isomorphic to (Z/3)^2 x| SL(2,3)");
  c.expect(pauli_normal && psu.pauli.size() == 9, "PSU(3,4) has a normal subgroup of order 9");
  c.expect(psu.q8_in_psu && psu.q8.size() == 8, "Q8 image lies in PSU(3,4)");
  c.expect(psu.result.holds, "PSU(3,4) = (Z/3)^2 x| Q8", psu.result.reason);

  ctx.text << "|U(3,4)| = " << g.u.order() << "\n"
           << "|SU(3,4)| = " << g.su.size() << "\n"
           << "|PU(3,4)| = " << g.pu.order() << "\n"
           << "|PSU(3,4)| = " << g.psu.size() << "\n"
           << "orbit of x: " << orbit.orbit.size()
           << (orbit.orbit == orbit.expected ? " (= union of F4^x z_{i,j})" : " (MISMATCH)") << "\n"
           << "stabilizer of x: " << orbit.stabilizer.size()
           << (orbit.stabilizer_diagonal ? " (diagonal)" : " (NOT diagonal)") << "\n"
           << "conjugation: kernel " << conj.kernel.size() << ", image = Aut(Gamma_{1,1}): "
           << (conj.image_equals_aut ? "yes" : "no") << "\n"
           << "PU(3,4) ~ (Z/3)^2 x| SL(2,3): " << (pu_affine ? "yes" : "no") << "\n"
           << "PSU(3,4) = (Z/3)^2 x| Q8: " << (psu.result.holds ? "yes" : "no") << "\n"
           << "PSU(3,4): " << invariants_text(group_invariants(g.psu_table)) << "\n";
}

void idem_report(Context& ctx, const OkuboAlgebra<GaloisField>& a) {
  if (a.field().characteristic() != 3)
    throw Error(ErrorCode::WrongCharacteristic, "idempotent taxonomy needs characteristic 3");
  const auto idems = find_idempotents(a);
  std::map<std::string, std::size_t> counts = {{"quaternionic", 0}, {"quadratic", 0}, {"singular", 0}};
  json list = json::array();
  std::size_t unexpected = 0;
  for (const auto& e : idems) {
    try {
      const auto info = classify_idempotent(a, e);
      ++counts[to_string(info.cls)];
      list.push_back({{"element", a.format(e)},
                      {"class", to_string(info.cls)},
                      {"centralizer_dim", info.centralizer_dim},
                      {"norm_rank", info.norm_rank}});
    } catch (const Error& err) {
      if (err.code() != ErrorCode::UnexpectedRank) throw;
      ++unexpected;
      list.push_back({{"element", a.format(e)}, {"class", "unexpected"}, {"error", err.what()}});
    }
  }
  auto& j = ctx.report.json;
  j["alpha"] = a.field().format(a.alpha());
  j["beta"] = a.field().format(a.beta());
  j["count"] = idems.size();
  j["classes"] = counts;
  j["unexpected_rank"] = unexpected;
  j["idempotents"] = list;
  auto& c = ctx.checks;
  c.expect(unexpected == 0, "every idempotent has centralizer norm rank 1, 2 or 4", unexpected);
  c.expect(counts["singular"] > 0, "a singular idempotent exists");
  c.expect(counts["quaternionic"] > 0, "a quaternionic idempotent exists");
  ctx.text << "nonzero idempotents: " << idems.size() << "\n";
  for (const auto& [k, v] : counts) ctx.text << "  " << k << ": " << v << "\n";
  ctx.text << "  unexpected rank: " << unexpected << "\n";
}

void iso_report(Context& ctx, const std::shared_ptr<const GaloisField>& f) {
  const auto a = make_algebra(f, ctx.req.alpha, ctx.req.beta);
  const auto b = make_algebra(f, ctx.req.target_alpha, ctx.req.target_beta);
  const auto r = find_isomorphism(a, b);
  auto& j = ctx.report.json;
  j["source"] = a.name();
  j["target"] = b.name();
  j["x_candidates"] = r.x_candidates;
  j["pairs_tested"] = r.pairs_tested;
  j["found"] = r.map.has_value();
  std::string failure = "no map";
  if (r.map) {
    failure = isomorphism_failure(a, b, *r.map);
    j["map"] = matrix_json(*f, *r.map);
  }
  j["verified"] = failure.empty();
  ctx.checks.expect(r.map.has_value(), "isomorphism found");
  if (r.map) ctx.checks.expect(failure.empty(), "isomorphism verified", failure);
  ctx.text << a.name() << " -> " << b.name() << "\n"
           << "x candidates: " << r.x_candidates << ", pairs tested: " << r.pairs_tested << "\n";
  if (r.map) {
    ctx.text << "isomorphism (column a = image of z~_a):\n" << matrix_text(*f, *r.map, "  ");
    ctx.text << "verified: " << (failure.empty() ? "yes" : failure) << "\n";
  } else {
    ctx.text << "no isomorphism found\n";
  }
}

std::shared_ptr<const GaloisField> finite_only(const std::string& spec, const std::string& command) {
  const Field field = Field::parse(spec);
  if (!field.descriptor().finite())
    throw Error(ErrorCode::InvalidArgument, command + " needs a finite field");
  return std::get<std::shared_ptr<const GaloisField>>(field.impl());
}

}  // namespace

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < s.size();) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    std::uint32_t cp = c;
    std::size_t len = 1;
    if (c >= 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else if (c >= 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xC0) {
      len = 2;
      cp = c & 0x1F;
    }
    for (std::size_t k = 1; k < len && i + k < s.size(); ++k)
      cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    if (!(cp >= 0x300 && cp <= 0x36F)) ++w;
    i += len;
  }
  return w;
}

template <ExactField F>
std::string format_multiplication_table(const OkuboAlgebra<F>& a) {
  std::array<std::array<std::string, 8>, 8> cells;
  std::size_t w = 0;
  for (int p = 0; p < 8; ++p) {
    w = std::max(w, display_width(basis_label(kBasis[p])));
    for (int q = 0; q < 8; ++q) {
      cells[p][q] = entry_text(a, p, q);
      w = std::max(w, display_width(cells[p][q]));
    }
  }
  std::ostringstream out;
  out << a.name() << "\n";
  auto rule = [&]() {
    out << std::string(w, '-');
    for (int blk = 0; blk < 4; ++blk) out << "-+-" << std::string(2 * w + 1, '-');
    out << "\n";
  };
  out << pad("*", w);
  for (int q = 0; q < 8; ++q) out << (q % 2 == 0 ? " | " : " ") << pad(basis_label(kBasis[q]), w);
  out << "\n";
  for (int p = 0; p < 8; ++p) {
    if (p % 2 == 0) rule();
    out << pad(basis_label(kBasis[p]), w);
    for (int q = 0; q < 8; ++q) out << (q % 2 == 0 ? " | " : " ") << pad(cells[p][q], w);
    out << "\n";
  }
  // Trailing padding makes diffs noisy.
  std::string s = out.str();
  std::string cleaned;
  std::istringstream lines(s);
  for (std::string line; std::getline(lines, line);) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    cleaned += line + "\n";
  }
  return cleaned;
}

const std::vector<std::string>& report_commands() {
  static const std::vector<std::string> cmds = {"table", "verify",  "phi",  "weyl", "aut",
                                                "autfull", "unitary", "idem", "iso"};
  return cmds;
}

std::string default_field(const std::string& command) {
  if (command == "autfull") return "2";
  if (command == "idem") return "3";
  return "4";
}

Report run_report(const RunRequest& req) {
  const auto& cmds = report_commands();
  if (std::find(cmds.begin(), cmds.end(), req.command) == cmds.end())
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + req.command + "'");
  const std::string spec = req.field.empty() ? default_field(req.command) : req.field;
  Report report;
  Context ctx{req, report, Checks(report), {}};
  const std::string field_name = Field::parse(spec).descriptor().name();
  report.json = header(req, field_name);

  if (req.command == "unitary") {
    report.json["field"] = "GF(4)";
    unitary_report(ctx);
  } else if (req.command == "autfull") {
    if (field_name != "GF(2)") throw Error(ErrorCode::InvalidArgument, "autfull is defined over GF(2) only");
    autfull_report(ctx);
  } else if (req.command == "idem") {
    const auto f = finite_only(spec, req.command);
    const auto a = make_algebra(f, req.alpha, req.beta);
    ctx.text << a.name() << "\n";
    idem_report(ctx, a);
  } else if (req.command == "iso") {
    iso_report(ctx, finite_only(spec, req.command));
  } else {
    with_field(spec, [&](const auto& fp) {
      const auto a = make_algebra(fp, req.alpha, req.beta);
      if (req.command != "table") ctx.text << a.name() << "\n";
      if (req.command == "table")
        table_report(ctx, a);
      else if (req.command == "verify")
        verify_report(ctx, a);
      else if (req.command == "phi")
        phi_report(ctx, a);
      else if (req.command == "weyl")
        weyl_report(ctx, a);
      else if (req.command == "aut")
        aut_report(ctx, a);
    });
  }
  report.json["passed"] = report.passed;
  report.json["failures"] = report.failures;
  ctx.text << "result: " << (report.passed ? "PASS" : "FAIL") << "\n";
  report.text = ctx.text.str();
  return report;
}

template std::string format_multiplication_table(const OkuboAlgebra<GaloisField>&);
template std::string format_multiplication_table(const OkuboAlgebra<RationalField>&);

}  // namespace okubo

#include "okubo/autgroup.hpp"

#include <algorithm>
#include <set>

namespace okubo {

namespace {

std::vector<GaloisField::Elem> all_cube_roots(const GaloisField& f, GaloisField::Elem t) {
  std::vector<GaloisField::Elem> out;
  for (std::uint32_t i = 1; i < f.order(); ++i)
    if (f.pow(f.element(i), 3) == t) out.push_back(f.element(i));
  return out;
}

std::vector<Rational> all_cube_roots(const RationalField&, const Rational& t) {
  std::vector<Rational> out;
  if (auto r = rational_cube_root(t)) out.push_back(*r);
  return out;
}

template <ExactField F>
typename OkuboAlgebra<F>::Vector column(const Matrix<F>& m, int c) {
  typename OkuboAlgebra<F>::Vector v;
  for (int r = 0; r < 8; ++r) v[r] = m(r, c);
  return v;
}

template <ExactField F>
Matrix<F> matrix_power(const F& f, const Matrix<F>& m, int e) {
  Matrix<F> r = Matrix<F>::identity(f, m.rows());
  for (int i = 0; i < e; ++i) r = multiply(f, r, m);
  return r;
}

std::size_t mu3_order(const GaloisField& f) { return primitive_cube_root(f) ? 3 : 1; }
std::size_t mu3_order(const RationalField&) { return 1; }

}  // namespace

template <ExactField F>
MapKey<F> map_key(const F& f, const Matrix<F>& m) {
  MapKey<F> k;
  k.reserve(m.data().size());
  for (const auto& e : m.data()) k.push_back(f.key(e));
  return k;
}

template <ExactField F>
typename OkuboAlgebra<F>::Vector apply_map(const F& f, const Matrix<F>& m,
                                           const typename OkuboAlgebra<F>::Vector& v) {
  typename OkuboAlgebra<F>::Vector out;
  for (int r = 0; r < 8; ++r) {
    auto s = f.zero();
    for (int c = 0; c < 8; ++c)
      if (!f.is_zero(v[c])) s = f.add(s, f.mul(m(r, c), v[c]));
    out[r] = s;
  }
  return out;
}

template <ExactField F>
Matrix<F> word_basis_map(const OkuboAlgebra<F>& target, const typename OkuboAlgebra<F>::Vector& x,
                         const typename OkuboAlgebra<F>::Vector& y) {
  const F& f = target.field();
  std::array<typename OkuboAlgebra<F>::Vector, 8> img;
  img[0] = x;
  img[2] = y;
  for (const auto& w : kWordBasis) {
    auto p = target.multiply(img[w.left], img[w.right]);
    img[w.target] = w.sign < 0 ? target.scale(f.neg(f.one()), p) : p;
  }
  Matrix<F> m(f, 8, 8);
  for (int c = 0; c < 8; ++c)
    for (int r = 0; r < 8; ++r) m(r, c) = img[c][r];
  return m;
}

template <ExactField F>
std::string isomorphism_failure(const OkuboAlgebra<F>& a, const OkuboAlgebra<F>& b, const Matrix<F>& m) {
  const F& f = a.field();
  std::array<typename OkuboAlgebra<F>::Vector, 8> img;
  for (int c = 0; c < 8; ++c) img[c] = column(m, c);
  for (int p = 0; p < 8; ++p) {
    if (!f.eq(b.norm(img[p]), a.norm(a.basis(p)))) return "norm of image of " + basis_label(kBasis[p]);
    for (int q = 0; q < 8; ++q) {
      const auto& e = a.entry(p, q);
      auto lhs = e.target < 0 ? b.zero() : b.scale(e.coeff, img[e.target]);
      if (!b.equal(lhs, b.multiply(img[p], img[q])))
        return "product " + basis_label(kBasis[p]) + " * " + basis_label(kBasis[q]);
      if (q > p && !f.eq(b.polar(img[p], img[q]), a.polar(a.basis(p), a.basis(q))))
        return "pairing " + basis_label(kBasis[p]) + ", " + basis_label(kBasis[q]);
    }
  }
  if (f.is_zero(determinant(f, m))) return "map is singular";
  return {};
}

template <ExactField F>
std::optional<Matrix<F>> extend_from_generators(const OkuboAlgebra<F>& a, const OkuboAlgebra<F>& b,
                                                const typename OkuboAlgebra<F>::Vector& x,
                                                const typename OkuboAlgebra<F>::Vector& y) {
  auto m = word_basis_map(b, x, y);
  if (!isomorphism_failure(a, b, m).empty()) return std::nullopt;
  return m;
}

template <ExactField F>
Matrix<F> permutation_map(const F& f, const Mat2F3& g) {
  Matrix<F> m(f, 8, 8);
  for (int c = 0; c < 8; ++c) {
    const auto t = g.apply(kBasis[c].i, kBasis[c].j);
    m(basis_position(t[0], t[1]), c) = f.one();
  }
  return m;
}

template <ExactField F>
std::optional<Mat2F3> induced_degree_map(const F& f, const Matrix<F>& m) {
  std::array<int, 8> target{};
  for (int c = 0; c < 8; ++c) {
    int found = -1;
    for (int r = 0; r < 8; ++r)
      if (!f.is_zero(m(r, c))) {
        if (found >= 0) return std::nullopt;
        found = r;
      }
    if (found < 0) return std::nullopt;
    target[c] = found;
  }
  const auto t10 = kBasis[target[0]], t01 = kBasis[target[2]];
  const auto g = Mat2F3::make(t10.i, t01.i, t10.j, t01.j);
  for (int c = 0; c < 8; ++c) {
    const auto t = g.apply(kBasis[c].i, kBasis[c].j);
    if (basis_position(t[0], t[1]) != target[c]) return std::nullopt;
  }
  return g;
}

template <ExactField F>
MapGroup<F> map_group(const F& f, const std::vector<Matrix<F>>& maps) {
  auto g = generate_group(
      std::span<const Matrix<F>>(maps), Matrix<F>::identity(f, 8),
      [&f](const Matrix<F>& x, const Matrix<F>& y) { return multiply(f, x, y); },
      [&f](const Matrix<F>& x) { return map_key(f, x); });
  if (g.order() != maps.size() && !(maps.empty() && g.order() == 1))
    throw Error(ErrorCode::StructureMismatch, "map set of size " + std::to_string(maps.size()) +
                                                  " generates " + std::to_string(g.order()) + " elements");
  return g;
}

// ---------------------------------------------------------------------------

template <ExactField F>
GradingAutomorphisms<F> grading_automorphisms(const OkuboAlgebra<F>& a) {
  const F& f = a.field();
  if constexpr (F::is_finite) {
    if (f.order() > 9) throw Error(ErrorCode::FieldTooLarge, "grading automorphisms need q <= 9");
  }
  // phi(z~_{1,0}) = l z~_p needs n(x, x*x) = l^3 c_p = alpha; likewise for y.
  std::array<typename F::Elem, 8> c;
  for (int p = 0; p < 8; ++p) {
    const auto u = a.basis(p);
    c[p] = a.polar(u, a.multiply(u, u));
  }
  GradingAutomorphisms<F> out;
  std::vector<Matrix<F>> maps;
  std::set<MapKey<F>> seen;
  for (int p = 0; p < 8; ++p) {
    const auto lambdas = all_cube_roots(f, f.div(a.alpha(), c[p]));
    for (int q = 0; q < 8; ++q) {
      const auto mus = all_cube_roots(f, f.div(a.beta(), c[q]));
      for (const auto& l : lambdas)
        for (const auto& m : mus) {
          ++out.candidates;
          auto map = extend_from_generators(a, a, a.scale(l, a.basis(p)), a.scale(m, a.basis(q)));
          if (map && seen.insert(map_key(f, *map)).second) maps.push_back(std::move(*map));
        }
    }
  }
  out.group = map_group(f, maps);
  return out;
}

template <ExactField F>
StabilizerResult stabilizer_subgroup(const OkuboAlgebra<F>& a, const MapGroup<F>& aut) {
  const F& f = a.field();
  StabilizerResult res;
  res.mu3 = mu3_order(f);
  for (std::size_t i = 0; i < aut.order(); ++i) {
    const auto& m = aut.element(static_cast<int>(i));
    bool diagonal = true;
    for (int r = 0; r < 8 && diagonal; ++r)
      for (int c = 0; c < 8 && diagonal; ++c)
        if (r != c && !f.is_zero(m(r, c))) diagonal = false;
    if (!diagonal) continue;
    res.elements.push_back(static_cast<int>(i));
    // chi(g + h) = chi(g) chi(h) and chi(h)^3 = 1.
    for (int p = 0; p < 8; ++p) {
      if (!f.eq(f.mul(f.mul(m(p, p), m(p, p)), m(p, p)), f.one())) res.character_form = false;
      for (int q = 0; q < 8; ++q) {
        const int s = basis_position(kBasis[p].i + kBasis[q].i, kBasis[p].j + kBasis[q].j);
        if (s >= 0 && !f.eq(m(s, s), f.mul(m(p, p), m(q, q)))) res.character_form = false;
      }
    }
  }
  if (res.elements.size() != res.mu3 * res.mu3) res.character_form = false;
  return res;
}

template <ExactField F>
WeylFromAut weyl_from_aut(const F& f, const MapGroup<F>& aut, const StabilizerResult& stab,
                          const MatrixGroup2& formula) {
  WeylFromAut w;
  w.quotient = aut.table().quotient(stab.elements, &w.projection);
  std::vector<std::optional<Mat2F3>> induced(w.quotient.order());
  for (std::size_t i = 0; i < aut.order(); ++i) {
    const auto g = induced_degree_map(f, aut.element(static_cast<int>(i)));
    if (!g) {
      w.induced_well_defined = false;
      continue;
    }
    auto& slot = induced[w.projection[i]];
    if (!slot)
      slot = g;
    else if (!(*slot == *g))
      w.induced_well_defined = false;
  }
  for (auto& s : induced) {
    if (!s) {
      w.induced_well_defined = false;
      continue;
    }
    w.induced.push_back(*s);
  }
  if (!w.induced_well_defined) return w;
  auto sorted = w.induced;
  std::sort(sorted.begin(), sorted.end());
  const bool same_set = sorted == formula.elements();
  w.matches_formula = same_set && small_group_isomorphic(w.quotient, formula.table()).has_value();
  return w;
}

template <ExactField F>
Section<F> splitting_section(const OkuboAlgebra<F>& a) {
  const F& f = a.field();
  const auto phi = phi_gamma(a);
  const int rank = phi_image_rank(phi);
  if (rank == 2) throw Error(ErrorCode::WrongRank, "no section for a rank-2 image");
  const auto formula = weyl_group_via_formula(phi);
  Section<F> s;
  s.weyl = formula.elements();

  if (rank == 0) {
    // psi : O_{1,1} -> A, z~_{1,0} -> l z~_{1,0}, z~_{0,1} -> m z~_{0,1}.
    const OkuboAlgebra<F> split(a.field_ptr(), f.one(), f.one());
    const auto l = cube_root(f, f.inv(a.alpha()));
    const auto m = cube_root(f, f.inv(a.beta()));
    if (!l || !m) throw Error(ErrorCode::StructureMismatch, "rank 0 without cube roots");
    const auto psi = extend_from_generators(split, a, a.scale(*l, a.basis(0)), a.scale(*m, a.basis(2)));
    if (!psi) throw Error(ErrorCode::StructureMismatch, "scaling map is not an isomorphism");
    const auto psi_inv = inverse(f, *psi);
    for (const auto& g : s.weyl) s.images.push_back(multiply(f, multiply(f, *psi, permutation_map(f, g)), *psi_inv));
  } else {
    // x spans a degree in ker Phi, normalized to n(x, x*x) = 1.
    int kp = -1;
    for (int p = 0; p < 8 && kp < 0; ++p)
      if (phi.classes[p + 1].is_identity()) kp = p;
    const auto u = a.basis(kp);
    const auto l = cube_root(f, f.inv(a.polar(u, a.multiply(u, u))));
    if (!l) throw Error(ErrorCode::StructureMismatch, "kernel degree without a cube root");
    const auto x = a.scale(*l, u);
    int yp = -1;
    for (int p = 0; p < 8 && yp < 0; ++p) {
      if (phi.classes[p + 1].is_identity()) continue;
      const auto e = a.basis(p);
      if (a.is_zero(a.multiply(e, x)) && !a.is_zero(a.multiply(x, e))) yp = p;
    }
    if (yp < 0) throw Error(ErrorCode::StructureMismatch, "no generator y with y*x = 0");
    const auto y = a.basis(yp);
    const auto y2 = a.scale(f.neg(f.one()), a.multiply(x, y));
    const auto S = word_basis_map(a, x, y);
    const auto T = word_basis_map(a, x, y2);
    const auto S_inv = inverse(f, S);
    if (!S_inv) throw Error(ErrorCode::StructureMismatch, "generator words are dependent");
    const auto phi3 = multiply(f, T, *S_inv);
    if (!isomorphism_failure(a, a, phi3).empty()) throw Error(ErrorCode::StructureMismatch, "order-3 map fails");
    if (!(matrix_power(f, phi3, 3) == Matrix<F>::identity(f, 8)))
      throw Error(ErrorCode::StructureMismatch, "order-3 map has phi^3 != id");
    std::vector<Matrix<F>> powers = {Matrix<F>::identity(f, 8), phi3, multiply(f, phi3, phi3)};
    for (const auto& g : s.weyl) {
      bool placed = false;
      for (const auto& p : powers) {
        auto ind = induced_degree_map(f, p);
        if (ind && *ind == g) {
          s.images.push_back(p);
          placed = true;
          break;
        }
      }
      if (!placed) throw Error(ErrorCode::StructureMismatch, "Weyl element " + g.to_string() + " not lifted");
    }
  }

  s.lifts = true;
  for (std::size_t i = 0; i < s.weyl.size(); ++i) {
    const auto ind = induced_degree_map(f, s.images[i]);
    if (!ind || !(*ind == s.weyl[i]) || !isomorphism_failure(a, a, s.images[i]).empty()) s.lifts = false;
  }
  s.homomorphic = true;
  for (std::size_t i = 0; i < s.weyl.size() && s.homomorphic; ++i)
    for (std::size_t j = 0; j < s.weyl.size() && s.homomorphic; ++j) {
      const auto prod = s.weyl[i] * s.weyl[j];
      const auto k = std::lower_bound(s.weyl.begin(), s.weyl.end(), prod) - s.weyl.begin();
      if (!(multiply(f, s.images[i], s.images[j]) == s.images[k])) s.homomorphic = false;
    }
  return s;
}

// ---------------------------------------------------------------------------

FullAutF2 full_aut_f2() {
  const auto f = GaloisField::create(2);
  const OkuboAlgebra<GaloisField> o(f, f->one(), f->one());
  std::vector<OkuboAlgebra<GaloisField>::Vector> gens;  // n(x) = 0, n(x, x*x) = 1
  auto x = o.zero();
  while (next_vector(*f, x))
    if (o.norm(x) == 0 && o.polar(x, o.multiply(x, x)) == f->one()) gens.push_back(x);
  FullAutF2 out;
  std::vector<Matrix<GaloisField>> maps;
  for (const auto& gx : gens) {
    const auto xx = o.multiply(gx, gx);
    for (const auto& gy : gens) {
      if (!o.is_zero(o.multiply(gy, gx))) continue;
      const auto yy = o.multiply(gy, gy);
      if (o.polar(gx, gy) != 0 || o.polar(gx, yy) != 0 || o.polar(xx, gy) != 0 || o.polar(xx, yy) != 0) continue;
      ++out.valid_pairs;
      if (auto m = extend_from_generators(o, o, gx, gy)) {
        ++out.accepted;
        maps.push_back(std::move(*m));
      }
    }
  }
  out.group = map_group(*f, maps);
  return out;
}

// ---------------------------------------------------------------------------

Mat3 projective_normalize(const GaloisField& f, const Mat3& m) {
  for (const auto e : m)
    if (e != 0) return mat3_scale(f, f.inv(e), m);
  throw Error(ErrorCode::ZeroElement, "zero matrix has no projective class");
}

Mat3 unitary_adjoint(const GaloisField& f, const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[j * 3 + i] = f.mul(m[i * 3 + j], m[i * 3 + j]);
  return r;
}

UnitaryGroups unitary_f4() {
  UnitaryGroups g;
  g.f4 = GaloisField::create(4);
  const GaloisField& f = *g.f4;
  g.omega = *primitive_cube_root(f);
  std::vector<Mat3> unitary;
  Mat3 m{};
  const Mat3 id = mat3_identity();
  for (std::uint32_t code = 0; code < (1u << 18); ++code) {
    for (int i = 0; i < 9; ++i) m[i] = (code >> (2 * (8 - i))) & 3u;
    if (mat3_mul(f, unitary_adjoint(f, m), m) == id) unitary.push_back(m);
  }
  auto compose = [&f](const Mat3& a, const Mat3& b) { return mat3_mul(f, a, b); };
  g.u = generate_group(std::span<const Mat3>(unitary), id, compose, [](const Mat3& a) { return a; });
  for (std::size_t i = 0; i < g.u.order(); ++i)
    if (mat3_det(f, g.u.element(static_cast<int>(i))) == f.one()) g.su.push_back(static_cast<int>(i));
  g.su_table = g.u.table().subgroup(g.su);

  std::set<Mat3> classes;
  for (const auto& a : unitary) classes.insert(projective_normalize(f, a));
  std::vector<Mat3> reps(classes.begin(), classes.end());
  g.pu = generate_group(
      std::span<const Mat3>(reps), id,
      [&f](const Mat3& a, const Mat3& b) { return projective_normalize(f, mat3_mul(f, a, b)); },
      [](const Mat3& a) { return a; });
  g.projection.resize(g.u.order());
  for (std::size_t i = 0; i < g.u.order(); ++i)
    g.projection[i] = *g.pu.find(projective_normalize(f, g.u.element(static_cast<int>(i))));
  // det is constant on scalar classes since every scalar of GF(4)^x is a cube root of 1.
  for (std::size_t i = 0; i < g.pu.order(); ++i)
    if (mat3_det(f, g.pu.element(static_cast<int>(i))) == f.one()) g.psu.push_back(static_cast<int>(i));
  g.psu_table = g.pu.table().subgroup(g.psu, &g.psu_embedding);
  return g;
}

PauliOrbit orbit_of_pauli_x(const UnitaryGroups& g) {
  const GaloisField& f = *g.f4;
  const auto x = pauli_generators(f, g.omega)[0];
  PauliOrbit out;
  std::set<Mat3> orbit;
  for (std::size_t i = 0; i < g.u.order(); ++i) {
    const auto& a = g.u.element(static_cast<int>(i));
    const auto c = mat3_mul(f, mat3_mul(f, a, x), unitary_adjoint(f, a));
    orbit.insert(c);
    if (c == x) {
      out.stabilizer.push_back(static_cast<int>(i));
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
          if (r != s && a[r * 3 + s] != 0) out.stabilizer_diagonal = false;
    }
  }
  out.orbit.assign(orbit.begin(), orbit.end());
  std::set<Mat3> expected;
  for (const auto& z : pauli_basis(f, g.omega))
    for (std::uint32_t l = 1; l < f.order(); ++l) expected.insert(mat3_scale(f, f.element(l), z));
  out.expected.assign(expected.begin(), expected.end());
  return out;
}

ConjHomomorphism conj_homomorphism(const UnitaryGroups& g, const OkuboAlgebra<GaloisField>& split,
                                   const MapGroup<GaloisField>& aut) {
  const GaloisField& f = *g.f4;
  const auto z = pauli_basis(f, g.omega);
  ConjHomomorphism out;
  out.u_to_aut.assign(g.u.order(), -1);
  for (std::size_t i = 0; i < g.u.order(); ++i) {
    const auto& a = g.u.element(static_cast<int>(i));
    const auto adj = unitary_adjoint(f, a);
    Matrix<GaloisField> m(f, 8, 8);
    bool ok = true;
    for (int c = 0; c < 8 && ok; ++c) {
      const auto coords = z_coordinates(f, g.omega, mat3_mul(f, mat3_mul(f, a, z[c]), adj));
      if (!coords) {
        ok = false;
        break;
      }
      for (int r = 0; r < 8; ++r) m(r, c) = (*coords)[r];
    }
    if (!ok || !isomorphism_failure(split, split, m).empty()) {
      out.all_automorphisms = false;
      continue;
    }
    if (auto idx = aut.find(m)) out.u_to_aut[i] = *idx;
  }
  const int id_aut = *aut.find(Matrix<GaloisField>::identity(f, 8));
  for (std::size_t i = 0; i < g.u.order(); ++i)
    if (out.u_to_aut[i] == id_aut) out.kernel.push_back(static_cast<int>(i));

  out.pu_to_aut.assign(g.pu.order(), -1);
  bool consistent = true;
  for (std::size_t i = 0; i < g.u.order(); ++i) {
    int& slot = out.pu_to_aut[g.projection[i]];
    if (slot < 0)
      slot = out.u_to_aut[i];
    else if (slot != out.u_to_aut[i])
      consistent = false;
  }
  if (!consistent || std::count(out.pu_to_aut.begin(), out.pu_to_aut.end(), -1) > 0) return out;
  out.homomorphic = is_homomorphism(g.pu.table(), aut.table(), out.pu_to_aut);
  std::set<int> image(out.pu_to_aut.begin(), out.pu_to_aut.end());
  out.image_equals_aut = image.size() == aut.order() && g.pu.order() == aut.order();
  return out;
}

PsuSemidirect psu_semidirect(const UnitaryGroups& g, const ConjHomomorphism& conj,
                             const MapGroup<GaloisField>& aut) {
  const GaloisField& f = *g.f4;
  PsuSemidirect out;
  std::vector<int> pu_to_psu(g.pu.order(), -1);
  for (std::size_t i = 0; i < g.psu_embedding.size(); ++i) pu_to_psu[g.psu_embedding[i]] = static_cast<int>(i);

  const auto [px, py] = pauli_generators(f, g.omega);
  const std::array<int, 2> pauli_gens = {*g.pu.find(projective_normalize(f, px)),
                                         *g.pu.find(projective_normalize(f, py))};
  const auto pauli_pu = g.pu.table().generated(pauli_gens);

  std::vector<int> aut_to_pu(aut.order(), -1);
  for (std::size_t i = 0; i < conj.pu_to_aut.size(); ++i)
    if (conj.pu_to_aut[i] >= 0) aut_to_pu[conj.pu_to_aut[i]] = static_cast<int>(i);
  std::vector<int> q8_gens;
  for (const auto& q : q8_generators()) {
    const auto idx = aut.find(permutation_map(f, q));
    if (!idx || aut_to_pu[*idx] < 0) return out;
    q8_gens.push_back(aut_to_pu[*idx]);
  }
  const auto q8_pu = g.pu.table().generated(q8_gens);

  out.q8_in_psu = true;
  for (int e : pauli_pu) {
    if (pu_to_psu[e] < 0) return out;
    out.pauli.push_back(pu_to_psu[e]);
  }
  for (int e : q8_pu) {
    if (pu_to_psu[e] < 0) {
      out.q8_in_psu = false;
      return out;
    }
    out.q8.push_back(pu_to_psu[e]);
  }
  std::sort(out.pauli.begin(), out.pauli.end());
  std::sort(out.q8.begin(), out.q8.end());
  out.result = semidirect_check(g.psu_table, out.pauli, out.q8);
  return out;
}

// ---------------------------------------------------------------------------

IsomorphismSearch find_isomorphism(const OkuboAlgebra<GaloisField>& a, const OkuboAlgebra<GaloisField>& b) {
  const GaloisField& f = b.field();
  if (!(a.field().descriptor() == f.descriptor()))
    throw Error(ErrorCode::MixedFields, a.name() + " vs " + b.name());
  if (f.order() > 7) throw Error(ErrorCode::FieldTooLarge, "isomorphism search needs q <= 7");
  IsomorphismSearch out;
  // The graded pair first; it extends exactly when the structure constants agree.
  ++out.pairs_tested;
  if (auto m = extend_from_generators(a, b, b.basis(0), b.basis(2))) {
    out.map = std::move(*m);
    return out;
  }
  auto x = b.zero();
  while (next_vector(f, x)) {
    if (b.norm(x) != 0) continue;
    const auto xx = b.multiply(x, x);
    if (b.polar(x, xx) != a.alpha()) continue;
    ++out.x_candidates;
    // y ranges over {y : y*x = 0, n(x, y) = 0, n(x*x, y) = 0}.
    const auto right = b.right_multiplication(x);
    Matrix<GaloisField> cons(f, 10, 8);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) cons(r, c) = right(r, c);
    for (int c = 0; c < 8; ++c) {
      cons(8, c) = b.polar(x, b.basis(c));
      cons(9, c) = b.polar(xx, b.basis(c));
    }
    const auto basis = nullspace(f, cons);
    const std::size_t d = basis.size();
    if (d == 0) continue;
    std::vector<std::uint32_t> coeffs(d, 0);
    while (true) {
      std::size_t i = d;
      while (i > 0 && coeffs[i - 1] + 1 == f.order()) coeffs[--i] = 0;
      if (i == 0) break;
      ++coeffs[i - 1];
      auto y = b.zero();
      for (std::size_t k = 0; k < d; ++k) {
        if (coeffs[k] == 0) continue;
        for (int r = 0; r < 8; ++r) y[r] = f.add(y[r], f.mul(f.element(coeffs[k]), basis[k][r]));
      }
      if (b.norm(y) != 0) continue;
      const auto yy = b.multiply(y, y);
      if (b.polar(y, yy) != a.beta() || b.polar(x, yy) != 0 || b.polar(xx, yy) != 0) continue;
      ++out.pairs_tested;
      if (auto m = extend_from_generators(a, b, x, y)) {
        out.map = std::move(*m);
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

#define OKUBO_AUT_INSTANTIATE(F)                                                                                   \
  template MapKey<F> map_key(const F&, const Matrix<F>&);                                                          \
  template OkuboAlgebra<F>::Vector apply_map(const F&, const Matrix<F>&, const OkuboAlgebra<F>::Vector&);          \
  template Matrix<F> word_basis_map(const OkuboAlgebra<F>&, const OkuboAlgebra<F>::Vector&,                        \
                                    const OkuboAlgebra<F>::Vector&);                                               \
  template std::string isomorphism_failure(const OkuboAlgebra<F>&, const OkuboAlgebra<F>&, const Matrix<F>&);      \
  template std::optional<Matrix<F>> extend_from_generators(const OkuboAlgebra<F>&, const OkuboAlgebra<F>&,         \
                                                           const OkuboAlgebra<F>::Vector&,                         \
                                                           const OkuboAlgebra<F>::Vector&);                        \
  template Matrix<F> permutation_map(const F&, const Mat2F3&);                                                     \
  template std::optional<Mat2F3> induced_degree_map(const F&, const Matrix<F>&);                                   \
  template MapGroup<F> map_group(const F&, const std::vector<Matrix<F>>&);                                         \
  template GradingAutomorphisms<F> grading_automorphisms(const OkuboAlgebra<F>&);                                  \
  template StabilizerResult stabilizer_subgroup(const OkuboAlgebra<F>&, const MapGroup<F>&);                       \
  template WeylFromAut weyl_from_aut(const F&, const MapGroup<F>&, const StabilizerResult&, const MatrixGroup2&);         \
  template Section<F> splitting_section(const OkuboAlgebra<F>&);

OKUBO_AUT_INSTANTIATE(GaloisField)
OKUBO_AUT_INSTANTIATE(RationalField)

#undef OKUBO_AUT_INSTANTIATE

}  // namespace okubo

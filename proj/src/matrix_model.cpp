#include "okubo/matrix_model.hpp"

#include <sstream>

namespace okubo {

namespace {

using Elem = GaloisField::Elem;

Elem omega_power(const GaloisField& f, Elem omega, int e) { return f.pow(omega, static_cast<std::uint64_t>(((e % 3) + 3) % 3)); }

void require_omega(const GaloisField& f, Elem omega) {
  if (f.characteristic() == 3) throw Error(ErrorCode::WrongCharacteristic, "characteristic 3 has no omega-product");
  if (omega == f.one() || f.pow(omega, 3) != f.one())
    throw Error(ErrorCode::NoOmega, f.format(omega) + " is not a primitive cube root of 1");
}

bool next_tuple(std::vector<Elem>& c, std::uint32_t q) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] + 1 < q) {
      ++c[i];
      return true;
    }
    c[i] = 0;
  }
  return false;
}

Mat3 mat3_pow(const GaloisField& f, const Mat3& a, int e) {
  Mat3 r = mat3_identity();
  for (int i = 0; i < e; ++i) r = mat3_mul(f, r, a);
  return r;
}

}  // namespace

Mat3 mat3_zero() { return Mat3{}; }

Mat3 mat3_identity() {
  Mat3 m{};
  m[0] = m[4] = m[8] = 1;
  return m;
}

Mat3 mat3_add(const GaloisField& f, const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Mat3 mat3_sub(const GaloisField& f, const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Mat3 mat3_scale(const GaloisField& f, Elem c, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r[i] = f.mul(c, a[i]);
  return r;
}

Mat3 mat3_mul(const GaloisField& f, const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const Elem aik = a[i * 3 + k];
      if (aik == 0) continue;
      for (int j = 0; j < 3; ++j) r[i * 3 + j] = f.add(r[i * 3 + j], f.mul(aik, b[k * 3 + j]));
    }
  return r;
}

Elem mat3_trace(const GaloisField& f, const Mat3& a) { return f.add(f.add(a[0], a[4]), a[8]); }

Elem mat3_det(const GaloisField& f, const Mat3& a) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(a[r0 * 3 + c0], a[r1 * 3 + c1]), f.mul(a[r0 * 3 + c1], a[r1 * 3 + c0]));
  };
  Elem d = f.mul(a[0], minor(1, 2, 1, 2));
  d = f.sub(d, f.mul(a[1], minor(1, 2, 0, 2)));
  return f.add(d, f.mul(a[2], minor(1, 2, 0, 1)));
}

std::string mat3_format(const GaloisField& f, const Mat3& a) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < 9; ++i) {
    if (i > 0) out << (i % 3 == 0 ? ';' : ',');
    out << f.format(a[i]);
  }
  out << ']';
  return out.str();
}

Elem sr_form(const GaloisField& f, const Mat3& a) {
  auto minor = [&](int p, int q) { return f.sub(f.mul(a[p * 4], a[q * 4]), f.mul(a[p * 3 + q], a[q * 3 + p])); };
  return f.add(f.add(minor(0, 1), minor(0, 2)), minor(1, 2));
}

Elem sr_polar(const GaloisField& f, const Mat3& a, const Mat3& b) {
  return f.sub(f.mul(mat3_trace(f, a), mat3_trace(f, b)), mat3_trace(f, mat3_mul(f, a, b)));
}

Mat3 star_product(const GaloisField& f, Elem omega, const Mat3& x, const Mat3& y) {
  require_omega(f, omega);
  if (mat3_trace(f, x) != 0 || mat3_trace(f, y) != 0)
    throw Error(ErrorCode::NotTraceZero, "star product needs trace-zero arguments");
  const Elem w2 = f.mul(omega, omega);
  const Mat3 xy = mat3_mul(f, x, y);
  const Mat3 yx = mat3_mul(f, y, x);
  Mat3 r = mat3_sub(f, mat3_scale(f, omega, xy), mat3_scale(f, w2, yx));
  const Elem s = f.mul(f.div(f.sub(omega, w2), f.from_int(3)), mat3_trace(f, xy));
  return mat3_sub(f, r, mat3_scale(f, s, mat3_identity()));
}

std::array<Mat3, 2> pauli_generators(const GaloisField& f, Elem omega) {
  require_omega(f, omega);
  Mat3 x{};
  x[0] = f.one();
  x[4] = omega;
  x[8] = f.mul(omega, omega);
  // y e_k = e_{k-1}, so that yx = w xy.
  Mat3 y{};
  y[0 * 3 + 1] = f.one();
  y[1 * 3 + 2] = f.one();
  y[2 * 3 + 0] = f.one();
  return {x, y};
}

std::array<Mat3, 8> pauli_basis(const GaloisField& f, Elem omega) {
  const auto [x, y] = pauli_generators(f, omega);
  const Elem scale = f.inv(f.sub(omega, f.mul(omega, omega)));
  std::array<Mat3, 8> z;
  for (int p = 0; p < 8; ++p) {
    const auto [i, j] = kBasis[p];
    const Elem c = f.mul(omega_power(f, omega, -i * j), scale);
    z[p] = mat3_scale(f, c, mat3_mul(f, mat3_pow(f, x, i), mat3_pow(f, y, j)));
  }
  return z;
}

std::optional<std::array<Elem, 8>> z_coordinates(const GaloisField& f, Elem omega, const Mat3& m) {
  const auto z = pauli_basis(f, omega);
  std::array<Elem, 8> c;
  Mat3 back{};
  for (int p = 0; p < 8; ++p) {
    // sr(z_a, z_{-a}) = 1 and sr(z_a, z_b) = 0 otherwise.
    const auto [i, j] = kBasis[p];
    c[p] = sr_polar(f, m, z[basis_position(-i, -j)]);
    back = mat3_add(f, back, mat3_scale(f, c[p], z[p]));
  }
  if (back != m) return std::nullopt;
  return c;
}

Sl3IsoCheck sl3_iso_check(std::shared_ptr<const GaloisField> fp, Elem omega) {
  const GaloisField& f = *fp;
  const auto z = pauli_basis(f, omega);
  const OkuboAlgebra<GaloisField> split(fp, f.one(), f.one());
  Sl3IsoCheck out;
  out.map = Matrix<GaloisField>(f, 9, 8);
  for (int p = 0; p < 8; ++p)
    for (int r = 0; r < 9; ++r) out.map(r, p) = z[p][r];
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& e = split.entry(a, b);
      const Mat3 expect = e.target < 0 ? mat3_zero() : mat3_scale(f, e.coeff, z[e.target]);
      if (star_product(f, omega, z[a], z[b]) != expect)
        throw Error(ErrorCode::StructureMismatch, "z product mismatch at " + basis_label(kBasis[a]) + " * " +
                                                      basis_label(kBasis[b]));
      ++out.products_checked;
    }
  for (int a = 0; a < 8; ++a) {
    if (sr_form(f, z[a]) != split.norm(split.basis(a)))
      throw Error(ErrorCode::StructureMismatch, "norm mismatch at " + basis_label(kBasis[a]));
    for (int b = a; b < 8; ++b) {
      if (sr_polar(f, z[a], z[b]) != split.polar(split.basis(a), split.basis(b)))
        throw Error(ErrorCode::StructureMismatch, "pairing mismatch at " + basis_label(kBasis[a]) + ", " +
                                                      basis_label(kBasis[b]));
      ++out.pairings_checked;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Elem HermitianForm::operator()(const KVector& u, const KVector& v) const {
  const GaloisField& k = *kf.ext;
  Elem s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) s = k.add(s, k.mul(k.mul(u[i], gram(i, j)), kf.conj(v[j])));
  }
  return s;
}

HermitianForm make_hermitian_form(const QuadraticExtension& kf, Matrix<GaloisField> gram) {
  const GaloisField& k = *kf.ext;
  if (gram.rows() != gram.cols() || gram.rows() == 0)
    throw Error(ErrorCode::InvalidArgument, "hermitian Gram matrix must be square");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (gram(j, i) != kf.conj(gram(i, j))) throw Error(ErrorCode::InvalidArgument, "Gram matrix is not hermitian");
  if (k.is_zero(determinant(k, gram))) throw Error(ErrorCode::DegenerateForm, "hermitian form is degenerate");
  return HermitianForm{kf, std::move(gram)};
}

HermitianForm random_hermitian_form(const QuadraticExtension& kf, std::size_t dim, std::mt19937_64& rng) {
  const GaloisField& k = *kf.ext;
  while (true) {
    Matrix<GaloisField> g(k, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      g(i, i) = kf.embed(kf.base->random(rng));
      for (std::size_t j = i + 1; j < dim; ++j) {
        g(i, j) = k.random(rng);
        g(j, i) = kf.conj(g(i, j));
      }
    }
    if (!k.is_zero(determinant(k, g))) return HermitianForm{kf, std::move(g)};
  }
}

std::vector<KVector> hermitian_orthonormalize(const HermitianForm& h) {
  const GaloisField& k = *h.kf.ext;
  const std::size_t n = h.dim();
  if (n < 1 || n > 4) throw Error(ErrorCode::InvalidArgument, "orthonormalization supports dimensions 1-4");
  if (k.is_zero(determinant(k, h.gram))) throw Error(ErrorCode::DegenerateForm, "hermitian form is degenerate");

  std::vector<KVector> space;  // basis of the current complement
  for (std::size_t i = 0; i < n; ++i) {
    KVector e(n, 0);
    e[i] = k.one();
    space.push_back(e);
  }
  std::vector<KVector> out;
  while (!space.empty()) {
    const std::size_t d = space.size();
    std::vector<Elem> c(d, 0);
    std::optional<KVector> found;
    // Canonical order on coefficient tuples, first entry most significant.
    while (!found && next_tuple(c, k.order())) {
      KVector u(n, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < n; ++r) u[r] = k.add(u[r], k.mul(c[i], space[i][r]));
      if (!k.is_zero(h(u, u))) found = u;
    }
    if (!found) throw Error(ErrorCode::DegenerateForm, "no anisotropic vector in the complement");
    const Elem a = h(*found, *found);
    const Elem beta = solve_norm_equation(h.kf, h.kf.restrict_to_base(a));
    const Elem inv = k.inv(beta);
    KVector u = *found;
    for (auto& v : u) v = k.mul(inv, v);
    // Complement: combinations w of the current basis with h(w, u) = 0.
    Matrix<GaloisField> cond(k, 1, d);
    for (std::size_t i = 0; i < d; ++i) cond(0, i) = h(space[i], u);
    std::vector<KVector> next;
    for (const auto& coeffs : nullspace(k, cond)) {
      KVector w(n, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < n; ++r) w[r] = k.add(w[r], k.mul(coeffs[i], space[i][r]));
      next.push_back(w);
    }
    out.push_back(u);
    space = std::move(next);
  }
  return out;
}

Matrix<GaloisField> hermitian_gram(const HermitianForm& h, const std::vector<KVector>& basis) {
  Matrix<GaloisField> g(*h.kf.ext, basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = h(basis[i], basis[j]);
  return g;
}

// ---------------------------------------------------------------------------

SymbolAlgebra::Element SymbolAlgebra::multiply(const Element& a, const Element& b) const {
  const GaloisField& f = *k;
  Element r{};
  for (int m = 0; m < 9; ++m) {
    if (a[m] == 0) continue;
    const int i = m / 3, j = m % 3;
    for (int n = 0; n < 9; ++n) {
      if (b[n] == 0) continue;
      const int kk = n / 3, l = n % 3;
      Elem c = f.mul(f.mul(a[m], b[n]), omega_power(f, omega, j * kk));
      if (i + kk >= 3) c = f.mul(c, alpha);
      if (j + l >= 3) c = f.mul(c, beta);
      const int t = ((i + kk) % 3) * 3 + (j + l) % 3;
      r[t] = f.add(r[t], c);
    }
  }
  return r;
}

Elem SymbolAlgebra::trace(const Element& a) const { return k->mul(k->from_int(3), a[0]); }

SymbolAlgebra::Element SymbolAlgebra::star(const Element& a, const Element& b) const {
  const GaloisField& f = *k;
  const Elem w2 = f.mul(omega, omega);
  const Element ab = multiply(a, b), ba = multiply(b, a);
  Element r;
  for (int m = 0; m < 9; ++m) r[m] = f.sub(f.mul(omega, ab[m]), f.mul(w2, ba[m]));
  // (w - w^2)/3 tr(ab) with tr = 3 (ab)_0.
  r[0] = f.sub(r[0], f.mul(f.sub(omega, w2), ab[0]));
  return r;
}

SymbolAlgebra::Element SymbolAlgebra::tau(const QuadraticExtension& kf, const Element& a) const {
  Element r;
  for (int m = 0; m < 9; ++m) r[m] = k->mul(kf.conj(a[m]), omega_power(*k, omega, (m / 3) * (m % 3)));
  return r;
}

std::array<SymbolAlgebra::Element, 8> SymbolAlgebra::z_basis() const {
  const GaloisField& f = *k;
  const Elem scale = f.inv(f.sub(omega, f.mul(omega, omega)));
  std::array<Element, 8> z{};
  for (int p = 0; p < 8; ++p) {
    const auto [i, j] = kBasis[p];
    z[p] = Element{};
    z[p][i * 3 + j] = f.mul(omega_power(f, omega, -i * j), scale);
  }
  return z;
}

SymbolSkewResult symbol_algebra_skew(std::shared_ptr<const GaloisField> fp, std::shared_ptr<const GaloisField> kp,
                                     Elem omega, Elem alpha, Elem beta) {
  const GaloisField& f = *fp;
  const GaloisField& k = *kp;
  if (f.characteristic() == 3) throw Error(ErrorCode::WrongCharacteristic, "symbol algebras need char != 3");
  if (f.degree() != 1) throw Error(ErrorCode::BadExtension, "F must be a prime field");
  if (omega == k.one() || k.pow(omega, 3) != k.one())
    throw Error(ErrorCode::BadExtension, k.format(omega) + " is not a primitive cube root of 1 in K");
  const bool same = f.descriptor() == k.descriptor();
  std::optional<QuadraticExtension> kf;
  if (!same) {
    try {
      kf = QuadraticExtension::make(fp, kp);
    } catch (const Error& e) {
      throw Error(ErrorCode::BadExtension, e.what());
    }
    if (kf->in_base(omega)) throw Error(ErrorCode::BadExtension, "K must be F[w] with w outside F");
  }
  auto lift = [&](Elem a) { return same ? a : kf->embed(a); };
  auto in_f = [&](Elem a) { return same || kf->in_base(a); };
  auto down = [&](Elem a) { return same ? a : kf->restrict_to_base(a); };

  SymbolAlgebra A{kp, omega, lift(alpha), lift(beta)};
  const auto z = A.z_basis();
  const OkuboAlgebra<GaloisField> target(fp, alpha, beta);
  SymbolSkewResult res;

  if (same) {
    res.dimension = 8;
  } else {
    // F-dimension of {a : a_0 = 0, tau(a) = -a}, coordinates (monomial, t^e).
    Matrix<GaloisField> m(f, 18, 16);
    for (int mon = 1; mon < 9; ++mon)
      for (int e = 0; e < 2; ++e) {
        SymbolAlgebra::Element a{};
        const std::uint32_t unit[2] = {e == 0 ? 1u : 0u, e == 1 ? 1u : 0u};
        a[mon] = k.from_coefficients(unit);
        const auto t = A.tau(*kf, a);
        for (int r = 0; r < 9; ++r) {
          const auto coeffs = k.coefficients(k.add(t[r], a[r]));
          for (int c = 0; c < 2; ++c) m(r * 2 + c, (mon - 1) * 2 + e) = f.element(coeffs[c]);
        }
      }
    res.dimension = 16 - rank(f, m);
    for (int p = 0; p < 8; ++p) {
      const auto t = A.tau(*kf, z[p]);
      for (int r = 0; r < 9; ++r)
        if (t[r] != k.neg(z[p][r])) {
          res.z_basis_skew = false;
          res.failures.push_back("tau(" + basis_label(kBasis[p]) + ") != -" + basis_label(kBasis[p]));
          break;
        }
    }
  }

  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto s = A.star(z[a], z[b]);
      std::array<Elem, 8> coeffs{};
      bool ok = s[0] == 0;
      for (int c = 0; c < 8 && ok; ++c) {
        const auto [i, j] = kBasis[c];
        const Elem v = k.div(s[i * 3 + j], z[c][i * 3 + j]);
        if (!in_f(v)) {
          ok = false;
          break;
        }
        coeffs[c] = down(v);
      }
      const std::string where = basis_label(kBasis[a]) + " * " + basis_label(kBasis[b]);
      if (!ok) {
        res.closed = false;
        res.matches_okubo = false;
        res.failures.push_back(where + " leaves the F-span of the z basis");
        continue;
      }
      res.products[a][b] = coeffs;
      const auto expect = target.multiply(target.basis(a), target.basis(b));
      if (expect != coeffs) {
        res.matches_okubo = false;
        res.failures.push_back(where + " differs from " + target.name());
      }
      const Elem pol = k.neg(A.trace(A.multiply(z[a], z[b])));
      if (!in_f(pol) || down(pol) != target.polar(target.basis(a), target.basis(b))) {
        res.matches_okubo = false;
        res.failures.push_back("pairing " + where + " differs from " + target.name());
      }
    }
  return res;
}

}  // namespace okubo

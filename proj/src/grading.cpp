#include "okubo/grading.hpp"

#include <set>

namespace okubo {

int degree_position(int i, int j) {
  i = ((i % 3) + 3) % 3;
  j = ((j % 3) + 3) % 3;
  if (i == 0 && j == 0) return 0;
  return basis_position(i, j) + 1;
}

BasisIndex degree_add(BasisIndex a, BasisIndex b) { return {(a.i + b.i) % 3, (a.j + b.j) % 3}; }

template <ExactField F>
PhiMap phi_gamma(const OkuboAlgebra<F>& a) {
  const F& f = a.field();
  PhiMap phi;
  phi.classes[0] = cube_class(f, f.one());
  for (int p = 0; p < 8; ++p) {
    const auto u = a.basis(p);
    phi.classes[p + 1] = cube_class(f, a.polar(u, a.multiply(u, u)));
  }
  return phi;
}

std::vector<std::pair<BasisIndex, BasisIndex>> phi_homomorphism_failures(const PhiMap& phi) {
  std::vector<std::pair<BasisIndex, BasisIndex>> out;
  for (const auto& g : kDegrees)
    for (const auto& h : kDegrees)
      if (!(phi.at(degree_add(g, h)) == phi.at(g) * phi.at(h))) out.emplace_back(g, h);
  return out;
}

int phi_image_rank(const PhiMap& phi) {
  std::set<CubeClass> image(phi.classes.begin(), phi.classes.end());
  switch (image.size()) {
    case 1: return 0;
    case 3: return 1;
    case 9: return 2;
    default:
      throw Error(ErrorCode::StructureMismatch, "Phi image of size " + std::to_string(image.size()));
  }
}

template <ExactField F>
std::vector<BasisIndex> square_identity_failures(const OkuboAlgebra<F>& a) {
  std::vector<BasisIndex> out;
  for (int p = 0; p < 8; ++p) {
    const auto u = a.basis(p);
    const auto uu = a.multiply(u, u);
    if (!a.equal(a.multiply(uu, uu), a.scale(a.polar(u, uu), u))) out.push_back(kBasis[p]);
  }
  return out;
}

std::string to_string(NormalFormKind k) {
  switch (k) {
    case NormalFormKind::Split: return "split";
    case NormalFormKind::OneParameter: return "one_parameter";
    case NormalFormKind::TwoParameter: return "two_parameter";
    case NormalFormKind::TwoParameterSwapped: return "two_parameter_swapped";
  }
  return "?";
}

template <ExactField F>
NormalForm<F> classify_with_generators(const OkuboAlgebra<F>& a, BasisIndex x_degree, BasisIndex y_degree) {
  const F& f = a.field();
  const int px = basis_position(x_degree), py = basis_position(y_degree);
  if (px < 0 || py < 0) throw Error(ErrorCode::InvalidArgument, "generator degree (0,0)");
  const auto phi = phi_gamma(a);
  if (phi_image_rank(phi) != 2) throw Error(ErrorCode::WrongRank, "explicit generators need a rank-2 image");
  const auto cx_class = phi.at(x_degree), cy_class = phi.at(y_degree);
  if (cx_class.is_identity() || cy_class == cx_class || cy_class == cx_class * cx_class || cy_class.is_identity())
    throw Error(ErrorCode::InvalidArgument, "generator classes do not span the image");
  const auto x = a.basis(px), y = a.basis(py);
  const auto cx = a.polar(x, a.multiply(x, x));
  const auto cy = a.polar(y, a.multiply(y, y));
  NormalForm<F> nf;
  nf.x_degree = x_degree;
  nf.y_degree = y_degree;
  if (!a.is_zero(a.multiply(x, y))) {
    nf.kind = NormalFormKind::TwoParameter;
    nf.first = cx;
    nf.second = cy;
  } else if (!a.is_zero(a.multiply(y, x))) {
    nf.kind = NormalFormKind::TwoParameterSwapped;
    nf.first = cy;
    nf.second = cx;
  } else {
    throw Error(ErrorCode::StructureMismatch, "x*y = y*x = 0 for generators");
  }
  nf.text = to_string(nf.kind) + "(" + f.format(nf.first) + "," + f.format(nf.second) + ")";
  return nf;
}

template <ExactField F>
NormalForm<F> classify_grading(const OkuboAlgebra<F>& a) {
  const F& f = a.field();
  const auto phi = phi_gamma(a);
  const int r = phi_image_rank(phi);
  NormalForm<F> nf;
  nf.first = f.one();
  nf.second = f.one();
  if (r == 0) {
    nf.x_degree = kBasis[0];
    nf.y_degree = kBasis[2];
    nf.text = "split";
    return nf;
  }
  int first = -1;
  for (int p = 0; p < 8 && first < 0; ++p)
    if (!phi.classes[p + 1].is_identity()) first = p;
  if (r == 1) {
    const auto u = a.basis(first);
    nf.kind = NormalFormKind::OneParameter;
    nf.second = a.polar(u, a.multiply(u, u));
    nf.x_degree = kBasis[first];
    nf.y_degree = kBasis[first];
    nf.text = "one_parameter(" + f.format(nf.second) + ")";
    return nf;
  }
  const auto cx = phi.classes[first + 1];
  for (int p = 0; p < 8; ++p) {
    const auto& c = phi.classes[p + 1];
    if (c.is_identity() || c == cx || c == cx * cx) continue;
    return classify_with_generators(a, kBasis[first], kBasis[p]);
  }
  throw Error(ErrorCode::StructureMismatch, "rank-2 image without a second generator");
}

MatrixGroup2 weyl_group_via_formula(const PhiMap& phi) {
  std::vector<Mat2F3> keep;
  for (const auto& m : sl23_elements()) {
    bool ok = true;
    for (const auto& h : kDegrees) {
      const auto fh = m.apply(h.i, h.j);
      if (!(phi.at({fh[0], fh[1]}) == phi.at(h))) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(m);
  }
  return generate_matrix_group(keep);
}

template PhiMap phi_gamma(const OkuboAlgebra<GaloisField>&);
template PhiMap phi_gamma(const OkuboAlgebra<RationalField>&);
template std::vector<BasisIndex> square_identity_failures(const OkuboAlgebra<GaloisField>&);
template std::vector<BasisIndex> square_identity_failures(const OkuboAlgebra<RationalField>&);
template NormalForm<GaloisField> classify_grading(const OkuboAlgebra<GaloisField>&);
template NormalForm<RationalField> classify_grading(const OkuboAlgebra<RationalField>&);
template NormalForm<GaloisField> classify_with_generators(const OkuboAlgebra<GaloisField>&, BasisIndex, BasisIndex);
template NormalForm<RationalField> classify_with_generators(const OkuboAlgebra<RationalField>&, BasisIndex,
                                                           BasisIndex);

}  // namespace okubo

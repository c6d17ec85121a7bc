#include "okubo/algebra.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace okubo {

int basis_position(int i, int j) {
  i = ((i % 3) + 3) % 3;
  j = ((j % 3) + 3) % 3;
  for (int p = 0; p < 8; ++p)
    if (kBasis[p].i == i && kBasis[p].j == j) return p;
  return -1;
}

std::string basis_label(BasisIndex b) {
  return "z̃_{" + std::to_string(b.i) + "," + std::to_string(b.j) + "}";
}

StructureTerm structure_product(BasisIndex a, BasisIndex b) {
  const int delta = (((a.i * b.j - a.j * b.i) % 3) + 3) % 3;
  const int si = a.i + b.i;
  const int sj = a.j + b.j;
  StructureTerm t;
  if (delta == 2 || (si % 3 == 0 && sj % 3 == 0)) return t;
  t.sign = delta == 1 ? -1 : 1;
  t.alpha_carry = si >= 3 ? 1 : 0;
  t.beta_carry = sj >= 3 ? 1 : 0;
  t.target = BasisIndex{si % 3, sj % 3};
  return t;
}

StructureTable structure_table() {
  StructureTable t;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = structure_product(kBasis[a], kBasis[b]);
  return t;
}

namespace {

BasisIndex parse_index(const std::string& tok) {
  int i = -1, j = -1;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream ss(tok);
  if (!(ss >> c1 >> i >> c2 >> j >> c3) || c1 != '(' || c2 != ',' || c3 != ')' || basis_position(i, j) < 0 ||
      i < 0 || i > 2 || j < 0 || j > 2)
    throw Error(ErrorCode::ParseError, "bad basis index '" + tok + "'");
  return {i, j};
}

std::string index_text(BasisIndex b) { return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")"; }

}  // namespace

StructureTable parse_structure_table(std::istream& in) {
  StructureTable t;
  std::set<std::pair<int, int>> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string sa, sb, starget;
    int sign = 0, ac = 0, bc = 0;
    if (!(ss >> sa)) continue;
    if (!(ss >> sb >> sign >> ac >> bc >> starget))
      throw Error(ErrorCode::ParseError, "short structure record: " + line);
    const int pa = basis_position(parse_index(sa));
    const int pb = basis_position(parse_index(sb));
    if (!seen.insert({pa, pb}).second) throw Error(ErrorCode::ParseError, "duplicate record: " + line);
    StructureTerm term;
    term.sign = sign;
    term.alpha_carry = ac;
    term.beta_carry = bc;
    if (starget != "-") term.target = parse_index(starget);
    if ((sign == 0) != !term.target.has_value() || sign < -1 || sign > 1 || ac < 0 || ac > 1 || bc < 0 || bc > 1)
      throw Error(ErrorCode::ParseError, "inconsistent record: " + line);
    t[pa][pb] = term;
  }
  if (seen.size() != 64) throw Error(ErrorCode::ParseError, "expected 64 records, got " + std::to_string(seen.size()));
  return t;
}

StructureTable load_structure_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return parse_structure_table(in);
}

std::string format_structure_table(const StructureTable& table) {
  std::ostringstream out;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& t = table[a][b];
      out << index_text(kBasis[a]) << ' ' << index_text(kBasis[b]) << ' ' << t.sign << ' ' << t.alpha_carry << ' '
          << t.beta_carry << ' ' << (t.target ? index_text(*t.target) : std::string("-")) << '\n';
    }
  return out.str();
}

// ---------------------------------------------------------------------------

template <ExactField F>
OkuboAlgebra<F>::OkuboAlgebra(std::shared_ptr<const F> field, Elem alpha, Elem beta)
    : field_(std::move(field)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  const F& f = *field_;
  if (f.is_zero(alpha_) || f.is_zero(beta_)) throw Error(ErrorCode::ZeroElement, "alpha and beta must be nonzero");
  const auto table = structure_table();
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& t = table[a][b];
      Entry e;
      e.coeff = f.zero();
      if (t.target) {
        e.target = basis_position(*t.target);
        Elem c = t.sign < 0 ? f.neg(f.one()) : f.one();
        if (t.alpha_carry) c = f.mul(c, alpha_);
        if (t.beta_carry) c = f.mul(c, beta_);
        e.coeff = c;
      }
      entries_[a * 8 + b] = e;
    }
  for (int a = 0; a < 8; ++a) {
    const auto b = kBasis[a];
    opposite_[a] = basis_position(-b.i, -b.j);
    Elem c = f.one();
    if (b.i != 0) c = f.mul(c, alpha_);
    if (b.j != 0) c = f.mul(c, beta_);
    pairing_[a] = c;
  }
}

template <ExactField F>
std::string OkuboAlgebra<F>::name() const {
  const F& f = *field_;
  return "O_{" + f.format(alpha_) + "," + f.format(beta_) + "} over " + f.descriptor().name();
}

template <ExactField F>
typename OkuboAlgebra<F>::Vector OkuboAlgebra<F>::zero() const {
  Vector v;
  v.fill(field_->zero());
  return v;
}

template <ExactField F>
typename OkuboAlgebra<F>::Vector OkuboAlgebra<F>::basis(int position) const {
  Vector v = zero();
  v[position] = field_->one();
  return v;
}

template <ExactField F>
typename OkuboAlgebra<F>::Vector OkuboAlgebra<F>::random(std::mt19937_64& rng) const {
  Vector v;
  for (auto& c : v) c = field_->random(rng);
  return v;
}

template <ExactField F>
typename OkuboAlgebra<F>::Vector OkuboAlgebra<F>::add(const Vector& x, const Vector& y) const {
  Vector v;
  for (int i = 0; i < 8; ++i) v[i] = field_->add(x[i], y[i]);
  return v;
}

template <ExactField F>
typename OkuboAlgebra<F>::Vector OkuboAlgebra<F>::sub(const Vector& x, const Vector& y) const {
  Vector v;
  for (int i = 0; i < 8; ++i) v[i] = field_->sub(x[i], y[i]);
  return v;
}

template <ExactField F>
typename OkuboAlgebra<F>::Vector OkuboAlgebra<F>::scale(const Elem& c, const Vector& x) const {
  Vector v;
  for (int i = 0; i < 8; ++i) v[i] = field_->mul(c, x[i]);
  return v;
}

template <ExactField F>
bool OkuboAlgebra<F>::equal(const Vector& x, const Vector& y) const {
  for (int i = 0; i < 8; ++i)
    if (!field_->eq(x[i], y[i])) return false;
  return true;
}

template <ExactField F>
bool OkuboAlgebra<F>::is_zero(const Vector& x) const {
  for (const auto& c : x)
    if (!field_->is_zero(c)) return false;
  return true;
}

template <ExactField F>
typename OkuboAlgebra<F>::Vector OkuboAlgebra<F>::multiply(const Vector& x, const Vector& y) const {
  const F& f = *field_;
  Vector out = zero();
  for (int a = 0; a < 8; ++a) {
    if (f.is_zero(x[a])) continue;
    for (int b = 0; b < 8; ++b) {
      const Entry& e = entries_[a * 8 + b];
      if (e.target < 0 || f.is_zero(y[b])) continue;
      out[e.target] = f.add(out[e.target], f.mul(e.coeff, f.mul(x[a], y[b])));
    }
  }
  return out;
}

template <ExactField F>
typename OkuboAlgebra<F>::Elem OkuboAlgebra<F>::norm(const Vector& x) const {
  // n = alpha c10 c20 + beta c01 c02 + alpha beta (c11 c22 + c12 c21)
  const F& f = *field_;
  Elem n = f.zero();
  for (int a = 0; a < 8; a += 2) n = f.add(n, f.mul(pairing_[a], f.mul(x[a], x[a + 1])));
  return n;
}

template <ExactField F>
typename OkuboAlgebra<F>::Elem OkuboAlgebra<F>::polar(const Vector& x, const Vector& y) const {
  const F& f = *field_;
  Elem n = f.zero();
  for (int a = 0; a < 8; ++a) {
    if (f.is_zero(x[a])) continue;
    n = f.add(n, f.mul(pairing_[a], f.mul(x[a], y[opposite_[a]])));
  }
  return n;
}

template <ExactField F>
Matrix<F> OkuboAlgebra<F>::gram() const {
  Matrix<F> g(*field_, 8, 8);
  for (int a = 0; a < 8; ++a) g(a, opposite_[a]) = pairing_[a];
  return g;
}

template <ExactField F>
Matrix<F> OkuboAlgebra<F>::left_multiplication(const Vector& x) const {
  Matrix<F> m(*field_, 8, 8);
  for (int b = 0; b < 8; ++b) {
    const auto col = multiply(x, basis(b));
    for (int r = 0; r < 8; ++r) m(r, b) = col[r];
  }
  return m;
}

template <ExactField F>
Matrix<F> OkuboAlgebra<F>::right_multiplication(const Vector& x) const {
  Matrix<F> m(*field_, 8, 8);
  for (int b = 0; b < 8; ++b) {
    const auto col = multiply(basis(b), x);
    for (int r = 0; r < 8; ++r) m(r, b) = col[r];
  }
  return m;
}

template <ExactField F>
std::string OkuboAlgebra<F>::format(const Vector& x) const {
  std::string out;
  for (int a = 0; a < 8; ++a) {
    if (field_->is_zero(x[a])) continue;
    if (!out.empty()) out += " + ";
    if (!field_->eq(x[a], field_->one())) out += "(" + field_->format(x[a]) + ")·";
    out += basis_label(kBasis[a]);
  }
  return out.empty() ? "0" : out;
}

template class OkuboAlgebra<GaloisField>;
template class OkuboAlgebra<RationalField>;

// ---------------------------------------------------------------------------

std::string to_string(IdempotentClass c) {
  switch (c) {
    case IdempotentClass::Quaternionic: return "quaternionic";
    case IdempotentClass::Quadratic: return "quadratic";
    case IdempotentClass::Singular: return "singular";
  }
  return "?";
}

bool next_vector(const GaloisField& f, std::array<GaloisField::Elem, 8>& x) {
  // Position 0 is the most significant digit, so the order is lexicographic.
  for (int i = 7; i >= 0; --i) {
    if (x[i] + 1 < f.order()) {
      ++x[i];
      return true;
    }
    x[i] = 0;
  }
  return false;
}

std::vector<OkuboAlgebra<GaloisField>::Vector> find_idempotents(const OkuboAlgebra<GaloisField>& a) {
  const auto& f = a.field();
  if (f.order() > 9) throw Error(ErrorCode::FieldTooLarge, "idempotent search needs q <= 9");
  std::vector<OkuboAlgebra<GaloisField>::Vector> out;
  auto x = a.zero();
  while (next_vector(f, x))
    if (a.equal(a.multiply(x, x), x)) out.push_back(x);
  return out;
}

IdempotentInfo classify_idempotent(const OkuboAlgebra<GaloisField>& a, const OkuboAlgebra<GaloisField>::Vector& e) {
  const auto& f = a.field();
  if (f.characteristic() != 3) throw Error(ErrorCode::WrongCharacteristic, "idempotent taxonomy needs char 3");
  if (a.is_zero(e) || !a.equal(a.multiply(e, e), e)) throw Error(ErrorCode::NotIdempotent, a.format(e));
  Matrix<GaloisField> commutator(f, 8, 8);
  const auto left = a.left_multiplication(e);
  const auto right = a.right_multiplication(e);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) commutator(r, c) = f.sub(left(r, c), right(r, c));
  const auto centralizer = nullspace(f, commutator);
  const std::size_t d = centralizer.size();
  Matrix<GaloisField> gram(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      OkuboAlgebra<GaloisField>::Vector u, v;
      std::copy(centralizer[i].begin(), centralizer[i].end(), u.begin());
      std::copy(centralizer[j].begin(), centralizer[j].end(), v.begin());
      gram(i, j) = a.polar(u, v);
    }
  const std::size_t r = rank(f, gram);
  IdempotentInfo info{IdempotentClass::Singular, d, r};
  switch (r) {
    case 4: info.cls = IdempotentClass::Quaternionic; break;
    case 2: info.cls = IdempotentClass::Quadratic; break;
    case 1: info.cls = IdempotentClass::Singular; break;
    default:
      throw Error(ErrorCode::UnexpectedRank, "centralizer norm rank " + std::to_string(r) + " for " + a.format(e));
  }
  return info;
}

}  // namespace okubo

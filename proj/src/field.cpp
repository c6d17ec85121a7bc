#include "okubo/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace okubo {
namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = lead * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, std::uint32_t p) { return poly_mod(a, d, p).empty(); }

// Exhaustive search for a monic factor of degree 1..deg/2.
bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly f(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[d] = 1;
      if (divides(f, m, p)) return false;
    }
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::string trim_copy(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t FieldDescriptor::order() const {
  if (kind == FieldKind::Rationals) return 0;
  return ipow(p, k);
}

std::string FieldDescriptor::name() const {
  if (kind == FieldKind::Rationals) return "Q";
  return "GF(" + std::to_string(order()) + ")";
}

std::string FieldDescriptor::modulus_text() const {
  if (kind != FieldKind::Extension) return "";
  std::string out;
  for (std::size_t i = modulus.size(); i-- > 0;) {
    if (modulus[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || modulus[i] != 1) out += std::to_string(modulus[i]);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

FieldDescriptor make_field(FieldKind kind, std::uint32_t p, std::uint32_t k,
                           std::vector<std::uint32_t> modulus) {
  FieldDescriptor d;
  d.kind = kind;
  switch (kind) {
    case FieldKind::Rationals:
      if (p != 0 || !modulus.empty())
        throw Error(ErrorCode::InvalidArgument, "the rationals take no characteristic or modulus");
      return d;
    case FieldKind::Prime:
      if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p));
      if (k != 1 || !modulus.empty())
        throw Error(ErrorCode::InvalidArgument, "prime fields have degree 1 and no modulus");
      if (p > GaloisField::kMaxOrder) throw Error(ErrorCode::FieldTooLarge, std::to_string(p));
      d.p = p;
      d.k = 1;
      return d;
    case FieldKind::Extension:
      break;
  }
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p));
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 2");
  if (modulus.size() != k + 1)
    throw Error(ErrorCode::InvalidArgument, "modulus must have k+1 coefficients");
  for (auto c : modulus)
    if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient not reduced mod p");
  if (modulus.back() != 1) throw Error(ErrorCode::InvalidArgument, "modulus must be monic");
  if (ipow(p, k) > GaloisField::kMaxOrder)
    throw Error(ErrorCode::FieldTooLarge, std::to_string(p) + "^" + std::to_string(k));
  d.p = p;
  d.k = k;
  d.modulus = std::move(modulus);
  if (!is_irreducible(d.modulus, p)) throw Error(ErrorCode::ReducibleModulus, d.modulus_text());
  return d;
}

FieldDescriptor standard_field(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "field order must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  if (q > GaloisField::kMaxOrder) throw Error(ErrorCode::FieldTooLarge, std::to_string(q));
  const auto p32 = static_cast<std::uint32_t>(p);
  if (k == 1) return make_field(FieldKind::Prime, p32);
  switch (q) {
    case 4: return make_field(FieldKind::Extension, 2, 2, {1, 1, 1});
    case 9: return make_field(FieldKind::Extension, 3, 2, {1, 0, 1});
    case 25: return make_field(FieldKind::Extension, 5, 2, {2, 0, 1});
    case 49: return make_field(FieldKind::Extension, 7, 2, {1, 0, 1});
    default: break;
  }
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly m(k + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      m[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p32)) return make_field(FieldKind::Extension, p32, k, m);
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible modulus found");
}

FieldDescriptor parse_field_spec(std::string_view spec) {
  std::string s = trim_copy(spec);
  if (s == "Q" || s == "QQ" || s == "rationals") return make_field(FieldKind::Rationals);
  if (s.size() > 4 && (s.rfind("GF(", 0) == 0 || s.rfind("gf(", 0) == 0) && s.back() == ')')
    s = s.substr(3, s.size() - 4);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::ParseError, "unrecognised field spec '" + std::string(spec) + "'");
  if (s.size() > 6) throw Error(ErrorCode::FieldTooLarge, s);
  return standard_field(std::stoull(s));
}

// ---------------------------------------------------------------------------
// GaloisField

GaloisField::GaloisField(FieldDescriptor descriptor) : desc_(std::move(descriptor)) {
  if (!desc_.finite()) throw Error(ErrorCode::InvalidArgument, "GaloisField needs a finite descriptor");
  q_ = static_cast<std::uint32_t>(desc_.order());
  const std::uint32_t p = desc_.p;

  // Slow polynomial product, used only to build the tables.
  auto slow_mul = [&](Elem a, Elem b) -> Elem {
    if (desc_.k == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
    auto ca = coefficients(a);
    auto cb = coefficients(b);
    Poly prod(ca.size() + cb.size(), 0);
    for (std::size_t i = 0; i < ca.size(); ++i)
      for (std::size_t j = 0; j < cb.size(); ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p);
    auto r = poly_mod(prod, desc_.modulus, p);
    r.resize(desc_.k, 0);
    return from_coefficients(r);
  };

  neg_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    auto c = coefficients(a);
    for (auto& x : c) x = (p - x) % p;
    neg_table_[a] = from_coefficients(c);
  }
  if (desc_.k > 1 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
  }

  const std::uint32_t n = q_ - 1;
  for (Elem g = 1; g < q_; ++g) {
    std::uint32_t ord = 1;
    Elem x = g;
    while (x != 1) {
      x = slow_mul(x, g);
      ++ord;
    }
    if (ord == n) {
      generator_ = g;
      break;
    }
  }
  exp_.resize(2 * static_cast<std::size_t>(n));
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = x;
    exp_[i + n] = x;
    log_[x] = i;
    x = slow_mul(x, generator_);
  }
}

std::shared_ptr<const GaloisField> GaloisField::create(const FieldDescriptor& descriptor) {
  return std::make_shared<const GaloisField>(descriptor);
}

GaloisField::Elem GaloisField::add_digits(Elem a, Elem b) const {
  const std::uint32_t p = desc_.p;
  Elem out = 0;
  Elem place = 1;
  for (std::uint32_t i = 0; i < desc_.k; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + desc_.name());
  const std::uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % n)) % n];
}

std::uint32_t GaloisField::log(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "log of zero");
  return log_[a];
}

GaloisField::Elem GaloisField::from_int(long long v) const {
  const long long p = desc_.p;
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> GaloisField::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(desc_.k, 0);
  for (std::uint32_t i = 0; i < desc_.k; ++i) {
    c[i] = a % desc_.p;
    a /= desc_.p;
  }
  return c;
}

GaloisField::Elem GaloisField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  Elem out = 0;
  Elem place = 1;
  for (std::size_t i = 0; i < desc_.k; ++i) {
    const std::uint32_t c = i < coeffs.size() ? coeffs[i] % desc_.p : 0;
    out += c * place;
    place *= desc_.p;
  }
  return out;
}

std::string GaloisField::format(Elem a) const {
  if (a == 0) return "0";
  auto c = coefficients(a);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

GaloisField::Elem GaloisField::parse(std::string_view text) const {
  const std::string s = trim_copy(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty field element");
  const std::uint32_t p = desc_.p;
  Poly acc;
  std::size_t i = 0;
  auto fail = [&]() { throw Error(ErrorCode::ParseError, "cannot parse '" + s + "' in " + desc_.name()); };
  auto read_int = [&](std::uint64_t& out) {
    const std::size_t start = i;
    out = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      out = out * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (out > 1000000000000ULL) fail();
      ++i;
    }
    return i > start;
  };
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      fail();
    }
    first = false;
    std::uint64_t coeff = 0;
    const bool has_coeff = read_int(coeff);
    if (!has_coeff) coeff = 1;
    std::uint64_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) fail();
      ++i;
      if (i >= s.size() || s[i] != 't') fail();
    }
    if (i < s.size() && s[i] == 't') {
      if (desc_.k == 1) fail();
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_int(power)) fail();
      }
    } else if (!has_coeff) {
      fail();
    }
    if (acc.size() <= power) acc.resize(power + 1, 0);
    std::uint32_t c = static_cast<std::uint32_t>(coeff % p);
    if (negative) c = (p - c) % p;
    acc[power] = (acc[power] + c) % p;
  }
  if (desc_.k > 1) acc = poly_mod(acc, desc_.modulus, p);
  return from_coefficients(acc);
}

GaloisField::Elem GaloisField::random(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<Elem>(0, q_ - 1)(rng);
}

// ---------------------------------------------------------------------------
// RationalField

bool RationalField::less(const Elem& a, const Elem& b) const {
  const BigInt na = boost::multiprecision::numerator(a), nb = boost::multiprecision::numerator(b);
  if (na != nb) return na < nb;
  return boost::multiprecision::denominator(a) < boost::multiprecision::denominator(b);
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q");
  return Rational(1) / a;
}

RationalField::Elem RationalField::pow(const Elem& a, std::uint64_t e) const {
  Rational r(1);
  for (std::uint64_t i = 0; i < e; ++i) r *= a;
  return r;
}

std::string RationalField::format(const Elem& a) const {
  const BigInt num = boost::multiprecision::numerator(a);
  const BigInt den = boost::multiprecision::denominator(a);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RationalField::Elem RationalField::parse(std::string_view text) const {
  const std::string s = trim_copy(text);
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (t.size() <= start) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto to_big = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return BigInt(t);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorCode::ParseError, "cannot parse '" + s + "' in Q");
    return Rational(to_big(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "cannot parse '" + s + "' in Q");
  const BigInt d = to_big(den);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  return Rational(to_big(num), d);
}

RationalField::Elem RationalField::random(std::mt19937_64& rng) const {
  const int num = std::uniform_int_distribution<int>(-9, 9)(rng);
  const int den = std::uniform_int_distribution<int>(1, 5)(rng);
  return Rational(num, den);
}

// ---------------------------------------------------------------------------
// Cube roots and cube classes

std::optional<GaloisField::Elem> primitive_cube_root(const GaloisField& f) {
  if ((f.order() - 1) % 3 != 0) return std::nullopt;
  for (std::uint32_t i = 2; i < f.order(); ++i) {
    const auto x = f.element(i);
    if (f.pow(x, 3) == f.one()) return x;
  }
  return std::nullopt;
}

CubeClass CubeClass::finite(int exponent, bool group_nontrivial) {
  CubeClass c;
  c.nontrivial_group_ = group_nontrivial;
  c.exponent_ = group_nontrivial ? ((exponent % 3) + 3) % 3 : 0;
  return c;
}

CubeClass CubeClass::rational(std::map<std::uint64_t, int> prime_exponents) {
  CubeClass c;
  c.rational_ = true;
  for (auto& [p, e] : prime_exponents) {
    const int r = ((e % 3) + 3) % 3;
    if (r != 0) c.primes_[p] = r;
  }
  return c;
}

bool CubeClass::is_identity() const { return rational_ ? primes_.empty() : exponent_ == 0; }

CubeClass CubeClass::operator*(const CubeClass& other) const {
  if (rational_ != other.rational_) throw Error(ErrorCode::MixedFields, "cube classes of different fields");
  if (!rational_) return finite(exponent_ + other.exponent_, nontrivial_group_ || other.nontrivial_group_);
  auto merged = primes_;
  for (const auto& [p, e] : other.primes_) merged[p] += e;
  return rational(std::move(merged));
}

CubeClass CubeClass::inverse() const {
  if (!rational_) return finite(-exponent_, nontrivial_group_);
  auto neg = primes_;
  for (auto& [p, e] : neg) e = -e;
  return rational(std::move(neg));
}

bool CubeClass::operator<(const CubeClass& other) const {
  return std::tie(rational_, exponent_, primes_) < std::tie(other.rational_, other.exponent_, other.primes_);
}

BigInt CubeClass::cube_free_value() const {
  BigInt v = 1;
  for (const auto& [p, e] : primes_)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

CubeClass cube_class(const GaloisField& f, GaloisField::Elem a) {
  if (f.is_zero(a)) throw Error(ErrorCode::ZeroElement, "cube class of zero");
  const auto omega = primitive_cube_root(f);
  if (!omega) return CubeClass::finite(0, false);
  const auto c = f.pow(a, (f.order() - 1) / 3);
  if (c == f.one()) return CubeClass::finite(0, true);
  if (c == *omega) return CubeClass::finite(1, true);
  return CubeClass::finite(2, true);
}

namespace {

constexpr std::uint64_t kTrialDivisionLimit = 1000000;

// Adds sign * v_p(n) for every prime p | n into `out`.
void factor_into(BigInt n, int sign, std::map<std::uint64_t, int>& out) {
  for (std::uint64_t d = 2; d <= kTrialDivisionLimit; ++d) {
    if (BigInt(d) * d > n) break;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e % 3 != 0) out[d] += sign * e;
  }
  if (n == 1) return;
  const BigInt limit = BigInt(kTrialDivisionLimit) * kTrialDivisionLimit;
  if (n > limit)
    throw Error(ErrorCode::FactorizationOverflow,
                "cofactor " + n.str() + " exceeds the trial-division bound 10^6");
  out[static_cast<std::uint64_t>(n)] += sign;
}

}  // namespace

CubeClass cube_class(const RationalField&, const Rational& a) {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "cube class of zero");
  BigInt num = boost::multiprecision::numerator(a);
  if (num < 0) num = -num;
  const BigInt den = boost::multiprecision::denominator(a);
  std::map<std::uint64_t, int> exps;
  factor_into(num, 1, exps);
  factor_into(den, -1, exps);
  return CubeClass::rational(std::move(exps));
}

std::string cube_class_text(const GaloisField& f, const CubeClass& c) {
  for (std::uint32_t i = 1; i < f.order(); ++i)
    if (cube_class(f, f.element(i)) == c) return f.format(f.element(i));
  return "?";
}

std::string cube_class_text(const RationalField&, const CubeClass& c) { return c.cube_free_value().str(); }

std::optional<BigInt> integer_cube_root(const BigInt& a) {
  if (a < 0) {
    auto r = integer_cube_root(-a);
    if (!r) return std::nullopt;
    return BigInt(-*r);
  }
  if (a < 2) return a;
  // Newton iteration from above.
  const unsigned bits = boost::multiprecision::msb(a) + 1;
  BigInt x = BigInt(1) << ((bits + 2) / 3 + 1);
  while (true) {
    BigInt y = (2 * x + a / (x * x)) / 3;
    if (y >= x) break;
    x = y;
  }
  while (x * x * x > a) --x;
  while ((x + 1) * (x + 1) * (x + 1) <= a) ++x;
  if (x * x * x != a) return std::nullopt;
  return x;
}

std::optional<Rational> rational_cube_root(const Rational& a) {
  auto n = integer_cube_root(boost::multiprecision::numerator(a));
  auto d = integer_cube_root(boost::multiprecision::denominator(a));
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

std::optional<GaloisField::Elem> cube_root(const GaloisField& f, GaloisField::Elem a) {
  for (std::uint32_t i = 0; i < f.order(); ++i) {
    const auto c = f.element(i);
    if (f.pow(c, 3) == a) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Quadratic extensions

QuadraticExtension QuadraticExtension::make(std::shared_ptr<const GaloisField> base,
                                            std::shared_ptr<const GaloisField> ext) {
  if (!base || !ext || base->degree() != 1 || ext->degree() != 2 ||
      base->characteristic() != ext->characteristic())
    throw Error(ErrorCode::NotQuadraticExtension,
                (ext ? ext->descriptor().name() : std::string("?")) + "/" +
                    (base ? base->descriptor().name() : std::string("?")));
  return QuadraticExtension{std::move(base), std::move(ext)};
}

GaloisField::Elem QuadraticExtension::embed(GaloisField::Elem a) const {
  // The prime field sits inside K as the constant polynomials.
  return ext->from_int(static_cast<long long>(base->index(a)));
}

GaloisField::Elem QuadraticExtension::restrict_to_base(GaloisField::Elem a) const {
  if (!in_base(a)) throw Error(ErrorCode::BadExtension, ext->format(a) + " is not in the base field");
  return base->element(ext->coefficients(a)[0]);
}

GaloisField::Elem solve_norm_equation(const QuadraticExtension& kf, GaloisField::Elem alpha) {
  if (kf.base->is_zero(alpha)) throw Error(ErrorCode::ZeroElement, "norm equation with alpha = 0");
  const auto target = kf.embed(alpha);
  const auto& K = *kf.ext;
  for (std::uint32_t i = 1; i < K.order(); ++i) {
    const auto b = K.element(i);
    if (K.mul(b, kf.conj(b)) == target) return b;
  }
  throw Error(ErrorCode::BadExtension, "norm map not surjective");
}

// ---------------------------------------------------------------------------
// Dynamic handles

Field Field::make(const FieldDescriptor& descriptor) {
  Field f;
  f.desc_ = descriptor;
  if (descriptor.finite())
    f.impl_ = GaloisField::create(descriptor);
  else
    f.impl_ = RationalField::create();
  return f;
}

FieldElement FieldElement::parse(const Field& field, std::string_view text) {
  return FieldElement(field, field.visit([&](const auto& f) -> Value { return f.parse(text); }));
}

std::string FieldElement::to_string() const {
  return field_.visit([&](const auto& f) -> std::string {
    using E = typename std::decay_t<decltype(f)>::Elem;
    return f.format(std::get<E>(value_));
  });
}

bool FieldElement::is_zero() const {
  return field_.visit([&](const auto& f) {
    using E = typename std::decay_t<decltype(f)>::Elem;
    return f.is_zero(std::get<E>(value_));
  });
}

namespace {

void check_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_as(b.field()))
    throw Error(ErrorCode::MixedFields,
                a.field().descriptor().name() + " vs " + b.field().descriptor().name());
}

}  // namespace

FieldElement field_arith(FieldOp op, const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  auto value = a.field().visit([&](const auto& f) -> FieldElement::Value {
    using E = typename std::decay_t<decltype(f)>::Elem;
    const E& x = std::get<E>(a.value());
    const E& y = std::get<E>(b.value());
    switch (op) {
      case FieldOp::Add: return f.add(x, y);
      case FieldOp::Sub: return f.sub(x, y);
      case FieldOp::Mul: return f.mul(x, y);
      case FieldOp::Div: return f.div(x, y);
      case FieldOp::Neg: return f.neg(x);
      case FieldOp::Inv: return f.inv(x);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown field op");
  });
  return FieldElement(a.field(), std::move(value));
}

FieldElement field_arith(FieldOp op, const FieldElement& a) {
  if (op != FieldOp::Neg && op != FieldOp::Inv)
    throw Error(ErrorCode::InvalidArgument, "binary op needs two operands");
  return field_arith(op, a, a);
}

bool field_equal(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return a.field().visit([&](const auto& f) {
    using E = typename std::decay_t<decltype(f)>::Elem;
    return f.eq(std::get<E>(a.value()), std::get<E>(b.value()));
  });
}

}  // namespace okubo

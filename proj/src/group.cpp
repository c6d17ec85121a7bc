#include "okubo/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace okubo {

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<std::uint16_t> table) {
  if (n == 0 || table.size() != n * n) throw Error(ErrorCode::InvalidArgument, "table size mismatch");
  if (n > 65535) throw Error(ErrorCode::GroupTooLarge, std::to_string(n));
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  for (auto v : g.table_)
    if (v >= n) throw Error(ErrorCode::InvalidArgument, "table entry out of range");
  g.identity_ = -1;
  for (std::size_t e = 0; e < n && g.identity_ < 0; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = g.table_[e * n + x] == x && g.table_[x * n + e] == x;
    if (ok) g.identity_ = static_cast<int>(e);
  }
  if (g.identity_ < 0) throw Error(ErrorCode::InvalidArgument, "table has no identity");
  g.inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a * n + b] == g.identity_) {
        if (g.table_[b * n + a] != g.identity_) throw Error(ErrorCode::InvalidArgument, "one-sided inverse");
        g.inverse_[a] = static_cast<int>(b);
        break;
      }
  for (auto v : g.inverse_)
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "element without inverse");
  g.orders_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    int x = static_cast<int>(a);
    int k = 1;
    while (x != g.identity_) {
      x = g.mul(x, static_cast<int>(a));
      ++k;
    }
    g.orders_[a] = k;
  }
  return g;
}

int FiniteGroup::pow(int a, long long e) const {
  const int ord = orders_[a];
  long long r = ((e % ord) + ord) % ord;
  int x = identity_;
  for (long long i = 0; i < r; ++i) x = mul(x, a);
  return x;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) != mul(static_cast<int>(b), static_cast<int>(a))) return false;
  return true;
}

ElementSet FiniteGroup::all() const {
  ElementSet s(n_);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

bool FiniteGroup::is_subgroup(std::span<const int> elems) const {
  if (elems.empty()) return false;
  std::vector<bool> in(n_, false);
  for (int x : elems) {
    if (x < 0 || static_cast<std::size_t>(x) >= n_) return false;
    in[x] = true;
  }
  if (!in[identity_]) return false;
  for (int a : elems) {
    if (!in[inverse_[a]]) return false;
    for (int b : elems)
      if (!in[mul(a, b)]) return false;
  }
  return true;
}

bool FiniteGroup::is_normal(std::span<const int> subgroup) const {
  std::vector<bool> in(n_, false);
  for (int x : subgroup) in[x] = true;
  for (std::size_t g = 0; g < n_; ++g)
    for (int x : subgroup)
      if (!in[conjugate(static_cast<int>(g), x)]) return false;
  return true;
}

ElementSet FiniteGroup::generated(std::span<const int> gens) const {
  std::vector<bool> in(n_, false);
  std::vector<int> queue{identity_};
  in[identity_] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int g : gens) {
      const int y = mul(queue[head], g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

ElementSet FiniteGroup::center() const {
  ElementSet out;
  for (std::size_t a = 0; a < n_; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n_ && central; ++b)
      central = mul(static_cast<int>(a), static_cast<int>(b)) == mul(static_cast<int>(b), static_cast<int>(a));
    if (central) out.push_back(static_cast<int>(a));
  }
  return out;
}

ElementSet FiniteGroup::derived_subgroup() const {
  std::set<int> commutators;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      const int x = static_cast<int>(a), y = static_cast<int>(b);
      commutators.insert(mul(mul(x, y), mul(inv(x), inv(y))));
    }
  std::vector<int> gens(commutators.begin(), commutators.end());
  return generated(gens);
}

std::size_t FiniteGroup::centralizer_order(int a) const {
  std::size_t c = 0;
  for (std::size_t b = 0; b < n_; ++b)
    if (mul(a, static_cast<int>(b)) == mul(static_cast<int>(b), a)) ++c;
  return c;
}

FiniteGroup FiniteGroup::subgroup(std::span<const int> elems, std::vector<int>* embedding) const {
  if (!is_subgroup(elems)) throw Error(ErrorCode::NotSubgroup, "subset is not a subgroup");
  std::vector<int> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> local(n_, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<int>(i);
  const std::size_t m = sorted.size();
  std::vector<std::uint16_t> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = static_cast<std::uint16_t>(local[mul(sorted[a], sorted[b])]);
  if (embedding) *embedding = sorted;
  return from_table(m, std::move(t));
}

FiniteGroup FiniteGroup::quotient(std::span<const int> normal, std::vector<int>* projection) const {
  if (!is_subgroup(normal)) throw Error(ErrorCode::NotSubgroup, "quotient by a non-subgroup");
  if (!is_normal(normal)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  std::vector<int> coset(n_, -1);
  std::vector<int> reps;
  for (std::size_t g = 0; g < n_; ++g) {
    if (coset[g] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(g));
    for (int x : normal) coset[mul(static_cast<int>(g), x)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<std::uint16_t> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = static_cast<std::uint16_t>(coset[mul(reps[a], reps[b])]);
  if (projection) *projection = coset;
  return from_table(m, std::move(t));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Invariant factors d_1 | d_2 | ... of an abelian group.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& a) {
  const std::size_t n = a.order();
  std::vector<std::vector<int>> exponents;  // per prime, descending cyclic exponents
  std::vector<std::size_t> primes = prime_factors(n);
  for (std::size_t p : primes) {
    // n_k = #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)).
    std::vector<int> at_least;  // at_least[k-1] = #{i : e_i >= k}
    std::size_t prev = 1;
    std::size_t pk = p;
    while (true) {
      std::size_t cnt = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (a.pow(static_cast<int>(x), static_cast<long long>(pk)) == a.identity()) ++cnt;
      if (cnt == prev) break;
      std::size_t ratio = cnt / prev;
      int r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      at_least.push_back(r);
      prev = cnt;
      pk *= p;
    }
    std::vector<int> es;
    const int factors = at_least.empty() ? 0 : at_least[0];
    for (int i = 0; i < factors; ++i) {
      int e = 0;
      for (int v : at_least)
        if (v > i) ++e;
      es.push_back(e);
    }
    exponents.push_back(es);
  }
  std::size_t len = 0;
  for (auto& es : exponents) len = std::max(len, es.size());
  std::vector<std::size_t> factors(len, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t i = 0; i < exponents[pi].size(); ++i)
      for (int k = 0; k < exponents[pi][i]; ++k) factors[len - 1 - i] *= primes[pi];
  return factors;
}

}  // namespace

GroupInvariants group_invariants(const FiniteGroup& g) {
  GroupInvariants inv;
  inv.order = g.order();
  inv.center = g.center().size();
  const auto derived = g.derived_subgroup();
  inv.derived = derived.size();
  std::size_t two = 1;
  while (inv.order % (two * 2) == 0) two *= 2;
  inv.sylow2 = two;
  std::size_t two_elements = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const int o = g.element_order(static_cast<int>(x));
    ++inv.order_histogram[o];
    if ((o & (o - 1)) == 0) ++two_elements;
  }
  inv.sylow2_unique = two_elements == two;
  const auto ab = g.quotient(derived);
  inv.abelianization = abelian_invariants(ab);
  return inv;
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const int> images) {
  if (images.size() != g.order()) return false;
  for (int x : images)
    if (x < 0 || static_cast<std::size_t>(x) >= h.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (images[g.mul(static_cast<int>(a), static_cast<int>(b))] != h.mul(images[a], images[b])) return false;
  return true;
}

GroupHom::GroupHom(std::shared_ptr<const FiniteGroup> domain, std::shared_ptr<const FiniteGroup> codomain,
                   std::vector<int> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!is_homomorphism(*domain_, *codomain_, images_))
    throw Error(ErrorCode::StructureMismatch, "map is not a group homomorphism");
}

ElementSet GroupHom::kernel() const {
  ElementSet k;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == codomain_->identity()) k.push_back(static_cast<int>(x));
  return k;
}

ElementSet GroupHom::image() const {
  std::set<int> s(images_.begin(), images_.end());
  return ElementSet(s.begin(), s.end());
}

bool GroupHom::is_isomorphism() const {
  return domain_->order() == codomain_->order() && image().size() == codomain_->order();
}

SemidirectResult semidirect_check(const FiniteGroup& g, std::span<const int> n, std::span<const int> s) {
  if (!g.is_subgroup(n)) throw Error(ErrorCode::NotSubgroup, "N is not a subgroup");
  if (!g.is_subgroup(s)) throw Error(ErrorCode::NotSubgroup, "S is not a subgroup");
  SemidirectResult r;
  std::vector<bool> in_n(g.order(), false);
  for (int x : n) in_n[x] = true;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (int y : n)
      if (!in_n[g.conjugate(static_cast<int>(x), y)]) {
        r.reason = "N is not normal";
        r.witness = static_cast<int>(x);
        return r;
      }
  for (int x : s)
    if (x != g.identity() && in_n[x]) {
      r.reason = "N and S intersect nontrivially";
      r.witness = x;
      return r;
    }
  if (n.size() * s.size() != g.order()) {
    r.reason = "|N||S| != |G|";
    return r;
  }
  r.holds = true;
  return r;
}

namespace {

// Extends gens -> imgs along the Cayley graph; nullopt on inconsistency or
// non-bijectivity.
std::optional<std::vector<int>> extend_on_generators(const FiniteGroup& g, const FiniteGroup& h,
                                                     std::span<const int> gens, std::span<const int> imgs) {
  std::vector<int> phi(g.order(), -1);
  std::vector<int> queue{g.identity()};
  phi[g.identity()] = h.identity();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = g.mul(x, gens[i]);
      const int target = h.mul(phi[x], imgs[i]);
      if (phi[y] < 0) {
        phi[y] = target;
        queue.push_back(y);
      } else if (phi[y] != target) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g.order()) return std::nullopt;
  std::vector<bool> hit(h.order(), false);
  for (int v : phi) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return phi;
}

}  // namespace

std::optional<std::vector<int>> small_group_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > FiniteGroup::kMaxTableOrder) throw Error(ErrorCode::GroupTooLarge, std::to_string(g.order()));
  const auto ig = group_invariants(g);
  const auto ih = group_invariants(h);
  if (ig.order_histogram != ih.order_histogram || ig.center != ih.center || ig.derived != ih.derived ||
      ig.abelianization != ih.abelianization)
    return std::nullopt;

  const std::size_t n = g.order();
  using Profile = std::pair<int, std::size_t>;  // element order, centralizer order
  std::vector<Profile> pg(n), ph(n);
  for (std::size_t x = 0; x < n; ++x) {
    pg[x] = {g.element_order(static_cast<int>(x)), g.centralizer_order(static_cast<int>(x))};
    ph[x] = {h.element_order(static_cast<int>(x)), h.centralizer_order(static_cast<int>(x))};
  }
  std::map<Profile, std::vector<int>> h_by_profile;
  for (std::size_t x = 0; x < n; ++x) h_by_profile[ph[x]].push_back(static_cast<int>(x));
  for (std::size_t x = 0; x < n; ++x)
    if (!h_by_profile.count(pg[x])) return std::nullopt;

  // Rarest profiles first keeps the candidate lists short.
  std::vector<int> order_g(n);
  std::iota(order_g.begin(), order_g.end(), 0);
  std::stable_sort(order_g.begin(), order_g.end(), [&](int a, int b) {
    return h_by_profile[pg[a]].size() < h_by_profile[pg[b]].size();
  });

  std::vector<int> gens;
  for (int a : order_g)
    if (g.generated(std::array<int, 1>{a}).size() == n) {
      gens = {a};
      break;
    }
  if (gens.empty()) {
    for (std::size_t i = 0; i < n && gens.empty(); ++i)
      for (std::size_t j = i + 1; j < n && gens.empty(); ++j) {
        const std::array<int, 2> pair{order_g[i], order_g[j]};
        if (g.generated(pair).size() == n) gens.assign(pair.begin(), pair.end());
      }
  }
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "group is not 2-generated");

  const auto& cands0 = h_by_profile[pg[gens[0]]];
  if (gens.size() == 1) {
    for (int c : cands0) {
      const std::array<int, 1> imgs{c};
      if (auto phi = extend_on_generators(g, h, gens, imgs); phi && is_homomorphism(g, h, *phi)) return phi;
    }
    return std::nullopt;
  }
  const auto& cands1 = h_by_profile[pg[gens[1]]];
  for (int c0 : cands0)
    for (int c1 : cands1) {
      const std::array<int, 2> imgs{c0, c1};
      if (auto phi = extend_on_generators(g, h, gens, imgs); phi && is_homomorphism(g, h, *phi)) return phi;
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Mat2F3 Mat2F3::make(int a, int b, int c, int d) {
  auto r = [](int v) { return ((v % 3) + 3) % 3; };
  return Mat2F3{{r(a), r(b), r(c), r(d)}};
}

int Mat2F3::det() const { return ((e[0] * e[3] - e[1] * e[2]) % 3 + 3) % 3; }

Mat2F3 Mat2F3::operator*(const Mat2F3& o) const {
  return make(e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3], e[2] * o.e[0] + e[3] * o.e[2],
              e[2] * o.e[1] + e[3] * o.e[3]);
}

std::array<int, 2> Mat2F3::apply(int i, int j) const {
  return {((e[0] * i + e[1] * j) % 3 + 3) % 3, ((e[2] * i + e[3] * j) % 3 + 3) % 3};
}

std::string Mat2F3::to_string() const {
  return "[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ";" + std::to_string(e[2]) + "," +
         std::to_string(e[3]) + "]";
}

std::vector<Mat2F3> gl23_elements() {
  std::vector<Mat2F3> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          auto m = Mat2F3::make(a, b, c, d);
          if (m.det() != 0) out.push_back(m);
        }
  return out;
}

std::vector<Mat2F3> sl23_elements() {
  std::vector<Mat2F3> out;
  for (const auto& m : gl23_elements())
    if (m.det() == 1) out.push_back(m);
  return out;
}

std::array<Mat2F3, 2> q8_generators() { return {Mat2F3::make(0, -1, 1, 0), Mat2F3::make(1, 1, 1, -1)}; }

std::array<Mat2F3, 2> sl23_generators() { return {Mat2F3::make(1, 1, 0, 1), Mat2F3::make(0, -1, 1, 0)}; }

MatrixGroup2 generate_matrix_group(std::span<const Mat2F3> gens) {
  return generate_group(
      gens, Mat2F3{}, [](const Mat2F3& a, const Mat2F3& b) { return a * b; }, [](const Mat2F3& m) { return m; });
}

FiniteGroup z3_squared() {
  std::vector<std::uint16_t> t(81);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) t[a * 9 + b] = static_cast<std::uint16_t>(((a / 3 + b / 3) % 3) * 3 + (a % 3 + b % 3) % 3);
  return FiniteGroup::from_table(9, std::move(t));
}

FiniteGroup affine_sl23() {
  const auto sl = sl23_elements();
  auto index_of = [&](const Mat2F3& m) {
    return static_cast<int>(std::lower_bound(sl.begin(), sl.end(), m) - sl.begin());
  };
  const std::size_t n = 9 * sl.size();
  std::vector<std::uint16_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int v = static_cast<int>(x / sl.size()), w = static_cast<int>(y / sl.size());
      const Mat2F3& a = sl[x % sl.size()];
      const Mat2F3& b = sl[y % sl.size()];
      const auto aw = a.apply(w / 3, w % 3);
      const int vi = (v / 3 + aw[0]) % 3, vj = (v % 3 + aw[1]) % 3;
      t[x * n + y] = static_cast<std::uint16_t>((vi * 3 + vj) * static_cast<int>(sl.size()) + index_of(a * b));
    }
  return FiniteGroup::from_table(n, std::move(t));
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::uint16_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
  return FiniteGroup::from_table(n, std::move(t));
}

}  // namespace okubo

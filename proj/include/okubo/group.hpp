#pragma once

// Small finite groups.  Concrete elements (matrices, linear maps) are closed
// under composition by generate_group, which then hands back an abstract
// Cayley-table group (FiniteGroup) on the indices 0..n-1.  Everything
// structural (subgroups, quotients, invariants, isomorphism search) runs on
// the table.

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "okubo/error.hpp"

namespace okubo {

/// Sorted list of element indices.
using ElementSet = std::vector<int>;

class FiniteGroup {
 public:
  static constexpr std::size_t kMaxTableOrder = 648;

  FiniteGroup() = default;
  /// table[a * n + b] is the index of a*b.  Checks closure, identity and
  /// inverses (associativity is the caller's responsibility).
  static FiniteGroup from_table(std::size_t n, std::vector<std::uint16_t> table);

  std::size_t order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, long long e) const;
  int element_order(int a) const { return orders_[a]; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  bool is_abelian() const;
  ElementSet all() const;

  bool is_subgroup(std::span<const int> elems) const;
  bool is_normal(std::span<const int> subgroup) const;
  ElementSet generated(std::span<const int> gens) const;
  ElementSet center() const;
  ElementSet derived_subgroup() const;
  std::size_t centralizer_order(int a) const;

  /// Induced table on a subgroup; embedding[i] is the ambient index of i.
  FiniteGroup subgroup(std::span<const int> elems, std::vector<int>* embedding = nullptr) const;
  /// Quotient by a normal subgroup; projection maps ambient index -> coset.
  FiniteGroup quotient(std::span<const int> normal, std::vector<int>* projection = nullptr) const;

 private:
  std::size_t n_ = 0;
  int identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
};

struct GroupInvariants {
  std::size_t order = 0;
  std::size_t center = 0;
  std::size_t derived = 0;
  std::size_t sylow2 = 0;        // order of a Sylow 2-subgroup
  bool sylow2_unique = false;    // the 2-elements form a subgroup
  std::vector<std::size_t> abelianization;  // invariant factors of G/G'
  std::map<int, std::size_t> order_histogram;

  bool operator==(const GroupInvariants&) const = default;
};

GroupInvariants group_invariants(const FiniteGroup& g);

/// Homomorphism stored as the full image list; construction verifies
/// multiplicativity on all pairs.
class GroupHom {
 public:
  GroupHom(std::shared_ptr<const FiniteGroup> domain, std::shared_ptr<const FiniteGroup> codomain,
           std::vector<int> images);

  const FiniteGroup& domain() const { return *domain_; }
  const FiniteGroup& codomain() const { return *codomain_; }
  int operator()(int g) const { return images_[g]; }
  const std::vector<int>& images() const { return images_; }
  ElementSet kernel() const;
  ElementSet image() const;
  bool is_isomorphism() const;

 private:
  std::shared_ptr<const FiniteGroup> domain_;
  std::shared_ptr<const FiniteGroup> codomain_;
  std::vector<int> images_;
};

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const int> images);

struct SemidirectResult {
  bool holds = false;
  std::string reason;       // empty when holds
  std::optional<int> witness;
};

/// True iff N is normal, N and S meet trivially and |N||S| = |G|.
SemidirectResult semidirect_check(const FiniteGroup& g, std::span<const int> n, std::span<const int> s);

/// Two-generator backtracking with invariant pruning.  Returns the images of
/// all elements of G under a verified isomorphism G -> H.
std::optional<std::vector<int>> small_group_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

// ---------------------------------------------------------------------------
// Concrete groups generated from explicit elements.

template <class T, class K>
class ConcreteGroup {
 public:
  ConcreteGroup() = default;
  ConcreteGroup(std::vector<T> elements, std::map<K, int> index, std::function<K(const T&)> key,
                std::optional<FiniteGroup> table)
      : elements_(std::move(elements)), index_(std::move(index)), key_(std::move(key)), table_(std::move(table)) {}

  std::size_t order() const { return elements_.size(); }
  const std::vector<T>& elements() const { return elements_; }
  const T& element(int i) const { return elements_[i]; }
  std::optional<int> find(const T& x) const {
    auto it = index_.find(key_(x));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool has_table() const { return table_.has_value(); }
  const FiniteGroup& table() const {
    if (!table_) throw Error(ErrorCode::GroupTooLarge, "order " + std::to_string(order()) + " > 648");
    return *table_;
  }

 private:
  std::vector<T> elements_;
  std::map<K, int> index_;
  std::function<K(const T&)> key_;
  std::optional<FiniteGroup> table_;
};

/// Breadth-first closure of `gens` under `compose`; elements are returned in
/// canonical (key) order.  A Cayley table is attached when the order is at
/// most FiniteGroup::kMaxTableOrder.
template <class T, class Compose, class KeyFn>
auto generate_group(std::span<const T> gens, const T& identity, Compose compose, KeyFn key,
                    std::size_t cap = 100000) {
  using K = std::decay_t<std::invoke_result_t<KeyFn, const T&>>;
  std::map<K, int> seen;
  std::vector<T> found;
  std::deque<int> queue;
  seen.emplace(key(identity), 0);
  found.push_back(identity);
  queue.push_back(0);
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (const T& g : gens) {
      T next = compose(found[cur], g);
      auto k = key(next);
      if (seen.count(k)) continue;
      if (found.size() >= cap) throw Error(ErrorCode::ClosureOverflow, "closure exceeds " + std::to_string(cap));
      seen.emplace(std::move(k), static_cast<int>(found.size()));
      found.push_back(std::move(next));
      queue.push_back(static_cast<int>(found.size()) - 1);
    }
  }
  // Canonical order: ascending key.
  std::vector<T> elements;
  std::map<K, int> index;
  elements.reserve(found.size());
  for (auto& [k, i] : seen) {
    index.emplace(k, static_cast<int>(elements.size()));
    elements.push_back(found[i]);
  }
  std::optional<FiniteGroup> table;
  const std::size_t n = elements.size();
  if (n <= FiniteGroup::kMaxTableOrder) {
    std::vector<std::uint16_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index.find(key(compose(elements[a], elements[b])));
        if (it == index.end()) throw Error(ErrorCode::ClosureOverflow, "generated set not closed");
        t[a * n + b] = static_cast<std::uint16_t>(it->second);
      }
    table = FiniteGroup::from_table(n, std::move(t));
  }
  return ConcreteGroup<T, K>(std::move(elements), std::move(index), std::function<K(const T&)>(key),
                             std::move(table));
}

// ---------------------------------------------------------------------------
// 2x2 matrices over GF(3), acting on column vectors (i, j)^T of (Z/3)^2.

struct Mat2F3 {
  std::array<int, 4> e{1, 0, 0, 1};  // row-major: [a b; c d], entries in {0,1,2}

  static Mat2F3 make(int a, int b, int c, int d);
  int det() const;
  Mat2F3 operator*(const Mat2F3& o) const;
  std::array<int, 2> apply(int i, int j) const;
  auto operator<=>(const Mat2F3&) const = default;
  std::string to_string() const;  // "[a,b;c,d]"
};

std::vector<Mat2F3> gl23_elements();
std::vector<Mat2F3> sl23_elements();
/// The quaternion generators [0,-1;1,0] and [1,1;1,-1].
std::array<Mat2F3, 2> q8_generators();
/// Two matrices generating SL(2,3).
std::array<Mat2F3, 2> sl23_generators();

using MatrixGroup2 = ConcreteGroup<Mat2F3, Mat2F3>;
MatrixGroup2 generate_matrix_group(std::span<const Mat2F3> gens);

/// (Z/3)^2 as a Cayley table, elements (i,j) at index 3i+j.
FiniteGroup z3_squared();
/// (Z/3)^2 x| SL(2,3) with (v,A)(w,B) = (v + Aw, AB).
FiniteGroup affine_sl23();
/// Cyclic group of order n.
FiniteGroup cyclic_group(std::size_t n);

}  // namespace okubo

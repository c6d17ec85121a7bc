#pragma once

// The composition-algebra identity suite on O_{alpha,beta}:
//   n(x*y) = n(x) n(y),  (x*y)*x = x*(y*x) = n(x) y,  n(x*y, z) = n(x, y*z).
// Pairs are exhaustive when the field is small enough, sampled otherwise.

#include <cstdint>
#include <string>
#include <vector>

#include "okubo/algebra.hpp"

namespace okubo {

struct IdentityOptions {
  std::uint64_t seed = 1;
  /// Exhaustive over all pairs when q^16 is at most this; otherwise this many
  /// random pairs over finite fields.
  std::uint64_t pair_cap = 100000;
  /// Random pairs over the rationals.
  std::uint64_t rational_pairs = 10000;
};

struct IdentityFailure {
  std::string identity;
  std::string x, y, z;
};

struct IdentityReport {
  bool exhaustive = false;
  std::uint64_t pairs = 0;
  std::uint64_t triples = 0;
  std::uint64_t multiplicativity_failures = 0;
  std::uint64_t left_composition_failures = 0;   // (x*y)*x != n(x) y
  std::uint64_t right_composition_failures = 0;  // x*(y*x) != n(x) y
  std::uint64_t associativity_failures = 0;      // n(x*y, z) != n(x, y*z)
  bool gram_nondegenerate = false;
  bool isotropic = false;                        // n(z~_{1,0}) = 0
  std::vector<IdentityFailure> examples;         // at most 5

  bool passed() const {
    return multiplicativity_failures == 0 && left_composition_failures == 0 && right_composition_failures == 0 &&
           associativity_failures == 0 && gram_nondegenerate && isotropic;
  }
};

/// Associativity of the norm is checked on all 512 basis triples and on one
/// random z per pair.
template <ExactField F>
IdentityReport identity_suite(const OkuboAlgebra<F>& a, const IdentityOptions& options = {});

}  // namespace okubo

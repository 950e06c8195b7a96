#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vexmult/errors.hpp"
#include "vexmult/shape.hpp"

namespace vexmult {

// The four classical families.  Types B and C share the same Weyl group
// (signed permutations); type D restricts to an even number of sign changes;
// type A is the sign-free case.
enum class LieType { A, B, C, D };

LieType lie_type_from(std::string_view s);
const char* to_cstring(LieType t);
inline bool is_signed_type(LieType t) { return t != LieType::A; }

// A (signed) permutation in window notation w(1..n), values in {±1..±n} with
// |w| a bijection of {1..n}.  The action extends to negative arguments by
// w(-i) = -w(i), and w(0) = 0.
class SignedPerm {
public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> window);

  static SignedPerm identity(int n);
  // comma- or space-separated window entries, negatives with leading minus
  static SignedPerm parse(std::string_view text);

  int size() const { return static_cast<int>(win_.size()); }

  // extended action on {-n..n}
  int operator()(int i) const {
    if (i > 0) return win_[static_cast<size_t>(i - 1)];
    if (i < 0) return -win_[static_cast<size_t>(-i - 1)];
    return 0;
  }

  const std::vector<int>& window() const { return win_; }

  SignedPerm inverse() const;
  bool is_identity() const;
  int negative_count() const;

  std::string str(bool bar_notation = false) const;

  auto operator<=>(const SignedPerm&) const = default;

private:
  std::vector<int> win_;
};

// (u ∘ w)(i) = u(w(i))
SignedPerm compose(const SignedPerm& u, const SignedPerm& w);

bool valid_for(LieType t, const SignedPerm& w);
void require_valid(LieType t, const SignedPerm& w);

// Coxeter length.  A: inversions; B/C: inversions plus sum of |w(i)| over
// negative entries; D: inversions plus sum of (|w(i)|-1) over negative
// entries.
int length(LieType t, const SignedPerm& w);

// Rank function k_w(q,p) defining the Schubert variety:
//   A: #{ s <= p     : w(s) >  q }   with p,q in [1,n]
//   B/C: #{ s <= -p  : w(s) >= q }   with p in [1,n], q in {±1..±n}
//   D: #{ s <  -p    : w(s) >  q }   with p in [0,n-1], q >= 0
// Signed types count over the extended domain.
int rank_k(LieType t, const SignedPerm& w, int q, int p);

// Codimension companion: A: p - k; B/C: n+1-p-k; D: n-p-k.
int rank_r(LieType t, const SignedPerm& w, int q, int p);

// Simple generators.  Indices: 1..n-1 swap positions i,i+1 (all types);
// index 0 is the sign generator (B/C: negate position 1; D: negate and swap
// positions 1,2).  first_simple(t) is 0 for signed types, 1 for type A.
int first_simple(LieType t);
SignedPerm apply_simple_right(LieType t, const SignedPerm& w, int s);
bool right_descent(LieType t, const SignedPerm& w, int s);

// Exact Bruhat order test in any type, by the lifting property: repeatedly
// strip a right descent of v.  O(length(v) * n).
bool bruhat_leq(LieType t, const SignedPerm& w, const SignedPerm& v);

// Minimal-length coset representative test and reduction for the parabolic
// fixing the partial flag cut at the given p-values.
bool is_coset_minimal(LieType t, const SignedPerm& v, const std::vector<int>& pset);
SignedPerm coset_minimize(LieType t, const SignedPerm& v, const std::vector<int>& pset);

// Grassmannian (signed) permutation attached to a shape.
//   A: lambda inside the d x (n-d) box, unique descent at d;
//   B/C: strict lambda inside the n-staircase (d ignored);
//   D: strict lambda, even part count after 0-padding (d ignored).
SignedPerm grassmannian_perm(LieType t, const Shape& lambda, int d, int n);

// All group elements at rank n, in a fixed deterministic order.
std::vector<SignedPerm> all_elements(LieType t, int n);

// Reflections (right multiplication gives all t with w*t covering or covered
// by w for suitable lengths).  Used by order-theoretic oracles and corpus
// generation.
std::vector<SignedPerm> reflections(LieType t, int n);

}  // namespace vexmult

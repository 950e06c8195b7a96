#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vexmult/diagrams.hpp"
#include "vexmult/shape.hpp"
#include "vexmult/weyl.hpp"

namespace vexmult {

// The essential rank conditions of a vexillary element, as three integer
// sequences of common length s.  Conventions per type:
//   A:   1<=p_1<=...<=p_s<=n, n>=q_1>=...>=q_s>=1, k strictly increasing,
//        q_i - p_i + k_i strictly decreasing and positive at i=s;
//   B/C: k strictly increasing positive, p and q weakly decreasing >= 1,
//        q_i + p_i + k_i strictly decreasing and positive at i=s;
//   D:   as B/C but p_s, q_s may be 0; if p_s=q_s=0 then k_s must be even.
struct Triple {
  LieType type = LieType::A;
  std::vector<int> k, p, q;

  int size() const { return static_cast<int>(k.size()); }
  void validate() const;  // throws Invariant on violation

  // drops vacuous k=0 entries (type A allows k_1 = 0, which constrains nothing)
  Triple normalized() const;

  // "k=1,2;p=3,1;q=3,2;type=C".  Validation can be skipped for explicit
  // condition lists that carry redundant rows.
  static Triple parse(std::string_view text, bool validated = true);
  std::string str() const;

  bool operator==(const Triple&) const = default;
};

// A triple together with the sequence k'_i = k_v(q_i, p_i) read off a second
// element v above the triple's element in Bruhat order.
struct WeakTriple {
  Triple base;
  std::vector<int> kprime;

  void validate() const;
};

// Essential boxes admit a weakly SW->NE ordering.  In type A this coincides
// with 2-1-4-3 pattern avoidance.
bool is_vexillary(LieType t, const SignedPerm& w);

// Reads the triple off the ordered essential boxes.  Throws a precondition
// error naming the offending box pair when w is not vexillary.
Triple triple_of(LieType t, const SignedPerm& w);

// Minimal Bruhat element with rank_k(q_i, p_i) >= k_i for all i, found by
// exact search in length order.  Desk-scale caps: n <= 9 (type A),
// n <= 7 (signed types).
SignedPerm perm_of_triple(const Triple& tau, int n);

// Shape attached to a triple: lambda_{k_i} = q_i - p_i + k_i (A),
// p_i + q_i - 1 (B/C), p_i + q_i (D); other parts filled minimally.
Shape shape_of(const Triple& tau);

WeakTriple weak_triple(LieType t, const SignedPerm& w, const SignedPerm& v);
// data-driven variant: the conditions come from an explicit triple rather
// than from the essential set of a permutation
WeakTriple weak_triple_from(const Triple& tau, const SignedPerm& v);

// Outer shape of a pair w <= v: parts mu_{k'_i} fixed by the same formulas
// at the k' positions (ties keep the first, larger, value), filled minimally.
Shape outer_shape(LieType t, const SignedPerm& w, const SignedPerm& v);
Shape outer_shape_of(const WeakTriple& wt);

// w <= v test specialized to vexillary w: the essential conditions hold at v.
// Agrees with bruhat_leq whenever w is vexillary.
bool dominates(const Triple& tau, const SignedPerm& v);

// shared helper: minimal partition with parts fixed at given 1-based
// positions (positions strictly increasing); strict = signed-type filling
Shape fill_shape(const std::vector<int>& positions, const std::vector<int>& values, bool strict);

}  // namespace vexmult

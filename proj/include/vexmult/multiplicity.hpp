#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vexmult/excited.hpp"
#include "vexmult/shape.hpp"
#include "vexmult/vexillary.hpp"
#include "vexmult/weyl.hpp"

namespace vexmult {

// Everything the pipeline computes for one pair w <= v: the triple of w,
// the weak sequence k', both shapes, and the excited-diagram count.
struct MultiplicityReport {
  LieType type = LieType::A;
  SignedPerm w, v;
  Triple triple;
  std::vector<int> kprime;
  Shape lambda, mu;
  unsigned long long value = 0;
  std::optional<std::vector<DiagramState>> states;

  std::string json() const;
};

// Hilbert-Samuel multiplicity of the Schubert variety of w at the fixed
// point of v, for vexillary w and v above w in Bruhat order.
MultiplicityReport multiplicity(LieType t, const SignedPerm& w, const SignedPerm& v,
                                bool with_states = false,
                                std::size_t cap = default_state_cap());

bool is_smooth_point(LieType t, const SignedPerm& w, const SignedPerm& v);

}  // namespace vexmult

#include "vexmult/multiplicity.hpp"

#include <sstream>

namespace vexmult {

namespace {

void append_ints(std::ostringstream& out, const std::vector<int>& v) {
  out << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ']';
}

void append_window(std::ostringstream& out, const SignedPerm& w) { append_ints(out, w.window()); }

}  // namespace

std::string MultiplicityReport::json() const {
  std::ostringstream out;
  out << "{\"type\":\"" << to_cstring(type) << "\",\"w\":";
  append_window(out, w);
  out << ",\"v\":";
  append_window(out, v);
  out << ",\"k\":";
  append_ints(out, triple.k);
  out << ",\"p\":";
  append_ints(out, triple.p);
  out << ",\"q\":";
  append_ints(out, triple.q);
  out << ",\"kprime\":";
  append_ints(out, kprime);
  out << ",\"lambda\":";
  append_ints(out, lambda.parts);
  out << ",\"mu\":";
  append_ints(out, mu.parts);
  out << ",\"multiplicity\":" << value;
  if (states) {
    out << ",\"states\":[";
    for (size_t i = 0; i < states->size(); ++i) {
      if (i) out << ',';
      out << state_json((*states)[i]);
    }
    out << ']';
  }
  out << '}';
  return out.str();
}

MultiplicityReport multiplicity(LieType t, const SignedPerm& w, const SignedPerm& v,
                                bool with_states, std::size_t cap) {
  MultiplicityReport rep;
  rep.type = t;
  rep.w = w;
  rep.v = v;
  WeakTriple wt = weak_triple(t, w, v);  // checks vexillary and w <= v
  rep.triple = wt.base;
  rep.kprime = wt.kprime;
  rep.lambda = shape_of(wt.base);
  rep.mu = outer_shape_of(wt);
  auto states = enumerate_excited(t, rep.lambda, rep.mu, cap);
  rep.value = states.size();
  if (with_states) rep.states = std::move(states);
  return rep;
}

bool is_smooth_point(LieType t, const SignedPerm& w, const SignedPerm& v) {
  return multiplicity(t, w, v).value == 1;
}

}  // namespace vexmult

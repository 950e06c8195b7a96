#include "vexmult/vexillary.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vexmult {

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] >= v[i + 1]) return false;
  return true;
}

bool weakly_decreasing(const std::vector<int>& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

}  // namespace

void Triple::validate() const {
  if (k.size() != p.size() || k.size() != q.size())
    throw_invariant("triple-lengths", "triple sequences must have equal length");
  int s = size();
  if (s == 0) return;
  if (!strictly_increasing(k))
    throw_invariant("triple-k", "k must be strictly increasing");
  if (type == LieType::A) {
    if (k.front() < 0) throw_invariant("triple-k", "k must be nonnegative");
    for (int i = 0; i + 1 < s; ++i)
      if (p[i] > p[i + 1]) throw_invariant("triple-p", "p must be weakly increasing");
    if (p.front() < 1) throw_invariant("triple-p", "p out of range");
    if (!weakly_decreasing(q) || q.back() < 1)
      throw_invariant("triple-q", "q must be weakly decreasing and positive");
    for (int i = 0; i + 1 < s; ++i)
      if (q[i] - p[i] + k[i] <= q[i + 1] - p[i + 1] + k[i + 1])
        throw_invariant("triple-decrease", "q-p+k must strictly decrease");
    if (q.back() - p.back() + k.back() <= 0)
      throw_invariant("triple-positive", "q_s-p_s+k_s must be positive");
    return;
  }
  if (k.front() < 1) throw_invariant("triple-k", "k must be positive");
  if (!weakly_decreasing(p) || !weakly_decreasing(q))
    throw_invariant("triple-pq", "p and q must be weakly decreasing");
  int floor = (type == LieType::D) ? 0 : 1;
  if (p.back() < floor || q.back() < floor)
    throw_invariant("triple-pq", "p and q out of range for this type");
  for (int i = 0; i + 1 < s; ++i)
    if (q[i] + p[i] + k[i] <= q[i + 1] + p[i + 1] + k[i + 1])
      throw_invariant("triple-decrease", "q+p+k must strictly decrease");
  if (q.back() + p.back() + k.back() <= 0)
    throw_invariant("triple-positive", "q_s+p_s+k_s must be positive");
  if (type == LieType::D && p.back() == 0 && q.back() == 0 && k.back() % 2 != 0)
    throw_invariant("triple-parity", "k_s must be even when p_s=q_s=0");
}

Triple Triple::normalized() const {
  Triple t(*this);
  while (!t.k.empty() && t.k.front() == 0) {
    t.k.erase(t.k.begin());
    t.p.erase(t.p.begin());
    t.q.erase(t.q.begin());
  }
  return t;
}

Triple Triple::parse(std::string_view text, bool validated) {
  Triple t;
  std::string s(text);
  std::map<std::string, std::string> fields;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t semi = s.find(';', pos);
    if (semi == std::string::npos) semi = s.size();
    std::string piece = s.substr(pos, semi - pos);
    size_t eq = piece.find('=');
    if (eq == std::string::npos) throw_domain("triple-parse", "expected name=value: " + piece);
    fields[piece.substr(0, eq)] = piece.substr(eq + 1);
    pos = semi + 1;
  }
  auto ints = [](const std::string& v) {
    std::vector<int> out;
    std::string w = v;
    for (char& c : w)
      if (c == ',') c = ' ';
    std::istringstream in(w);
    int x;
    while (in >> x) out.push_back(x);
    return out;
  };
  if (!fields.count("k") || !fields.count("p") || !fields.count("q"))
    throw_domain("triple-parse", "triple needs k=, p=, q= fields");
  t.k = ints(fields["k"]);
  t.p = ints(fields["p"]);
  t.q = ints(fields["q"]);
  t.type = fields.count("type") ? lie_type_from(fields["type"]) : LieType::A;
  if (t.k.size() != t.p.size() || t.k.size() != t.q.size())
    throw_domain("triple-parse", "triple sequences must have equal length");
  if (validated) t.validate();
  return t;
}

std::string Triple::str() const {
  auto join = [](const std::vector<int>& v) {
    std::ostringstream o;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) o << ',';
      o << v[i];
    }
    return o.str();
  };
  return "k=" + join(k) + ";p=" + join(p) + ";q=" + join(q) + ";type=" + to_cstring(type);
}

void WeakTriple::validate() const {
  base.validate();
  if (kprime.size() != base.k.size())
    throw_invariant("weak-triple", "k' must match the triple length");
  for (size_t i = 0; i < kprime.size(); ++i)
    if (kprime[i] < base.k[i])
      throw_invariant("weak-triple", "k' must dominate k componentwise");
  for (size_t i = 0; i + 1 < kprime.size(); ++i)
    if (kprime[i] > kprime[i + 1])
      throw_invariant("weak-triple", "k' must be weakly increasing");
}

namespace {

// 2-1-4-3 containment in the extended one-line notation over the full grid;
// for signed elements vexillarity is avoidance as a permutation of 2n letters
bool extended_contains_2143(LieType t, const SignedPerm& w) {
  int n = w.size();
  std::vector<int> vals;
  if (is_signed_type(t))
    for (int i = -n; i <= -1; ++i) vals.push_back(w(i));
  for (int i = 1; i <= n; ++i) vals.push_back(w(i));
  int m = static_cast<int>(vals.size());
  auto lt = [&](int a, int b) {
    return grid_slot(a, n, is_signed_type(t)) < grid_slot(b, n, is_signed_type(t));
  };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (!lt(vals[b], vals[a])) continue;
      for (int c = b + 1; c < m; ++c) {
        if (!lt(vals[a], vals[c])) continue;
        for (int d = c + 1; d < m; ++d)
          if (lt(vals[a], vals[d]) && lt(vals[d], vals[c])) return true;
      }
    }
  return false;
}

}  // namespace

bool is_vexillary(LieType t, const SignedPerm& w) {
  require_valid(t, w);
  if (t == LieType::A) return essential_set(t, w).sw_ne_ordered;
  return !extended_contains_2143(t, w);
}

namespace {

// (q,p) data of the ordered essential boxes, in the type's convention
struct BoxData {
  std::vector<int> p, q;
  std::vector<Box> boxes;
};

BoxData essential_pq(LieType t, const SignedPerm& w) {
  if (!is_vexillary(t, w)) throw_precondition("not-vexillary", "w is not vexillary: " + w.str());
  EssentialSet es = essential_set(t, w);
  if (!es.sw_ne_ordered) {
    std::string detail = "w is not vexillary";
    int n = w.size();
    bool sg = is_signed_type(t);
    for (size_t i = 0; i + 1 < es.boxes.size(); ++i) {
      if (grid_slot(es.boxes[i].row, n, sg) < grid_slot(es.boxes[i + 1].row, n, sg)) {
        std::ostringstream o;
        o << "w is not vexillary: essential boxes (" << es.boxes[i].row << ','
          << es.boxes[i].col << ") and (" << es.boxes[i + 1].row << ',' << es.boxes[i + 1].col
          << ") admit no SW->NE order";
        detail = o.str();
        break;
      }
    }
    throw_precondition("not-vexillary", detail);
  }
  BoxData d;
  d.boxes = es.boxes;
  for (const Box& b : es.boxes) {
    if (t == LieType::A) {
      d.q.push_back(b.row);
      d.p.push_back(b.col);
    } else {
      d.p.push_back(-b.col);
      d.q.push_back(grid_succ(b.row));  // row index of the box just below
    }
  }
  return d;
}

}  // namespace

Triple triple_of(LieType t, const SignedPerm& w) {
  require_valid(t, w);
  BoxData d = essential_pq(t, w);
  Triple tau;
  tau.type = t;
  for (size_t i = 0; i < d.p.size(); ++i) {
    int p = d.p[i], q = d.q[i];
    if (t == LieType::D) {
      --p;
      --q;
    }
    tau.p.push_back(p);
    tau.q.push_back(q);
    tau.k.push_back(rank_k(t, w, q, p));
  }
  tau.validate();
  return tau;
}

bool dominates(const Triple& tau, const SignedPerm& v) {
  for (int i = 0; i < tau.size(); ++i)
    if (rank_k(tau.type, v, tau.q[static_cast<size_t>(i)], tau.p[static_cast<size_t>(i)]) <
        tau.k[static_cast<size_t>(i)])
      return false;
  return true;
}

SignedPerm perm_of_triple(const Triple& tau0, int n) {
  Triple tau = tau0.normalized();
  tau.validate();
  int cap = tau.type == LieType::A ? 9 : 7;
  if (n > cap)
    throw_capability("search-cap", "exact triple search is capped at n <= " +
                                       std::to_string(cap) + " for this type");
  for (int i = 0; i < tau.size(); ++i) {
    int pmax = tau.type == LieType::A ? n : (tau.type == LieType::D ? n - 1 : n);
    int pmin = tau.type == LieType::D ? 0 : 1;
    if (tau.p[static_cast<size_t>(i)] < pmin || tau.p[static_cast<size_t>(i)] > pmax)
      throw_domain("triple-rank", "n too small to realize this triple");
  }
  std::vector<SignedPerm> all = all_elements(tau.type, n);
  std::vector<int> len(all.size());
  for (size_t i = 0; i < all.size(); ++i) len[i] = length(tau.type, all[i]);
  std::vector<size_t> order(all.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return all[a].window() < all[b].window();
  });
  for (size_t i : order)
    if (dominates(tau, all[i])) return all[i];
  throw_domain("triple-unrealizable", "no element satisfies the triple at this rank");
}

Shape fill_shape(const std::vector<int>& positions, const std::vector<int>& values, bool strict) {
  if (positions.empty()) return Shape{};
  int rows = positions.back();
  Shape s;
  s.parts.assign(static_cast<size_t>(rows), 0);
  int prev = 0;  // previous fixed position
  for (size_t i = 0; i < positions.size(); ++i) {
    int pos = positions[i], val = values[i];
    for (int kk = prev + 1; kk <= pos; ++kk)
      s.parts[static_cast<size_t>(kk - 1)] = strict ? val + (pos - kk) : val;
    prev = pos;
  }
  if (strict ? !s.strict(true) : !s.weakly_decreasing())
    throw_invariant("shape-fill", "fixed parts admit no minimal filling");
  return s;
}

namespace {

int part_value(const Triple& tau, int i) {
  switch (tau.type) {
    case LieType::A:
      return tau.q[static_cast<size_t>(i)] - tau.p[static_cast<size_t>(i)] +
             tau.k[static_cast<size_t>(i)];
    case LieType::B:
    case LieType::C:
      return tau.p[static_cast<size_t>(i)] + tau.q[static_cast<size_t>(i)] - 1;
    case LieType::D:
      return tau.p[static_cast<size_t>(i)] + tau.q[static_cast<size_t>(i)];
  }
  return 0;
}

}  // namespace

Shape shape_of(const Triple& tau0) {
  Triple tau = tau0.normalized();
  tau.validate();
  std::vector<int> pos, val;
  for (int i = 0; i < tau.size(); ++i) {
    pos.push_back(tau.k[static_cast<size_t>(i)]);
    val.push_back(part_value(tau, i));
  }
  return fill_shape(pos, val, is_signed_type(tau.type));
}

WeakTriple weak_triple_from(const Triple& tau, const SignedPerm& v) {
  WeakTriple wt;
  wt.base = tau;
  for (int i = 0; i < tau.size(); ++i) {
    int kp = rank_k(tau.type, v, tau.q[static_cast<size_t>(i)], tau.p[static_cast<size_t>(i)]);
    if (kp < tau.k[static_cast<size_t>(i)])
      throw_precondition("not-above", "v does not dominate the triple (w <= v fails)");
    wt.kprime.push_back(kp);
  }
  return wt;
}

WeakTriple weak_triple(LieType t, const SignedPerm& w, const SignedPerm& v) {
  require_valid(t, v);
  if (w.size() != v.size()) throw_domain("rank-mismatch", "weak_triple: rank mismatch");
  Triple tau = triple_of(t, w);  // throws not-vexillary when needed
  return weak_triple_from(tau, v);
}

Shape outer_shape_of(const WeakTriple& wt) {
  const Triple& tau = wt.base;
  std::vector<int> pos, val;
  for (int i = 0; i < tau.size(); ++i) {
    int kp = wt.kprime[static_cast<size_t>(i)];
    int value;
    if (tau.type == LieType::A)
      value = tau.q[static_cast<size_t>(i)] - tau.p[static_cast<size_t>(i)] + kp;
    else
      value = part_value(tau, i);
    if (!pos.empty() && pos.back() == kp) continue;  // tie: first (larger) value wins
    pos.push_back(kp);
    val.push_back(value);
  }
  return fill_shape(pos, val, is_signed_type(tau.type));
}

Shape outer_shape(LieType t, const SignedPerm& w, const SignedPerm& v) {
  return outer_shape_of(weak_triple(t, w, v));
}

}  // namespace vexmult

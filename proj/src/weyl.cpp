#include "vexmult/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vexmult {

LieType lie_type_from(std::string_view s) {
  if (s == "A" || s == "a") return LieType::A;
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  if (s == "D" || s == "d") return LieType::D;
  throw_domain("lie-type", "unknown Lie type: " + std::string(s));
}

const char* to_cstring(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
  }
  return "?";
}

SignedPerm::SignedPerm(std::vector<int> window) : win_(std::move(window)) {
  int n = size();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : win_) {
    int a = v < 0 ? -v : v;
    if (a < 1 || a > n || seen[static_cast<size_t>(a)])
      throw_domain("window", "window is not a signed permutation");
    seen[static_cast<size_t>(a)] = 1;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::parse(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<int> w;
  int v;
  while (in >> v) w.push_back(v);
  if (!in.eof() || w.empty())
    throw_domain("perm-parse", "cannot parse permutation: " + std::string(text));
  return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::inverse() const {
  int n = size();
  std::vector<int> inv(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int v = win_[static_cast<size_t>(i - 1)];
    if (v > 0)
      inv[static_cast<size_t>(v - 1)] = i;
    else
      inv[static_cast<size_t>(-v - 1)] = -i;
  }
  return SignedPerm(std::move(inv));
}

bool SignedPerm::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (win_[static_cast<size_t>(i - 1)] != i) return false;
  return true;
}

int SignedPerm::negative_count() const {
  int c = 0;
  for (int v : win_)
    if (v < 0) ++c;
  return c;
}

std::string SignedPerm::str(bool bar_notation) const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ' ';
    int v = win_[static_cast<size_t>(i)];
    if (bar_notation && v < 0)
      out << -v << 'b';
    else
      out << v;
  }
  return out.str();
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& w) {
  if (u.size() != w.size()) throw_domain("rank-mismatch", "compose: rank mismatch");
  std::vector<int> r(static_cast<size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) r[static_cast<size_t>(i - 1)] = u(w(i));
  return SignedPerm(std::move(r));
}

bool valid_for(LieType t, const SignedPerm& w) {
  if (t == LieType::A) return w.negative_count() == 0;
  if (t == LieType::D) return w.negative_count() % 2 == 0;
  return true;
}

void require_valid(LieType t, const SignedPerm& w) {
  if (!valid_for(t, w))
    throw_domain("invalid-element",
                 std::string("window not valid for type ") + to_cstring(t) + ": " + w.str());
}

int length(LieType t, const SignedPerm& w) {
  int n = w.size();
  int inv = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++inv;
  if (t == LieType::A) return inv;
  int neg = 0;
  for (int i = 1; i <= n; ++i)
    if (w(i) < 0) neg += (t == LieType::D) ? (-w(i) - 1) : -w(i);
  return inv + neg;
}

namespace {

void check_rank_args(LieType t, int n, int q, int p) {
  bool ok = true;
  switch (t) {
    case LieType::A: ok = (1 <= p && p <= n && 1 <= q && q <= n); break;
    case LieType::B:
    case LieType::C: ok = (1 <= p && p <= n && q != 0 && -n <= q && q <= n); break;
    case LieType::D: ok = (0 <= p && p <= n - 1 && -n < q && q < n); break;
  }
  if (!ok) throw_domain("rank-index", "rank function index out of range");
}

}  // namespace

int rank_k(LieType t, const SignedPerm& w, int q, int p) {
  int n = w.size();
  check_rank_args(t, n, q, p);
  int k = 0;
  switch (t) {
    case LieType::A:
      for (int s = 1; s <= p; ++s)
        if (w(s) > q) ++k;
      break;
    case LieType::B:
    case LieType::C:
      for (int s = -n; s <= -p; ++s)
        if (w(s) >= q) ++k;
      break;
    case LieType::D:
      for (int s = -n; s <= -p - 1; ++s)
        if (w(s) > q) ++k;
      break;
  }
  return k;
}

int rank_r(LieType t, const SignedPerm& w, int q, int p) {
  int n = w.size();
  int k = rank_k(t, w, q, p);
  switch (t) {
    case LieType::A: return p - k;
    case LieType::B:
    case LieType::C: return n + 1 - p - k;
    case LieType::D: return n - p - k;
  }
  return 0;
}

int first_simple(LieType t) { return t == LieType::A ? 1 : 0; }

SignedPerm apply_simple_right(LieType t, const SignedPerm& w, int s) {
  std::vector<int> win = w.window();
  int n = w.size();
  if (s >= 1 && s <= n - 1) {
    std::swap(win[static_cast<size_t>(s - 1)], win[static_cast<size_t>(s)]);
  } else if (s == 0 && (t == LieType::B || t == LieType::C)) {
    win[0] = -win[0];
  } else if (s == 0 && t == LieType::D) {
    int a = win[0], b = win[1];
    win[0] = -b;
    win[1] = -a;
  } else {
    throw_domain("simple-index", "simple generator index out of range");
  }
  return SignedPerm(std::move(win));
}

bool right_descent(LieType t, const SignedPerm& w, int s) {
  if (s >= 1) return w(s) > w(s + 1);
  if (t == LieType::D) return w(1) + w(2) < 0;
  return w(1) < 0;  // B/C sign generator
}

bool bruhat_leq(LieType t, const SignedPerm& w0, const SignedPerm& v0) {
  if (w0.size() != v0.size())
    throw_domain("rank-mismatch", "bruhat_leq: rank mismatch");
  require_valid(t, w0);
  require_valid(t, v0);
  SignedPerm w = w0, v = v0;
  int lw = length(t, w), lv = length(t, v);
  int n = w.size();
  while (true) {
    if (w == v) return true;
    if (lw >= lv) return false;
    // v != e, so it has a right descent; use the first one
    int s = -1;
    for (int i = first_simple(t); i <= n - 1; ++i) {
      if (right_descent(t, v, i)) {
        s = i;
        break;
      }
    }
    v = apply_simple_right(t, v, s);
    --lv;
    if (right_descent(t, w, s)) {
      w = apply_simple_right(t, w, s);
      --lw;
    }
  }
}

namespace {

// Simple generators of the parabolic subgroup stabilizing the partial flag
// with steps at the given p-values.  Type A flags grow from the top (E_p =
// first p positions); signed flags shrink (E_p spans the window positions
// from p (C/B) or p+1 (D) up to n).
bool simple_in_parabolic(LieType t, int n, int s, const std::vector<int>& pset) {
  auto has = [&](int x) { return std::find(pset.begin(), pset.end(), x) != pset.end(); };
  if (s >= 1 && s <= n - 1) {
    switch (t) {
      case LieType::A: return !has(s);
      case LieType::B:
      case LieType::C: return !has(s + 1);
      case LieType::D: return !has(s);
    }
  }
  if (s == 0) {
    if (t == LieType::B || t == LieType::C) return !has(1);
    if (t == LieType::D) return !has(0) && !has(1);
  }
  return false;
}

}  // namespace

bool is_coset_minimal(LieType t, const SignedPerm& v, const std::vector<int>& pset) {
  int n = v.size();
  for (int s = first_simple(t); s <= n - 1; ++s)
    if (simple_in_parabolic(t, n, s, pset) && right_descent(t, v, s)) return false;
  return true;
}

SignedPerm coset_minimize(LieType t, const SignedPerm& v0, const std::vector<int>& pset) {
  SignedPerm v = v0;
  int n = v.size();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s = first_simple(t); s <= n - 1; ++s) {
      if (simple_in_parabolic(t, n, s, pset) && right_descent(t, v, s)) {
        v = apply_simple_right(t, v, s);
        moved = true;
      }
    }
  }
  return v;
}

SignedPerm grassmannian_perm(LieType t, const Shape& lambda, int d, int n) {
  Shape lam = lambda.normalized();
  if (t == LieType::A) {
    if (d < 0 || d > n) throw_domain("grassmannian", "descent position out of range");
    if (lam.rows() > d || lam.part(1) > n - d || !lam.weakly_decreasing())
      throw_domain("grassmannian", "shape does not fit the d x (n-d) box");
    std::vector<int> win;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (int k = 1; k <= d; ++k) {
      int ik = k + lam.part(d + 1 - k);
      win.push_back(ik);
      used[static_cast<size_t>(ik)] = 1;
    }
    for (int j = 1; j <= n; ++j)
      if (!used[static_cast<size_t>(j)]) win.push_back(j);
    return SignedPerm(std::move(win));
  }
  if (t == LieType::B || t == LieType::C) {
    if (!lam.strict(false) || lam.part(1) > n || lam.rows() > n)
      throw_domain("grassmannian", "shape is not strict inside the staircase");
    std::vector<int> win;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (int p : lam.parts) {
      win.push_back(-p);
      used[static_cast<size_t>(p)] = 1;
    }
    for (int j = 1; j <= n; ++j)
      if (!used[static_cast<size_t>(j)]) win.push_back(j);
    return SignedPerm(std::move(win));
  }
  // type D: pad to an even number of parts, shift by one, use the C formula
  if (!lam.strict(true)) throw_domain("grassmannian", "type D shape must be strict");
  std::vector<int> parts = lam.normalized().parts;
  if (parts.size() % 2 != 0) parts.push_back(0);
  if (!parts.empty() && parts.front() > n - 1)
    throw_domain("grassmannian", "shape does not fit at this rank");
  Shape plus;
  for (int p : parts) plus.parts.push_back(p + 1);
  SignedPerm w = grassmannian_perm(LieType::C, plus, n, n);
  require_valid(LieType::D, w);
  return w;
}

std::vector<SignedPerm> all_elements(LieType t, int n) {
  std::vector<SignedPerm> out;
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  do {
    if (t == LieType::A) {
      out.push_back(SignedPerm(base));
      continue;
    }
    unsigned masks = 1u << n;
    for (unsigned m = 0; m < masks; ++m) {
      if (t == LieType::D && (__builtin_popcount(m) % 2) != 0) continue;
      std::vector<int> w = base;
      for (int i = 0; i < n; ++i)
        if (m & (1u << i)) w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
      out.push_back(SignedPerm(std::move(w)));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<SignedPerm> reflections(LieType t, int n) {
  std::vector<SignedPerm> out;
  auto add = [&](std::vector<int> w) { out.push_back(SignedPerm(std::move(w))); };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // transposition (i j)
      std::vector<int> w(static_cast<size_t>(n));
      std::iota(w.begin(), w.end(), 1);
      std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(j - 1)]);
      add(w);
      if (is_signed_type(t)) {
        // negate-swap: i -> -j, j -> -i
        std::vector<int> u(static_cast<size_t>(n));
        std::iota(u.begin(), u.end(), 1);
        u[static_cast<size_t>(i - 1)] = -j;
        u[static_cast<size_t>(j - 1)] = -i;
        add(u);
      }
    }
    if (t == LieType::B || t == LieType::C) {
      std::vector<int> w(static_cast<size_t>(n));
      std::iota(w.begin(), w.end(), 1);
      w[static_cast<size_t>(i - 1)] = -i;
      add(w);
    }
  }
  return out;
}

}  // namespace vexmult

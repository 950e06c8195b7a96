#include "vexmult/excited.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "vexmult/errors.hpp"

namespace vexmult {

DiagramState initial_state(const Shape& lambda0, const ShapeRegion& region) {
  Shape lambda = lambda0.normalized();
  if (!region.mu.contains(lambda))
    throw_domain("shape-containment", "lambda does not fit inside mu");
  if (region.shifted() && !lambda.strict(true))
    throw_domain("shape-strict", "shifted regions require a strict shape");
  if (!region.shifted() && !lambda.weakly_decreasing())
    throw_domain("shape-order", "shape parts must be weakly decreasing");
  DiagramState s;
  for (int r = 1; r <= lambda.rows(); ++r) {
    int start = region.shifted() ? r : 1;
    for (int c = start; c < start + lambda.part(r); ++c) s.emplace_back(r, c);
  }
  return s;
}

namespace {

struct StateOps {
  const ShapeRegion& region;
  LieType t;

  bool occupied(const DiagramState& s, int r, int c) const {
    return std::binary_search(s.begin(), s.end(), std::pair(r, c));
  }
  bool free_cell(const DiagramState& s, int r, int c) const {
    return region.is_cell(r, c) && !occupied(s, r, c);
  }

  // next states from moving the box at index bi, appended to out
  void moves_of_box(const DiagramState& s, size_t bi, std::vector<DiagramState>& out) const {
    auto [i, j] = s[bi];
    bool diagonal = region.shifted() && i == j;
    if (diagonal && (t == LieType::B || t == LieType::D)) {
      if (free_cell(s, i, i + 1) && free_cell(s, i + 1, i + 1) && free_cell(s, i + 1, i + 2) &&
          free_cell(s, i + 2, i + 2))
        out.push_back(replaced(s, bi, {i + 2, i + 2}));
      return;
    }
    if (diagonal) {  // type C corner rule: (i+1,i) is not a cell
      if (free_cell(s, i, i + 1) && free_cell(s, i + 1, i + 1))
        out.push_back(replaced(s, bi, {i + 1, i + 1}));
      return;
    }
    if (free_cell(s, i, j + 1) && free_cell(s, i + 1, j) && free_cell(s, i + 1, j + 1))
      out.push_back(replaced(s, bi, {i + 1, j + 1}));
  }

  static DiagramState replaced(const DiagramState& s, size_t bi, std::pair<int, int> nb) {
    DiagramState t = s;
    t[bi] = nb;
    std::sort(t.begin(), t.end());
    return t;
  }
};

std::string key_of(const DiagramState& s) {
  std::string k;
  k.reserve(s.size() * 2);
  for (auto [r, c] : s) {
    k.push_back(static_cast<char>(r));
    k.push_back(static_cast<char>(c));
  }
  return k;
}

}  // namespace

std::vector<DiagramState> elementary_moves(LieType t, const DiagramState& s,
                                           const ShapeRegion& region) {
  StateOps ops{region, t};
  std::vector<DiagramState> out;
  for (size_t bi = 0; bi < s.size(); ++bi) ops.moves_of_box(s, bi, out);
  return out;
}

std::size_t default_state_cap() {
  if (const char* env = std::getenv("VEXMULT_STATE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

std::vector<DiagramState> enumerate_excited(LieType t, const Shape& lambda, const Shape& mu,
                                            std::size_t cap, bool parallel) {
  ShapeRegion region{t, mu};
  // the canonical keys pack each coordinate into one byte
  if (region.rows() > 250 || region.mu.part(1) + region.rows() > 250)
    throw_resource("region-size", "outer shape too large for the state encoder");
  DiagramState init = initial_state(lambda, region);
  std::unordered_set<std::string> seen;
  std::vector<DiagramState> states;
  std::vector<DiagramState> frontier{init};
  seen.insert(key_of(init));
  states.push_back(init);
  while (!frontier.empty()) {
    std::vector<DiagramState> next;
    if (parallel && frontier.size() >= 64) {
      unsigned nthreads = std::max(2u, std::thread::hardware_concurrency());
      size_t chunk = (frontier.size() + nthreads - 1) / nthreads;
      std::vector<std::future<std::vector<DiagramState>>> futs;
      for (size_t lo = 0; lo < frontier.size(); lo += chunk) {
        size_t hi = std::min(frontier.size(), lo + chunk);
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
          std::vector<DiagramState> local;
          for (size_t i = lo; i < hi; ++i)
            for (auto& m : elementary_moves(t, frontier[i], region)) local.push_back(std::move(m));
          return local;
        }));
      }
      for (auto& f : futs)
        for (auto& m : f.get()) next.push_back(std::move(m));
    } else {
      for (const auto& s : frontier)
        for (auto& m : elementary_moves(t, s, region)) next.push_back(std::move(m));
    }
    frontier.clear();
    for (auto& m : next) {
      std::string k = key_of(m);
      if (seen.insert(std::move(k)).second) {
        states.push_back(m);
        frontier.push_back(std::move(m));
        if (states.size() > cap)
          throw_resource("state-cap", "state cap exceeded after " +
                                          std::to_string(states.size()) + " states");
      }
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

unsigned long long count_excited(LieType t, const Shape& lambda, const Shape& mu,
                                 std::size_t cap) {
  return enumerate_excited(t, lambda, mu, cap).size();
}

std::string render_state(const ShapeRegion& region, const DiagramState& s) {
  std::ostringstream out;
  for (int r = 1; r <= region.rows(); ++r) {
    int maxc = region.shifted() ? r + region.mu.part(r) - 1 : region.mu.part(r);
    for (int c = 1; c <= maxc; ++c) {
      if (!region.is_cell(r, c))
        out << ' ';
      else if (std::binary_search(s.begin(), s.end(), std::pair(r, c)))
        out << '#';
      else
        out << '.';
    }
    out << '\n';
  }
  return out.str();
}

std::string state_json(const DiagramState& s) {
  std::ostringstream out;
  out << "{\"boxes\":[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << '[' << s[i].first << ',' << s[i].second << ']';
  }
  out << "]}";
  return out.str();
}

}  // namespace vexmult

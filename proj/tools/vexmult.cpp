// Command-line front end: one subcommand per pipeline stage.
// Exit codes: 0 ok, 1 verification failed, 2 precondition/domain failure,
// 3 resource cap, 64 usage.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vexmult/diagrams.hpp"
#include "vexmult/excited.hpp"
#include "vexmult/klmatrix.hpp"
#include "vexmult/multiplicity.hpp"
#include "vexmult/vexillary.hpp"
#include "vexmult/weyl.hpp"

namespace {

using namespace vexmult;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Resource: return 3;
    default: return 2;
  }
}

void report_error(const Error& e) {
  std::cerr << "{\"error\":\"" << e.code() << "\",\"message\":\"" << e.what() << "\"}\n";
}

struct Options {
  std::string type = "A";
  std::string w, v, lambda, mu, triple;
  std::string format = "text";
  bool list = false;
  bool render = false;
  bool dump = false;
  bool bar = false;
  int n = 0;
  int trials = 100;
  std::uint64_t prime = 101;
  std::uint64_t seed = 1;
  std::uint64_t cap = 0;
  std::size_t state_cap() const { return cap ? cap : default_state_cap(); }
};

void emit_states(const std::vector<DiagramState>& states) {
  for (const auto& s : states) std::cout << state_json(s) << '\n';
}

int run_mult(const Options& o, bool smooth_only) {
  LieType t = lie_type_from(o.type);
  SignedPerm w = SignedPerm::parse(o.w), v = SignedPerm::parse(o.v);
  bool want_states = o.list && !smooth_only;
  MultiplicityReport rep = multiplicity(t, w, v, want_states, o.state_cap());
  if (smooth_only) {
    std::cout << (rep.value == 1 ? "true" : "false") << '\n';
    return 0;
  }
  if (o.format == "json") {
    std::cout << rep.json() << '\n';
  } else {
    std::cout << rep.value << '\n';
    if (rep.states) emit_states(*rep.states);
  }
  return 0;
}

int run_excite(const Options& o) {
  LieType t = lie_type_from(o.type);
  Shape lam = Shape::parse(o.lambda), mu = Shape::parse(o.mu);
  auto states = enumerate_excited(t, lam, mu, o.state_cap());
  if (o.format == "json") {
    std::cout << "{\"count\":" << states.size() << ",\"states\":[";
    for (size_t i = 0; i < states.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << state_json(states[i]);
    }
    std::cout << "]}\n";
    return 0;
  }
  std::cout << states.size() << '\n';
  if (o.render) {
    ShapeRegion region{t, mu};
    for (const auto& s : states) std::cout << render_state(region, s) << '\n';
  } else if (o.list) {
    emit_states(states);
  }
  return 0;
}

int run_corpus(const Options& o) {
  LieType t = lie_type_from(o.type);
  int n = o.n;
  if (n < 1 || n > 6) throw_resource("corpus-cap", "corpus rank must be between 1 and 6");
  auto elements = all_elements(t, n);
  std::sort(elements.begin(), elements.end(),
            [](const SignedPerm& a, const SignedPerm& b) { return a.window() < b.window(); });
  unsigned long long pairs = 0, singular = 0, maxmult = 0;
  for (const SignedPerm& w : elements) {
    if (!is_vexillary(t, w)) continue;
    Triple tau = triple_of(t, w);
    for (const SignedPerm& v : elements) {
      if (!dominates(tau, v)) continue;
      MultiplicityReport rep = multiplicity(t, w, v, false, o.state_cap());
      ++pairs;
      if (rep.value > 1) ++singular;
      maxmult = std::max(maxmult, rep.value);
      std::cout << rep.json() << '\n';
    }
  }
  std::cout << "{\"pairs\":" << pairs << ",\"singular\":" << singular
            << ",\"max_multiplicity\":" << maxmult << "}\n";
  return 0;
}

int run_kl_verify(const Options& o) {
  LieType t = lie_type_from(o.type);
  SignedPerm v = SignedPerm::parse(o.v);
  WeakTriple wt;
  if (!o.triple.empty()) {
    Triple tau = Triple::parse("type=" + o.type + ";" + o.triple, false);
    wt = weak_triple_from(tau, v);
  } else {
    wt = weak_triple(t, SignedPerm::parse(o.w), v);
  }
  if (o.dump) {
    CellMatrix cm = label_entries(cell_matrix(t, v), wt);
    CellMatrix ds = direct_sum_matrix(wt, v);
    if (o.format == "json") {
      std::cout << "{\"cell\":" << matrix_json(cm) << ",\"direct_sum\":" << matrix_json(ds)
                << "}\n";
    } else {
      std::cout << "# v = " << v.str(o.bar) << '\n';
      std::cout << "# cell matrix\n" << render(cm);
      std::cout << "# direct sum (top block)\n" << render(ds);
    }
  }
  LabelCountResult lc = label_count_check(wt, v);
  SurvivorResult sv = echelon_survivor_check(wt, v);
  RankCheckResult rc = rank_claim_check(wt, v, o.trials, o.prime, o.seed);
  if (o.format == "json") {
    std::cout << "{\"label_count\":{\"labeled_free\":" << lc.labeled_free
              << ",\"expected_mu\":" << lc.expected_mu << ",\"labeled_all\":" << lc.labeled_all
              << ",\"expected_mu_ext\":" << lc.expected_mu_ext
              << ",\"ok\":" << (lc.ok ? "true" : "false") << "},"
              << "\"survivors\":{\"stars\":" << sv.star_survivors
              << ",\"total\":" << sv.total_survivors
              << ",\"matches_labels\":" << (sv.matches_labels ? "true" : "false")
              << ",\"ok\":" << (sv.ok ? "true" : "false") << "},"
              << "\"rank\":{\"trials\":" << rc.trials << ",\"prime\":" << rc.prime
              << ",\"seed\":" << rc.seed << ",\"ok\":" << (rc.ok() ? "true" : "false") << "}}"
              << '\n';
  } else {
    std::cout << "label count: " << lc.labeled_free << " free / " << lc.expected_mu
              << " expected, " << lc.labeled_all << " total / " << lc.expected_mu_ext
              << " expected -> " << (lc.ok ? "ok" : "FAIL") << '\n';
    std::cout << "echelon survivors: " << sv.star_survivors << " stars / " << sv.expected_mu
              << " expected, labels " << (sv.matches_labels ? "match" : "MISMATCH") << " -> "
              << (sv.ok ? "ok" : "FAIL") << '\n';
    std::cout << "rank claim: " << rc.trials << " trials mod " << rc.prime << " -> "
              << (rc.ok() ? "ok" : ("FAIL " + rc.failure)) << '\n';
  }
  return (lc.ok && sv.ok && rc.ok()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vexillary Schubert variety multiplicity toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_w, bool needs_v) {
    sub->add_option("-t,--type", o.type, "Lie type A|B|C|D")->capture_default_str();
    if (needs_w) sub->add_option("-w,--w", o.w, "window of w, e.g. \"-2,1,-3,4,5\"")->required();
    if (needs_v) sub->add_option("-v,--v", o.v, "window of v")->required();
    sub->add_option("-f,--format", o.format, "text|json")->capture_default_str();
    sub->add_flag("--bar-notation", o.bar, "print negatives as 2b instead of -2");
    sub->add_option("--cap", o.cap, "state cap override");
  };

  CLI::App* rothe = app.add_subcommand("rothe", "Rothe diagram of w");
  add_common(rothe, true, false);
  CLI::App* essential = app.add_subcommand("essential", "essential set of w");
  add_common(essential, true, false);
  CLI::App* vex = app.add_subcommand("vexillary", "test whether w is vexillary");
  add_common(vex, true, false);
  CLI::App* triple = app.add_subcommand("triple", "essential triple of a vexillary w");
  add_common(triple, true, false);
  CLI::App* shape = app.add_subcommand("shape", "shape of a vexillary w");
  add_common(shape, true, false);
  CLI::App* outer = app.add_subcommand("outer-shape", "outer shape of a pair w <= v");
  add_common(outer, true, true);

  CLI::App* excite = app.add_subcommand("excite", "enumerate excited diagrams of lambda in mu");
  excite->add_option("-t,--type", o.type, "Lie type A|B|C|D")->capture_default_str();
  excite->add_option("--lambda", o.lambda, "inner shape, e.g. \"2,1\"")->required();
  excite->add_option("--mu", o.mu, "outer shape, e.g. \"3,3,2\"")->required();
  excite->add_option("-f,--format", o.format, "text|json")->capture_default_str();
  excite->add_flag("--render", o.render, "print ASCII pictures");
  excite->add_flag("--list", o.list, "print one JSON box set per state");
  excite->add_option("--cap", o.cap, "state cap override");

  CLI::App* mult = app.add_subcommand("mult", "multiplicity of the Schubert variety of w at v");
  add_common(mult, true, true);
  mult->add_flag("--list", o.list, "also list the excited states");
  CLI::App* smooth = app.add_subcommand("smooth", "smoothness of the point of v on the variety of w");
  add_common(smooth, true, true);

  CLI::App* klv = app.add_subcommand("kl-verify", "matrix-model checks for a pair w <= v");
  add_common(klv, false, true);
  klv->add_option("-w,--w", o.w, "window of w (or use --triple)");
  klv->add_option("--triple", o.triple, "explicit conditions \"k=..;p=..;q=..\"");
  klv->add_option("--trials", o.trials, "random rank trials")->capture_default_str();
  klv->add_option("--prime", o.prime, "field size (odd prime)")->capture_default_str();
  klv->add_option("--seed", o.seed, "master seed")->capture_default_str();
  klv->add_flag("--dump", o.dump, "print the cell and direct-sum matrices");

  CLI::App* corpus = app.add_subcommand("corpus", "all vexillary pairs at rank n");
  corpus->add_option("-t,--type", o.type, "Lie type A|B|C|D")->capture_default_str();
  corpus->add_option("-n,--n", o.n, "rank")->required();
  corpus->add_option("--cap", o.cap, "state cap override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    using vexmult::LieType;
    LieType t = lie_type_from(o.type);
    if (rothe->parsed() || essential->parsed()) {
      SignedPerm w = SignedPerm::parse(o.w);
      bool overlay = essential->parsed();
      if (o.format == "json") {
        if (overlay)
          std::cout << boxes_json(essential_set(t, w).boxes) << '\n';
        else
          std::cout << boxes_json(rothe_diagram(t, w).boxes) << '\n';
      } else {
        std::cout << render_ascii(t, w, overlay);
      }
      return 0;
    }
    if (vex->parsed()) {
      std::cout << (is_vexillary(t, SignedPerm::parse(o.w)) ? "true" : "false") << '\n';
      return 0;
    }
    if (triple->parsed()) {
      Triple tau = triple_of(t, SignedPerm::parse(o.w));
      if (o.format == "json") {
        std::cout << "{\"type\":\"" << to_cstring(tau.type) << "\",\"k\":[";
        for (size_t i = 0; i < tau.k.size(); ++i) std::cout << (i ? "," : "") << tau.k[i];
        std::cout << "],\"p\":[";
        for (size_t i = 0; i < tau.p.size(); ++i) std::cout << (i ? "," : "") << tau.p[i];
        std::cout << "],\"q\":[";
        for (size_t i = 0; i < tau.q.size(); ++i) std::cout << (i ? "," : "") << tau.q[i];
        std::cout << "]}\n";
      } else {
        std::cout << tau.str() << '\n';
      }
      return 0;
    }
    if (shape->parsed()) {
      std::cout << shape_of(triple_of(t, SignedPerm::parse(o.w))).str() << '\n';
      return 0;
    }
    if (outer->parsed()) {
      std::cout << outer_shape(t, SignedPerm::parse(o.w), SignedPerm::parse(o.v)).str() << '\n';
      return 0;
    }
    if (excite->parsed()) return run_excite(o);
    if (mult->parsed()) return run_mult(o, false);
    if (smooth->parsed()) return run_mult(o, true);
    if (klv->parsed()) return run_kl_verify(o);
    if (corpus->parsed()) return run_corpus(o);
  } catch (const Error& e) {
    report_error(e);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"internal\",\"message\":\"" << e.what() << "\"}\n";
    return 70;
  }
  return 0;
}

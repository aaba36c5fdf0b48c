#include "skewcat/cli.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewcat/skewcat.hpp"

namespace skew {

namespace {

using nlohmann::json;

struct Common {
  bool ln = false;
  bool rn = false;
  bool an = false;
  bool json = false;
  bool pretty = false;
  unsigned threads = 1;

  Flags flags() const { return {ln, rn, an}; }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--ln", c.ln, "left normal (lambda invertible)");
  sub->add_flag("--rn", c.rn, "right normal (rho invertible)");
  sub->add_flag("--an", c.an, "associative normal (alpha invertible)");
  sub->add_flag("--json", c.json, "line-delimited JSON output");
}

std::string read_arg(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

// ---- coherence audit ----------------------------------------------------

class Audit {
 public:
  Audit(std::uint64_t seed, int max_atoms) : rng_(seed), max_atoms_(max_atoms) {}

  // Random bracketing of the atoms with up to two units mixed in.
  Formula formula(const std::vector<Formula>& atoms) {
    std::vector<Formula> leaves = atoms;
    int units = pick(0, 2);
    for (int i = 0; i < units; ++i) {
      auto at = static_cast<std::ptrdiff_t>(pick(0, static_cast<int>(leaves.size())));
      leaves.insert(leaves.begin() + at, Formula::unit());
    }
    if (leaves.empty()) leaves.push_back(Formula::unit());
    return bracket(leaves, 0, leaves.size());
  }

  std::vector<Formula> atoms() {
    static const char* names[] = {"X", "Y", "Z"};
    std::vector<Formula> out;
    int n = pick(1, max_atoms_);
    for (int i = 0; i < n; ++i) out.push_back(Formula::atom(names[pick(0, 2)]));
    return out;
  }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  Formula bracket(const std::vector<Formula>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return v[lo];
    auto mid = static_cast<std::size_t>(pick(static_cast<int>(lo) + 1, static_cast<int>(hi) - 1));
    return Formula::tensor(bracket(v, lo, mid), bracket(v, mid, hi));
  }

  std::mt19937_64 rng_;
  int max_atoms_;
};

int coherence(const Common& c, std::uint64_t seed, int max_atoms, int trials, std::ostream& out) {
  Audit audit(seed, max_atoms);
  int mac_lane_fail = 0;
  int thin_fail = 0;
  std::vector<std::string> failures;
  for (int t = 0; t < trials; ++t) {
    auto xs = audit.atoms();
    auto ys = audit.pick(0, 1) == 0 ? xs : audit.atoms();
    Formula a = audit.formula(xs);
    Formula b = audit.formula(ys);
    bool same = frontier(a) == frontier(b);
    std::size_t n = count_derivations(Flags::all(), a, {}, b);
    if (n != (same ? 1u : 0u)) {
      ++mac_lane_fail;
      failures.push_back("mac-lane " + print_formula(a) + " |- " + print_formula(b));
    }
    for (bool an : {false, true}) {
      std::size_t m = count_derivations(Flags{true, true, an}, a, {}, b);
      if (m > 1) {
        ++thin_fail;
        failures.push_back(std::string("thinness ") + (an ? "an " : "") + print_formula(a) +
                           " |- " + print_formula(b));
      }
    }
  }
  bool ok = mac_lane_fail == 0 && thin_fail == 0;
  if (c.json) {
    out << json{{"trials", trials},       {"seed", seed},
                {"max_atoms", max_atoms}, {"mac_lane_failures", mac_lane_fail},
                {"thinness_failures", thin_fail}, {"failures", failures},
                {"pass", ok}}
               .dump()
        << "\n";
  } else {
    for (const auto& f : failures) out << "FAIL " << f << "\n";
    out << "mac-lane: " << (mac_lane_fail == 0 ? "pass" : "fail") << " ("
        << trials - mac_lane_fail << "/" << trials << ")\n";
    out << "thinness: " << (thin_fail == 0 ? "pass" : "fail") << " (" << thin_fail
        << " failures)\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"Proof search and coherence for skew monoidal categories", "skewcat"};
  app.require_subcommand(1);
  Common c;

  std::string seq_text;
  auto* enumerate = app.add_subcommand("enumerate", "print every focused derivation of a sequent");
  add_common(enumerate, c);
  enumerate->add_flag("--pretty", c.pretty, "indented rendering");
  enumerate->add_option("--threads", c.threads, "worker threads for the search");
  enumerate->add_option("sequent", seq_text, "S | G |- C, or A |- C")->required();

  auto* count = app.add_subcommand("count", "count focused derivations of a sequent");
  add_common(count, c);
  count->add_option("sequent", seq_text)->required();

  std::string lhs, rhs;
  auto* equal = app.add_subcommand("equal", "decide equality of two categorical derivations");
  add_common(equal, c);
  equal->add_option("f", lhs)->required();
  equal->add_option("g", rhs)->required();

  std::string deriv_text;
  auto* normalize = app.add_subcommand("normalize", "focused and rewrite normal forms");
  add_common(normalize, c);
  normalize->add_option("derivation", deriv_text)->required();

  auto* hom = app.add_subcommand("hom", "representatives of every map A ==> C");
  add_common(hom, c);
  hom->add_option("source", lhs)->required();
  hom->add_option("target", rhs)->required();

  std::uint64_t seed = 1;
  int max_atoms = 5;
  int trials = 200;
  auto* coh = app.add_subcommand("coherence", "randomized coherence and thinness audit");
  coh->add_flag("--json", c.json);
  coh->add_option("--seed", seed);
  coh->add_option("--max-atoms", max_atoms)->check(CLI::Range(1, 8));
  coh->add_option("--trials", trials)->check(CLI::NonNegativeNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Flags fl = c.flags();
    if (enumerate->parsed()) {
      Sequent s = parse_sequent(read_arg(seq_text, in));
      SearchOptions opts;
      opts.threads = std::max(1u, c.threads);
      auto ds = search(fl, root_sequent(s), opts);
      for (const auto& d : ds) {
        if (c.json) {
          out << json{{"derivation", to_sexpr(d)}}.dump() << "\n";
        } else if (c.pretty) {
          out << pretty(d) << "\n";
        } else {
          out << to_sexpr(d) << "\n";
        }
      }
      if (c.json) {
        out << json{{"sequent", print_sequent(s)}, {"flags", to_string(fl)}, {"count", ds.size()}}
                   .dump()
            << "\n";
      } else {
        out << "count: " << ds.size() << "\n";
      }
      return 0;
    }
    if (count->parsed()) {
      Sequent s = parse_sequent(read_arg(seq_text, in));
      std::size_t n = count_derivations(fl, s);
      if (c.json) {
        out << json{{"sequent", print_sequent(s)}, {"flags", to_string(fl)}, {"count", n}}.dump()
            << "\n";
      } else {
        out << n << "\n";
      }
      return 0;
    }
    if (equal->parsed()) {
      CatDeriv f = parse_cat_deriv(read_arg(lhs, in));
      CatDeriv g = parse_cat_deriv(read_arg(rhs, in));
      bool eq = cat_equal(f, g, fl);
      if (c.json) {
        out << json{{"equal", eq}}.dump() << "\n";
      } else {
        out << (eq ? "equal" : "not-equal") << "\n";
      }
      return eq ? 0 : 1;
    }
    if (normalize->parsed()) {
      SeqDeriv f = parse_seq_deriv(read_arg(deriv_text, in));
      FocDeriv d = focus(f, fl);
      RewriteStats stats;
      SeqDeriv nf = rewrite_nf(f, fl, Strategy::Innermost, default_step_cap(), &stats);
      if (c.json) {
        out << json{{"sequent", print_sequent(f.conclusion())},
                    {"focused", to_sexpr(d)},
                    {"rewrite", to_sexpr(nf)},
                    {"steps", stats.steps}}
                   .dump()
            << "\n";
      } else {
        out << "focused: " << to_sexpr(d) << "\n";
        out << "rewrite: " << to_sexpr(nf) << "\n";
      }
      return 0;
    }
    if (hom->parsed()) {
      Formula a = parse_formula(read_arg(lhs, in));
      Formula b = parse_formula(read_arg(rhs, in));
      auto maps = hom_enumerate(fl, a, b);
      for (const auto& m : maps) {
        if (c.json) {
          out << json{{"map", to_sexpr(m)}}.dump() << "\n";
        } else {
          out << to_sexpr(m) << "\n";
        }
      }
      if (c.json) {
        out << json{{"count", maps.size()}}.dump() << "\n";
      } else {
        out << "count: " << maps.size() << "\n";
      }
      return 0;
    }
    if (coh->parsed()) return coherence(c, seed, max_atoms, trials, out);
  } catch (const ParseError& e) {
    if (c.json) {
      out << json{{"error", "parse"}, {"position", e.position()}, {"message", e.message()}}.dump()
          << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TypeError& e) {
    if (c.json) {
      out << json{{"error", "type"}, {"path", e.path()}, {"message", e.message()}}.dump() << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (c.json) out << json{{"error", "other"}, {"message", e.what()}}.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace skew

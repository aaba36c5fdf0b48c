#include <algorithm>
#include <cassert>
#include <functional>
#include <future>
#include <tuple>

#include "skewcat/error.hpp"
#include "skewcat/focused.hpp"

namespace skew {

namespace {

using F = FocDeriv;

// Search and counting share one recursion, parameterized by how results of
// premises are combined.
struct Collect {
  using Result = std::vector<F>;
  static Result empty() { return {}; }
  static void append(Result& a, Result b) {
    if (a.empty()) {
      a = std::move(b);
    } else {
      a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    }
  }
  template <class Make>
  static Result unary(const Result& r, Make make) {
    Result out;
    out.reserve(r.size());
    for (const auto& d : r) out.push_back(make(d));
    return out;
  }
  template <class Make>
  static Result binary(const Result& a, const Result& b, Make make) {
    Result out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
      for (const auto& y : b) out.push_back(make(x, y));
    return out;
  }
  static Result ax(const Formula& x) { return {F::ax(x)}; }
  static Result ir() { return {F::ir()}; }
  static bool none(const Result& r) { return r.empty(); }
};

struct Count {
  using Result = std::size_t;
  static Result empty() { return 0; }
  static void append(Result& a, Result b) { a += b; }
  template <class Make>
  static Result unary(Result r, Make) { return r; }
  template <class Make>
  static Result binary(Result a, Result b, Make) { return a * b; }
  static Result ax(const Formula&) { return 1; }
  static Result ir() { return 1; }
  static bool none(Result r) { return r == 0; }
};

#ifndef NDEBUG
using Measure = std::tuple<std::size_t, int, int, std::size_t>;

Measure measure(Phase ph, const Stoup& s, const Context& om, const Context& g, const Formula& c) {
  std::size_t n = c.size() + (s ? s->size() : 0);
  for (const auto& f : om) n += f.size();
  for (const auto& f : g) n += f.size();
  int rank = ph == Phase::C ? 2 : ph == Phase::L ? 1 : 0;
  return {n, s ? 0 : 1, rank, om.size()};
}
#define SKEW_STEP(parent, child) assert((child) < (parent))
#else
#define SKEW_STEP(parent, child) ((void)0)
#endif

bool irreducible(const Stoup& s) { return !s || s->is_atom(); }

template <class Alg>
class Engine {
 public:
  using Result = typename Alg::Result;

  Engine(const Flags& flags, const SearchOptions& opts) : fl_(flags), opts_(opts) {}

  Result run(const FocSequent& s) {
    if (opts_.prune && seq_frontier(s) != skew::frontier(s.succedent)) return Alg::empty();
    par_ = opts_.threads > 1;
    switch (s.phase) {
      case Phase::C: return c_phase(s.stoup, s.anteroom, s.context, s.succedent);
      case Phase::L:
        if (!s.anteroom.empty()) throw TypeError("L-phase sequent with a nonempty anteroom");
        return l_phase(s.stoup, s.context, s.succedent);
      case Phase::R:
        if (!s.anteroom.empty()) throw TypeError("R-phase sequent with a nonempty anteroom");
        if (!irreducible(s.stoup)) return Alg::empty();
        return r_phase(s.stoup, s.context, s.succedent);
    }
    return Alg::empty();
  }

 private:
  static Frontier seq_frontier(const FocSequent& s) {
    Frontier fr = skew::frontier(s.stoup, s.anteroom);
    for (const auto& f : s.context) append_frontier(f, fr);
    return fr;
  }

  Result c_phase(const Stoup& s, const Context& om, const Context& g, const Formula& c) {
#ifndef NDEBUG
    Measure here = measure(Phase::C, s, om, g, c);
#endif
    if (om.empty()) {
      SKEW_STEP(here, measure(Phase::L, s, {}, g, c));
      return Alg::unary(l_phase(s, g, c), [](const F& d) { return F::swlc(d); });
    }
    const Formula& d = om.back();
    Context rest(om.begin(), om.end() - 1);
    if (fl_.rn && d.is_unit()) {
      SKEW_STEP(here, measure(Phase::C, s, rest, g, c));
      return Alg::unary(c_phase(s, rest, g, c), [](const F& x) { return F::ic(x); });
    }
    if (d.is_tensor() && ((fl_.rn && d.is_closed()) || fl_.an)) {
      rest.push_back(d.left());
      rest.push_back(d.right());
      SKEW_STEP(here, measure(Phase::C, s, rest, g, c));
      return Alg::unary(c_phase(s, rest, g, c), [](const F& x) { return F::otlctx(x); });
    }
    // The remaining case always satisfies the side conditions of act.
    Context g2;
    g2.reserve(g.size() + 1);
    g2.push_back(d);
    g2.insert(g2.end(), g.begin(), g.end());
    SKEW_STEP(here, measure(Phase::C, s, rest, g2, c));
    return Alg::unary(c_phase(s, rest, g2, c), [](const F& x) { return F::act(x); });
  }

  Result l_phase(const Stoup& s, const Context& g, const Formula& c) {
#ifndef NDEBUG
    Measure here = measure(Phase::L, s, {}, g, c);
#endif
    std::vector<std::function<Result()>> alts;
    if (!s && !g.empty()) {
      alts.push_back([&, this] {
        Stoup s2 = g.front();
        Context g2(g.begin() + 1, g.end());
        SKEW_STEP(here, measure(Phase::L, s2, {}, g2, c));
        return Alg::unary(l_phase(s2, g2, c), [](const F& d) { return F::pass(d); });
      });
    }
    if (s && s->is_unit()) {
      alts.push_back([&, this] {
        SKEW_STEP(here, measure(Phase::L, std::nullopt, {}, g, c));
        return Alg::unary(l_phase(std::nullopt, g, c), [](const F& d) { return F::il(d); });
      });
    }
    if (s && s->is_tensor()) {
      alts.push_back([&, this] {
        Stoup s2 = s->left();
        Context om{s->right()};
        SKEW_STEP(here, measure(Phase::C, s2, om, g, c));
        return Alg::unary(c_phase(s2, om, g, c), [](const F& d) { return F::otl(d); });
      });
    }
    if (irreducible(s) && !(fl_.ln && !s && !g.empty())) {
      alts.push_back([&, this] {
        SKEW_STEP(here, measure(Phase::R, s, {}, g, c));
        return Alg::unary(r_phase(s, g, c), [](const F& d) { return F::swrl(d); });
      });
    }
    return combine(alts);
  }

  Result r_phase(const Stoup& s, const Context& g, const Formula& c) {
#ifndef NDEBUG
    Measure here = measure(Phase::R, s, {}, g, c);
#endif
    if (c.is_atom()) {
      if (s && g.empty() && *s == c) return Alg::ax(c);
      return Alg::empty();
    }
    if (c.is_unit()) {
      if (!s && g.empty()) return Alg::ir();
      return Alg::empty();
    }
    const Formula& a = c.left();
    const Formula& b = c.right();
    std::vector<std::function<Result()>> alts;
    // Splits G = G1, G2 with the first premise taking G1.
    Frontier fa;
    Frontier prefix;
    if (opts_.prune) {
      fa = skew::frontier(a);
      prefix = skew::frontier(s);
    }
    for (std::size_t k = 0; k <= g.size(); ++k) {
      if (k > 0 && opts_.prune) append_frontier(g[k - 1], prefix);
      if (opts_.prune && prefix != fa) continue;
      alts.push_back([&, this, k] {
        Context g1(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k));
        Context g2(g.begin() + static_cast<std::ptrdiff_t>(k), g.end());
        SKEW_STEP(here, measure(Phase::R, s, {}, g1, a));
        SKEW_STEP(here, measure(Phase::L, std::nullopt, {}, g2, b));
        Result left = r_phase(s, g1, a);
        if (Alg::none(left)) return Alg::empty();
        Result right = l_phase(std::nullopt, g2, b);
        return Alg::binary(left, right, [](const F& x, const F& y) { return F::otr(x, y); });
      });
    }
    if (fl_.ln && s && s->is_atom() && (!opts_.prune || a.is_closed())) {
      alts.push_back([&, this] {
        SKEW_STEP(here, measure(Phase::R, std::nullopt, {}, {}, a));
        SKEW_STEP(here, measure(Phase::R, s, {}, g, b));
        Result left = r_phase(std::nullopt, {}, a);
        if (Alg::none(left)) return Alg::empty();
        Result right = r_phase(s, g, b);
        return Alg::binary(left, right, [](const F& x, const F& y) { return F::otrem(x, y); });
      });
    }
    return combine(alts);
  }

  // Runs the alternatives in order. The first choice point with more than
  // one alternative fans out to worker threads when enabled.
  Result combine(std::vector<std::function<Result()>>& alts) {
    Result out = Alg::empty();
    if (par_ && alts.size() > 1) {
      par_ = false;
      std::vector<Result> parts(alts.size());
      std::size_t next = 0;
      while (next < alts.size()) {
        std::vector<std::future<Result>> batch;
        std::size_t stop = std::min(alts.size(), next + opts_.threads);
        for (std::size_t i = next; i < stop; ++i) {
          // Workers only read the engine; par_ is already off.
          batch.push_back(std::async(std::launch::async, [&alts, i] { return alts[i](); }));
        }
        for (std::size_t i = next; i < stop; ++i) parts[i] = batch[i - next].get();
        next = stop;
      }
      for (auto& p : parts) Alg::append(out, std::move(p));
      return out;
    }
    for (auto& alt : alts) Alg::append(out, alt());
    return out;
  }

  Flags fl_;
  SearchOptions opts_;
  bool par_ = false;
};

}  // namespace

std::vector<FocDeriv> search(const Flags& flags, const FocSequent& seq,
                             const SearchOptions& opts) {
  return Engine<Collect>(flags, opts).run(seq);
}

std::size_t count_derivations(const Flags& flags, const Stoup& s, const Context& g,
                              const Formula& c, const SearchOptions& opts) {
  return Engine<Count>(flags, opts).run(FocSequent{Phase::C, s, g, {}, c});
}

std::size_t count_derivations(const Flags& flags, const Sequent& s,
                              const SearchOptions& opts) {
  return count_derivations(flags, s.stoup, s.context, s.succedent, opts);
}

}  // namespace skew

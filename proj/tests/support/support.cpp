#include "support.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace skew::testing {

namespace {

using D = CatDeriv;
using S = SeqDeriv;

Context slice(const Context& g, std::size_t from, std::size_t to) {
  return Context(g.begin() + static_cast<std::ptrdiff_t>(from),
                 g.begin() + static_cast<std::ptrdiff_t>(to));
}

void bracket_all(const std::vector<Formula>& v, std::size_t lo, std::size_t hi,
                 std::vector<Formula>& out) {
  if (hi - lo == 1) {
    out.push_back(v[lo]);
    return;
  }
  for (std::size_t mid = lo + 1; mid < hi; ++mid) {
    std::vector<Formula> ls, rs;
    bracket_all(v, lo, mid, ls);
    bracket_all(v, mid, hi, rs);
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back(Formula::tensor(l, r));
  }
}

}  // namespace

std::vector<Formula> bracketings(const std::vector<Formula>& leaves) {
  std::vector<Formula> out;
  if (!leaves.empty()) bracket_all(leaves, 0, leaves.size(), out);
  return out;
}

std::vector<Formula> corpus(int max_atoms, int max_units, const std::vector<std::string>& atoms) {
  std::vector<Formula> out;
  int max_len = max_atoms + max_units;
  for (int len = 1; len <= max_len; ++len) {
    // Each leaf is a unit or one of the atoms; enumerate all words.
    int base = static_cast<int>(atoms.size()) + 1;
    int words = 1;
    for (int i = 0; i < len; ++i) words *= base;
    for (int w = 0; w < words; ++w) {
      std::vector<Formula> leaves;
      int n_atoms = 0, n_units = 0, code = w;
      for (int i = 0; i < len; ++i) {
        int c = code % base;
        code /= base;
        if (c == 0) {
          ++n_units;
          leaves.push_back(Formula::unit());
        } else {
          ++n_atoms;
          leaves.push_back(Formula::atom(atoms[static_cast<std::size_t>(c - 1)]));
        }
      }
      if (n_atoms > max_atoms || n_units > max_units) continue;
      for (auto& f : bracketings(leaves)) out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<std::string> printed_atoms(const Formula& f) {
  std::string text = print_formula(f);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
              text[j] == '\''))
        ++j;
      std::string word = text.substr(i, j - i);
      if (word != "I") out.push_back(word);
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

// ---- unfocused oracle ---------------------------------------------------

std::vector<DerivabilityOracle::Step> DerivabilityOracle::steps(const Sequent& s) const {
  std::vector<Step> out;
  const Context& g = s.context;
  const Formula& c = s.succedent;
  if (!s.stoup && !g.empty()) {
    out.push_back({{Sequent{g.front(), slice(g, 1, g.size()), c}},
                   [](const std::vector<S>& p) { return S::pass(p[0]); }});
  }
  if (s.stoup && s.stoup->is_unit()) {
    out.push_back({{Sequent{std::nullopt, g, c}},
                   [](const std::vector<S>& p) { return S::il(p[0]); }});
  }
  if (s.stoup && s.stoup->is_tensor()) {
    Context g2{s.stoup->right()};
    g2.insert(g2.end(), g.begin(), g.end());
    out.push_back({{Sequent{s.stoup->left(), g2, c}},
                   [](const std::vector<S>& p) { return S::otl(p[0]); }});
  }
  if (s.stoup && g.empty() && *s.stoup == c) {
    out.push_back({{}, [c](const std::vector<S>&) { return S::ax(c); }});
  }
  if (!s.stoup && g.empty() && c.is_unit()) {
    out.push_back({{}, [](const std::vector<S>&) { return S::ir(); }});
  }
  if (c.is_tensor()) {
    for (std::size_t k = 0; k <= g.size(); ++k) {
      out.push_back({{Sequent{s.stoup, slice(g, 0, k), c.left()},
                      Sequent{std::nullopt, slice(g, k, g.size()), c.right()}},
                     [](const std::vector<S>& p) { return S::otr(p[0], p[1]); }});
    }
    if (fl_.ln && s.stoup) {
      out.push_back({{Sequent{std::nullopt, {}, c.left()}, Sequent{s.stoup, g, c.right()}},
                     [](const std::vector<S>& p) { return S::otrem(p[0], p[1]); }});
    }
  }
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Formula& d = g[k];
    Context without = g;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(k));
    Context split = without;
    if (d.is_tensor()) {
      split.insert(split.begin() + static_cast<std::ptrdiff_t>(k), d.right());
      split.insert(split.begin() + static_cast<std::ptrdiff_t>(k), d.left());
    }
    if (fl_.rn && d.is_unit()) {
      out.push_back({{Sequent{s.stoup, without, c}},
                     [k](const std::vector<S>& p) { return S::ic(k, p[0]); }});
    }
    if (fl_.rn && d.is_tensor() && d.is_closed()) {
      out.push_back({{Sequent{s.stoup, split, c}},
                     [k](const std::vector<S>& p) { return S::jjc(k, p[0]); }});
    }
    if (fl_.an && d.is_tensor()) {
      out.push_back({{Sequent{s.stoup, split, c}},
                     [k](const std::vector<S>& p) { return S::otlctx(k, p[0]); }});
    }
  }
  return out;
}

bool DerivabilityOracle::derivable(const Sequent& s) {
  std::string key = print_sequent(s);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  bool ok = false;
  for (const auto& st : steps(s)) {
    bool all = true;
    for (const auto& p : st.premises) {
      if (!derivable(p)) {
        all = false;
        break;
      }
    }
    if (all) {
      ok = true;
      break;
    }
  }
  memo_[key] = ok;
  return ok;
}

std::vector<SeqDeriv> DerivabilityOracle::enumerate(const Sequent& s, std::size_t limit) {
  std::vector<SeqDeriv> out;
  if (!derivable(s)) return out;
  for (const auto& st : steps(s)) {
    std::vector<std::vector<SeqDeriv>> ps;
    bool empty = false;
    for (const auto& p : st.premises) {
      ps.push_back(enumerate(p, limit));
      if (ps.back().empty()) {
        empty = true;
        break;
      }
    }
    if (empty) continue;
    std::vector<SeqDeriv> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (out.size() >= limit) throw std::runtime_error("enumeration limit exceeded");
      if (i == ps.size()) {
        out.push_back(st.build(chosen));
        return;
      }
      for (const auto& d : ps[i]) {
        chosen.push_back(d);
        rec(i + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

// ---- random generation --------------------------------------------------

Formula Gen::atom() {
  static const char* names[] = {"X", "Y", "Z"};
  return Formula::atom(names[pick(0, 2)]);
}

Formula Gen::bracket(const std::vector<Formula>& leaves) {
  std::function<Formula(std::size_t, std::size_t)> rec = [&](std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return leaves[lo];
    auto mid = static_cast<std::size_t>(pick(static_cast<int>(lo) + 1, static_cast<int>(hi) - 1));
    return Formula::tensor(rec(lo, mid), rec(mid, hi));
  };
  return rec(0, leaves.size());
}

std::vector<Formula> Gen::leaves(int max_atoms, int max_units) {
  std::vector<Formula> out;
  int n = pick(0, max_atoms);
  for (int i = 0; i < n; ++i) out.push_back(atom());
  int u = pick(0, max_units);
  for (int i = 0; i < u; ++i) {
    auto at = static_cast<std::ptrdiff_t>(pick(0, static_cast<int>(out.size())));
    out.insert(out.begin() + at, Formula::unit());
  }
  if (out.empty()) out.push_back(coin() ? Formula::unit() : atom());
  return out;
}

Formula Gen::formula(int max_leaves) {
  int n = pick(1, max_leaves);
  std::vector<Formula> ls;
  for (int i = 0; i < n; ++i) ls.push_back(pick(0, 3) == 0 ? Formula::unit() : atom());
  return bracket(ls);
}

CatDeriv Gen::cat(const Formula& src, int max_size, const Flags& flags) {
  std::vector<std::function<D()>> leaf;
  leaf.push_back([&] { return D::id(src); });
  leaf.push_back([&] { return D::rho(src); });
  if (flags.ln) leaf.push_back([&] { return D::lam_inv(src); });
  if (src.is_tensor()) {
    const Formula& a = src.left();
    const Formula& b = src.right();
    if (a.is_unit()) leaf.push_back([a, b] { return D::lam(b); });
    if (a.is_tensor()) leaf.push_back([a, b] { return D::alpha(a.left(), a.right(), b); });
    if (flags.rn && b.is_unit()) leaf.push_back([a, b] { return D::rho_inv(a); });
    if (flags.an && b.is_tensor())
      leaf.push_back([a, b] { return D::alpha_inv(a, b.left(), b.right()); });
  }
  std::vector<std::function<D()>> compound;
  if (max_size >= 3) {
    compound.push_back([&] {
      D f = cat(src, pick(1, max_size - 2), flags);
      Endpoints e = check_cat(f, flags);
      D g = cat(e.target, max_size - 1 - static_cast<int>(f.size()), flags);
      return D::comp(g, f);
    });
    if (src.is_tensor()) {
      compound.push_back([&] {
        D f = cat(src.left(), pick(1, max_size - 2), flags);
        D g = cat(src.right(), max_size - 1 - static_cast<int>(f.size()), flags);
        return D::tensor(f, g);
      });
    }
  }
  if (!compound.empty() && pick(0, 9) < 6)
    return compound[static_cast<std::size_t>(pick(0, static_cast<int>(compound.size()) - 1))]();
  return leaf[static_cast<std::size_t>(pick(0, static_cast<int>(leaf.size()) - 1))]();
}

Sequent Gen::derivable_sequent(const Flags& flags, DerivabilityOracle& oracle, int max_atoms,
                               int max_units) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Formula> xs;
    int n = pick(0, max_atoms);
    for (int i = 0; i < n; ++i) xs.push_back(atom());
    auto sprinkle = [&](std::vector<Formula> v) {
      int u = pick(0, max_units);
      for (int i = 0; i < u; ++i) {
        auto at = static_cast<std::ptrdiff_t>(pick(0, static_cast<int>(v.size())));
        v.insert(v.begin() + at, Formula::unit());
      }
      if (v.empty()) v.push_back(Formula::unit());
      return v;
    };
    std::vector<Formula> ant = sprinkle(xs);
    std::vector<Formula> suc = sprinkle(xs);
    // Cut the antecedent leaves into stoup and context segments.
    Sequent s{std::nullopt, {}, bracket(suc)};
    std::size_t i = 0;
    bool stoup = pick(0, 3) != 0;
    std::vector<std::vector<Formula>> segs;
    while (i < ant.size()) {
      auto len = static_cast<std::size_t>(pick(1, static_cast<int>(ant.size() - i)));
      segs.emplace_back(ant.begin() + static_cast<std::ptrdiff_t>(i),
                        ant.begin() + static_cast<std::ptrdiff_t>(i + len));
      i += len;
    }
    for (std::size_t k = 0; k < segs.size(); ++k) {
      Formula f = bracket(segs[k]);
      if (k == 0 && stoup) {
        s.stoup = f;
      } else {
        s.context.push_back(f);
      }
    }
    if (oracle.derivable(s)) return s;
  }
  throw std::runtime_error("no derivable sequent found");
}

SeqDeriv Gen::seq(const Sequent& s, const Flags& flags, DerivabilityOracle& oracle) {
  std::vector<DerivabilityOracle::Step> ok;
  for (auto& st : oracle.steps(s)) {
    bool all = true;
    for (const auto& p : st.premises) all = all && oracle.derivable(p);
    if (all) ok.push_back(std::move(st));
  }
  if (ok.empty()) throw std::runtime_error("underivable: " + print_sequent(s));
  const auto& st = ok[static_cast<std::size_t>(pick(0, static_cast<int>(ok.size()) - 1))];
  std::vector<SeqDeriv> ps;
  for (const auto& p : st.premises) ps.push_back(seq(p, flags, oracle));
  return st.build(ps);
}

SeqDeriv Gen::seq(const Flags& flags, DerivabilityOracle& oracle, int max_atoms, int max_units) {
  return seq(derivable_sequent(flags, oracle, max_atoms, max_units), flags, oracle);
}

}  // namespace skew::testing

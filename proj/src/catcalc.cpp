#include "skewcat/catcalc.hpp"

#include "skewcat/error.hpp"
#include "skewcat/sexpr.hpp"

namespace skew {

CatDeriv CatDeriv::make(Rule r, std::vector<Formula> ps, std::vector<CatDeriv> cs) {
  auto n = std::make_shared<Node>();
  n->rule = r;
  n->params = std::move(ps);
  for (const auto& c : cs) n->size += c.size();
  n->children = std::move(cs);
  return CatDeriv(std::move(n));
}

CatDeriv CatDeriv::id(Formula a) { return make(Rule::Id, {std::move(a)}, {}); }
CatDeriv CatDeriv::comp(CatDeriv g, CatDeriv f) {
  return make(Rule::Comp, {}, {std::move(g), std::move(f)});
}
CatDeriv CatDeriv::tensor(CatDeriv f, CatDeriv g) {
  return make(Rule::TensorMap, {}, {std::move(f), std::move(g)});
}
CatDeriv CatDeriv::lam(Formula a) { return make(Rule::Lam, {std::move(a)}, {}); }
CatDeriv CatDeriv::rho(Formula a) { return make(Rule::Rho, {std::move(a)}, {}); }
CatDeriv CatDeriv::alpha(Formula a, Formula b, Formula c) {
  return make(Rule::Alpha, {std::move(a), std::move(b), std::move(c)}, {});
}
CatDeriv CatDeriv::lam_inv(Formula a) { return make(Rule::LamInv, {std::move(a)}, {}); }
CatDeriv CatDeriv::rho_inv(Formula a) { return make(Rule::RhoInv, {std::move(a)}, {}); }
CatDeriv CatDeriv::alpha_inv(Formula a, Formula b, Formula c) {
  return make(Rule::AlphaInv, {std::move(a), std::move(b), std::move(c)}, {});
}

bool operator==(const CatDeriv& a, const CatDeriv& b) {
  if (a.node_ == b.node_) return true;
  return a.rule() == b.rule() && a.params() == b.params() &&
         a.children() == b.children();
}

namespace {

using R = CatDeriv::Rule;

Formula ot(const Formula& a, const Formula& b) { return Formula::tensor(a, b); }

std::string child_path(const std::string& path, int i) {
  return path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
}

Endpoints check_at(const CatDeriv& d, const Flags& flags, const std::string& path) {
  const auto& p = d.params();
  switch (d.rule()) {
    case R::Id:
      return {p[0], p[0]};
    case R::Comp: {
      Endpoints g = check_at(d.children()[0], flags, child_path(path, 0));
      Endpoints f = check_at(d.children()[1], flags, child_path(path, 1));
      if (f.target != g.source)
        throw TypeError("comp: target " + print_formula(f.target) +
                            " of the first map differs from source " +
                            print_formula(g.source) + " of the second",
                        path);
      return {f.source, g.target};
    }
    case R::TensorMap: {
      Endpoints f = check_at(d.children()[0], flags, child_path(path, 0));
      Endpoints g = check_at(d.children()[1], flags, child_path(path, 1));
      return {ot(f.source, g.source), ot(f.target, g.target)};
    }
    case R::Lam:
      return {ot(Formula::unit(), p[0]), p[0]};
    case R::Rho:
      return {p[0], ot(p[0], Formula::unit())};
    case R::Alpha:
      return {ot(ot(p[0], p[1]), p[2]), ot(p[0], ot(p[1], p[2]))};
    case R::LamInv:
      if (!flags.ln) throw FlagError("laminv requires ln", path);
      return {p[0], ot(Formula::unit(), p[0])};
    case R::RhoInv:
      if (!flags.rn) throw FlagError("rhoinv requires rn", path);
      return {ot(p[0], Formula::unit()), p[0]};
    case R::AlphaInv:
      if (!flags.an) throw FlagError("alphainv requires an", path);
      return {ot(p[0], ot(p[1], p[2])), ot(ot(p[0], p[1]), p[2])};
  }
  throw TypeError("unknown rule", path);
}

}  // namespace

Endpoints check_cat(const CatDeriv& d, const Flags& flags) {
  return check_at(d, flags, "");
}

CatDeriv tensor_ctx(const CatDeriv& f, const Context& g) {
  CatDeriv acc = f;
  for (const auto& c : g) acc = CatDeriv::tensor(std::move(acc), CatDeriv::id(c));
  return acc;
}

CatDeriv alpha_c_inv(const Formula& a, const Formula& j, const Formula& j2) {
  if (!j.is_closed() || !j2.is_closed())
    throw TypeError("alpha_c_inv needs closed second and third formulas");
  using D = CatDeriv;
  if (j2.is_unit()) {
    // A (x) (J (x) I) -> A (x) J -> (A (x) J) (x) I
    return D::comp(D::rho(ot(a, j)), D::tensor(D::id(a), D::rho_inv(j)));
  }
  // J' = K (x) K':
  // A(JK K') -> A((JK)K') -> (A(JK))K' -> ((AJ)K)K' -> (AJ)(KK')
  const Formula& k = j2.left();
  const Formula& k2 = j2.right();
  D step1 = D::tensor(D::id(a), alpha_c_inv(j, k, k2));
  D step2 = alpha_c_inv(a, ot(j, k), k2);
  D step3 = D::tensor(alpha_c_inv(a, j, k), D::id(k2));
  D step4 = D::alpha(ot(a, j), k, k2);
  return D::comp(step4, D::comp(step3, D::comp(step2, step1)));
}

// ---- serialization ------------------------------------------------------

namespace {

void write(const CatDeriv& d, std::string& out) {
  auto q = [](const Formula& f) { return quote_string(print_formula(f)); };
  const auto& p = d.params();
  switch (d.rule()) {
    case R::Id: out += "(id " + q(p[0]) + ")"; return;
    case R::Lam: out += "(lam " + q(p[0]) + ")"; return;
    case R::Rho: out += "(rho " + q(p[0]) + ")"; return;
    case R::LamInv: out += "(laminv " + q(p[0]) + ")"; return;
    case R::RhoInv: out += "(rhoinv " + q(p[0]) + ")"; return;
    case R::Alpha:
      out += "(alpha " + q(p[0]) + " " + q(p[1]) + " " + q(p[2]) + ")";
      return;
    case R::AlphaInv:
      out += "(alphainv " + q(p[0]) + " " + q(p[1]) + " " + q(p[2]) + ")";
      return;
    case R::Comp:
    case R::TensorMap:
      out += d.rule() == R::Comp ? "(comp " : "(tensor ";
      write(d.children()[0], out);
      out += ' ';
      write(d.children()[1], out);
      out += ')';
      return;
  }
}

Formula formula_arg(const Sexpr& s, std::size_t base) {
  if (s.kind != Sexpr::Kind::String)
    throw ParseError("expected a quoted formula", s.position);
  try {
    return parse_formula(s.text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), base + s.position + 1 + e.position());
  }
}

CatDeriv read(const Sexpr& s) {
  if (!s.is_list() || s.items.empty() || s.items[0].kind != Sexpr::Kind::Symbol)
    throw ParseError("expected a tagged list", s.position);
  const std::string_view tag = s.head();
  auto arity = [&](std::size_t n) {
    if (s.items.size() != n + 1)
      throw ParseError(std::string(tag) + " takes " + std::to_string(n) + " arguments",
                       s.position);
  };
  auto fma = [&](std::size_t i) { return formula_arg(s.items[i], 0); };
  if (tag == "id") { arity(1); return CatDeriv::id(fma(1)); }
  if (tag == "lam") { arity(1); return CatDeriv::lam(fma(1)); }
  if (tag == "rho") { arity(1); return CatDeriv::rho(fma(1)); }
  if (tag == "laminv") { arity(1); return CatDeriv::lam_inv(fma(1)); }
  if (tag == "rhoinv") { arity(1); return CatDeriv::rho_inv(fma(1)); }
  if (tag == "alpha") { arity(3); return CatDeriv::alpha(fma(1), fma(2), fma(3)); }
  if (tag == "alphainv") { arity(3); return CatDeriv::alpha_inv(fma(1), fma(2), fma(3)); }
  if (tag == "comp") { arity(2); return CatDeriv::comp(read(s.items[1]), read(s.items[2])); }
  if (tag == "tensor") { arity(2); return CatDeriv::tensor(read(s.items[1]), read(s.items[2])); }
  throw ParseError("unknown categorical rule '" + std::string(tag) + "'", s.position);
}

}  // namespace

std::string to_sexpr(const CatDeriv& d) {
  std::string out;
  write(d, out);
  return out;
}

CatDeriv parse_cat_deriv(std::string_view text) { return read(parse_sexpr(text)); }

}  // namespace skew

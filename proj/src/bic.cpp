#include "bspec/bic.hpp"

#include "bspec/error.hpp"

namespace bspec {

namespace bic {
namespace {
Bic node(BicKind k, Bic a = nullptr, Bic b = nullptr, Rational q = 0) {
  return std::make_shared<const BicNode>(BicNode{k, std::move(q), std::move(a), std::move(b)});
}
}  // namespace

Bic constant(const Rational& q) { return node(BicKind::Const, nullptr, nullptr, q); }
Bic id() { return node(BicKind::Id); }
Bic add(Bic a, Bic b) { return node(BicKind::Add, std::move(a), std::move(b)); }
Bic mul(Bic a, Bic b) { return node(BicKind::Mul, std::move(a), std::move(b)); }
Bic neg(Bic a) { return node(BicKind::Neg, std::move(a)); }
Bic abs(Bic a) { return node(BicKind::Abs, std::move(a)); }
Bic max(Bic a, Bic b) { return node(BicKind::Max, std::move(a), std::move(b)); }
Bic min(Bic a, Bic b) { return node(BicKind::Min, std::move(a), std::move(b)); }
Bic comp(Bic outer, Bic inner) { return node(BicKind::Comp, std::move(outer), std::move(inner)); }

Bic affine(const Rational& slope, const Rational& offset) {
  Bic lin = slope == 1 ? id() : mul(constant(slope), id());
  return offset == 0 ? lin : add(lin, constant(offset));
}
}  // namespace bic

Rational eval_bic(const Bic& p, const Rational& t) {
  switch (p->kind) {
    case BicKind::Const: return p->q;
    case BicKind::Id: return t;
    case BicKind::Add: return eval_bic(p->a, t) + eval_bic(p->b, t);
    case BicKind::Mul: return eval_bic(p->a, t) * eval_bic(p->b, t);
    case BicKind::Neg: return -eval_bic(p->a, t);
    case BicKind::Abs: return abs_q(eval_bic(p->a, t));
    case BicKind::Max: return max_q(eval_bic(p->a, t), eval_bic(p->b, t));
    case BicKind::Min: return min_q(eval_bic(p->a, t), eval_bic(p->b, t));
    case BicKind::Comp: return eval_bic(p->a, eval_bic(p->b, t));
  }
  return 0;
}

Interval bic_range(const Bic& p, const Interval& d) {
  switch (p->kind) {
    case BicKind::Const: return {p->q, p->q};
    case BicKind::Id: return d;
    case BicKind::Add: {
      Interval a = bic_range(p->a, d), b = bic_range(p->b, d);
      return {a.lo + b.lo, a.hi + b.hi};
    }
    case BicKind::Mul: {
      Interval a = bic_range(p->a, d), b = bic_range(p->b, d);
      Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
      Interval r{c[0], c[0]};
      for (const auto& v : c) {
        r.lo = min_q(r.lo, v);
        r.hi = max_q(r.hi, v);
      }
      return r;
    }
    case BicKind::Neg: {
      Interval a = bic_range(p->a, d);
      return {-a.hi, -a.lo};
    }
    case BicKind::Abs: {
      Interval a = bic_range(p->a, d);
      if (a.lo >= 0) return a;
      if (a.hi <= 0) return {-a.hi, -a.lo};
      return {0, max_q(-a.lo, a.hi)};
    }
    case BicKind::Max: {
      Interval a = bic_range(p->a, d), b = bic_range(p->b, d);
      return {max_q(a.lo, b.lo), max_q(a.hi, b.hi)};
    }
    case BicKind::Min: {
      Interval a = bic_range(p->a, d), b = bic_range(p->b, d);
      return {min_q(a.lo, b.lo), min_q(a.hi, b.hi)};
    }
    case BicKind::Comp: return bic_range(p->a, bic_range(p->b, d));
  }
  return d;
}

namespace {

// nullopt: any delta works (the expression is constant).
using Delta = std::optional<Rational>;

Delta dmin(const Delta& a, const Delta& b) {
  if (!a) return b;
  if (!b) return a;
  return min_q(*a, *b);
}

Rational bound_of(const Interval& r) { return max_q(abs_q(r.lo), abs_q(r.hi)); }

Delta modulus(const Bic& p, const Interval& d, const Rational& eps) {
  switch (p->kind) {
    case BicKind::Const: return std::nullopt;
    case BicKind::Id: return eps;
    case BicKind::Add: return dmin(modulus(p->a, d, eps / 2), modulus(p->b, d, eps / 2));
    case BicKind::Neg:
    case BicKind::Abs: return modulus(p->a, d, eps);
    case BicKind::Max:
    case BicKind::Min: return dmin(modulus(p->a, d, eps), modulus(p->b, d, eps));
    case BicKind::Mul: {
      // |ab - a'b'| <= A|b-b'| + B|a-a'|
      Rational a = bound_of(bic_range(p->a, d)), b = bound_of(bic_range(p->b, d));
      return dmin(modulus(p->a, d, eps / (2 * (b + 1))), modulus(p->b, d, eps / (2 * (a + 1))));
    }
    case BicKind::Comp: {
      Delta outer = modulus(p->a, bic_range(p->b, d), eps);
      if (!outer) return std::nullopt;
      return modulus(p->b, d, *outer / 2);
    }
  }
  return eps;
}

}  // namespace

Rational bic_modulus_on(const Bic& phi, const Interval& dom, const Rational& eps) {
  if (eps <= 0) fail(ErrorKind::ConfigError, "modulus needs a positive epsilon");
  Delta d = modulus(phi, dom, eps);
  return d ? *d : eps;
}

Rational bic_modulus(const Bic& phi, unsigned n, const Rational& eps) {
  return bic_modulus_on(phi, Interval{Rational(-static_cast<int>(n)), Rational(n)}, eps);
}

std::string bic_to_sexpr(const Bic& p) {
  switch (p->kind) {
    case BicKind::Const: return "(const " + format_rational(p->q) + ")";
    case BicKind::Id: return "id";
    case BicKind::Add: return "(add " + bic_to_sexpr(p->a) + " " + bic_to_sexpr(p->b) + ")";
    case BicKind::Mul: return "(mul " + bic_to_sexpr(p->a) + " " + bic_to_sexpr(p->b) + ")";
    case BicKind::Neg: return "(neg " + bic_to_sexpr(p->a) + ")";
    case BicKind::Abs: return "(abs " + bic_to_sexpr(p->a) + ")";
    case BicKind::Max: return "(max " + bic_to_sexpr(p->a) + " " + bic_to_sexpr(p->b) + ")";
    case BicKind::Min: return "(min " + bic_to_sexpr(p->a) + " " + bic_to_sexpr(p->b) + ")";
    case BicKind::Comp: return "(comp " + bic_to_sexpr(p->a) + " " + bic_to_sexpr(p->b) + ")";
  }
  return "";
}

std::size_t bic_size(const Bic& p) {
  if (!p) return 0;
  return 1 + bic_size(p->a) + bic_size(p->b);
}

}  // namespace bspec

#pragma once

#include "bspec/rational.hpp"

#include <memory>

namespace bspec {

enum class BicKind { Const, Id, Add, Mul, Neg, Abs, Max, Min, Comp };

struct BicNode;
using Bic = std::shared_ptr<const BicNode>;

struct BicNode {
  BicKind kind;
  Rational q;  // Const
  Bic a;       // unary argument, left operand, or outer function of Comp
  Bic b;       // right operand, or inner function of Comp
};

namespace bic {
Bic constant(const Rational& q);
Bic id();
Bic add(Bic a, Bic b);
Bic mul(Bic a, Bic b);
Bic neg(Bic a);
Bic abs(Bic a);
Bic max(Bic a, Bic b);
Bic min(Bic a, Bic b);
Bic comp(Bic outer, Bic inner);
Bic affine(const Rational& slope, const Rational& offset);  // slope*t + offset
}  // namespace bic

Rational eval_bic(const Bic& phi, const Rational& t);

struct Interval {
  Rational lo;
  Rational hi;
};

Interval bic_range(const Bic& phi, const Interval& dom);
// delta with |x-y| < delta => |phi(x)-phi(y)| <= eps for x,y in [-n,n].
Rational bic_modulus(const Bic& phi, unsigned n, const Rational& eps);
Rational bic_modulus_on(const Bic& phi, const Interval& dom, const Rational& eps);

std::string bic_to_sexpr(const Bic& phi);
std::size_t bic_size(const Bic& phi);

}  // namespace bspec

#pragma once

#include "bspec/bic.hpp"
#include "bspec/setoid.hpp"

#include <functional>

namespace bspec {

using Values = std::vector<Rational>;

struct RFun {
  Setoid carrier;
  Values values;
};

bool is_extensional(const Setoid& carrier, const Values& v);
Values constant_values(std::size_t n, const Rational& q);
Values pull_back(const Values& f, const SetoidFn& h);  // f o h

// A Bishop space given by a subbase; the topology is its least closure.
struct BSpace {
  Setoid carrier;
  std::vector<Values> gens;
  std::vector<std::string> gen_names;  // optional; same length as gens when set

  std::string gen_name(std::size_t k) const;
};

BSpace make_space(const Setoid& carrier, std::vector<Values> gens, std::vector<std::string> names = {});
Issues validate_space(const BSpace& b);

enum class CertKind { Gen, Const, Add, Bic, Eq, ULim };

struct CertNode;
using Cert = std::shared_ptr<const CertNode>;

struct CertNode {
  CertKind kind;
  std::size_t gen = 0;                           // Gen
  Rational q;                                    // Const
  Bic phi;                                       // Bic
  Cert a;                                        // Add (left), Bic, Eq
  Cert b;                                        // Add (right)
  Values table;                                  // Eq, ULim: claimed conclusion
  std::vector<std::pair<unsigned, Cert>> steps;  // ULim: (n, g_n) with |f - g_n| <= 2^-n
};

namespace cert {
Cert gen(std::size_t k);
Cert constant(const Rational& q);
Cert add(Cert a, Cert b);
Cert bic(Bic phi, Cert c);
Cert eq(Cert c, Values claimed);
Cert ulim(Values target, std::vector<std::pair<unsigned, Cert>> steps);
// Derived constructions built only from the rules above.
Cert neg(Cert c);
Cert sub(Cert a, Cert b);
Cert scale(const Rational& s, Cert c);
Cert mul(Cert a, Cert b);  // ((a+b)^2 - a^2 - b^2)/2
Cert max(Cert a, Cert b);  // (a+b+|a-b|)/2
Cert min(Cert a, Cert b);  // (a+b-|a-b|)/2
}  // namespace cert

struct CertOptions {
  bool witnessed = false;  // accept ULim nodes
  unsigned ulim_depth = 8;
};

struct CertCheck {
  std::optional<Values> conclusion;
  Issues issues;  // laws: RuleMismatch, ValueMismatch, WitnessGap
  bool uses_ulim = false;
  bool ok() const { return conclusion && issues.empty(); }
};

CertCheck evaluate_certificate(const BSpace& b, const Cert& c, const CertOptions& opt = {});
CertCheck validate_certificate(const BSpace& b, const Values& f, const Cert& c, const CertOptions& opt = {});

std::size_t cert_depth(const Cert& c);
std::size_t cert_size(const Cert& c);
bool cert_has_ulim(const Cert& c);
std::string cert_to_sexpr(const Cert& c, const std::function<std::string(std::size_t)>& gen_name = nullptr);

// Structural recursion over certificates (the induction principle of the
// least topology).
template <class R>
struct CertFold {
  std::function<R(std::size_t)> gen;
  std::function<R(const Rational&)> constant;
  std::function<R(R, R)> add;
  std::function<R(const Bic&, R)> bic;
  std::function<R(R, const Values&)> eq;
  std::function<R(const Values&, std::vector<std::pair<unsigned, R>>)> ulim;
};

template <class R>
R fold_certificate(const Cert& c, const CertFold<R>& f) {
  switch (c->kind) {
    case CertKind::Gen: return f.gen(c->gen);
    case CertKind::Const: return f.constant(c->q);
    case CertKind::Add: return f.add(fold_certificate(c->a, f), fold_certificate(c->b, f));
    case CertKind::Bic: return f.bic(c->phi, fold_certificate(c->a, f));
    case CertKind::Eq: return f.eq(fold_certificate(c->a, f), c->table);
    case CertKind::ULim: {
      std::vector<std::pair<unsigned, R>> steps;
      for (const auto& [n, s] : c->steps) steps.emplace_back(n, fold_certificate(s, f));
      return f.ulim(c->table, std::move(steps));
    }
  }
  throw Error(ErrorKind::RuleMismatch, "unknown certificate node");
}

// h: src -> dst with one certificate per dst generator, for g o h over src.
struct MorphismWitness {
  SetoidFn h;
  std::vector<Cert> certs;
};

Issues check_morphism(const BSpace& src, const BSpace& dst, const MorphismWitness& w, const CertOptions& opt = {});
MorphismWitness identity_witness(const BSpace& b);
// Gen(k) -> w.certs[k]; Eq/ULim tables are precomposed with w.h.
Cert lift_certificate(const MorphismWitness& w, const Cert& c);
// w1: X -> Y, w2: Y -> Z gives X -> Z.
MorphismWitness compose_witness(const MorphismWitness& w1, const MorphismWitness& w2);
// Renames generators: Gen(k) -> Gen(map[k]).
Cert rename_gens(const Cert& c, const std::vector<std::size_t>& map);

struct ProductSpace {
  BSpace space;  // generators: f o pr1 for f in a, then g o pr2 for g in b
  MorphismWitness pr1;
  MorphismWitness pr2;
  std::size_t first_count = 0;
};

ProductSpace product_space(const BSpace& a, const BSpace& b);
BSpace relative_space(const BSpace& b, const Subset& a);

// Pointwise exponential space on a supplied list of morphisms.
struct ExpSpace {
  BSpace src;
  BSpace dst;
  std::vector<MorphismWitness> pool;
  BSpace space;  // generator x * |dst gens| + k is phi_{x, g_k}

  std::size_t gen_index(std::size_t x, std::size_t k) const { return x * dst.gens.size() + k; }
  // ev_x : pool -> dst as a morphism.
  MorphismWitness eval(std::size_t x) const;
  std::optional<std::size_t> find(const SetoidFn& h) const;
};

ExpSpace exponential_space(const BSpace& src, const BSpace& dst, std::vector<MorphismWitness> pool,
                           std::vector<std::string> names = {});

}  // namespace bspec

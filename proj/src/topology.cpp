#include "bspec/topology.hpp"

#include <set>

namespace bspec {

bool is_extensional(const Setoid& carrier, const Values& v) {
  for (std::size_t x = 0; x < carrier.size(); ++x)
    if (v[x] != v[carrier.rep(x)]) return false;
  return true;
}

Values constant_values(std::size_t n, const Rational& q) { return Values(n, q); }

Values pull_back(const Values& f, const SetoidFn& h) {
  Values out(h.dom.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = f[h(x)];
  return out;
}

std::string BSpace::gen_name(std::size_t k) const {
  if (k < gen_names.size() && !gen_names[k].empty()) return gen_names[k];
  return "g" + std::to_string(k);
}

BSpace make_space(const Setoid& carrier, std::vector<Values> gens, std::vector<std::string> names) {
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].size() != carrier.size()) fail(ErrorKind::TypeMismatch, "generator table size");
    if (!is_extensional(carrier, gens[k])) fail(ErrorKind::NotExtensional, "generator " + std::to_string(k));
  }
  if (!names.empty() && names.size() != gens.size()) fail(ErrorKind::TypeMismatch, "generator names");
  return BSpace{carrier, std::move(gens), std::move(names)};
}

Issues validate_space(const BSpace& b) {
  Issues out;
  for (std::size_t k = 0; k < b.gens.size(); ++k) {
    if (b.gens[k].size() != b.carrier.size()) out.push_back({"shape", b.gen_name(k)});
    else if (!is_extensional(b.carrier, b.gens[k])) out.push_back({"extensionality", b.gen_name(k)});
  }
  return out;
}

namespace cert {
namespace {
Cert node(CertNode n) { return std::make_shared<const CertNode>(std::move(n)); }
}  // namespace

Cert gen(std::size_t k) { return node(CertNode{CertKind::Gen, k, 0, nullptr, nullptr, nullptr, {}, {}}); }
Cert constant(const Rational& q) { return node(CertNode{CertKind::Const, 0, q, nullptr, nullptr, nullptr, {}, {}}); }
Cert add(Cert a, Cert b) {
  return node(CertNode{CertKind::Add, 0, 0, nullptr, std::move(a), std::move(b), {}, {}});
}
Cert bic(Bic phi, Cert c) {
  return node(CertNode{CertKind::Bic, 0, 0, std::move(phi), std::move(c), nullptr, {}, {}});
}
Cert eq(Cert c, Values claimed) {
  return node(CertNode{CertKind::Eq, 0, 0, nullptr, std::move(c), nullptr, std::move(claimed), {}});
}
Cert ulim(Values target, std::vector<std::pair<unsigned, Cert>> steps) {
  return node(CertNode{CertKind::ULim, 0, 0, nullptr, nullptr, nullptr, std::move(target), std::move(steps)});
}

Cert neg(Cert c) { return bic(bspec::bic::neg(bspec::bic::id()), std::move(c)); }
Cert sub(Cert a, Cert b) { return add(std::move(a), neg(std::move(b))); }
Cert scale(const Rational& s, Cert c) { return bic(bspec::bic::affine(s, 0), std::move(c)); }

Cert mul(Cert a, Cert b) {
  auto sq = bspec::bic::mul(bspec::bic::id(), bspec::bic::id());
  Cert s = bic(sq, add(a, b));
  return scale(Rational(1, 2), sub(sub(s, bic(sq, a)), bic(sq, b)));
}

Cert max(Cert a, Cert b) {
  Cert d = bic(bspec::bic::abs(bspec::bic::id()), sub(a, b));
  return scale(Rational(1, 2), add(add(a, b), d));
}

Cert min(Cert a, Cert b) {
  Cert d = bic(bspec::bic::abs(bspec::bic::id()), sub(a, b));
  return scale(Rational(1, 2), sub(add(a, b), d));
}
}  // namespace cert

namespace {

struct Evaluator {
  const BSpace& b;
  const CertOptions& opt;
  Issues& issues;
  bool uses_ulim = false;

  std::string at(std::size_t x, const Rational& want, const Rational& got) const {
    return "at " + b.carrier.name(x) + ": expected " + format_rational(want) + ", got " + format_rational(got);
  }

  std::optional<Values> run(const Cert& c) {
    std::size_t n = b.carrier.size();
    if (!c) {
      issues.push_back({"RuleMismatch", "empty node"});
      return std::nullopt;
    }
    switch (c->kind) {
      case CertKind::Gen:
        if (c->gen >= b.gens.size()) {
          issues.push_back({"RuleMismatch", "Gen(" + std::to_string(c->gen) + ") out of range"});
          return std::nullopt;
        }
        return b.gens[c->gen];
      case CertKind::Const: return constant_values(n, c->q);
      case CertKind::Add: {
        auto l = run(c->a);
        auto r = run(c->b);
        if (!l || !r) return std::nullopt;
        for (std::size_t x = 0; x < n; ++x) (*l)[x] += (*r)[x];
        return l;
      }
      case CertKind::Bic: {
        if (!c->phi) {
          issues.push_back({"RuleMismatch", "Bic node without function"});
          return std::nullopt;
        }
        auto v = run(c->a);
        if (!v) return std::nullopt;
        for (auto& q : *v) q = eval_bic(c->phi, q);
        return v;
      }
      case CertKind::Eq: {
        auto v = run(c->a);
        if (!v) return std::nullopt;
        if (c->table.size() != n) {
          issues.push_back({"RuleMismatch", "Eq table size"});
          return std::nullopt;
        }
        for (std::size_t x = 0; x < n; ++x)
          if ((*v)[x] != c->table[x]) {
            issues.push_back({"ValueMismatch", "Eq " + at(x, c->table[x], (*v)[x])});
            return std::nullopt;
          }
        return c->table;
      }
      case CertKind::ULim: {
        uses_ulim = true;
        if (!opt.witnessed) {
          issues.push_back({"RuleMismatch", "uniform-limit node outside witnessed mode"});
          return std::nullopt;
        }
        if (c->table.size() != n || !is_extensional(b.carrier, c->table)) {
          issues.push_back({"RuleMismatch", "uniform-limit target table"});
          return std::nullopt;
        }
        std::set<unsigned> seen;
        for (const auto& [k, s] : c->steps) {
          if (k == 0 || k > opt.ulim_depth || !seen.insert(k).second) {
            issues.push_back({"RuleMismatch", "uniform-limit step " + std::to_string(k)});
            return std::nullopt;
          }
          auto g = run(s);
          if (!g) return std::nullopt;
          Rational tol = pow2_neg(k);
          for (std::size_t x = 0; x < n; ++x)
            if (abs_q(c->table[x] - (*g)[x]) > tol) {
              issues.push_back({"ValueMismatch", "step " + std::to_string(k) + " " + at(x, c->table[x], (*g)[x])});
              return std::nullopt;
            }
        }
        for (unsigned k = 1; k <= opt.ulim_depth; ++k)
          if (!seen.count(k)) {
            issues.push_back({"WitnessGap", std::to_string(k)});
            return std::nullopt;
          }
        return c->table;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

CertCheck evaluate_certificate(const BSpace& b, const Cert& c, const CertOptions& opt) {
  CertCheck r;
  Evaluator ev{b, opt, r.issues};
  r.conclusion = ev.run(c);
  r.uses_ulim = ev.uses_ulim;
  if (!r.issues.empty()) r.conclusion.reset();
  return r;
}

CertCheck validate_certificate(const BSpace& b, const Values& f, const Cert& c, const CertOptions& opt) {
  CertCheck r = evaluate_certificate(b, c, opt);
  if (!r.conclusion) return r;
  if (f.size() != b.carrier.size()) {
    r.issues.push_back({"RuleMismatch", "target table size"});
    return r;
  }
  for (std::size_t x = 0; x < f.size(); ++x)
    if ((*r.conclusion)[x] != f[x]) {
      r.issues.push_back({"ValueMismatch", "at " + b.carrier.name(x) + ": expected " + format_rational(f[x]) +
                                               ", got " + format_rational((*r.conclusion)[x])});
      break;
    }
  return r;
}

std::size_t cert_depth(const Cert& c) {
  return fold_certificate<std::size_t>(
      c, {[](std::size_t) { return std::size_t{1}; }, [](const Rational&) { return std::size_t{1}; },
          [](std::size_t a, std::size_t b) { return 1 + std::max(a, b); }, [](const Bic&, std::size_t a) { return 1 + a; },
          [](std::size_t a, const Values&) { return 1 + a; },
          [](const Values&, std::vector<std::pair<unsigned, std::size_t>> s) {
            std::size_t m = 0;
            for (auto& p : s) m = std::max(m, p.second);
            return 1 + m;
          }});
}

std::size_t cert_size(const Cert& c) {
  return fold_certificate<std::size_t>(
      c, {[](std::size_t) { return std::size_t{1}; }, [](const Rational&) { return std::size_t{1}; },
          [](std::size_t a, std::size_t b) { return 1 + a + b; }, [](const Bic&, std::size_t a) { return 1 + a; },
          [](std::size_t a, const Values&) { return 1 + a; },
          [](const Values&, std::vector<std::pair<unsigned, std::size_t>> s) {
            std::size_t m = 1;
            for (auto& p : s) m += p.second;
            return m;
          }});
}

bool cert_has_ulim(const Cert& c) {
  return fold_certificate<bool>(c, {[](std::size_t) { return false; }, [](const Rational&) { return false; },
                                    [](bool a, bool b) { return a || b; }, [](const Bic&, bool a) { return a; },
                                    [](bool a, const Values&) { return a; },
                                    [](const Values&, std::vector<std::pair<unsigned, bool>>) { return true; }});
}

static std::string table_sexpr(const Values& v) {
  std::string s = "(table";
  for (const auto& q : v) s += " " + format_rational(q);
  return s + ")";
}

std::string cert_to_sexpr(const Cert& c, const std::function<std::string(std::size_t)>& gen_name) {
  return fold_certificate<std::string>(
      c, {[&](std::size_t k) { return "(gen " + (gen_name ? gen_name(k) : std::to_string(k)) + ")"; },
          [](const Rational& q) { return "(const " + format_rational(q) + ")"; },
          [](std::string a, std::string b) { return "(add " + a + " " + b + ")"; },
          [](const Bic& p, std::string a) { return "(bic " + bic_to_sexpr(p) + " " + a + ")"; },
          [](std::string a, const Values& t) { return "(eq " + a + " " + table_sexpr(t) + ")"; },
          [](const Values& t, std::vector<std::pair<unsigned, std::string>> s) {
            std::string r = "(ulim " + table_sexpr(t);
            for (auto& [n, x] : s) r += " (step " + std::to_string(n) + " " + x + ")";
            return r + ")";
          }});
}

Issues check_morphism(const BSpace& src, const BSpace& dst, const MorphismWitness& w, const CertOptions& opt) {
  Issues out;
  if (!w.h.dom.same_as(src.carrier) || !w.h.cod.same_as(dst.carrier)) {
    out.push_back({"DomainMismatch", "morphism carriers"});
    return out;
  }
  if (auto v = extensionality_violation(w.h)) {
    out.push_back({"NotExtensional", src.carrier.name(v->first) + ", " + src.carrier.name(v->second)});
    return out;
  }
  for (std::size_t k = 0; k < dst.gens.size(); ++k) {
    if (k >= w.certs.size() || !w.certs[k]) {
      out.push_back({"MissingCertificate", dst.gen_name(k)});
      continue;
    }
    CertCheck r = validate_certificate(src, pull_back(dst.gens[k], w.h), w.certs[k], opt);
    for (auto& i : r.issues) out.push_back({i.law, dst.gen_name(k) + ": " + i.witness});
  }
  return out;
}

MorphismWitness identity_witness(const BSpace& b) {
  MorphismWitness w{identity(b.carrier), {}};
  for (std::size_t k = 0; k < b.gens.size(); ++k) w.certs.push_back(cert::gen(k));
  return w;
}

Cert lift_certificate(const MorphismWitness& w, const Cert& c) {
  return fold_certificate<Cert>(
      c, {[&](std::size_t k) {
            if (k >= w.certs.size() || !w.certs[k]) fail(ErrorKind::MissingCertificate, "generator " + std::to_string(k));
            return w.certs[k];
          },
          [](const Rational& q) { return cert::constant(q); }, [](Cert a, Cert b) { return cert::add(a, b); },
          [](const Bic& p, Cert a) { return cert::bic(p, a); },
          [&](Cert a, const Values& t) { return cert::eq(a, pull_back(t, w.h)); },
          [&](const Values& t, std::vector<std::pair<unsigned, Cert>> s) { return cert::ulim(pull_back(t, w.h), s); }});
}

Cert rename_gens(const Cert& c, const std::vector<std::size_t>& map) {
  return fold_certificate<Cert>(
      c, {[&](std::size_t k) {
            if (k >= map.size()) fail(ErrorKind::MissingCertificate, "generator " + std::to_string(k));
            return cert::gen(map[k]);
          },
          [](const Rational& q) { return cert::constant(q); }, [](Cert a, Cert b) { return cert::add(a, b); },
          [](const Bic& p, Cert a) { return cert::bic(p, a); }, [](Cert a, const Values& t) { return cert::eq(a, t); },
          [](const Values& t, std::vector<std::pair<unsigned, Cert>> s) { return cert::ulim(t, s); }});
}

MorphismWitness compose_witness(const MorphismWitness& w1, const MorphismWitness& w2) {
  MorphismWitness w{compose(w1.h, w2.h), {}};
  for (const auto& c : w2.certs) w.certs.push_back(lift_certificate(w1, c));
  return w;
}

ProductSpace product_space(const BSpace& a, const BSpace& b) {
  Setoid c = product(a.carrier, b.carrier);
  std::size_t nb = b.carrier.size();
  ProductSpace p;
  SetoidFn pr1{c, a.carrier, std::vector<std::size_t>(c.size())};
  SetoidFn pr2{c, b.carrier, std::vector<std::size_t>(c.size())};
  for (std::size_t z = 0; z < c.size(); ++z) {
    pr1.map[z] = z / nb;
    pr2.map[z] = z % nb;
  }
  std::vector<Values> gens;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < a.gens.size(); ++k) {
    gens.push_back(pull_back(a.gens[k], pr1));
    names.push_back(a.gen_name(k) + ".pr1");
  }
  for (std::size_t k = 0; k < b.gens.size(); ++k) {
    gens.push_back(pull_back(b.gens[k], pr2));
    names.push_back(b.gen_name(k) + ".pr2");
  }
  p.space = BSpace{c, std::move(gens), std::move(names)};
  p.first_count = a.gens.size();
  p.pr1 = MorphismWitness{pr1, {}};
  p.pr2 = MorphismWitness{pr2, {}};
  for (std::size_t k = 0; k < a.gens.size(); ++k) p.pr1.certs.push_back(cert::gen(k));
  for (std::size_t k = 0; k < b.gens.size(); ++k) p.pr2.certs.push_back(cert::gen(p.first_count + k));
  return p;
}

BSpace relative_space(const BSpace& b, const Subset& a) {
  if (!a.embed.cod.same_as(b.carrier)) fail(ErrorKind::TypeMismatch, "NotSubset: subset of a different carrier");
  BSpace r{a.carrier, {}, {}};
  for (std::size_t k = 0; k < b.gens.size(); ++k) {
    r.gens.push_back(pull_back(b.gens[k], a.embed));
    r.gen_names.push_back(b.gen_name(k));
  }
  return r;
}

MorphismWitness ExpSpace::eval(std::size_t x) const {
  MorphismWitness w{SetoidFn{space.carrier, dst.carrier, std::vector<std::size_t>(pool.size())}, {}};
  for (std::size_t p = 0; p < pool.size(); ++p) w.h.map[p] = pool[p].h(x);
  for (std::size_t k = 0; k < dst.gens.size(); ++k) w.certs.push_back(cert::gen(gen_index(x, k)));
  return w;
}

std::optional<std::size_t> ExpSpace::find(const SetoidFn& h) const {
  for (std::size_t p = 0; p < pool.size(); ++p)
    if (fn_equal(pool[p].h, h)) return p;
  return std::nullopt;
}

ExpSpace exponential_space(const BSpace& src, const BSpace& dst, std::vector<MorphismWitness> pool,
                           std::vector<std::string> names) {
  for (const auto& m : pool)
    if (!m.h.dom.same_as(src.carrier) || !m.h.cod.same_as(dst.carrier))
      fail(ErrorKind::TypeMismatch, "pool element with wrong domain or codomain");
  if (names.empty())
    for (std::size_t p = 0; p < pool.size(); ++p) names.push_back("h" + std::to_string(p));
  std::vector<std::size_t> labels(pool.size());
  for (std::size_t p = 0; p < pool.size(); ++p) {
    labels[p] = p;
    for (std::size_t q = 0; q < p; ++q)
      if (fn_equal(pool[p].h, pool[q].h)) {
        labels[p] = labels[q];
        break;
      }
  }
  ExpSpace e{src, dst, std::move(pool), {}};
  e.space.carrier = Setoid::from_labels(std::move(names), labels);
  for (std::size_t x = 0; x < src.carrier.size(); ++x)
    for (std::size_t k = 0; k < dst.gens.size(); ++k) {
      Values v(e.pool.size());
      for (std::size_t p = 0; p < e.pool.size(); ++p) v[p] = dst.gens[k][e.pool[p].h(x)];
      e.space.gens.push_back(std::move(v));
      e.space.gen_names.push_back("ev(" + src.carrier.name(x) + "," + dst.gen_name(k) + ")");
    }
  return e;
}

}  // namespace bspec

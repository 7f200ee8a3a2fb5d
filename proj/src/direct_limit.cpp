#include "bspec/limits.hpp"

#include <map>

namespace bspec {

std::size_t DirectLimit::canonical(std::size_t a) const {
  auto [i, x] = element(a);
  return flat(sum.top, to_top(spec.fam, i, x));
}

DirectLimit direct_limit(const Spectrum& s, const ThreadOptions& opt, std::vector<Thread> extra) {
  return DirectLimit{s, sum_space(s, std::move(extra), opt)};
}

Issues validate_direct_limit(const DirectLimit& l) {
  Issues out;
  for (std::size_t i = 0; i < l.spec.size(); ++i)
    if (!is_extensional(eql(l, i))) out.push_back({"eql extensionality", l.spec.index().name(i)});
  const Quotient& q = l.sum.sum;
  for (std::size_t k = 0; k < l.space().gens.size(); ++k) {
    const Values& g = l.space().gens[k];
    std::map<Rational, std::size_t> ids;
    std::vector<std::string> names;
    SetoidFn f{q.base, Setoid(), std::vector<std::size_t>(g.size())};
    for (std::size_t a = 0; a < g.size(); ++a) {
      auto [it, fresh] = ids.emplace(g[a], names.size());
      if (fresh) names.push_back(format_rational(g[a]));
      f.map[a] = it->second;
    }
    f.cod = Setoid::discrete(names);
    try {
      factor_through_quotient(f, q, 0);
    } catch (const Error& e) {
      out.push_back({"factoring", l.space().gen_name(k) + ": " + e.what()});
    }
  }
  return out;
}

SetoidFn eql(const DirectLimit& l, std::size_t i) {
  const Setoid& c = l.spec.fam.carriers[i];
  SetoidFn f{c, l.carrier(), std::vector<std::size_t>(c.size())};
  for (std::size_t x = 0; x < c.size(); ++x) f.map[x] = l.flat(i, x);
  return f;
}

MorphismWitness eql_witness(const DirectLimit& l, std::size_t i) {
  MorphismWitness w{eql(l, i), {}};
  for (const auto& t : l.sum.threads) w.certs.push_back(t.certs[i]);
  return w;
}

Cert certify_thread(const DirectLimit& l, const Thread& t) { return certify_sum(l.spec, l.sum, t); }

Issues validate_cocone(const Spectrum& s, const Cocone& c, const CertOptions& opt) {
  Issues out;
  if (c.legs.size() != s.size()) return {{"shape", "leg count"}};
  const DirectedIndex& d = s.index();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const MorphismWitness& leg = c.legs[i];
    if (!leg.h.dom.same_as(s.spaces[i].carrier) || !leg.h.cod.same_as(c.apex.carrier)) {
      out.push_back({"shape", "leg " + d.name(i)});
      return out;
    }
    for (auto& v : check_morphism(s.spaces[i], c.apex, leg, opt))
      out.push_back({v.law, "leg " + d.name(i) + ": " + v.witness});
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (d.leq(i, j) && !fn_equal(compose(s.fam.transport(i, j), c.legs[j].h), c.legs[i].h))
        out.push_back({"cocone triangle", d.name(i) + "<=" + d.name(j)});
  return out;
}

Cocone own_cocone(const DirectLimit& l) {
  Cocone c{l.space(), {}};
  for (std::size_t i = 0; i < l.spec.size(); ++i) c.legs.push_back(eql_witness(l, i));
  return c;
}

Mediator cocone_mediator(const DirectLimit& l, const Cocone& c, std::size_t uniq_bound, const CertOptions& opt) {
  Issues bad = validate_cocone(l.spec, c, opt);
  if (!bad.empty()) fail(ErrorKind::IllFormedCocone, bad[0].law + ": " + bad[0].witness);
  Mediator m;
  const Setoid& carrier = l.carrier();
  m.h.h = SetoidFn{carrier, c.apex.carrier, std::vector<std::size_t>(carrier.size())};
  for (std::size_t a = 0; a < carrier.size(); ++a) {
    auto [i, x] = l.element(a);
    m.h.h.map[a] = c.legs[i].h(x);
  }
  if (auto v = extensionality_violation(m.h.h)) {
    m.issues.push_back({"well-definedness", carrier.name(v->first) + ", " + carrier.name(v->second)});
    return m;
  }
  for (std::size_t i = 0; i < l.spec.size(); ++i)
    if (!fn_equal(compose(eql(l, i), m.h.h), c.legs[i].h))
      m.issues.push_back({"mediator triangle", l.spec.index().name(i)});
  for (std::size_t g = 0; g < c.apex.gens.size(); ++g) {
    Thread t;
    for (std::size_t i = 0; i < l.spec.size(); ++i) {
      t.vals.push_back(pull_back(c.apex.gens[g], c.legs[i].h));
      t.certs.push_back(c.legs[i].certs[g]);
    }
    m.h.certs.push_back(certify_thread(l, t));
  }
  for (auto& v : check_morphism(l.space(), c.apex, m.h, opt)) m.issues.push_back({v.law, "mediator: " + v.witness});
  std::size_t count = 0;
  bool done = for_each_map(carrier, c.apex.carrier, uniq_bound, [&](const std::vector<std::size_t>& t) {
    for (std::size_t a = 0; a < carrier.size(); ++a) {
      auto [i, x] = l.element(a);
      if (!c.apex.carrier.eq(t[a], c.legs[i].h(x))) return true;
    }
    return ++count < 2;
  });
  if (done) m.uniqueness = count == 1 ? Uniqueness::unique : Uniqueness::not_unique;
  if (m.uniqueness == Uniqueness::not_unique) m.issues.push_back({"uniqueness", "NonUnique"});
  return m;
}

LimitMap limit_map(const SpectrumMap& psi, const DirectLimit& src, const DirectLimit& dst, const CertOptions& opt) {
  Issues bad = validate_family_map(family_map(psi));
  if (!bad.empty()) fail(ErrorKind::TypeMismatch, "spectrum map: " + bad[0].law + " " + bad[0].witness);
  LimitMap r;
  r.map = SetoidFn{src.carrier(), dst.carrier(), std::vector<std::size_t>(src.carrier().size())};
  for (std::size_t a = 0; a < r.map.map.size(); ++a) {
    auto [i, x] = src.element(a);
    r.map.map[a] = dst.flat(i, psi.comps[i](x));
  }
  if (!is_extensional(r.map)) r.issues.push_back({"extensionality", "limit map"});
  for (std::size_t i = 0; i < psi.comps.size(); ++i)
    if (!fn_equal(compose(eql(src, i), r.map), compose(psi.comps[i], eql(dst, i))))
      r.issues.push_back({"eql square", src.spec.index().name(i)});
  if (psi.cont) {
    MorphismWitness w{r.map, {}};
    for (const auto& h : dst.sum.threads) w.certs.push_back(certify_thread(src, pullback_thread(psi, h)));
    for (auto& v : check_morphism(src.space(), dst.space(), w, opt)) r.issues.push_back({v.law, "limit map: " + v.witness});
    r.witness = std::move(w);
  }
  r.components_embeddings = true;
  for (const auto& c : psi.comps) r.components_embeddings = r.components_embeddings && is_embedding(c);
  r.embedding = is_embedding(r.map);
  if (r.components_embeddings && !r.embedding) r.issues.push_back({"embedding propagation", "limit map"});
  return r;
}

Representatives common_representatives(const DirectLimit& l, const std::vector<std::size_t>& elems, bool canonicalize) {
  if (elems.empty()) fail(ErrorKind::ConfigError, "common representatives of an empty list");
  std::vector<std::size_t> in = elems;
  if (canonicalize)
    for (auto& a : in) a = l.canonical(a);
  const DirectedIndex& d = l.spec.index();
  std::size_t k = l.element(in[0]).first;
  for (std::size_t a : in) k = d.upper(k, l.element(a).first);
  Representatives r{k, {}};
  for (std::size_t a : in) {
    auto [i, x] = l.element(a);
    r.elems.push_back(l.spec.fam.transport(i, k)(x));
  }
  return r;
}

Spectrum relative_spectrum(const Spectrum& s, const DirectedIndex& j, const SetoidFn& e) {
  Spectrum r{restrict_family(s.fam, j, e), {}, {}};
  for (std::size_t a = 0; a < j.size(); ++a) r.spaces.push_back(s.spaces[e(a)]);
  r.wit.assign(j.size(), std::vector<std::optional<MorphismWitness>>(j.size()));
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < j.size(); ++b)
      if (j.leq(a, b)) r.wit[a][b] = s.witness(e(a), e(b));
  return r;
}

IsoReport cofinal_direct_iso(const Spectrum& s, const CofinalSubset& c, const ThreadOptions& topt, const CertOptions& opt) {
  IsoReport r;
  const DirectedIndex& d = s.index();
  r.issues = validate_cofinal(d, c);
  if (!r.issues.empty()) return r;
  DirectedIndex jd = cofinal_index(d, c);
  Spectrum sj = relative_spectrum(s, jd, c.e);
  DirectLimit li = direct_limit(s, topt), lj = direct_limit(sj, topt);
  r.phi = SetoidFn{lj.carrier(), li.carrier(), std::vector<std::size_t>(lj.carrier().size())};
  for (std::size_t a = 0; a < r.phi.map.size(); ++a) {
    auto [j, y] = lj.element(a);
    r.phi.map[a] = li.flat(c.e(j), y);
  }
  r.theta = SetoidFn{li.carrier(), lj.carrier(), std::vector<std::size_t>(li.carrier().size())};
  for (std::size_t a = 0; a < r.theta.map.size(); ++a) {
    auto [i, x] = li.element(a);
    std::size_t j = c.cof(i);
    r.theta.map[a] = lj.flat(j, s.fam.transport(i, c.e(j))(x));
  }
  if (!is_extensional(r.phi)) r.issues.push_back({"extensionality", "phi"});
  if (!is_extensional(r.theta)) r.issues.push_back({"extensionality", "theta"});
  if (!r.issues.empty()) return r;
  if (!fn_equal(compose(r.theta, r.phi), identity(li.carrier()))) r.issues.push_back({"inverse", "phi o theta"});
  if (!fn_equal(compose(r.phi, r.theta), identity(lj.carrier()))) r.issues.push_back({"inverse", "theta o phi"});
  MorphismWitness pw{r.phi, {}};
  for (const auto& t : li.sum.threads) {
    Thread tj;
    for (std::size_t j = 0; j < jd.size(); ++j) {
      tj.vals.push_back(t.vals[c.e(j)]);
      tj.certs.push_back(t.certs[c.e(j)]);
    }
    pw.certs.push_back(certify_thread(lj, tj));
  }
  MorphismWitness tw{r.theta, {}};
  for (const auto& h : lj.sum.threads) {
    Thread ti;
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::size_t j = c.cof(i);
      const MorphismWitness& w = s.witness(i, c.e(j));
      ti.vals.push_back(pull_back(h.vals[j], w.h));
      ti.certs.push_back(lift_certificate(w, h.certs[j]));
    }
    tw.certs.push_back(certify_thread(li, ti));
  }
  for (auto& v : check_morphism(lj.space(), li.space(), pw, opt)) r.issues.push_back({v.law, "phi: " + v.witness});
  for (auto& v : check_morphism(li.space(), lj.space(), tw, opt)) r.issues.push_back({v.law, "theta: " + v.witness});
  r.phi_w = std::move(pw);
  r.theta_w = std::move(tw);
  return r;
}

namespace {

SetoidFn product_fn(const SetoidFn& f, const SetoidFn& g) {
  Setoid dom = product(f.dom, g.dom), cod = product(f.cod, g.cod);
  SetoidFn h{dom, cod, std::vector<std::size_t>(dom.size())};
  std::size_t nd = g.dom.size(), nc = g.cod.size();
  for (std::size_t z = 0; z < dom.size(); ++z) h.map[z] = f(z / nd) * nc + g(z % nd);
  return h;
}

}  // namespace

Spectrum product_spectrum(const Spectrum& s, const Spectrum& t) {
  if (s.fam.dir != t.fam.dir) fail(ErrorKind::FlavorMismatch, "product of spectra with different directions");
  DirectedIndex p = product_order(s.index(), t.index());
  std::size_t nt = t.size();
  std::vector<Setoid> carriers;
  std::vector<ProductSpace> ps;
  for (std::size_t a = 0; a < p.size(); ++a) {
    ps.push_back(product_space(s.spaces[a / nt], t.spaces[a % nt]));
    carriers.push_back(ps.back().space.carrier);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : order_pairs(p))
    edges.push_back({a, b, product_fn(s.fam.transport(a / nt, b / nt), t.fam.transport(a % nt, b % nt))});
  DirectFamily fam = make_direct_family(p, s.fam.dir, carriers, edges, false);
  std::vector<BSpace> spaces;
  for (const auto& x : ps) spaces.push_back(x.space);
  bool cov = s.fam.dir == Direction::covariant;
  std::vector<EdgeWitness> wits;
  for (auto [a, b] : order_pairs(p)) {
    const ProductSpace& from = ps[cov ? a : b];
    const MorphismWitness& ws = s.witness(a / nt, b / nt);
    const MorphismWitness& wt = t.witness(a % nt, b % nt);
    MorphismWitness w{fam.transport(a, b), {}};
    for (const auto& c : ws.certs) w.certs.push_back(lift_certificate(from.pr1, c));
    for (const auto& c : wt.certs) w.certs.push_back(lift_certificate(from.pr2, c));
    wits.push_back({a, b, std::move(w)});
  }
  return make_spectrum(std::move(fam), std::move(spaces), wits, false);
}

ProductLimitReport product_limit_bijection(const Spectrum& s, const Spectrum& t, const ThreadOptions& topt,
                                           const CertOptions& opt) {
  ProductLimitReport r;
  Spectrum st = product_spectrum(s, t);
  DirectLimit lst = direct_limit(st, topt), ls = direct_limit(s, topt), lt = direct_limit(t, topt);
  ProductSpace target = product_space(ls.space(), lt.space());
  std::size_t nt = t.size();
  r.theta = SetoidFn{lst.carrier(), target.space.carrier, std::vector<std::size_t>(lst.carrier().size())};
  for (std::size_t a = 0; a < r.theta.map.size(); ++a) {
    auto [p, z] = lst.element(a);
    std::size_t i = p / nt, j = p % nt, ny = t.fam.carriers[j].size();
    r.theta.map[a] = ls.flat(i, z / ny) * lt.carrier().size() + lt.flat(j, z % ny);
  }
  r.classes_product = lst.carrier().class_count();
  r.classes_s = ls.carrier().class_count();
  r.classes_t = lt.carrier().class_count();
  if (!is_extensional(r.theta)) {
    r.issues.push_back({"extensionality", "theta"});
    return r;
  }
  if (auto v = embedding_violation(r.theta))
    r.issues.push_back({"injectivity", lst.carrier().name(v->first) + ", " + lst.carrier().name(v->second)});
  std::vector<char> hit(target.space.carrier.size(), 0);
  for (std::size_t a = 0; a < r.theta.map.size(); ++a) hit[target.space.carrier.rep(r.theta(a))] = 1;
  for (std::size_t z : target.space.carrier.reps())
    if (!hit[z]) r.issues.push_back({"surjectivity", target.space.carrier.name(z)});
  if (r.classes_product != r.classes_s * r.classes_t) r.issues.push_back({"cardinality", "class counts"});
  MorphismWitness w{r.theta, {}};
  auto lift_part = [&](const Thread& th, bool first) {
    Thread x;
    for (std::size_t p = 0; p < st.size(); ++p) {
      ProductSpace local = product_space(s.spaces[p / nt], t.spaces[p % nt]);
      const MorphismWitness& pr = first ? local.pr1 : local.pr2;
      std::size_t k = first ? p / nt : p % nt;
      x.vals.push_back(pull_back(th.vals[k], pr.h));
      x.certs.push_back(lift_certificate(pr, th.certs[k]));
    }
    return certify_thread(lst, x);
  };
  for (const auto& th : ls.sum.threads) w.certs.push_back(lift_part(th, true));
  for (const auto& th : lt.sum.threads) w.certs.push_back(lift_part(th, false));
  for (auto& v : check_morphism(lst.space(), target.space, w, opt)) r.issues.push_back({v.law, "theta: " + v.witness});
  r.w = std::move(w);
  return r;
}

}  // namespace bspec

#include "bspec/limits.hpp"

namespace bspec {

std::optional<std::size_t> InverseLimit::find(const Assignment& a) const {
  for (std::size_t e = 0; e < elems.size(); ++e) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = spec.fam.carriers[i].eq(elems[e][i], a[i]);
    if (same) return e;
  }
  return std::nullopt;
}

InverseLimit inverse_limit(const Spectrum& s, std::size_t bound) {
  if (s.fam.dir != Direction::contravariant) fail(ErrorKind::FlavorMismatch, "inverse limit needs a contravariant spectrum");
  InverseLimit l{s, enumerate_dependent(s.fam, bound), {}, {}};
  l.space.carrier = dependent_setoid(s.fam, l.elems);
  l.gen_index.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t k = 0; k < s.spaces[i].gens.size(); ++k) {
      Values v(l.elems.size());
      for (std::size_t e = 0; e < l.elems.size(); ++e) v[e] = s.spaces[i].gens[k][l.elems[e][i]];
      l.gen_index[i].push_back(l.space.gens.size());
      l.space.gens.push_back(std::move(v));
      l.space.gen_names.push_back(s.spaces[i].gen_name(k) + ".pi" + s.index().name(i));
    }
  return l;
}

SetoidFn pi(const InverseLimit& l, std::size_t i) {
  SetoidFn f{l.carrier(), l.spec.fam.carriers[i], std::vector<std::size_t>(l.elems.size())};
  for (std::size_t e = 0; e < l.elems.size(); ++e) f.map[e] = l.elems[e][i];
  return f;
}

MorphismWitness pi_witness(const InverseLimit& l, std::size_t i) {
  MorphismWitness w{pi(l, i), {}};
  for (std::size_t g : l.gen_index[i]) w.certs.push_back(cert::gen(g));
  return w;
}

Issues validate_cone(const Spectrum& s, const Cone& c, const CertOptions& opt) {
  Issues out;
  if (c.legs.size() != s.size()) return {{"shape", "leg count"}};
  const DirectedIndex& d = s.index();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const MorphismWitness& leg = c.legs[i];
    if (!leg.h.dom.same_as(c.apex.carrier) || !leg.h.cod.same_as(s.spaces[i].carrier)) {
      out.push_back({"shape", "leg " + d.name(i)});
      return out;
    }
    for (auto& v : check_morphism(c.apex, s.spaces[i], leg, opt))
      out.push_back({v.law, "leg " + d.name(i) + ": " + v.witness});
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (d.leq(i, j) && !fn_equal(compose(c.legs[j].h, s.fam.transport(i, j)), c.legs[i].h))
        out.push_back({"cone triangle", d.name(i) + "<=" + d.name(j)});
  return out;
}

Cone own_cone(const InverseLimit& l) {
  Cone c{l.space, {}};
  for (std::size_t i = 0; i < l.spec.size(); ++i) c.legs.push_back(pi_witness(l, i));
  return c;
}

Mediator cone_mediator(const InverseLimit& l, const Cone& c, std::size_t uniq_bound, const CertOptions& opt) {
  Issues bad = validate_cone(l.spec, c, opt);
  if (!bad.empty()) fail(ErrorKind::IllFormedCone, bad[0].law + ": " + bad[0].witness);
  Mediator m;
  std::size_t n = l.spec.size();
  m.h.h = SetoidFn{c.apex.carrier, l.carrier(), std::vector<std::size_t>(c.apex.carrier.size())};
  for (std::size_t y = 0; y < c.apex.carrier.size(); ++y) {
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = c.legs[i].h(y);
    auto e = l.find(a);
    if (!e) {
      m.issues.push_back({"compatibility", "image of " + c.apex.carrier.name(y) + " is not a thread"});
      return m;
    }
    m.h.h.map[y] = *e;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!fn_equal(compose(m.h.h, pi(l, i)), c.legs[i].h)) m.issues.push_back({"mediator triangle", l.spec.index().name(i)});
  m.h.certs.resize(l.space.gens.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < l.gen_index[i].size(); ++k) m.h.certs[l.gen_index[i][k]] = c.legs[i].certs[k];
  for (auto& v : check_morphism(c.apex, l.space, m.h, opt)) m.issues.push_back({v.law, "mediator: " + v.witness});
  std::size_t count = 0;
  bool done = for_each_map(c.apex.carrier, l.carrier(), uniq_bound, [&](const std::vector<std::size_t>& t) {
    for (std::size_t y = 0; y < t.size(); ++y)
      for (std::size_t i = 0; i < n; ++i)
        if (!l.spec.fam.carriers[i].eq(l.elems[t[y]][i], c.legs[i].h(y))) return true;
    return ++count < 2;
  });
  if (done) m.uniqueness = count == 1 ? Uniqueness::unique : Uniqueness::not_unique;
  if (m.uniqueness == Uniqueness::not_unique) m.issues.push_back({"uniqueness", "NonUnique"});
  return m;
}

LimitMap inverse_limit_map(const SpectrumMap& psi, const InverseLimit& src, const InverseLimit& dst,
                           const CertOptions& opt) {
  Issues bad = validate_family_map(family_map(psi));
  if (!bad.empty()) fail(ErrorKind::TypeMismatch, "spectrum map: " + bad[0].law + " " + bad[0].witness);
  LimitMap r;
  std::size_t n = psi.comps.size();
  r.map = SetoidFn{src.carrier(), dst.carrier(), std::vector<std::size_t>(src.elems.size())};
  for (std::size_t e = 0; e < src.elems.size(); ++e) {
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = psi.comps[i](src.elems[e][i]);
    auto t = dst.find(a);
    if (!t) {
      r.issues.push_back({"compatibility", "image of " + src.carrier().name(e)});
      return r;
    }
    r.map.map[e] = *t;
  }
  if (!is_extensional(r.map)) r.issues.push_back({"extensionality", "limit map"});
  for (std::size_t i = 0; i < n; ++i)
    if (!fn_equal(compose(r.map, pi(dst, i)), compose(pi(src, i), psi.comps[i])))
      r.issues.push_back({"pi square", src.spec.index().name(i)});
  if (psi.cont) {
    MorphismWitness w{r.map, std::vector<Cert>(dst.space.gens.size())};
    for (std::size_t i = 0; i < n; ++i) {
      MorphismWitness p = pi_witness(src, i);
      for (std::size_t k = 0; k < dst.gen_index[i].size(); ++k)
        w.certs[dst.gen_index[i][k]] = lift_certificate(p, (*psi.cont)[i].certs[k]);
    }
    for (auto& v : check_morphism(src.space, dst.space, w, opt)) r.issues.push_back({v.law, "limit map: " + v.witness});
    r.witness = std::move(w);
  }
  r.components_embeddings = true;
  for (const auto& c : psi.comps) r.components_embeddings = r.components_embeddings && is_embedding(c);
  r.embedding = is_embedding(r.map);
  if (r.components_embeddings && !r.embedding) r.issues.push_back({"embedding propagation", "limit map"});
  return r;
}

IsoReport cofinal_inverse_iso(const Spectrum& s, const CofinalSubset& c, std::size_t bound, const CertOptions& opt) {
  IsoReport r;
  const DirectedIndex& d = s.index();
  r.issues = validate_cofinal(d, c);
  if (!r.issues.empty()) return r;
  DirectedIndex jd = cofinal_index(d, c);
  Spectrum sj = relative_spectrum(s, jd, c.e);
  InverseLimit li = inverse_limit(s, bound), lj = inverse_limit(sj, bound);
  r.phi = SetoidFn{lj.carrier(), li.carrier(), std::vector<std::size_t>(lj.elems.size())};
  for (std::size_t e = 0; e < lj.elems.size(); ++e) {
    Assignment a(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::size_t j = c.cof(i);
      a[i] = s.fam.transport(i, c.e(j))(lj.elems[e][j]);
    }
    auto t = li.find(a);
    if (!t) {
      r.issues.push_back({"compatibility", "phi(" + lj.carrier().name(e) + ")"});
      return r;
    }
    r.phi.map[e] = *t;
  }
  r.theta = SetoidFn{li.carrier(), lj.carrier(), std::vector<std::size_t>(li.elems.size())};
  for (std::size_t e = 0; e < li.elems.size(); ++e) {
    Assignment a(jd.size());
    for (std::size_t j = 0; j < jd.size(); ++j) a[j] = li.elems[e][c.e(j)];
    auto t = lj.find(a);
    if (!t) {
      r.issues.push_back({"compatibility", "theta(" + li.carrier().name(e) + ")"});
      return r;
    }
    r.theta.map[e] = *t;
  }
  if (!is_extensional(r.phi)) r.issues.push_back({"extensionality", "phi"});
  if (!is_extensional(r.theta)) r.issues.push_back({"extensionality", "theta"});
  if (!r.issues.empty()) return r;
  if (!fn_equal(compose(r.theta, r.phi), identity(li.carrier()))) r.issues.push_back({"inverse", "phi o theta"});
  if (!fn_equal(compose(r.phi, r.theta), identity(lj.carrier()))) r.issues.push_back({"inverse", "theta o phi"});
  MorphismWitness pw{r.phi, std::vector<Cert>(li.space.gens.size())};
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::size_t j = c.cof(i);
    MorphismWitness p = pi_witness(lj, j);
    const MorphismWitness& w = s.witness(i, c.e(j));
    for (std::size_t k = 0; k < li.gen_index[i].size(); ++k) pw.certs[li.gen_index[i][k]] = lift_certificate(p, w.certs[k]);
  }
  MorphismWitness tw{r.theta, std::vector<Cert>(lj.space.gens.size())};
  for (std::size_t j = 0; j < jd.size(); ++j)
    for (std::size_t k = 0; k < lj.gen_index[j].size(); ++k) tw.certs[lj.gen_index[j][k]] = cert::gen(li.gen_index[c.e(j)][k]);
  for (auto& v : check_morphism(lj.space, li.space, pw, opt)) r.issues.push_back({v.law, "phi: " + v.witness});
  for (auto& v : check_morphism(li.space, lj.space, tw, opt)) r.issues.push_back({v.law, "theta: " + v.witness});
  r.phi_w = std::move(pw);
  r.theta_w = std::move(tw);
  return r;
}

ProductInverseReport product_inverse_morphism(const Spectrum& s, const Spectrum& t, std::size_t bound,
                                              const CertOptions& opt) {
  Spectrum st = product_spectrum(s, t);
  InverseLimit ls = inverse_limit(s, bound), lt = inverse_limit(t, bound), lst = inverse_limit(st, bound);
  ProductInverseReport r{product_space(ls.space, lt.space), {}, std::nullopt, {}};
  const Setoid& dom = r.domain.space.carrier;
  std::size_t nt = t.size(), m = lt.elems.size();
  r.map = SetoidFn{dom, lst.carrier(), std::vector<std::size_t>(dom.size())};
  for (std::size_t z = 0; z < dom.size(); ++z) {
    const Assignment& a = ls.elems[z / m];
    const Assignment& b = lt.elems[z % m];
    Assignment ab(st.size());
    for (std::size_t p = 0; p < st.size(); ++p) ab[p] = a[p / nt] * t.fam.carriers[p % nt].size() + b[p % nt];
    auto e = lst.find(ab);
    if (!e) {
      r.issues.push_back({"compatibility", dom.name(z)});
      return r;
    }
    r.map.map[z] = *e;
  }
  if (!is_extensional(r.map)) r.issues.push_back({"extensionality", "product map"});
  MorphismWitness w{r.map, std::vector<Cert>(lst.space.gens.size())};
  for (std::size_t p = 0; p < st.size(); ++p) {
    std::size_t i = p / nt, j = p % nt, first = s.spaces[i].gens.size();
    for (std::size_t k = 0; k < lst.gen_index[p].size(); ++k)
      w.certs[lst.gen_index[p][k]] = k < first ? cert::gen(ls.gen_index[i][k])
                                               : cert::gen(r.domain.first_count + lt.gen_index[j][k - first]);
  }
  for (auto& v : check_morphism(r.domain.space, lst.space, w, opt)) r.issues.push_back({v.law, "product map: " + v.witness});
  r.w = std::move(w);
  return r;
}

}  // namespace bspec

#include "bspec/duality.hpp"

#include "bspec/synth.hpp"

namespace bspec {

MorphismWitness plus_apply(const MorphismWitness& lambda, const MorphismWitness& phi) {
  return compose_witness(lambda, phi);
}

MorphismWitness minus_apply(const MorphismWitness& mu, const MorphismWitness& theta) {
  return compose_witness(theta, mu);
}

namespace {

std::size_t pooled(const ExpSpace& pool, const SetoidFn& h, const std::string& where) {
  auto p = pool.find(h);
  if (!p) fail(ErrorKind::PoolNotClosed, where + ": " + format_fn(h));
  return *p;
}

}  // namespace

MorphismWitness plus_map(const MorphismWitness& lambda, const ExpSpace& from, const ExpSpace& to) {
  MorphismWitness w{SetoidFn{from.space.carrier, to.space.carrier, std::vector<std::size_t>(from.pool.size())}, {}};
  for (std::size_t p = 0; p < from.pool.size(); ++p)
    w.h.map[p] = pooled(to, compose(lambda.h, from.pool[p].h), "plus image of " + from.space.carrier.name(p));
  // phi_{y,f} o plus = phi_{lambda(y), f}
  for (std::size_t y = 0; y < to.src.carrier.size(); ++y)
    for (std::size_t k = 0; k < to.dst.gens.size(); ++k) w.certs.push_back(cert::gen(from.gen_index(lambda.h(y), k)));
  return w;
}

MorphismWitness minus_map(const MorphismWitness& mu, const ExpSpace& from, const ExpSpace& to) {
  MorphismWitness w{SetoidFn{from.space.carrier, to.space.carrier, std::vector<std::size_t>(from.pool.size())}, {}};
  for (std::size_t p = 0; p < from.pool.size(); ++p)
    w.h.map[p] = pooled(to, compose(from.pool[p].h, mu.h), "minus image of " + from.space.carrier.name(p));
  // phi_{x,g} o minus = phi_{x, g o mu}
  for (std::size_t x = 0; x < to.src.carrier.size(); ++x) {
    MorphismWitness ev = from.eval(x);
    for (std::size_t k = 0; k < to.dst.gens.size(); ++k) w.certs.push_back(lift_certificate(ev, mu.certs[k]));
  }
  return w;
}

Issues validate_pool(const ExpSpace& pool, const CertOptions& opt) {
  Issues out;
  for (std::size_t p = 0; p < pool.pool.size(); ++p)
    for (auto& v : check_morphism(pool.src, pool.dst, pool.pool[p], opt))
      out.push_back({v.law, pool.space.carrier.name(p) + ": " + v.witness});
  return out;
}

Issues check_plus_operator(const ExpSpace& gh, const ExpSpace& hf, const ExpSpace& gf, const CertOptions& opt) {
  Issues out;
  std::vector<MorphismWitness> images;
  for (const auto& lambda : gh.pool) {
    MorphismWitness m = plus_map(lambda, hf, gf);
    for (auto& v : check_morphism(hf.space, gf.space, m, opt)) out.push_back({v.law, "plus image: " + v.witness});
    images.push_back(std::move(m));
  }
  ExpSpace big = exponential_space(hf.space, gf.space, images);
  MorphismWitness op{SetoidFn{gh.space.carrier, big.space.carrier, std::vector<std::size_t>(gh.pool.size())}, {}};
  for (std::size_t p = 0; p < gh.pool.size(); ++p) op.h.map[p] = p;
  // phi_{phi, phi_{y,f}} o plus = phi_{y, f o phi}
  for (std::size_t p = 0; p < hf.pool.size(); ++p)
    for (std::size_t y = 0; y < gf.src.carrier.size(); ++y)
      for (std::size_t k = 0; k < gf.dst.gens.size(); ++k)
        op.certs.push_back(lift_certificate(gh.eval(y), hf.pool[p].certs[k]));
  for (auto& v : check_morphism(gh.space, big.space, op, opt)) out.push_back({v.law, "plus operator: " + v.witness});
  return out;
}

Issues check_minus_operator(const ExpSpace& hg, const ExpSpace& fh, const ExpSpace& fg, const CertOptions& opt) {
  Issues out;
  std::vector<MorphismWitness> images;
  for (const auto& mu : hg.pool) {
    MorphismWitness m = minus_map(mu, fh, fg);
    for (auto& v : check_morphism(fh.space, fg.space, m, opt)) out.push_back({v.law, "minus image: " + v.witness});
    images.push_back(std::move(m));
  }
  ExpSpace big = exponential_space(fh.space, fg.space, images);
  MorphismWitness op{SetoidFn{hg.space.carrier, big.space.carrier, std::vector<std::size_t>(hg.pool.size())}, {}};
  for (std::size_t p = 0; p < hg.pool.size(); ++p) op.h.map[p] = p;
  // phi_{theta, phi_{x,g}} o minus = phi_{theta(x), g}
  for (std::size_t p = 0; p < fh.pool.size(); ++p)
    for (std::size_t x = 0; x < fg.src.carrier.size(); ++x)
      for (std::size_t k = 0; k < fg.dst.gens.size(); ++k)
        op.certs.push_back(cert::gen(hg.gen_index(fh.pool[p].h(x), k)));
  for (auto& v : check_morphism(hg.space, big.space, op, opt)) out.push_back({v.law, "minus operator: " + v.witness});
  return out;
}

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::A_i: return "A_i";
    case Shape::A_ii: return "A_ii";
    case Shape::B_i: return "B_i";
    case Shape::B_ii: return "B_ii";
  }
  return "";
}

std::optional<Shape> parse_shape(std::string_view s) {
  for (Shape x : {Shape::A_i, Shape::A_ii, Shape::B_i, Shape::B_ii})
    if (to_string(x) == s) return x;
  return std::nullopt;
}

namespace {

bool into_f(Shape s) { return s == Shape::A_i || s == Shape::B_i; }

}  // namespace

InducedSpectrum induce_spectrum(const Spectrum& s, const BSpace& f, Shape shape,
                                std::vector<std::vector<MorphismWitness>> pools) {
  bool src_cov = shape == Shape::A_i || shape == Shape::A_ii;
  if ((s.fam.dir == Direction::covariant) != src_cov)
    fail(ErrorKind::FlavorMismatch, std::string("shape ") + std::string(to_string(shape)) + " on a " +
                                        std::string(to_string(s.fam.dir)) + " spectrum");
  if (pools.size() != s.size()) fail(ErrorKind::TypeMismatch, "one pool per index element required");
  const DirectedIndex& d = s.index();
  std::vector<ExpSpace> exps;
  for (std::size_t i = 0; i < s.size(); ++i)
    exps.push_back(into_f(shape) ? exponential_space(s.spaces[i], f, std::move(pools[i]))
                                 : exponential_space(f, s.spaces[i], std::move(pools[i])));
  Direction dir = (shape == Shape::A_ii || shape == Shape::B_i) ? Direction::covariant : Direction::contravariant;
  std::vector<Edge> edges;
  std::vector<EdgeWitness> wits;
  for (auto [i, j] : order_pairs(d)) {
    const MorphismWitness& l = s.witness(i, j);
    std::string where = "edge " + d.name(i) + "<=" + d.name(j);
    MorphismWitness w;
    try {
      switch (shape) {
        case Shape::A_i: w = plus_map(l, exps[j], exps[i]); break;
        case Shape::A_ii: w = minus_map(l, exps[i], exps[j]); break;
        case Shape::B_i: w = plus_map(l, exps[i], exps[j]); break;
        case Shape::B_ii: w = minus_map(l, exps[j], exps[i]); break;
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PoolNotClosed) fail(ErrorKind::PoolNotClosed, where + ", " + e.what());
      throw;
    }
    edges.push_back({i, j, w.h});
    wits.push_back({i, j, std::move(w)});
  }
  std::vector<Setoid> carriers;
  std::vector<BSpace> spaces;
  for (const auto& e : exps) {
    carriers.push_back(e.space.carrier);
    spaces.push_back(e.space);
  }
  DirectFamily fam = make_direct_family(d, dir, carriers, edges, false);
  return InducedSpectrum{shape, std::move(exps), make_spectrum(std::move(fam), std::move(spaces), wits, false)};
}

std::vector<std::vector<MorphismWitness>> generate_pools(const Spectrum& s, const BSpace& f, Shape shape,
                                                         std::size_t bound) {
  std::vector<std::vector<MorphismWitness>> out;
  for (const auto& sp : s.spaces)
    out.push_back(into_f(shape) ? enumerate_morphisms(sp, f, bound) : enumerate_morphisms(f, sp, bound));
  return out;
}

namespace {

void finish_iso(DualityReport& r, const Setoid& left, const Setoid& right) {
  r.left_size = left.class_count();
  r.right_size = right.class_count();
  if (!is_extensional(r.forward)) r.issues.push_back({"extensionality", "forward map"});
  if (!is_extensional(r.backward)) r.issues.push_back({"extensionality", "backward map"});
  if (!fn_equal(compose(r.forward, r.backward), identity(left))) r.issues.push_back({"inverse", "backward o forward"});
  if (!fn_equal(compose(r.backward, r.forward), identity(right))) r.issues.push_back({"inverse", "forward o backward"});
  r.embedding = is_embedding(r.forward);
  if (!r.embedding) r.issues.push_back({"embedding", "forward map"});
}

}  // namespace

DualityReport duality_direct_to_inverse(const Spectrum& s, const BSpace& f, std::vector<std::vector<MorphismWitness>> pools,
                                        std::optional<std::vector<MorphismWitness>> right, const DualityOptions& opt) {
  DualityReport r;
  InducedSpectrum m = induce_spectrum(s, f, Shape::A_i, std::move(pools));
  for (const auto& p : m.pools)
    for (auto& v : validate_pool(p, opt.certs)) r.issues.push_back({v.law, "pool: " + v.witness});
  InverseLimit li = inverse_limit(m.spec, opt.bound);
  DirectLimit ld = direct_limit(s, opt.threads);
  if (!right) right = enumerate_morphisms(ld.space(), f, opt.bound);
  ExpSpace rs = exponential_space(ld.space(), f, std::move(*right));
  for (auto& v : validate_pool(rs, opt.certs)) r.issues.push_back({v.law, "right pool: " + v.witness});

  r.forward = SetoidFn{li.carrier(), rs.space.carrier, std::vector<std::size_t>(li.elems.size())};
  for (std::size_t e = 0; e < li.elems.size(); ++e) {
    const Assignment& h = li.elems[e];
    MorphismWitness th{SetoidFn{ld.carrier(), f.carrier, std::vector<std::size_t>(ld.carrier().size())}, {}};
    for (std::size_t a = 0; a < th.h.map.size(); ++a) {
      auto [i, x] = ld.element(a);
      th.h.map[a] = m.pools[i].pool[h[i]].h(x);
    }
    if (!is_extensional(th.h)) {
      r.issues.push_back({"well-definedness", "theta(" + li.carrier().name(e) + ")"});
      return r;
    }
    for (std::size_t g = 0; g < f.gens.size(); ++g) {
      Thread t;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const MorphismWitness& hi = m.pools[i].pool[h[i]];
        t.vals.push_back(pull_back(f.gens[g], hi.h));
        t.certs.push_back(hi.certs[g]);
      }
      th.certs.push_back(certify_thread(ld, t));
    }
    for (auto& v : check_morphism(ld.space(), f, th, opt.certs))
      r.issues.push_back({v.law, "theta(" + li.carrier().name(e) + "): " + v.witness});
    auto p = rs.find(th.h);
    if (!p) {
      r.issues.push_back({"PoolNotClosed", "theta(" + li.carrier().name(e) + ")"});
      return r;
    }
    r.forward.map[e] = *p;
  }
  r.backward = SetoidFn{rs.space.carrier, li.carrier(), std::vector<std::size_t>(rs.pool.size())};
  for (std::size_t p = 0; p < rs.pool.size(); ++p) {
    Assignment a(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto q = m.pools[i].find(compose(eql(ld, i), rs.pool[p].h));
      if (!q) {
        r.issues.push_back({"PoolNotClosed", "phi(" + rs.space.carrier.name(p) + ") at " + s.index().name(i)});
        return r;
      }
      a[i] = *q;
    }
    auto e = li.find(a);
    if (!e) {
      r.issues.push_back({"compatibility", "phi(" + rs.space.carrier.name(p) + ")"});
      return r;
    }
    r.backward.map[p] = *e;
  }
  finish_iso(r, li.carrier(), rs.space.carrier);
  // phi_{eql(i,x), g} o theta = phi_{x,g} o pi_i
  MorphismWitness fw{r.forward, {}};
  for (std::size_t a = 0; a < ld.carrier().size(); ++a) {
    auto [i, x] = ld.element(a);
    for (std::size_t g = 0; g < f.gens.size(); ++g) fw.certs.push_back(cert::gen(li.gen_index[i][m.pools[i].gen_index(x, g)]));
  }
  MorphismWitness bw{r.backward, std::vector<Cert>(li.space.gens.size())};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t x = 0; x < s.fam.carriers[i].size(); ++x)
      for (std::size_t g = 0; g < f.gens.size(); ++g)
        bw.certs[li.gen_index[i][m.pools[i].gen_index(x, g)]] = cert::gen(rs.gen_index(ld.flat(i, x), g));
  for (auto& v : check_morphism(li.space, rs.space, fw, opt.certs)) r.issues.push_back({v.law, "theta: " + v.witness});
  for (auto& v : check_morphism(rs.space, li.space, bw, opt.certs)) r.issues.push_back({v.law, "phi: " + v.witness});
  r.forward_w = std::move(fw);
  r.backward_w = std::move(bw);
  return r;
}

DualityReport duality_inverse_hom(const Spectrum& s, const BSpace& f, std::vector<std::vector<MorphismWitness>> pools,
                                  std::optional<std::vector<MorphismWitness>> right, const DualityOptions& opt) {
  DualityReport r;
  InducedSpectrum n = induce_spectrum(s, f, Shape::B_ii, std::move(pools));
  for (const auto& p : n.pools)
    for (auto& v : validate_pool(p, opt.certs)) r.issues.push_back({v.law, "pool: " + v.witness});
  InverseLimit ln = inverse_limit(n.spec, opt.bound);
  InverseLimit l = inverse_limit(s, opt.bound);
  if (!right) right = enumerate_morphisms(f, l.space, opt.bound);
  ExpSpace rs = exponential_space(f, l.space, std::move(*right));
  for (auto& v : validate_pool(rs, opt.certs)) r.issues.push_back({v.law, "right pool: " + v.witness});

  r.forward = SetoidFn{ln.carrier(), rs.space.carrier, std::vector<std::size_t>(ln.elems.size())};
  for (std::size_t e = 0; e < ln.elems.size(); ++e) {
    const Assignment& h = ln.elems[e];
    MorphismWitness ew{SetoidFn{f.carrier, l.carrier(), std::vector<std::size_t>(f.carrier.size())},
                       std::vector<Cert>(l.space.gens.size())};
    for (std::size_t x = 0; x < f.carrier.size(); ++x) {
      Assignment a(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) a[i] = n.pools[i].pool[h[i]].h(x);
      auto t = l.find(a);
      if (!t) {
        r.issues.push_back({"compatibility", "e(" + ln.carrier().name(e) + ") at " + f.carrier.name(x)});
        return r;
      }
      ew.h.map[x] = *t;
    }
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = 0; k < l.gen_index[i].size(); ++k) ew.certs[l.gen_index[i][k]] = n.pools[i].pool[h[i]].certs[k];
    for (auto& v : check_morphism(f, l.space, ew, opt.certs))
      r.issues.push_back({v.law, "e(" + ln.carrier().name(e) + "): " + v.witness});
    auto p = rs.find(ew.h);
    if (!p) {
      r.issues.push_back({"PoolNotClosed", "e(" + ln.carrier().name(e) + ")"});
      return r;
    }
    r.forward.map[e] = *p;
  }
  r.backward = SetoidFn{rs.space.carrier, ln.carrier(), std::vector<std::size_t>(rs.pool.size())};
  for (std::size_t p = 0; p < rs.pool.size(); ++p) {
    Assignment a(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto q = n.pools[i].find(compose(rs.pool[p].h, pi(l, i)));
      if (!q) {
        r.issues.push_back({"PoolNotClosed", "phi(" + rs.space.carrier.name(p) + ") at " + s.index().name(i)});
        return r;
      }
      a[i] = *q;
    }
    auto e = ln.find(a);
    if (!e) {
      r.issues.push_back({"compatibility", "phi(" + rs.space.carrier.name(p) + ")"});
      return r;
    }
    r.backward.map[p] = *e;
  }
  finish_iso(r, ln.carrier(), rs.space.carrier);
  // phi_{x, f o pi_i} o e = phi_{x,f} o pi_i
  MorphismWitness fw{r.forward, std::vector<Cert>(rs.space.gens.size())};
  MorphismWitness bw{r.backward, std::vector<Cert>(ln.space.gens.size())};
  for (std::size_t x = 0; x < f.carrier.size(); ++x)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = 0; k < l.gen_index[i].size(); ++k) {
        std::size_t lg = ln.gen_index[i][n.pools[i].gen_index(x, k)];
        std::size_t rg = rs.gen_index(x, l.gen_index[i][k]);
        fw.certs[rg] = cert::gen(lg);
        bw.certs[lg] = cert::gen(rg);
      }
  for (auto& v : check_morphism(ln.space, rs.space, fw, opt.certs)) r.issues.push_back({v.law, "e: " + v.witness});
  for (auto& v : check_morphism(rs.space, ln.space, bw, opt.certs)) r.issues.push_back({v.law, "phi: " + v.witness});
  r.forward_w = std::move(fw);
  r.backward_w = std::move(bw);
  return r;
}

ConverseReport converse_dual(const Spectrum& s, const BSpace& f, std::vector<std::vector<MorphismWitness>> pools,
                             std::optional<std::vector<MorphismWitness>> target, const DualityOptions& opt) {
  ConverseReport r;
  InducedSpectrum m = induce_spectrum(s, f, Shape::B_i, std::move(pools));
  DirectLimit ld = direct_limit(m.spec, opt.threads);
  InverseLimit l = inverse_limit(s, opt.bound);
  if (!target) target = enumerate_morphisms(l.space, f, opt.bound);
  ExpSpace rs = exponential_space(l.space, f, std::move(*target));
  for (auto& v : validate_pool(rs, opt.certs)) r.issues.push_back({v.law, "target pool: " + v.witness});
  r.hat = SetoidFn{ld.carrier(), rs.space.carrier, std::vector<std::size_t>(ld.carrier().size())};
  for (std::size_t a = 0; a < ld.carrier().size(); ++a) {
    auto [i, p] = ld.element(a);
    SetoidFn h = compose(pi(l, i), m.pools[i].pool[p].h);
    auto q = rs.find(h);
    if (!q) {
      r.issues.push_back({"PoolNotClosed", "hat(" + ld.carrier().name(a) + ")"});
      return r;
    }
    r.hat.map[a] = *q;
  }
  if (!is_extensional(r.hat)) {
    r.issues.push_back({"well-definedness", "hat"});
    return r;
  }
  // phi_{Theta,g} o hat comes from the thread i |-> phi_{Theta_i, g}
  MorphismWitness w{r.hat, {}};
  for (std::size_t e = 0; e < l.elems.size(); ++e)
    for (std::size_t g = 0; g < f.gens.size(); ++g) {
      Thread t;
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t k = m.pools[i].gen_index(l.elems[e][i], g);
        t.vals.push_back(m.pools[i].space.gens[k]);
        t.certs.push_back(cert::gen(k));
      }
      w.certs.push_back(certify_thread(ld, t));
    }
  for (auto& v : check_morphism(ld.space(), rs.space, w, opt.certs)) r.issues.push_back({v.law, "hat: " + v.witness});
  r.w = std::move(w);
  const DirectedIndex& d = s.index();
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t y = 0; y < s.fam.carriers[j].size(); ++y) {
      bool found = false;
      for (const auto& e : l.elems) found = found || s.fam.carriers[j].eq(e[j], y);
      if (!found) {
        r.hypothesis = false;
        r.notices.push_back("HypothesisFails(" + d.name(j) + ", " + s.fam.carriers[j].name(y) + ")");
      }
    }
  r.embedding = is_embedding(r.hat);
  if (r.hypothesis && !*r.embedding) r.issues.push_back({"embedding", "hat"});
  return r;
}

ConverseReport converse_dual2(const Spectrum& s, const BSpace& f, std::vector<std::vector<MorphismWitness>> pools,
                              std::optional<std::vector<MorphismWitness>> target, const DualityOptions& opt) {
  ConverseReport r;
  InducedSpectrum n = induce_spectrum(s, f, Shape::A_ii, std::move(pools));
  DirectLimit ld = direct_limit(n.spec, opt.threads);
  DirectLimit ls = direct_limit(s, opt.threads);
  if (!target) target = enumerate_morphisms(f, ls.space(), opt.bound);
  ExpSpace rs = exponential_space(f, ls.space(), std::move(*target));
  for (auto& v : validate_pool(rs, opt.certs)) r.issues.push_back({v.law, "target pool: " + v.witness});
  r.hat = SetoidFn{ld.carrier(), rs.space.carrier, std::vector<std::size_t>(ld.carrier().size())};
  for (std::size_t a = 0; a < ld.carrier().size(); ++a) {
    auto [i, p] = ld.element(a);
    SetoidFn h = compose(n.pools[i].pool[p].h, eql(ls, i));
    auto q = rs.find(h);
    if (!q) {
      r.issues.push_back({"PoolNotClosed", "hat(" + ld.carrier().name(a) + ")"});
      return r;
    }
    r.hat.map[a] = *q;
  }
  if (!is_extensional(r.hat)) {
    r.issues.push_back({"well-definedness", "hat"});
    return r;
  }
  // phi_{x, f_Theta} o hat comes from the thread i |-> phi_{x, Theta_i}
  MorphismWitness w{r.hat, {}};
  for (std::size_t x = 0; x < f.carrier.size(); ++x)
    for (const auto& th : ls.sum.threads) {
      Thread t;
      for (std::size_t i = 0; i < s.size(); ++i) {
        MorphismWitness ev = n.pools[i].eval(x);
        t.vals.push_back(pull_back(th.vals[i], ev.h));
        t.certs.push_back(lift_certificate(ev, th.certs[i]));
      }
      w.certs.push_back(certify_thread(ld, t));
    }
  for (auto& v : check_morphism(ld.space(), rs.space, w, opt.certs)) r.issues.push_back({v.law, "hat: " + v.witness});
  r.w = std::move(w);
  r.embedding = is_embedding(r.hat);
  return r;
}

}  // namespace bspec

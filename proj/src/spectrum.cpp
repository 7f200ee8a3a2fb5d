#include "bspec/spectrum.hpp"

#include "bspec/synth.hpp"

namespace bspec {

const MorphismWitness& Spectrum::witness(std::size_t i, std::size_t j) const {
  if (!wit[i][j]) fail(ErrorKind::MissingCertificate, "edge " + index().name(i) + "<=" + index().name(j));
  return *wit[i][j];
}

namespace {

std::string edge(const DirectedIndex& d, std::size_t i, std::size_t j) { return d.name(i) + "<=" + d.name(j); }

// witness source and target spaces for the pair i <= j
const BSpace& wsrc(const Spectrum& s, std::size_t i, std::size_t j) {
  return s.fam.dir == Direction::covariant ? s.spaces[i] : s.spaces[j];
}
const BSpace& wdst(const Spectrum& s, std::size_t i, std::size_t j) {
  return s.fam.dir == Direction::covariant ? s.spaces[j] : s.spaces[i];
}

MorphismWitness chain(const Spectrum& s, const MorphismWitness& ik, const MorphismWitness& kj) {
  return s.fam.dir == Direction::covariant ? compose_witness(ik, kj) : compose_witness(kj, ik);
}

}  // namespace

Spectrum make_spectrum(DirectFamily fam, std::vector<BSpace> spaces, const std::vector<EdgeWitness>& given,
                       bool auto_fill) {
  std::size_t n = fam.size();
  if (spaces.size() != n) fail(ErrorKind::TypeMismatch, "one space per index element required");
  for (std::size_t i = 0; i < n; ++i)
    if (!spaces[i].carrier.same_as(fam.carriers[i]))
      fail(ErrorKind::TypeMismatch, "space carrier differs from family carrier at " + fam.index.name(i));
  Spectrum s{std::move(fam), std::move(spaces), {}};
  s.wit.assign(n, std::vector<std::optional<MorphismWitness>>(n));
  const DirectedIndex& d = s.index();
  for (const auto& e : given) {
    if (!d.leq(e.i, e.j)) fail(ErrorKind::TypeMismatch, "witness on non-order pair " + edge(d, e.i, e.j));
    MorphismWitness w = e.w;
    w.h = s.fam.transport(e.i, e.j);
    s.wit[e.i][e.j] = std::move(w);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!s.wit[i][i]) s.wit[i][i] = identity_witness(s.spaces[i]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == k || !s.wit[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (k == j || s.wit[i][j] || !s.wit[k][j]) continue;
          MorphismWitness w = chain(s, *s.wit[i][k], *s.wit[k][j]);
          w.h = s.fam.transport(i, j);
          s.wit[i][j] = std::move(w);
          changed = true;
        }
      }
    if (!changed && auto_fill) {
      for (std::size_t i = 0; i < n && !changed; ++i)
        for (std::size_t j = 0; j < n && !changed; ++j) {
          if (!d.leq(i, j) || s.wit[i][j]) continue;
          auto w = auto_witness(wsrc(s, i, j), wdst(s, i, j), s.fam.transport(i, j));
          if (!w) fail(ErrorKind::MissingCertificate, "no certificate found for edge " + edge(d, i, j));
          s.wit[i][j] = std::move(*w);
          changed = true;
        }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d.leq(i, j) && !s.wit[i][j]) fail(ErrorKind::MissingCertificate, "edge " + edge(d, i, j));
  return s;
}

Spectrum constant_spectrum(const DirectedIndex& index, const BSpace& b, Direction dir) {
  std::vector<EdgeWitness> given;
  for (auto [i, j] : order_pairs(index)) given.push_back({i, j, identity_witness(b)});
  return make_spectrum(constant_family(index, b.carrier, dir), std::vector<BSpace>(index.size(), b), given, false);
}

Issues validate_spectrum(const Spectrum& s, const CertOptions& opt) {
  Issues out = validate_direct_family(s.fam);
  const DirectedIndex& d = s.index();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (auto& v : validate_space(s.spaces[i])) out.push_back({v.law, "space " + d.name(i) + ": " + v.witness});
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!d.leq(i, j)) continue;
      if (!s.wit[i][j]) {
        out.push_back({"MissingCertificate", "edge " + edge(d, i, j)});
        continue;
      }
      if (!fn_equal(s.wit[i][j]->h, s.fam.transport(i, j))) {
        out.push_back({"witness map", "edge " + edge(d, i, j) + " is not the transport"});
        continue;
      }
      for (auto& v : check_morphism(wsrc(s, i, j), wdst(s, i, j), *s.wit[i][j], opt))
        out.push_back({v.law, "edge " + edge(d, i, j) + ": " + v.witness});
    }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t k = 0; k < s.size(); ++k)
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i == k || k == j || !d.leq(i, k) || !d.leq(k, j)) continue;
        MorphismWitness w = chain(s, *s.wit[i][k], *s.wit[k][j]);
        for (auto& v : check_morphism(wsrc(s, i, j), wdst(s, i, j), w, opt))
          out.push_back({"witness composition", edge(d, i, k) + "<=" + d.name(j) + ": " + v.witness});
      }
  return out;
}

FamilyMap family_map(const SpectrumMap& m) { return FamilyMap{m.src.fam, m.dst.fam, m.comps}; }

Issues validate_spectrum_map(const SpectrumMap& m, const CertOptions& opt) {
  Issues out = validate_family_map(family_map(m));
  if (!out.empty() || !m.cont) return out;
  if (m.cont->size() != m.comps.size()) return {{"shape", "continuity witness count"}};
  for (std::size_t i = 0; i < m.comps.size(); ++i) {
    if (!fn_equal((*m.cont)[i].h, m.comps[i])) {
      out.push_back({"witness map", "component " + m.src.index().name(i)});
      continue;
    }
    for (auto& v : check_morphism(m.src.spaces[i], m.dst.spaces[i], (*m.cont)[i], opt))
      out.push_back({v.law, "component " + m.src.index().name(i) + ": " + v.witness});
  }
  return out;
}

SpectrumMap identity_map(const Spectrum& s) {
  SpectrumMap m{s, s, {}, std::vector<MorphismWitness>{}};
  for (std::size_t i = 0; i < s.size(); ++i) {
    m.comps.push_back(identity(s.fam.carriers[i]));
    m.cont->push_back(identity_witness(s.spaces[i]));
  }
  return m;
}

SpectrumMap compose_maps(const SpectrumMap& psi, const SpectrumMap& xi) {
  SpectrumMap m{psi.src, xi.dst, {}, std::nullopt};
  for (std::size_t i = 0; i < psi.comps.size(); ++i) m.comps.push_back(compose(psi.comps[i], xi.comps[i]));
  if (psi.cont && xi.cont) {
    m.cont.emplace();
    for (std::size_t i = 0; i < psi.comps.size(); ++i) m.cont->push_back(compose_witness((*psi.cont)[i], (*xi.cont)[i]));
  }
  return m;
}

std::optional<std::vector<MorphismWitness>> auto_continuity(const Spectrum& src, const Spectrum& dst,
                                                            const std::vector<SetoidFn>& comps) {
  std::vector<MorphismWitness> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto w = auto_witness(src.spaces[i], dst.spaces[i], comps[i]);
    if (!w) return std::nullopt;
    out.push_back(std::move(*w));
  }
  return out;
}

Issues validate_thread(const Spectrum& s, const Thread& t, const CertOptions& opt) {
  if (s.fam.dir != Direction::covariant) return {{"FlavorMismatch", "threads live on covariant spectra"}};
  if (t.vals.size() != s.size() || t.certs.size() != s.size()) return {{"shape", "thread length"}};
  Issues out;
  const DirectedIndex& d = s.index();
  for (std::size_t i = 0; i < s.size(); ++i) {
    CertCheck r = validate_certificate(s.spaces[i], t.vals[i], t.certs[i], opt);
    for (auto& v : r.issues) out.push_back({v.law, "index " + d.name(i) + ": " + v.witness});
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!d.leq(i, j)) continue;
      const SetoidFn& l = s.fam.transport(i, j);
      for (std::size_t x = 0; x < l.dom.size(); ++x)
        if (t.vals[i][x] != t.vals[j][l(x)]) {
          out.push_back({"IncompatibleThread", "(" + d.name(i) + "," + d.name(j) + ") at " + l.dom.name(x)});
          break;
        }
    }
  return out;
}

Thread constant_thread(const Spectrum& s, const Rational& q) {
  Thread t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    t.vals.push_back(constant_values(s.fam.carriers[i].size(), q));
    t.certs.push_back(cert::constant(q));
  }
  return t;
}

Thread thread_from_top(const Spectrum& s, const Values& v, const Cert& c) {
  std::size_t top = top_element(s.index());
  Thread t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const MorphismWitness& w = s.witness(i, top);
    t.vals.push_back(pull_back(v, w.h));
    t.certs.push_back(lift_certificate(w, c));
  }
  return t;
}

Values thread_to_sum_function(const Spectrum& s, const Thread& t) {
  return thread_to_sum_function(s, t, direct_sum(s.fam));
}

Values thread_to_sum_function(const Spectrum& s, const Thread& t, const Quotient& q) {
  for (const auto& v : validate_thread(s, t))
    if (v.law == "IncompatibleThread") fail(ErrorKind::IncompatibleThread, v.witness);
  SigmaIndex idx = sigma_index(s.fam.carriers);
  Values f(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) f[a] = t.vals[idx.elems[a].first][idx.elems[a].second];
  for (std::size_t a = 0; a < idx.size(); ++a)
    if (f[a] != f[q.quotient.rep(a)])
      fail(ErrorKind::IncompatibleThread,
           "f differs on equal " + q.quotient.name(a) + ", " + q.quotient.name(q.quotient.rep(a)));
  return f;
}

SumSpace sum_space(const Spectrum& s, std::vector<Thread> extra, const ThreadOptions& opt) {
  if (s.fam.dir != Direction::covariant) fail(ErrorKind::FlavorMismatch, "sum space needs a covariant spectrum");
  SumSpace r{direct_sum(s.fam), sigma_index(s.fam.carriers), top_element(s.index()), {}, {}, {}, std::nullopt};
  const BSpace& top = s.spaces[r.top];
  if (opt.enumerate) {
    std::size_t candidates = top.gens.size() + opt.const_pool.size();
    if (candidates > opt.thread_bound)
      fail(ErrorKind::ThreadBoundExceeded, std::to_string(candidates) + " candidates at the top index");
    std::vector<Values> seen;
    auto add = [&](const Values& v, const Cert& c) {
      for (std::size_t k = 0; k < seen.size(); ++k)
        if (seen[k] == v) return k;
      seen.push_back(v);
      r.threads.push_back(thread_from_top(s, v, c));
      return r.threads.size() - 1;
    };
    for (std::size_t k = 0; k < top.gens.size(); ++k) r.top_gen.push_back(add(top.gens[k], cert::gen(k)));
    for (const auto& q : opt.const_pool) add(constant_values(top.carrier.size(), q), cert::constant(q));
  }
  for (auto& t : extra) r.threads.push_back(std::move(t));
  if (r.threads.size() > opt.thread_bound) fail(ErrorKind::ThreadBoundExceeded, std::to_string(r.threads.size()));
  r.space.carrier = r.sum.quotient;
  for (std::size_t k = 0; k < r.threads.size(); ++k) {
    r.space.gens.push_back(thread_to_sum_function(s, r.threads[k], r.sum));
    r.space.gen_names.push_back("t" + std::to_string(k));
  }
  if (opt.enumerate) {
    MorphismWitness can{SetoidFn{r.space.carrier, top.carrier, std::vector<std::size_t>(r.idx.size())}, {}};
    for (std::size_t a = 0; a < r.idx.size(); ++a) can.h.map[a] = to_top(s.fam, r.idx.elems[a].first, r.idx.elems[a].second);
    for (std::size_t k : r.top_gen) can.certs.push_back(cert::gen(k));
    r.can = std::move(can);
  }
  return r;
}

Cert certify_sum(const Spectrum& s, const SumSpace& sum, const Thread& t) {
  Values f = thread_to_sum_function(s, t, sum.sum);
  for (std::size_t k = 0; k < sum.space.gens.size(); ++k)
    if (sum.space.gens[k] == f) return cert::gen(k);
  if (!sum.can) fail(ErrorKind::MissingCertificate, "thread is not listed and top generators are unavailable");
  return lift_certificate(*sum.can, t.certs[sum.top]);
}

Thread pullback_thread(const SpectrumMap& psi, const Thread& h) {
  if (!psi.cont) fail(ErrorKind::NotContinuous, "spectrum map has no continuity witnesses");
  Thread t;
  for (std::size_t i = 0; i < psi.comps.size(); ++i) {
    t.vals.push_back(pull_back(h.vals[i], psi.comps[i]));
    t.certs.push_back(lift_certificate((*psi.cont)[i], h.certs[i]));
  }
  for (const auto& v : validate_thread(psi.src, t))
    if (v.law == "IncompatibleThread") fail(ErrorKind::IncompatibleThread, v.witness);
  return t;
}

Issues check_sum_morphisms(const SpectrumMap& psi, const SumSpace& src, const SumSpace& dst, const CertOptions& opt) {
  Issues out;
  const Spectrum& s = psi.src;
  for (std::size_t i = 0; i < s.size(); ++i) {
    MorphismWitness e{SetoidFn{s.spaces[i].carrier, src.space.carrier, std::vector<std::size_t>(s.spaces[i].carrier.size())},
                      {}};
    for (std::size_t x = 0; x < e.h.map.size(); ++x) e.h.map[x] = src.idx.flat(i, x);
    for (const auto& t : src.threads) e.certs.push_back(t.certs[i]);
    for (auto& v : check_morphism(s.spaces[i], src.space, e, opt))
      out.push_back({v.law, "e_" + s.index().name(i) + ": " + v.witness});
  }
  if (!psi.cont) {
    out.push_back({"NotContinuous", "spectrum map has no continuity witnesses"});
    return out;
  }
  MorphismWitness sig{SetoidFn{src.space.carrier, dst.space.carrier, std::vector<std::size_t>(src.idx.size())}, {}};
  for (std::size_t a = 0; a < src.idx.size(); ++a) {
    auto [i, x] = src.idx.elems[a];
    sig.h.map[a] = dst.idx.flat(i, psi.comps[i](x));
  }
  for (const auto& h : dst.threads) sig.certs.push_back(certify_sum(s, src, pullback_thread(psi, h)));
  for (auto& v : check_morphism(src.space, dst.space, sig, opt)) out.push_back({v.law, "sum map: " + v.witness});
  return out;
}

bool check_induced_square(const SpectrumMap& psi, std::size_t i, std::size_t j) {
  const Spectrum& s = psi.src;
  const Spectrum& t = psi.dst;
  bool cov = s.fam.dir == Direction::covariant;
  // covariant: g o Psi_j o lambda_ij = g o mu_ij o Psi_i for g in G_j
  std::size_t gi = cov ? j : i;
  SetoidFn left = cov ? compose(s.fam.transport(i, j), psi.comps[j]) : compose(s.fam.transport(i, j), psi.comps[i]);
  SetoidFn right = cov ? compose(psi.comps[i], t.fam.transport(i, j)) : compose(psi.comps[j], t.fam.transport(i, j));
  for (const auto& g : t.spaces[gi].gens)
    if (pull_back(g, left) != pull_back(g, right)) return false;
  return true;
}

}  // namespace bspec

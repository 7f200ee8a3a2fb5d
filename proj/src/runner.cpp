#include "bspec/runner.hpp"

#include <algorithm>
#include <chrono>

#include "bspec/random.hpp"

namespace bspec {

const std::vector<std::string>& law_groups() {
  static const std::vector<std::string> g{"directed", "family",   "equivalence", "space",       "certificate",
                                          "spectrum", "limits",   "universal",   "specmap",     "cofinality",
                                          "products", "duality",  "random"};
  return g;
}

namespace {

std::string classes(std::size_t n) { return std::to_string(n) + (n == 1 ? " class" : " classes"); }

struct Outcome {
  Status status = Status::pass;
  std::string witness;
};

Outcome from_issues(const Issues& is, std::string on_pass = "") {
  if (is.empty()) return {Status::pass, std::move(on_pass)};
  std::string w = is.front().law + ": " + is.front().witness;
  if (is.size() > 1) w += " (+" + std::to_string(is.size() - 1) + " more)";
  return {Status::fail, w};
}

class Recorder {
 public:
  Recorder(Report& r, std::string suite) : r_(r), suite_(std::move(suite)) {}

  void law(const std::string& law, const std::string& anchor, const std::function<Outcome()>& f) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const Error& e) {
      o = {Status::fail, e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r_.add({suite_, law, anchor, o.status, o.witness, ms});
  }

 private:
  Report& r_;
  std::string suite_;
};

std::string tagged(const std::string& law, const std::string& target) { return law + " (" + target + ")"; }

ThreadOptions thread_opts(const RunConfig& c) {
  ThreadOptions t;
  t.thread_bound = c.thread_bound;
  return t;
}

CertOptions cert_opts(const RunConfig& c) {
  CertOptions o;
  o.witnessed = true;
  o.ulim_depth = c.cert_depth;
  return o;
}

Issues sum_equivalence(const DirectFamily& f) {
  Setoid u = exterior_union(f);
  SigmaIndex s = sigma_index(f.carriers);
  auto rel = [&](std::size_t a, std::size_t b) {
    auto [i, x] = s.elems[a];
    auto [j, y] = s.elems[b];
    return direct_sum_equality(f, i, x, j, y);
  };
  if (auto v = equivalence_violation(s.size(), rel, [&](std::size_t a) { return u.name(a); })) return {*v};
  return {};
}

// (i,x) ~ (j,y) iff some common upper bound k has lambda_ik x = lambda_jk y
Issues top_agrees_with_search(const DirectFamily& f) {
  Issues out;
  SigmaIndex s = sigma_index(f.carriers);
  Setoid u = exterior_union(f);
  const DirectedIndex& d = f.index;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      auto [i, x] = s.elems[a];
      auto [j, y] = s.elems[b];
      bool found = false;
      for (std::size_t k = 0; k < d.size() && !found; ++k)
        found = d.leq(i, k) && d.leq(j, k) && f.carriers[k].eq(f.transport(i, k)(x), f.transport(j, k)(y));
      if (found != direct_sum_equality(f, i, x, j, y)) out.push_back({"top canonicalization", u.name(a) + " vs " + u.name(b)});
    }
  return out;
}

Outcome uniqueness_outcome(Uniqueness u) {
  if (u == Uniqueness::unique) return {Status::pass, "unique"};
  if (u == Uniqueness::skipped) return {Status::skipped, std::string(to_string(u))};
  return {Status::fail, "another extensional map commutes"};
}

std::string class_list(const Setoid& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.reps().size(); ++k) {
    std::size_t r = s.reps()[k];
    if (k) out += " | ";
    std::string cls;
    for (std::size_t x = 0; x < s.size(); ++x)
      if (s.rep(x) == r) cls += (cls.empty() ? "" : ",") + s.name(x);
    out += cls;
  }
  return out + "}";
}

class SuiteRunner {
 public:
  SuiteRunner(const dsl::Workspace& ws, const RunConfig& cfg, std::vector<std::string> targets)
      : ws_(ws), cfg_(cfg), targets_(std::move(targets)) {}

  void group(const std::string& g, Report& r) {
    Recorder rec(r, g);
    if (g == "directed") directed(rec);
    else if (g == "family") family(rec);
    else if (g == "equivalence") equivalence(rec);
    else if (g == "space") space(rec);
    else if (g == "certificate") certificate(rec);
    else if (g == "spectrum") spectrum(rec);
    else if (g == "limits") limits(rec);
    else if (g == "universal") universal(rec);
    else if (g == "specmap") specmap(rec);
    else if (g == "cofinality") cofinality(rec);
    else if (g == "products") products(rec);
    else if (g == "duality") duality(rec);
    else if (g == "random") random(rec);
  }

 private:
  const dsl::Workspace& ws_;
  const RunConfig& cfg_;
  std::vector<std::string> targets_;

  std::vector<std::string> names(std::string_view kind) const {
    std::vector<std::string> out;
    for (const auto& n : ws_.names_of(kind))
      if (targets_.empty() || std::find(targets_.begin(), targets_.end(), n) != targets_.end()) out.push_back(n);
    return out;
  }

  void directed(Recorder& rec) {
    for (const auto& n : names("directed"))
      rec.law(tagged("directed preorder with upper bounds", n), "directed set",
              [&] { return from_issues(validate_directed(ws_.indices.at(n))); });
  }

  void family(Recorder& rec) {
    for (const auto& n : names("family"))
      rec.law(tagged("identity and composition of transports", n), "direct family",
              [&] { return from_issues(validate_direct_family(ws_.families.at(n))); });
  }

  void equivalence(Recorder& rec) {
    for (const auto& n : names("family")) {
      const DirectFamily& f = ws_.families.at(n);
      if (f.dir != Direction::covariant) continue;
      rec.law(tagged("direct-sum equality is an equivalence", n), "direct sum equality",
              [&] { return from_issues(sum_equivalence(f)); });
      rec.law(tagged("top canonicalization agrees with upper-bound search", n), "direct sum equality",
              [&] { return from_issues(top_agrees_with_search(f)); });
    }
  }

  void space(Recorder& rec) {
    for (const auto& n : names("subbase"))
      rec.law(tagged("subbase is extensional", n), "Bishop space",
              [&] { return from_issues(validate_space(ws_.spaces.at(n))); });
  }

  void certificate(Recorder& rec) {
    for (const auto& n : names("certificate")) {
      const auto& c = ws_.certificates.at(n);
      rec.law(tagged("certificate derives its target", n), "least topology", [&] {
        CertCheck r = validate_certificate(ws_.spaces.at(c.space), c.target, c.proof, cert_opts(cfg_));
        return from_issues(r.issues, cert_to_sexpr(c.proof, [&](std::size_t k) { return ws_.spaces.at(c.space).gen_name(k); }));
      });
    }
  }

  void spectrum(Recorder& rec) {
    for (const auto& n : names("spectrum")) {
      const Spectrum& s = ws_.spectra.at(n);
      rec.law(tagged("spectrum laws", n), "direct spectrum", [&] { return from_issues(validate_spectrum(s, cert_opts(cfg_))); });
      if (s.fam.dir != Direction::covariant) continue;
      rec.law(tagged("thread functions respect the direct sum", n), "sum topology", [&] {
        SumSpace sum = sum_space(s, {}, thread_opts(cfg_));
        Issues is;
        for (std::size_t t = 0; t < sum.threads.size(); ++t) {
          for (auto& v : validate_thread(s, sum.threads[t], cert_opts(cfg_))) is.push_back(v);
          Values f = thread_to_sum_function(s, sum.threads[t], sum.sum);
          if (!is_extensional(sum.sum.quotient, f)) is.push_back({"thread extensionality", sum.space.gen_name(t)});
        }
        return from_issues(is, std::to_string(sum.threads.size()) + " threads");
      });
      rec.law(tagged("injections and sum map are morphisms", n), "sum topology", [&] {
        SumSpace sum = sum_space(s, {}, thread_opts(cfg_));
        return from_issues(check_sum_morphisms(identity_map(s), sum, sum, cert_opts(cfg_)));
      });
    }
  }

  void limits(Recorder& rec) {
    for (const auto& n : names("spectrum")) {
      const Spectrum& s = ws_.spectra.at(n);
      if (s.fam.dir == Direction::covariant) {
        rec.law(tagged("direct limit topology", n), "direct limit", [&] {
          DirectLimit l = direct_limit(s, thread_opts(cfg_));
          return from_issues(validate_direct_limit(l), classes(l.carrier().class_count()));
        });
        rec.law(tagged("universal property on the limit cocone", n), "universal property of the direct limit", [&] {
          DirectLimit l = direct_limit(s, thread_opts(cfg_));
          Mediator m = cocone_mediator(l, own_cocone(l), cfg_.uniq_bound, cert_opts(cfg_));
          Outcome o = from_issues(m.issues);
          return o.status == Status::pass ? uniqueness_outcome(m.uniqueness) : o;
        });
      } else {
        rec.law(tagged("inverse limit threads", n), "inverse limit", [&] {
          InverseLimit l = inverse_limit(s, cfg_.uniq_bound);
          return Outcome{Status::pass, classes(l.carrier().class_count())};
        });
        rec.law(tagged("universal property on the limit cone", n), "universal property of the inverse limit", [&] {
          InverseLimit l = inverse_limit(s, cfg_.uniq_bound);
          Mediator m = cone_mediator(l, own_cone(l), cfg_.uniq_bound, cert_opts(cfg_));
          Outcome o = from_issues(m.issues);
          return o.status == Status::pass ? uniqueness_outcome(m.uniqueness) : o;
        });
      }
    }
  }

  void universal(Recorder& rec) {
    for (const auto& n : names("cocone")) {
      const auto& c = ws_.cocones.at(n);
      const Spectrum& s = ws_.spectra.at(c.spectrum);
      rec.law(tagged("cocone laws", n), "cocone", [&] { return from_issues(validate_cocone(s, c.cocone, cert_opts(cfg_))); });
      rec.law(tagged("mediator commutes and is a morphism", n), "universal property of the direct limit", [&] {
        DirectLimit l = direct_limit(s, thread_opts(cfg_));
        return from_issues(cocone_mediator(l, c.cocone, cfg_.uniq_bound, cert_opts(cfg_)).issues);
      });
      rec.law(tagged("mediator is unique", n), "universal property of the direct limit", [&] {
        DirectLimit l = direct_limit(s, thread_opts(cfg_));
        return uniqueness_outcome(cocone_mediator(l, c.cocone, cfg_.uniq_bound, cert_opts(cfg_)).uniqueness);
      });
    }
    for (const auto& n : names("cone")) {
      const auto& c = ws_.cones.at(n);
      const Spectrum& s = ws_.spectra.at(c.spectrum);
      rec.law(tagged("cone laws", n), "cone", [&] { return from_issues(validate_cone(s, c.cone, cert_opts(cfg_))); });
      rec.law(tagged("mediator commutes and is a morphism", n), "universal property of the inverse limit", [&] {
        InverseLimit l = inverse_limit(s, cfg_.uniq_bound);
        return from_issues(cone_mediator(l, c.cone, cfg_.uniq_bound, cert_opts(cfg_)).issues);
      });
      rec.law(tagged("mediator is unique", n), "universal property of the inverse limit", [&] {
        InverseLimit l = inverse_limit(s, cfg_.uniq_bound);
        return uniqueness_outcome(cone_mediator(l, c.cone, cfg_.uniq_bound, cert_opts(cfg_)).uniqueness);
      });
    }
  }

  Issues limit_map_issues(const SpectrumMap& m, SetoidFn* out) {
    if (m.src.fam.dir == Direction::covariant) {
      LimitMap lm = limit_map(m, direct_limit(m.src, thread_opts(cfg_)), direct_limit(m.dst, thread_opts(cfg_)),
                              cert_opts(cfg_));
      if (out) *out = lm.map;
      return lm.issues;
    }
    LimitMap lm = inverse_limit_map(m, inverse_limit(m.src, cfg_.uniq_bound), inverse_limit(m.dst, cfg_.uniq_bound),
                                    cert_opts(cfg_));
    if (out) *out = lm.map;
    return lm.issues;
  }

  void specmap(Recorder& rec) {
    for (const auto& n : names("specmap")) {
      const SpectrumMap& m = ws_.maps.at(n).map;
      rec.law(tagged("naturality and continuity", n), "spectrum map",
              [&] { return from_issues(validate_spectrum_map(m, cert_opts(cfg_))); });
      rec.law(tagged("induced limit map", n), "induced map of limits",
              [&] { return from_issues(limit_map_issues(m, nullptr)); });
    }
    for (const auto& n : names("spectrum")) {
      rec.law(tagged("identity induces the identity", n), "functoriality", [&] {
        const Spectrum& s = ws_.spectra.at(n);
        SetoidFn f;
        Issues is = limit_map_issues(identity_map(s), &f);
        if (is.empty() && !fn_equal(f, identity(f.dom))) is.push_back({"identity", format_fn(f)});
        return from_issues(is);
      });
    }
    for (const auto& a : names("specmap"))
      for (const auto& b : ws_.names_of("specmap")) {
        const auto& ma = ws_.maps.at(a);
        const auto& mb = ws_.maps.at(b);
        if (ma.target != mb.source) continue;
        rec.law(tagged("composite induces the composite", a + ";" + b), "functoriality", [&] {
          SetoidFn fa, fb, fc;
          Issues is = limit_map_issues(ma.map, &fa);
          for (auto& v : limit_map_issues(mb.map, &fb)) is.push_back(v);
          for (auto& v : limit_map_issues(compose_maps(ma.map, mb.map), &fc)) is.push_back(v);
          if (is.empty() && !fn_equal(fc, compose(fa, fb))) is.push_back({"composition", format_fn(fc)});
          return from_issues(is);
        });
      }
  }

  void cofinality(Recorder& rec) {
    for (const auto& n : names("cofinal")) {
      const auto& c = ws_.cofinals.at(n);
      rec.law(tagged("cofinal subset laws", n), "cofinal subset",
              [&] { return from_issues(validate_cofinal(ws_.indices.at(c.index), c.subset)); });
      if (!c.spectrum) continue;
      const Spectrum& s = ws_.spectra.at(*c.spectrum);
      rec.law(tagged("limits over the subset agree", n + " on " + *c.spectrum), "cofinality", [&] {
        IsoReport r = s.fam.dir == Direction::covariant ? cofinal_direct_iso(s, c.subset, thread_opts(cfg_), cert_opts(cfg_))
                                                       : cofinal_inverse_iso(s, c.subset, cfg_.uniq_bound, cert_opts(cfg_));
        return from_issues(r.issues, std::to_string(r.theta.dom.class_count()) + " = " +
                                         std::to_string(r.phi.dom.class_count()) + " classes");
      });
    }
  }

  void products(Recorder& rec) {
    for (const auto& n : names("spectrum")) {
      const Spectrum& s = ws_.spectra.at(n);
      if (s.fam.dir == Direction::covariant) {
        rec.law(tagged("product of direct limits", n + " x " + n), "product spectrum", [&] {
          ProductLimitReport r = product_limit_bijection(s, s, thread_opts(cfg_), cert_opts(cfg_));
          return from_issues(r.issues, std::to_string(r.classes_product) + " = " + std::to_string(r.classes_s) + " * " +
                                           std::to_string(r.classes_t));
        });
      } else {
        rec.law(tagged("product of inverse limits", n + " x " + n), "product spectrum", [&] {
          return from_issues(product_inverse_morphism(s, s, cfg_.uniq_bound, cert_opts(cfg_)).issues);
        });
      }
    }
  }

  void duality(Recorder& rec) {
    for (const auto& n : names("pool")) {
      Report sub = run_duality(ws_, n, cfg_);
      for (auto& c : sub.checks) rec.law(c.law, c.anchor, [&] { return Outcome{c.status, c.witness}; });
    }
  }

  void random(Recorder& rec) {
    gen::Rng rng(cfg_.seed);
    auto preorders = gen::directed_preorders(3);
    for (std::size_t k = 0; k < cfg_.random_instances; ++k) {
      const DirectedIndex& d = preorders[gen::pick(rng, preorders.size())];
      Spectrum s = gen::random_spectrum(rng, d, Direction::covariant, 3);
      std::uint64_t sub = rng();
      rec.law("random spectrum " + std::to_string(k), "direct limit", [&, sub] {
        gen::Rng r(sub);
        Issues is = validate_spectrum(s, cert_opts(cfg_));
        for (auto& v : sum_equivalence(s.fam)) is.push_back(v);
        for (auto& v : top_agrees_with_search(s.fam)) is.push_back(v);
        DirectLimit l = direct_limit(s, thread_opts(cfg_));
        for (auto& v : validate_direct_limit(l)) is.push_back(v);
        Cocone c = gen::random_cocone(r, l, 3);
        Mediator m = cocone_mediator(l, c, cfg_.uniq_bound, cert_opts(cfg_));
        for (auto& v : m.issues) is.push_back(v);
        if (m.uniqueness == Uniqueness::not_unique) is.push_back({"uniqueness", "mediator"});
        return from_issues(is, std::to_string(d.size()) + " indices, " + classes(l.carrier().class_count()));
      });
    }
  }
};

}  // namespace

Report run_suite(const dsl::Workspace& ws, const std::string& suite, const RunConfig& cfg) {
  std::vector<std::string> groups;
  std::vector<std::string> targets;
  const auto& all = law_groups();
  if (suite.empty()) {
    groups = all;
    if (!cfg.randomized) groups.pop_back();
  } else if (std::find(all.begin(), all.end(), suite) != all.end()) {
    groups = {suite};
  } else if (auto it = ws.suites.find(suite); it != ws.suites.end()) {
    groups = it->second.laws.empty() ? all : it->second.laws;
    targets = it->second.targets;
    for (const auto& g : groups)
      if (std::find(all.begin(), all.end(), g) == all.end()) fail(ErrorKind::ConfigError, "unknown law group '" + g + "'");
  } else {
    fail(ErrorKind::ConfigError, "unknown suite '" + suite + "'");
  }
  Report r;
  SuiteRunner run(ws, cfg, targets);
  for (const auto& g : groups) run.group(g, r);
  return r;
}

Report run_limit(const dsl::Workspace& ws, const std::string& name, bool direct, const RunConfig& cfg) {
  auto it = ws.spectra.find(name);
  if (it == ws.spectra.end()) fail(ErrorKind::ConfigError, "unknown spectrum '" + name + "'");
  const Spectrum& s = it->second;
  Report r;
  Recorder rec(r, direct ? "direct limit" : "inverse limit");
  Export ex{(direct ? "Lim-> " : "Lim<- ") + name, {}};
  if (direct) {
    rec.law(tagged("direct limit topology", name), "direct limit", [&] {
      DirectLimit l = direct_limit(s, thread_opts(cfg));
      ex.fields = {{"classes", std::to_string(l.carrier().class_count())},
                   {"elements", class_list(l.carrier())},
                   {"threads", std::to_string(l.sum.threads.size())}};
      for (std::size_t k = 0; k < l.space().gens.size(); ++k)
        ex.fields.emplace_back(l.space().gen_name(k), format_values(l.space().gens[k]));
      return from_issues(validate_direct_limit(l), classes(l.carrier().class_count()));
    });
  } else {
    rec.law(tagged("inverse limit threads", name), "inverse limit", [&] {
      InverseLimit l = inverse_limit(s, cfg.uniq_bound);
      ex.fields = {{"classes", std::to_string(l.carrier().class_count())},
                   {"elements", class_list(l.carrier())},
                   {"generators", std::to_string(l.space.gens.size())}};
      Issues is;
      for (const auto& a : l.elems)
        for (auto& v : validate_dependent(s.fam, a, Flavor::contravariant)) is.push_back(v);
      return from_issues(is, classes(l.carrier().class_count()));
    });
  }
  if (!ex.fields.empty()) r.exports.push_back(std::move(ex));
  return r;
}

Report run_cofinal_iso(const dsl::Workspace& ws, const std::string& name, const std::optional<std::string>& spectrum,
                       const RunConfig& cfg) {
  auto it = ws.cofinals.find(name);
  if (it == ws.cofinals.end()) fail(ErrorKind::ConfigError, "unknown cofinal subset '" + name + "'");
  const auto& c = it->second;
  std::optional<std::string> sn = spectrum ? spectrum : c.spectrum;
  if (!sn) {
    for (const auto& n : ws.names_of("spectrum"))
      if (ws.spectra.at(n).index().base.same_as(ws.indices.at(c.index).base)) {
        sn = n;
        break;
      }
  }
  if (!sn || !ws.spectra.count(*sn)) fail(ErrorKind::ConfigError, "no spectrum over the index of '" + name + "'");
  const Spectrum& s = ws.spectra.at(*sn);
  Report r;
  Recorder rec(r, "cofinality");
  rec.law(tagged("cofinal subset laws", name), "cofinal subset",
          [&] { return from_issues(validate_cofinal(s.index(), c.subset)); });
  bool cov = s.fam.dir == Direction::covariant;
  IsoReport iso = cov ? cofinal_direct_iso(s, c.subset, thread_opts(cfg), cert_opts(cfg))
                      : cofinal_inverse_iso(s, c.subset, cfg.uniq_bound, cert_opts(cfg));
  auto pointwise = [](const Issue& v) {
    return v.law == "inverse" || v.law == "extensionality" || v.law == "compatibility";
  };
  rec.law(tagged("phi and theta are mutually inverse", name), "cofinality", [&] {
    Issues is;
    std::copy_if(iso.issues.begin(), iso.issues.end(), std::back_inserter(is), pointwise);
    return from_issues(is);
  });
  rec.law(tagged("phi and theta are morphisms", name), "cofinality", [&] {
    Issues is;
    std::copy_if(iso.issues.begin(), iso.issues.end(), std::back_inserter(is), [&](const Issue& v) { return !pointwise(v); });
    return from_issues(is);
  });
  rec.law(tagged("class counts", name), "cofinality", [&] {
    std::size_t a = iso.theta.dom.class_count(), b = iso.phi.dom.class_count();
    std::string w = "I-limit " + classes(a) + ", J-limit " + classes(b);
    return Outcome{a == b ? Status::pass : Status::fail, w};
  });
  return r;
}

Report run_duality(const dsl::Workspace& ws, const std::string& name, const RunConfig& cfg) {
  auto it = ws.pools.find(name);
  if (it == ws.pools.end()) fail(ErrorKind::ConfigError, "unknown pool '" + name + "'");
  const auto& p = it->second;
  const Spectrum& s = ws.spectra.at(p.spectrum);
  const BSpace& f = ws.spaces.at(p.space);
  DualityOptions opt;
  opt.threads = thread_opts(cfg);
  opt.certs = cert_opts(cfg);
  opt.bound = cfg.uniq_bound;
  Report r;
  Recorder rec(r, "duality");
  rec.law(tagged("induced spectrum laws", name), "induced spectra", [&] {
    InducedSpectrum m = induce_spectrum(s, f, p.shape, p.members);
    Issues is = validate_spectrum(m.spec, opt.certs);
    for (const auto& e : m.pools)
      for (auto& v : validate_pool(e, opt.certs)) is.push_back(v);
    return from_issues(is, std::string(to_string(p.shape)));
  });
  auto iso = [&](const std::string& anchor, const std::function<DualityReport()>& run) {
    std::optional<DualityReport> d;
    rec.law(tagged("forward and backward maps are mutually inverse", name), anchor, [&] {
      d = run();
      Issues is;
      for (const auto& v : d->issues)
        if (v.law != "embedding") is.push_back(v);
      return from_issues(is, std::to_string(d->left_size) + " = " + std::to_string(d->right_size) + " classes");
    });
    rec.law(tagged("forward map is an embedding", name), anchor, [&] {
      if (!d) return Outcome{Status::skipped, "not computed"};
      return Outcome{d->embedding ? Status::pass : Status::fail, d->embedding ? "" : "not an embedding"};
    });
  };
  auto converse = [&](const std::string& anchor, const std::function<ConverseReport()>& run) {
    std::optional<ConverseReport> c;
    rec.law(tagged("hat is a morphism", name), anchor, [&] {
      c = run();
      return from_issues(c->issues);
    });
    rec.law(tagged("representative hypothesis", name), anchor, [&] {
      if (!c) return Outcome{Status::skipped, "not computed"};
      if (c->hypothesis) return Outcome{Status::pass, ""};
      std::string w;
      for (const auto& n : c->notices) w += (w.empty() ? "" : ", ") + n;
      return Outcome{Status::skipped, w};
    });
    rec.law(tagged("hat is an embedding", name), anchor, [&] {
      if (!c || !c->embedding) return Outcome{Status::skipped, "not computed"};
      if (*c->embedding) return Outcome{Status::pass, c->hypothesis ? "" : "embedding without the hypothesis"};
      if (c->hypothesis) return Outcome{Status::fail, "not an embedding"};
      return Outcome{Status::skipped, "not an embedding; hypothesis fails"};
    });
  };
  switch (p.shape) {
    case Shape::A_i:
      iso("duality principle", [&] { return duality_direct_to_inverse(s, f, p.members, std::nullopt, opt); });
      break;
    case Shape::B_ii:
      iso("second duality", [&] { return duality_inverse_hom(s, f, p.members, std::nullopt, opt); });
      break;
    case Shape::B_i:
      converse("converse duality", [&] { return converse_dual(s, f, p.members, std::nullopt, opt); });
      break;
    case Shape::A_ii:
      converse("second converse duality", [&] { return converse_dual2(s, f, p.members, std::nullopt, opt); });
      break;
  }
  return r;
}

}  // namespace bspec

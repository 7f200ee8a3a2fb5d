// End-to-end acceptance suite. One line per criterion; exit status 0 iff
// every criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bspec/dsl.hpp"
#include "bspec/fixtures.hpp"
#include "bspec/random.hpp"
#include "bspec/synth.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

struct Failure {
  std::string what;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

void need_clean(const Issues& is, const std::string& what) {
  if (!is.empty()) throw Failure{what + ": " + is[0].law + " " + is[0].witness};
}

bool same_on_classes(const SetoidFn& f, const SetoidFn& g) {
  for (std::size_t a = 0; a < f.dom.size(); ++a)
    if (!f.cod.eq(f(a), g(a))) return false;
  return true;
}

bool bijective_on_classes(const SetoidFn& f) {
  if (!is_extensional(f) || !is_embedding(f)) return false;
  std::vector<char> hit(f.cod.size(), 0);
  for (std::size_t a = 0; a < f.dom.size(); ++a) hit[f.cod.rep(f(a))] = 1;
  for (std::size_t z : f.cod.reps())
    if (!hit[z]) return false;
  return true;
}

// Every table carrier -> apex (no quotienting), counting the extensional
// ones that satisfy pred up to equality with h.
template <class Pred>
bool unique_by_brute_force(const Setoid& dom, const Setoid& cod, const SetoidFn& h, Pred pred) {
  std::size_t n = dom.size(), m = cod.size();
  std::vector<std::size_t> t(n, 0);
  while (true) {
    SetoidFn f{dom, cod, t};
    if (is_extensional(f) && pred(f) && !same_on_classes(f, h)) return false;
    std::size_t k = 0;
    while (k < n && ++t[k] == m) t[k++] = 0;
    if (k == n) return true;
  }
}

std::size_t oracle_classes(const DirectFamily& f) {
  SigmaIndex s = sigma_index(f.carriers);
  return oracle::count_classes(s.size(), [&](std::size_t a, std::size_t b) {
    return oracle::exists_k(f, s.elems[a].first, s.elems[a].second, s.elems[b].first, s.elems[b].second);
  });
}

const std::vector<DirectedIndex>& shapes() {
  static const std::vector<DirectedIndex> all = gen::directed_preorders(4);
  return all;
}

// 1 ---------------------------------------------------------------------

std::string equivalence() {
  gen::Rng rng(1001);
  const auto& all = shapes();
  need(all.size() == 22, "expected 22 directed preorders, got " + std::to_string(all.size()));
  std::size_t pairs = 0;
  for (std::size_t it = 0; it < 200; ++it) {
    const DirectedIndex& d = all[it % all.size()];
    DirectFamily f = gen::random_family(rng, d, Direction::covariant, 3);
    need_clean(validate_direct_family(f), "family " + std::to_string(it));
    SigmaIndex s = sigma_index(f.carriers);
    std::size_t n = s.size();
    std::vector<std::vector<char>> r(n, std::vector<char>(n));
    std::size_t t = top_element(f.index);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto [i, x] = s.elems[a];
        auto [j, y] = s.elems[b];
        bool lib = direct_sum_equality(f, i, x, j, y);
        bool brute = oracle::exists_k(f, i, x, j, y);
        bool top = f.carriers[t].eq(to_top(f, i, x), to_top(f, j, y));
        need(lib == brute && top == brute, "exists-k disagreement in family " + std::to_string(it));
        r[a][b] = lib;
        ++pairs;
      }
    for (std::size_t a = 0; a < n; ++a) {
      need(r[a][a], "reflexivity");
      for (std::size_t b = 0; b < n; ++b) {
        need(r[a][b] == r[b][a], "symmetry");
        for (std::size_t c = 0; c < n; ++c) need(!(r[a][b] && r[b][c]) || r[a][c], "transitivity");
      }
    }
  }
  return "200 families over 22 index shapes, " + std::to_string(pairs) + " pairs";
}

// 2 ---------------------------------------------------------------------

std::size_t threads_extensional(const Spectrum& s) {
  need_clean(validate_spectrum(s), "spectrum");
  SumSpace sum = sum_space(s);
  SigmaIndex idx = sigma_index(s.fam.carriers);
  for (const auto& t : sum.threads) {
    need_clean(validate_thread(s, t), "thread");
    Values f = thread_to_sum_function(s, t, sum.sum);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        if (oracle::exists_k(s.fam, idx.elems[a].first, idx.elems[a].second, idx.elems[b].first, idx.elems[b].second))
          need(f[a] == f[b], "f_Theta differs on equal sum elements");
  }
  return sum.threads.size();
}

std::string thread_extensionality() {
  std::size_t threads = threads_extensional(fixtures::cspec());
  gen::Rng rng(2002);
  for (int it = 0; it < 100; ++it)
    threads += threads_extensional(gen::random_spectrum(rng, shapes()[gen::pick(rng, shapes().size())], Direction::covariant, 3));
  return "CSPEC and 100 random spectra, " + std::to_string(threads) + " threads";
}

// 3 ---------------------------------------------------------------------

void direct_universal(const DirectLimit& l, const Cocone& c) {
  need_clean(validate_cocone(l.spec, c), "cocone");
  Mediator m = cocone_mediator(l, c);
  need_clean(m.issues, "mediator");
  need(m.uniqueness == Uniqueness::unique, "mediator uniqueness not established");
  need_clean(check_morphism(l.space(), c.apex, m.h), "mediator witness");
  for (std::size_t i = 0; i < l.spec.size(); ++i)
    need(fn_equal(compose(eql(l, i), m.h.h), c.legs[i].h), "h o eql_i != eps_i");
  bool unique = unique_by_brute_force(l.carrier(), c.apex.carrier, m.h.h, [&](const SetoidFn& f) {
    for (std::size_t i = 0; i < l.spec.size(); ++i)
      if (!fn_equal(compose(eql(l, i), f), c.legs[i].h)) return false;
    return true;
  });
  need(unique, "a second mediator exists");
}

void inverse_universal(const InverseLimit& l, const Cone& c) {
  need_clean(validate_cone(l.spec, c), "cone");
  Mediator m = cone_mediator(l, c);
  need_clean(m.issues, "mediator");
  need(m.uniqueness == Uniqueness::unique, "mediator uniqueness not established");
  need_clean(check_morphism(c.apex, l.space, m.h), "mediator witness");
  for (std::size_t i = 0; i < l.spec.size(); ++i)
    need(fn_equal(compose(m.h.h, pi(l, i)), c.legs[i].h), "pi_i o h != leg_i");
  bool unique = unique_by_brute_force(c.apex.carrier, l.carrier(), m.h.h, [&](const SetoidFn& f) {
    for (std::size_t i = 0; i < l.spec.size(); ++i)
      if (!fn_equal(compose(f, pi(l, i)), c.legs[i].h)) return false;
    return true;
  });
  need(unique, "a second mediator exists");
}

std::string universal() {
  gen::Rng rng(3003);
  std::size_t direct = 0, inverse = 0;
  for (const Spectrum& s : {fixtures::cspec(), fixtures::constant_x2()}) {
    DirectLimit l = direct_limit(s);
    direct_universal(l, own_cocone(l));
    for (int k = 0; k < 5; ++k) direct_universal(l, gen::random_cocone(rng, l, 4)), ++direct;
  }
  for (const Spectrum& s : {fixtures::rswap(), fixtures::rcollapse(), fixtures::constant_x2(Direction::contravariant)}) {
    InverseLimit l = inverse_limit(s);
    inverse_universal(l, own_cone(l));
    for (int k = 0; k < 5; ++k) inverse_universal(l, gen::random_cone(rng, l, 4)), ++inverse;
  }
  for (int done = 0; done < 50;) {
    Spectrum s = gen::random_spectrum(rng, shapes()[gen::pick(rng, shapes().size())], Direction::covariant, 2);
    if (sigma_index(s.fam.carriers).size() > 6) continue;
    DirectLimit l = direct_limit(s);
    direct_universal(l, gen::random_cocone(rng, l, 4));
    ++done, ++direct;
  }
  for (int done = 0; done < 50;) {
    Spectrum s = gen::random_spectrum(rng, shapes()[gen::pick(rng, shapes().size())], Direction::contravariant, 3);
    InverseLimit l = inverse_limit(s);
    if (l.elems.size() > 6) continue;
    inverse_universal(l, gen::random_cone(rng, l, 4));
    ++done, ++inverse;
  }
  return std::to_string(direct) + " cocones, " + std::to_string(inverse) + " cones, uniqueness by exhaustive search";
}

// 4 ---------------------------------------------------------------------

std::string functoriality() {
  gen::Rng rng(4004);
  std::size_t pairs = 0;
  for (int it = 0; it < 60; ++it) {
    Direction dir = it % 2 == 0 ? Direction::covariant : Direction::contravariant;
    Spectrum s = gen::random_spectrum(rng, shapes()[gen::pick(rng, shapes().size())], dir, 3);
    SpectrumMap a = gen::random_spectrum_map(rng, s);
    SpectrumMap b = gen::random_spectrum_map(rng, a.dst);
    SpectrumMap ab = compose_maps(a, b);
    need_clean(validate_spectrum_map(ab), "composite map");
    if (dir == Direction::covariant) {
      DirectLimit l0 = direct_limit(s), l1 = direct_limit(a.dst), l2 = direct_limit(b.dst);
      LimitMap id = limit_map(identity_map(s), l0, l0);
      need_clean(id.issues, "identity");
      need(same_on_classes(id.map, identity(l0.carrier())), "identity is not sent to the identity");
      LimitMap fa = limit_map(a, l0, l1), fb = limit_map(b, l1, l2), fab = limit_map(ab, l0, l2);
      need_clean(fa.issues, "first map");
      need_clean(fb.issues, "second map");
      need_clean(fab.issues, "composite");
      need(same_on_classes(fab.map, compose(fa.map, fb.map)), "direct composite differs");
    } else {
      InverseLimit l0 = inverse_limit(s), l1 = inverse_limit(a.dst), l2 = inverse_limit(b.dst);
      LimitMap id = inverse_limit_map(identity_map(s), l0, l0);
      need_clean(id.issues, "identity");
      need(same_on_classes(id.map, identity(l0.carrier())), "identity is not sent to the identity");
      LimitMap fa = inverse_limit_map(a, l0, l1), fb = inverse_limit_map(b, l1, l2), fab = inverse_limit_map(ab, l0, l2);
      need_clean(fa.issues, "first map");
      need_clean(fb.issues, "second map");
      need_clean(fab.issues, "composite");
      need(same_on_classes(fab.map, compose(fa.map, fb.map)), "inverse composite differs");
    }
    ++pairs;
  }
  return std::to_string(pairs) + " composable pairs, both directions";
}

// 5 ---------------------------------------------------------------------

void cofinal_instance(const Spectrum& s, const CofinalSubset& c) {
  need_clean(validate_cofinal(s.index(), c), "cofinal subset");
  DirectedIndex jd = cofinal_index(s.index(), c);
  Spectrum sj = relative_spectrum(s, jd, c.e);
  IsoReport r;
  if (s.fam.dir == Direction::covariant) {
    r = cofinal_direct_iso(s, c);
    need_clean(r.issues, "direct iso");
    DirectLimit li = direct_limit(s), lj = direct_limit(sj);
    need(r.phi_w && r.theta_w, "missing witnesses");
    need_clean(check_morphism(lj.space(), li.space(), *r.phi_w), "phi witness");
    need_clean(check_morphism(li.space(), lj.space(), *r.theta_w), "theta witness");
  } else {
    r = cofinal_inverse_iso(s, c);
    need_clean(r.issues, "inverse iso");
    InverseLimit li = inverse_limit(s), lj = inverse_limit(sj);
    need(r.phi_w && r.theta_w, "missing witnesses");
    need_clean(check_morphism(lj.space, li.space, *r.phi_w), "phi witness");
    need_clean(check_morphism(li.space, lj.space, *r.theta_w), "theta witness");
  }
  need(same_on_classes(compose(r.theta, r.phi), identity(r.theta.dom)), "phi o theta != id");
  need(same_on_classes(compose(r.phi, r.theta), identity(r.phi.dom)), "theta o phi != id");
}

std::string cofinality() {
  for (std::size_t m = 1; m <= 2; ++m) {
    DirectedIndex d = fixtures::eo_index(m);
    CofinalSubset c = fixtures::eo_cofinal(m);
    need_clean(validate_cofinal(d, c), "Even/Odd modulus");
    for (Direction dir : {Direction::covariant, Direction::contravariant})
      cofinal_instance(constant_spectrum(d, fixtures::x2(), dir), c);
  }
  cofinal_instance(fixtures::cspec(), fixtures::eo_cofinal(1));
  gen::Rng rng(5005);
  for (int it = 0; it < 30; ++it) {
    const DirectedIndex& d = shapes()[gen::pick(rng, shapes().size())];
    Direction dir = it % 2 == 0 ? Direction::covariant : Direction::contravariant;
    cofinal_instance(gen::random_spectrum(rng, d, dir, 3), gen::random_cofinal(rng, d));
  }
  return "EO(1), EO(2), CSPEC and 30 random instances";
}

// 6 ---------------------------------------------------------------------

std::string constant_limit() {
  BSpace g = fixtures::x2();
  DirectLimit l = direct_limit(fixtures::constant_x2());
  Mediator h = cocone_mediator(l, Cocone{g, {identity_witness(g), identity_witness(g), identity_witness(g)}});
  need_clean(h.issues, "mediator");
  MorphismWitness back = eql_witness(l, 2);
  need_clean(check_morphism(l.space(), g, h.h), "forward witness");
  need_clean(check_morphism(g, l.space(), back), "backward witness");
  need(same_on_classes(compose(h.h.h, back.h), identity(l.carrier())), "round trip on the limit");
  need(fn_equal(compose(back.h, h.h.h), identity(g.carrier)), "round trip on the space");
  need(l.carrier().class_count() == 2, "class count");
  return "Lim over CHAIN3 on X2 is isomorphic to X2 (2 classes)";
}

// 7 ---------------------------------------------------------------------

void product_pair(const Spectrum& s, const Spectrum& t) {
  if (s.fam.dir == Direction::covariant) {
    ProductLimitReport r = product_limit_bijection(s, t);
    need_clean(r.issues, "product of direct limits");
    need(bijective_on_classes(r.theta), "theta is not a bijection");
    need(r.w.has_value(), "theta witness");
    DirectLimit lst = direct_limit(product_spectrum(s, t)), ls = direct_limit(s), lt = direct_limit(t);
    need_clean(check_morphism(lst.space(), product_space(ls.space(), lt.space()).space, *r.w), "theta witness");
    std::size_t ps = oracle_classes(lst.spec.fam), a = oracle_classes(s.fam), b = oracle_classes(t.fam);
    need(ps == a * b && r.classes_product == ps, "class counts");
  } else {
    ProductInverseReport r = product_inverse_morphism(s, t);
    need_clean(r.issues, "product of inverse limits");
    need(is_extensional(r.map), "product map is not extensional");
    need(r.w.has_value(), "product map witness");
    need_clean(check_morphism(r.domain.space, inverse_limit(product_spectrum(s, t)).space, *r.w), "product map witness");
  }
}

std::string products() {
  std::size_t n = 0;
  product_pair(fixtures::cspec(), fixtures::cspec()), ++n;
  product_pair(fixtures::constant_x2(), fixtures::constant_x2()), ++n;
  product_pair(fixtures::cspec(), fixtures::constant_x2()), ++n;
  product_pair(fixtures::rswap(), fixtures::constant_x2(Direction::contravariant)), ++n;
  gen::Rng rng(7007);
  auto small = gen::directed_preorders(2);
  for (int it = 0; it < 20; ++it) {
    Direction dir = it % 2 == 0 ? Direction::covariant : Direction::contravariant;
    Spectrum s = gen::random_spectrum(rng, small[gen::pick(rng, small.size())], dir, 2, 1);
    Spectrum t = gen::random_spectrum(rng, small[gen::pick(rng, small.size())], dir, 2, 1);
    product_pair(s, t), ++n;
  }
  return std::to_string(n) + " products, class counts multiply";
}

// 8 ---------------------------------------------------------------------

void iso_duality(const DualityReport& r, const std::string& what) {
  need_clean(r.issues, what);
  need(is_inverse_pair(r.forward, r.backward), what + ": maps are not mutually inverse");
  need(r.embedding && is_embedding(r.forward), what + ": forward map is not an embedding");
  need(r.forward_w && r.backward_w, what + ": missing witnesses");
}

void converse(const ConverseReport& r, const std::string& what) {
  need_clean(r.issues, what);
  need(r.w.has_value(), what + ": missing witness");
  if (r.hypothesis) need(r.embedding == std::optional<bool>(true), what + ": embedding not verified");
  else need(!r.notices.empty(), what + ": failing hypothesis without notice");
}

std::string duality() {
  BSpace g = fixtures::x2();
  std::size_t n = 0;
  for (const Spectrum& s : {fixtures::constant_x2(), fixtures::cspec()}) {
    iso_duality(duality_direct_to_inverse(s, g, generate_pools(s, g, Shape::A_i, 100000)), "duality"), ++n;
    converse(converse_dual2(s, g, generate_pools(s, g, Shape::A_ii, 100000)), "second converse"), ++n;
  }
  for (const Spectrum& s : {fixtures::constant_x2(Direction::contravariant), fixtures::rswap()}) {
    iso_duality(duality_inverse_hom(s, g, generate_pools(s, g, Shape::B_ii, 100000)), "second duality"), ++n;
    converse(converse_dual(s, g, generate_pools(s, g, Shape::B_i, 100000)), "converse"), ++n;
  }
  ConverseReport rc = converse_dual(fixtures::rcollapse(), g, generate_pools(fixtures::rcollapse(), g, Shape::B_i, 100000));
  converse(rc, "converse on a collapsing spectrum"), ++n;
  need(!rc.hypothesis, "hypothesis should fail on the collapsing spectrum");

  // Declared pools through the DSL.
  std::ifstream in(std::string(BSPEC_FIXTURE_DIR) + "/duality.bspec");
  std::stringstream ss;
  ss << in.rdbuf();
  dsl::Workspace ws = dsl::build(dsl::parse(ss.str()));
  const dsl::PoolDecl& p = ws.pools.at("DECLARED");
  iso_duality(duality_direct_to_inverse(ws.spectra.at(p.spectrum), ws.spaces.at(p.space), p.members), "declared pool"), ++n;
  return std::to_string(n) + " duality instances";
}

// 9 ---------------------------------------------------------------------

Values random_rationals(gen::Rng& rng, std::size_t n) {
  Values v;
  for (std::size_t i = 0; i < n; ++i)
    v.emplace_back(static_cast<long>(gen::pick(rng, 41)) - 20, 1 + static_cast<long>(gen::pick(rng, 9)));
  return v;
}

std::string topology_kernel() {
  gen::Rng rng(9009);
  std::size_t lifted = 0;
  while (lifted < 500) {
    gen::RandomMorphism m = gen::random_morphism(rng, 4, 3);
    need_clean(check_morphism(m.src, m.dst, m.w), "random morphism");
    if (m.dst.gens.empty()) continue;
    Cert c = gen::random_certificate(rng, m.dst.gens.size(), 5);
    need(cert_depth(c) <= 5 && !cert_has_ulim(c), "certificate shape");
    CertCheck orig = evaluate_certificate(m.dst, c);
    need(orig.ok(), "random certificate does not validate");
    need(*orig.conclusion == oracle::cert_values(m.dst.gens, m.dst.carrier.size(), c), "evaluation oracle");
    Cert up = lift_certificate(m.w, c);
    need(!cert_has_ulim(up), "lifted certificate uses a uniform limit");
    need(validate_certificate(m.src, pull_back(*orig.conclusion, m.w.h), up).ok(), "lifted certificate fails");
    ++lifted;
  }

  for (int e = 0; e < 20; ++e) {
    Bic f = gen::random_bic(rng, 3);
    unsigned n = 1 + gen::pick(rng, 3);
    Rational eps(1, 1 + static_cast<long>(gen::pick(rng, 5)));
    Rational delta = bic_modulus(f, n, eps);
    need(delta > 0, "non-positive modulus");
    for (int s = 0; s < 1000; ++s) {
      Rational x(static_cast<long>(gen::pick(rng, 2 * 128 * n + 1)) - 128 * static_cast<long>(n), 128);
      Rational y = x + delta * Rational(static_cast<long>(gen::pick(rng, 1999)) - 999, 1000);
      if (y > n) y = n;
      if (y < -Rational(n)) y = -Rational(n);
      need(abs_q(oracle::bic_at(f, x) - oracle::bic_at(f, y)) <= eps, "modulus fails for " + bic_to_sexpr(f));
    }
  }

  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + gen::pick(rng, 5);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    BSpace b = make_space(Setoid::discrete(names), {random_rationals(rng, n), random_rationals(rng, n), random_rationals(rng, n)});
    Cert f = cert::gen(0), g = cert::gen(1), h = cert::gen(2);
    auto val = [&](const Cert& c) {
      CertCheck r = evaluate_certificate(b, c);
      need(r.ok(), "identity certificate fails");
      return *r.conclusion;
    };
    need(val(cert::add(f, g)) == val(cert::add(g, f)), "f+g = g+f");
    need(val(cert::mul(f, g)) == val(cert::mul(g, f)), "fg = gf");
    need(val(cert::mul(f, cert::add(g, h))) == val(cert::add(cert::mul(f, g), cert::mul(f, h))), "f(g+h) = fg+fh");
    need(val(cert::mul(cert::mul(f, g), h)) == val(cert::mul(f, cert::mul(g, h))), "(fg)h = f(gh)");
    need(val(cert::add(cert::max(f, g), cert::min(f, g))) == val(cert::add(f, g)), "max+min = f+g");
    need(val(cert::max(f, cert::min(f, g))) == val(f), "absorption");
    need(val(cert::max(cert::max(f, g), h)) == val(cert::max(f, cert::max(g, h))), "max associativity");
    need(val(cert::sub(f, f)) == Values(n, Rational(0)), "f-f = 0");
    for (std::size_t x = 0; x < n; ++x) {
      need(val(cert::mul(f, g))[x] == b.gens[0][x] * b.gens[1][x], "pointwise product");
      need(val(cert::max(f, g))[x] == max_q(b.gens[0][x], b.gens[1][x]), "pointwise max");
    }
  }
  return "500 lifted certificates, 20 moduli x 1000 pairs, 200 identity tables";
}

// 10 --------------------------------------------------------------------

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(BSPEC_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  need(p != nullptr, "cannot start the CLI");
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string cli() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(BSPEC_FIXTURE_DIR))
    if (e.path().extension() == ".bspec") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  need(!files.empty(), "empty fixture corpus");
  auto tmp = std::filesystem::temp_directory_path() / "bspec_acceptance";
  std::filesystem::create_directories(tmp);
  for (const auto& f : files) {
    std::string name = f.filename().string();
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    Run printed = run("print " + f.string());
    need(printed.status == 0, "print failed on " + name);
    need(dsl::same_document(dsl::parse(ss.str()), dsl::parse(printed.out)), "round-trip differs on " + name);
    std::filesystem::path again = tmp / name;
    std::ofstream(again) << printed.out;
    Run twice = run("print " + again.string());
    need(twice.status == 0 && twice.out == printed.out, "print is not idempotent on " + name);

    Run check = run("check " + f.string());
    need(check.status == 0, "check exit " + std::to_string(check.status) + " on " + name);

    Run a = run("report " + f.string() + " --json - --seed 7");
    Run b = run("report " + f.string() + " --json - --seed 7");
    need(a.status == 0 && b.status == 0, "report failed on " + name);
    need(a.out == b.out, "JSON not byte-stable on " + name);
    need(a.out.rfind("{\"schema\":1,", 0) == 0, "JSON header on " + name);
  }
  std::filesystem::path bad = tmp / "bad.bspec";
  std::ofstream(bad) << "setoid X {\n  elements: p, q\n}\n\nsubbase G {\n  carrier: X\n  gen g: p=>0, q=>1\n}\n\n"
                        "certificate WRONG {\n  space: G\n  target: p=>1, q=>1\n  proof: (gen g)\n}\n";
  need(run("check " + bad.string()).status == 1, "a failing law must exit 1");
  std::filesystem::path dangling = tmp / "dangling.bspec";
  std::ofstream(dangling) << "spectrum S {\n  family: Missing\n}\n";
  need(run("check " + dangling.string()).status == 2, "an unresolved reference must exit 2");
  need(run("report " + files[0].string()).status == 2, "a usage error must exit 2");
  std::filesystem::path empty = tmp / "empty.bspec";
  std::ofstream(empty) << "";
  Run e = run("report " + empty.string() + " --json -");
  need(e.status == 0 && e.out == "{\"schema\":1,\"checks\":[],\"summary\":{\"pass\":0,\"fail\":0,\"skipped\":0}}\n",
       "empty report: " + e.out);
  std::filesystem::remove_all(tmp);
  return std::to_string(files.size()) + " fixtures: round-trip, check, stable JSON, exit codes";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::string (*fn)();
  };
  const Criterion all[] = {
      {"direct-sum equality is an equivalence", equivalence},
      {"thread extensionality", thread_extensionality},
      {"universal properties of both limits", universal},
      {"functoriality of both limits", functoriality},
      {"cofinality isomorphisms", cofinality},
      {"constant spectrum limit", constant_limit},
      {"products", products},
      {"duality and converse duals", duality},
      {"topology kernel", topology_kernel},
      {"command line", cli},
  };
  int failed = 0, k = 0;
  for (const auto& c : all) {
    ++k;
    auto t0 = std::chrono::steady_clock::now();
    std::string status = "PASS", detail;
    try {
      detail = c.fn();
    } catch (const Failure& f) {
      status = "FAIL", detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL", detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    failed += status == "FAIL";
    std::printf("%s  %2d %s: %s (%.0f ms)\n", status.c_str(), k, c.name, detail.c_str(), ms);
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", k - failed, k);
  return failed == 0 ? 0 : 1;
}

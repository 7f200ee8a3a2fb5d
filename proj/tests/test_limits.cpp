#include <doctest.h>

#include "bspec/fixtures.hpp"
#include "bspec/random.hpp"
#include "bspec/synth.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

Values vals(std::initializer_list<int> xs) {
  Values out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::size_t brute_classes(const DirectFamily& f) {
  SigmaIndex s = sigma_index(f.carriers);
  return oracle::count_classes(s.size(), [&](std::size_t a, std::size_t b) {
    return oracle::exists_k(f, s.elems[a].first, s.elems[a].second, s.elems[b].first, s.elems[b].second);
  });
}

SpectrumMap crush(const Spectrum& s) {
  BSpace z = make_space(Setoid::discrete({"z"}), {vals({0})}, {"c"});
  Spectrum k = constant_spectrum(s.index(), z);
  SpectrumMap m{s, k, {}, std::nullopt};
  for (std::size_t i = 0; i < s.size(); ++i)
    m.comps.push_back(SetoidFn{s.fam.carriers[i], k.fam.carriers[i], std::vector<std::size_t>(s.fam.carriers[i].size(), 0)});
  m.cont = auto_continuity(m.src, m.dst, m.comps);
  return m;
}

bool same_map_on_classes(const SetoidFn& f, const SetoidFn& g) {
  for (std::size_t a = 0; a < f.dom.size(); ++a)
    if (!f.cod.eq(f(a), g(a))) return false;
  return true;
}

}  // namespace

TEST_CASE("direct limit: class counts") {
  DirectLimit c = direct_limit(fixtures::cspec());
  CHECK(c.carrier().size() == 5);
  CHECK(c.carrier().class_count() == brute_classes(c.spec.fam));
  CHECK(c.carrier().class_count() == 1);
  CHECK(validate_direct_limit(c).empty());

  DirectLimit k = direct_limit(fixtures::constant_x2());
  CHECK(k.carrier().class_count() == 2);
  CHECK(validate_direct_limit(k).empty());
}

TEST_CASE("direct limit: the legs are morphisms and certify threads") {
  DirectLimit l = direct_limit(fixtures::cspec());
  for (std::size_t i = 0; i < 3; ++i) CHECK(check_morphism(l.spec.spaces[i], l.space(), eql_witness(l, i)).empty());
  Thread t = constant_thread(l.spec, 3);
  Cert c = certify_thread(l, t);
  CHECK(validate_certificate(l.space(), Values(5, Rational(3)), c).ok());
}

TEST_CASE("direct limit: mediators") {
  DirectLimit l = direct_limit(fixtures::cspec());
  Mediator own = cocone_mediator(l, own_cocone(l));
  CHECK(own.issues.empty());
  CHECK(same_map_on_classes(own.h.h, identity(l.carrier())));
  CHECK(own.uniqueness == Uniqueness::unique);

  BSpace pt = fixtures::point();
  Cocone c{pt, {}};
  for (std::size_t i = 0; i < 3; ++i)
    c.legs.push_back({SetoidFn{l.spec.fam.carriers[i], pt.carrier, std::vector<std::size_t>(l.spec.fam.carriers[i].size(), 0)}, {}});
  CHECK(validate_cocone(l.spec, c).empty());
  Mediator m = cocone_mediator(l, c);
  CHECK(m.issues.empty());
  CHECK(m.uniqueness == Uniqueness::unique);

  DirectLimit k = direct_limit(fixtures::constant_x2());
  BSpace g = fixtures::x2();
  Cocone ck{g, {identity_witness(g), identity_witness(g), identity_witness(g)}};
  Mediator mk = cocone_mediator(k, ck);
  CHECK(mk.issues.empty());
  for (std::size_t a = 0; a < k.carrier().size(); ++a) CHECK(mk.h.h(a) == k.element(a).second);
}

TEST_CASE("direct limit: ill-formed cocones are rejected") {
  DirectLimit l = direct_limit(fixtures::constant_x2());
  BSpace g = fixtures::x2();
  MorphismWitness sw{fixtures::swap_x2(), {cert::bic(bic::affine(-1, 1), cert::gen(0))}};
  Cocone c{g, {identity_witness(g), sw, identity_witness(g)}};
  CHECK_FALSE(validate_cocone(l.spec, c).empty());
  CHECK_THROWS_AS(cocone_mediator(l, c), Error);
}

TEST_CASE("direct limit: induced maps") {
  Spectrum s = fixtures::cspec();
  DirectLimit l = direct_limit(s);
  LimitMap id = limit_map(identity_map(s), l, l);
  CHECK(id.issues.empty());
  CHECK(same_map_on_classes(id.map, identity(l.carrier())));

  SpectrumMap m = crush(s);
  DirectLimit dl = direct_limit(m.dst);
  LimitMap lm = limit_map(m, l, dl);
  CHECK(lm.issues.empty());
  REQUIRE(lm.witness);
  for (std::size_t a = 0; a < lm.map.dom.size(); ++a) CHECK(dl.carrier().eq(lm.map(a), lm.map(0)));
}

TEST_CASE("direct limit: common representatives") {
  DirectLimit l = direct_limit(fixtures::cspec());
  Representatives one = common_representatives(l, {l.flat(0, 0)});
  CHECK(one.index == 0);
  CHECK(one.elems == std::vector<std::size_t>{0});
  Representatives r = common_representatives(l, {l.flat(0, 0), l.flat(0, 1)}, true);
  CHECK(r.index == 2);
  CHECK(r.elems == std::vector<std::size_t>{0, 0});
  Representatives u = common_representatives(l, {l.flat(0, 0), l.flat(1, 0)});
  CHECK(l.spec.index().leq(1, u.index));
}

TEST_CASE("direct limit: cofinal isomorphisms") {
  Spectrum k = constant_spectrum(fixtures::eo_index(1), fixtures::x2());
  IsoReport r = cofinal_direct_iso(k, fixtures::eo_cofinal(1));
  CHECK(r.issues.empty());
  CHECK(is_inverse_pair(r.phi, r.theta));
  CHECK(r.phi.dom.class_count() == r.theta.dom.class_count());
  CHECK(r.phi.dom.class_count() == 2);

  IsoReport c = cofinal_direct_iso(fixtures::cspec(), fixtures::eo_cofinal(1));
  CHECK(c.issues.empty());
  CHECK(c.phi.dom.class_count() == 1);
  CHECK(c.theta.dom.class_count() == 1);

  Spectrum s = fixtures::cspec();
  CofinalSubset self{s.index().base, identity(s.index().base), identity(s.index().base)};
  IsoReport t = cofinal_direct_iso(s, self);
  CHECK(t.issues.empty());
  CHECK(same_map_on_classes(t.phi, identity(t.phi.dom)));
}

TEST_CASE("direct limit: products") {
  Spectrum s = fixtures::cspec();
  ProductLimitReport ss = product_limit_bijection(s, s);
  CHECK(ss.issues.empty());
  CHECK(ss.classes_product == 1);

  Spectrum k = fixtures::constant_x2();
  ProductLimitReport kk = product_limit_bijection(k, k);
  CHECK(kk.issues.empty());
  CHECK(kk.classes_product == 4);
  CHECK(kk.classes_s * kk.classes_t == 4);
}

TEST_CASE("direct limit: class counts agree with the oracle on random spectra") {
  gen::Rng rng(51);
  auto all = gen::directed_preorders(4);
  for (int it = 0; it < 60; ++it) {
    Spectrum s = gen::random_spectrum(rng, all[gen::pick(rng, all.size())], Direction::covariant, 3);
    DirectLimit l = direct_limit(s);
    CHECK(l.carrier().class_count() == brute_classes(s.fam));
    CHECK(validate_direct_limit(l).empty());
  }
}

TEST_CASE("inverse limit: constant and collapsing spectra") {
  InverseLimit k = inverse_limit(fixtures::constant_x2(Direction::contravariant));
  CHECK(k.carrier().class_count() == 2);
  for (const auto& a : k.elems) CHECK((a[0] == a[1] && a[1] == a[2]));

  InverseLimit rc = inverse_limit(fixtures::rcollapse());
  CHECK(rc.elems.size() == 1);
  InverseLimit rs = inverse_limit(fixtures::rswap());
  CHECK(rs.elems.size() == 2);
  for (const InverseLimit* l : {&rc, &rs}) {
    SetoidFn top = pi(*l, 2);
    CHECK(is_embedding(top));
    for (std::size_t i = 0; i < 3; ++i) CHECK(check_morphism(l->space, l->spec.spaces[i], pi_witness(*l, i)).empty());
  }
}

TEST_CASE("inverse limit: an empty carrier gives an empty limit") {
  Setoid pq = Setoid::discrete({"p", "q"});
  Setoid none = Setoid::discrete({});
  DirectFamily f = make_direct_family(fixtures::chain3(), Direction::contravariant, {pq, pq, none},
                                      {{1, 2, SetoidFn{none, pq, {}}}, {0, 1, identity(pq)}});
  Spectrum s = make_spectrum(f, {fixtures::x2(), fixtures::x2(), make_space(none, {})}, {});
  CHECK(inverse_limit(s).elems.empty());
}

TEST_CASE("inverse limit: mediators") {
  Spectrum s = fixtures::constant_x2(Direction::contravariant);
  InverseLimit l = inverse_limit(s);
  Mediator own = cone_mediator(l, own_cone(l));
  CHECK(own.issues.empty());
  CHECK(same_map_on_classes(own.h.h, identity(l.carrier())));
  CHECK(own.uniqueness == Uniqueness::unique);

  BSpace g = fixtures::x2();
  Cone c{g, {identity_witness(g), identity_witness(g), identity_witness(g)}};
  CHECK(validate_cone(s, c).empty());
  Mediator m = cone_mediator(l, c);
  CHECK(m.issues.empty());
  for (std::size_t y = 0; y < 2; ++y) {
    const Assignment& a = l.elems[m.h.h(y)];
    CHECK(a == Assignment{y, y, y});
  }

  BSpace pt = fixtures::point();
  Cone p{pt, {}};
  for (std::size_t i = 0; i < 3; ++i) p.legs.push_back(auto_witness(pt, g, SetoidFn{pt.carrier, g.carrier, {1}}).value());
  Mediator mp = cone_mediator(l, p);
  CHECK(mp.issues.empty());
  CHECK(l.elems[mp.h.h(0)] == Assignment{1, 1, 1});
}

TEST_CASE("inverse limit: induced maps, cofinality and products") {
  Spectrum s = fixtures::rswap();
  InverseLimit l = inverse_limit(s);
  LimitMap id = inverse_limit_map(identity_map(s), l, l);
  CHECK(id.issues.empty());
  CHECK(same_map_on_classes(id.map, identity(l.carrier())));

  CofinalSubset self{s.index().base, identity(s.index().base), identity(s.index().base)};
  IsoReport r = cofinal_inverse_iso(s, self);
  CHECK(r.issues.empty());
  CHECK(same_map_on_classes(r.phi, identity(r.phi.dom)));

  Spectrum k = fixtures::constant_x2(Direction::contravariant);
  ProductInverseReport p = product_inverse_morphism(k, k);
  CHECK(p.issues.empty());
  CHECK(p.map.dom.class_count() == 4);
  CHECK(is_embedding(p.map));
}

TEST_CASE("limits: functoriality on random composable maps") {
  gen::Rng rng(61);
  auto all = gen::directed_preorders(3);
  for (int it = 0; it < 30; ++it) {
    Direction dir = gen::coin(rng) ? Direction::covariant : Direction::contravariant;
    Spectrum s = gen::random_spectrum(rng, all[gen::pick(rng, all.size())], dir, 3);
    SpectrumMap a = gen::random_spectrum_map(rng, s);
    SpectrumMap b = gen::random_spectrum_map(rng, a.dst);
    SpectrumMap ab = compose_maps(a, b);
    if (dir == Direction::covariant) {
      DirectLimit l0 = direct_limit(s), l1 = direct_limit(a.dst), l2 = direct_limit(b.dst);
      LimitMap fa = limit_map(a, l0, l1), fb = limit_map(b, l1, l2), fab = limit_map(ab, l0, l2);
      CHECK(same_map_on_classes(fab.map, compose(fa.map, fb.map)));
    } else {
      InverseLimit l0 = inverse_limit(s), l1 = inverse_limit(a.dst), l2 = inverse_limit(b.dst);
      LimitMap fa = inverse_limit_map(a, l0, l1), fb = inverse_limit_map(b, l1, l2), fab = inverse_limit_map(ab, l0, l2);
      CHECK(same_map_on_classes(fab.map, compose(fa.map, fb.map)));
    }
  }
}

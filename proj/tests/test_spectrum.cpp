#include <doctest.h>

#include "bspec/fixtures.hpp"
#include "bspec/random.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

Values vals(std::initializer_list<int> xs) {
  Values out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

BSpace z_space() { return make_space(Setoid::discrete({"z"}), {vals({0})}, {"c"}); }

SpectrumMap crush(const Spectrum& s) {
  Spectrum k = constant_spectrum(s.index(), z_space());
  SpectrumMap m{s, k, {}, std::nullopt};
  for (std::size_t i = 0; i < s.size(); ++i)
    m.comps.push_back(SetoidFn{s.fam.carriers[i], k.fam.carriers[i], std::vector<std::size_t>(s.fam.carriers[i].size(), 0)});
  m.cont = auto_continuity(m.src, m.dst, m.comps);
  return m;
}

}  // namespace

TEST_CASE("spectrum: constant spectrum and CSPEC validate") {
  CHECK(validate_spectrum(fixtures::constant_x2()).empty());
  CHECK(validate_spectrum(fixtures::constant_x2(Direction::contravariant)).empty());
  CHECK(validate_spectrum(fixtures::cspec()).empty());
}

TEST_CASE("spectrum: a wrong constant witness is a value mismatch") {
  Spectrum s = fixtures::cspec();
  s.spaces[2] = make_space(s.fam.carriers[2], {vals({1})}, {"f2"});
  Issues is = validate_spectrum(s);
  REQUIRE_FALSE(is.empty());
  CHECK(is[0].law == "ValueMismatch");
}

TEST_CASE("spectrum: threads on CSPEC") {
  Spectrum s = fixtures::cspec();
  Thread five = constant_thread(s, 5);
  CHECK(validate_thread(s, five).empty());
  Values f5 = thread_to_sum_function(s, five);
  CHECK(f5 == Values(5, Rational(5)));

  Thread zero = constant_thread(s, 0);
  Values f0 = thread_to_sum_function(s, zero);
  Quotient q = direct_sum(s.fam);
  for (std::size_t a = 0; a < f0.size(); ++a) CHECK(f0[a] == f0[q.quotient.rep(a)]);

  Thread bad = zero;
  bad.vals[0] = vals({0, 1});
  bad.certs[0] = cert::gen(0);
  Issues is = validate_thread(s, bad);
  REQUIRE_FALSE(is.empty());
  CHECK(is[0].law == "IncompatibleThread");
  CHECK_THROWS_AS(thread_to_sum_function(s, bad), Error);
  try {
    thread_to_sum_function(s, bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompatibleThread);
  }
}

TEST_CASE("spectrum: sum space of CSPEC") {
  Spectrum s = fixtures::cspec();
  SumSpace sum = sum_space(s);
  CHECK(sum.threads.size() == 2);
  CHECK(sum.space.carrier.class_count() == 1);
  CHECK(validate_space(sum.space).empty());
  for (const auto& t : sum.threads) CHECK(validate_thread(s, t).empty());

  ThreadOptions none;
  none.enumerate = false;
  SumSpace empty = sum_space(s, {}, none);
  CHECK(empty.space.gens.empty());
}

TEST_CASE("spectrum: constant spectrum sum space reproduces the generators") {
  Spectrum s = fixtures::constant_x2();
  SumSpace sum = sum_space(s);
  BSpace g = fixtures::x2();
  REQUIRE(sum.top_gen.size() == 1);
  const Values& f = sum.space.gens[sum.top_gen[0]];
  for (std::size_t a = 0; a < sum.idx.size(); ++a) CHECK(f[a] == g.gens[0][sum.idx.elems[a].second]);
}

TEST_CASE("spectrum: thread extensionality on random spectra") {
  gen::Rng rng(31);
  auto all = gen::directed_preorders(4);
  for (int it = 0; it < 60; ++it) {
    Spectrum s = gen::random_spectrum(rng, all[gen::pick(rng, all.size())], Direction::covariant, 3);
    REQUIRE(validate_spectrum(s).empty());
    SumSpace sum = sum_space(s);
    for (const auto& f : sum.space.gens)
      for (std::size_t a = 0; a < f.size(); ++a) REQUIRE(f[a] == f[sum.sum.quotient.rep(a)]);
  }
}

TEST_CASE("spectrum: maps and pulled back threads") {
  Spectrum s = fixtures::cspec();
  SpectrumMap id = identity_map(s);
  CHECK(validate_spectrum_map(id).empty());
  Thread t = constant_thread(s, 0);
  Thread back = pullback_thread(id, t);
  CHECK(back.vals == t.vals);

  SpectrumMap m = crush(s);
  REQUIRE(m.cont);
  CHECK(validate_spectrum_map(m).empty());
  Thread h = constant_thread(m.dst, 0);
  Thread star = pullback_thread(m, h);
  CHECK(validate_thread(s, star).empty());
  for (const auto& v : star.vals)
    for (const auto& x : v) CHECK(x == 0);
  Thread seven = pullback_thread(m, constant_thread(m.dst, 7));
  for (const auto& v : seven.vals)
    for (const auto& x : v) CHECK(x == 7);
}

TEST_CASE("spectrum: sum morphisms and induced squares") {
  Spectrum k = fixtures::constant_x2();
  SumSpace ks = sum_space(k);
  CHECK(check_sum_morphisms(identity_map(k), ks, ks).empty());

  Spectrum s = fixtures::cspec();
  SpectrumMap m = crush(s);
  SumSpace src = sum_space(s), dst = sum_space(m.dst);
  CHECK(check_sum_morphisms(m, src, dst).empty());
  for (auto [i, j] : order_pairs(s.index())) {
    CHECK(check_induced_square(m, i, j));
    CHECK(check_induced_square(identity_map(s), i, j));
  }

  SpectrumMap nocont = m;
  nocont.cont.reset();
  Issues is = check_sum_morphisms(nocont, src, dst);
  REQUIRE_FALSE(is.empty());
  CHECK(is.back().law == "NotContinuous");
}

TEST_CASE("spectrum: non-natural maps are rejected") {
  Spectrum s = fixtures::cspec();
  SpectrumMap m = identity_map(s);
  m.comps[0] = SetoidFn{s.fam.carriers[0], s.fam.carriers[0], {1, 0}};
  m.cont.reset();
  Issues is = validate_spectrum_map(m);
  REQUIRE_FALSE(is.empty());
  CHECK(is[0].law == "naturality");
}

TEST_CASE("spectrum: random spectrum maps validate and compose") {
  gen::Rng rng(41);
  auto all = gen::directed_preorders(3);
  for (int it = 0; it < 40; ++it) {
    Direction dir = gen::coin(rng) ? Direction::covariant : Direction::contravariant;
    Spectrum s = gen::random_spectrum(rng, all[gen::pick(rng, all.size())], dir, 3);
    SpectrumMap a = gen::random_spectrum_map(rng, s);
    SpectrumMap b = gen::random_spectrum_map(rng, a.dst);
    REQUIRE(validate_spectrum_map(a).empty());
    REQUIRE(validate_spectrum_map(b).empty());
    SpectrumMap ab = compose_maps(a, b);
    CHECK(validate_spectrum_map(ab).empty());
    for (auto [i, j] : order_pairs(s.index())) CHECK(check_induced_square(ab, i, j));
  }
}

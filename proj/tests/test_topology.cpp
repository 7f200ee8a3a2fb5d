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

Bic one_minus() { return bic::add(bic::constant(1), bic::neg(bic::id())); }

}  // namespace

TEST_CASE("bic: evaluation") {
  CHECK(eval_bic(bic::id(), Rational(3, 2)) == Rational(3, 2));
  CHECK(eval_bic(bic::comp(bic::abs(bic::id()), bic::constant(-2)), 7) == 2);
  CHECK(eval_bic(bic::max(bic::id(), bic::constant(0)), -1) == 0);
  gen::Rng rng(2);
  for (int it = 0; it < 300; ++it) {
    Bic f = gen::random_bic(rng, 4);
    Rational t(static_cast<long>(gen::pick(rng, 41)) - 20, 1 + static_cast<long>(gen::pick(rng, 7)));
    REQUIRE(eval_bic(f, t) == oracle::bic_at(f, t));
  }
}

TEST_CASE("bic: moduli") {
  CHECK(bic_modulus(bic::abs(bic::id()), 5, Rational(1, 3)) == Rational(1, 3));
  CHECK(bic_modulus(bic::add(bic::id(), bic::id()), 3, Rational(1, 2)) == Rational(1, 4));
  Rational d = bic_modulus(bic::mul(bic::id(), bic::id()), 2, 1);
  CHECK(d > 0);
  CHECK(d <= Rational(1, 4));
}

TEST_CASE("bic: modulus soundness by dense sampling") {
  gen::Rng rng(8);
  for (int it = 0; it < 40; ++it) {
    Bic f = gen::random_bic(rng, 3);
    unsigned n = 1 + gen::pick(rng, 3);
    Rational eps(1, 1 + static_cast<long>(gen::pick(rng, 4)));
    Rational delta = bic_modulus(f, n, eps);
    REQUIRE(delta > 0);
    for (int s = 0; s < 200; ++s) {
      Rational x(static_cast<long>(gen::pick(rng, 2 * 64 * n + 1)) - 64 * static_cast<long>(n), 64);
      Rational y = x + delta * Rational(static_cast<long>(gen::pick(rng, 199)) - 99, 100);
      if (y > n || y < -Rational(n)) continue;
      REQUIRE(abs_q(oracle::bic_at(f, x) - oracle::bic_at(f, y)) <= eps);
    }
  }
}

TEST_CASE("topology: certificates on X2") {
  BSpace b = fixtures::x2();
  CHECK(validate_space(b).empty());
  CHECK(validate_certificate(b, vals({5, 5}), cert::constant(5)).ok());
  Cert om = cert::bic(one_minus(), cert::gen(0));
  CHECK(validate_certificate(b, vals({1, 0}), om).ok());
  CHECK_FALSE(validate_certificate(b, vals({0, 0}), om).ok());

  Cert mx = cert::max(cert::gen(0), om);
  CertCheck r = evaluate_certificate(b, mx);
  REQUIRE(r.ok());
  CHECK(*r.conclusion == vals({1, 1}));
  CHECK_FALSE(cert_has_ulim(mx));
}

TEST_CASE("topology: ring and lattice constructions agree with pointwise operations") {
  gen::Rng rng(21);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + gen::pick(rng, 5);
    Setoid s = Setoid::discrete([&] {
      std::vector<std::string> v;
      for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
      return v;
    }());
    BSpace b = make_space(s, {gen::random_values(rng, n, -4, 4), gen::random_values(rng, n, -4, 4)});
    Cert f = cert::gen(0), g = cert::gen(1);
    auto val = [&](const Cert& c) { return *evaluate_certificate(b, c).conclusion; };
    Values fv = b.gens[0], gv = b.gens[1];
    Values sum = val(cert::add(f, g)), prod = val(cert::mul(f, g)), mx = val(cert::max(f, g)), mn = val(cert::min(f, g));
    Values df = val(cert::sub(f, g)), sc = val(cert::scale(Rational(3, 2), f));
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(sum[x] == fv[x] + gv[x]);
      CHECK(prod[x] == fv[x] * gv[x]);
      CHECK(mx[x] == max_q(fv[x], gv[x]));
      CHECK(mn[x] == min_q(fv[x], gv[x]));
      CHECK(df[x] == fv[x] - gv[x]);
      CHECK(sc[x] == Rational(3, 2) * fv[x]);
    }
  }
}

TEST_CASE("topology: evaluation matches the pointwise oracle") {
  gen::Rng rng(4);
  BSpace b = make_space(Setoid::discrete({"a", "b", "c"}), {vals({0, 1, 2}), vals({1, -1, 0})});
  for (int it = 0; it < 300; ++it) {
    Cert c = gen::random_certificate(rng, 2, 4);
    CertCheck r = evaluate_certificate(b, c);
    REQUIRE(r.ok());
    CHECK(*r.conclusion == oracle::cert_values(b.gens, 3, c));
  }
}

TEST_CASE("topology: uniform limits only in witnessed mode") {
  BSpace b = fixtures::x2();
  Values target = vals({0, 1});
  Cert u = cert::ulim(target, {{1, cert::gen(0)}, {2, cert::gen(0)}});
  CHECK_FALSE(validate_certificate(b, target, u).ok());
  CertOptions w;
  w.witnessed = true;
  w.ulim_depth = 2;
  CHECK(validate_certificate(b, target, u, w).ok());
  w.ulim_depth = 3;
  CHECK_FALSE(validate_certificate(b, target, u, w).ok());
}

TEST_CASE("topology: morphisms on X2") {
  BSpace b = fixtures::x2();
  CHECK(check_morphism(b, b, identity_witness(b)).empty());
  MorphismWitness sw{fixtures::swap_x2(), {cert::bic(one_minus(), cert::gen(0))}};
  CHECK(check_morphism(b, b, sw).empty());
  MorphismWitness missing{fixtures::swap_x2(), {}};
  Issues is = check_morphism(b, b, missing);
  REQUIRE_FALSE(is.empty());
  CHECK(is[0].law == "MissingCertificate");
}

TEST_CASE("topology: lifting certificates along the swap") {
  BSpace b = fixtures::x2();
  MorphismWitness sw{fixtures::swap_x2(), {cert::bic(one_minus(), cert::gen(0))}};
  CHECK(cert_to_sexpr(lift_certificate(sw, cert::constant(3))) == "(const 3)");
  CHECK(cert_to_sexpr(lift_certificate(sw, cert::gen(0))) == cert_to_sexpr(sw.certs[0]));
  Cert lifted = lift_certificate(sw, cert::add(cert::gen(0), cert::constant(1)));
  CHECK(lifted->kind == CertKind::Add);
  CHECK(lifted->a->kind == CertKind::Bic);
  CHECK(*evaluate_certificate(b, lifted).conclusion == vals({2, 1}));
}

TEST_CASE("topology: lifting preserves validity on random morphisms") {
  gen::Rng rng(9);
  for (int it = 0; it < 100; ++it) {
    gen::RandomMorphism m = gen::random_morphism(rng, 4, 3);
    REQUIRE(check_morphism(m.src, m.dst, m.w).empty());
    if (m.dst.gens.empty()) continue;
    Cert c = gen::random_certificate(rng, m.dst.gens.size(), 4);
    Values f = *evaluate_certificate(m.dst, c).conclusion;
    CHECK(validate_certificate(m.src, pull_back(f, m.w.h), lift_certificate(m.w, c)).ok());
  }
}

TEST_CASE("topology: composing witnesses") {
  BSpace b = fixtures::x2();
  MorphismWitness sw{fixtures::swap_x2(), {cert::bic(one_minus(), cert::gen(0))}};
  MorphismWitness twice = compose_witness(sw, sw);
  CHECK(fn_equal(twice.h, identity(b.carrier)));
  CHECK(check_morphism(b, b, twice).empty());
}

TEST_CASE("topology: products, relative spaces and exponentials") {
  BSpace b = fixtures::x2();
  BSpace pt = fixtures::point();
  ProductSpace p = product_space(b, pt);
  CHECK(p.space.gens.size() == 1);
  CHECK(p.space.gens[0] == pull_back(b.gens[0], p.pr1.h));
  CHECK(check_morphism(p.space, b, p.pr1).empty());
  CHECK(check_morphism(p.space, pt, p.pr2).empty());

  Setoid one = Setoid::discrete({"p"});
  BSpace rel = relative_space(b, make_subset(one, SetoidFn{one, b.carrier, {0}}));
  REQUIRE(rel.gens.size() == 1);
  CHECK(rel.gens[0] == vals({0}));

  std::vector<MorphismWitness> pool;
  for (const auto& w : enumerate_morphisms(b, b, 100)) pool.push_back(w);
  CHECK(pool.size() == 4);
  ExpSpace e = exponential_space(b, b, pool);
  auto sw = e.find(fixtures::swap_x2());
  REQUIRE(sw);
  CHECK(e.space.gens[e.gen_index(0, 0)][*sw] == 1);
  for (std::size_t x = 0; x < 2; ++x) CHECK(check_morphism(e.space, b, e.eval(x)).empty());
}

TEST_CASE("topology: synthesized certificates validate") {
  gen::Rng rng(13);
  for (int it = 0; it < 100; ++it) {
    BSpace b = gen::random_space(rng, 4, 2);
    Cert c = gen::random_certificate(rng, std::max<std::size_t>(b.gens.size(), 1), 3);
    if (b.gens.empty()) continue;
    Values target = *evaluate_certificate(b, c).conclusion;
    auto s = synthesize_certificate(b, target);
    if (s) CHECK(validate_certificate(b, target, *s).ok());
  }
  BSpace b = fixtures::x2();
  auto half = synthesize_certificate(b, Values{Rational(1, 2), Rational(1)});
  REQUIRE(half);
  CHECK(validate_certificate(b, Values{Rational(1, 2), Rational(1)}, *half).ok());
}

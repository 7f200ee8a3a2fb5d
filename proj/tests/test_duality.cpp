#include <doctest.h>

#include "bspec/duality.hpp"
#include "bspec/fixtures.hpp"
#include "bspec/synth.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

std::vector<MorphismWitness> x2_maps() { return enumerate_morphisms(fixtures::x2(), fixtures::x2(), 100); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ConfigError;
}

}  // namespace

TEST_CASE("duality: plus and minus on X2") {
  auto maps = x2_maps();
  REQUIRE(maps.size() == 4);
  BSpace b = fixtures::x2();
  MorphismWitness id = identity_witness(b);
  for (const auto& phi : maps) {
    CHECK(fn_equal(plus_apply(id, phi).h, phi.h));
    CHECK(fn_equal(minus_apply(id, phi).h, phi.h));
  }
  for (const auto& l : maps)
    for (const auto& k : maps)
      for (const auto& phi : maps) {
        // (l o k)+ = k+ o l+
        MorphismWitness lk = compose_witness(k, l);
        CHECK(fn_equal(plus_apply(lk, phi).h, plus_apply(k, plus_apply(l, phi)).h));
        CHECK(fn_equal(minus_apply(lk, phi).h, minus_apply(l, minus_apply(k, phi)).h));
        CHECK(check_morphism(b, b, plus_apply(lk, phi)).empty());
      }
  MorphismWitness sw = auto_witness(b, b, fixtures::swap_x2()).value();
  CHECK(fn_equal(plus_apply(sw, sw).h, identity(b.carrier)));
}

TEST_CASE("duality: pool maps and operators") {
  BSpace b = fixtures::x2();
  ExpSpace all = exponential_space(b, b, x2_maps());
  CHECK(validate_pool(all).empty());
  MorphismWitness sw = auto_witness(b, b, fixtures::swap_x2()).value();
  MorphismWitness p = plus_map(sw, all, all);
  CHECK(check_morphism(all.space, all.space, p).empty());
  MorphismWitness m = minus_map(sw, all, all);
  CHECK(check_morphism(all.space, all.space, m).empty());
  CHECK(check_plus_operator(all, all, all).empty());
  CHECK(check_minus_operator(all, all, all).empty());

  ExpSpace only_id = exponential_space(b, b, {identity_witness(b)});
  CHECK(kind_of([&] { plus_map(identity_witness(b), all, only_id); }) == ErrorKind::PoolNotClosed);
}

TEST_CASE("duality: shapes") {
  for (Shape s : {Shape::A_i, Shape::A_ii, Shape::B_i, Shape::B_ii}) CHECK(parse_shape(to_string(s)) == s);
  CHECK_FALSE(parse_shape("C"));
}

TEST_CASE("duality: induced spectra") {
  Spectrum k = fixtures::constant_x2();
  BSpace g = fixtures::x2();
  InducedSpectrum a = induce_spectrum(k, g, Shape::A_i, generate_pools(k, g, Shape::A_i, 1000));
  CHECK(a.spec.fam.dir == Direction::contravariant);
  CHECK(validate_spectrum(a.spec).empty());
  for (auto [i, j] : order_pairs(a.spec.index())) CHECK(fn_equal(a.spec.fam.transport(i, j), identity(a.spec.fam.carriers[i])));

  Spectrum c = fixtures::cspec();
  BSpace pt = fixtures::point();
  for (Shape sh : {Shape::A_i, Shape::A_ii}) {
    InducedSpectrum m = induce_spectrum(c, pt, sh, generate_pools(c, pt, sh, 1000));
    CHECK(validate_spectrum(m.spec).empty());
    // Mor(F_i, 1) is a single map; Mor(1, F_i) has one constant map per point.
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(m.pools[i].pool.size() == (sh == Shape::A_i ? 1 : c.fam.carriers[i].class_count()));
  }
  Spectrum r = fixtures::rcollapse();
  for (Shape sh : {Shape::B_i, Shape::B_ii}) {
    InducedSpectrum m = induce_spectrum(r, pt, sh, generate_pools(r, pt, sh, 1000));
    CHECK(validate_spectrum(m.spec).empty());
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(m.pools[i].pool.size() == (sh == Shape::B_i ? 1 : r.fam.carriers[i].class_count()));
  }

  for (Shape sh : {Shape::A_i, Shape::A_ii}) {
    InducedSpectrum m = induce_spectrum(c, g, sh, generate_pools(c, g, sh, 1000));
    CHECK(validate_spectrum(m.spec).empty());
    CHECK(validate_direct_family(m.spec.fam).empty());
  }
  CHECK(kind_of([&] { induce_spectrum(c, g, Shape::B_i, {}); }) == ErrorKind::FlavorMismatch);
}

TEST_CASE("duality: direct limit against the inverse limit of hom spaces") {
  Spectrum k = fixtures::constant_x2();
  BSpace g = fixtures::x2();
  DualityReport r = duality_direct_to_inverse(k, g, generate_pools(k, g, Shape::A_i, 1000));
  CHECK(r.issues.empty());
  CHECK(r.left_size == 4);
  CHECK(r.right_size == 4);
  CHECK(is_inverse_pair(r.forward, r.backward));
  CHECK(r.embedding);

  Spectrum c = fixtures::cspec();
  DualityReport p = duality_direct_to_inverse(c, fixtures::point(), generate_pools(c, fixtures::point(), Shape::A_i, 1000));
  CHECK(p.issues.empty());
  CHECK(p.left_size == 1);
  CHECK(p.right_size == 1);

  DualityReport q = duality_direct_to_inverse(c, g, generate_pools(c, g, Shape::A_i, 1000));
  CHECK(q.issues.empty());
  CHECK(q.left_size == q.right_size);
  CHECK(is_inverse_pair(q.forward, q.backward));
}

TEST_CASE("duality: inverse limit of hom spaces into an inverse limit") {
  Spectrum k = fixtures::constant_x2(Direction::contravariant);
  BSpace g = fixtures::x2();
  DualityReport r = duality_inverse_hom(k, g, generate_pools(k, g, Shape::B_ii, 1000));
  CHECK(r.issues.empty());
  CHECK(r.left_size == 4);
  CHECK(r.left_size == r.right_size);
  CHECK(is_inverse_pair(r.forward, r.backward));

  Spectrum rs = fixtures::rswap();
  BSpace pt = fixtures::point();
  DualityReport p = duality_inverse_hom(rs, pt, generate_pools(rs, pt, Shape::B_ii, 1000));
  CHECK(p.issues.empty());
  CHECK(p.left_size == inverse_limit(rs).carrier().class_count());
}

TEST_CASE("duality: converse maps") {
  BSpace g = fixtures::x2();
  Spectrum k = fixtures::constant_x2(Direction::contravariant);
  ConverseReport a = converse_dual(k, g, generate_pools(k, g, Shape::B_i, 1000));
  CHECK(a.issues.empty());
  CHECK(a.hypothesis);
  CHECK(a.embedding == std::optional<bool>(true));

  Spectrum rc = fixtures::rcollapse();
  ConverseReport b = converse_dual(rc, g, generate_pools(rc, g, Shape::B_i, 1000));
  CHECK(b.issues.empty());
  CHECK_FALSE(b.hypothesis);
  CHECK(b.notices == std::vector<std::string>{"HypothesisFails(0, b)", "HypothesisFails(1, v)"});

  ConverseReport pt = converse_dual(rc, fixtures::point(), generate_pools(rc, fixtures::point(), Shape::B_i, 1000));
  CHECK(pt.issues.empty());
  CHECK(pt.hat.dom.class_count() == 1);

  Spectrum kc = fixtures::constant_x2();
  ConverseReport c = converse_dual2(kc, g, generate_pools(kc, g, Shape::A_ii, 1000));
  CHECK(c.issues.empty());
  CHECK(c.hypothesis);
}

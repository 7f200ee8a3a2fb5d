#include <doctest.h>

#include "bspec/fixtures.hpp"
#include "bspec/random.hpp"
#include "oracles.hpp"

using namespace bspec;

TEST_CASE("setoid: discrete and generated equalities") {
  Setoid pq = Setoid::make({"p", "q"});
  CHECK(pq.size() == 2);
  CHECK(pq.is_discrete());
  CHECK_FALSE(pq.eq(0, 1));

  Setoid ab = Setoid::make({"a", "b"}, {{"a", "b"}});
  CHECK(ab.class_count() == 1);
  CHECK(ab.eq(0, 1));

  Setoid xyz = Setoid::make({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  auto fix = oracle::equivalence_fixpoint(3, {{0, 1}, {1, 2}});
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(xyz.eq(a, b) == bool(fix[a][b]));
  CHECK(xyz.class_count() == 1);
}

TEST_CASE("setoid: rejects duplicate and unknown names") {
  CHECK_THROWS_AS(Setoid::make({"p", "p"}), Error);
  CHECK_THROWS_AS(Setoid::make({"p"}, {{"p", "r"}}), Error);
}

TEST_CASE("setoid: closure agrees with the fixpoint oracle on random pair sets") {
  gen::Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + gen::pick(rng, 6);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    NamePairs ps;
    std::vector<std::pair<std::size_t, std::size_t>> raw;
    std::size_t m = gen::pick(rng, 5);
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t a = gen::pick(rng, n), b = gen::pick(rng, n);
      ps.emplace_back(names[a], names[b]);
      raw.emplace_back(a, b);
    }
    Setoid s = Setoid::make(names, ps);
    auto fix = oracle::equivalence_fixpoint(n, raw);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) REQUIRE(s.eq(a, b) == bool(fix[a][b]));
    CHECK(s.class_count() == oracle::count_classes(n, [&](std::size_t a, std::size_t b) { return fix[a][b] != 0; }));
  }
}

TEST_CASE("setoid fn: extensionality") {
  Setoid ab = Setoid::make({"a", "b"}, {{"a", "b"}});
  Setoid pq = Setoid::discrete({"p", "q"});
  CHECK(is_extensional(identity(ab)));
  SetoidFn bad = SetoidFn::from_names(ab, pq, {{"a", "p"}, {"b", "q"}});
  auto v = extensionality_violation(bad);
  REQUIRE(v);
  CHECK(v->first == 0);
  CHECK(v->second == 1);
  CHECK(is_extensional(SetoidFn::from_names(ab, pq, {{"a", "q"}, {"b", "q"}})));
}

TEST_CASE("setoid fn: composition") {
  DirectFamily c = fixtures::collapse();
  const SetoidFn& l01 = c.transport(0, 1);
  const SetoidFn& l12 = c.transport(1, 2);
  CHECK(fn_equal(compose(identity(l01.dom), l01), l01));
  CHECK(fn_equal(compose(l01, identity(l01.cod)), l01));
  SetoidFn au = compose(l01, l12);
  CHECK(au.map == oracle::compose_tables(l01.map, l12.map));
  CHECK(au.cod.name(au(au.dom.index("a"))) == "z");
}

TEST_CASE("setoid fn: embeddings") {
  Setoid two = Setoid::discrete({"a", "b"});
  Setoid one = Setoid::discrete({"z"});
  CHECK(is_embedding(identity(two)));
  CHECK_FALSE(is_embedding(SetoidFn::from_names(two, one, {{"a", "z"}, {"b", "z"}})));
  Subset s = make_subset(Setoid::discrete({"b"}), SetoidFn::from_names(Setoid::discrete({"b"}), two, {{"b", "b"}}));
  CHECK(is_embedding(s.embed));
}

TEST_CASE("setoid: quotients and factorization") {
  Setoid x = Setoid::discrete({"a", "b", "c"});
  Quotient same = quotient_by(x, [&](std::size_t a, std::size_t b) { return x.eq(a, b); });
  CHECK(same.quotient.class_count() == 3);
  Quotient all = quotient_by(x, [](std::size_t, std::size_t) { return true; });
  CHECK(all.quotient.class_count() == 1);

  Factorization fid = factor_through_quotient(quotient_map(same), same, 1000);
  CHECK(fn_equal(fid.map, identity(same.quotient)));
  CHECK(fid.uniqueness == Uniqueness::unique);

  Setoid pt = Setoid::discrete({"*"});
  SetoidFn k = SetoidFn::from_names(x, pt, {{"a", "*"}, {"b", "*"}, {"c", "*"}});
  Factorization fk = factor_through_quotient(k, all, 1000);
  CHECK(fk.map.map == std::vector<std::size_t>(3, 0));
  CHECK(fk.uniqueness == Uniqueness::unique);
}

TEST_CASE("setoid: COLLAPSE sum quotient has one class and f factors through it") {
  DirectFamily c = fixtures::collapse();
  Quotient q = direct_sum(c);
  std::size_t n = q.base.size();
  CHECK(n == 5);
  CHECK(oracle::count_classes(n, [&](std::size_t a, std::size_t b) {
          auto ea = sigma_index(c.carriers).elems[a], eb = sigma_index(c.carriers).elems[b];
          return oracle::exists_k(c, ea.first, ea.second, eb.first, eb.second);
        }) == 1);
  CHECK(q.quotient.class_count() == 1);
  Setoid pt = Setoid::discrete({"0"});
  SetoidFn f{q.base, pt, std::vector<std::size_t>(n, 0)};
  Factorization g = factor_through_quotient(f, q, 1000);
  CHECK(fn_equal(compose(quotient_map(q), g.map), SetoidFn{q.base, pt, f.map}));
}

TEST_CASE("setoid: for_each_map counts extensional maps") {
  Setoid a = Setoid::make({"a", "b", "c"}, {{"a", "b"}});
  Setoid b = Setoid::discrete({"p", "q"});
  std::size_t n = 0;
  CHECK(for_each_map(a, b, 1000, [&](const std::vector<std::size_t>&) { return ++n, true; }));
  CHECK(n == 4);
  CHECK_FALSE(for_each_map(a, b, 3, [](const std::vector<std::size_t>&) { return true; }));
}

TEST_CASE("setoid: products") {
  Setoid a = Setoid::make({"a", "b"}, {{"a", "b"}});
  Setoid b = Setoid::discrete({"p", "q", "r"});
  Setoid ab = product(a, b);
  CHECK(ab.size() == 6);
  CHECK(ab.class_count() == 3);
}

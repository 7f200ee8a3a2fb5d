#include "bspec/fixtures.hpp"

namespace bspec::fixtures {

namespace {

Values vals(std::initializer_list<int> xs) {
  Values out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

BSpace two_point(const Setoid& s) { return make_space(s, {vals({0, 1})}, {"g"}); }

}  // namespace

DirectedIndex chain3() { return chain_index(3); }

DirectFamily collapse() {
  DirectedIndex d = chain3();
  Setoid x0 = Setoid::discrete({"a", "b"});
  Setoid x1 = Setoid::discrete({"u", "v"});
  Setoid x2 = Setoid::discrete({"z"});
  std::vector<Edge> edges{{0, 1, SetoidFn{x0, x1, {0, 1}}}, {1, 2, SetoidFn{x1, x2, {0, 0}}}};
  return make_direct_family(d, Direction::covariant, {x0, x1, x2}, edges);
}

BSpace x2() { return two_point(Setoid::discrete({"p", "q"})); }

SetoidFn swap_x2() {
  Setoid s = x2().carrier;
  return SetoidFn{s, s, {1, 0}};
}

BSpace point() { return make_space(Setoid::discrete({"*"}), {}); }

Spectrum cspec() {
  DirectFamily f = collapse();
  std::vector<BSpace> spaces{make_space(f.carriers[0], {vals({0, 1})}, {"f0"}),
                             make_space(f.carriers[1], {vals({0, 1})}, {"f1"}),
                             make_space(f.carriers[2], {vals({0})}, {"f2"})};
  std::vector<EdgeWitness> w{{0, 1, {f.transport(0, 1), {cert::gen(0)}}},
                             {1, 2, {f.transport(1, 2), {cert::constant(Rational(0))}}}};
  return make_spectrum(std::move(f), std::move(spaces), w, false);
}

Spectrum constant_x2(Direction dir) { return constant_spectrum(chain3(), x2(), dir); }

DirectedIndex eo_index(std::size_t m) { return chain_index(2 * m + 1); }

CofinalSubset eo_cofinal(std::size_t m) {
  DirectedIndex d = eo_index(m);
  std::vector<std::string> names;
  for (std::size_t k = 0; k <= m; ++k) names.push_back(std::to_string(2 * k));
  Setoid j = Setoid::discrete(names);
  SetoidFn e{j, d.base, {}};
  for (std::size_t k = 0; k <= m; ++k) e.map.push_back(2 * k);
  SetoidFn cof{d.base, j, {}};
  for (std::size_t n = 0; n <= 2 * m; ++n) cof.map.push_back(std::min(n % 2 == 0 ? n : n + 1, 2 * m) / 2);
  return CofinalSubset{j, e, cof};
}

namespace {

Spectrum contravariant3(std::vector<Setoid> carriers, SetoidFn t21, SetoidFn t10) {
  DirectedIndex d = chain3();
  std::vector<Edge> edges{{1, 2, std::move(t21)}, {0, 1, std::move(t10)}};
  DirectFamily f = make_direct_family(d, Direction::contravariant, carriers, edges);
  std::vector<BSpace> spaces;
  for (const auto& c : carriers) {
    Values g;
    for (std::size_t x = 0; x < c.size(); ++x) g.emplace_back(static_cast<long>(x));
    spaces.push_back(make_space(c, {g}, {"g"}));
  }
  return make_spectrum(std::move(f), std::move(spaces), {});
}

}  // namespace

Spectrum rcollapse() {
  Setoid x0 = Setoid::discrete({"a", "b"});
  Setoid x1 = Setoid::discrete({"u", "v"});
  Setoid x2 = Setoid::discrete({"z"});
  return contravariant3({x0, x1, x2}, SetoidFn{x2, x1, {0}}, SetoidFn{x1, x0, {0, 1}});
}

Spectrum rswap() {
  Setoid s = Setoid::discrete({"p", "q"});
  return contravariant3({s, s, s}, SetoidFn{s, s, {1, 0}}, SetoidFn{s, s, {0, 1}});
}

}  // namespace bspec::fixtures

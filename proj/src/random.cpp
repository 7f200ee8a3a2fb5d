#include "bspec/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bspec/synth.hpp"

namespace bspec::gen {

std::size_t pick(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

bool coin(Rng& rng, std::size_t num, std::size_t den) { return pick(rng, den) < num; }

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

std::vector<std::string> letters(std::size_t n, char first = 'a') {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(std::string(1, static_cast<char>(first + k)));
  return out;
}

}  // namespace

std::vector<DirectedIndex> directed_preorders(std::size_t max_size) {
  std::vector<DirectedIndex> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    std::set<unsigned long> seen;
    std::vector<std::size_t> perm(n);
    for (unsigned long bits = 0; bits < (1UL << slots.size()); ++bits) {
      std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
      for (std::size_t i = 0; i < n; ++i) le[i][i] = 1;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (bits >> s & 1) le[slots[s].first][slots[s].second] = 1;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j)
          for (std::size_t k = 0; k < n && ok; ++k)
            if (le[i][j] && le[j][k] && !le[i][k]) ok = false;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          bool up = false;
          for (std::size_t k = 0; k < n; ++k) up = up || (le[i][k] && le[j][k]);
          ok = up;
        }
      if (!ok) continue;
      std::iota(perm.begin(), perm.end(), 0);
      unsigned long canon = ~0UL;
      do {
        unsigned long code = 0;
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (le[perm[slots[s].first]][perm[slots[s].second]]) code |= 1UL << s;
        canon = std::min(canon, code);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(canon).second) continue;
      NamePairs order;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && le[i][j]) order.emplace_back(std::to_string(i), std::to_string(j));
      out.push_back(make_directed(Setoid::discrete(numbered("", n)), order));
    }
  }
  return out;
}

Values random_values(Rng& rng, std::size_t n, long lo, long hi) {
  Values v;
  for (std::size_t k = 0; k < n; ++k) v.emplace_back(lo + static_cast<long>(pick(rng, static_cast<std::size_t>(hi - lo + 1))));
  return v;
}

Values random_class_values(Rng& rng, const Setoid& s, long lo, long hi) {
  Values v = random_values(rng, s.size(), lo, hi);
  for (std::size_t x = 0; x < s.size(); ++x) v[x] = v[s.rep(x)];
  return v;
}

namespace {

Setoid random_carrier(Rng& rng, std::size_t max_carrier) {
  std::size_t n = 1 + pick(rng, max_carrier);
  if (n == 1 || !coin(rng, 1, 4)) return Setoid::discrete(letters(n));
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = pick(rng, x + 1);
  return Setoid::from_labels(letters(n), labels);
}

}  // namespace

DirectFamily random_family(Rng& rng, const DirectedIndex& d, Direction dir, std::size_t max_carrier) {
  std::size_t n = d.size();
  bool cov = dir == Direction::covariant;
  std::vector<std::size_t> cls(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d.leq(i, j) && d.leq(j, i)) {
        cls[i] = j;
        break;
      }
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i)
    if (cls[i] == i) reps.push_back(i);
  // beyond(c, e): maps go from class c to class e
  auto beyond = [&](std::size_t c, std::size_t e) {
    return c != e && (cov ? d.leq(c, e) : d.leq(e, c));
  };
  auto count_beyond = [&](std::size_t c) {
    std::size_t k = 0;
    for (std::size_t e : reps) k += beyond(c, e);
    return k;
  };
  std::vector<std::size_t> order = reps;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return count_beyond(a) < count_beyond(b); });
  std::vector<Setoid> car(n);
  std::map<std::pair<std::size_t, std::size_t>, SetoidFn> lam;  // class c -> class e
  for (std::size_t c : order) {
    car[c] = random_carrier(rng, max_carrier);
    std::vector<std::size_t> up;
    for (std::size_t e : reps)
      if (beyond(c, e)) up.push_back(e);
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> t(up.size(), 0);
    while (true) {
      bool ok = true;
      for (std::size_t a = 0; a < up.size() && ok; ++a)
        for (std::size_t b = 0; b < up.size() && ok; ++b)
          if (beyond(up[a], up[b])) ok = car[up[b]].eq(lam.at({up[a], up[b]})(t[a]), t[b]);
      if (ok) tuples.push_back(t);
      std::size_t p = 0;
      while (p < t.size() && ++t[p] == car[up[p]].size()) t[p++] = 0;
      if (p == t.size()) break;
    }
    std::vector<std::vector<std::size_t>> img(car[c].size());
    for (std::size_t x = 0; x < car[c].size(); ++x) {
      if (car[c].rep(x) != x) img[x] = img[car[c].rep(x)];
      else img[x] = x == 0 ? tuples.front() : tuples[pick(rng, tuples.size())];
    }
    for (std::size_t a = 0; a < up.size(); ++a) {
      SetoidFn f{car[c], car[up[a]], {}};
      for (std::size_t x = 0; x < car[c].size(); ++x) f.map.push_back(img[x][a]);
      lam.emplace(std::make_pair(c, up[a]), std::move(f));
    }
  }
  std::vector<Setoid> carriers(n);
  for (std::size_t i = 0; i < n; ++i) carriers[i] = car[cls[i]];
  std::vector<Edge> edges;
  for (auto [i, j] : order_pairs(d)) {
    std::size_t from = cov ? cls[i] : cls[j], to = cov ? cls[j] : cls[i];
    edges.push_back({i, j, from == to ? identity(car[from]) : lam.at({from, to})});
  }
  return make_direct_family(d, dir, std::move(carriers), edges, false);
}

namespace {

void add_unique(std::vector<Values>& gens, Values v) {
  if (std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(std::move(v));
}

BSpace named_space(const Setoid& c, std::vector<Values> gens) {
  std::size_t k = gens.size();
  return make_space(c, std::move(gens), numbered("g", k));
}

}  // namespace

Spectrum random_spectrum(Rng& rng, const DirectedIndex& d, Direction dir, std::size_t max_carrier,
                         std::size_t max_extra) {
  DirectFamily fam = random_family(rng, d, dir, max_carrier);
  std::size_t n = fam.size();
  std::vector<std::vector<Values>> extras(n), gens(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = pick(rng, max_extra + 1);
    for (std::size_t e = 0; e < k; ++e) extras[i].push_back(random_class_values(rng, fam.carriers[i]));
  }
  for (auto [i, j] : order_pairs(d)) {
    const SetoidFn& t = fam.transport(i, j);
    if (dir == Direction::covariant)
      for (const auto& e : extras[j]) add_unique(gens[i], pull_back(e, t));
    else
      for (const auto& e : extras[i]) add_unique(gens[j], pull_back(e, t));
  }
  std::vector<BSpace> spaces;
  for (std::size_t i = 0; i < n; ++i) spaces.push_back(named_space(fam.carriers[i], std::move(gens[i])));
  return make_spectrum(std::move(fam), std::move(spaces), {});
}

namespace {

SpectrumMap to_point(const Spectrum& s) {
  Spectrum p = constant_spectrum(s.index(), make_space(Setoid::discrete({"*"}), {}), s.fam.dir);
  SpectrumMap m{s, p, {}, std::vector<MorphismWitness>{}};
  for (std::size_t i = 0; i < s.size(); ++i) {
    SetoidFn f{s.fam.carriers[i], p.fam.carriers[i], std::vector<std::size_t>(s.fam.carriers[i].size(), 0)};
    m.comps.push_back(f);
    m.cont->push_back({f, {}});
  }
  return m;
}

SpectrumMap permute(Rng& rng, const Spectrum& s) {
  std::size_t n = s.size();
  std::vector<std::vector<std::size_t>> perm(n), inv(n);
  std::vector<Setoid> car(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Setoid& x = s.fam.carriers[i];
    perm[i].resize(x.size());
    std::iota(perm[i].begin(), perm[i].end(), 0);
    std::shuffle(perm[i].begin(), perm[i].end(), rng);
    inv[i].resize(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) inv[i][perm[i][a]] = a;
    std::vector<std::string> names(x.size());
    std::vector<std::size_t> labels(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
      names[perm[i][a]] = x.name(a);
      labels[perm[i][a]] = perm[i][x.rep(a)];
    }
    car[i] = Setoid::from_labels(names, labels);
  }
  bool cov = s.fam.dir == Direction::covariant;
  std::vector<Edge> edges;
  for (auto [i, j] : order_pairs(s.index())) {
    std::size_t from = cov ? i : j, to = cov ? j : i;
    const SetoidFn& t = s.fam.transport(i, j);
    SetoidFn m{car[from], car[to], std::vector<std::size_t>(car[from].size())};
    for (std::size_t a = 0; a < t.map.size(); ++a) m.map[perm[from][a]] = perm[to][t(a)];
    edges.push_back({i, j, std::move(m)});
  }
  DirectFamily fam = make_direct_family(s.index(), s.fam.dir, car, edges, false);
  std::vector<BSpace> spaces;
  std::vector<SetoidFn> comps;
  std::vector<MorphismWitness> cont;
  for (std::size_t i = 0; i < n; ++i) {
    SetoidFn back{car[i], s.fam.carriers[i], inv[i]};
    std::vector<Values> g;
    for (const auto& v : s.spaces[i].gens) g.push_back(pull_back(v, back));
    spaces.push_back(make_space(car[i], std::move(g), s.spaces[i].gen_names));
    SetoidFn fwd{s.fam.carriers[i], car[i], perm[i]};
    MorphismWitness w{fwd, {}};
    for (std::size_t k = 0; k < s.spaces[i].gens.size(); ++k) w.certs.push_back(cert::gen(k));
    comps.push_back(fwd);
    cont.push_back(std::move(w));
  }
  Spectrum t = make_spectrum(std::move(fam), std::move(spaces), {});
  return SpectrumMap{s, std::move(t), std::move(comps), std::move(cont)};
}

// Coarsens the equality of a covariant spectrum by the kernel of r o lambda_{i,top}.
std::optional<SpectrumMap> coarsen(Rng& rng, const Spectrum& s) {
  std::size_t top = top_element(s.index());
  const BSpace& ts = s.spaces[top];
  if (ts.gens.empty()) return std::nullopt;
  const Values& r = ts.gens[pick(rng, ts.gens.size())];
  std::size_t n = s.size();
  std::vector<Setoid> car(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Setoid& x = s.fam.carriers[i];
    const SetoidFn& t = s.fam.transport(i, top);
    std::vector<std::size_t> labels(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
      labels[a] = a;
      for (std::size_t b = 0; b < a; ++b)
        if (r[t(a)] == r[t(b)]) {
          labels[a] = labels[b];
          break;
        }
    }
    car[i] = Setoid::from_labels(x.names(), labels);
  }
  std::vector<Edge> edges;
  for (auto [i, j] : order_pairs(s.index()))
    edges.push_back({i, j, SetoidFn{car[i], car[j], s.fam.transport(i, j).map}});
  try {
    DirectFamily fam = make_direct_family(s.index(), s.fam.dir, car, edges, false);
    std::vector<BSpace> spaces;
    std::vector<SetoidFn> comps;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Values> g;
      for (const auto& v : s.spaces[i].gens)
        if (is_extensional(car[i], v)) add_unique(g, v);
      add_unique(g, pull_back(r, SetoidFn{car[i], s.fam.carriers[top], s.fam.transport(i, top).map}));
      spaces.push_back(named_space(car[i], std::move(g)));
      comps.push_back(SetoidFn{s.fam.carriers[i], car[i], identity(s.fam.carriers[i]).map});
    }
    Spectrum t = make_spectrum(std::move(fam), std::move(spaces), {});
    auto cont = auto_continuity(s, t, comps);
    if (!cont) return std::nullopt;
    return SpectrumMap{s, std::move(t), std::move(comps), std::move(cont)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

SpectrumMap random_spectrum_map(Rng& rng, const Spectrum& s) {
  if (coin(rng, 1, 5)) return to_point(s);
  SpectrumMap p = permute(rng, s);
  if (s.fam.dir == Direction::covariant && coin(rng)) {
    if (auto c = coarsen(rng, p.dst)) return compose_maps(p, *c);
  }
  return p;
}

CofinalSubset random_cofinal(Rng& rng, const DirectedIndex& d) {
  std::size_t n = d.size();
  std::vector<std::size_t> tops;
  for (std::size_t i = 0; i < n; ++i) {
    bool top = true;
    for (std::size_t j = 0; j < n; ++j) top = top && d.leq(j, i);
    if (top) tops.push_back(i);
  }
  std::size_t t = tops[pick(rng, tops.size())];
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (i == t || coin(rng)) members.push_back(i);
    std::vector<std::string> names;
    for (std::size_t m : members) names.push_back(d.name(m));
    Setoid j = Setoid::discrete(names);
    SetoidFn e{j, d.base, members};
    SetoidFn cof{d.base, j, std::vector<std::size_t>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      auto self = std::find(members.begin(), members.end(), i);
      if (self != members.end()) {
        cof.map[i] = static_cast<std::size_t>(self - members.begin());
        continue;
      }
      std::vector<std::size_t> above;
      for (std::size_t k = 0; k < members.size(); ++k)
        if (d.leq(i, members[k])) above.push_back(k);
      cof.map[i] = above[pick(rng, above.size())];
    }
    CofinalSubset c{j, e, cof};
    if (validate_cofinal(d, c).empty()) return c;
  }
  Setoid j = Setoid::discrete({d.name(t)});
  return CofinalSubset{j, SetoidFn{j, d.base, {t}}, SetoidFn{d.base, j, std::vector<std::size_t>(n, 0)}};
}

BSpace random_space(Rng& rng, std::size_t max_points, std::size_t max_gens) {
  std::size_t n = 1 + pick(rng, max_points);
  Setoid c = Setoid::discrete(numbered("p", n));
  if (n > 1 && coin(rng, 1, 4)) {
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) labels[x] = pick(rng, x + 1);
    c = Setoid::from_labels(numbered("p", n), labels);
  }
  std::vector<Values> gens;
  std::size_t k = pick(rng, max_gens + 1);
  for (std::size_t g = 0; g < k; ++g) add_unique(gens, random_class_values(rng, c));
  return named_space(c, std::move(gens));
}

namespace {

SetoidFn random_map(Rng& rng, const Setoid& dom, const Setoid& cod) {
  SetoidFn f{dom, cod, std::vector<std::size_t>(dom.size())};
  for (std::size_t x = 0; x < dom.size(); ++x) f.map[x] = dom.rep(x) == x ? pick(rng, cod.size()) : f.map[dom.rep(x)];
  return f;
}

}  // namespace

Cocone random_cocone(Rng& rng, const DirectLimit& l, std::size_t max_apex) {
  const Spectrum& s = l.spec;
  std::size_t top = top_element(s.index());
  Setoid apex = Setoid::discrete(numbered("c", 1 + pick(rng, max_apex)));
  SetoidFn et = random_map(rng, s.fam.carriers[top], apex);
  std::vector<SetoidFn> legs;
  for (std::size_t i = 0; i < s.size(); ++i) legs.push_back(compose(s.fam.transport(i, top), et));
  std::vector<Values> gens;
  for (int k = 0; k < 3; ++k) {
    Values g = random_values(rng, apex.size());
    BSpace one = make_space(apex, {g});
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) ok = auto_witness(s.spaces[i], one, legs[i]).has_value();
    if (ok) add_unique(gens, std::move(g));
  }
  Cocone c{named_space(apex, std::move(gens)), {}};
  for (std::size_t i = 0; i < s.size(); ++i) c.legs.push_back(*auto_witness(s.spaces[i], c.apex, legs[i]));
  return c;
}

Cone random_cone(Rng& rng, const InverseLimit& l, std::size_t max_apex) {
  const Spectrum& s = l.spec;
  Setoid apex = Setoid::discrete(numbered("c", 1 + pick(rng, max_apex)));
  std::vector<std::size_t> choice(apex.size());
  for (auto& c : choice) c = pick(rng, l.elems.size());
  std::vector<SetoidFn> legs;
  std::vector<Values> gens;
  for (std::size_t i = 0; i < s.size(); ++i) {
    SetoidFn f{apex, s.fam.carriers[i], {}};
    for (std::size_t a = 0; a < apex.size(); ++a) f.map.push_back(l.elems[choice[a]][i]);
    for (const auto& g : s.spaces[i].gens) add_unique(gens, pull_back(g, f));
    legs.push_back(std::move(f));
  }
  if (coin(rng)) add_unique(gens, random_values(rng, apex.size()));
  Cone c{named_space(apex, std::move(gens)), {}};
  for (std::size_t i = 0; i < s.size(); ++i) c.legs.push_back(*auto_witness(c.apex, s.spaces[i], legs[i]));
  return c;
}

namespace {

Rational small_rational(Rng& rng) {
  long num = static_cast<long>(pick(rng, 7)) - 3;
  long den = 1 + static_cast<long>(pick(rng, 2));
  return Rational(num, den);
}

}  // namespace

Bic random_bic(Rng& rng, std::size_t depth) {
  if (depth <= 1 || coin(rng, 1, 4)) return coin(rng, 2, 3) ? bic::id() : bic::constant(small_rational(rng));
  switch (pick(rng, 7)) {
    case 0: return bic::add(random_bic(rng, depth - 1), random_bic(rng, depth - 1));
    case 1: return bic::mul(random_bic(rng, depth - 1), random_bic(rng, depth - 1));
    case 2: return bic::neg(random_bic(rng, depth - 1));
    case 3: return bic::abs(random_bic(rng, depth - 1));
    case 4: return bic::max(random_bic(rng, depth - 1), random_bic(rng, depth - 1));
    case 5: return bic::min(random_bic(rng, depth - 1), random_bic(rng, depth - 1));
    default: return bic::comp(random_bic(rng, depth - 1), random_bic(rng, depth - 1));
  }
}

Cert random_certificate(Rng& rng, std::size_t gens, std::size_t depth) {
  if (depth <= 1 || coin(rng, 1, 4)) {
    if (gens > 0 && coin(rng, 3, 4)) return cert::gen(pick(rng, gens));
    return cert::constant(small_rational(rng));
  }
  if (coin(rng)) return cert::add(random_certificate(rng, gens, depth - 1), random_certificate(rng, gens, depth - 1));
  return cert::bic(random_bic(rng, 3), random_certificate(rng, gens, depth - 1));
}

RandomMorphism random_morphism(Rng& rng, std::size_t max_points, std::size_t max_gens) {
  BSpace dst = random_space(rng, max_points, max_gens);
  BSpace base = random_space(rng, max_points, 1);
  SetoidFn h = random_map(rng, base.carrier, dst.carrier);
  std::vector<Values> gens = base.gens;
  for (const auto& g : dst.gens) add_unique(gens, pull_back(g, h));
  std::shuffle(gens.begin(), gens.end(), rng);
  BSpace src = named_space(base.carrier, gens);
  MorphismWitness w{h, {}};
  for (const auto& g : dst.gens) {
    Values v = pull_back(g, h);
    w.certs.push_back(cert::gen(static_cast<std::size_t>(std::find(gens.begin(), gens.end(), v) - gens.begin())));
  }
  return RandomMorphism{std::move(src), std::move(dst), std::move(w)};
}

}  // namespace bspec::gen

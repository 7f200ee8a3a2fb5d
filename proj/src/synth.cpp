#include "bspec/synth.hpp"

#include <algorithm>
#include <map>

namespace bspec {

namespace {

bool factors_through(const Values& l, const Values& t, const std::vector<std::size_t>& reps) {
  std::map<Rational, Rational> m;
  for (std::size_t x : reps) {
    auto [it, fresh] = m.emplace(l[x], t[x]);
    if (!fresh && it->second != t[x]) return false;
  }
  return true;
}

// piecewise linear psi with psi(a) = v at every node
Bic interpolate(const std::map<Rational, Rational>& pts) {
  std::vector<std::pair<Rational, Rational>> p(pts.begin(), pts.end());
  if (p.size() == 1) return bic::constant(p[0].second);
  Rational slope = (p[1].second - p[0].second) / (p[1].first - p[0].first);
  Rational off = p[0].second - slope * p[0].first;
  bool affine = true;
  for (const auto& [a, v] : p) affine = affine && slope * a + off == v;
  if (affine) return bic::affine(slope, off);
  Bic sum;
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (p[c].second == 0) continue;
    Rational r = -1;
    if (c > 0) r = p[c].first - p[c - 1].first;
    if (c + 1 < p.size()) r = r < 0 ? p[c + 1].first - p[c].first : min_q(r, p[c + 1].first - p[c].first);
    Bic dist = bic::abs(bic::add(bic::id(), bic::constant(-p[c].first)));
    Bic hat = bic::max(bic::constant(0), bic::add(bic::constant(1), bic::mul(bic::constant(-1 / r), dist)));
    Bic term = p[c].second == 1 ? hat : bic::mul(bic::constant(p[c].second), hat);
    sum = sum ? bic::add(sum, term) : term;
  }
  return sum ? sum : bic::constant(0);
}

}  // namespace

std::optional<Cert> synthesize_certificate(const BSpace& b, const Values& t) {
  const Setoid& c = b.carrier;
  if (t.size() != c.size() || !is_extensional(c, t)) return std::nullopt;
  const auto& reps = c.reps();
  if (reps.empty()) return cert::constant(0);
  bool constant = std::all_of(reps.begin(), reps.end(), [&](std::size_t x) { return t[x] == t[reps[0]]; });
  if (constant) return cert::constant(t[reps[0]]);
  for (std::size_t k = 0; k < b.gens.size(); ++k)
    if (b.gens[k] == t) return cert::gen(k);

  std::optional<Values> lv;
  Cert lc;
  for (std::size_t k = 0; k < b.gens.size() && !lv; ++k)
    if (factors_through(b.gens[k], t, reps)) {
      lv = b.gens[k];
      lc = cert::gen(k);
    }
  for (int m = 2; m <= 64 && !lv; ++m) {
    Values l(c.size(), Rational(0));
    Cert lcert;
    Rational w = 1;
    for (std::size_t k = 0; k < b.gens.size(); ++k, w *= m) {
      for (std::size_t x = 0; x < c.size(); ++x) l[x] += w * b.gens[k][x];
      Cert term = w == 1 ? cert::gen(k) : cert::scale(w, cert::gen(k));
      lcert = lcert ? cert::add(lcert, term) : term;
    }
    if (lcert && factors_through(l, t, reps)) {
      lv = std::move(l);
      lc = lcert;
    }
  }
  if (!lv) return std::nullopt;
  std::map<Rational, Rational> pts;
  for (std::size_t x : reps) pts.emplace((*lv)[x], t[x]);
  Cert out = cert::bic(interpolate(pts), lc);
  if (!validate_certificate(b, t, out).ok()) return std::nullopt;
  return out;
}

std::optional<MorphismWitness> auto_witness(const BSpace& src, const BSpace& dst, const SetoidFn& h) {
  if (!h.dom.same_as(src.carrier) || !h.cod.same_as(dst.carrier) || !is_extensional(h)) return std::nullopt;
  MorphismWitness w{h, {}};
  for (const auto& g : dst.gens) {
    auto c = synthesize_certificate(src, pull_back(g, h));
    if (!c) return std::nullopt;
    w.certs.push_back(*c);
  }
  return w;
}

std::vector<MorphismWitness> enumerate_morphisms(const BSpace& src, const BSpace& dst, std::size_t bound) {
  std::vector<MorphismWitness> out;
  bool ok = for_each_map(src.carrier, dst.carrier, bound, [&](const std::vector<std::size_t>& t) {
    if (auto w = auto_witness(src, dst, SetoidFn{src.carrier, dst.carrier, t})) out.push_back(std::move(*w));
    return true;
  });
  if (!ok) fail(ErrorKind::EnumerationBoundExceeded, "candidate maps exceed bound");
  return out;
}

}  // namespace bspec

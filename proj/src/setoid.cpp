#include "bspec/setoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace bspec {

namespace {

std::size_t root(std::vector<std::size_t>& p, std::size_t x) {
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

void unite(std::vector<std::size_t>& p, std::size_t a, std::size_t b) {
  a = root(p, a);
  b = root(p, b);
  if (a == b) return;
  if (a < b) std::swap(a, b);
  p[a] = b;
}

}  // namespace

Setoid::Setoid() : d_(std::make_shared<Data>()) {}

Setoid Setoid::build(std::vector<std::string> names, std::vector<std::size_t> parent) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) fail(ErrorKind::DuplicateElement, n);
  auto d = std::make_shared<Data>();
  d->rep.resize(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) d->rep[i] = root(parent, i);
  // roots are the least index of each class because unite keeps the smaller
  for (std::size_t i = 0; i < names.size(); ++i)
    if (d->rep[i] == i) d->reps.push_back(i);
  d->names = std::move(names);
  Setoid s;
  s.d_ = std::move(d);
  return s;
}

Setoid Setoid::make(std::vector<std::string> names, const NamePairs& eq_pairs) {
  std::vector<std::size_t> p(names.size());
  std::iota(p.begin(), p.end(), 0);
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
  for (const auto& [a, b] : eq_pairs) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) fail(ErrorKind::UnknownElement, a);
    if (ib == idx.end()) fail(ErrorKind::UnknownElement, b);
    unite(p, ia->second, ib->second);
  }
  return build(std::move(names), std::move(p));
}

Setoid Setoid::discrete(std::vector<std::string> names) { return make(std::move(names)); }

Setoid Setoid::from_labels(std::vector<std::string> names, const std::vector<std::size_t>& labels) {
  std::vector<std::size_t> p(names.size());
  std::iota(p.begin(), p.end(), 0);
  std::unordered_map<std::size_t, std::size_t> first;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = first.emplace(labels[i], i);
    if (!fresh) unite(p, it->second, i);
  }
  return build(std::move(names), std::move(p));
}

std::optional<std::size_t> Setoid::find(std::string_view n) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (d_->names[i] == n) return i;
  return std::nullopt;
}

std::size_t Setoid::index(std::string_view n) const {
  auto i = find(n);
  if (!i) fail(ErrorKind::UnknownElement, std::string(n));
  return *i;
}

bool Setoid::same_as(const Setoid& o) const {
  return d_ == o.d_ || (d_->names == o.d_->names && d_->rep == o.d_->rep);
}

std::string Setoid::describe() const {
  std::string s = "{";
  for (std::size_t c = 0; c < class_count(); ++c) {
    if (c) s += " | ";
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
      if (rep(i) != reps()[c]) continue;
      if (!first) s += "=";
      s += name(i);
      first = false;
    }
  }
  return s + "}";
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

Setoid product(const Setoid& a, const Setoid& b) {
  std::vector<std::string> names;
  std::vector<std::size_t> labels;
  names.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      names.push_back(pair_name(a.name(i), b.name(j)));
      labels.push_back(a.rep(i) * b.size() + b.rep(j));
    }
  return Setoid::from_labels(std::move(names), labels);
}

std::optional<Issue> equivalence_violation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& rel,
                                           const std::function<std::string(std::size_t)>& show) {
  for (std::size_t a = 0; a < n; ++a)
    if (!rel(a, a)) return Issue{"reflexivity", show(a)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rel(a, b) && !rel(b, a)) return Issue{"symmetry", show(a) + " ~ " + show(b)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!rel(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (rel(b, c) && !rel(a, c)) return Issue{"transitivity", show(a) + " ~ " + show(b) + " ~ " + show(c)};
    }
  return std::nullopt;
}

SetoidFn SetoidFn::from_names(const Setoid& dom, const Setoid& cod, const NamePairs& table) {
  SetoidFn f{dom, cod, std::vector<std::size_t>(dom.size(), SIZE_MAX)};
  for (const auto& [a, b] : table) f.map[dom.index(a)] = cod.index(b);
  for (std::size_t x = 0; x < dom.size(); ++x)
    if (f.map[x] == SIZE_MAX) fail(ErrorKind::UnknownElement, "no image for " + dom.name(x));
  return f;
}

std::optional<std::pair<std::size_t, std::size_t>> extensionality_violation(const SetoidFn& f) {
  for (std::size_t a = 0; a < f.dom.size(); ++a) {
    std::size_t r = f.dom.rep(a);
    if (!f.cod.eq(f.map[a], f.map[r])) return std::pair{r, a};
  }
  return std::nullopt;
}

bool is_extensional(const SetoidFn& f) { return !extensionality_violation(f); }

void require_extensional(const SetoidFn& f, const std::string& what) {
  if (auto v = extensionality_violation(f))
    fail(ErrorKind::NotExtensional, what + ": " + f.dom.name(v->first) + " = " + f.dom.name(v->second) +
                                        " but images " + f.cod.name(f.map[v->first]) + " != " +
                                        f.cod.name(f.map[v->second]));
}

std::optional<std::pair<std::size_t, std::size_t>> embedding_violation(const SetoidFn& f) {
  for (std::size_t a = 0; a < f.dom.size(); ++a)
    for (std::size_t b = a + 1; b < f.dom.size(); ++b)
      if (!f.dom.eq(a, b) && f.cod.eq(f.map[a], f.map[b])) return std::pair{a, b};
  return std::nullopt;
}

bool is_embedding(const SetoidFn& f) { return !embedding_violation(f); }

SetoidFn identity(const Setoid& x) {
  SetoidFn f{x, x, std::vector<std::size_t>(x.size())};
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

SetoidFn compose(const SetoidFn& f, const SetoidFn& g) {
  if (!f.cod.same_as(g.dom))
    fail(ErrorKind::DomainMismatch, "codomain " + f.cod.describe() + " vs domain " + g.dom.describe());
  SetoidFn h{f.dom, g.cod, std::vector<std::size_t>(f.dom.size())};
  for (std::size_t x = 0; x < f.dom.size(); ++x) h.map[x] = g.map[f.map[x]];
  return h;
}

bool fn_equal(const SetoidFn& f, const SetoidFn& g) {
  if (!f.dom.same_as(g.dom) || !f.cod.same_as(g.cod)) return false;
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    if (!f.cod.eq(f.map[x], g.map[x])) return false;
  return true;
}

bool is_inverse_pair(const SetoidFn& f, const SetoidFn& g) {
  return fn_equal(compose(f, g), identity(f.dom)) && fn_equal(compose(g, f), identity(g.dom));
}

std::string format_fn(const SetoidFn& f) {
  std::string s;
  for (std::size_t x = 0; x < f.dom.size(); ++x) {
    if (x) s += ", ";
    s += f.dom.name(x) + "=>" + f.cod.name(f.map[x]);
  }
  return s;
}

bool for_each_map(const Setoid& dom, const Setoid& cod, std::size_t bound,
                  const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const auto& dreps = dom.reps();
  const auto& creps = cod.reps();
  if (dreps.empty()) {
    visit(std::vector<std::size_t>{});
    return true;
  }
  if (creps.empty()) return true;
  // overflow-safe count check
  std::size_t total = 1;
  for (std::size_t i = 0; i < dreps.size(); ++i) {
    if (total > bound / creps.size()) return false;
    total *= creps.size();
  }
  std::vector<std::size_t> choice(dreps.size(), 0);
  std::vector<std::size_t> cls(dom.size());
  for (std::size_t x = 0; x < dom.size(); ++x)
    cls[x] = std::lower_bound(dreps.begin(), dreps.end(), dom.rep(x)) - dreps.begin();
  std::vector<std::size_t> table(dom.size());
  while (true) {
    for (std::size_t x = 0; x < dom.size(); ++x) table[x] = creps[choice[cls[x]]];
    if (!visit(table)) return true;
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == creps.size()) choice[k++] = 0;
    if (k == choice.size()) return true;
  }
}

Quotient quotient_by(const Setoid& x, const std::function<bool(std::size_t, std::size_t)>& rel) {
  auto show = [&](std::size_t i) { return x.name(i); };
  if (auto v = equivalence_violation(x.size(), rel, show)) fail(ErrorKind::NotEquivalence, v->law + ": " + v->witness);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (x.eq(a, b) && !rel(a, b))
        fail(ErrorKind::NotExtensional, "relation does not contain equality at " + x.name(a) + ", " + x.name(b));
  std::vector<std::size_t> labels(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    labels[a] = a;
    for (std::size_t b = 0; b < a; ++b)
      if (rel(a, b)) {
        labels[a] = labels[b];
        break;
      }
  }
  return Quotient{x, Setoid::from_labels(x.names(), labels)};
}

SetoidFn quotient_map(const Quotient& q) {
  SetoidFn f = identity(q.base);
  f.cod = q.quotient;
  return f;
}

std::string_view to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::unique: return "unique";
    case Uniqueness::not_unique: return "not-unique";
    case Uniqueness::skipped: return "uniqueness unbounded";
  }
  return "";
}

Factorization factor_through_quotient(const SetoidFn& f, const Quotient& q, std::size_t bound) {
  if (!f.dom.same_as(q.base)) fail(ErrorKind::DomainMismatch, "map domain is not the quotiented setoid");
  for (std::size_t a = 0; a < f.dom.size(); ++a)
    for (std::size_t b = 0; b < f.dom.size(); ++b)
      if (q.quotient.eq(a, b) && !f.cod.eq(f.map[a], f.map[b]))
        fail(ErrorKind::NotClassConstant, f.dom.name(a) + " ~ " + f.dom.name(b));
  Factorization r{SetoidFn{q.quotient, f.cod, f.map}, Uniqueness::skipped};
  std::size_t count = 0;
  bool done = for_each_map(q.quotient, f.cod, bound, [&](const std::vector<std::size_t>& t) {
    for (std::size_t x = 0; x < t.size(); ++x)
      if (!f.cod.eq(t[x], f.map[x])) return true;
    ++count;
    return count < 2;
  });
  if (done) r.uniqueness = count == 1 ? Uniqueness::unique : Uniqueness::not_unique;
  return r;
}

Subset make_subset(const Setoid& carrier, const SetoidFn& embed) {
  if (!embed.dom.same_as(carrier)) fail(ErrorKind::DomainMismatch, "embedding domain");
  require_extensional(embed, "subset embedding");
  if (auto v = embedding_violation(embed))
    fail(ErrorKind::NotExtensional, "not an embedding: " + carrier.name(v->first) + ", " + carrier.name(v->second));
  return Subset{carrier, embed};
}

}  // namespace bspec

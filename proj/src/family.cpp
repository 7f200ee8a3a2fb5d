#include "bspec/family.hpp"

namespace bspec {

std::string_view to_string(Direction d) { return d == Direction::covariant ? "covariant" : "contravariant"; }

Issues validate_family(const Family& f) {
  Issues out;
  std::size_t n = f.index.size();
  if (f.carriers.size() != n) return {{"shape", "carrier count"}};
  auto get = [&](std::size_t i, std::size_t j) -> const SetoidFn* {
    auto it = f.trans.find({i, j});
    return it == f.trans.end() ? nullptr : &it->second;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!f.index.eq(i, j)) continue;
      const SetoidFn* t = get(i, j);
      if (!t) {
        out.push_back({"missing transport", f.index.name(i) + "->" + f.index.name(j)});
        continue;
      }
      if (!is_extensional(*t)) out.push_back({"extensionality", f.index.name(i) + "->" + f.index.name(j)});
      if (i == j && !fn_equal(*t, identity(f.carriers[i]))) out.push_back({"identity", f.index.name(i)});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!f.index.eq(i, j) || !f.index.eq(j, k)) continue;
        auto a = get(i, j), b = get(j, k), c = get(i, k);
        if (a && b && c && !fn_equal(compose(*a, *b), *c))
          out.push_back({"composition", f.index.name(i) + "," + f.index.name(j) + "," + f.index.name(k)});
      }
  return out;
}

bool sigma_equality_plain(const Family& f, std::size_t i, std::size_t x, std::size_t j, std::size_t y) {
  if (!f.index.eq(i, j)) return false;
  const SetoidFn& t = f.trans.at({i, j});
  return f.carriers[j].eq(t(x), y);
}

const SetoidFn& DirectFamily::transport(std::size_t i, std::size_t j) const {
  if (!trans[i][j]) fail(ErrorKind::MissingTransport, index.name(i) + "<=" + index.name(j));
  return *trans[i][j];
}

namespace {

void check_shape(const DirectFamily& f, std::size_t i, std::size_t j, const SetoidFn& m) {
  const Setoid& from = f.dir == Direction::covariant ? f.carriers[i] : f.carriers[j];
  const Setoid& to = f.dir == Direction::covariant ? f.carriers[j] : f.carriers[i];
  std::string e = f.index.name(i) + "<=" + f.index.name(j);
  if (!f.index.leq(i, j)) fail(ErrorKind::TypeMismatch, "transport on non-order pair " + e);
  if (!m.dom.same_as(from) || !m.cod.same_as(to)) fail(ErrorKind::DomainMismatch, "transport " + e);
  require_extensional(m, "transport " + e);
}

// transport i->k then k->j in the orientation of the family
SetoidFn chain(const DirectFamily& f, const SetoidFn& ik, const SetoidFn& kj) {
  return f.dir == Direction::covariant ? compose(ik, kj) : compose(kj, ik);
}

}  // namespace

DirectFamily make_direct_family(const DirectedIndex& index, Direction dir, std::vector<Setoid> carriers,
                                const std::vector<Edge>& edges, bool closure) {
  std::size_t n = index.size();
  if (carriers.size() != n) fail(ErrorKind::TypeMismatch, "one carrier per index element required");
  DirectFamily f{index, dir, std::move(carriers), {}};
  f.trans.assign(n, std::vector<std::optional<SetoidFn>>(n));
  for (const auto& e : edges) {
    check_shape(f, e.i, e.j, e.map);
    if (f.trans[e.i][e.j] && !fn_equal(*f.trans[e.i][e.j], e.map))
      fail(ErrorKind::InconsistentTransport, "two transports given for " + index.name(e.i) + "<=" + index.name(e.j));
    f.trans[e.i][e.j] = e.map;
  }
  if (!closure) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (index.leq(i, j) && !f.trans[i][j]) {
          if (i == j) f.trans[i][i] = identity(f.carriers[i]);
          else fail(ErrorKind::MissingTransport, index.name(i) + "<=" + index.name(j));
        }
    return f;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!f.trans[i][i]) f.trans[i][i] = identity(f.carriers[i]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (!f.trans[i][k] || i == k) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!f.trans[k][j] || k == j) continue;
          SetoidFn c = chain(f, *f.trans[i][k], *f.trans[k][j]);
          if (!f.trans[i][j]) {
            f.trans[i][j] = std::move(c);
            changed = true;
          } else if (!fn_equal(*f.trans[i][j], c)) {
            fail(ErrorKind::InconsistentTransport, "paths disagree on " + index.name(i) + "<=" + index.name(j) +
                                                       " via " + index.name(k));
          }
        }
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (index.leq(i, j) && !f.trans[i][j]) fail(ErrorKind::MissingTransport, index.name(i) + "<=" + index.name(j));
  return f;
}

DirectFamily constant_family(const DirectedIndex& index, const Setoid& x, Direction dir) {
  std::vector<Edge> edges;
  for (auto [i, j] : order_pairs(index)) edges.push_back({i, j, identity(x)});
  return make_direct_family(index, dir, std::vector<Setoid>(index.size(), x), edges, false);
}

Issues validate_direct_family(const DirectFamily& f) {
  Issues out;
  std::size_t n = f.index.size();
  if (f.carriers.size() != n) return {{"shape", "carrier count"}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!f.index.leq(i, j)) continue;
      if (!f.trans[i][j]) {
        out.push_back({"missing transport", f.index.name(i) + "<=" + f.index.name(j)});
        continue;
      }
      if (!is_extensional(*f.trans[i][j]))
        out.push_back({"extensionality", f.index.name(i) + "<=" + f.index.name(j)});
    }
  for (std::size_t i = 0; i < n; ++i)
    if (f.trans[i][i] && !fn_equal(*f.trans[i][i], identity(f.carriers[i])))
      out.push_back({"identity", f.index.name(i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (!f.index.leq(i, k) || !f.index.leq(k, j)) continue;
        if (!f.trans[i][k] || !f.trans[k][j] || !f.trans[i][j]) continue;
        if (!fn_equal(chain(f, *f.trans[i][k], *f.trans[k][j]), *f.trans[i][j]))
          out.push_back({"composition", f.index.name(i) + "<=" + f.index.name(k) + "<=" + f.index.name(j)});
      }
  return out;
}

SigmaIndex sigma_index(const std::vector<Setoid>& carriers) {
  SigmaIndex s;
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    s.offset.push_back(s.elems.size());
    for (std::size_t x = 0; x < carriers[i].size(); ++x) s.elems.emplace_back(i, x);
  }
  return s;
}

std::vector<std::string> sigma_names(const DirectedIndex& index, const std::vector<Setoid>& carriers) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < carriers.size(); ++i)
    for (std::size_t x = 0; x < carriers[i].size(); ++x) names.push_back(pair_name(index.name(i), carriers[i].name(x)));
  return names;
}

std::size_t to_top(const DirectFamily& f, std::size_t i, std::size_t x) {
  if (f.dir != Direction::covariant) fail(ErrorKind::FlavorMismatch, "direct sum needs a covariant family");
  return f.transport(i, top_element(f.index))(x);
}

bool direct_sum_equality(const DirectFamily& f, std::size_t i, std::size_t x, std::size_t j, std::size_t y) {
  std::size_t t = top_element(f.index);
  return f.carriers[t].eq(to_top(f, i, x), to_top(f, j, y));
}

Setoid exterior_union(const DirectFamily& f) {
  SigmaIndex s = sigma_index(f.carriers);
  std::vector<std::size_t> labels(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    labels[a] = a;
    auto [i, x] = s.elems[a];
    for (std::size_t b = 0; b < a; ++b) {
      auto [j, y] = s.elems[b];
      if (f.index.base.eq(i, j) && f.index.leq(j, i)) {
        const SetoidFn& t = f.transport(j, i);
        bool same = f.dir == Direction::covariant ? f.carriers[i].eq(t(y), x) : f.carriers[j].eq(t(x), y);
        if (same) {
          labels[a] = labels[b];
          break;
        }
      }
    }
  }
  return Setoid::from_labels(sigma_names(f.index, f.carriers), labels);
}

Quotient direct_sum(const DirectFamily& f) {
  if (f.dir != Direction::covariant) fail(ErrorKind::FlavorMismatch, "direct sum needs a covariant family");
  SigmaIndex s = sigma_index(f.carriers);
  std::size_t t = top_element(f.index);
  std::vector<std::size_t> canon(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) canon[a] = f.carriers[t].rep(to_top(f, s.elems[a].first, s.elems[a].second));
  return quotient_by(exterior_union(f), [&](std::size_t a, std::size_t b) { return canon[a] == canon[b]; });
}

Issues validate_dependent(const DirectFamily& f, const Assignment& phi, Flavor flavor) {
  Issues out;
  if (phi.size() != f.size()) return {{"shape", "assignment length"}};
  bool match = (flavor == Flavor::covariant && f.dir == Direction::covariant) ||
               (flavor == Flavor::contravariant && f.dir == Direction::contravariant);
  if (!match) return {{"flavor mismatch", std::string(to_string(f.dir)) + " family"}};
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (!f.index.leq(i, j)) continue;
      const SetoidFn& t = f.transport(i, j);
      bool ok = f.dir == Direction::covariant ? f.carriers[j].eq(phi[j], t(phi[i])) : f.carriers[i].eq(phi[i], t(phi[j]));
      if (!ok) out.push_back({"compatibility", "(" + f.index.name(i) + "," + f.index.name(j) + ")"});
    }
  return out;
}

Issues validate_dependent(const Family& f, const Assignment& phi) {
  Issues out;
  for (std::size_t i = 0; i < f.index.size(); ++i)
    for (std::size_t j = 0; j < f.index.size(); ++j)
      if (f.index.eq(i, j) && !f.carriers[j].eq(phi[j], f.trans.at({i, j})(phi[i])))
        out.push_back({"compatibility", "(" + f.index.name(i) + "," + f.index.name(j) + ")"});
  return out;
}

std::vector<Assignment> enumerate_dependent(const DirectFamily& f, std::size_t bound) {
  std::size_t n = f.size();
  std::size_t total = 1;
  for (const auto& c : f.carriers) {
    std::size_t k = c.class_count();
    if (k == 0) return {};
    if (total > bound / k) fail(ErrorKind::EnumerationBoundExceeded, "dependent functions exceed bound");
    total *= k;
  }
  std::vector<Assignment> out;
  Assignment cur(n);
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i)
      for (std::size_t j = 0; j <= upto; ++j) {
        if (!(i == upto || j == upto) || !f.index.leq(i, j)) continue;
        const SetoidFn& t = f.transport(i, j);
        bool ok =
            f.dir == Direction::covariant ? f.carriers[j].eq(cur[j], t(cur[i])) : f.carriers[i].eq(cur[i], t(cur[j]));
        if (!ok) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r : f.carriers[i].reps()) {
      cur[i] = r;
      if (consistent(i)) self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::string assignment_name(const DirectFamily& f, const Assignment& a) {
  std::string s = "<";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += f.carriers[i].name(a[i]);
  }
  return s + ">";
}

Setoid dependent_setoid(const DirectFamily& f, const std::vector<Assignment>& elems) {
  std::vector<std::string> names;
  std::vector<std::size_t> labels(elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a) {
    names.push_back(assignment_name(f, elems[a]));
    labels[a] = a;
    for (std::size_t b = 0; b < a; ++b) {
      bool same = true;
      for (std::size_t i = 0; i < f.size() && same; ++i) same = f.carriers[i].eq(elems[a][i], elems[b][i]);
      if (same) {
        labels[a] = labels[b];
        break;
      }
    }
  }
  // names may repeat when non-canonical representatives are supplied
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (names[a] == names[b]) names[a] += "#" + std::to_string(a);
  return Setoid::from_labels(std::move(names), labels);
}

Issues validate_family_map(const FamilyMap& m) {
  Issues out;
  const DirectFamily& s = m.source;
  const DirectFamily& t = m.target;
  if (!s.index.base.same_as(t.index.base) || s.index.le != t.index.le || s.dir != t.dir)
    return {{"shape", "families over different indices or directions"}};
  if (m.comps.size() != s.size()) return {{"shape", "component count"}};
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!m.comps[i].dom.same_as(s.carriers[i]) || !m.comps[i].cod.same_as(t.carriers[i])) {
      out.push_back({"shape", "component " + s.index.name(i)});
      return out;
    }
    if (!is_extensional(m.comps[i])) out.push_back({"extensionality", "component " + s.index.name(i)});
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!s.index.leq(i, j)) continue;
      bool ok = s.dir == Direction::covariant
                    ? fn_equal(compose(s.transport(i, j), m.comps[j]), compose(m.comps[i], t.transport(i, j)))
                    : fn_equal(compose(s.transport(i, j), m.comps[i]), compose(m.comps[j], t.transport(i, j)));
      if (!ok) out.push_back({"naturality", "(" + s.index.name(i) + "," + s.index.name(j) + ")"});
    }
  return out;
}

SetoidFn inject(const DirectFamily& f, std::size_t i) {
  Quotient q = direct_sum(f);
  SigmaIndex s = sigma_index(f.carriers);
  SetoidFn e{f.carriers[i], q.quotient, std::vector<std::size_t>(f.carriers[i].size())};
  for (std::size_t x = 0; x < e.map.size(); ++x) e.map[x] = s.flat(i, x);
  return e;
}

SetoidFn sigma_map(const FamilyMap& m) {
  if (auto v = validate_family_map(m); !v.empty()) fail(ErrorKind::TypeMismatch, "family map: " + v[0].law + " " + v[0].witness);
  Quotient a = direct_sum(m.source), b = direct_sum(m.target);
  SigmaIndex sa = sigma_index(m.source.carriers), sb = sigma_index(m.target.carriers);
  SetoidFn f{a.quotient, b.quotient, std::vector<std::size_t>(sa.size())};
  for (std::size_t k = 0; k < sa.size(); ++k) {
    auto [i, x] = sa.elems[k];
    f.map[k] = sb.flat(i, m.comps[i](x));
  }
  return f;
}

SetoidFn proj(const DirectFamily& f, const std::vector<Assignment>& elems, std::size_t i) {
  SetoidFn p{dependent_setoid(f, elems), f.carriers[i], std::vector<std::size_t>(elems.size())};
  for (std::size_t a = 0; a < elems.size(); ++a) p.map[a] = elems[a][i];
  return p;
}

SetoidFn pi_map(const FamilyMap& m, const std::vector<Assignment>& src, const std::vector<Assignment>& dst) {
  if (auto v = validate_family_map(m); !v.empty()) fail(ErrorKind::TypeMismatch, "family map: " + v[0].law + " " + v[0].witness);
  Setoid ds = dependent_setoid(m.source, src), dt = dependent_setoid(m.target, dst);
  SetoidFn f{ds, dt, std::vector<std::size_t>(src.size())};
  for (std::size_t a = 0; a < src.size(); ++a) {
    std::size_t found = SIZE_MAX;
    for (std::size_t b = 0; b < dst.size() && found == SIZE_MAX; ++b) {
      bool same = true;
      for (std::size_t i = 0; i < m.source.size() && same; ++i)
        same = m.target.carriers[i].eq(m.comps[i](src[a][i]), dst[b][i]);
      if (same) found = b;
    }
    if (found == SIZE_MAX) fail(ErrorKind::TypeMismatch, "image of " + assignment_name(m.source, src[a]) + " not listed");
    f.map[a] = found;
  }
  return f;
}

RawProjection sigma_index_projection(const DirectFamily& f) {
  Quotient q = direct_sum(f);
  SigmaIndex s = sigma_index(f.carriers);
  RawProjection r{std::vector<std::size_t>(s.size()), true};
  for (std::size_t a = 0; a < s.size(); ++a) r.table[a] = s.elems[a].first;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (q.quotient.eq(a, b) && !f.index.base.eq(r.table[a], r.table[b])) r.extensional = false;
  return r;
}

DirectFamily restrict_family(const DirectFamily& f, const DirectedIndex& j, const SetoidFn& h) {
  if (!h.dom.same_as(j.base) || !h.cod.same_as(f.index.base)) fail(ErrorKind::DomainMismatch, "restriction map");
  require_extensional(h, "restriction map");
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < j.size(); ++b)
      if (j.leq(a, b) && !f.index.leq(h(a), h(b))) fail(ErrorKind::NotMonotone, j.name(a) + "<=" + j.name(b));
  DirectFamily r{j, f.dir, {}, {}};
  for (std::size_t a = 0; a < j.size(); ++a) r.carriers.push_back(f.carriers[h(a)]);
  r.trans.assign(j.size(), std::vector<std::optional<SetoidFn>>(j.size()));
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < j.size(); ++b)
      if (j.leq(a, b)) r.trans[a][b] = f.transport(h(a), h(b));
  return r;
}

Family restrict_family(const Family& f, const Setoid& j, const SetoidFn& h) {
  if (!h.dom.same_as(j) || !h.cod.same_as(f.index)) fail(ErrorKind::DomainMismatch, "restriction map");
  require_extensional(h, "restriction map");
  Family r{j, {}, {}};
  for (std::size_t a = 0; a < j.size(); ++a) r.carriers.push_back(f.carriers[h(a)]);
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < j.size(); ++b)
      if (j.eq(a, b)) r.trans.emplace(std::pair{a, b}, f.trans.at({h(a), h(b)}));
  return r;
}

}  // namespace bspec

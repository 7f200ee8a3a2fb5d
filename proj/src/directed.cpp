#include "bspec/directed.hpp"

namespace bspec {

Table2 least_upper_table(const Setoid& base, const std::vector<std::vector<char>>& le) {
  std::size_t n = base.size();
  Table2 w(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = 0;
      while (k < n && !(le[i][k] && le[j][k])) ++k;
      if (k == n) fail(ErrorKind::NotDirected, "no upper bound for " + base.name(i) + ", " + base.name(j));
      w[i][j] = k;
    }
  return w;
}

DirectedIndex make_directed(const Setoid& base, const NamePairs& order, bool closure, std::optional<Table2> upper,
                            std::optional<Table2> delta) {
  std::size_t n = base.size();
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : order) le[base.index(a)][base.index(b)] = 1;
  if (closure) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (base.eq(i, j)) le[i][j] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (le[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (le[k][j]) le[i][j] = 1;
  }
  DirectedIndex d{base, std::move(le), {}, std::move(delta)};
  d.w = upper ? std::move(*upper) : least_upper_table(base, d.le);
  return d;
}

DirectedIndex chain_index(std::size_t n) {
  std::vector<std::string> names;
  NamePairs order;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i) order.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return make_directed(Setoid::discrete(names), order);
}

namespace {

std::string tri(const DirectedIndex& d, std::size_t i, std::size_t j) { return "(" + d.name(i) + "," + d.name(j) + ")"; }

}  // namespace

Issues validate_directed(const DirectedIndex& d) {
  Issues out;
  std::size_t n = d.size();
  const Setoid& b = d.base;
  for (std::size_t i = 0; i < n; ++i)
    if (!d.leq(i, i)) out.push_back({"reflexivity", d.name(i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d.leq(i, j) && d.leq(j, k) && !d.leq(i, k))
          out.push_back({"transitivity", d.name(i) + "<=" + d.name(j) + "<=" + d.name(k)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!d.leq(i, j)) continue;
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < n; ++j2)
          if (b.eq(i, i2) && b.eq(j, j2) && !d.leq(i2, j2))
            out.push_back({"order extensionality", tri(d, i, j) + " vs " + tri(d, i2, j2)});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = d.upper(i, j);
      if (k >= n || !d.leq(i, k) || !d.leq(j, k))
        out.push_back({"upper bound", tri(d, i, j) + " -> " + (k < n ? d.name(k) : std::string("?"))});
    }
  if (d.delta) {
    const Table2& dl = *d.delta;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d.leq(i, j) && d.leq(j, i) && !b.eq(i, j)) out.push_back({"antisymmetry", tri(d, i, j)});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = dl[i][j];
        if (!d.leq(i, k) || !d.leq(j, k)) out.push_back({"delta1", tri(d, i, j)});
        if (d.leq(i, j) && !(b.eq(k, j) && b.eq(dl[j][i], j))) out.push_back({"delta2", tri(d, i, j)});
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!b.eq(dl[dl[i][j]][k], dl[i][dl[j][k]]))
            out.push_back({"delta3", "(" + d.name(i) + "," + d.name(j) + "," + d.name(k) + ")"});
  }
  return out;
}

std::size_t top_element(const DirectedIndex& d) {
  if (d.size() == 0) fail(ErrorKind::NotDirected, "empty index");
  std::size_t t = 0;
  for (std::size_t i = 1; i < d.size(); ++i) t = d.upper(t, i);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d.leq(i, t)) fail(ErrorKind::NotDirected, "fold of upper bounds is not above " + d.name(i));
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> order_pairs(const DirectedIndex& d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d.leq(i, j)) out.emplace_back(i, j);
  return out;
}

Issues validate_cofinal(const DirectedIndex& d, const CofinalSubset& c) {
  Issues out;
  if (!c.e.cod.same_as(d.base) || !c.e.dom.same_as(c.j) || !c.cof.dom.same_as(d.base) || !c.cof.cod.same_as(c.j)) {
    out.push_back({"shape", "embedding or modulus has the wrong domain/codomain"});
    return out;
  }
  if (!is_extensional(c.e)) out.push_back({"extensionality", "e"});
  if (!is_extensional(c.cof)) out.push_back({"extensionality", "cof"});
  if (auto v = embedding_violation(c.e)) out.push_back({"embedding", c.j.name(v->first) + ", " + c.j.name(v->second)});
  for (std::size_t j = 0; j < c.j.size(); ++j)
    if (!c.j.eq(c.cof(c.e(j)), j)) out.push_back({"Cof1", c.j.name(j)});
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t i2 = 0; i2 < d.size(); ++i2)
      if (d.leq(i, i2) && !d.leq(c.e(c.cof(i)), c.e(c.cof(i2))))
        out.push_back({"Cof2", "(" + d.name(i) + "," + d.name(i2) + ")"});
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d.leq(i, c.e(c.cof(i)))) out.push_back({"Cof3", d.name(i)});
  if (out.empty()) {
    for (std::size_t a = 0; a < c.j.size(); ++a)
      for (std::size_t b = 0; b < c.j.size(); ++b) {
        std::size_t k = c.cof(d.upper(c.e(a), c.e(b)));
        if (!d.leq(c.e(a), c.e(k)) || !d.leq(c.e(b), c.e(k)))
          out.push_back({"cofinal directedness", "(" + c.j.name(a) + "," + c.j.name(b) + ")"});
      }
  }
  return out;
}

DirectedIndex cofinal_index(const DirectedIndex& d, const CofinalSubset& c) {
  std::size_t m = c.j.size();
  DirectedIndex r{c.j, std::vector<std::vector<char>>(m, std::vector<char>(m)), Table2(m, std::vector<std::size_t>(m)),
                  std::nullopt};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      r.le[a][b] = d.leq(c.e(a), c.e(b));
      r.w[a][b] = c.cof(d.upper(c.e(a), c.e(b)));
    }
  return r;
}

DirectedIndex product_order(const DirectedIndex& a, const DirectedIndex& b) {
  Setoid base = product(a.base, b.base);
  std::size_t n = base.size(), nb = b.size();
  DirectedIndex r{base, std::vector<std::vector<char>>(n, std::vector<char>(n)), Table2(n, std::vector<std::size_t>(n)),
                  std::nullopt};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t i = x / nb, j = x % nb, i2 = y / nb, j2 = y % nb;
      r.le[x][y] = a.leq(i, i2) && b.leq(j, j2);
      r.w[x][y] = a.upper(i, i2) * nb + b.upper(j, j2);
    }
  if (a.delta && b.delta) {
    Table2 dl(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) dl[x][y] = (*a.delta)[x / nb][y / nb] * nb + (*b.delta)[x % nb][y % nb];
    r.delta = std::move(dl);
  }
  return r;
}

CofinalSubset product_cofinal(const DirectedIndex& a, const CofinalSubset& ca, const DirectedIndex& b,
                              const CofinalSubset& cb) {
  DirectedIndex p = product_order(a, b);
  Setoid j = product(ca.j, cb.j);
  std::size_t nb = b.size(), mb = cb.j.size();
  SetoidFn e{j, p.base, std::vector<std::size_t>(j.size())};
  for (std::size_t x = 0; x < j.size(); ++x) e.map[x] = ca.e(x / mb) * nb + cb.e(x % mb);
  SetoidFn cof{p.base, j, std::vector<std::size_t>(p.size())};
  for (std::size_t x = 0; x < p.size(); ++x) cof.map[x] = ca.cof(x / nb) * mb + cb.cof(x % nb);
  return CofinalSubset{j, e, cof};
}

}  // namespace bspec

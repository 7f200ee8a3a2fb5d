#pragma once

#include "bspec/setoid.hpp"

#include <optional>

namespace bspec {

using Table2 = std::vector<std::vector<std::size_t>>;

struct DirectedIndex {
  Setoid base;
  std::vector<std::vector<char>> le;  // le[i][j] iff i <= j
  Table2 w;                           // upper bound function
  std::optional<Table2> delta;

  std::size_t size() const { return base.size(); }
  bool leq(std::size_t i, std::size_t j) const { return le[i][j] != 0; }
  std::size_t upper(std::size_t i, std::size_t j) const { return w[i][j]; }
  const std::string& name(std::size_t i) const { return base.name(i); }
};

// Builds the order from pairs. With closure the relation is closed under
// reflexivity, transitivity and the equality of base. Without an upper table
// w(i,j) is the least-index common upper bound.
DirectedIndex make_directed(const Setoid& base, const NamePairs& order, bool closure = true,
                            std::optional<Table2> upper = std::nullopt, std::optional<Table2> delta = std::nullopt);
DirectedIndex chain_index(std::size_t n);
Table2 least_upper_table(const Setoid& base, const std::vector<std::vector<char>>& le);

Issues validate_directed(const DirectedIndex& d);
std::size_t top_element(const DirectedIndex& d);
std::vector<std::pair<std::size_t, std::size_t>> order_pairs(const DirectedIndex& d);

struct CofinalSubset {
  Setoid j;
  SetoidFn e;    // J -> I
  SetoidFn cof;  // I -> J
};

Issues validate_cofinal(const DirectedIndex& d, const CofinalSubset& c);
// J with the order pulled back along e and upper bounds cof(w(e j, e j')).
DirectedIndex cofinal_index(const DirectedIndex& d, const CofinalSubset& c);

DirectedIndex product_order(const DirectedIndex& a, const DirectedIndex& b);
CofinalSubset product_cofinal(const DirectedIndex& a, const CofinalSubset& ca, const DirectedIndex& b,
                              const CofinalSubset& cb);

}  // namespace bspec

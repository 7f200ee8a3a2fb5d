#pragma once

#include "bspec/directed.hpp"

#include <map>

namespace bspec {

// Family over a plain index setoid; transports only along i =_I j.
struct Family {
  Setoid index;
  std::vector<Setoid> carriers;
  std::map<std::pair<std::size_t, std::size_t>, SetoidFn> trans;
};

Issues validate_family(const Family& f);
bool sigma_equality_plain(const Family& f, std::size_t i, std::size_t x, std::size_t j, std::size_t y);

enum class Direction { covariant, contravariant };
std::string_view to_string(Direction d);

// trans[i][j] is set exactly for i <= j. Covariant: carriers[i] -> carriers[j].
// Contravariant: carriers[j] -> carriers[i].
struct DirectFamily {
  DirectedIndex index;
  Direction dir = Direction::covariant;
  std::vector<Setoid> carriers;
  std::vector<std::vector<std::optional<SetoidFn>>> trans;

  std::size_t size() const { return carriers.size(); }
  const SetoidFn& transport(std::size_t i, std::size_t j) const;
};

struct Edge {
  std::size_t i;
  std::size_t j;
  SetoidFn map;
};

// Completes the edges by composition (identities on the diagonal when
// absent). With closure off every order pair must be given and nothing is
// cross-checked; validate_direct_family reports the laws.
DirectFamily make_direct_family(const DirectedIndex& index, Direction dir, std::vector<Setoid> carriers,
                                const std::vector<Edge>& edges, bool closure = true);
DirectFamily constant_family(const DirectedIndex& index, const Setoid& x, Direction dir = Direction::covariant);
Issues validate_direct_family(const DirectFamily& f);

// Flat numbering of the exterior union.
struct SigmaIndex {
  std::vector<std::pair<std::size_t, std::size_t>> elems;
  std::vector<std::size_t> offset;
  std::size_t flat(std::size_t i, std::size_t x) const { return offset[i] + x; }
  std::size_t size() const { return elems.size(); }
};

SigmaIndex sigma_index(const std::vector<Setoid>& carriers);
std::vector<std::string> sigma_names(const DirectedIndex& index, const std::vector<Setoid>& carriers);

// lambda_{i,top}(x)
std::size_t to_top(const DirectFamily& f, std::size_t i, std::size_t x);
bool direct_sum_equality(const DirectFamily& f, std::size_t i, std::size_t x, std::size_t j, std::size_t y);
// Elements of the sum with equality (i,x) = (j,y) iff i =_I j and the transport agrees.
Setoid exterior_union(const DirectFamily& f);
// The sum as a quotient of the exterior union by the direct-sum equality.
Quotient direct_sum(const DirectFamily& f);

enum class Flavor { plain, covariant, contravariant };
using Assignment = std::vector<std::size_t>;

Issues validate_dependent(const DirectFamily& f, const Assignment& phi, Flavor flavor);
Issues validate_dependent(const Family& f, const Assignment& phi);
// All compatible assignments, one per equality class. Throws
// EnumerationBoundExceeded when the product of class counts exceeds bound.
std::vector<Assignment> enumerate_dependent(const DirectFamily& f, std::size_t bound);
std::string assignment_name(const DirectFamily& f, const Assignment& a);
Setoid dependent_setoid(const DirectFamily& f, const std::vector<Assignment>& elems);

struct FamilyMap {
  DirectFamily source;
  DirectFamily target;
  std::vector<SetoidFn> comps;
};

Issues validate_family_map(const FamilyMap& m);
SetoidFn inject(const DirectFamily& f, std::size_t i);  // into exterior_union / direct_sum elements
SetoidFn sigma_map(const FamilyMap& m);                 // between direct sums
SetoidFn proj(const DirectFamily& f, const std::vector<Assignment>& elems, std::size_t i);
SetoidFn pi_map(const FamilyMap& m, const std::vector<Assignment>& src, const std::vector<Assignment>& dst);

struct RawProjection {
  std::vector<std::size_t> table;
  bool extensional;
};

// Sigma -> I. Not a function in general; the flag says whether it is one here.
RawProjection sigma_index_projection(const DirectFamily& f);

DirectFamily restrict_family(const DirectFamily& f, const DirectedIndex& j, const SetoidFn& h);
Family restrict_family(const Family& f, const Setoid& j, const SetoidFn& h);

}  // namespace bspec

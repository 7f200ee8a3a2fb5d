#pragma once

#include "bspec/error.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bspec {

using NamePairs = std::vector<std::pair<std::string, std::string>>;

// A finite setoid. Elements are indices 0..size()-1; equality is stored as
// a class label per element (the least index of its class).
class Setoid {
 public:
  Setoid();

  static Setoid make(std::vector<std::string> names, const NamePairs& eq_pairs = {});
  static Setoid discrete(std::vector<std::string> names);
  // Elements with equal labels are equal.
  static Setoid from_labels(std::vector<std::string> names, const std::vector<std::size_t>& labels);

  std::size_t size() const { return d_->names.size(); }
  bool empty() const { return size() == 0; }
  const std::string& name(std::size_t i) const { return d_->names[i]; }
  const std::vector<std::string>& names() const { return d_->names; }
  std::optional<std::size_t> find(std::string_view n) const;
  std::size_t index(std::string_view n) const;

  bool eq(std::size_t a, std::size_t b) const { return d_->rep[a] == d_->rep[b]; }
  std::size_t rep(std::size_t a) const { return d_->rep[a]; }
  std::size_t class_count() const { return d_->reps.size(); }
  const std::vector<std::size_t>& reps() const { return d_->reps; }
  bool is_discrete() const { return class_count() == size(); }

  // Same names in the same order and the same equality.
  bool same_as(const Setoid& o) const;
  std::string describe() const;

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<std::size_t> rep;
    std::vector<std::size_t> reps;
  };
  std::shared_ptr<const Data> d_;
  static Setoid build(std::vector<std::string> names, std::vector<std::size_t> parent);
};

Setoid product(const Setoid& a, const Setoid& b);
std::string pair_name(const std::string& a, const std::string& b);

// Checks that rel is reflexive, symmetric and transitive on n points.
std::optional<Issue> equivalence_violation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& rel,
                                           const std::function<std::string(std::size_t)>& show);

struct SetoidFn {
  Setoid dom;
  Setoid cod;
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t x) const { return map[x]; }
  static SetoidFn from_names(const Setoid& dom, const Setoid& cod, const NamePairs& table);
};

std::optional<std::pair<std::size_t, std::size_t>> extensionality_violation(const SetoidFn& f);
bool is_extensional(const SetoidFn& f);
void require_extensional(const SetoidFn& f, const std::string& what);
std::optional<std::pair<std::size_t, std::size_t>> embedding_violation(const SetoidFn& f);
bool is_embedding(const SetoidFn& f);

SetoidFn identity(const Setoid& x);
// compose(f, g) applies f first, then g.
SetoidFn compose(const SetoidFn& f, const SetoidFn& g);
bool fn_equal(const SetoidFn& f, const SetoidFn& g);
bool is_inverse_pair(const SetoidFn& f, const SetoidFn& g);
std::string format_fn(const SetoidFn& f);

// Calls visit(table) for every extensional map dom -> cod, one per
// function-equality class. Returns false (without visiting) when the number
// of candidates exceeds bound. visit may return false to stop early.
bool for_each_map(const Setoid& dom, const Setoid& cod, std::size_t bound,
                  const std::function<bool(const std::vector<std::size_t>&)>& visit);

struct Quotient {
  Setoid base;
  Setoid quotient;  // same elements, coarser equality
};

Quotient quotient_by(const Setoid& x, const std::function<bool(std::size_t, std::size_t)>& rel);
SetoidFn quotient_map(const Quotient& q);

enum class Uniqueness { unique, not_unique, skipped };
std::string_view to_string(Uniqueness u);

struct Factorization {
  SetoidFn map;
  Uniqueness uniqueness = Uniqueness::skipped;
};

Factorization factor_through_quotient(const SetoidFn& f, const Quotient& q, std::size_t bound);

struct Subset {
  Setoid carrier;
  SetoidFn embed;
};

Subset make_subset(const Setoid& carrier, const SetoidFn& embed);

}  // namespace bspec

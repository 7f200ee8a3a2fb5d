#pragma once

#include "bspec/spectrum.hpp"

namespace bspec {

struct DirectLimit {
  Spectrum spec;
  SumSpace sum;

  const BSpace& space() const { return sum.space; }
  const Setoid& carrier() const { return sum.space.carrier; }
  std::size_t flat(std::size_t i, std::size_t x) const { return sum.idx.flat(i, x); }
  std::pair<std::size_t, std::size_t> element(std::size_t a) const { return sum.idx.elems[a]; }
  // flat index of (top, lambda_{i,top}(x))
  std::size_t canonical(std::size_t a) const;
};

DirectLimit direct_limit(const Spectrum& s, const ThreadOptions& opt = {}, std::vector<Thread> extra = {});
Issues validate_direct_limit(const DirectLimit& l);
SetoidFn eql(const DirectLimit& l, std::size_t i);
MorphismWitness eql_witness(const DirectLimit& l, std::size_t i);
Cert certify_thread(const DirectLimit& l, const Thread& t);

struct Cocone {
  BSpace apex;
  std::vector<MorphismWitness> legs;
};

Issues validate_cocone(const Spectrum& s, const Cocone& c, const CertOptions& opt = {});
Cocone own_cocone(const DirectLimit& l);

struct Mediator {
  MorphismWitness h;
  Issues issues;
  Uniqueness uniqueness = Uniqueness::skipped;
};

// Throws IllFormedCocone when the cocone does not validate.
Mediator cocone_mediator(const DirectLimit& l, const Cocone& c, std::size_t uniq_bound = 1000000,
                         const CertOptions& opt = {});

struct LimitMap {
  SetoidFn map;
  std::optional<MorphismWitness> witness;
  bool components_embeddings = false;
  bool embedding = false;
  Issues issues;
};

LimitMap limit_map(const SpectrumMap& psi, const DirectLimit& src, const DirectLimit& dst, const CertOptions& opt = {});

struct Representatives {
  std::size_t index;
  std::vector<std::size_t> elems;
};

// An iterated upper bound of the indices and elements there representing the
// given sum elements. With canonicalize the inputs are first replaced by
// their top representatives.
Representatives common_representatives(const DirectLimit& l, const std::vector<std::size_t>& elems,
                                       bool canonicalize = false);

Spectrum relative_spectrum(const Spectrum& s, const DirectedIndex& j, const SetoidFn& e);

struct IsoReport {
  SetoidFn phi;    // J-limit -> I-limit
  SetoidFn theta;  // I-limit -> J-limit
  std::optional<MorphismWitness> phi_w;
  std::optional<MorphismWitness> theta_w;
  Issues issues;
};

IsoReport cofinal_direct_iso(const Spectrum& s, const CofinalSubset& c, const ThreadOptions& topt = {},
                             const CertOptions& opt = {});

Spectrum product_spectrum(const Spectrum& s, const Spectrum& t);

struct ProductLimitReport {
  SetoidFn theta;  // Lim(S x T) -> Lim S x Lim T
  std::optional<MorphismWitness> w;
  std::size_t classes_product = 0;
  std::size_t classes_s = 0;
  std::size_t classes_t = 0;
  Issues issues;
};

ProductLimitReport product_limit_bijection(const Spectrum& s, const Spectrum& t, const ThreadOptions& topt = {},
                                           const CertOptions& opt = {});

struct InverseLimit {
  Spectrum spec;
  std::vector<Assignment> elems;
  BSpace space;                                     // generators f o pi_i
  std::vector<std::vector<std::size_t>> gen_index;  // [i][k]

  const Setoid& carrier() const { return space.carrier; }
  std::optional<std::size_t> find(const Assignment& a) const;
};

InverseLimit inverse_limit(const Spectrum& s, std::size_t bound = 1000000);
SetoidFn pi(const InverseLimit& l, std::size_t i);
MorphismWitness pi_witness(const InverseLimit& l, std::size_t i);

struct Cone {
  BSpace apex;
  std::vector<MorphismWitness> legs;
};

Issues validate_cone(const Spectrum& s, const Cone& c, const CertOptions& opt = {});
Cone own_cone(const InverseLimit& l);
Mediator cone_mediator(const InverseLimit& l, const Cone& c, std::size_t uniq_bound = 1000000,
                       const CertOptions& opt = {});
LimitMap inverse_limit_map(const SpectrumMap& psi, const InverseLimit& src, const InverseLimit& dst,
                           const CertOptions& opt = {});
IsoReport cofinal_inverse_iso(const Spectrum& s, const CofinalSubset& c, std::size_t bound = 1000000,
                              const CertOptions& opt = {});

struct ProductInverseReport {
  ProductSpace domain;  // Lim S x Lim T
  SetoidFn map;
  std::optional<MorphismWitness> w;
  Issues issues;
};

ProductInverseReport product_inverse_morphism(const Spectrum& s, const Spectrum& t, std::size_t bound = 1000000,
                                              const CertOptions& opt = {});

}  // namespace bspec

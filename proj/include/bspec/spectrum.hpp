#pragma once

#include "bspec/family.hpp"
#include "bspec/topology.hpp"

namespace bspec {

struct Spectrum {
  DirectFamily fam;
  std::vector<BSpace> spaces;
  // wit[i][j] for i <= j, oriented like the transport.
  std::vector<std::vector<std::optional<MorphismWitness>>> wit;

  std::size_t size() const { return spaces.size(); }
  const DirectedIndex& index() const { return fam.index; }
  const MorphismWitness& witness(std::size_t i, std::size_t j) const;
};

struct EdgeWitness {
  std::size_t i;
  std::size_t j;
  MorphismWitness w;
};

// Missing witnesses come from composition, identities, or (with auto_fill)
// certificate search. Throws MissingCertificate if a pair stays uncovered.
Spectrum make_spectrum(DirectFamily fam, std::vector<BSpace> spaces, const std::vector<EdgeWitness>& given,
                       bool auto_fill = true);
Spectrum constant_spectrum(const DirectedIndex& index, const BSpace& b, Direction dir = Direction::covariant);
Issues validate_spectrum(const Spectrum& s, const CertOptions& opt = {});

struct SpectrumMap {
  Spectrum src;
  Spectrum dst;
  std::vector<SetoidFn> comps;
  std::optional<std::vector<MorphismWitness>> cont;
};

FamilyMap family_map(const SpectrumMap& m);
Issues validate_spectrum_map(const SpectrumMap& m, const CertOptions& opt = {});
SpectrumMap identity_map(const Spectrum& s);
SpectrumMap compose_maps(const SpectrumMap& psi, const SpectrumMap& xi);
// Continuity witnesses by certificate search; nullopt if one is not found.
std::optional<std::vector<MorphismWitness>> auto_continuity(const Spectrum& src, const Spectrum& dst,
                                                            const std::vector<SetoidFn>& comps);

struct Thread {
  std::vector<Values> vals;
  std::vector<Cert> certs;
};

Issues validate_thread(const Spectrum& s, const Thread& t, const CertOptions& opt = {});
Thread constant_thread(const Spectrum& s, const Rational& q);
// Theta_i = v o lambda_{i,top}; certificates lifted along the edge witnesses.
Thread thread_from_top(const Spectrum& s, const Values& v, const Cert& c);
// f_Theta on the flat exterior-union numbering. Throws IncompatibleThread.
Values thread_to_sum_function(const Spectrum& s, const Thread& t);
Values thread_to_sum_function(const Spectrum& s, const Thread& t, const Quotient& sum);

struct SumSpace {
  Quotient sum;
  SigmaIndex idx;
  std::size_t top = 0;
  std::vector<Thread> threads;
  std::vector<std::size_t> top_gen;  // thread induced by the k-th top generator, if enumerated
  BSpace space;                      // generators f_Theta
  std::optional<MorphismWitness> can;  // (i,x) -> lambda_{i,top}(x) into spaces[top]
};

struct ThreadOptions {
  Values const_pool{Rational(0), Rational(1)};
  std::size_t thread_bound = 10000;
  bool enumerate = true;  // top generators and pool constants
};

SumSpace sum_space(const Spectrum& s, std::vector<Thread> extra = {}, const ThreadOptions& opt = {});
// Certificate for f_Theta over the sum space, via the top generators.
Cert certify_sum(const Spectrum& s, const SumSpace& sum, const Thread& t);

Thread pullback_thread(const SpectrumMap& psi, const Thread& h);
Issues check_sum_morphisms(const SpectrumMap& psi, const SumSpace& src, const SumSpace& dst, const CertOptions& opt = {});
bool check_induced_square(const SpectrumMap& psi, std::size_t i, std::size_t j);

}  // namespace bspec

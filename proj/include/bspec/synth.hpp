#pragma once

#include "bspec/topology.hpp"

namespace bspec {

// Bounded certificate search using Gen/Const/Add/Bic nodes only. Looks for
// a linear combination L of generators through which the target factors and
// interpolates the target as a piecewise linear function of L. Returns
// nullopt when nothing is found; this never claims non-membership.
std::optional<Cert> synthesize_certificate(const BSpace& b, const Values& target);

std::optional<MorphismWitness> auto_witness(const BSpace& src, const BSpace& dst, const SetoidFn& h);

// Every set map src -> dst (one per equality class) for which auto_witness
// succeeds. Throws EnumerationBoundExceeded past bound candidate maps.
std::vector<MorphismWitness> enumerate_morphisms(const BSpace& src, const BSpace& dst, std::size_t bound);

}  // namespace bspec

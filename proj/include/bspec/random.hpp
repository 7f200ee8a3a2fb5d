#pragma once

#include <random>

#include "bspec/limits.hpp"

namespace bspec::gen {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n);
bool coin(Rng& rng, std::size_t num = 1, std::size_t den = 2);

// All directed preorders on 1..max_size points, one per isomorphism class.
std::vector<DirectedIndex> directed_preorders(std::size_t max_size);

// Discrete base names "0".."n-1"; non-discrete carriers with probability 1/4.
// Element 0 of every carrier is fixed by every transport.
DirectFamily random_family(Rng& rng, const DirectedIndex& d, Direction dir, std::size_t max_carrier);

Values random_values(Rng& rng, std::size_t n, long lo = -2, long hi = 2);
Values random_class_values(Rng& rng, const Setoid& s, long lo = -2, long hi = 2);

// Subbases pulled back along the transports so that every edge has
// generator certificates.
Spectrum random_spectrum(Rng& rng, const DirectedIndex& d, Direction dir, std::size_t max_carrier,
                         std::size_t max_extra = 2);

// A spectrum map out of s into a relabelled and coarsened copy of s.
SpectrumMap random_spectrum_map(Rng& rng, const Spectrum& s);

// J always contains an element of the top class.
CofinalSubset random_cofinal(Rng& rng, const DirectedIndex& d);

BSpace random_space(Rng& rng, std::size_t max_points, std::size_t max_gens);
Cocone random_cocone(Rng& rng, const DirectLimit& l, std::size_t max_apex);
Cone random_cone(Rng& rng, const InverseLimit& l, std::size_t max_apex);

Bic random_bic(Rng& rng, std::size_t depth);
Cert random_certificate(Rng& rng, std::size_t gens, std::size_t depth);
// A random morphism src -> dst with generator certificates; src subbase
// contains the pulled back generators of dst plus extras.
struct RandomMorphism {
  BSpace src;
  BSpace dst;
  MorphismWitness w;
};
RandomMorphism random_morphism(Rng& rng, std::size_t max_points, std::size_t max_gens);

}  // namespace bspec::gen

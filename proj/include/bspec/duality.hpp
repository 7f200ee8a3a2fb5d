#pragma once

#include "bspec/limits.hpp"

namespace bspec {

// lambda: G -> H. plus(lambda)(phi) = phi o lambda for phi: H -> F.
MorphismWitness plus_apply(const MorphismWitness& lambda, const MorphismWitness& phi);
// mu: H -> G. minus(mu)(theta) = mu o theta for theta: F -> H.
MorphismWitness minus_apply(const MorphismWitness& mu, const MorphismWitness& theta);

// As maps between pools; throws PoolNotClosed when an image is not pooled.
// from = Mor(H,F), to = Mor(G,F).
MorphismWitness plus_map(const MorphismWitness& lambda, const ExpSpace& from, const ExpSpace& to);
// from = Mor(F,H), to = Mor(F,G).
MorphismWitness minus_map(const MorphismWitness& mu, const ExpSpace& from, const ExpSpace& to);

Issues validate_pool(const ExpSpace& pool, const CertOptions& opt = {});
// The operator lambda |-> lambda+ as a morphism Mor(G,H) -> (Mor(H,F) -> Mor(G,F)).
Issues check_plus_operator(const ExpSpace& gh, const ExpSpace& hf, const ExpSpace& gf, const CertOptions& opt = {});
// The operator mu |-> mu- as a morphism Mor(H,G) -> (Mor(F,H) -> Mor(F,G)).
Issues check_minus_operator(const ExpSpace& hg, const ExpSpace& fh, const ExpSpace& fg, const CertOptions& opt = {});

// A_i: Mor(F_i,F), contravariant. A_ii: Mor(F,F_i), covariant (from a
// covariant source). B_i: Mor(F_i,F), covariant. B_ii: Mor(F,F_i),
// contravariant (from a contravariant source).
enum class Shape { A_i, A_ii, B_i, B_ii };
std::string_view to_string(Shape s);
std::optional<Shape> parse_shape(std::string_view s);

struct InducedSpectrum {
  Shape shape;
  std::vector<ExpSpace> pools;
  Spectrum spec;
};

InducedSpectrum induce_spectrum(const Spectrum& s, const BSpace& f, Shape shape,
                                std::vector<std::vector<MorphismWitness>> pools);
std::vector<std::vector<MorphismWitness>> generate_pools(const Spectrum& s, const BSpace& f, Shape shape,
                                                         std::size_t bound);

struct DualityOptions {
  ThreadOptions threads;
  CertOptions certs;
  std::size_t bound = 1000000;
};

struct DualityReport {
  SetoidFn forward;   // theta or e: left -> right
  SetoidFn backward;  // phi: right -> left
  std::optional<MorphismWitness> forward_w;
  std::optional<MorphismWitness> backward_w;
  std::size_t left_size = 0;  // class counts
  std::size_t right_size = 0;
  bool embedding = false;
  Issues issues;
};

// Lim<-(F_i -> F) against Mor(Lim-> F_i, F).
DualityReport duality_direct_to_inverse(const Spectrum& s, const BSpace& f,
                                        std::vector<std::vector<MorphismWitness>> pools,
                                        std::optional<std::vector<MorphismWitness>> right = std::nullopt,
                                        const DualityOptions& opt = {});
// Lim<-(F -> F_i) against Mor(F, Lim<- F_i).
DualityReport duality_inverse_hom(const Spectrum& s, const BSpace& f, std::vector<std::vector<MorphismWitness>> pools,
                                  std::optional<std::vector<MorphismWitness>> right = std::nullopt,
                                  const DualityOptions& opt = {});

struct ConverseReport {
  SetoidFn hat;
  std::optional<MorphismWitness> w;
  bool hypothesis = true;
  std::optional<bool> embedding;
  std::vector<std::string> notices;  // HypothesisFails(j, y)
  Issues issues;
};

// Lim->[Mor(F_i,F)] -> Mor(Lim<- F_i, F) for a contravariant source.
ConverseReport converse_dual(const Spectrum& s, const BSpace& f, std::vector<std::vector<MorphismWitness>> pools,
                             std::optional<std::vector<MorphismWitness>> target = std::nullopt,
                             const DualityOptions& opt = {});
// Lim->[Mor(F,F_i)] -> Mor(F, Lim-> F_i) for a covariant source.
ConverseReport converse_dual2(const Spectrum& s, const BSpace& f, std::vector<std::vector<MorphismWitness>> pools,
                              std::optional<std::vector<MorphismWitness>> target = std::nullopt,
                              const DualityOptions& opt = {});

}  // namespace bspec

#pragma once

#include "bspec/limits.hpp"

namespace bspec::fixtures {

DirectedIndex chain3();
// Covariant over CHAIN3: {a,b} -> {u,v} -> {z}.
DirectFamily collapse();
// Discrete {p,q} with the single generator p=>0, q=>1.
BSpace x2();
SetoidFn swap_x2();
// COLLAPSE with subbases {a=>0,b=>1}, {u=>0,v=>1}, {z=>0}.
Spectrum cspec();
// The constant covariant spectrum over CHAIN3 on X2.
Spectrum constant_x2(Direction dir = Direction::covariant);
// Chain {0..2m} with the even numbers as cofinal subset.
DirectedIndex eo_index(std::size_t m);
CofinalSubset eo_cofinal(std::size_t m);
// Contravariant over CHAIN3: {z} -> {u,v} -> {a,b}, z=>u, u=>a, v=>b.
// Only (a,u,z) is a thread, so (0,b) and (1,v) have no representative.
Spectrum rcollapse();
// Contravariant over CHAIN3 on {p,q} with a swap from 2 to 1.
Spectrum rswap();
BSpace point();

}  // namespace bspec::fixtures

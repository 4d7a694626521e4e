#pragma once

#include <cstddef>
#include <vector>

#include "odolab/scales.hpp"

namespace odolab {

// An element of the inverse limit of Z/p_1 <- Z/p_2 <- ... , truncated at a
// finite depth: residues[i] is the value mod term(i+1), and consecutive
// residues must be coherent (each reduces to the previous one). Everything
// in odolab computes at such finite truncations; no operation pretends to
// see the full limit, and operations that would need more depth than they
// were given say so via DepthError.
struct OdometerElement {
    Scale scale;
    std::vector<Bigint> residues;

    std::size_t depth() const { return residues.size(); }

    // Deepest known residue (value mod term(depth)).
    const Bigint& value() const;

    // Checks scale validity, residue ranges, and coherence.
    void validate() const;

    bool operator==(const OdometerElement&) const = default;
};

// The integer m reduced mod every term up to `depth`.
OdometerElement embed_integer(const Scale& s, const Bigint& m, std::size_t depth);

// Coordinatewise sum; scales and depths must agree.
OdometerElement add(const OdometerElement& a, const OdometerElement& b);
OdometerElement negate(const OdometerElement& a);

// 2-adic-flavoured ultrametric at truncation: 2^-k where k is the first
// level at which the residues differ. When no level distinguishes them the
// distance is only known to be at most 2^-(depth+1); that bound is reported
// rather than rounded to zero.
struct Distance {
    bool truncation_limited = false; // true: all compared levels agreed
    std::size_t exponent = 0;        // distance = 2^-exponent (or <= it)
    bool operator==(const Distance&) const = default;
};
Distance distance(const OdometerElement& a, const OdometerElement& b);

// How the translation x -> x + m splits the chain at truncation.
//   splitting: s = lim_k gcd(m, term(k)), the number of components;
//   cotorsion: t = m / s, the step the translation induces inside each one;
//   component_profile: the multiplicity profile of one component;
//   stabilization_index: least k with gcd(m, term(k)) = s.
// The limit is exact: the scale's profile says how much of each prime of m
// the chain will ever absorb.
struct ComponentDecomposition {
    Bigint multiplier;  // m
    Bigint splitting;   // s
    Bigint cotorsion;   // t
    MultiplicityProfile component_profile;
    std::size_t stabilization_index = 0;
    bool operator==(const ComponentDecomposition&) const = default;
};
ComponentDecomposition component_count(const Scale& scale, const Bigint& m);

// Which of the s components x lies in: its residue at the stabilization
// level, reduced mod s.  Requires depth(x) >= stabilization index.
Bigint component_of(const OdometerElement& x, const Bigint& m);

// For m fully absorbed by the chain (m | term(k) for some k <= depth):
// rebases y - x along the sub-chain term(k+i)/m, producing the element z
// with the defining property  phi(y + m) = phi(y) + 1  for the rebasing phi
// anchored at x. Errors: m not absorbed within depth (DepthError), or y not
// in the same +m-component as x.
OdometerElement conjugacy_to_component(const Scale& scale, const Bigint& m,
                                       const OdometerElement& x,
                                       const OdometerElement& y);

// The structural data of the symmetry group of the translation x -> x + m:
// s components, each carrying a copy of the chain with profile
// component_profile, presented concretely by component_scale (the original
// chain seen past the stabilization level, with its first term divided down
// by s).
struct TranslationStructure {
    ComponentDecomposition decomposition;
    Scale component_scale;
};
TranslationStructure aut_structure(const Scale& scale, const Bigint& m);

} // namespace odolab

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "odolab/bigint.hpp"

namespace odolab {

// A scale is a divisibility chain p_1 | p_2 | p_3 | ... presented by its
// successive ratios p_{k+1}/p_k, with an eventually periodic tail: `head`
// holds the initial ratios, `cycle` repeats forever afterwards. Examples:
//   head = {},  cycle = {2}    ->  2, 4, 8, 16, ...        (the 2-power chain)
//   head = {12}, cycle = {5}   ->  12, 60, 300, 1500, ...
//   head = {1, 2}, cycle = {3} ->  1, 2, 6, 18, 54, ...
// Every ratio must be >= 1 and the cycle product must be >= 2, so the chain
// genuinely diverges; a would-be "finite scale" (cycle product 1) is
// rejected, because the structures built on top of scales only make sense
// for unbounded chains.
struct Scale {
    std::vector<Bigint> head;
    std::vector<Bigint> cycle;

    // Throws ScaleError when a ratio is < 1, the cycle is empty, or the
    // cycle product is < 2.
    void validate() const;

    // k-th ratio, 1-based: head while it lasts, then the cycle repeats.
    Bigint ratio(std::size_t k) const;

    // k-th term p_k = product of the first k ratios; term(0) = 1.
    Bigint term(std::size_t k) const;

    bool operator==(const Scale&) const = default;
};

// How often a prime divides the chain in the limit: either a finite exponent
// (the prime eventually stops accumulating) or infinite (it divides the
// cycle product, so it accumulates forever).
struct Multiplicity {
    bool infinite = false;
    unsigned exponent = 0; // meaningful only when !infinite

    static Multiplicity inf() { return {true, 0}; }
    static Multiplicity fin(unsigned e) { return {false, e}; }
    bool operator==(const Multiplicity&) const = default;
};

// prime -> multiplicity, with absent primes meaning exponent 0. Keys are kept
// sorted (std::map) so every serialization of a profile is deterministic.
using MultiplicityProfile = std::map<Bigint, Multiplicity>;

enum class TorsionClass {
    TorsionFree,     // no prime with finite nonzero multiplicity
    FiniteTorsion,   // finitely many such primes (always the case here)
    InfiniteTorsion, // not representable by an eventually periodic scale
};

struct Decomposition {
    std::vector<Bigint> infinite_primes;    // sorted
    std::map<Bigint, unsigned> finite_part; // prime -> exponent >= 1
    bool operator==(const Decomposition&) const = default;
};

// The complete multiplicity profile of a scale. Infinite support = primes of
// the cycle product; finite exponents come from the head product (a prime
// that appears in any cycle ratio is already infinite).
MultiplicityProfile multiplicity_profile(const Scale& s);

// Two scales are equivalent iff their profiles coincide; equivalence is what
// the structures downstream actually depend on.
bool equivalent(const Scale& a, const Scale& b);

// a precedes b iff they have the same infinite support and every finite
// exponent of a is <= the matching exponent of b (absent = 0). This is the
// divisibility-flavoured partial order on profiles.
bool precedes(const Scale& a, const Scale& b);

// Orders of the primary components of the torsion part: p^e for every prime
// with finite multiplicity e >= 1, listed in increasing prime order.
std::vector<Bigint> torsion_subgroup(const Scale& s);

TorsionClass classify(const Scale& s);

// Splits the profile into infinite support and finite part.
Decomposition decompose(const Scale& s);

// Equivalent scale in which every ratio is prime (ratios are split into
// their prime factors in increasing order; ratio 1 disappears).
Scale prime_refine(const Scale& s);

// Canonical scale with a prescribed profile: one head ratio carrying the
// whole finite part, cycle = the infinite-support primes in increasing
// order. Throws ScaleError when the infinite support is empty (that profile
// belongs to a finite chain, which Scale cannot and should not represent).
Scale scale_from_profile(const MultiplicityProfile& profile);

// The scale seen from level k onward: drops the first k ratios, so
// shifted.term(i) = s.term(k + i) / s.term(k). Used to present component
// structures, which live one or more levels down the chain.
Scale scale_shift(const Scale& s, std::size_t k);

std::string to_string(const Multiplicity& m);
std::string to_string(const MultiplicityProfile& p);
std::string to_string(TorsionClass c);

} // namespace odolab

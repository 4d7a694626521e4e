#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "odolab/bigint.hpp"

// Independent cross-check machinery. Everything in this namespace recomputes
// results by explicit traversal, enumeration, or exhaustive search, touching
// no closed-form shortcuts (no gcd tricks, no factorials-by-formula) and no
// code from the modules it validates. The point is that two genuinely
// different computations agree; keep it that way when editing.
namespace odolab::oracle {

// Number of orbits of x -> x + step on Z/modulus, found by walking every
// orbit with a visited table.
std::uint64_t orbit_count(std::uint64_t modulus, std::uint64_t step);

// Number of bijections f of Z/modulus with f(x + step) = f(x) + step,
// counted constructively: walk the orbits of x -> x + step, then count, one
// orbit representative at a time, the available equal-size target orbits
// times the rotation offsets inside the chosen orbit. No closed form is
// evaluated anywhere; the factors are literally "how many unused targets did
// the scan find".
Bigint commuting_bijections_count(std::uint64_t modulus, std::uint64_t step);

// Same count by brute force over all modulus! bijections (next_permutation),
// testing the commutation pointwise. Only for modulus <= 8; used to validate
// the constructive counter. Throws BudgetError beyond that.
Bigint commuting_bijections_count_by_scan(std::uint64_t modulus, std::uint64_t step);

// Order of the largest subgroup of the finite model (Z/modulus)^d x Sym(d)
// (multiplication (a,pi)*(b,rho) = ((a_{rho^-1(i)} + b_i)_i, rho after pi))
// all of whose elements have every component killed by torsion_order:
// torsion_order * a_i = 0 mod modulus (torsion_order = 0 means no
// restriction). Found by explicit subgroup enumeration: build the whole
// multiplication table, then BFS over subgroup closures, adding one
// generator at a time. The group order modulus^d * d! must stay within
// `budget` elements (default 200); otherwise BudgetError.
Bigint max_subgroup_order(std::uint64_t modulus, std::uint64_t d,
                          std::uint64_t torsion_order,
                          std::uint64_t budget = 200);

// A binary local rule of radius r: `table` bit number b gives the output
// symbol for the neighborhood whose 2r+1 symbols, read left to right, spell
// b in binary (leftmost symbol = highest bit).
struct LocalRule {
    int radius = 0;
    std::uint32_t table = 0;

    // Applies the rule across `word` (symbols '0'/'1'), producing a word
    // shorter by 2*radius.
    std::string apply(const std::string& word) const;

    auto operator<=>(const LocalRule&) const = default;
};

struct BlockCodeScan {
    // Every table that passed all checks.
    std::vector<LocalRule> qualifying;
    // One representative per distinct action on the window language (two
    // tables that agree on every occurring neighborhood collapse), smallest
    // table first.
    std::vector<LocalRule> representatives;
    // The action fingerprints behind `representatives`: for each, the images
    // of the sorted test-length factors. Comparable across runs.
    std::vector<std::vector<std::string>> actions;
    bool degenerate = false; // the window had no factor of test length
};

// Exhaustive scan over all radius-r binary local rules against the factor
// language of `window` (characters '0', '1', and '?' for unknown; factors
// never cross a '?'). A rule qualifies when, at the given test length L:
//   - image preservation: the image of every length-L factor is again a
//     factor;
//   - injectivity certificate: whenever two length-L factors have equal
//     images, they agree outside a boundary margin of `margin` symbols per
//     side (so an inverse local rule of radius <= margin - radius exists on
//     the window language);
//   - commutation with the m-fold shift, checked explicitly on factors of
//     length L + shift_power even though radius-r rules are position
//     independent: a consistency check, executed rather than assumed.
// Enumerating radius 2 means 2^32 tables and always exceeds the budget
// (given in table evaluations); the scan fails loudly rather than sample.
BlockCodeScan block_code_autos(const std::string& window, int radius,
                               std::uint64_t shift_power,
                               std::size_t test_length = 24,
                               std::size_t margin = 7,
                               std::uint64_t budget = 4096);

} // namespace odolab::oracle

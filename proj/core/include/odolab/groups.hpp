#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "odolab/odometer.hpp"

namespace odolab {

// The symmetry group of the translation x -> x + level on the chain `base`,
// presented at truncation: `splitting()` components, each twisted by an
// element of the component chain, plus an arbitrary permutation of the
// components. Concretely the group is
//     (component chain)^s  x|  Sym(s),      s = splitting(),
// and it acts on Z/term(k + D) for any twist depth D, where k is the
// stabilization level of the splitting.
struct GroupDescriptor {
    Scale base;
    Bigint level;
    TranslationStructure structure;     // derived from (base, level)
    std::size_t stabilization = 0;      // k above
    std::uint64_t components = 1;       // s as a machine word

    bool operator==(const GroupDescriptor& o) const {
        return base == o.base && level == o.level;
    }
};

GroupDescriptor make_group_descriptor(const Scale& base, const Bigint& level);

// A group element: one twist per component (all at a common depth over the
// component chain) and a permutation of the component slots.
//
// Composition convention: in a product a*b the factor a acts first; the
// permutation of a*b is i -> b.perm[a.perm[i]], and the realized bijections
// compose as act(a*b) = act(b) after act(a). The twist combination rule is
// c_i = a_{b.perm^-1(i)} + b_i: the twist that a deposited in the slot that
// b then moved onto i, plus b's own twist there. This is the unique
// associative completion of that twist rule.
struct SemidirectElement {
    GroupDescriptor group;
    std::vector<OdometerElement> twists;
    std::vector<std::size_t> perm;

    std::size_t twist_depth() const;
    bool operator==(const SemidirectElement&) const = default;
};

SemidirectElement sd_identity(const GroupDescriptor& g, std::size_t twist_depth);
SemidirectElement sd_mul(const SemidirectElement& a, const SemidirectElement& b);
SemidirectElement sd_inv(const SemidirectElement& a);

// The element realized as a bijection of Z/N, N = term(stabilization +
// twist depth): position x sits in component i = x mod s at height
// (x - i)/s; the element sends it into component perm[i], raising the
// height by the twist of the target slot. N must stay within `budget`
// entries (loud BudgetError otherwise: bijections are only ever
// materialized at desk scale).
std::vector<std::uint64_t> act(const SemidirectElement& e,
                               std::uint64_t budget = std::uint64_t(1) << 22);

// Reads a bijection of Z/term(K) back into the level-term(k) presentation
// (components = classes mod term(k), twist depth K - k). Fails with Error
// when the bijection does not have that shape, i.e. does not respect the
// mod-term(k) classes as an affine tower map.
SemidirectElement factor_at_level(const Scale& base, std::size_t k,
                                  const std::vector<std::uint64_t>& bijection);

// Moves an element of the level-term(k) presentation into the level-
// term(k+1) presentation of the same underlying bijection: realize, then
// refactor one level deeper. The twist depth shrinks by one; DepthError
// when that would leave nothing.
SemidirectElement inclusion_jk(const SemidirectElement& e, std::size_t k);

// Order of the largest finite subgroup: |T|^s * s!, where T is the torsion
// part of one component and s the number of components. The torsion part
// must be finite (it always is for eventually periodic chains; the guard is
// kept for the data model's sake).
Bigint max_finite_subgroup_order(const GroupDescriptor& g);

struct FGrowthPoint {
    Bigint level;
    Bigint order; // max finite subgroup order at that level
    bool operator==(const FGrowthPoint&) const = default;
};

// Largest-finite-subgroup orders along a divisibility chain of levels
// (each level must divide the next; Error otherwise).
std::vector<FGrowthPoint> f_sequence(const Scale& base,
                                     const std::vector<Bigint>& levels);

enum class VerdictKind {
    Equivalent,             // equal profiles: no invariant will separate them
    InfiniteSupportDiffers, // a prime power walk separates the growth orders
    TorsionDiffers,         // only the finite parts differ; see the caveat
};

struct DistinguishVerdict {
    VerdictKind kind = VerdictKind::Equivalent;
    Bigint witness_prime = 0;  // smallest prime in the support difference
    Bigint divergence_level = 0; // first level q^j where the orders differ
    std::vector<FGrowthPoint> exhibit_left, exhibit_right; // along q^0..q^j
    std::vector<Bigint> torsion_left, torsion_right;
    std::string note;
};

// Decides what the growth-order invariant can and cannot say about two
// chains. Equal profiles: Equivalent. Different infinite support: walks
// levels q^j of the smallest separating prime until the growth orders
// differ and returns both exhibits. Same infinite support: reports both
// torsion subgroups with an explicit caveat that growth orders cannot
// separate such chains and only the torsion-free case carries a full
// structure invariance guarantee.
DistinguishVerdict distinguish(const Scale& a, const Scale& b);

struct CentralizerGapWitness {
    SemidirectElement element; // a pure permutation (rotation of components)
    Bigint commuting_level;    // it commutes with x -> x + this
    Bigint ambient_modulus;    // both facts verified on Z/this
};

// Produces an element commuting with the translation by q * x but not with
// the translation by x, certifying that the two centralizers differ at the
// given truncation. Requires q in the infinite support and enough depth to
// see one extra factor q beyond what divides x's deepest residue; both the
// commutation and the non-commutation are verified on Z/term(depth) before
// the witness is returned.
CentralizerGapWitness centralizer_gap_witness(const Scale& base,
                                              const OdometerElement& x,
                                              const Bigint& q);

} // namespace odolab

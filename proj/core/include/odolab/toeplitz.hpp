#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "odolab/bigint.hpp"
#include "odolab/odometer.hpp"
#include "odolab/scales.hpp"

namespace odolab {

// Cell value for a position the staged filling has not reached yet.
inline constexpr int kHole = -1;

// A finite window of a {0,1}-sequence built by periodic filling.  Cells carry
// the symbol (0, 1, or kHole) plus an annotation: the structure period of the
// stage that wrote the cell (0 for holes).  Positions are absolute; cell i of
// the vectors describes sequence position lo + i.
struct ToeplitzWindow {
    std::int64_t lo = 0;
    std::vector<int> cells;
    std::vector<Bigint> annotations;

    std::int64_t hi() const { return lo + static_cast<std::int64_t>(cells.size()); }
    bool contains(std::int64_t pos) const { return pos >= lo && pos < hi(); }
    int symbol(std::int64_t pos) const;
    const Bigint& annotation(std::int64_t pos) const;
};

// One stage of a filling rule.  A constant stage writes `symbol` on every cell
// it claims; an alternating stage writes 0 and 1 on alternate claimed cells,
// which doubles the period the written cells are constant on.
struct FillStage {
    bool alternate = false;
    int symbol = 0;
};

// An eventually-periodic staged filling rule together with the divisibility
// chain its stages are declared against.
struct FillRule {
    std::string name;                // "paper53", "paper54", or "" for ad hoc rules
    std::vector<FillStage> head;     // stages used once, in order
    std::vector<FillStage> cycle;    // stages repeated forever afterwards
    Scale structure;                 // declared period structure p_1 | p_2 | ...

    void validate() const;
    const FillStage& stage(std::size_t j) const;  // 1-based stage index
    std::size_t stage_count() const { return head.size() + cycle.size(); }
};

// The two chart rules: alternating 0/1 constant stages on the (2^n) chain, and
// all-alternating stages on the (4^n) chain.
FillRule rule_paper53();
FillRule rule_paper54();

// Builds a rule from explicit stages.  The declared structure chain is derived
// from the exact fill periods of the stages (each term the lcm of the periods
// seen so far), so annotations always divide the declared terms.
FillRule make_fill_rule(std::vector<FillStage> head, std::vector<FillStage> cycle);

// Runs the first `stages` filling stages of `rule` and returns the window of
// positions [lo, hi).  Stage j fills a fresh congruence class of the holes
// left by stages 1..j-1; annotations record the declared structure period of
// the writing stage.  stages == 0 gives an all-hole window.
ToeplitzWindow generate(const FillRule& rule, std::size_t stages,
                        std::int64_t lo, std::int64_t hi);

// The window for sigma^shift of the same sequence, viewed through [lo, hi):
// cell at position k holds the symbol of position k + shift.
ToeplitzWindow generate_shifted(const FillRule& rule, std::size_t stages,
                                std::int64_t lo, std::int64_t hi,
                                std::int64_t shift);

// Positions k in the window whose symbol agrees with every in-window translate
// k + p*m (m != 0, hole translates skipped), provided at least `min_translates`
// non-hole translates were actually checked.  Holes are never certified.
std::vector<std::int64_t> per_p(const ToeplitzWindow& w, const Bigint& p,
                                std::size_t min_translates = 4);

// Positions certified p-periodic by the stage annotations: annotated cells
// whose annotation divides p and whose symbol passes the per_p translate test.
std::vector<std::int64_t> certified_per_p(const ToeplitzWindow& w, const Bigint& p,
                                          std::size_t min_translates = 4);

// A window-certified chain of essential periods, with the evidence parameters
// it was established under.
struct PeriodStructure {
    std::vector<Bigint> chain;       // retained periods, each dividing the next
    std::int64_t window_lo = 0;
    std::int64_t window_hi = 0;
    std::size_t min_translates = 4;
};

// Filters a candidate divisibility chain down to the window-essential periods:
// p_n is retained iff its certified per-set differs from the certified per-set
// of every smaller period 1 <= p < p_n.  Candidates must form a divisibility
// chain with each ratio > 1.
PeriodStructure essential_periods(const ToeplitzWindow& w,
                                  const std::vector<Bigint>& candidates,
                                  std::size_t min_translates = 4);

// Union of per_1 and per_p over the structure's periods; its complement within
// the window is the aperiodic part.
std::vector<std::int64_t> periodic_part(const ToeplitzWindow& w,
                                        const PeriodStructure& ps);
std::vector<std::int64_t> aperiodic_part(const ToeplitzWindow& w,
                                         const PeriodStructure& ps);

// Which of the p_i congruence classes the shifted sequence sigma^m(u) lies in
// at level i (1-based): m mod p_i.  Throws DepthError when the level lies
// beyond the certified structure.
Bigint skeleton_class(std::int64_t m, std::size_t level, const PeriodStructure& ps);

// The window recoded on blocks of length m anchored at absolute multiples of
// m.  Blocks containing a hole recode to a hole; the others become letters of
// a finite alphabet of length-m words.  A block's annotation is the largest
// constituent period P, rescaled to block time as lcm(P, m) / m.
struct RecodedWindow {
    std::int64_t lo = 0;             // block-time position of the first block
    std::size_t block_length = 1;
    std::vector<int> cells;          // indices into `alphabet`, or kHole
    std::vector<Bigint> annotations; // 0 for holes
    std::vector<std::string> alphabet;
};

RecodedWindow recode_blocks(const ToeplitzWindow& w, std::size_t m);

// How a power of the shift splits the system: sigma^m acts on M components,
// each carrying the quotient structure (p_{n+l} / M), where M is the limit of
// gcd(m, p_n) over the declared structure.
struct SigmaPowerComponents {
    Bigint splitting;                  // M = lim gcd(m, p_n)
    Bigint cotorsion;                  // m / M
    Scale component_structure;         // period structure of one component
    std::vector<ToeplitzWindow> representatives;  // windows of sigma^i(u), i < M
};

// `ps` must certify the structure at least to the splitting depth (its chain
// must reach a term divisible by M); otherwise DepthError.
SigmaPowerComponents sigma_m_components(const FillRule& rule,
                                        const PeriodStructure& ps,
                                        const Bigint& m,
                                        std::size_t stages,
                                        std::int64_t lo, std::int64_t hi);

// Symbolic shape of the symmetry group at tower level k: p_k commuting copies
// of the component group, permuted, over the quotient structure
// (p_{n+k} / p_k).  Level 0 is the base system itself.
struct TowerDescriptor {
    Bigint count;                    // number of components at this level
    std::vector<Bigint> component_chain;  // certified quotient chain
    std::string symbol;              // printable shape, e.g. "C wr(4) over (4, 16)"
};

TowerDescriptor aut_tower_descriptor(const PeriodStructure& ps, std::size_t k);

// Exact lower bound M! for the number of finite-order symmetries visible at
// the sigma^m splitting, where M = lim gcd(m, p_n) read off the certified
// chain.  Throws DepthError when the chain is too shallow to pin the limit.
Bigint f_lower_bound(const PeriodStructure& ps, const Bigint& m);

// Number of distinct hole-free length-n factors of the window.
std::size_t complexity(const ToeplitzWindow& w, std::size_t n);

}  // namespace odolab

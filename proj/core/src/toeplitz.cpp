#include "odolab/toeplitz.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "odolab/error.hpp"

namespace odolab {

namespace {

std::int64_t imod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::string join_chain(const std::vector<Bigint>& chain) {
    std::ostringstream out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i != 0) out << ", ";
        out << chain[i].get_str();
    }
    return out.str();
}

// Smallest term of the declared structure divisible by the exact fill period
// of stage j.  Stage j always works inside a congruence class mod 2^(j-1), so
// the fill period is 2^j for a constant stage and 2^(j+1) for an alternating
// one.
Bigint stage_annotation(const FillRule& rule, std::size_t j) {
    const Bigint fill = big_pow(2, static_cast<unsigned long>(rule.stage(j).alternate ? j + 1 : j));
    for (std::size_t k = 1; k <= 256; ++k) {
        Bigint t = rule.structure.term(k);
        if (t % fill == 0) return t;
    }
    throw Error("declared structure does not dominate the stage fill periods");
}

}  // namespace

int ToeplitzWindow::symbol(std::int64_t pos) const {
    if (!contains(pos)) throw Error("position outside window");
    return cells[static_cast<std::size_t>(pos - lo)];
}

const Bigint& ToeplitzWindow::annotation(std::int64_t pos) const {
    if (!contains(pos)) throw Error("position outside window");
    return annotations[static_cast<std::size_t>(pos - lo)];
}

void FillRule::validate() const {
    if (head.empty() && cycle.empty()) throw ScaleError("filling rule has no stages");
    for (const FillStage& s : head)
        if (s.symbol != 0 && s.symbol != 1) throw ScaleError("stage symbol must be 0 or 1");
    for (const FillStage& s : cycle)
        if (s.symbol != 0 && s.symbol != 1) throw ScaleError("stage symbol must be 0 or 1");
    structure.validate();
}

const FillStage& FillRule::stage(std::size_t j) const {
    if (j == 0) throw Error("stage indices are 1-based");
    if (j <= head.size()) return head[j - 1];
    if (cycle.empty()) throw Error("filling rule has no stage " + std::to_string(j));
    return cycle[(j - head.size() - 1) % cycle.size()];
}

FillRule rule_paper53() {
    FillRule rule;
    rule.name = "paper53";
    rule.cycle = {FillStage{false, 0}, FillStage{false, 1}};
    rule.structure = Scale{{}, {Bigint(2)}};
    return rule;
}

FillRule rule_paper54() {
    FillRule rule;
    rule.name = "paper54";
    rule.cycle = {FillStage{true, 0}};
    rule.structure = Scale{{}, {Bigint(4)}};
    return rule;
}

FillRule make_fill_rule(std::vector<FillStage> head, std::vector<FillStage> cycle) {
    FillRule rule;
    rule.head = std::move(head);
    rule.cycle = std::move(cycle);
    if (rule.head.empty() && rule.cycle.empty())
        throw ScaleError("filling rule has no stages");
    if (rule.cycle.empty())
        throw ScaleError("filling rule needs a repeating stage cycle");

    // Derive the declared structure from the exact fill periods: term j is the
    // lcm of the periods of stages 1..j.  Each ratio depends only on the kinds
    // of two consecutive stages, so the ratio sequence is periodic from stage
    // h+2 on; two full passes verify that before head and cycle are cut.
    const std::size_t h = rule.head.size();
    const std::size_t c = rule.cycle.size();
    std::vector<Bigint> ratios;
    Bigint prev = 1;
    for (std::size_t j = 1; j <= h + 1 + 2 * c; ++j) {
        const Bigint fill = big_pow(2, static_cast<unsigned long>(rule.stage(j).alternate ? j + 1 : j));
        Bigint t = big_lcm(prev, fill);
        ratios.push_back(t / prev);
        prev = t;
    }
    for (std::size_t i = 0; i < c; ++i)
        if (ratios[h + 1 + c + i] != ratios[h + 1 + i])
            throw Error("stage cycle did not settle into a periodic ratio pattern");
    rule.structure.head.assign(ratios.begin(), ratios.begin() + static_cast<std::ptrdiff_t>(h + 1));
    rule.structure.cycle.assign(ratios.begin() + static_cast<std::ptrdiff_t>(h + 1),
                                ratios.begin() + static_cast<std::ptrdiff_t>(h + 1 + c));
    rule.validate();
    return rule;
}

ToeplitzWindow generate(const FillRule& rule, std::size_t stages,
                        std::int64_t lo, std::int64_t hi) {
    rule.validate();
    if (hi < lo) throw Error("window bounds out of order");
    if (hi - lo > (std::int64_t{1} << 22)) throw BudgetError("window exceeds the cell budget");
    if (stages > 48) throw BudgetError("stage count exceeds the depth budget");

    ToeplitzWindow w;
    w.lo = lo;
    w.cells.assign(static_cast<std::size_t>(hi - lo), kHole);
    w.annotations.assign(static_cast<std::size_t>(hi - lo), Bigint(0));

    auto fill = [&](std::int64_t cls, std::int64_t modulus, int symbol, const Bigint& ann) {
        for (std::int64_t k = lo + imod(cls - lo, modulus); k < hi; k += modulus) {
            const auto idx = static_cast<std::size_t>(k - lo);
            if (w.cells[idx] != kHole) throw Error("stage filling revisited a cell");
            w.cells[idx] = symbol;
            w.annotations[idx] = ann;
        }
    };

    // Before stage j the holes form a single congruence class (rho mod M).
    // The stage splits it mod 2M, fills one half, and leaves the other as the
    // new hole class.  Stage 1 claims the upper half so that the first hole
    // pattern starts at the origin; later stages claim the current anchor.
    std::int64_t modulus = 1;
    std::int64_t rho = 0;
    for (std::size_t j = 1; j <= stages; ++j) {
        const FillStage& st = rule.stage(j);
        const Bigint ann = stage_annotation(rule, j);
        const std::int64_t anchor = (j == 1) ? rho + modulus : rho;
        if (!st.alternate) {
            fill(anchor, 2 * modulus, st.symbol, ann);
        } else {
            fill(anchor, 4 * modulus, 0, ann);
            fill(anchor + 2 * modulus, 4 * modulus, 1, ann);
        }
        rho = imod(anchor + modulus, 2 * modulus);
        modulus *= 2;
    }
    return w;
}

ToeplitzWindow generate_shifted(const FillRule& rule, std::size_t stages,
                                std::int64_t lo, std::int64_t hi,
                                std::int64_t shift) {
    ToeplitzWindow w = generate(rule, stages, lo + shift, hi + shift);
    w.lo = lo;
    return w;
}

namespace {

// Shared scan behind per_p and certified_per_p.  Positions in the same
// residue class mod p are exactly each other's in-window translates, so a
// cell passes the translate test iff its class carries no two disagreeing
// symbols and has enough non-hole members.  `annotated` additionally keeps
// only cells whose stage annotation divides p.
std::vector<std::int64_t> per_scan(const ToeplitzWindow& w, const Bigint& p,
                                   std::size_t min_translates, bool annotated) {
    if (p < 1) throw Error("period must be positive");
    const auto n = static_cast<std::int64_t>(w.cells.size());
    if (p > n) return {};
    const auto step = static_cast<std::int64_t>(to_u64(p, "period"));

    std::vector<std::int64_t> out;
    std::vector<std::size_t> members;
    for (std::int64_t r = 0; r < step; ++r) {
        members.clear();
        int seen = kHole;
        bool consistent = true;
        for (std::int64_t i = r; i < n; i += step) {
            const int s = w.cells[static_cast<std::size_t>(i)];
            if (s == kHole) continue;
            members.push_back(static_cast<std::size_t>(i));
            if (seen == kHole) seen = s;
            else if (seen != s) consistent = false;
        }
        if (!consistent || members.empty()) continue;
        if (members.size() < min_translates + 1) continue;  // anchor excluded from the count
        for (std::size_t i : members) {
            if (annotated && (w.annotations[i] == 0 || p % w.annotations[i] != 0)) continue;
            out.push_back(w.lo + static_cast<std::int64_t>(i));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::int64_t> per_p(const ToeplitzWindow& w, const Bigint& p,
                                std::size_t min_translates) {
    return per_scan(w, p, min_translates, false);
}

std::vector<std::int64_t> certified_per_p(const ToeplitzWindow& w, const Bigint& p,
                                          std::size_t min_translates) {
    // Imported windows may carry no stage bookkeeping at all; they are judged
    // on symbols alone rather than being vacuously uncertifiable.
    const bool annotated = std::any_of(w.annotations.begin(), w.annotations.end(),
                                       [](const Bigint& a) { return a != 0; });
    return per_scan(w, p, min_translates, annotated);
}

PeriodStructure essential_periods(const ToeplitzWindow& w,
                                  const std::vector<Bigint>& candidates,
                                  std::size_t min_translates) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i] < 2) throw ScaleError("period candidates must be at least 2");
        if (i > 0 && (candidates[i] % candidates[i - 1] != 0 || candidates[i] == candidates[i - 1]))
            throw ScaleError("period candidates must form a strictly increasing divisibility chain");
    }

    PeriodStructure ps;
    ps.window_lo = w.lo;
    ps.window_hi = w.hi();
    ps.min_translates = min_translates;
    for (const Bigint& pn : candidates) {
        const std::vector<std::int64_t> cert = certified_per_p(w, pn, min_translates);
        bool essential = true;
        for (Bigint p = 1; p < pn; ++p) {
            if (certified_per_p(w, p, min_translates) == cert) {
                essential = false;
                break;
            }
        }
        if (essential) ps.chain.push_back(pn);
    }
    return ps;
}

std::vector<std::int64_t> periodic_part(const ToeplitzWindow& w,
                                        const PeriodStructure& ps) {
    std::set<std::int64_t> acc;
    for (std::int64_t k : per_p(w, 1, ps.min_translates)) acc.insert(k);
    for (const Bigint& p : ps.chain)
        for (std::int64_t k : per_p(w, p, ps.min_translates)) acc.insert(k);
    return {acc.begin(), acc.end()};
}

std::vector<std::int64_t> aperiodic_part(const ToeplitzWindow& w,
                                         const PeriodStructure& ps) {
    const std::vector<std::int64_t> per = periodic_part(w, ps);
    std::vector<std::int64_t> out;
    std::size_t j = 0;
    for (std::int64_t k = w.lo; k < w.hi(); ++k) {
        while (j < per.size() && per[j] < k) ++j;
        if (j >= per.size() || per[j] != k) out.push_back(k);
    }
    return out;
}

Bigint skeleton_class(std::int64_t m, std::size_t level, const PeriodStructure& ps) {
    if (level == 0) throw Error("structure levels are 1-based");
    if (level > ps.chain.size())
        throw DepthError("level beyond certified structure");
    return mod_pos(Bigint(static_cast<long>(m)), ps.chain[level - 1]);
}

RecodedWindow recode_blocks(const ToeplitzWindow& w, std::size_t m) {
    if (m == 0) throw Error("block length must be positive");
    if (w.cells.size() % m != 0) throw Error("window length must be a multiple of the block length");
    if (imod(w.lo, static_cast<std::int64_t>(m)) != 0)
        throw Error("window must start on a block boundary");

    const std::size_t blocks = w.cells.size() / m;
    std::vector<std::string> words(blocks);
    RecodedWindow out;
    out.lo = w.lo / static_cast<std::int64_t>(m);
    out.block_length = m;
    out.cells.assign(blocks, kHole);
    out.annotations.assign(blocks, Bigint(0));

    std::set<std::string> letters;
    for (std::size_t b = 0; b < blocks; ++b) {
        std::string word;
        Bigint largest = 0;
        bool holed = false;
        for (std::size_t i = 0; i < m; ++i) {
            const int s = w.cells[b * m + i];
            if (s == kHole) { holed = true; break; }
            word.push_back(s == 0 ? '0' : '1');
            largest = std::max(largest, w.annotations[b * m + i]);
        }
        if (holed) continue;
        words[b] = word;
        letters.insert(word);
        // Rescale to block time: the block repeats once the dominant
        // constituent period and the block length realign.
        if (largest != 0) out.annotations[b] = big_lcm(largest, Bigint(static_cast<long>(m))) / m;
    }

    out.alphabet.assign(letters.begin(), letters.end());
    for (std::size_t b = 0; b < blocks; ++b) {
        if (words[b].empty()) continue;
        const auto it = std::lower_bound(out.alphabet.begin(), out.alphabet.end(), words[b]);
        out.cells[b] = static_cast<int>(it - out.alphabet.begin());
    }
    return out;
}

SigmaPowerComponents sigma_m_components(const FillRule& rule,
                                        const PeriodStructure& ps,
                                        const Bigint& m,
                                        std::size_t stages,
                                        std::int64_t lo, std::int64_t hi) {
    if (m < 1) throw Error("shift power must be positive");
    const TranslationStructure ts = aut_structure(rule.structure, m);
    const Bigint& splitting = ts.decomposition.splitting;
    if (splitting > 1 && (ps.chain.empty() || ps.chain.back() % splitting != 0))
        throw DepthError("certified structure depth insufficient for the requested shift power");

    SigmaPowerComponents out;
    out.splitting = splitting;
    out.cotorsion = ts.decomposition.cotorsion;
    out.component_structure = ts.component_scale;

    const auto count = to_u64(splitting, "component count");
    if (count > 4096) throw BudgetError("component count exceeds the representative budget");
    for (std::uint64_t i = 0; i < count; ++i)
        out.representatives.push_back(
            generate_shifted(rule, stages, lo, hi, static_cast<std::int64_t>(i)));
    return out;
}

TowerDescriptor aut_tower_descriptor(const PeriodStructure& ps, std::size_t k) {
    TowerDescriptor d;
    if (k == 0) {
        d.count = 1;
        d.component_chain = ps.chain;
    } else {
        if (k > ps.chain.size()) throw DepthError("level beyond certified structure");
        d.count = ps.chain[k - 1];
        for (std::size_t j = k; j < ps.chain.size(); ++j)
            d.component_chain.push_back(ps.chain[j] / d.count);
    }
    d.symbol = "C(" + join_chain(d.component_chain) + ") wr Sym(" + d.count.get_str() + ")";
    return d;
}

Bigint f_lower_bound(const PeriodStructure& ps, const Bigint& m) {
    if (m < 1) throw Error("shift power must be positive");
    if (m == 1) return 1;
    if (ps.chain.empty())
        throw DepthError("certified structure too shallow to pin the splitting");
    std::vector<Bigint> gcds;
    for (const Bigint& p : ps.chain) gcds.push_back(big_gcd(m, p));
    const Bigint& limit = gcds.back();
    const bool exhausted = limit == m;
    const bool stable = gcds.size() >= 2 && gcds[gcds.size() - 2] == limit;
    if (!exhausted && !stable)
        throw DepthError("certified structure too shallow to pin the splitting");
    return big_factorial(to_u64(limit, "splitting"));
}

std::size_t complexity(const ToeplitzWindow& w, std::size_t n) {
    if (n == 0) throw Error("factor length must be positive");
    std::set<std::string> factors;
    if (w.cells.size() < n) return 0;
    for (std::size_t i = 0; i + n <= w.cells.size(); ++i) {
        std::string word;
        bool holed = false;
        for (std::size_t j = 0; j < n; ++j) {
            const int s = w.cells[i + j];
            if (s == kHole) { holed = true; break; }
            word.push_back(s == 0 ? '0' : '1');
        }
        if (!holed) factors.insert(std::move(word));
    }
    return factors.size();
}

}  // namespace odolab

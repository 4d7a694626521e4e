#include "odolab/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace odolab::oracle {

std::uint64_t orbit_count(std::uint64_t modulus, std::uint64_t step) {
    if (modulus == 0) throw Error("orbit_count: modulus must be positive");
    std::vector<char> visited(modulus, 0);
    std::uint64_t orbits = 0;
    for (std::uint64_t start = 0; start < modulus; ++start) {
        if (visited[start]) continue;
        ++orbits;
        std::uint64_t x = start;
        while (!visited[x]) {
            visited[x] = 1;
            x = (x + step) % modulus;
        }
    }
    return orbits;
}

namespace {

// Walks every orbit of x -> x + step and returns their sizes.
std::vector<std::uint64_t> orbit_sizes(std::uint64_t modulus, std::uint64_t step) {
    std::vector<char> visited(modulus, 0);
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t start = 0; start < modulus; ++start) {
        if (visited[start]) continue;
        std::uint64_t size = 0;
        std::uint64_t x = start;
        while (!visited[x]) {
            visited[x] = 1;
            x = (x + step) % modulus;
            ++size;
        }
        sizes.push_back(size);
    }
    return sizes;
}

} // namespace

Bigint commuting_bijections_count(std::uint64_t modulus, std::uint64_t step) {
    if (modulus == 0) throw Error("commuting_bijections_count: modulus must be positive");
    // A commuting bijection sends each orbit of x -> x + step onto an orbit
    // of the same size, and is determined on that orbit by the image of one
    // point (the rest follows by equivariance). So: pick source orbits in
    // order; for each, scan for the not-yet-used target orbits of equal
    // size, and multiply by (number found) * (points in the target orbit).
    std::vector<std::uint64_t> sizes = orbit_sizes(modulus, step);
    std::vector<char> used(sizes.size(), 0);
    Bigint count = 1;
    for (std::size_t source = 0; source < sizes.size(); ++source) {
        std::uint64_t available = 0;
        std::size_t first_free = sizes.size();
        for (std::size_t target = 0; target < sizes.size(); ++target) {
            if (!used[target] && sizes[target] == sizes[source]) {
                ++available;
                if (first_free == sizes.size()) first_free = target;
            }
        }
        // available is never 0: the source orbit itself is only marked used
        // when an earlier source consumed some equal-size slot, one per step.
        count *= available;
        count *= sizes[source];
        used[first_free] = 1; // consume one slot; which one does not matter
    }
    return count;
}

Bigint commuting_bijections_count_by_scan(std::uint64_t modulus, std::uint64_t step) {
    if (modulus == 0) throw Error("commuting_bijections_count_by_scan: modulus must be positive");
    if (modulus > 8)
        throw BudgetError("commuting_bijections_count_by_scan: full scan is limited to modulus <= 8");
    std::vector<std::uint64_t> f(modulus);
    std::iota(f.begin(), f.end(), 0);
    Bigint count = 0;
    do {
        bool commutes = true;
        for (std::uint64_t x = 0; x < modulus && commutes; ++x)
            commutes = f[(x + step) % modulus] == (f[x] + step) % modulus;
        if (commutes) ++count;
    } while (std::next_permutation(f.begin(), f.end()));
    return count;
}

namespace {

struct ModelElement {
    std::vector<std::uint8_t> a;    // component vector over Z/modulus
    std::vector<std::uint8_t> perm; // permutation of the d component slots
    bool operator==(const ModelElement&) const = default;
};

ModelElement model_mul(const ModelElement& x, const ModelElement& y, std::uint64_t modulus) {
    std::size_t d = x.perm.size();
    std::vector<std::uint8_t> rho_inv(d);
    for (std::size_t i = 0; i < d; ++i) rho_inv[y.perm[i]] = static_cast<std::uint8_t>(i);
    ModelElement z;
    z.a.resize(d);
    z.perm.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        z.a[i] = static_cast<std::uint8_t>((x.a[rho_inv[i]] + y.a[i]) % modulus);
        z.perm[i] = y.perm[x.perm[i]]; // x's permutation acts first
    }
    return z;
}

} // namespace

Bigint max_subgroup_order(std::uint64_t modulus, std::uint64_t d,
                          std::uint64_t torsion_order, std::uint64_t budget) {
    if (modulus == 0 || d == 0)
        throw Error("max_subgroup_order: modulus and d must be positive");
    Bigint order = big_pow(Bigint(static_cast<unsigned long>(modulus)),
                           static_cast<unsigned long>(d)) *
                   big_factorial(static_cast<unsigned long>(d));
    if (order > Bigint(static_cast<unsigned long>(budget)))
        throw BudgetError("max_subgroup_order: model has " + order.get_str() +
                          " elements, budget is " + std::to_string(budget));

    // Materialize the whole group.
    std::vector<ModelElement> elems;
    std::vector<std::uint8_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint8_t> a(d, 0);
        while (true) {
            elems.push_back({a, perm});
            std::size_t i = 0;
            while (i < d && ++a[i] == modulus) a[i++] = 0;
            if (i == d) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto index_of = [&](const ModelElement& e) {
        auto it = std::find(elems.begin(), elems.end(), e);
        return static_cast<std::uint16_t>(it - elems.begin());
    };

    std::size_t n = elems.size();
    std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i][j] = index_of(model_mul(elems[i], elems[j], modulus));

    // The torsion restriction: admissible elements have every component
    // killed by torsion_order (0 = unrestricted).
    std::vector<char> admissible(n, 1);
    if (torsion_order != 0)
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint8_t c : elems[i].a)
                if ((torsion_order * c) % modulus != 0) {
                    admissible[i] = 0;
                    break;
                }

    std::uint16_t identity = index_of({std::vector<std::uint8_t>(d, 0),
                                       [&] {
                                           std::vector<std::uint8_t> p(d);
                                           std::iota(p.begin(), p.end(), 0);
                                           return p;
                                       }()});

    // Subgroup enumeration: closure under the multiplication table, BFS over
    // "extend a known subgroup by one admissible generator".
    auto closure = [&](std::vector<std::uint16_t> seed) {
        std::set<std::uint16_t> members(seed.begin(), seed.end());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::uint16_t> snapshot(members.begin(), members.end());
            for (std::uint16_t x : snapshot)
                for (std::uint16_t y : snapshot)
                    if (members.insert(table[x][y]).second) grew = true;
        }
        return std::vector<std::uint16_t>(members.begin(), members.end());
    };

    std::set<std::vector<std::uint16_t>> seen;
    std::vector<std::vector<std::uint16_t>> frontier{{identity}};
    seen.insert({identity});
    Bigint best = 1;
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint16_t>> next;
        for (const auto& sub : frontier) {
            for (std::uint16_t g = 0; g < n; ++g) {
                if (!admissible[g]) continue;
                if (std::binary_search(sub.begin(), sub.end(), g)) continue;
                std::vector<std::uint16_t> seed = sub;
                seed.push_back(g);
                std::vector<std::uint16_t> grown = closure(std::move(seed));
                bool all_ok = std::all_of(grown.begin(), grown.end(),
                                          [&](std::uint16_t e) { return admissible[e]; });
                if (!all_ok) continue;
                if (seen.insert(grown).second) {
                    if (Bigint(static_cast<unsigned long>(grown.size())) > best)
                        best = static_cast<unsigned long>(grown.size());
                    next.push_back(std::move(grown));
                }
            }
        }
        frontier = std::move(next);
    }
    return best;
}

std::string LocalRule::apply(const std::string& word) const {
    std::size_t span = 2 * static_cast<std::size_t>(radius) + 1;
    if (word.size() < span) return {};
    std::string out;
    out.reserve(word.size() - span + 1);
    for (std::size_t i = 0; i + span <= word.size(); ++i) {
        std::uint32_t idx = 0;
        for (std::size_t j = 0; j < span; ++j)
            idx = (idx << 1) | static_cast<std::uint32_t>(word[i + j] == '1');
        out.push_back((table >> idx) & 1u ? '1' : '0');
    }
    return out;
}

namespace {

// Hole-free factors of the given length, deduplicated and sorted.
std::set<std::string> factor_set(const std::string& window, std::size_t length) {
    std::set<std::string> out;
    if (length == 0 || window.size() < length) return out;
    for (std::size_t i = 0; i + length <= window.size(); ++i) {
        std::string_view v(window.data() + i, length);
        if (v.find('?') == std::string_view::npos) out.emplace(v);
    }
    return out;
}

} // namespace

BlockCodeScan block_code_autos(const std::string& window, int radius,
                               std::uint64_t shift_power, std::size_t test_length,
                               std::size_t margin, std::uint64_t budget) {
    if (radius < 0 || radius > 2)
        throw Error("block_code_autos: radius must be 0, 1, or 2");
    if (margin < static_cast<std::size_t>(radius))
        throw Error("block_code_autos: margin must be at least the radius");
    if (test_length < 2 * margin + 1)
        throw Error("block_code_autos: test length must exceed twice the margin");
    std::size_t neighborhood_bits = std::size_t(1) << (2 * radius + 1);
    if (neighborhood_bits >= 32)
        throw BudgetError("block_code_autos: radius 2 means 2^32 rule tables; "
                          "that always exceeds any honest budget here");
    std::uint64_t tables = std::uint64_t(1) << neighborhood_bits;
    if (tables > budget)
        throw BudgetError("block_code_autos: " + std::to_string(tables) +
                          " rule tables exceed the budget of " + std::to_string(budget));

    std::size_t r = static_cast<std::size_t>(radius);
    std::set<std::string> source = factor_set(window, test_length);
    std::set<std::string> image_language = factor_set(window, test_length - 2 * r);
    std::set<std::string> commute_words = factor_set(window, test_length + shift_power);

    BlockCodeScan scan;
    scan.degenerate = source.empty();

    std::map<std::vector<std::string>, LocalRule> by_action;
    for (std::uint64_t t = 0; t < tables; ++t) {
        LocalRule rule{radius, static_cast<std::uint32_t>(t)};
        bool ok = true;

        // Image preservation on the factor language.
        for (const std::string& w : source) {
            if (!image_language.count(rule.apply(w))) {
                ok = false;
                break;
            }
        }

        // Injectivity certificate: equal images force agreement away from
        // the boundary, so an inverse local rule exists on this language.
        if (ok) {
            std::map<std::string, std::string> center_of_image;
            for (const std::string& w : source) {
                std::string center = w.substr(margin, test_length - 2 * margin);
                auto [it, inserted] = center_of_image.try_emplace(rule.apply(w), center);
                if (!inserted && it->second != center) {
                    ok = false;
                    break;
                }
            }
        }

        // Commutation with the shift_power-fold shift, executed explicitly.
        if (ok) {
            for (const std::string& u : commute_words) {
                std::string lhs = rule.apply(u.substr(shift_power));
                std::string rhs = rule.apply(u);
                rhs.erase(0, shift_power);
                if (lhs != rhs) {
                    ok = false;
                    break;
                }
            }
        }

        if (!ok) continue;
        scan.qualifying.push_back(rule);
        std::vector<std::string> action;
        action.reserve(source.size());
        for (const std::string& w : source) action.push_back(rule.apply(w));
        by_action.try_emplace(std::move(action), rule); // keeps the smallest table
    }

    for (auto& [action, rule] : by_action) {
        scan.representatives.push_back(rule);
        scan.actions.push_back(action);
    }
    return scan;
}

} // namespace odolab::oracle

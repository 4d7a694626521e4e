#include "odolab/groups.hpp"

#include <algorithm>
#include <set>

namespace odolab {

namespace {

constexpr std::uint64_t kComponentBudget = std::uint64_t(1) << 20;

std::vector<std::size_t> inverse_perm(const std::vector<std::size_t>& p) {
    std::vector<std::size_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

} // namespace

GroupDescriptor make_group_descriptor(const Scale& base, const Bigint& level) {
    base.validate();
    if (level < 1) throw Error("group descriptor: level must be >= 1");
    GroupDescriptor g;
    g.base = base;
    g.level = level;
    g.structure = aut_structure(base, level);
    g.stabilization = g.structure.decomposition.stabilization_index;
    Bigint s = g.structure.decomposition.splitting;
    if (s > Bigint(static_cast<unsigned long>(kComponentBudget)))
        throw BudgetError("group descriptor: " + s.get_str() +
                          " components exceed the materialization budget");
    g.components = to_u64(s, "group descriptor components");
    return g;
}

std::size_t SemidirectElement::twist_depth() const {
    return twists.empty() ? 0 : twists.front().depth();
}

SemidirectElement sd_identity(const GroupDescriptor& g, std::size_t twist_depth) {
    SemidirectElement e;
    e.group = g;
    OdometerElement zero =
        embed_integer(g.structure.component_scale, 0, twist_depth);
    e.twists.assign(g.components, zero);
    e.perm.resize(g.components);
    for (std::size_t i = 0; i < e.perm.size(); ++i) e.perm[i] = i;
    return e;
}

SemidirectElement sd_mul(const SemidirectElement& a, const SemidirectElement& b) {
    if (!(a.group == b.group))
        throw Error("sd_mul: elements live in different groups");
    if (a.twist_depth() != b.twist_depth())
        throw DepthError("sd_mul: twist depths differ");
    std::vector<std::size_t> b_inv = inverse_perm(b.perm);
    SemidirectElement c;
    c.group = a.group;
    c.twists.reserve(a.twists.size());
    c.perm.resize(a.perm.size());
    for (std::size_t i = 0; i < a.twists.size(); ++i) {
        c.twists.push_back(add(a.twists[b_inv[i]], b.twists[i]));
        c.perm[i] = b.perm[a.perm[i]]; // a acts first
    }
    return c;
}

SemidirectElement sd_inv(const SemidirectElement& a) {
    SemidirectElement r;
    r.group = a.group;
    r.perm = inverse_perm(a.perm);
    r.twists.resize(a.twists.size());
    for (std::size_t i = 0; i < a.twists.size(); ++i)
        r.twists[i] = negate(a.twists[a.perm[i]]);
    return r;
}

std::vector<std::uint64_t> act(const SemidirectElement& e, std::uint64_t budget) {
    const GroupDescriptor& g = e.group;
    std::size_t D = e.twist_depth();
    Bigint height_big = D == 0 ? Bigint(1) : g.structure.component_scale.term(D);
    Bigint modulus_big = Bigint(static_cast<unsigned long>(g.components)) * height_big;
    if (modulus_big > Bigint(static_cast<unsigned long>(budget)))
        throw BudgetError("act: modulus " + modulus_big.get_str() +
                          " exceeds the materialization budget");
    std::uint64_t s = g.components;
    std::uint64_t heights = to_u64(height_big, "act heights");
    std::uint64_t n = s * heights;

    std::vector<std::uint64_t> twist(s);
    for (std::uint64_t j = 0; j < s; ++j)
        twist[j] = D == 0 ? 0 : to_u64(e.twists[j].value(), "act twist");

    std::vector<std::uint64_t> out(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t i = x % s;
        std::uint64_t q = x / s;
        std::uint64_t j = e.perm[i];
        out[x] = j + s * ((q + twist[j]) % heights);
    }
    return out;
}

SemidirectElement factor_at_level(const Scale& base, std::size_t k,
                                  const std::vector<std::uint64_t>& bijection) {
    GroupDescriptor g = make_group_descriptor(base, base.term(k));
    std::uint64_t s = to_u64(base.term(k), "factor_at_level classes");
    std::uint64_t n = bijection.size();
    if (n == 0 || n % s != 0)
        throw Error("factor_at_level: bijection size is not a multiple of the class count");
    std::uint64_t heights = n / s;

    // Twist depth: which term of the component chain the heights realize.
    std::size_t D = 0;
    {
        Bigint t = 1;
        while (t < Bigint(static_cast<unsigned long>(heights)) && D <= 64)
            t *= g.structure.component_scale.ratio(++D);
        if (t != Bigint(static_cast<unsigned long>(heights)))
            throw Error("factor_at_level: bijection size is not a chain term");
    }

    std::vector<std::size_t> perm(s);
    std::vector<char> hit(s, 0);
    for (std::uint64_t i = 0; i < s; ++i) {
        std::uint64_t target = bijection[i] % s;
        perm[i] = target;
        hit[target] = 1;
    }
    for (std::uint64_t i = 0; i < s; ++i)
        if (!hit[i])
            throw Error("factor_at_level: classes mod " + std::to_string(s) +
                        " are not permuted");

    std::vector<std::uint64_t> twist(s, 0);
    for (std::uint64_t i = 0; i < s; ++i)
        twist[perm[i]] = (bijection[i] - perm[i]) / s % heights;

    // The extracted data must reproduce the whole bijection, otherwise the
    // map does not live at this level of the tower.
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t i = x % s;
        std::uint64_t q = x / s;
        std::uint64_t j = perm[i];
        if (bijection[x] != j + s * ((q + twist[j]) % heights))
            throw Error("factor_at_level: bijection does not factor through level " +
                        std::to_string(k));
    }

    SemidirectElement e;
    e.group = g;
    e.perm.assign(perm.begin(), perm.end());
    e.twists.reserve(s);
    for (std::uint64_t j = 0; j < s; ++j)
        e.twists.push_back(embed_integer(g.structure.component_scale,
                                         Bigint(static_cast<unsigned long>(twist[j])), D));
    return e;
}

SemidirectElement inclusion_jk(const SemidirectElement& e, std::size_t k) {
    if (e.group.level != e.group.base.term(k))
        throw Error("inclusion_jk: element is not presented at level " +
                    std::to_string(k));
    if (e.twist_depth() < 2)
        throw DepthError("inclusion_jk: needs twist depth >= 2 to go one level deeper");
    return factor_at_level(e.group.base, k + 1, act(e));
}

Bigint max_finite_subgroup_order(const GroupDescriptor& g) {
    if (classify(g.structure.component_scale) == TorsionClass::InfiniteTorsion)
        throw Error("max_finite_subgroup_order: infinite torsion has no largest finite subgroup");
    Bigint torsion = 1;
    for (const auto& [p, m] : g.structure.decomposition.component_profile)
        if (!m.infinite && m.exponent > 0) torsion *= big_pow(p, m.exponent);
    if (g.components > 1'000'000)
        throw BudgetError("max_finite_subgroup_order: factorial of " +
                          std::to_string(g.components) + " exceeds the budget");
    Bigint r;
    mpz_pow_ui(r.get_mpz_t(), torsion.get_mpz_t(),
               static_cast<unsigned long>(g.components));
    return r * big_factorial(static_cast<unsigned long>(g.components));
}

std::vector<FGrowthPoint> f_sequence(const Scale& base,
                                     const std::vector<Bigint>& levels) {
    if (levels.empty()) throw Error("f_sequence: no levels given");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 1) throw Error("f_sequence: levels must be >= 1");
        if (i > 0 && mod_pos(levels[i], levels[i - 1]) != 0)
            throw Error("f_sequence: level " + levels[i].get_str() +
                        " is not a multiple of " + levels[i - 1].get_str());
    }
    std::vector<FGrowthPoint> out;
    out.reserve(levels.size());
    for (const Bigint& m : levels)
        out.push_back({m, max_finite_subgroup_order(make_group_descriptor(base, m))});
    return out;
}

namespace {

std::set<Bigint> infinite_support(const MultiplicityProfile& p) {
    std::set<Bigint> s;
    for (const auto& [prime, m] : p)
        if (m.infinite) s.insert(prime);
    return s;
}

} // namespace

DistinguishVerdict distinguish(const Scale& a, const Scale& b) {
    MultiplicityProfile pa = multiplicity_profile(a);
    MultiplicityProfile pb = multiplicity_profile(b);
    DistinguishVerdict v;
    if (pa == pb) {
        v.kind = VerdictKind::Equivalent;
        v.note = "equal multiplicity profiles: the chains are equivalent and no "
                 "invariant computed here separates them";
        return v;
    }
    std::set<Bigint> sa = infinite_support(pa);
    std::set<Bigint> sb = infinite_support(pb);
    std::vector<Bigint> diff;
    std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(diff));
    if (!diff.empty()) {
        v.kind = VerdictKind::InfiniteSupportDiffers;
        v.witness_prime = *std::min_element(diff.begin(), diff.end());
        Bigint m = 1;
        for (int j = 0; j <= 24; ++j) {
            Bigint fa = max_finite_subgroup_order(make_group_descriptor(a, m));
            Bigint fb = max_finite_subgroup_order(make_group_descriptor(b, m));
            v.exhibit_left.push_back({m, fa});
            v.exhibit_right.push_back({m, fb});
            if (fa != fb) {
                v.divergence_level = m;
                v.note = "growth orders along powers of " +
                         v.witness_prime.get_str() + " separate the chains";
                return v;
            }
            m *= v.witness_prime;
        }
        throw Error("distinguish: internal error, growth orders failed to diverge");
    }
    v.kind = VerdictKind::TorsionDiffers;
    v.torsion_left = torsion_subgroup(a);
    v.torsion_right = torsion_subgroup(b);
    v.note = "equal infinite support: growth orders cannot separate these chains; "
             "the torsion parts differ, but only torsion-free chains carry a full "
             "structure invariance guarantee, so this is reported as evidence, "
             "not a proof of non-isomorphism";
    return v;
}

CentralizerGapWitness centralizer_gap_witness(const Scale& base,
                                              const OdometerElement& x,
                                              const Bigint& q) {
    if (x.scale != base)
        throw Error("centralizer_gap_witness: x does not live over the given chain");
    x.validate();
    if (q < 2) throw Error("centralizer_gap_witness: q must be >= 2");
    MultiplicityProfile profile = multiplicity_profile(base);
    auto it = profile.find(q);
    if (it == profile.end() || !it->second.infinite)
        throw Error("centralizer_gap_witness: " + q.get_str() +
                    " is not in the infinite support of the chain");
    if (x.depth() == 0 || x.value() == 0)
        throw DepthError("centralizer_gap_witness: x vanishes at this truncation, "
                         "so its infinite order cannot be certified here");

    std::size_t K = x.depth();
    Bigint pk = base.term(K);
    Bigint xv = x.value();
    if (valuation(pk, q) < valuation(xv, q) + 1)
        throw DepthError("centralizer_gap_witness: depth " + std::to_string(K) +
                         " does not contain one factor " + q.get_str() +
                         " beyond x; deepen the truncation");

    Bigint d = big_gcd(pk, q * xv);
    if (d == pk)
        throw DepthError("centralizer_gap_witness: the split level equals the whole "
                         "truncation modulus; deepen the truncation by one level");
    // nu_q(d) > nu_q(x) by the depth check, so d never divides x's residue:
    // the class shift below is nonzero, and with at least two heights per
    // component the rotation must trip on a carry under x -> x + x.
    GroupDescriptor g = make_group_descriptor(base, d);
    std::size_t D = K - g.stabilization;

    SemidirectElement rot = sd_identity(g, D);
    for (std::size_t i = 0; i < rot.perm.size(); ++i)
        rot.perm[i] = (i + 1) % rot.perm.size();

    std::vector<std::uint64_t> A = act(rot);
    std::uint64_t n = A.size();
    std::uint64_t vq = to_u64(mod_pos(q * xv, pk), "witness shift");
    std::uint64_t vx = to_u64(mod_pos(xv, pk), "witness shift");
    bool commutes_q = true;
    bool commutes_x = true;
    for (std::uint64_t y = 0; y < n; ++y) {
        if (A[(y + vq) % n] != (A[y] + vq) % n) commutes_q = false;
        if (A[(y + vx) % n] != (A[y] + vx) % n) commutes_x = false;
    }
    if (!commutes_q || commutes_x)
        throw Error("centralizer_gap_witness: internal error, verification failed");
    return {rot, d, Bigint(pk)};
}

} // namespace odolab

#include "odolab/odometer.hpp"

#include <algorithm>

namespace odolab {

namespace {

void require_compatible(const OdometerElement& a, const OdometerElement& b,
                        const char* op) {
    if (a.scale != b.scale)
        throw Error(std::string(op) + ": elements live over different scales");
    if (a.depth() != b.depth())
        throw DepthError(std::string(op) + ": depths differ (" +
                         std::to_string(a.depth()) + " vs " +
                         std::to_string(b.depth()) + ")");
}

} // namespace

const Bigint& OdometerElement::value() const {
    if (residues.empty())
        throw DepthError("odometer element: no residues at depth 0");
    return residues.back();
}

void OdometerElement::validate() const {
    scale.validate();
    Bigint p = 1;
    Bigint prev = 0;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        p *= scale.ratio(i + 1);
        if (residues[i] < 0 || residues[i] >= p)
            throw Error("odometer element: residue " + residues[i].get_str() +
                        " out of range at level " + std::to_string(i + 1));
        if (i > 0 && mod_pos(residues[i], p / scale.ratio(i + 1)) != prev)
            throw Error("odometer element: residues are not coherent at level " +
                        std::to_string(i + 1));
        prev = residues[i];
    }
}

OdometerElement embed_integer(const Scale& s, const Bigint& m, std::size_t depth) {
    s.validate();
    OdometerElement e{s, {}};
    Bigint p = 1;
    for (std::size_t i = 1; i <= depth; ++i) {
        p *= s.ratio(i);
        e.residues.push_back(mod_pos(m, p));
    }
    return e;
}

OdometerElement add(const OdometerElement& a, const OdometerElement& b) {
    require_compatible(a, b, "add");
    OdometerElement c{a.scale, {}};
    Bigint p = 1;
    for (std::size_t i = 0; i < a.depth(); ++i) {
        p *= a.scale.ratio(i + 1);
        c.residues.push_back(mod_pos(a.residues[i] + b.residues[i], p));
    }
    return c;
}

OdometerElement negate(const OdometerElement& a) {
    OdometerElement c{a.scale, {}};
    Bigint p = 1;
    for (std::size_t i = 0; i < a.depth(); ++i) {
        p *= a.scale.ratio(i + 1);
        c.residues.push_back(mod_pos(-a.residues[i], p));
    }
    return c;
}

Distance distance(const OdometerElement& a, const OdometerElement& b) {
    require_compatible(a, b, "distance");
    for (std::size_t i = 0; i < a.depth(); ++i)
        if (a.residues[i] != b.residues[i]) return {false, i + 1};
    // Indistinguishable at this truncation: the distance is at most
    // 2^-(depth+1), and that is all we are entitled to say.
    return {true, a.depth() + 1};
}

ComponentDecomposition component_count(const Scale& scale, const Bigint& m) {
    if (m < 1) throw Error("component_count: the multiplier must be >= 1");
    MultiplicityProfile profile = multiplicity_profile(scale);

    ComponentDecomposition out;
    out.multiplier = m;
    out.splitting = 1;
    out.component_profile = profile;

    unsigned long total_absorbed = 0;
    for (const auto& [p, e] : factorize(m)) {
        unsigned absorbed; // how much of p^e the chain eventually swallows
        auto it = profile.find(p);
        if (it == profile.end())
            absorbed = 0;
        else if (it->second.infinite)
            absorbed = e;
        else {
            absorbed = std::min(e, it->second.exponent);
            unsigned left = it->second.exponent - absorbed;
            if (left == 0)
                out.component_profile.erase(p);
            else
                out.component_profile[p] = Multiplicity::fin(left);
        }
        out.splitting *= big_pow(p, absorbed);
        total_absorbed += absorbed;
    }
    out.cotorsion = m / out.splitting;

    // First level at which gcd(m, term(k)) reaches its limit. Each pass of
    // the cycle advances every infinite prime, so the cap below is safe.
    std::size_t cap = scale.head.size() +
                      scale.cycle.size() * (total_absorbed + 1) + 1;
    Bigint p = 1;
    for (std::size_t k = 0; k <= cap; ++k) {
        if (k > 0) p *= scale.ratio(k);
        if (big_gcd(m, p) == out.splitting) {
            out.stabilization_index = k;
            return out;
        }
    }
    throw Error("component_count: internal error, gcd failed to stabilize");
}

Bigint component_of(const OdometerElement& x, const Bigint& m) {
    x.validate();
    ComponentDecomposition cc = component_count(x.scale, m);
    if (cc.stabilization_index == 0) return 0; // a single component
    if (x.depth() < cc.stabilization_index)
        throw DepthError("component_of: element depth " + std::to_string(x.depth()) +
                         " is below the stabilization level " +
                         std::to_string(cc.stabilization_index));
    return mod_pos(x.residues[cc.stabilization_index - 1], cc.splitting);
}

namespace {

// The chain seen past level k, with its k+1-st term divided by d (which must
// divide term(k+1)): terms become term(k+i)/d.
Scale quotient_scale(const Scale& scale, std::size_t k, const Bigint& d) {
    Scale tail = scale_shift(scale, k + 1);
    Scale out;
    out.head.push_back(scale.term(k + 1) / d);
    out.head.insert(out.head.end(), tail.head.begin(), tail.head.end());
    out.cycle = tail.cycle;
    out.validate();
    return out;
}

} // namespace

OdometerElement conjugacy_to_component(const Scale& scale, const Bigint& m,
                                       const OdometerElement& x,
                                       const OdometerElement& y) {
    if (m < 1) throw Error("conjugacy_to_component: the multiplier must be >= 1");
    if (x.scale != scale || y.scale != scale)
        throw Error("conjugacy_to_component: elements must live over the given scale");
    x.validate();
    y.validate();

    // Least level whose term absorbs m entirely.
    std::size_t k = 0;
    {
        Bigint p = 1;
        bool found = false;
        for (std::size_t i = 0; i <= std::min(x.depth(), y.depth()); ++i) {
            if (i > 0) p *= scale.ratio(i);
            if (mpz_divisible_p(p.get_mpz_t(), m.get_mpz_t())) {
                k = i;
                found = true;
                break;
            }
        }
        if (!found)
            throw DepthError("conjugacy_to_component: no term up to depth " +
                             std::to_string(std::min(x.depth(), y.depth())) +
                             " is divisible by " + m.get_str());
    }
    if (y.depth() < k + 1)
        throw DepthError("conjugacy_to_component: need depth at least " +
                         std::to_string(k + 1));

    Bigint anchor = k == 0 ? Bigint(0) : x.residues[k - 1];
    if (k > 0 && mod_pos(y.residues[k - 1] - anchor, m) != 0)
        throw Error("conjugacy_to_component: y is not in the +" + m.get_str() +
                    "-component of x");

    OdometerElement z{quotient_scale(scale, k, m), {}};
    for (std::size_t i = 1; k + i <= y.depth(); ++i) {
        Bigint p = scale.term(k + i);
        Bigint delta = mod_pos(y.residues[k + i - 1] - anchor, p);
        z.residues.push_back(delta / m);
    }
    z.validate();
    return z;
}

TranslationStructure aut_structure(const Scale& scale, const Bigint& m) {
    TranslationStructure t;
    t.decomposition = component_count(scale, m);
    std::size_t k = t.decomposition.stabilization_index;
    // Components carry the chain past the stabilization level, rebased by s:
    // terms term(k+i)/s. With k = 0 that is the original chain.
    t.component_scale =
        k == 0 ? scale : quotient_scale(scale, k, t.decomposition.splitting);
    return t;
}

} // namespace odolab

#include "odolab/scales.hpp"

#include <algorithm>
#include <sstream>

namespace odolab {

void Scale::validate() const {
    for (const Bigint& r : head)
        if (r < 1) throw ScaleError("scale: head ratio " + r.get_str() + " is < 1");
    if (cycle.empty())
        throw ScaleError("scale: empty cycle describes a finite scale, which is not representable");
    Bigint prod = 1;
    for (const Bigint& r : cycle) {
        if (r < 1) throw ScaleError("scale: cycle ratio " + r.get_str() + " is < 1");
        prod *= r;
    }
    if (prod < 2)
        throw ScaleError("scale: cycle product is 1, so the chain stabilizes (finite scale)");
}

Bigint Scale::ratio(std::size_t k) const {
    if (k == 0) throw Error("scale: ratio index is 1-based");
    if (k <= head.size()) return head[k - 1];
    if (cycle.empty())
        throw ScaleError("scale: empty cycle describes a finite scale, which is not representable");
    return cycle[(k - 1 - head.size()) % cycle.size()];
}

Bigint Scale::term(std::size_t k) const {
    Bigint p = 1;
    for (std::size_t i = 1; i <= k; ++i) p *= ratio(i);
    return p;
}

MultiplicityProfile multiplicity_profile(const Scale& s) {
    s.validate();
    Bigint cycle_product = 1;
    for (const Bigint& r : s.cycle) cycle_product *= r;
    MultiplicityProfile out;
    for (const auto& [p, e] : factorize(cycle_product))
        out[p] = Multiplicity::inf();
    Bigint head_product = 1;
    for (const Bigint& r : s.head) head_product *= r;
    if (head_product > 1) {
        for (const auto& [p, e] : factorize(head_product))
            if (!out.count(p)) out[p] = Multiplicity::fin(e);
    }
    return out;
}

bool equivalent(const Scale& a, const Scale& b) {
    return multiplicity_profile(a) == multiplicity_profile(b);
}

bool precedes(const Scale& a, const Scale& b) {
    MultiplicityProfile pa = multiplicity_profile(a);
    MultiplicityProfile pb = multiplicity_profile(b);
    // Same infinite support...
    for (const auto& [p, m] : pa)
        if (m.infinite && (!pb.count(p) || !pb.at(p).infinite)) return false;
    for (const auto& [p, m] : pb)
        if (m.infinite && (!pa.count(p) || !pa.at(p).infinite)) return false;
    // ...and pointwise <= on the finite exponents (absent = 0).
    for (const auto& [p, m] : pa) {
        if (m.infinite) continue;
        unsigned rhs = pb.count(p) ? (pb.at(p).infinite ? 0u : pb.at(p).exponent) : 0u;
        if (pb.count(p) && pb.at(p).infinite) return false; // supports already differ
        if (m.exponent > rhs) return false;
    }
    return true;
}

std::vector<Bigint> torsion_subgroup(const Scale& s) {
    std::vector<Bigint> orders;
    for (const auto& [p, m] : multiplicity_profile(s))
        if (!m.infinite && m.exponent > 0)
            orders.push_back(big_pow(p, m.exponent));
    return orders; // increasing prime order, because the profile map is sorted
}

TorsionClass classify(const Scale& s) {
    for (const auto& [p, m] : multiplicity_profile(s))
        if (!m.infinite && m.exponent > 0) return TorsionClass::FiniteTorsion;
    return TorsionClass::TorsionFree;
    // InfiniteTorsion would need infinitely many finite primes, which an
    // eventually periodic ratio presentation cannot produce.
}

Decomposition decompose(const Scale& s) {
    Decomposition d;
    for (const auto& [p, m] : multiplicity_profile(s)) {
        if (m.infinite)
            d.infinite_primes.push_back(p);
        else if (m.exponent > 0)
            d.finite_part[p] = m.exponent;
    }
    return d;
}

namespace {

void append_prime_factors(const Bigint& ratio, std::vector<Bigint>& out) {
    if (ratio == 1) return; // ratio 1 contributes nothing and disappears
    for (const auto& [p, e] : factorize(ratio))
        for (unsigned i = 0; i < e; ++i) out.push_back(p);
}

} // namespace

Scale prime_refine(const Scale& s) {
    s.validate();
    Scale r;
    for (const Bigint& ratio : s.head) append_prime_factors(ratio, r.head);
    for (const Bigint& ratio : s.cycle) append_prime_factors(ratio, r.cycle);
    r.validate();
    return r;
}

Scale scale_from_profile(const MultiplicityProfile& profile) {
    Scale s;
    Bigint finite_product = 1;
    for (const auto& [p, m] : profile) {
        if (m.infinite)
            s.cycle.push_back(p);
        else if (m.exponent > 0)
            finite_product *= big_pow(p, m.exponent);
    }
    if (s.cycle.empty())
        throw ScaleError("scale_from_profile: empty infinite support describes a finite scale");
    if (finite_product > 1) s.head.push_back(finite_product);
    s.validate();
    return s;
}

Scale scale_shift(const Scale& s, std::size_t k) {
    s.validate();
    Scale out;
    if (k < s.head.size()) {
        out.head.assign(s.head.begin() + static_cast<std::ptrdiff_t>(k), s.head.end());
        out.cycle = s.cycle;
    } else {
        std::size_t rot = (k - s.head.size()) % s.cycle.size();
        out.cycle.assign(s.cycle.begin() + static_cast<std::ptrdiff_t>(rot), s.cycle.end());
        out.cycle.insert(out.cycle.end(), s.cycle.begin(),
                         s.cycle.begin() + static_cast<std::ptrdiff_t>(rot));
    }
    out.validate();
    return out;
}

std::string to_string(const Multiplicity& m) {
    return m.infinite ? "inf" : std::to_string(m.exponent);
}

std::string to_string(const MultiplicityProfile& p) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [prime, m] : p) {
        if (!first) os << ", ";
        first = false;
        os << prime.get_str() << ": " << to_string(m);
    }
    os << "}";
    return os.str();
}

std::string to_string(TorsionClass c) {
    switch (c) {
        case TorsionClass::TorsionFree: return "torsion-free";
        case TorsionClass::FiniteTorsion: return "finite-torsion";
        case TorsionClass::InfiniteTorsion: return "infinite-torsion";
    }
    return "?";
}

} // namespace odolab

#include "odolab/json_io.hpp"

#include "odolab/error.hpp"

namespace odolab::json_io {

namespace {

json bigints_to_json(const std::vector<Bigint>& v) {
    json out = json::array();
    for (const Bigint& n : v) out.push_back(to_json(n));
    return out;
}

std::vector<Bigint> bigints_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw Error(std::string(what) + " must be an array");
    std::vector<Bigint> out;
    for (const json& e : j) out.push_back(bigint_from_json(e));
    return out;
}

const json& require(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw Error(std::string(what) + " is missing the \"" + key + "\" field");
    return j.at(key);
}

}  // namespace

json to_json(const Bigint& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());
}

Bigint bigint_from_json(const json& j) {
    if (j.is_number_integer()) return Bigint(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Bigint(s);
        } catch (const std::invalid_argument&) {
            throw Error("not a decimal integer: \"" + s + "\"");
        }
    }
    throw Error("expected an integer or a decimal string, got " + j.dump());
}

json to_json(const Scale& s) {
    json out;
    out["head"] = bigints_to_json(s.head);
    out["cycle"] = bigints_to_json(s.cycle);
    return out;
}

Scale scale_from_json(const json& j) {
    if (j.is_object() && j.contains("profile"))
        return scale_from_profile(profile_from_json(j.at("profile")));
    Scale s;
    s.head = bigints_from_json(require(j, "head", "scale"), "scale head");
    s.cycle = bigints_from_json(require(j, "cycle", "scale"), "scale cycle");
    s.validate();
    return s;
}

json to_json(const MultiplicityProfile& profile) {
    json out = json::object();
    for (const auto& [prime, mult] : profile) {
        if (mult.infinite)
            out[prime.get_str()] = "inf";
        else
            out[prime.get_str()] = mult.exponent;
    }
    return out;
}

MultiplicityProfile profile_from_json(const json& j) {
    if (!j.is_object()) throw Error("profile must be an object");
    MultiplicityProfile out;
    for (const auto& [key, value] : j.items()) {
        Bigint prime;
        try {
            prime = Bigint(key);
        } catch (const std::invalid_argument&) {
            throw Error("profile key is not a decimal integer: \"" + key + "\"");
        }
        if (prime < 2) throw Error("profile keys must be primes, got " + key);
        if (value.is_string() && value.get<std::string>() == "inf") {
            out[prime] = Multiplicity::inf();
        } else if (value.is_number_integer() && value.get<std::int64_t>() > 0) {
            out[prime] = Multiplicity::fin(static_cast<unsigned>(value.get<std::int64_t>()));
        } else {
            throw Error("profile values must be positive integers or \"inf\"");
        }
    }
    return out;
}

json to_json(const OdometerElement& x) {
    json out;
    out["scale"] = to_json(x.scale);
    out["residues"] = bigints_to_json(x.residues);
    return out;
}

OdometerElement element_from_json(const json& j) {
    OdometerElement x;
    x.scale = scale_from_json(require(j, "scale", "element"));
    x.residues = bigints_from_json(require(j, "residues", "element"), "element residues");
    x.validate();
    return x;
}

json to_json(const std::vector<FGrowthPoint>& seq) {
    json out;
    out["levels"] = json::array();
    out["f"] = json::array();
    for (const FGrowthPoint& p : seq) {
        out["levels"].push_back(to_json(p.level));
        out["f"].push_back(p.order.get_str());  // bit-exact, always a string
    }
    return out;
}

json to_json(const ToeplitzWindow& w) {
    json out;
    out["offset"] = w.lo;
    std::string symbols;
    symbols.reserve(w.cells.size());
    for (int c : w.cells) symbols.push_back(c == kHole ? '?' : static_cast<char>('0' + c));
    out["symbols"] = symbols;
    json ann = json::array();
    for (const Bigint& a : w.annotations)
        ann.push_back(a == 0 ? json(nullptr) : to_json(a));
    out["annotations"] = ann;
    return out;
}

ToeplitzWindow window_from_json(const json& j) {
    ToeplitzWindow w;
    const Bigint offset = bigint_from_json(require(j, "offset", "window"));
    if (!offset.fits_slong_p()) throw Error("window offset out of range");
    w.lo = offset.get_si();
    const json& sym = require(j, "symbols", "window");
    if (!sym.is_string()) throw Error("window symbols must be a string of 0, 1, ?");
    for (char c : sym.get<std::string>()) {
        if (c == '?') w.cells.push_back(kHole);
        else if (c == '0' || c == '1') w.cells.push_back(c - '0');
        else throw Error("window symbols must be a string of 0, 1, ?");
    }
    w.annotations.assign(w.cells.size(), Bigint(0));
    if (j.contains("annotations") && !j.at("annotations").is_null()) {
        const json& ann = j.at("annotations");
        if (!ann.is_array() || ann.size() != w.cells.size())
            throw Error("window annotations must match the symbol count");
        for (std::size_t i = 0; i < w.cells.size(); ++i) {
            if (ann[i].is_null()) continue;
            Bigint a = bigint_from_json(ann[i]);
            if (a < 0) throw Error("window annotations must be non-negative");
            w.annotations[i] = a;
        }
    }
    return w;
}

namespace {

json stage_to_json(const FillStage& s) {
    if (s.alternate) return json("alt");
    return json(s.symbol == 0 ? "0" : "1");
}

FillStage stage_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "0") return FillStage{false, 0};
        if (s == "1") return FillStage{false, 1};
        if (s == "alt") return FillStage{true, 0};
        throw Error("unknown stage \"" + s + "\" (expected \"0\", \"1\", or \"alt\")");
    }
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v == 0 || v == 1) return FillStage{false, static_cast<int>(v)};
    }
    throw Error("unknown stage " + j.dump() + " (expected \"0\", \"1\", or \"alt\")");
}

std::vector<FillStage> stages_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw Error(std::string(what) + " must be an array of stages");
    std::vector<FillStage> out;
    for (const json& e : j) out.push_back(stage_from_json(e));
    return out;
}

}  // namespace

json to_json(const FillRule& rule) {
    if (!rule.name.empty()) return json(rule.name);
    json stages;
    if (rule.head.empty()) {
        stages = json::array();
        for (const FillStage& s : rule.cycle) stages.push_back(stage_to_json(s));
    } else {
        stages = json::object();
        stages["head"] = json::array();
        stages["cycle"] = json::array();
        for (const FillStage& s : rule.head) stages["head"].push_back(stage_to_json(s));
        for (const FillStage& s : rule.cycle) stages["cycle"].push_back(stage_to_json(s));
    }
    json out;
    out["stages"] = stages;
    return out;
}

FillRule rule_from_json(const json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "paper53") return rule_paper53();
        if (name == "paper54") return rule_paper54();
        throw Error("unknown rule \"" + name + "\" (expected \"paper53\", \"paper54\", or stages)");
    }
    const json& stages = require(j, "stages", "rule");
    if (stages.is_array())
        return make_fill_rule({}, stages_from_json(stages, "rule stages"));
    if (stages.is_object())
        return make_fill_rule(stages_from_json(require(stages, "head", "rule stages"), "rule head"),
                              stages_from_json(require(stages, "cycle", "rule stages"), "rule cycle"));
    throw Error("rule stages must be an array or a {\"head\",\"cycle\"} object");
}

json to_json(const PeriodStructure& ps) {
    json out;
    out["chain"] = bigints_to_json(ps.chain);
    out["window"] = json::array({ps.window_lo, ps.window_hi});
    out["min_translates"] = ps.min_translates;
    return out;
}

PeriodStructure period_structure_from_json(const json& j) {
    PeriodStructure ps;
    ps.chain = bigints_from_json(require(j, "chain", "period structure"), "period chain");
    if (j.contains("window")) {
        const json& w = j.at("window");
        if (!w.is_array() || w.size() != 2) throw Error("period structure window must be [lo, hi]");
        ps.window_lo = w[0].get<std::int64_t>();
        ps.window_hi = w[1].get<std::int64_t>();
    }
    if (j.contains("min_translates")) ps.min_translates = j.at("min_translates").get<std::size_t>();
    return ps;
}

const char* torsion_class_name(TorsionClass c) {
    switch (c) {
        case TorsionClass::TorsionFree: return "TorsionFree";
        case TorsionClass::FiniteTorsion: return "FiniteTorsion";
        case TorsionClass::InfiniteTorsion: return "InfiniteTorsion";
    }
    throw Error("unknown torsion class");
}

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Equivalent: return "EquivalentScales";
        case VerdictKind::InfiniteSupportDiffers: return "DistinctByInfiniteSupport";
        case VerdictKind::TorsionDiffers: return "SameInfiniteSupport";
    }
    throw Error("unknown verdict kind");
}

json to_json(const DistinguishVerdict& v) {
    json out;
    out["kind"] = verdict_name(v.kind);
    switch (v.kind) {
        case VerdictKind::Equivalent:
            break;
        case VerdictKind::InfiniteSupportDiffers:
            out["witness_prime"] = to_json(v.witness_prime);
            out["divergence_level"] = to_json(v.divergence_level);
            out["exhibit_left"] = to_json(v.exhibit_left);
            out["exhibit_right"] = to_json(v.exhibit_right);
            break;
        case VerdictKind::TorsionDiffers:
            out["torsion_left"] = bigints_to_json(v.torsion_left);
            out["torsion_right"] = bigints_to_json(v.torsion_right);
            break;
    }
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

}  // namespace odolab::json_io

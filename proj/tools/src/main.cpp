// odolab: classify divisibility chains, decompose their translation
// symmetry groups, analyse staged Toeplitz windows, and cross-check the
// closed-form answers against brute-force oracles.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "odolab/error.hpp"
#include "odolab/groups.hpp"
#include "odolab/json_io.hpp"
#include "odolab/odometer.hpp"
#include "odolab/oracle.hpp"
#include "odolab/scales.hpp"
#include "odolab/toeplitz.hpp"

namespace {

using odolab::Bigint;
using odolab::json_io::json;

constexpr const char* kSchema = "odolab/1";

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw odolab::Error(what + " is not valid JSON: " + e.what());
    }
}

json load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw odolab::Error("cannot read spec file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

// A positional may hold inline JSON; with --spec the value comes from the
// named field of the spec file instead.
json field_or_arg(const json& spec, const char* key, const std::string& arg,
                  const std::string& what) {
    if (!spec.is_null()) {
        if (!spec.contains(key))
            throw odolab::Error("spec file is missing the \"" + std::string(key) + "\" field");
        return spec.at(key);
    }
    if (arg.empty()) throw odolab::Error("missing " + what + " (argument or --spec)");
    return parse_json_text(arg, what);
}

std::vector<Bigint> bigint_list(const json& j, const std::string& what) {
    if (j.is_array()) {
        std::vector<Bigint> out;
        for (const json& e : j) out.push_back(odolab::json_io::bigint_from_json(e));
        return out;
    }
    if (j.is_string()) {  // comma-separated shorthand
        std::vector<Bigint> out;
        std::stringstream ss(j.get<std::string>());
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            out.push_back(odolab::json_io::bigint_from_json(json(item)));
        }
        if (out.empty()) throw odolab::Error(what + " must list at least one integer");
        return out;
    }
    throw odolab::Error(what + " must be an array or a comma-separated string");
}

void emit(const json& report, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

std::string profile_line(const odolab::MultiplicityProfile& p) {
    return p.empty() ? "(trivial)" : odolab::to_string(p);
}

std::string chain_line(const std::vector<Bigint>& chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i != 0) out += ", ";
        out += chain[i].get_str();
    }
    return out;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const json& spec, const std::string& scale_arg, bool as_json) {
    const odolab::Scale s =
        odolab::json_io::scale_from_json(field_or_arg(spec, "scale", scale_arg, "scale"));
    const odolab::MultiplicityProfile profile = odolab::multiplicity_profile(s);
    const odolab::Decomposition dec = odolab::decompose(s);
    const odolab::TorsionClass cls = odolab::classify(s);
    const std::vector<Bigint> torsion = odolab::torsion_subgroup(s);

    json report;
    report["schema"] = kSchema;
    report["command"] = "classify";
    report["scale"] = odolab::json_io::to_json(s);
    report["profile"] = odolab::json_io::to_json(profile);
    report["infinite_support"] = json::array();
    for (const Bigint& q : dec.infinite_primes)
        report["infinite_support"].push_back(odolab::json_io::to_json(q));
    report["finite_part"] = json::object();
    for (const auto& [q, e] : dec.finite_part) report["finite_part"][q.get_str()] = e;
    report["torsion_class"] = odolab::json_io::torsion_class_name(cls);
    report["torsion_orders"] = json::array();
    for (const Bigint& n : torsion) report["torsion_orders"].push_back(odolab::json_io::to_json(n));

    std::ostringstream human;
    human << "profile:         " << profile_line(profile) << "\n"
          << "torsion class:   " << odolab::json_io::torsion_class_name(cls) << "\n"
          << "torsion orders:  " << (torsion.empty() ? "(none)" : chain_line(torsion)) << "\n";
    emit(report, as_json, human.str());
    return 0;
}

// ----------------------------------------------------------------- compare

int cmd_compare(const json& spec, const std::string& left_arg,
                const std::string& right_arg, bool as_json) {
    const odolab::Scale a =
        odolab::json_io::scale_from_json(field_or_arg(spec, "left", left_arg, "left scale"));
    const odolab::Scale b =
        odolab::json_io::scale_from_json(field_or_arg(spec, "right", right_arg, "right scale"));
    const odolab::DistinguishVerdict verdict = odolab::distinguish(a, b);

    json report;
    report["schema"] = kSchema;
    report["command"] = "compare";
    report["left"] = odolab::json_io::to_json(a);
    report["right"] = odolab::json_io::to_json(b);
    report["equivalent"] = odolab::equivalent(a, b);
    report["precedes_left_right"] = odolab::precedes(a, b);
    report["precedes_right_left"] = odolab::precedes(b, a);
    report["verdict"] = odolab::json_io::to_json(verdict);

    std::ostringstream human;
    human << "verdict: " << odolab::json_io::verdict_name(verdict.kind) << "\n";
    if (verdict.kind == odolab::VerdictKind::InfiniteSupportDiffers) {
        human << "witness prime: " << verdict.witness_prime.get_str()
              << ", growth orders diverge at level " << verdict.divergence_level.get_str() << "\n";
    }
    if (verdict.kind == odolab::VerdictKind::TorsionDiffers) {
        human << "torsion: [" << chain_line(verdict.torsion_left) << "] vs ["
              << chain_line(verdict.torsion_right) << "]\n";
    }
    if (!verdict.note.empty()) human << "note: " << verdict.note << "\n";
    emit(report, as_json, human.str());
    return 0;
}

// -------------------------------------------------------------- components

int cmd_components(const json& spec, const std::string& scale_arg,
                   const std::string& m_arg, bool as_json) {
    const odolab::Scale s =
        odolab::json_io::scale_from_json(field_or_arg(spec, "scale", scale_arg, "scale"));
    const Bigint m = odolab::json_io::bigint_from_json(
        field_or_arg(spec, "multiplier", m_arg, "multiplier"));
    const odolab::TranslationStructure ts = odolab::aut_structure(s, m);
    const odolab::ComponentDecomposition& dec = ts.decomposition;

    json report;
    report["schema"] = kSchema;
    report["command"] = "components";
    report["scale"] = odolab::json_io::to_json(s);
    report["multiplier"] = odolab::json_io::to_json(m);
    report["splitting"] = odolab::json_io::to_json(dec.splitting);
    report["cotorsion"] = odolab::json_io::to_json(dec.cotorsion);
    report["stabilization_index"] = dec.stabilization_index;
    report["component_profile"] = odolab::json_io::to_json(dec.component_profile);
    report["component_scale"] = odolab::json_io::to_json(ts.component_scale);

    std::ostringstream human;
    human << "components:          " << dec.splitting.get_str() << "\n"
          << "step per component:  " << dec.cotorsion.get_str() << "\n"
          << "stabilizes at level: " << dec.stabilization_index << "\n"
          << "component profile:   " << profile_line(dec.component_profile) << "\n";
    emit(report, as_json, human.str());
    return 0;
}

// ----------------------------------------------------------------- fgrowth

int cmd_fgrowth(const json& spec, const std::string& scale_arg,
                const std::string& levels_arg, bool as_json) {
    const odolab::Scale s =
        odolab::json_io::scale_from_json(field_or_arg(spec, "scale", scale_arg, "scale"));
    json levels_json;
    if (!spec.is_null())
        levels_json = field_or_arg(spec, "levels", "", "levels");
    else if (!levels_arg.empty() && levels_arg.front() == '[')
        levels_json = parse_json_text(levels_arg, "levels");
    else
        levels_json = levels_arg.empty() ? json() : json(levels_arg);
    if (levels_json.is_null()) throw odolab::Error("missing levels (argument or --spec)");
    const std::vector<Bigint> levels = bigint_list(levels_json, "levels");
    const std::vector<odolab::FGrowthPoint> seq = odolab::f_sequence(s, levels);

    json report;
    report["schema"] = kSchema;
    report["command"] = "fgrowth";
    report["scale"] = odolab::json_io::to_json(s);
    json fg = odolab::json_io::to_json(seq);
    report["levels"] = fg["levels"];
    report["f"] = fg["f"];

    std::ostringstream human;
    for (const odolab::FGrowthPoint& p : seq)
        human << "F(" << p.level.get_str() << ") = " << p.order.get_str() << "\n";
    emit(report, as_json, human.str());
    return 0;
}

// ---------------------------------------------------------------- toeplitz

struct ToeplitzOpts {
    std::string rule_arg;
    std::size_t stages = 10;
    std::int64_t window = 4096;
    std::int64_t offset = 0;
    std::size_t min_translates = 4;
    std::vector<std::string> per;
    std::string candidates;
    std::string sigma;
    std::vector<std::string> fbound;
    std::vector<std::size_t> complexity_len;
};

int cmd_toeplitz(const json& spec, const ToeplitzOpts& opt, bool as_json) {
    json rule_json;
    if (!spec.is_null())
        rule_json = field_or_arg(spec, "rule", "", "rule");
    else if (opt.rule_arg == "paper53" || opt.rule_arg == "paper54")
        rule_json = json(opt.rule_arg);  // bare names allowed on the command line
    else
        rule_json = field_or_arg(spec, "rule", opt.rule_arg, "rule");
    const odolab::FillRule rule = odolab::json_io::rule_from_json(rule_json);
    if (opt.window <= 0) throw odolab::Error("window size must be positive");

    const odolab::ToeplitzWindow w =
        odolab::generate(rule, opt.stages, opt.offset, opt.offset + opt.window);

    json report;
    report["schema"] = kSchema;
    report["command"] = "toeplitz";
    report["rule"] = odolab::json_io::to_json(rule);
    report["stages"] = opt.stages;
    report["window"] = odolab::json_io::to_json(w);

    std::ostringstream human;
    const std::string symbols = report["window"]["symbols"].get<std::string>();
    human << "window [" << opt.offset << ", " << opt.offset + opt.window << "): "
          << symbols.substr(0, 64) << (symbols.size() > 64 ? "..." : "") << "\n";

    if (!opt.per.empty()) {
        report["per"] = json::object();
        for (const std::string& p_str : opt.per) {
            const Bigint p = odolab::json_io::bigint_from_json(json(p_str));
            const auto positions = odolab::per_p(w, p, opt.min_translates);
            report["per"][p.get_str()] = json(positions);
            human << "per_" << p.get_str() << ": " << positions.size() << " positions\n";
        }
    }

    // Analyses below need a certified structure; it comes from --candidates.
    odolab::PeriodStructure ps;
    bool have_ps = false;
    if (!opt.candidates.empty() || (!spec.is_null() && spec.contains("candidates"))) {
        const json cj = !opt.candidates.empty() ? json(opt.candidates) : spec.at("candidates");
        ps = odolab::essential_periods(w, bigint_list(cj, "candidates"), opt.min_translates);
        have_ps = true;
        report["essential_periods"] = odolab::json_io::to_json(ps);
        human << "essential periods: (" << chain_line(ps.chain) << ")\n";
    }

    if (!opt.sigma.empty()) {
        if (!have_ps)
            throw odolab::Error("--sigma needs a certified structure; pass --candidates");
        const Bigint m = odolab::json_io::bigint_from_json(json(opt.sigma));
        const odolab::SigmaPowerComponents sc =
            odolab::sigma_m_components(rule, ps, m, opt.stages, opt.offset,
                                       opt.offset + opt.window);
        json sj;
        sj["m"] = odolab::json_io::to_json(m);
        sj["splitting"] = odolab::json_io::to_json(sc.splitting);
        sj["cotorsion"] = odolab::json_io::to_json(sc.cotorsion);
        sj["component_structure"] = odolab::json_io::to_json(sc.component_structure);
        sj["representatives"] = json::array();
        for (const odolab::ToeplitzWindow& rep : sc.representatives)
            sj["representatives"].push_back(odolab::json_io::to_json(rep));
        report["sigma"] = sj;
        human << "sigma^" << m.get_str() << ": " << sc.splitting.get_str()
              << " components, step " << sc.cotorsion.get_str() << " each\n";
    }

    if (!opt.fbound.empty()) {
        if (!have_ps)
            throw odolab::Error("--fbound needs a certified structure; pass --candidates");
        report["f_lower_bound"] = json::array();
        for (const std::string& m_str : opt.fbound) {
            const Bigint m = odolab::json_io::bigint_from_json(json(m_str));
            const Bigint bound = odolab::f_lower_bound(ps, m);
            json fj;
            fj["m"] = odolab::json_io::to_json(m);
            fj["bound"] = bound.get_str();
            report["f_lower_bound"].push_back(fj);
            human << "f lower bound at sigma^" << m.get_str() << ": " << bound.get_str() << "\n";
        }
    }

    if (!opt.complexity_len.empty()) {
        report["complexity"] = json::object();
        for (std::size_t n : opt.complexity_len) {
            const std::size_t count = odolab::complexity(w, n);
            report["complexity"][std::to_string(n)] = count;
            human << "distinct length-" << n << " factors: " << count << "\n";
        }
    }

    emit(report, as_json, human.str());
    return 0;
}

// ------------------------------------------------------------------ verify

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t mismatches = 0;
    std::size_t skipped = 0;  // cases the budget could not afford
};

// Splitting counts from the profile formula vs. literal orbit traversal.
SuiteResult verify_orbits(std::uint64_t budget) {
    SuiteResult r{"orbit-splitting", 0, 0};
    const std::vector<odolab::Scale> corpus = {
        odolab::Scale{{}, {Bigint(2)}},
        odolab::Scale{{}, {Bigint(4)}},
        odolab::Scale{{}, {Bigint(6)}},
        odolab::Scale{{Bigint(9)}, {Bigint(2)}},
        odolab::Scale{{Bigint(12)}, {Bigint(5)}},
        odolab::Scale{{Bigint(2), Bigint(2)}, {Bigint(3), Bigint(5)}},
    };
    std::uint64_t done = 0;
    for (const odolab::Scale& s : corpus) {
        for (Bigint m = 1; m <= 12 && done < budget; ++m, ++done) {
            const odolab::ComponentDecomposition dec = odolab::component_count(s, m);
            for (std::size_t k : {dec.stabilization_index, dec.stabilization_index + 1}) {
                if (k == 0) continue;
                const Bigint modulus = s.term(k);
                if (modulus > 200000) continue;
                ++r.checks;
                const Bigint expected = odolab::big_gcd(m, modulus);
                if (odolab::oracle::orbit_count(odolab::to_u64(modulus, "modulus"),
                                                odolab::to_u64(odolab::mod_pos(m, modulus),
                                                               "step")) !=
                    odolab::to_u64(expected, "splitting"))
                    ++r.mismatches;
                // Past stabilization the gcd must equal the splitting itself.
                if (k > dec.stabilization_index && expected != dec.splitting) ++r.mismatches;
            }
        }
    }
    return r;
}

// Constructive commuting-bijection counts vs. the full permutation scan.
SuiteResult verify_commuting(std::uint64_t budget) {
    SuiteResult r{"commuting-count", 0, 0};
    std::uint64_t done = 0;
    for (std::uint64_t n = 2; n <= 7; ++n) {
        for (std::uint64_t m = 0; m < n && done < budget; ++m, ++done) {
            ++r.checks;
            if (odolab::oracle::commuting_bijections_count(n, m) !=
                odolab::oracle::commuting_bijections_count_by_scan(n, m))
                ++r.mismatches;
        }
    }
    return r;
}

// Closed-form largest-finite-subgroup orders vs. breadth-first subgroup
// search in the materialized wreath product.
SuiteResult verify_subgroups(std::uint64_t budget) {
    SuiteResult r{"subgroup-order", 0, 0};
    struct Case {
        odolab::Scale scale;
        Bigint m;
        std::uint64_t modulus, d, torsion;
    };
    const std::vector<Case> cases = {
        {odolab::Scale{{}, {Bigint(2)}}, Bigint(2), 1, 2, 0},
        {odolab::Scale{{}, {Bigint(2)}}, Bigint(4), 1, 4, 0},
        {odolab::Scale{{Bigint(9)}, {Bigint(2)}}, Bigint(2), 9, 2, 0},
        {odolab::Scale{{Bigint(12)}, {Bigint(5)}}, Bigint(2), 6, 2, 0},
    };
    for (const Case& c : cases) {
        try {
            const Bigint oracle = odolab::oracle::max_subgroup_order(
                c.modulus, c.d, c.torsion, budget);
            ++r.checks;
            const Bigint formula = odolab::max_finite_subgroup_order(
                odolab::make_group_descriptor(c.scale, c.m));
            if (formula != oracle) ++r.mismatches;
        } catch (const odolab::BudgetError&) {
            ++r.skipped;
        }
    }
    return r;
}

// Sliding-block self-conjugacies commuting with sigma^1 vs. sigma^3: the
// qualifying rule sets must coincide.
SuiteResult verify_blockcode(std::uint64_t budget) {
    SuiteResult r{"block-code", 0, 0};
    const odolab::ToeplitzWindow w = odolab::generate(odolab::rule_paper53(), 8, 0, 512);
    std::string text;
    for (int c : w.cells) text.push_back(c == odolab::kHole ? '?' : static_cast<char>('0' + c));
    try {
        const auto one = odolab::oracle::block_code_autos(text, 1, 1, 24, 7, budget);
        const auto three = odolab::oracle::block_code_autos(text, 1, 3, 24, 7, budget);
        ++r.checks;
        std::set<std::uint32_t> lhs, rhs;
        for (const auto& rule : one.qualifying) lhs.insert(rule.table);
        for (const auto& rule : three.qualifying) rhs.insert(rule.table);
        if (lhs != rhs || lhs.empty()) ++r.mismatches;
    } catch (const odolab::BudgetError&) {
        ++r.skipped;
    }
    return r;
}

// The rebasing map of a translation component must intertwine: moving the
// source by m moves the image by exactly 1.  Checked on random elements with
// fresh arithmetic on both sides.
SuiteResult verify_conjugacy(std::uint64_t budget, std::uint64_t depth) {
    SuiteResult r{"conjugacy", 0, 0};
    if (depth < 6 || depth > 64) throw odolab::Error("conjugacy suite needs --depth in [6, 64]");
    const odolab::Scale two{{}, {Bigint(2)}};
    std::mt19937_64 rng(20240817);
    const Bigint top = two.term(depth);
    for (const Bigint m : {Bigint(2), Bigint(4), Bigint(8)}) {
        const std::uint64_t trials = std::min<std::uint64_t>(budget, 40);
        for (std::uint64_t t = 0; t < trials; ++t) {
            // y must sit in the same +m-component as the anchor x = 0.
            const Bigint val = m * (Bigint(static_cast<unsigned long>(rng())) % (top / m));
            const auto x = odolab::embed_integer(two, 0, depth);
            const auto y = odolab::embed_integer(two, val, depth);
            const auto y_plus_m = odolab::embed_integer(two, val + m, depth);
            const auto z = odolab::conjugacy_to_component(two, m, x, y);
            const auto z_shifted = odolab::conjugacy_to_component(two, m, x, y_plus_m);
            const auto z_plus_one =
                odolab::add(z, odolab::embed_integer(z.scale, 1, z.depth()));
            ++r.checks;
            if (z_shifted.residues != z_plus_one.residues) ++r.mismatches;
        }
    }
    return r;
}

int cmd_verify(const std::string& suite, std::uint64_t budget, std::uint64_t depth,
               bool as_json) {
    json report;
    report["schema"] = kSchema;
    report["command"] = "verify";
    report["budget"] = budget;
    report["suites"] = json::array();

    std::ostringstream human;
    std::size_t mismatches = 0;
    if (budget == 0) {
        report["warning"] = "nothing verified: budget is 0";
        human << "warning: nothing verified (budget 0)\n";
    } else {
        std::vector<SuiteResult> results;
        if (suite == "all" || suite == "orbits") results.push_back(verify_orbits(budget));
        if (suite == "all" || suite == "commuting") results.push_back(verify_commuting(budget));
        if (suite == "all" || suite == "subgroups") results.push_back(verify_subgroups(budget));
        if (suite == "all" || suite == "blockcode") results.push_back(verify_blockcode(budget));
        if (suite == "all" || suite == "conjugacy")
            results.push_back(verify_conjugacy(budget, depth));
        if (results.empty()) throw odolab::Error("unknown suite: " + suite);
        for (const SuiteResult& r : results) {
            json sj;
            sj["name"] = r.name;
            sj["checks"] = r.checks;
            sj["mismatches"] = r.mismatches;
            sj["skipped"] = r.skipped;
            report["suites"].push_back(sj);
            mismatches += r.mismatches;
            human << r.name << ": " << r.checks << " checks, " << r.mismatches
                  << " mismatches";
            if (r.skipped != 0) human << " (" << r.skipped << " skipped: over budget)";
            human << "\n";
        }
    }
    report["ok"] = mismatches == 0;
    emit(report, as_json, human.str());
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computations with divisibility chains, their translation symmetry groups, "
                 "and staged Toeplitz windows"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string spec_path;
    app.add_flag("--json", as_json, "machine-readable JSON output")->configurable(false);
    app.add_option("--spec", spec_path, "read inputs from a JSON file");

    std::string scale_arg, left_arg, right_arg, m_arg, levels_arg;

    CLI::App* classify = app.add_subcommand("classify", "profile and torsion data of a chain");
    classify->add_option("scale", scale_arg, "scale JSON, e.g. '{\"head\":[9],\"cycle\":[2]}'");

    CLI::App* compare = app.add_subcommand("compare", "decide what separates two chains");
    compare->add_option("left", left_arg, "left scale JSON");
    compare->add_option("right", right_arg, "right scale JSON");

    CLI::App* components = app.add_subcommand("components", "how x -> x + m splits the chain");
    components->add_option("scale", scale_arg, "scale JSON");
    components->add_option("multiplier", m_arg, "translation amount m");

    CLI::App* fgrowth = app.add_subcommand("fgrowth", "largest finite subgroup orders along levels");
    fgrowth->add_option("scale", scale_arg, "scale JSON");
    fgrowth->add_option("levels", levels_arg, "divisibility chain of levels, e.g. 2,4,8");

    ToeplitzOpts topt;
    CLI::App* toeplitz = app.add_subcommand("toeplitz", "staged filling windows and their analyses");
    toeplitz->add_option("rule", topt.rule_arg, "paper53, paper54, or rule JSON");
    toeplitz->add_option("--stages", topt.stages, "number of filling stages")->capture_default_str();
    toeplitz->add_option("--window", topt.window, "window length")->capture_default_str();
    toeplitz->add_option("--offset", topt.offset, "window start position")->capture_default_str();
    toeplitz->add_option("--min-translates", topt.min_translates,
                         "evidence minimum for periodicity certificates")->capture_default_str();
    toeplitz->add_option("--per", topt.per, "report per_p for this period (repeatable)");
    toeplitz->add_option("--candidates", topt.candidates,
                         "candidate period chain for essential_periods, e.g. 2,4,8,16");
    toeplitz->add_option("--sigma", topt.sigma, "split the window under sigma^m");
    toeplitz->add_option("--fbound", topt.fbound,
                         "growth lower bound at sigma^m (repeatable; needs --candidates)");
    toeplitz->add_option("--complexity-len", topt.complexity_len,
                         "count distinct factors of this length (repeatable)");

    std::string suite = "all";
    std::uint64_t budget = 4096;
    std::uint64_t depth = 12;
    CLI::App* verify = app.add_subcommand("verify", "cross-check formulas against oracles");
    verify->add_option("suite", suite,
                       "orbits | commuting | subgroups | blockcode | conjugacy | all")
        ->capture_default_str();
    verify->add_option("--budget", budget, "oracle work budget; 0 verifies nothing")
        ->capture_default_str();
    verify->add_option("--depth", depth, "truncation depth for element suites")
        ->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const json spec = spec_path.empty() ? json() : load_spec(spec_path);
        if (classify->parsed()) return cmd_classify(spec, scale_arg, as_json);
        if (compare->parsed()) return cmd_compare(spec, left_arg, right_arg, as_json);
        if (components->parsed()) return cmd_components(spec, scale_arg, m_arg, as_json);
        if (fgrowth->parsed()) return cmd_fgrowth(spec, scale_arg, levels_arg, as_json);
        if (toeplitz->parsed()) return cmd_toeplitz(spec, topt, as_json);
        if (verify->parsed()) return cmd_verify(suite, budget, depth, as_json);
    } catch (const odolab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

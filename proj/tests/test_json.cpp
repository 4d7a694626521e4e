#include "odolab/json_io.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "odolab/error.hpp"
#include "odolab/odometer.hpp"
#include "odolab/toeplitz.hpp"

using namespace odolab;
using json_io::json;

TEST_CASE("big integers ride as numbers while they fit and as strings beyond") {
    CHECK(json_io::to_json(Bigint(42)).is_number_integer());
    CHECK(json_io::to_json(Bigint(-7)).get<int>() == -7);

    const Bigint huge = big_pow(2, 100);
    const json j = json_io::to_json(huge);
    CHECK(j.is_string());
    CHECK(json_io::bigint_from_json(j) == huge);

    CHECK(json_io::bigint_from_json(json(123)) == 123);
    CHECK(json_io::bigint_from_json(json("98765432109876543210")) == Bigint("98765432109876543210"));
    CHECK_THROWS_AS(json_io::bigint_from_json(json("12x")), Error);
    CHECK_THROWS_AS(json_io::bigint_from_json(json(1.5)), Error);
    CHECK_THROWS_AS(json_io::bigint_from_json(json::array()), Error);
}

TEST_CASE("scales round-trip and the profile form synthesizes a chain") {
    const Scale s{{Bigint(9)}, {Bigint(2)}};
    const Scale back = json_io::scale_from_json(json_io::to_json(s));
    CHECK(back == s);

    // {"profile": ...} is accepted anywhere a scale is accepted.
    const Scale synth = json_io::scale_from_json(
        json::parse(R"({"profile":{"2":"inf","3":2}})"));
    CHECK(equivalent(synth, s));
    CHECK(multiplicity_profile(synth) == multiplicity_profile(s));

    CHECK_THROWS_AS(json_io::scale_from_json(json::parse(R"({"head":[2]})")), Error);
    CHECK_THROWS_AS(json_io::scale_from_json(json::parse(R"({"head":[],"cycle":[1]})")),
                    ScaleError);
    CHECK_THROWS_AS(json_io::profile_from_json(json::parse(R"({"2":0})")), Error);
    CHECK_THROWS_AS(json_io::profile_from_json(json::parse(R"({"2":"lots"})")), Error);
    CHECK_THROWS_AS(json_io::profile_from_json(json::parse(R"({"x":1})")), Error);
}

TEST_CASE("elements serialize with their scale and validate on the way in") {
    const Scale two{{}, {Bigint(2)}};
    const OdometerElement x = embed_integer(two, 11, 6);
    const OdometerElement back = json_io::element_from_json(json_io::to_json(x));
    CHECK(back.scale == x.scale);
    CHECK(back.residues == x.residues);

    json bad = json_io::to_json(x);
    bad["residues"][0] = 5;  // out of range for Z/2 and incoherent
    CHECK_THROWS_AS(json_io::element_from_json(bad), Error);
}

TEST_CASE("growth sequences serialize orders as exact decimal strings") {
    const Scale two{{}, {Bigint(2)}};
    const json j = json_io::to_json(f_sequence(two, {Bigint(2), Bigint(4), Bigint(8)}));
    CHECK(j.dump() == R"({"levels":[2,4,8],"f":["2","24","40320"]})");
}

TEST_CASE("windows round-trip with holes and annotations") {
    const ToeplitzWindow w = generate(rule_paper53(), 5, -8, 40);
    const json j = json_io::to_json(w);
    CHECK(j["offset"] == -8);
    CHECK(j["symbols"].get<std::string>().size() == 48);
    const ToeplitzWindow back = json_io::window_from_json(j);
    CHECK(back.lo == w.lo);
    CHECK(back.cells == w.cells);
    CHECK(back.annotations == w.annotations);

    // Hole cells serialize their annotation as null.
    bool saw_null = false;
    for (std::size_t i = 0; i < w.cells.size(); ++i)
        if (w.cells[i] == kHole) {
            CHECK(j["annotations"][i].is_null());
            saw_null = true;
        }
    CHECK(saw_null);

    // Annotations are optional on input.
    const ToeplitzWindow plain = json_io::window_from_json(
        json::parse(R"({"offset":0,"symbols":"01?10"})"));
    CHECK(plain.cells == std::vector<int>{0, 1, kHole, 1, 0});
    CHECK(plain.annotations == std::vector<Bigint>(5, Bigint(0)));

    CHECK_THROWS_AS(json_io::window_from_json(json::parse(R"({"offset":0,"symbols":"012"})")),
                    Error);
    CHECK_THROWS_AS(
        json_io::window_from_json(json::parse(R"({"offset":0,"symbols":"01","annotations":[1]})")),
        Error);
}

TEST_CASE("rules parse by name or by stage list") {
    CHECK(json_io::to_json(rule_paper53()) == json("paper53"));
    const FillRule named = json_io::rule_from_json(json("paper54"));
    CHECK(named.structure.term(1) == 4);

    const FillRule flat = json_io::rule_from_json(json::parse(R"({"stages":["alt"]})"));
    CHECK(flat.cycle.size() == 1);
    CHECK(flat.cycle[0].alternate);
    CHECK(flat.structure.term(1) == 4);

    const FillRule split = json_io::rule_from_json(
        json::parse(R"({"stages":{"head":["0"],"cycle":["alt","1"]}})"));
    CHECK(split.head.size() == 1);
    CHECK(split.cycle.size() == 2);

    // Ad hoc rules round-trip through their stage lists.
    const json round = json_io::to_json(flat);
    const FillRule again = json_io::rule_from_json(round);
    CHECK(again.cycle.size() == 1);
    CHECK(again.structure.term(2) == flat.structure.term(2));

    CHECK_THROWS_AS(json_io::rule_from_json(json("paper99")), Error);
    CHECK_THROWS_AS(json_io::rule_from_json(json::parse(R"({"stages":["2"]})")), Error);
}

TEST_CASE("period structures and verdicts use the published field names") {
    const ToeplitzWindow w = generate(rule_paper54(), 8, 0, 4096);
    const PeriodStructure ps = essential_periods(w, {2, 4, 8, 16});
    const json j = json_io::to_json(ps);
    CHECK(j["chain"] == json::array({4, 16}));
    CHECK(j["window"] == json::array({0, 4096}));
    CHECK(j["min_translates"] == 4);
    const PeriodStructure back = json_io::period_structure_from_json(j);
    CHECK(back.chain == ps.chain);
    CHECK(back.window_hi == 4096);

    const Scale two{{}, {Bigint(2)}};
    const Scale three{{}, {Bigint(3)}};
    const Scale four{{}, {Bigint(4)}};
    const Scale nine_two{{Bigint(9)}, {Bigint(2)}};
    CHECK(json_io::to_json(distinguish(two, four))["kind"] == "EquivalentScales");
    const json distinct = json_io::to_json(distinguish(two, three));
    CHECK(distinct["kind"] == "DistinctByInfiniteSupport");
    CHECK(distinct["witness_prime"] == 2);
    CHECK(distinct["exhibit_left"]["f"].is_array());
    const json torsion = json_io::to_json(distinguish(two, nine_two));
    CHECK(torsion["kind"] == "SameInfiniteSupport");
    CHECK(torsion["torsion_right"] == json::array({9}));
    CHECK(torsion["note"].get<std::string>().find("cannot separate") != std::string::npos);
}

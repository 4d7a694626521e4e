#include "doctest.h"

#include "odolab/scales.hpp"

using namespace odolab;

namespace {

Scale powers_of(unsigned base) { return Scale{{}, {base}}; }

} // namespace

TEST_CASE("terms multiply out the ratio presentation") {
    Scale s{{12}, {5}};
    CHECK(s.term(0) == 1);
    CHECK(s.term(1) == 12);
    CHECK(s.term(3) == 300);
    Scale t{{1, 2}, {3}};
    CHECK(t.term(1) == 1);
    CHECK(t.term(2) == 2);
    CHECK(t.term(4) == 18);
}

TEST_CASE("terms pass 2^64 without loss") {
    Scale s = powers_of(2);
    Bigint p = s.term(70);
    CHECK(p == big_pow(2, 70));
    CHECK(p.get_str().size() >= 21);
}

TEST_CASE("validation rejects degenerate chains") {
    CHECK_THROWS_AS((Scale{{}, {1}}.validate()), ScaleError);
    CHECK_THROWS_AS((Scale{{2}, {}}.validate()), ScaleError);
    CHECK_THROWS_AS((Scale{{0}, {2}}.validate()), ScaleError);
    CHECK_NOTHROW((Scale{{1}, {2}}.validate()));
}

TEST_CASE("valuation basics") {
    CHECK(valuation(8, 2) == 3);
    CHECK(valuation(7, 5) == 0);
    CHECK(valuation(360, 3) == 2);
    CHECK_THROWS_AS(valuation(0, 2), Error);
}

TEST_CASE("multiplicity profile separates finite and infinite primes") {
    MultiplicityProfile p = multiplicity_profile(Scale{{12}, {5}});
    REQUIRE(p.size() == 3);
    CHECK(p.at(2) == Multiplicity::fin(2));
    CHECK(p.at(3) == Multiplicity::fin(1));
    CHECK(p.at(5) == Multiplicity::inf());

    MultiplicityProfile q = multiplicity_profile(powers_of(6));
    CHECK(q.at(2) == Multiplicity::inf());
    CHECK(q.at(3) == Multiplicity::inf());

    // A prime appearing in a cycle ratio is infinite even if it also sits in
    // the head.
    MultiplicityProfile r = multiplicity_profile(Scale{{2, 3}, {6}});
    CHECK(r.at(2) == Multiplicity::inf());
    CHECK(r.at(3) == Multiplicity::inf());
}

TEST_CASE("equivalence is profile equality") {
    CHECK(equivalent(powers_of(2), Scale{{4}, {2}}));
    CHECK(equivalent(powers_of(6), Scale{{2, 3}, {6}}));
    CHECK(equivalent(powers_of(4), powers_of(2)));
    CHECK_FALSE(equivalent(powers_of(2), powers_of(3)));
    CHECK_FALSE(equivalent(powers_of(2), Scale{{3}, {2}}));
}

TEST_CASE("precedence needs equal infinite support and dominated exponents") {
    CHECK(precedes(Scale{{2}, {5}}, Scale{{4}, {5}}));
    CHECK_FALSE(precedes(Scale{{4}, {5}}, Scale{{2}, {5}}));
    CHECK(precedes(Scale{{2}, {5}}, Scale{{2, 3}, {5}}));
    // Different infinite supports never compare, even "upwards".
    CHECK_FALSE(precedes(powers_of(2), powers_of(6)));
    CHECK_FALSE(precedes(powers_of(6), powers_of(2)));
    // Reflexive.
    CHECK(precedes(Scale{{12}, {5}}, Scale{{12}, {5}}));
}

TEST_CASE("torsion subgroup lists primary component orders") {
    CHECK(torsion_subgroup(Scale{{12}, {5}}) == std::vector<Bigint>{4, 3});
    CHECK(torsion_subgroup(Scale{{9}, {2}}) == std::vector<Bigint>{9});
    CHECK(torsion_subgroup(powers_of(2)).empty());
}

TEST_CASE("classification of the torsion part") {
    CHECK(classify(powers_of(2)) == TorsionClass::TorsionFree);
    CHECK(classify(powers_of(30)) == TorsionClass::TorsionFree);
    CHECK(classify(Scale{{12}, {5}}) == TorsionClass::FiniteTorsion);
    CHECK_THROWS_AS(classify(Scale{{}, {1}}), ScaleError);
}

TEST_CASE("decomposition splits the profile") {
    Decomposition d = decompose(powers_of(6));
    CHECK(d.infinite_primes == std::vector<Bigint>{2, 3});
    CHECK(d.finite_part.empty());

    Decomposition e = decompose(Scale{{100}, {7}});
    CHECK(e.infinite_primes == std::vector<Bigint>{7});
    CHECK(e.finite_part == std::map<Bigint, unsigned>{{2, 2}, {5, 2}});
}

TEST_CASE("prime refinement keeps the profile") {
    Scale r = prime_refine(Scale{{}, {6}});
    CHECK(r.cycle == std::vector<Bigint>{2, 3});
    CHECK(equivalent(r, powers_of(6)));

    Scale s{{12, 1}, {10}};
    Scale rs = prime_refine(s);
    for (const Bigint& x : rs.head) CHECK(multiplicity_profile(Scale{{}, {x}}).size() == 1);
    CHECK(equivalent(rs, s));
    CHECK(rs.head == std::vector<Bigint>{2, 2, 3}); // the ratio 1 disappears
}

TEST_CASE("profile synthesis round-trips through decomposition") {
    for (Scale s : {Scale{{12}, {5}}, Scale{{9}, {2}}, Scale{{}, {30}}, Scale{{8}, {10}}}) {
        MultiplicityProfile p = multiplicity_profile(s);
        Scale rebuilt = scale_from_profile(p);
        CHECK(equivalent(rebuilt, s));
        CHECK(multiplicity_profile(rebuilt) == p);
    }
    CHECK_THROWS_AS(scale_from_profile(MultiplicityProfile{{2, Multiplicity::fin(3)}}),
                    ScaleError);
}

TEST_CASE("shifting a scale drops leading ratios") {
    Scale s{{12}, {5}};
    Scale sh = scale_shift(s, 1);
    CHECK(sh.term(1) == 5);
    CHECK(sh.term(2) == 25);
    Scale t{{2, 3}, {5, 7}};
    Scale t3 = scale_shift(t, 3);
    // Ratios from level 4 on: 7, 5, 7, 5, ...
    CHECK(t3.term(1) == 7);
    CHECK(t3.term(2) == 35);
    CHECK(t3.term(3) == 245);
    for (std::size_t i = 1; i <= 6; ++i)
        CHECK(t3.term(i) * t.term(3) == t.term(3 + i));
}

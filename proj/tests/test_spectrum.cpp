#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "symspec/spectrum.hpp"

using namespace symspec;

namespace {

ClassSpec n_cycles(int n) {
    return ClassSpec(n, {Partition({n})});
}

Partition hook_shape(int n, int m) {
    std::vector<int> parts{m + 1};
    parts.insert(parts.end(), static_cast<size_t>(n - m - 1), 1);
    return Partition(std::move(parts));
}

struct Line {
    Rat eigenvalue;
    Int multiplicity;
};

void check_lines(const SpectrumReport& rep, const std::vector<Line>& expected) {
    REQUIRE(rep.lines.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) {
        REQUIRE(rep.lines[i].eigenvalue == expected[i].eigenvalue);
        REQUIRE(rep.lines[i].multiplicity == expected[i].multiplicity);
    }
}

} // namespace

TEST_CASE("character_eigenvalue: trivial character gives |S|") {
    std::vector<ClassSpec> specs{
        n_cycles(4),
        ClassSpec(4, {Partition({2, 1, 1}), Partition({2, 2})}),
        ClassSpec(6, {Partition({3, 2, 1})}),
    };
    for (const ClassSpec& spec : specs)
        REQUIRE(character_eigenvalue(Partition({spec.n()}), spec) == Rat(spec.generating_set_size()));
}

TEST_CASE("character_eigenvalue: hook shapes against the n-cycle class") {
    for (int n = 2; n <= 10; ++n) {
        ClassSpec spec = n_cycles(n);
        for (int m = 0; m <= n - 1; ++m) {
            Rat expected(factorial(n - 1), binomial(n - 1, m));
            if ((n - m - 1) % 2 != 0)
                expected = -expected;
            REQUIRE(character_eigenvalue(hook_shape(n, m), spec) == expected);
        }
    }
}

TEST_CASE("character_eigenvalue: vanishing off hooks, and size mismatch") {
    CHECK(character_eigenvalue(Partition({2, 2}), n_cycles(4)) == 0);
    CHECK_THROWS_AS(character_eigenvalue(Partition({3}), n_cycles(4)), size_mismatch_error);
}

TEST_CASE("spectrum: Sym(4) with 4-cycles") {
    SpectrumReport rep = spectrum(n_cycles(4));
    check_lines(rep, {{Rat(6), 1}, {Rat(2), 9}, {Rat(0), 4}, {Rat(-2), 9}, {Rat(-6), 1}});
    CHECK(rep.lines[0].contributors == std::vector<Partition>{Partition({4})});
    CHECK(rep.lines[2].contributors == std::vector<Partition>{Partition({2, 2})});
    CHECK(rep.lines[4].contributors == std::vector<Partition>{Partition({1, 1, 1, 1})});
    CHECK(rep.vertex_count == 24);
    CHECK(rep.regularity == 6);
    CHECK(rep.energy == 48);
    CHECK(rep.nullity == 4);
    CHECK(rep.is_integral);
    CHECK(rep.is_hyperenergetic); // 48 > 2*24-2 = 46
}

TEST_CASE("spectrum: Sym(5) with 5-cycles") {
    SpectrumReport rep = spectrum(n_cycles(5));
    check_lines(rep, {{Rat(24), 2}, {Rat(4), 36}, {Rat(0), 50}, {Rat(-6), 32}});
    CHECK(rep.lines[0].contributors ==
          std::vector<Partition>{Partition({5}), Partition({1, 1, 1, 1, 1})});
    CHECK(rep.lines[3].contributors ==
          std::vector<Partition>{Partition({4, 1}), Partition({2, 1, 1, 1})});
    CHECK(rep.energy == 384); // 2^4 * 4!
    CHECK(rep.nullity == 50); // 120 - C(8,4)
    CHECK(rep.is_integral);
    CHECK(rep.is_hyperenergetic);
}

TEST_CASE("spectrum: Sym(3) with 3-cycles is not hyperenergetic") {
    SpectrumReport rep = spectrum(n_cycles(3));
    check_lines(rep, {{Rat(2), 2}, {Rat(-1), 4}});
    CHECK(rep.energy == 8);
    CHECK_FALSE(rep.is_hyperenergetic); // 8 < 2*6-2 = 10
    CHECK(rep.is_integral);
}

TEST_CASE("spectrum: predicted Sym(6) lines used by the float oracle") {
    SpectrumReport rep = spectrum(n_cycles(6));
    check_lines(rep, {{Rat(120), 1},
                      {Rat(24), 25},
                      {Rat(12), 100},
                      {Rat(0), 468},
                      {Rat(-12), 100},
                      {Rat(-24), 25},
                      {Rat(-120), 1}});
    CHECK(rep.nullity == 468); // 720 - C(10,5)
}

TEST_CASE("spectrum: structural invariants across class specs up to n=6") {
    std::vector<ClassSpec> specs{
        n_cycles(3),
        n_cycles(4),
        n_cycles(5),
        n_cycles(6),
        ClassSpec(4, {Partition({2, 1, 1})}),
        ClassSpec(4, {Partition({4}), Partition({2, 1, 1})}),
        ClassSpec(5, {Partition({3, 2}), Partition({2, 1, 1, 1})}),
        ClassSpec(6, {Partition({2, 2, 2}), Partition({6}), Partition({3, 1, 1, 1})}),
    };
    for (const ClassSpec& spec : specs) {
        SpectrumReport rep = spectrum(spec);
        Int mass = 0;
        Rat first_moment = 0, second_moment = 0;
        std::set<Partition> seen;
        for (const SpectrumLine& line : rep.lines) {
            mass += line.multiplicity;
            first_moment += Rat(line.multiplicity) * line.eigenvalue;
            second_moment += Rat(line.multiplicity) * line.eigenvalue * line.eigenvalue;
            Int contributor_mass = 0;
            for (const Partition& alpha : line.contributors) {
                REQUIRE(seen.insert(alpha).second); // contributor sets are disjoint
                contributor_mass += degree(alpha) * degree(alpha);
            }
            REQUIRE(contributor_mass == line.multiplicity);
        }
        REQUIRE(mass == rep.vertex_count);
        REQUIRE(seen.size() == partition_count(spec.n())); // every alpha contributes
        REQUIRE(first_moment == 0);
        REQUIRE(second_moment == Rat(rep.vertex_count * rep.regularity));
        REQUIRE(rep.lines.front().eigenvalue == Rat(rep.regularity));
        REQUIRE(rep.is_integral); // normal Cayley graphs on Sym(n): integral at every tested spec
        for (const SpectrumLine& line : rep.lines)
            REQUIRE(rat_den(line.eigenvalue) == 1);
    }
}

TEST_CASE("spectrum: top multiplicity counts components for the n-cycle graphs") {
    CHECK(spectrum(n_cycles(3)).lines.front().multiplicity == 2); // Alt(3) cosets
    CHECK(spectrum(n_cycles(4)).lines.front().multiplicity == 1);
    CHECK(spectrum(n_cycles(5)).lines.front().multiplicity == 2);
    CHECK(spectrum(n_cycles(6)).lines.front().multiplicity == 1);
}

TEST_CASE("spectrum: eigenvalue multiset symmetric under negation for even n") {
    for (int n : {4, 6}) {
        SpectrumReport rep = spectrum(n_cycles(n));
        size_t count = rep.lines.size();
        for (size_t i = 0; i < count; ++i) {
            REQUIRE(rep.lines[i].eigenvalue == -rep.lines[count - 1 - i].eigenvalue);
            REQUIRE(rep.lines[i].multiplicity == rep.lines[count - 1 - i].multiplicity);
        }
    }
}

TEST_CASE("spectrum: capacity cap") {
    CHECK_THROWS_AS(spectrum(n_cycles(13)), capacity_error);
    CHECK_THROWS_AS(spectrum(n_cycles(6), 5), capacity_error);
}

TEST_CASE("closed forms: instantiated values") {
    CHECK(closed_form_energy(4) == 48);
    CHECK(closed_form_nullity(4) == 4);
    CHECK(closed_form_energy(5) == 384);
    CHECK(closed_form_nullity(5) == 50);
    CHECK(closed_form_energy(10) == 185794560);
    CHECK(closed_form_nullity(10) == Int(3628800) - 48620);

    CHECK_FALSE(closed_forms(3).theorem_applies);
    CHECK(closed_forms(4).theorem_applies);
    CHECK_THROWS_AS(closed_forms(0), error);
}

TEST_CASE("closed forms: match the computed spectrum for n = 4..8") {
    for (int n = 4; n <= 8; ++n) {
        SpectrumReport rep = spectrum(n_cycles(n));
        REQUIRE(rep.energy == Rat(closed_form_energy(n)));
        REQUIRE(rep.nullity == closed_form_nullity(n));
        REQUIRE(rep.is_hyperenergetic);
    }
}

TEST_CASE("vandermonde_check") {
    CHECK(vandermonde_check(1)); // 1 = C(0,0)
    CHECK(vandermonde_check(4)); // 1+9+9+1 = 20 = C(6,3)
    for (int n = 1; n <= 30; ++n)
        REQUIRE(vandermonde_check(n));
}

TEST_CASE("central_binomial_gap: small values and both forms agree to n=60") {
    CHECK(central_binomial_gap(1).value == 0);
    CHECK(central_binomial_gap(2).value == 2);
    CHECK(central_binomial_gap(3).value == 16);
    CHECK(central_binomial_gap(4).value == 94);
    for (int n = 1; n <= 60; ++n) {
        CentralBinomialGap a = central_binomial_gap(n); // throws integrity_error if the forms split
        REQUIRE(a.nonnegative);
        REQUIRE(a.value >= 0);
    }
}

TEST_CASE("energy_bound_check") {
    CHECK(energy_bound_check(3)); // 2304 <= 2880
    CHECK(energy_bound_check(4)); // 147456 <= 201600
    for (int n = 3; n <= 30; ++n)
        REQUIRE(energy_bound_check(n));
    CHECK_THROWS_AS(energy_bound_check(2), error);
}

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symspec/bignum.hpp"
#include "symspec/cayley.hpp"
#include "symspec/character.hpp"
#include "symspec/errors.hpp"
#include "symspec/partition.hpp"
#include "symspec/permutation.hpp"

namespace symspec {

/// One distinct eigenvalue of a normal Cayley graph, with its total
/// multiplicity and the characters that produce it.
struct SpectrumLine {
    Rat eigenvalue;
    Int multiplicity;                    // sum of degree^2 over contributors
    std::vector<Partition> contributors; // reverse-lex order

    friend bool operator==(const SpectrumLine&, const SpectrumLine&) = default;
};

struct SpectrumReport {
    ClassSpec spec;
    Int vertex_count;                // n!
    Int regularity;                  // |S|
    std::vector<SpectrumLine> lines; // eigenvalue descending
    Rat energy;
    Int nullity;
    bool is_integral = false;
    bool is_hyperenergetic = false;

    int n() const { return spec.n(); }

    friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// eta_chi = sum_{a in S} chi(a)/chi(1), evaluated classwise as
/// sum_t |C_t| chi^alpha(t) / chi^alpha(1).
inline Rat character_eigenvalue(const Partition& alpha, const ClassSpec& spec, CharacterEvaluator& ev) {
    if (alpha.sum() != spec.n())
        throw size_mismatch_error("character_eigenvalue: alpha is a partition of " +
                                  std::to_string(alpha.sum()) + ", spec has n=" + std::to_string(spec.n()));
    Int num = 0;
    for (const Partition& t : spec.cycle_types())
        num += class_size(spec.n(), t) * ev.value(alpha, t);
    return Rat(num, degree(alpha));
}

inline Rat character_eigenvalue(const Partition& alpha, const ClassSpec& spec) {
    CharacterEvaluator ev;
    return character_eigenvalue(alpha, spec, ev);
}

/// Full spectrum of Cay(Sym(n), S) from the character-theoretic eigenvalue
/// formula: equal eigenvalues are grouped across all alpha, energy is
/// sum_alpha deg(alpha)^2 |eta_alpha| and nullity is n! minus the mass of
/// the nonzero eigenvalues.
inline SpectrumReport spectrum(const ClassSpec& spec, int cap = kDefaultTableCap) {
    int n = spec.n();
    if (n > cap)
        throw capacity_error("spectrum: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));

    struct Group {
        Int multiplicity = 0;
        std::vector<Partition> contributors;
    };
    std::map<Rat, Group, std::greater<Rat>> groups;

    CharacterEvaluator ev;
    Rat energy = 0;
    Int nonzero_mass = 0;
    for (const Partition& alpha : enumerate_partitions(n)) {
        Int deg = degree(alpha);
        Int deg2 = deg * deg;
        Rat eta = character_eigenvalue(alpha, spec, ev);
        Group& g = groups[eta];
        g.multiplicity += deg2;
        g.contributors.push_back(alpha);
        energy += Rat(deg2) * boost::multiprecision::abs(eta);
        if (eta != 0)
            nonzero_mass += deg2;
    }

    SpectrumReport rep{spec,
                       factorial(n),
                       spec.generating_set_size(),
                       {},
                       energy,
                       factorial(n) - nonzero_mass,
                       true,
                       false};
    for (auto& [eta, g] : groups) {
        if (!is_integer(eta))
            rep.is_integral = false;
        rep.lines.push_back(SpectrumLine{eta, std::move(g.multiplicity), std::move(g.contributors)});
    }
    rep.is_hyperenergetic = rep.energy > Rat(2 * rep.vertex_count - 2);
    return rep;
}

/// 2^(n-1) (n-1)!  — exact energy of Cay(Sym(n), n-cycles).
inline Int closed_form_energy(int n) {
    return pow2(n - 1) * factorial(n - 1);
}

/// n! - C(2n-2, n-1)  — exact nullity of Cay(Sym(n), n-cycles).
inline Int closed_form_nullity(int n) {
    return factorial(n) - binomial(2 * n - 2, n - 1);
}

/// The hyperenergeticity statement carries the hypothesis n >= 4; the
/// closed forms themselves are evaluated for any n >= 1.
inline bool closed_form_theorem_applies(int n) {
    return n >= 4;
}

struct ClosedForms {
    int n;
    Int energy;
    Int nullity;
    bool theorem_applies;
};

inline ClosedForms closed_forms(int n) {
    if (n < 1)
        throw error("closed_forms: need n >= 1");
    return {n, closed_form_energy(n), closed_form_nullity(n), closed_form_theorem_applies(n)};
}

/// sum_{m=0}^{n-1} C(n-1,m)^2 == C(2n-2,n-1), exactly.
inline bool vandermonde_check(int n) {
    Int lhs = 0;
    for (int m = 0; m <= n - 1; ++m) {
        Int b = binomial(n - 1, m);
        lhs += b * b;
    }
    return lhs == binomial(2 * n - 2, n - 1);
}

struct CentralBinomialGap {
    Int value;
    bool nonnegative;
};

/// a_n = sum_{k=0}^{n-1} (C(2n,n) - 2 C(2n,k)), computed by the sum and
/// checked against the closed form (n+1) C(2n,n) - 4^n; the two must agree.
inline CentralBinomialGap central_binomial_gap(int n) {
    Int central = binomial(2 * n, n);
    Int sum = 0;
    for (int k = 0; k <= n - 1; ++k)
        sum += central - 2 * binomial(2 * n, k);
    Int closed = (n + 1) * central - pow2(2 * n);
    if (sum != closed)
        throw integrity_error("central_binomial_gap: sum form " + sum.str() + " != closed form " +
                              closed.str() + " at n=" + std::to_string(n));
    return {sum, sum >= 0};
}

/// Squared form of 2^n n! <= sqrt((n+1)! n! C(2n,n)), in exact integers.
inline bool energy_bound_check(int n) {
    if (n < 3)
        throw error("energy_bound_check: defined for n >= 3");
    Int lhs = pow2(2 * n) * factorial(n) * factorial(n);
    Int rhs = factorial(n + 1) * factorial(n) * binomial(2 * n, n);
    return lhs <= rhs;
}

} // namespace symspec

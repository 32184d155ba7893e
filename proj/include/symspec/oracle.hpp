#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symspec/bignum.hpp"
#include "symspec/cayley.hpp"
#include "symspec/errors.hpp"
#include "symspec/spectrum.hpp"

namespace symspec {

inline constexpr int kDefaultExactOracleCap = 5;
inline constexpr int kDefaultFloatOracleCap = 6;
inline constexpr double kDefaultFloatTol = 1e-6;
inline constexpr int kJacobiSweepCap = 30;

/// Outcome of one verification run against the brute-force side.
struct Verdict {
    enum class Method { ExactMoments, FloatEigensolve };

    Method method;
    bool match = false;
    std::optional<std::string> detail; // first discrepancy; absent when match
    int moment_K = 0;                  // used by ExactMoments
    double tol = 0.0;                  // used by FloatEigensolve

    std::string method_name() const {
        return method == Method::ExactMoments ? "exact-moments" : "float-eigensolve";
    }
};

/// [trace(A^0), ..., trace(A^K)] in exact integer arithmetic; counts closed
/// walks of each length.
inline std::vector<Int> exact_moments(const BitMatrix& adj, int K) {
    const size_t N = adj.size();
    std::vector<std::vector<uint32_t>> nbr(N);
    for (size_t j = 0; j < N; ++j)
        nbr[j] = adj.neighbors(j);

    std::vector<Int> moments;
    moments.reserve(static_cast<size_t>(K) + 1);
    moments.push_back(Int(N));

    // power[i*N+j] = (A^k)_{ij}, advanced one k per outer step
    std::vector<Int> power(N * N, 0);
    for (size_t i = 0; i < N; ++i)
        power[i * N + i] = 1;
    std::vector<Int> next(N * N, 0);
    for (int k = 1; k <= K; ++k) {
        Int trace = 0;
        for (size_t i = 0; i < N; ++i) {
            const Int* row = &power[i * N];
            for (size_t j = 0; j < N; ++j) {
                Int cell = 0;
                for (uint32_t l : nbr[j])
                    cell += row[l];
                if (i == j)
                    trace += cell;
                next[i * N + j] = std::move(cell);
            }
        }
        power.swap(next);
        moments.push_back(std::move(trace));
    }
    return moments;
}

/// [sum_lines mult * eigenvalue^k for k = 0..K]; integers whenever the
/// report is integral.
inline std::vector<Rat> predicted_moments(const SpectrumReport& rep, int K) {
    std::vector<Rat> powers(rep.lines.size(), Rat(1));
    std::vector<Rat> moments;
    moments.reserve(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        Rat m = 0;
        for (size_t i = 0; i < rep.lines.size(); ++i) {
            m += Rat(rep.lines[i].multiplicity) * powers[i];
            powers[i] *= rep.lines[i].eigenvalue;
        }
        moments.push_back(std::move(m));
    }
    return moments;
}

/// Default moment count: p(n) + 2, exceeding the number of distinct
/// predicted eigenvalues.
inline int default_moment_K(int n) {
    return static_cast<int>(partition_count(n)) + 2;
}

/// Compares walk counts of the explicit adjacency matrix with the moments
/// of the character-predicted spectrum, k = 0..K, all in exact arithmetic.
inline Verdict verify_exact(const ClassSpec& spec, int K = 0, int exact_cap = kDefaultExactOracleCap) {
    if (spec.n() > exact_cap)
        throw capacity_error("verify_exact: n=" + std::to_string(spec.n()) + " exceeds cap " +
                             std::to_string(exact_cap));
    if (K <= 0)
        K = default_moment_K(spec.n());

    Verdict v{Verdict::Method::ExactMoments, true, std::nullopt, K, 0.0};
    SpectrumReport rep = spectrum(spec);

    Int mass = 0;
    for (const SpectrumLine& line : rep.lines)
        mass += line.multiplicity;
    if (mass != rep.vertex_count) {
        v.match = false;
        v.detail = "multiplicity sum " + mass.str() + " != vertex count " + rep.vertex_count.str();
        return v;
    }

    BitMatrix adj = build_adjacency(spec, exact_cap);
    std::vector<Int> actual = exact_moments(adj, K);
    std::vector<Rat> predicted = predicted_moments(rep, K);
    for (int k = 0; k <= K; ++k) {
        const Rat& p = predicted[static_cast<size_t>(k)];
        const Int& a = actual[static_cast<size_t>(k)];
        if (!is_integer(p) || rat_num(p) != a) {
            v.match = false;
            v.detail = "moment " + std::to_string(k) + ": graph " + a.str() + " vs predicted " +
                       rat_to_string(p);
            return v;
        }
    }
    return v;
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius mass falls below
/// 1e-10 * ||A||_F; descending order.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, size_t N,
                                              int max_sweeps = kJacobiSweepCap) {
    double norm2 = 0.0;
    for (double x : a)
        norm2 += x * x;
    const double target = 1e-10 * std::sqrt(norm2);

    auto off_norm = [&] {
        double s = 0.0;
        for (size_t p = 0; p < N; ++p)
            for (size_t q = p + 1; q < N; ++q)
                s += 2.0 * a[p * N + q] * a[p * N + q];
        return std::sqrt(s);
    };

    int sweeps = 0;
    while (off_norm() > target) {
        if (++sweeps > max_sweeps)
            throw solver_error("jacobi: no convergence after " + std::to_string(max_sweeps) + " sweeps");
        // Rotations too small to matter are skipped: if every pivot were
        // below this bound the off-diagonal norm would already be under
        // target, so the outer convergence test cannot be starved.
        const double skip = 0.1 * target / static_cast<double>(N);
        for (size_t p = 0; p < N; ++p) {
            for (size_t q = p + 1; q < N; ++q) {
                double apq = a[p * N + q];
                if (std::abs(apq) <= skip)
                    continue;
                double tau = (a[q * N + q] - a[p * N + p]) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (size_t i = 0; i < N; ++i) {
                    double aip = a[i * N + p];
                    double aiq = a[i * N + q];
                    a[i * N + p] = c * aip - s * aiq;
                    a[i * N + q] = s * aip + c * aiq;
                }
                for (size_t i = 0; i < N; ++i) {
                    double api = a[p * N + i];
                    double aqi = a[q * N + i];
                    a[p * N + i] = c * api - s * aqi;
                    a[q * N + i] = s * api + c * aqi;
                }
            }
        }
    }

    std::vector<double> eig(N);
    for (size_t i = 0; i < N; ++i)
        eig[i] = a[i * N + i];
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

/// Full floating eigenvalue multiset of an explicit adjacency matrix.
inline std::vector<double> eig_float(const BitMatrix& adj, int max_sweeps = kJacobiSweepCap) {
    const size_t N = adj.size();
    std::vector<double> a(N * N, 0.0);
    for (size_t i = 0; i < N; ++i)
        for (uint32_t j : adj.neighbors(i))
            a[i * N + j] = 1.0;
    return jacobi_eigenvalues(std::move(a), N, max_sweeps);
}

/// Assigns every computed eigenvalue to the nearest predicted rational and
/// compares per-line counts with the predicted multiplicities. Predicted
/// values must be separated by more than 4*tol for the assignment to be
/// unambiguous.
inline Verdict verify_float(const ClassSpec& spec, double tol = kDefaultFloatTol,
                            int float_cap = kDefaultFloatOracleCap) {
    if (spec.n() > float_cap)
        throw capacity_error("verify_float: n=" + std::to_string(spec.n()) + " exceeds cap " +
                             std::to_string(float_cap));
    SpectrumReport rep = spectrum(spec);

    std::vector<double> centers(rep.lines.size());
    for (size_t i = 0; i < rep.lines.size(); ++i)
        centers[i] = rep.lines[i].eigenvalue.convert_to<double>();
    for (size_t i = 1; i < centers.size(); ++i) {
        if (centers[i - 1] - centers[i] <= 4.0 * tol)
            throw solver_error("verify_float: predicted eigenvalues closer than 4*tol, assignment "
                               "would be ambiguous");
    }

    Verdict v{Verdict::Method::FloatEigensolve, true, std::nullopt, 0, tol};
    std::vector<double> eig = eig_float(build_adjacency(spec, float_cap));

    std::vector<Int> counts(centers.size(), Int(0));
    for (double e : eig) {
        size_t best = 0;
        double best_dist = std::abs(e - centers[0]);
        for (size_t i = 1; i < centers.size(); ++i) {
            double d = std::abs(e - centers[i]);
            if (d < best_dist) {
                best = i;
                best_dist = d;
            }
        }
        if (best_dist > tol) {
            v.match = false;
            v.detail = "eigenvalue " + std::to_string(e) + " is not within tol of any predicted value";
            return v;
        }
        counts[best] += 1;
    }
    for (size_t i = 0; i < centers.size(); ++i) {
        if (counts[i] != rep.lines[i].multiplicity) {
            v.match = false;
            v.detail = "eigenvalue " + rat_to_string(rep.lines[i].eigenvalue) + ": computed multiplicity " +
                       counts[i].str() + " vs predicted " + rep.lines[i].multiplicity.str();
            return v;
        }
    }
    return v;
}

} // namespace symspec

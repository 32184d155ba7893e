#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symspec/bignum.hpp"
#include "symspec/errors.hpp"
#include "symspec/partition.hpp"
#include "symspec/permutation.hpp"

namespace symspec {

/// Which part of beta a Murnaghan-Nakayama step consumes. The character
/// value does not depend on this; LargestFirst is the default and
/// SmallestFirst exists so tests can cross-check that independence.
enum class ConsumeOrder { LargestFirst, SmallestFirst };

/// Evaluates chi^alpha(beta) by the Murnaghan-Nakayama recursion with a
/// memo keyed on (alpha, remaining beta). One evaluator is a single
/// evaluation context: it is not synchronized, use one per thread.
class CharacterEvaluator {
public:
    explicit CharacterEvaluator(ConsumeOrder order = ConsumeOrder::LargestFirst) : order_(order) {}

    Int value(const Partition& alpha, const Partition& beta) {
        if (alpha.sum() != beta.sum())
            throw size_mismatch_error("character: |alpha|=" + std::to_string(alpha.sum()) +
                                      " but |beta|=" + std::to_string(beta.sum()));
        return eval(alpha, beta);
    }

    size_t memo_size() const { return memo_.size(); }

private:
    struct Key {
        Partition alpha;
        Partition beta;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            PartitionHash h;
            return h(k.alpha) * 0x9e3779b97f4a7c15ull + h(k.beta);
        }
    };

    Int eval(const Partition& alpha, const Partition& beta) {
        if (beta.empty())
            return 1; // chi^{}() = 1, and alpha is empty whenever beta is
        Key key{alpha, beta};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        std::vector<int> rest = beta.parts();
        int k;
        if (order_ == ConsumeOrder::LargestFirst) {
            k = rest.front();
            rest.erase(rest.begin());
        } else {
            k = rest.back();
            rest.pop_back();
        }
        Partition rho(std::move(rest));

        Int sum = 0;
        for (Node nd : hooks_of_length(alpha, k)) {
            Int term = eval(remove_rim_hook(alpha, nd), rho);
            if (leg_length(alpha, nd) % 2 != 0)
                sum -= term;
            else
                sum += term;
        }
        memo_.emplace(std::move(key), sum);
        return sum;
    }

    ConsumeOrder order_;
    std::unordered_map<Key, Int, KeyHash> memo_;
};

/// chi^alpha evaluated at the class of cycle type beta.
inline Int mn_character(const Partition& alpha, const Partition& beta) {
    CharacterEvaluator ev;
    return ev.value(alpha, beta);
}

/// chi^alpha(1) by the hook-length product n! / prod h_{i,j}.
inline Int degree(const Partition& alpha) {
    Int d = factorial(alpha.sum());
    Partition t = alpha.conjugate();
    for (int i = 1; i <= alpha.num_parts(); ++i)
        for (int j = 1; j <= alpha.part(i); ++j)
            d /= (alpha.part(i) - j) + (t.part(j) - i) + 1;
    return d;
}

inline constexpr int kDefaultTableCap = 12;

/// Complete exact character table of Sym(n). Rows (characters) and columns
/// (classes) are both indexed by partitions of n in reverse-lexicographic
/// order, (n) first.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<Int>> values;
    std::vector<Int> degrees;     // per row, = column at (1^n)
    std::vector<Int> class_sizes; // per column

    Int group_order() const { return factorial(n); }

    int row_index(const Partition& alpha) const { return index_of(rows, alpha, "row"); }
    int col_index(const Partition& beta) const { return index_of(cols, beta, "column"); }

    const Int& value(const Partition& alpha, const Partition& beta) const {
        return values[static_cast<size_t>(row_index(alpha))][static_cast<size_t>(col_index(beta))];
    }

private:
    static int index_of(const std::vector<Partition>& v, const Partition& p, const char* what) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] == p)
                return static_cast<int>(i);
        throw invalid_class_error(std::string("character table has no ") + what + " (" + p.to_string() +
                                  ")");
    }
};

inline CharacterTable character_table(int n, int cap = kDefaultTableCap) {
    if (n < 0)
        throw invalid_class_error("character_table: n must be non-negative");
    if (n > cap)
        throw capacity_error("character_table: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    CharacterTable t;
    t.n = n;
    t.rows = enumerate_partitions(n);
    t.cols = t.rows;
    CharacterEvaluator ev;
    t.values.reserve(t.rows.size());
    for (const Partition& alpha : t.rows) {
        std::vector<Int> row;
        row.reserve(t.cols.size());
        for (const Partition& beta : t.cols)
            row.push_back(ev.value(alpha, beta));
        t.values.push_back(std::move(row));
        t.degrees.push_back(degree(alpha));
    }
    for (const Partition& beta : t.cols)
        t.class_sizes.push_back(class_size(n, beta));
    return t;
}

struct OrthogonalityReport {
    bool pass = true;
    std::string first_violation; // empty when pass
};

/// Exact integer verification of both orthogonality relations:
/// rows:    sum_beta |C_beta| chi^l(beta) chi^m(beta) = n! delta_lm
/// columns: |C_beta| sum_alpha chi^alpha(beta) chi^alpha(gamma) = n! delta_bg
inline OrthogonalityReport check_orthogonality(const CharacterTable& t) {
    const Int order = t.group_order();
    const size_t p = t.rows.size();
    for (size_t l = 0; l < p; ++l) {
        for (size_t m = l; m < p; ++m) {
            Int sum = 0;
            for (size_t c = 0; c < p; ++c)
                sum += t.class_sizes[c] * t.values[l][c] * t.values[m][c];
            Int expected = (l == m) ? order : Int(0);
            if (sum != expected) {
                return {false, "row orthogonality failed for (" + t.rows[l].to_string() + "),(" +
                                   t.rows[m].to_string() + "): got " + sum.str() + ", expected " +
                                   expected.str()};
            }
        }
    }
    for (size_t b = 0; b < p; ++b) {
        for (size_t g = b; g < p; ++g) {
            Int sum = 0;
            for (size_t r = 0; r < p; ++r)
                sum += t.values[r][b] * t.values[r][g];
            Int expected = (b == g) ? order : Int(0);
            Int scaled = t.class_sizes[b] * sum;
            if (scaled != expected) {
                return {false, "column orthogonality failed for (" + t.cols[b].to_string() + "),(" +
                                   t.cols[g].to_string() + "): got " + scaled.str() + ", expected " +
                                   expected.str()};
            }
        }
    }
    return {};
}

} // namespace symspec

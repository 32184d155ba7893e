#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "symspec/bignum.hpp"
#include "symspec/errors.hpp"
#include "symspec/partition.hpp"
#include "symspec/permutation.hpp"

namespace symspec {

/// Dense symmetric 0/1 matrix with bitset-backed rows.
class BitMatrix {
public:
    explicit BitMatrix(size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    size_t size() const { return n_; }

    bool get(size_t i, size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }

    void set(size_t i, size_t j) { bits_[i * words_ + j / 64] |= uint64_t(1) << (j % 64); }

    size_t row_sum(size_t i) const {
        size_t s = 0;
        for (size_t w = 0; w < words_; ++w)
            s += static_cast<size_t>(std::popcount(bits_[i * words_ + w]));
        return s;
    }

    bool is_symmetric() const {
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = i + 1; j < n_; ++j)
                if (get(i, j) != get(j, i))
                    return false;
        return true;
    }

    std::vector<uint32_t> neighbors(size_t i) const {
        std::vector<uint32_t> out;
        for (size_t w = 0; w < words_; ++w) {
            uint64_t word = bits_[i * words_ + w];
            while (word) {
                unsigned b = static_cast<unsigned>(std::countr_zero(word));
                out.push_back(static_cast<uint32_t>(w * 64 + b));
                word &= word - 1;
            }
        }
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    size_t n_;
    size_t words_;
    std::vector<uint64_t> bits_;
};

/// Connection set of a normal Cayley graph on Sym(n): a nonempty union of
/// conjugacy classes, identified by their cycle types. The identity class
/// (1^n) is excluded so the graph is loopless.
class ClassSpec {
public:
    ClassSpec(int n, std::vector<Partition> cycle_types) : n_(n), types_(std::move(cycle_types)) {
        if (n_ < 2)
            throw invalid_class_error("ClassSpec: need n >= 2, Sym(" + std::to_string(n_) +
                                      ") has no valid connection set");
        if (types_.empty())
            throw invalid_class_error("ClassSpec: class list is empty");
        for (const Partition& t : types_) {
            detail::require_cycle_type(n_, t, "ClassSpec");
            if (t.num_parts() == n_)
                throw invalid_class_error("ClassSpec: identity class (1^" + std::to_string(n_) +
                                          ") is forbidden");
        }
        std::sort(types_.begin(), types_.end(), std::greater<Partition>());
        types_.erase(std::unique(types_.begin(), types_.end()), types_.end());
    }

    int n() const { return n_; }
    const std::vector<Partition>& cycle_types() const { return types_; }

    /// |S|, the regularity of the Cayley graph.
    Int generating_set_size() const {
        Int s = 0;
        for (const Partition& t : types_)
            s += class_size(n_, t);
        return s;
    }

    std::string to_string() const {
        std::string s = "n=" + std::to_string(n_) + " classes {";
        for (size_t i = 0; i < types_.size(); ++i) {
            if (i)
                s += "; ";
            s += types_[i].to_string();
        }
        return s + "}";
    }

    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

private:
    int n_;
    std::vector<Partition> types_;
};

/// Explicit adjacency matrix of Cay(Sym(n), S): vertices are the n!
/// permutations in lexicographic one-line order, u ~ v iff v = a*u for
/// some a in S.
inline BitMatrix build_adjacency(const ClassSpec& spec, int size_cap = kDefaultOracleCap) {
    int n = spec.n();
    if (n > size_cap)
        throw capacity_error("build_adjacency: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(size_cap));
    std::vector<Permutation> gens;
    for (const Partition& t : spec.cycle_types()) {
        auto cls = enumerate_class(n, t, size_cap);
        gens.insert(gens.end(), cls.begin(), cls.end());
    }
    uint64_t order = 1;
    for (int i = 2; i <= n; ++i)
        order *= static_cast<uint64_t>(i);
    BitMatrix adj(order);
    PermutationScan scan(n);
    uint64_t u_rank = 0;
    do {
        Permutation u = scan.current();
        for (const Permutation& a : gens)
            adj.set(u_rank, lex_rank(compose(a, u)));
        ++u_rank;
    } while (scan.advance());
    return adj;
}

/// One "u v" pair per line with u < v, sorted; ranks refer to the
/// lexicographic vertex order of build_adjacency.
inline void write_edge_list(const BitMatrix& adj, std::ostream& os) {
    for (size_t i = 0; i < adj.size(); ++i) {
        for (uint32_t j : adj.neighbors(i)) {
            if (j > i)
                os << i << ' ' << j << '\n';
        }
    }
}

} // namespace symspec

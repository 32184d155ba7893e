#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "symspec/bignum.hpp"
#include "symspec/errors.hpp"
#include "symspec/partition.hpp"

namespace symspec {

/// Element of Sym(n) in one-line notation. Internally 0-based; the public
/// one-line form is 1-based to match the usual convention.
class Permutation {
public:
    static Permutation identity(int n) {
        std::vector<int> img(static_cast<size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    /// one_line[i] is the image of i+1, values in 1..n forming a bijection.
    static Permutation from_one_line(const std::vector<int>& one_line) {
        int n = static_cast<int>(one_line.size());
        std::vector<int> img(one_line.size());
        std::vector<bool> seen(one_line.size(), false);
        for (size_t i = 0; i < one_line.size(); ++i) {
            int v = one_line[i];
            if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
                throw parse_error("not a permutation in one-line notation");
            seen[static_cast<size_t>(v) - 1] = true;
            img[i] = v - 1;
        }
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }

    /// 0-based image table.
    const std::vector<int>& images() const { return img_; }

    std::vector<int> one_line() const {
        std::vector<int> out(img_.size());
        for (size_t i = 0; i < img_.size(); ++i)
            out[i] = img_[i] + 1;
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> img0) : img_(std::move(img0)) {}
    std::vector<int> img_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);
    friend Permutation nth_permutation(int, uint64_t);
    friend class PermutationScan;
};

/// Function composition: (a∘b)(x) = a(b(x)), b applied first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw arity_error("compose: degrees differ");
    std::vector<int> img(a.img_.size());
    for (size_t i = 0; i < img.size(); ++i)
        img[i] = a.img_[static_cast<size_t>(b.img_[i])];
    return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& a) {
    std::vector<int> img(a.img_.size());
    for (size_t i = 0; i < img.size(); ++i)
        img[static_cast<size_t>(a.img_[i])] = static_cast<int>(i);
    return Permutation(std::move(img));
}

/// Cycle lengths of perm as a canonical partition of n, fixed points
/// included as parts equal to 1.
inline Partition cycle_type(const Permutation& perm) {
    const auto& img = perm.images();
    std::vector<bool> visited(img.size(), false);
    std::vector<int> lengths;
    for (size_t start = 0; start < img.size(); ++start) {
        if (visited[start])
            continue;
        int len = 0;
        size_t x = start;
        while (!visited[x]) {
            visited[x] = true;
            ++len;
            x = static_cast<size_t>(img[x]);
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

/// Rank within the lexicographic order of all one-line words (Lehmer code).
inline uint64_t lex_rank(const Permutation& perm) {
    const auto& img = perm.images();
    int n = perm.degree();
    uint64_t fact = 1;
    for (int i = 2; i < n; ++i)
        fact *= static_cast<uint64_t>(i); // (n-1)!
    uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (img[static_cast<size_t>(j)] < img[static_cast<size_t>(i)])
                ++smaller;
        rank += static_cast<uint64_t>(smaller) * fact;
        if (n - 1 - i > 0)
            fact /= static_cast<uint64_t>(n - 1 - i);
    }
    return rank;
}

/// Inverse of lex_rank.
inline Permutation nth_permutation(int n, uint64_t rank) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    uint64_t fact = 1;
    for (int i = 2; i < n; ++i)
        fact *= static_cast<uint64_t>(i);
    std::vector<int> img;
    img.reserve(pool.size());
    for (int i = 0; i < n; ++i) {
        uint64_t idx = (n - i > 1) ? rank / fact : 0;
        rank %= std::max<uint64_t>(fact, 1);
        img.push_back(pool[static_cast<size_t>(idx)]);
        pool.erase(pool.begin() + static_cast<long>(idx));
        if (n - 1 - i > 0)
            fact /= static_cast<uint64_t>(n - 1 - i);
    }
    return Permutation(std::move(img));
}

namespace detail {
inline void require_cycle_type(int n, const Partition& t, const char* op) {
    if (t.sum() != n)
        throw invalid_class_error(std::string(op) + ": (" + t.to_string() + ") is not a partition of " +
                                  std::to_string(n));
}
} // namespace detail

/// |C_t| = n! / z_t with z_t = prod_i i^{t_i} t_i!.
inline Int class_size(int n, const Partition& t) {
    detail::require_cycle_type(n, t, "class_size");
    Int z = 1;
    int run_part = 0, run_len = 0;
    auto flush = [&] {
        for (int i = 1; i <= run_len; ++i)
            z *= Int(run_part) * i; // part^len * len! accumulated jointly
    };
    for (int p : t.parts()) {
        if (p == run_part) {
            ++run_len;
        } else {
            flush();
            run_part = p;
            run_len = 1;
        }
    }
    flush();
    return factorial(n) / z;
}

/// Iterates Sym(n) in lexicographic one-line order; rank of the current
/// element is its position in that order.
class PermutationScan {
public:
    explicit PermutationScan(int n) : img_(static_cast<size_t>(n)) {
        std::iota(img_.begin(), img_.end(), 0);
    }

    Permutation current() const { return Permutation(std::vector<int>(img_)); }
    bool advance() { return std::next_permutation(img_.begin(), img_.end()); }

private:
    std::vector<int> img_;
};

inline constexpr int kDefaultOracleCap = 6;

/// Every permutation of cycle type t, in lexicographic one-line order.
inline std::vector<Permutation> enumerate_class(int n, const Partition& t, int size_cap = kDefaultOracleCap) {
    detail::require_cycle_type(n, t, "enumerate_class");
    if (n > size_cap)
        throw capacity_error("enumerate_class: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(size_cap));
    std::vector<Permutation> out;
    PermutationScan scan(n);
    do {
        Permutation p = scan.current();
        if (cycle_type(p) == t)
            out.push_back(std::move(p));
    } while (scan.advance());
    return out;
}

} // namespace symspec

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symspec/errors.hpp"

namespace symspec {

/// 1-based cell coordinates of a Young diagram, matching the usual (i,j)
/// convention: row 1 is the top row, column 1 the leftmost column.
struct Node {
    int row = 0;
    int col = 0;

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
};

/// Immutable integer partition in canonical form: weakly decreasing positive
/// parts, no padding. The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Parts may arrive in any order (they are a multiset); nonpositive
    /// entries are rejected.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        for (int p : parts_) {
            if (p <= 0)
                throw parse_error("partition parts must be positive");
            n_ += p;
        }
    }

    /// Parses "3,1,1"; "" and "()" denote the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return n_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based row length accessor; rows beyond the diagram have length 0.
    int part(int i) const {
        return (i >= 1 && i <= num_parts()) ? parts_[static_cast<size_t>(i) - 1] : 0;
    }

    bool contains(Node nd) const {
        return nd.row >= 1 && nd.col >= 1 && nd.col <= part(nd.row);
    }

    Partition conjugate() const {
        std::vector<int> t;
        if (!parts_.empty()) {
            t.reserve(static_cast<size_t>(parts_[0]));
            for (int i = 1; i <= parts_[0]; ++i) {
                int count = 0;
                for (int p : parts_) {
                    if (p >= i)
                        ++count;
                    else
                        break;
                }
                t.push_back(count);
            }
        }
        return Partition(std::move(t));
    }

    bool is_self_conjugate() const { return *this == conjugate(); }

    /// "3,1,1" for (3,1,1); "()" for the empty partition.
    std::string to_string() const {
        if (parts_.empty())
            return "()";
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Lexicographic on the part sequence; enumeration order below is the
    /// descending direction of this ordering.
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

inline Partition Partition::parse(std::string_view text) {
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    while (!text.empty() && is_space(text.front()))
        text.remove_prefix(1);
    while (!text.empty() && is_space(text.back()))
        text.remove_suffix(1);
    if (text.empty() || text == "()")
        return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        while (!tok.empty() && is_space(tok.front()))
            tok.remove_prefix(1);
        while (!tok.empty() && is_space(tok.back()))
            tok.remove_suffix(1);
        int value = 0;
        if (tok.empty())
            throw parse_error("empty part in partition '" + std::string(text) + "'");
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw parse_error("bad partition part '" + std::string(tok) + "'");
            value = value * 10 + (c - '0');
            if (value > 1'000'000)
                throw parse_error("partition part out of range");
        }
        if (value == 0)
            throw parse_error("partition parts must be positive");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        uint64_t h = 14695981039346656037ull;
        for (int part : p.parts()) {
            h ^= static_cast<uint64_t>(part);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

/// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0)
        throw parse_error("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Number of partitions of n (by enumeration; intended for small n).
inline size_t partition_count(int n) {
    return enumerate_partitions(n).size();
}

namespace detail {
inline void require_node(const Partition& p, Node nd, const char* op) {
    if (!p.contains(nd))
        throw invalid_node_error(std::string(op) + ": node (" + std::to_string(nd.row) + "," +
                                 std::to_string(nd.col) + ") outside diagram of (" + p.to_string() + ")");
}
} // namespace detail

/// Hook length h_{i,j} = (arm) + (leg) + 1.
inline int hook_length(const Partition& p, Node nd) {
    detail::require_node(p, nd, "hook_length");
    Partition t = p.conjugate();
    return (p.part(nd.row) - nd.col) + (t.part(nd.col) - nd.row) + 1;
}

/// I_k = all nodes whose hook length equals k, in row-major order.
inline std::vector<Node> hooks_of_length(const Partition& p, int k) {
    std::vector<Node> out;
    Partition t = p.conjugate();
    for (int i = 1; i <= p.num_parts(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            int h = (p.part(i) - j) + (t.part(j) - i) + 1;
            if (h == k)
                out.push_back(Node{i, j});
        }
    }
    return out;
}

/// Nodes strictly below (i,j) in its column.
inline int leg_length(const Partition& p, Node nd) {
    detail::require_node(p, nd, "leg_length");
    return p.conjugate().part(nd.col) - nd.row;
}

/// Removes the rim hook anchored at nd: rows i..c-1 take the length of the
/// row below minus one, row c (the bottom of column j) is cut to j-1. The
/// result is checked to be a canonical partition before it is returned.
inline Partition remove_rim_hook(const Partition& p, Node nd) {
    detail::require_node(p, nd, "remove_rim_hook");
    int bottom = p.conjugate().part(nd.col);
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(p.num_parts()));
    for (int i = 1; i <= p.num_parts(); ++i) {
        int len;
        if (i < nd.row || i > bottom)
            len = p.part(i);
        else if (i < bottom)
            len = p.part(i + 1) - 1;
        else
            len = nd.col - 1;
        if (len > 0)
            parts.push_back(len);
        else if (len < 0)
            throw integrity_error("remove_rim_hook produced a negative row");
    }
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i - 1] < parts[i])
            throw integrity_error("remove_rim_hook produced a non-monotone shape");
    }
    return Partition(std::move(parts));
}

/// m when p is the hook shape (m+1, 1^(n-m-1)), i.e. at most one part
/// exceeds 1; nullopt otherwise (and for the empty partition).
inline std::optional<int> hook_partition_index(const Partition& p) {
    if (p.empty())
        return std::nullopt;
    for (int i = 2; i <= p.num_parts(); ++i) {
        if (p.part(i) != 1)
            return std::nullopt;
    }
    return p.part(1) - 1;
}

} // namespace symspec

#pragma once

#include <stdexcept>
#include <string>

namespace symspec {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A (row, col) node lies outside the Young diagram it was used with.
struct invalid_node_error : error {
    using error::error;
};

/// A cycle type is not a valid conjugacy-class label for the given Sym(n).
struct invalid_class_error : error {
    using error::error;
};

/// Two permutations of different degree were combined.
struct arity_error : error {
    using error::error;
};

/// Character arguments alpha, beta are partitions of different integers.
struct size_mismatch_error : error {
    using error::error;
};

/// A request exceeds a configured size cap (factorial-scale guard rails).
struct capacity_error : error {
    using error::error;
};

/// Malformed textual input (partition strings, ranges, serialized reports).
struct parse_error : error {
    using error::error;
};

/// An iterative solver failed to converge within its iteration cap.
struct solver_error : error {
    using error::error;
};

/// Two routes that must agree exactly disagreed; indicates a library bug.
struct integrity_error : error {
    using error::error;
};

} // namespace symspec

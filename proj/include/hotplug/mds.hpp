#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hotplug/gf2m.hpp"

namespace hotplug {

using SymbolVec = std::vector<std::uint16_t>;
using Bytes = std::vector<std::uint8_t>;

/// Systematic Reed-Solomon [n, d] code over GF(2^m), built from a
/// Vandermonde matrix on the field elements 0..n-1 and normalized so the
/// first d coded symbols equal the message. Any d of the n coded symbols
/// recover the message; every d x d generator submatrix is invertible.
/// Encode/decode are pure; one code object may be shared across threads.
class MdsCode {
public:
    /// Uses the smallest field with 2^m >= n.
    MdsCode(int n, int d);
    MdsCode(int n, int d, int field_degree);

    int n() const { return n_; }
    int d() const { return d_; }
    const Field& field() const { return field_; }

    /// generator()[i][f], shape d x n; a codeword is the message row-vector
    /// times this matrix (symbol-wise per payload position).
    const std::vector<SymbolVec>& generator() const { return generator_; }

    /// Encodes d equal-length payloads into n coded payloads.
    std::vector<SymbolVec> encode(const std::vector<SymbolVec>& message) const;

    /// Recovers the d message payloads from any >= d coded payloads, keyed
    /// by coded index. Throws std::invalid_argument with fewer than d
    /// shares; a singular system signals a broken code and throws
    /// std::logic_error.
    std::vector<SymbolVec> decode(const std::map<int, SymbolVec>& shares) const;

private:
    int n_;
    int d_;
    Field field_;
    std::vector<SymbolVec> generator_;
};

/// Packs a byte string into m-bit symbols, MSB first, zero-padding the tail.
SymbolVec bytes_to_symbols(const Bytes& data, int m);

/// Inverse of bytes_to_symbols; truncates to byte_len bytes.
Bytes symbols_to_bytes(const SymbolVec& symbols, int m, size_t byte_len);

}  // namespace hotplug

#include "hotplug/mds.hpp"

#include <stdexcept>

namespace hotplug {

namespace {

int smallest_degree(int n) {
    int m = 1;
    while ((1 << m) < n) ++m;
    return m;
}

// Row-reduces the square system [A | rhs] in place and returns the solution
// in rhs. Throws std::logic_error on a singular matrix.
void solve_inplace(const Field& gf, std::vector<SymbolVec>& A, std::vector<SymbolVec>& rhs) {
    const int d = static_cast<int>(A.size());
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row)
            if (A[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::logic_error("mds: singular decode system");
        std::swap(A[pivot], A[col]);
        std::swap(rhs[pivot], rhs[col]);
        const std::uint16_t inv = gf.inv(A[col][col]);
        for (auto& x : A[col]) x = gf.mul(x, inv);
        for (auto& x : rhs[col]) x = gf.mul(x, inv);
        for (int row = 0; row < d; ++row) {
            if (row == col || A[row][col] == 0) continue;
            const std::uint16_t factor = A[row][col];
            for (int c = 0; c < d; ++c) A[row][c] = gf.add(A[row][c], gf.mul(factor, A[col][c]));
            for (size_t c = 0; c < rhs[row].size(); ++c)
                rhs[row][c] = gf.add(rhs[row][c], gf.mul(factor, rhs[col][c]));
        }
    }
}

}  // namespace

MdsCode::MdsCode(int n, int d) : MdsCode(n, d, smallest_degree(n)) {}

MdsCode::MdsCode(int n, int d, int field_degree) : n_(n), d_(d), field_(field_degree) {
    if (d < 1 || n < d) throw std::invalid_argument("mds: need 1 <= d <= n");
    if (static_cast<std::uint32_t>(n) > field_.order())
        throw std::invalid_argument("mds: field too small for the code length");

    // Vandermonde rows alpha^0..alpha^(d-1) on the evaluation points 0..n-1,
    // left-normalized (G = V[:,0:d]^{-1} V) so columns 0..d-1 form the
    // identity. Every d x d submatrix stays invertible.
    std::vector<SymbolVec> vand(d, SymbolVec(n, 0));
    for (int f = 0; f < n; ++f)
        for (int i = 0; i < d; ++i) vand[i][f] = field_.pow(static_cast<std::uint16_t>(f), i);

    std::vector<SymbolVec> left(d, SymbolVec(d, 0));
    for (int i = 0; i < d; ++i)
        for (int cc = 0; cc < d; ++cc) left[i][cc] = vand[i][cc];
    solve_inplace(field_, left, vand);
    generator_ = std::move(vand);
}

std::vector<SymbolVec> MdsCode::encode(const std::vector<SymbolVec>& message) const {
    if (static_cast<int>(message.size()) != d_)
        throw std::invalid_argument("mds encode: expected exactly d payloads");
    const size_t len = message.empty() ? 0 : message.front().size();
    for (const auto& part : message)
        if (part.size() != len) throw std::invalid_argument("mds encode: payload length mismatch");

    std::vector<SymbolVec> coded(n_, SymbolVec(len, 0));
    for (int f = 0; f < n_; ++f)
        for (int i = 0; i < d_; ++i) {
            const std::uint16_t g = generator_[i][f];
            if (g == 0) continue;
            for (size_t p = 0; p < len; ++p)
                coded[f][p] = field_.add(coded[f][p], field_.mul(g, message[i][p]));
        }
    return coded;
}

std::vector<SymbolVec> MdsCode::decode(const std::map<int, SymbolVec>& shares) const {
    if (static_cast<int>(shares.size()) < d_) throw std::invalid_argument("mds decode: insufficient shares");
    std::vector<int> indices;
    std::vector<SymbolVec> rhs;
    for (const auto& [idx, payload] : shares) {
        if (idx < 0 || idx >= n_) throw std::invalid_argument("mds decode: share index out of range");
        indices.push_back(idx);
        rhs.push_back(payload);
        if (static_cast<int>(indices.size()) == d_) break;
    }
    const size_t len = rhs.front().size();
    for (const auto& part : rhs)
        if (part.size() != len) throw std::invalid_argument("mds decode: payload length mismatch");

    std::vector<SymbolVec> A(d_, SymbolVec(d_, 0));
    for (int row = 0; row < d_; ++row)
        for (int i = 0; i < d_; ++i) A[row][i] = generator_[i][indices[row]];
    solve_inplace(field_, A, rhs);
    return rhs;
}

SymbolVec bytes_to_symbols(const Bytes& data, int m) {
    if (m < 1 || m > 16) throw std::out_of_range("bytes_to_symbols: m must be in [1, 16]");
    SymbolVec out;
    out.reserve((data.size() * 8 + m - 1) / m);
    std::uint32_t acc = 0;
    int bits = 0;
    for (std::uint8_t byte : data) {
        acc = (acc << 8) | byte;
        bits += 8;
        while (bits >= m) {
            out.push_back(static_cast<std::uint16_t>((acc >> (bits - m)) & ((1u << m) - 1)));
            bits -= m;
            acc &= (1u << bits) - 1;
        }
    }
    if (bits > 0) out.push_back(static_cast<std::uint16_t>(acc << (m - bits)));
    return out;
}

Bytes symbols_to_bytes(const SymbolVec& symbols, int m, size_t byte_len) {
    if (m < 1 || m > 16) throw std::out_of_range("symbols_to_bytes: m must be in [1, 16]");
    Bytes out;
    out.reserve(byte_len);
    std::uint32_t acc = 0;
    int bits = 0;
    for (std::uint16_t sym : symbols) {
        acc = (acc << m) | (sym & ((1u << m) - 1));
        bits += m;
        while (bits >= 8 && out.size() < byte_len) {
            out.push_back(static_cast<std::uint8_t>((acc >> (bits - 8)) & 0xFF));
            bits -= 8;
            acc &= (1u << bits) - 1;
        }
        if (out.size() == byte_len) break;
    }
    while (out.size() < byte_len && bits > 0) {
        out.push_back(static_cast<std::uint8_t>((acc << (8 - bits)) & 0xFF));
        bits = 0;
    }
    while (out.size() < byte_len) out.push_back(0);
    return out;
}

}  // namespace hotplug

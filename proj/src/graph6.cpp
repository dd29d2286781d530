#include "hist/graph6.hpp"

#include <stdexcept>

namespace hist {

namespace {

void append_n(std::string& out, long long n) {
    if (n < 0) throw std::invalid_argument("graph6: negative order");
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= 68719476735LL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order too large");
    }
}

long long read_n(const std::string& s, size_t& pos) {
    auto byte = [&](size_t i) -> int {
        if (i >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    if (byte(pos) != 63) return byte(pos++);
    ++pos;
    int width = 3;
    if (byte(pos) == 63) {
        ++pos;
        width = 6;
    }
    long long n = 0;
    for (int i = 0; i < width; ++i) n = (n << 6) | byte(pos++);
    return n;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.num_vertices();
    std::string out;
    append_n(out, n);
    // Upper-triangle bits x(i,j), i < j, column by column (j = 1..n-1).
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& line) {
    size_t pos = 0;
    long long n = read_n(line, pos);
    if (n > 1'000'000) throw std::invalid_argument("graph6: order too large to decode");
    std::vector<std::pair<VertexId, VertexId>> edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                if (pos >= line.size()) throw std::invalid_argument("graph6: truncated bits");
                int c = static_cast<unsigned char>(line[pos++]);
                if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
                acc = c - 63;
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) edges.emplace_back(i, j);
            --nbits;
        }
    if (pos != line.size()) throw std::invalid_argument("graph6: trailing bytes");
    return Graph(static_cast<int>(n), edges);
}

}  // namespace hist

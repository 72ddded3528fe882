#include "kabminor/graph6.hpp"

#include <fstream>

namespace kabminor {

namespace {

constexpr int kBias = 63;

void put_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
        }
    }
}

int chunk(std::string_view rec, std::size_t pos) {
    const int c = static_cast<unsigned char>(rec[pos]);
    if (c < kBias || c > 126) {
        throw Graph6Error("character " + std::to_string(c) + " at offset " + std::to_string(pos) +
                          " is outside the graph6 range 63..126");
    }
    return c - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    const std::size_t n = g.order();
    put_order(out, n);
    int acc = 0;
    int nbits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph from_graph6(std::string_view rec) {
    if (rec.starts_with(">>graph6<<")) rec.remove_prefix(10);
    while (!rec.empty() && (rec.back() == '\r' || rec.back() == '\n')) rec.remove_suffix(1);
    if (rec.empty()) throw Graph6Error("empty graph6 record");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (rec[0] != 126) {
        n = static_cast<std::size_t>(chunk(rec, 0));
        pos = 1;
    } else if (rec.size() >= 2 && rec[1] == 126) {
        if (rec.size() < 8) throw Graph6Error("truncated 8-byte order header");
        for (pos = 2; pos < 8; ++pos) n = (n << 6) | static_cast<std::size_t>(chunk(rec, pos));
    } else {
        if (rec.size() < 4) throw Graph6Error("truncated 4-byte order header");
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::size_t>(chunk(rec, pos));
    }

    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = pos + (pairs + 5) / 6;
    if (rec.size() != expected) {
        throw Graph6Error("record length " + std::to_string(rec.size()) + " does not match order " +
                          std::to_string(n) + " (expected " + std::to_string(expected) + ")");
    }

    GraphBuilder b(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int bits = chunk(rec, pos + k / 6);
            if ((bits >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    // Padding bits must be zero for the encoding to be canonical.
    if (pairs % 6 != 0) {
        const int last = chunk(rec, expected - 1);
        if (last & ((1 << (6 - pairs % 6)) - 1)) throw Graph6Error("nonzero padding bits");
    }
    return std::move(b).build();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const Graph6Error& e) {
            throw Graph6Error(e.what(), lineno);
        }
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    return read_graph6_stream(in);
}

}  // namespace kabminor

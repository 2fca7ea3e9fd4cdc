#include "egr/graph6.hpp"

namespace egr {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void encode_order(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    int groups = 3;
    out.push_back('~');
    if (n > 258047) {
        out.push_back('~');
        groups = 6;
    }
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const std::uint64_t n = g.order();
    if (n > kGraph6MaxOrder) throw std::invalid_argument("graph too large for graph6 output");
    std::string out;
    encode_order(out, n);
    int filled = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(bits + kBias));
                filled = 0;
                bits = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((bits << (6 - filled)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    const std::size_t start = pos;

    auto next = [&](const char* what) -> std::uint32_t {
        if (pos >= text.size()) throw Graph6Error(std::string("unexpected end of input while reading ") + what, pos);
        const auto c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw Graph6Error("byte outside the printable range 63..126", pos);
        ++pos;
        return c - 63;
    };

    std::uint64_t n = 0;
    if (pos < text.size() && text[pos] == '~') {
        ++pos;
        int groups = 3;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            groups = 6;
        }
        for (int i = 0; i < groups; ++i) n = (n << 6) | next("vertex count");
        if ((groups == 3 && n <= 62) || (groups == 6 && n <= 258047)) {
            throw Graph6Error("non-canonical vertex count encoding", start);
        }
    } else {
        n = next("vertex count");
    }
    if (n > kGraph6MaxOrder) throw Graph6Error("vertex count exceeds supported maximum", start);

    const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes) {
        throw Graph6Error("expected " + std::to_string(nbytes) + " edge bytes, found " + std::to_string(text.size() - pos),
                          text.size() < pos + nbytes ? text.size() : pos + nbytes);
    }

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    Vertex i = 0;
    Vertex j = 1;
    for (std::uint64_t b = 0; b < nbytes; ++b) {
        const std::size_t at = pos;
        const auto chunk = next("edge data");
        for (int s = 5; s >= 0; --s, ++bit) {
            const bool set = (chunk >> s) & 1;
            if (bit >= nbits) {
                if (set) throw Graph6Error("nonzero padding bit", at);
                continue;
            }
            if (set) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace egr

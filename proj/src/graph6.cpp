#include "sicrank/graph6.hpp"

#include <algorithm>
#include <istream>

namespace sicrank {

Graph6Error::Graph6Error(const std::string& what, std::size_t position)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(position)), position_(position)
{
}

namespace {

int sextet(std::string_view s, std::size_t pos)
{
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw Graph6Error("character code " + std::to_string(c) + " outside 63..126", pos);
    return c - 63;
}

} // namespace

Graph decode_graph6(std::string_view text)
{
    if (!text.empty() && text.back() == '\n')
        text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r')
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("empty input", 0);

    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] == '~') {
        if (text.size() > 1 && text[1] == '~')
            throw Graph6Error("8-byte size header (n >= 258048) not supported", 1);
        if (text.size() < 4)
            throw Graph6Error("truncated size header", text.size());
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | static_cast<std::size_t>(sextet(text, i));
        if (n < 63)
            throw Graph6Error("non-canonical long size header for n = " + std::to_string(n), 0);
        pos = 4;
    } else {
        n = static_cast<std::size_t>(sextet(text, 0));
        pos = 1;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t chars = (bits + 5) / 6;
    if (text.size() - pos != chars)
        throw Graph6Error("expected " + std::to_string(chars) + " data characters for n = " + std::to_string(n) +
                              ", found " + std::to_string(text.size() - pos),
                          std::min(text.size(), pos + chars));

    GraphBuilder b(n);
    std::size_t k = 0; // bit index
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int s = sextet(text, pos + k / 6);
            if ((s >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        const std::size_t last = pos + chars - 1;
        const int s = sextet(text, last);
        const int pad = static_cast<int>(6 - bits % 6);
        if (s & ((1 << pad) - 1))
            throw Graph6Error("nonzero padding bits", last);
    }
    return std::move(b).build();
}

std::string encode_graph6(const Graph& g)
{
    const std::size_t n = g.size();
    if (n > kGraph6MaxVertices)
        throw std::invalid_argument("encode_graph6: n = " + std::to_string(n) + " exceeds supported maximum");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (line.rfind(">>graph6<<", 0) == 0)
            line.erase(0, 10);
        out.push_back(decode_graph6(line));
    }
    return out;
}

} // namespace sicrank

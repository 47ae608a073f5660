#include "polarcog/graph6.hpp"

#include <vector>

#include "polarcog/errors.hpp"

namespace polarcog {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr unsigned char kBias = 63;

std::size_t payload_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kHeader)) pos = kHeader.size();
    std::size_t end = text.size();
    while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;

    if (pos >= end) throw ParseError("empty graph6 string", pos);
    const auto size_byte = static_cast<unsigned char>(text[pos]);
    if (size_byte < kBias || size_byte > 126) throw ParseError("character outside 63..126", pos);
    if (size_byte == 126)
        throw ParseError("graph order exceeds the short graph6 form (max " + std::to_string(kGraph6MaxOrder) + ")",
                         pos);
    const int n = size_byte - kBias;
    ++pos;

    const std::size_t need = payload_bytes(n);
    for (std::size_t i = pos; i < end; ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > 126) throw ParseError("character outside 63..126", i);
    }
    if (end - pos < need) throw ParseError("payload too short: expected " + std::to_string(need) + " bytes", end);
    if (end - pos > need) throw ParseError("trailing bytes after graph6 payload", pos + need);

    std::vector<Mask> rows(n, 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const unsigned char c = static_cast<unsigned char>(text[pos + k / 6]) - kBias;
            if (c >> (5 - k % 6) & 1U) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    if (k % 6 != 0) {
        const unsigned char last = static_cast<unsigned char>(text[pos + k / 6]) - kBias;
        const unsigned pad_mask = (1U << (6 - k % 6)) - 1;
        if (last & pad_mask) throw ParseError("nonzero padding bits", pos + k / 6);
    }
    return Graph::from_rows(std::move(rows));
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw LimitExceeded("graph order " + std::to_string(n) + " exceeds the short graph6 form");
    std::vector<unsigned char> payload(payload_bytes(n), 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j)) payload[k / 6] |= static_cast<unsigned char>(1U << (5 - k % 6));
    std::string out(1, static_cast<char>(kBias + n));
    for (unsigned char c : payload) out.push_back(static_cast<char>(kBias + c));
    return out;
}

}  // namespace polarcog

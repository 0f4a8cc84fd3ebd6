#include "zq/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace zq {

GraphFormat parse_format(const std::string& name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edgelist" || name == "el") return GraphFormat::edgelist;
    throw ContractViolation("unknown graph format '" + name + "' (expected graph6 or edgelist)");
}

namespace {

// Parsing anything much larger would be pointless for these algorithms and
// the dense adjacency sets would dominate memory.
constexpr long long kMaxParseVertices = 20000;

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = strip(text);
    std::size_t base = 0;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) {
        s = s.substr(header.size());
        base = header.size();
    }
    if (s.empty()) throw ParseError("graph6: empty input", base);

    auto sextet = [&](std::size_t i) -> int {
        if (i >= s.size()) throw ParseError("graph6: truncated", base + s.size());
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of printable range", base + i);
        return c - 63;
    };

    long long n;
    std::size_t pos;
    if (sextet(0) == 63) {  // '~': extended size
        if (s.size() > 1 && sextet(1) == 63)
            throw ParseError("graph6: sizes above 258047 are not supported", base + 1);
        n = (static_cast<long long>(sextet(1)) << 12) | (sextet(2) << 6) | sextet(3);
        if (n < 63) throw ParseError("graph6: non-canonical extended size", base);
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }
    if (n > kMaxParseVertices) throw ResourceLimitError("graph6: graph too large to load");

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = std::size_t((nbits + 5) / 6);
    if (s.size() != pos + nbytes)
        throw ParseError(s.size() < pos + nbytes ? "graph6: truncated" : "graph6: trailing bytes",
                         base + std::min(s.size(), pos + nbytes));

    std::vector<std::pair<int, int>> edges;
    long long b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((sextet(pos + std::size_t(b / 6)) >> (5 - b % 6)) & 1) edges.emplace_back(i, j);
    for (; b < static_cast<long long>(nbytes) * 6; ++b)
        if ((sextet(pos + std::size_t(b / 6)) >> (5 - b % 6)) & 1)
            throw ParseError("graph6: nonzero padding", base + pos + std::size_t(b / 6));
    return Graph::from_edges(int(n), edges);
}

std::string to_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += char(n + 63);
    } else if (n <= 258047) {
        out += char(126);
        out += char(((n >> 12) & 63) + 63);
        out += char(((n >> 6) & 63) + 63);
        out += char((n & 63) + 63);
    } else {
        throw ContractViolation("to_graph6: graph too large");
    }
    const long long nbits = n * (n - 1) / 2;
    std::string body((nbits + 5) / 6, char(63));
    long long b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if (g.has_edge(i, j)) body[std::size_t(b / 6)] += char(1 << (5 - b % 6));
    return out + body;
}

Graph parse_edgelist(const std::string& text) {
    std::vector<long long> nums;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        bool digits = false;
        if (text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            digits = true;
        }
        if (!digits || (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))))
            throw ParseError("edgelist: expected an integer", start);
        nums.push_back(std::stoll(text.substr(start, i - start)));
    }
    if (nums.empty()) throw ParseError("edgelist: empty input", 0);

    std::size_t at = 0;
    long long n;
    if (nums.size() % 2 == 1) {
        n = nums[0];
        at = 1;
    } else {
        n = 0;
        for (long long x : nums) n = std::max(n, x + 1);
    }
    if (n < 0 || n > kMaxParseVertices) throw ContractViolation("edgelist: bad vertex count");
    std::vector<std::pair<int, int>> edges;
    for (; at + 1 < nums.size(); at += 2)
        edges.emplace_back(int(nums[at]), int(nums[at + 1]));
    return Graph::from_edges(int(n), edges);
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) : to_edgelist(g);
}

}  // namespace zq

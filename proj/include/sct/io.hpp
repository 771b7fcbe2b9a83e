#ifndef SCT_IO_HPP
#define SCT_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sct/complex.hpp"

namespace sct {

/// Canonical text form: a header line "n d m family" followed by m facet
/// lines of d strictly increasing labels.  Facets appear in lexicographic
/// order and lines end with a bare LF, so output is byte-stable.
template <std::size_t W>
std::string serialize_complex(const BasicPureComplex<W>& c, std::string_view family = "manual") {
    std::string out;
    out += std::to_string(c.n());
    out += ' ';
    out += std::to_string(c.facet_size());
    out += ' ';
    out += std::to_string(c.facet_count());
    out += ' ';
    out += family;
    out += '\n';
    for (const auto& f : c.facets()) {
        bool first = true;
        f.for_each([&](int v) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        });
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::vector<long long> parse_int_line(const std::string& line, int lineno) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        bool neg = false;
        if (line[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= line.size() || line[i] < '0' || line[i] > '9')
            throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ", column " +
                                              std::to_string(i + 1) + ": expected an integer");
        long long v = 0;
        while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
            v = v * 10 + (line[i] - '0');
            if (v > (1ll << 40))
                throw Error(Errc::ParseError,
                            "line " + std::to_string(lineno) + ": integer out of range");
            ++i;
        }
        out.push_back(neg ? -v : v);
    }
    return out;
}

} // namespace detail

/// Parses the canonical text form.  The declared universe [1, n] is kept
/// even when some labels are unused, so serialization round-trips exactly.
template <std::size_t W = 16>
std::pair<BasicPureComplex<W>, std::string> parse_complex_with_family(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(std::move(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) lines.push_back(std::move(cur));
    }
    if (lines.empty()) throw Error(Errc::ParseError, "line 1: missing header");

    std::istringstream header(lines[0]);
    long long n = 0, d = 0, m = 0;
    std::string family;
    if (!(header >> n >> d >> m >> family))
        throw Error(Errc::ParseError, "line 1: header must be \"n d m family\"");
    std::string extra;
    if (header >> extra)
        throw Error(Errc::ParseError, "line 1: trailing token '" + extra + "'");
    if (n < 1 || d < 1 || m < 1 || n > BasicVertexSet<W>::capacity())
        throw Error(Errc::ParseError, "line 1: header values out of range");

    std::vector<BasicVertexSet<W>> facets;
    int lineno = 1;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        ++lineno;
        const auto labels = detail::parse_int_line(lines[i], lineno);
        if (labels.empty()) {
            if (static_cast<long long>(facets.size()) == m) continue; // trailing blank
            throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": blank facet line");
        }
        if (static_cast<long long>(facets.size()) == m)
            throw Error(Errc::ParseError,
                        "line " + std::to_string(lineno) + ": more facets than the header claims");
        if (static_cast<long long>(labels.size()) != d)
            throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                              std::to_string(d) + " labels, found " +
                                              std::to_string(labels.size()));
        BasicVertexSet<W> f;
        long long prev = 0;
        for (long long v : labels) {
            if (v <= prev)
                throw Error(Errc::ParseError,
                            "line " + std::to_string(lineno) + ": labels must strictly increase");
            if (v > n)
                throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": label " +
                                                  std::to_string(v) + " exceeds n=" +
                                                  std::to_string(n));
            f.set(static_cast<int>(v));
            prev = v;
        }
        facets.push_back(f);
    }
    if (static_cast<long long>(facets.size()) != m)
        throw Error(Errc::ParseError, "expected " + std::to_string(m) + " facets, found " +
                                          std::to_string(facets.size()));
    return {BasicPureComplex<W>::from_facets(static_cast<int>(n), std::move(facets),
                                             Validate::AllowIsolated),
            family};
}

template <std::size_t W = 16>
BasicPureComplex<W> parse_complex(std::string_view text) {
    return parse_complex_with_family<W>(text).first;
}

template <std::size_t W = 16>
std::pair<BasicPureComplex<W>, std::string> read_complex_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex_with_family<W>(buf.str());
}

template <std::size_t W>
void write_complex_file(const std::string& path, const BasicPureComplex<W>& c,
                        std::string_view family = "manual") {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::ParseError, "cannot open " + path + " for writing");
    out << serialize_complex(c, family);
}

} // namespace sct

#endif // SCT_IO_HPP

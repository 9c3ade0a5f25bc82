#include "hypertoric/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hypertoric {

namespace {

struct Token
{
    std::string text;
    int line = 0, col = 0;
};

std::vector<std::vector<Token>> tokenize(const std::string& text)
{
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == '#')
                break;
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#')
                ++i;
            toks.push_back({raw.substr(start, i - start), lineno, static_cast<int>(start) + 1});
        }
        if (!toks.empty())
            lines.push_back(std::move(toks));
    }
    return lines;
}

[[noreturn]] void fail(int line, int col, const std::string& what)
{
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

Integer parse_integer(const Token& t)
{
    const std::string& s = t.text;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        fail(t.line, t.col, "expected an integer, got '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            fail(t.line, t.col + static_cast<int>(k), "expected an integer, got '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

long header_count(const Token& t, const char* what)
{
    Integer v = parse_integer(t);
    if (v < 0 || v > 100000)
        fail(t.line, t.col, std::string(what) + " out of range");
    return v.convert_to<long>();
}

}   // namespace

IntMatrix parse_matrix(const std::string& text)
{
    auto lines = tokenize(text);
    if (lines.empty())
        fail(1, 1, "empty matrix file");
    const auto& head = lines[0];
    if (head.size() != 2)
        fail(head[0].line, head[0].col, "header must be 'd n'");
    long d = header_count(head[0], "row count"), n = header_count(head[1], "column count");
    if (static_cast<long>(lines.size()) - 1 != d)
        fail(lines.back().back().line, 1, "expected " + std::to_string(d) + " rows, found " +
                                                std::to_string(lines.size() - 1));
    IntMatrix a(d, n);
    for (long i = 0; i < d; ++i) {
        const auto& row = lines[i + 1];
        if (static_cast<long>(row.size()) != n)
            fail(row.front().line, row.front().col, "expected " + std::to_string(n) + " entries, found " +
                                                        std::to_string(row.size()));
        for (long j = 0; j < n; ++j)
            a(i, j) = parse_integer(row[j]);
    }
    return a;
}

Quiver parse_quiver(const std::string& text)
{
    auto lines = tokenize(text);
    if (lines.empty())
        fail(1, 1, "empty quiver file");
    const auto& head = lines[0];
    if (head.size() != 2)
        fail(head[0].line, head[0].col, "header must be 'V E'");
    long nv = header_count(head[0], "vertex count"), ne = header_count(head[1], "edge count");
    if (nv < 1)
        fail(head[0].line, head[0].col, "a quiver needs at least one vertex");
    if (static_cast<long>(lines.size()) - 1 != ne)
        fail(lines.back().back().line, 1, "expected " + std::to_string(ne) + " edges, found " +
                                                std::to_string(lines.size() - 1));
    Quiver q;
    q.vertices = static_cast<int>(nv);
    for (long e = 0; e < ne; ++e) {
        const auto& row = lines[e + 1];
        if (row.size() != 2)
            fail(row.front().line, row.front().col, "an edge line must be 'i j'");
        Integer i = parse_integer(row[0]), j = parse_integer(row[1]);
        if (i < 0 || i >= nv)
            fail(row[0].line, row[0].col, "vertex out of range");
        if (j < 0 || j >= nv)
            fail(row[1].line, row[1].col, "vertex out of range");
        q.edges.emplace_back(i.convert_to<int>(), j.convert_to<int>());
    }
    return q;
}

RatVector parse_rational_list(const std::string& text)
{
    RatVector out;
    std::size_t start = 0;
    int col = 1;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::string trimmed;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c)))
                trimmed += c;
        std::size_t slash = trimmed.find('/');
        Token num{trimmed.substr(0, slash), 1, col};
        if (num.text.empty())
            fail(1, col, "empty entry in list '" + text + "'");
        Rational q(parse_integer(num));
        if (slash != std::string::npos) {
            Token den{trimmed.substr(slash + 1), 1, col + static_cast<int>(slash) + 1};
            if (den.text.empty())
                fail(1, den.col, "missing denominator");
            Integer dz = parse_integer(den);
            if (dz.is_zero())
                fail(1, den.col, "zero denominator");
            q /= Rational(dz);
        }
        out.push_back(q);
        if (comma == std::string::npos)
            break;
        col += static_cast<int>(comma - start) + 1;
        start = comma + 1;
    }
    return out;
}

IntVector parse_int_list(const std::string& text)
{
    IntVector out;
    for (const auto& q : parse_rational_list(text)) {
        if (!is_integral(q))
            fail(1, 1, "expected integers in '" + text + "'");
        out.push_back(boost::multiprecision::numerator(q));
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string canonical_text(const IntMatrix& a)
{
    std::string s = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += (j ? " " : "") + a(i, j).str();
        s += "\n";
    }
    return s;
}

std::string canonical_text(const Quiver& q)
{
    std::string s = std::to_string(q.vertices) + " " + std::to_string(q.n()) + "\n";
    for (const auto& [i, j] : q.edges)
        s += std::to_string(i) + " " + std::to_string(j) + "\n";
    return s;
}

}   // namespace hypertoric

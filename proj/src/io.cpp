#include "arrcohom/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace arrcohom {

namespace {

std::vector<std::string> payload_tokens(const std::string& raw)
{
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream words(line);
    std::vector<std::string> out;
    std::string tok;
    while (words >> tok) out.push_back(tok);
    return out;
}

Rational rational_entry(const std::string& tok, int line)
{
    try {
        return parse_rational(tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

Integer integer_entry(const std::string& tok, int line)
{
    Integer value;
    if (tok.empty() || value.set_str(tok, 10) != 0)
        throw ParseError(line, "malformed integer '" + tok + "'");
    return value;
}

long header_dimension(const std::vector<std::string>& toks, const std::string& keyword,
                      int line)
{
    if (toks.size() != 2 || toks[0] != keyword)
        throw ParseError(line, "expected header '" + keyword + " n'");
    try {
        std::size_t used = 0;
        long n = std::stol(toks[1], &used);
        if (used != toks[1].size() || n < 1)
            throw ParseError(line, "ambient dimension must be a positive integer");
        return n;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(line, "ambient dimension must be a positive integer");
    }
}

// Rewrites the constructor's duplicate diagnostic (which names positions) in
// terms of source lines.
[[noreturn]] void rethrow_with_lines(const std::invalid_argument& e, const char* pattern,
                                     const std::vector<int>& row_lines)
{
    unsigned long i = 0, j = 0;
    if (std::sscanf(e.what(), pattern, &i, &j) == 2 && i >= 1 && j >= 1 &&
        j <= row_lines.size())
        throw ParseError(row_lines[j - 1],
                         std::string(e.what()) + " (lines " +
                             std::to_string(row_lines[i - 1]) + " and " +
                             std::to_string(row_lines[j - 1]) + ")");
    throw ParseError(row_lines.empty() ? 1 : row_lines.back(), e.what());
}

}  // namespace

Arrangement parse_arrangement(std::istream& in)
{
    std::string raw;
    int lineno = 0;
    long n = -1;
    std::vector<Hyperplane> rows;
    std::vector<int> row_lines;

    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<std::string> toks = payload_tokens(raw);
        if (toks.empty()) continue;
        if (n < 0) {
            n = header_dimension(toks, "dim", lineno);
            continue;
        }
        if (toks.size() != static_cast<std::size_t>(n) + 1)
            throw ParseError(lineno, "expected " + std::to_string(n + 1) +
                                         " rational entries, got " +
                                         std::to_string(toks.size()));
        Hyperplane h;
        h.normal = RationalVector(n);
        for (long j = 0; j < n; ++j)
            h.normal(j) = rational_entry(toks[static_cast<std::size_t>(j)], lineno);
        h.offset = rational_entry(toks.back(), lineno);
        bool zero = true;
        for (long j = 0; j < n && zero; ++j) zero = h.normal(j) == 0;
        if (zero) throw ParseError(lineno, "hyperplane has zero normal vector");
        rows.push_back(std::move(h));
        row_lines.push_back(lineno);
    }
    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'dim n' header");

    try {
        return Arrangement(n, std::move(rows));
    } catch (const std::invalid_argument& e) {
        rethrow_with_lines(e, "hyperplane %lu and hyperplane %lu", row_lines);
    }
}

Arrangement load_arrangement(const std::string& path)
{
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    return parse_arrangement(file);
}

ToricArrangement parse_toric(std::istream& in)
{
    std::string raw;
    int lineno = 0;
    long n = -1;
    std::vector<ToricHypersurface> rows;
    std::vector<int> row_lines;

    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<std::string> toks = payload_tokens(raw);
        if (toks.empty()) continue;
        if (n < 0) {
            n = header_dimension(toks, "torus", lineno);
            continue;
        }
        if (toks.size() != static_cast<std::size_t>(n) + 1)
            throw ParseError(lineno, "expected " + std::to_string(n) +
                                         " exponents and an offset, got " +
                                         std::to_string(toks.size()) + " entries");
        IntegerVector a(n);
        for (long j = 0; j < n; ++j)
            a(j) = integer_entry(toks[static_cast<std::size_t>(j)], lineno);
        try {
            rows.emplace_back(a, rational_entry(toks.back(), lineno));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        row_lines.push_back(lineno);
    }
    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'torus n' header");

    try {
        return ToricArrangement(static_cast<int>(n), std::move(rows));
    } catch (const std::invalid_argument& e) {
        rethrow_with_lines(e, "hypersurface %lu and hypersurface %lu", row_lines);
    }
}

ToricArrangement load_toric(const std::string& path)
{
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    return parse_toric(file);
}

std::string serialize(const Arrangement& a)
{
    std::string out = "dim " + std::to_string(a.ambient_dim()) + "\n";
    for (Index i = 0; i < a.size(); ++i) {
        const Hyperplane& h = a.hyperplane(i);
        for (Index j = 0; j < a.ambient_dim(); ++j) out += h.normal(j).get_str() + " ";
        out += h.offset.get_str() + "\n";
    }
    return out;
}

std::string serialize(const ToricArrangement& t)
{
    std::string out = "torus " + std::to_string(t.ambient_dim()) + "\n";
    for (Index i = 0; i < t.size(); ++i) {
        const ToricHypersurface& h = t.hypersurface(i);
        for (Index j = 0; j < t.ambient_dim(); ++j)
            out += h.exponents()(j).get_str() + " ";
        out += h.offset().get_str() + "\n";
    }
    return out;
}

}  // namespace arrcohom

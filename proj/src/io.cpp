#include "ridgekit/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ridgekit {
namespace {

/** Strip comments/whitespace; true when anything substantive remains. */
bool substantive(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

/** Iterate substantive lines with their 1-based numbers. */
template <typename Fn>
void for_each_row(std::istream& in, Fn&& fn) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!substantive(line)) continue;
        fn(lineno, line);
    }
}

long long parse_int_token(int lineno, const std::string& tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    return v;
}

double parse_real_token(int lineno, const std::string& tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(lineno, "expected a number, got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(lineno, "expected a number, got '" + tok + "'");
    return v;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    cells.push_back(cur);
    return cells;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<ivec> parse_direction_rows(std::istream& in) {
    std::vector<ivec> rows;
    std::size_t width = 0;
    for_each_row(in, [&](int lineno, const std::string& line) {
        auto toks = split_ws(line);
        if (width == 0) width = toks.size();
        if (toks.size() != width)
            throw ParseError(lineno, "expected " + std::to_string(width) +
                                         " entries, got " +
                                         std::to_string(toks.size()));
        ivec row;
        row.reserve(toks.size());
        for (const auto& t : toks) {
            long long v = parse_int_token(lineno, t);
            if (v < INT32_MIN || v > INT32_MAX)
                throw ParseError(lineno, "entry out of range: " + t);
            row.push_back(static_cast<int>(v));
        }
        rows.push_back(std::move(row));
    });
    return rows;
}

std::vector<rvec> parse_real_rows(std::istream& in) {
    std::vector<rvec> rows;
    std::size_t width = 0;
    for_each_row(in, [&](int lineno, const std::string& line) {
        auto toks = split_ws(line);
        if (width == 0) width = toks.size();
        if (toks.size() != width)
            throw ParseError(lineno, "expected " + std::to_string(width) +
                                         " entries, got " +
                                         std::to_string(toks.size()));
        rvec row;
        row.reserve(toks.size());
        for (const auto& t : toks) row.push_back(parse_real_token(lineno, t));
        rows.push_back(std::move(row));
    });
    return rows;
}

LatticeSpectrum parse_spectrum(std::istream& in) {
    LatticeSpectrum S;
    std::set<ivec> seen;
    for_each_row(in, [&](int lineno, const std::string& line) {
        auto toks = split_ws(line);
        if (toks.size() < 3)
            throw ParseError(lineno,
                             "expected 'k_1 ... k_m re im' with m >= 1");
        int m = static_cast<int>(toks.size()) - 2;
        if (S.m == 0) S.m = m;
        if (m != S.m)
            throw ParseError(lineno, "expected " + std::to_string(S.m + 2) +
                                         " entries, got " +
                                         std::to_string(toks.size()));
        ivec k(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            long long v =
                parse_int_token(lineno, toks[static_cast<std::size_t>(j)]);
            if (v < INT32_MIN || v > INT32_MAX)
                throw ParseError(lineno, "frequency out of range");
            k[static_cast<std::size_t>(j)] = static_cast<int>(v);
        }
        double re = parse_real_token(lineno, toks[toks.size() - 2]);
        double im = parse_real_token(lineno, toks[toks.size() - 1]);
        if (!seen.insert(k).second)
            throw ParseError(lineno, "duplicate frequency");
        S.set(k, cplx{re, im});
    });
    if (S.m == 0) throw ParseError(1, "spectrum file is empty");
    return S;
}

GridFunction parse_grid(std::istream& in) {
    std::vector<int> shape;
    std::vector<cplx> values;
    std::size_t expected = 0;
    bool got_header = false;
    for_each_row(in, [&](int lineno, const std::string& line) {
        auto toks = split_ws(line);
        if (!got_header) {
            if (toks.size() < 2)
                throw ParseError(lineno, "expected header 'm n_1 ... n_m'");
            long long m = parse_int_token(lineno, toks[0]);
            if (m < 1 || toks.size() != static_cast<std::size_t>(m) + 1)
                throw ParseError(lineno, "expected header 'm n_1 ... n_m'");
            expected = 1;
            for (long long j = 1; j <= m; ++j) {
                long long n = parse_int_token(
                    lineno, toks[static_cast<std::size_t>(j)]);
                if (n < 2)
                    throw ParseError(lineno,
                                     "grid needs at least 2 cells per axis");
                shape.push_back(static_cast<int>(n));
                expected *= static_cast<std::size_t>(n);
            }
            values.reserve(expected);
            got_header = true;
            return;
        }
        if (toks.size() != 2)
            throw ParseError(lineno, "expected 're im'");
        if (values.size() == expected)
            throw ParseError(lineno, "more values than the header announces");
        double re = parse_real_token(lineno, toks[0]);
        double im = parse_real_token(lineno, toks[1]);
        values.emplace_back(re, im);
    });
    if (!got_header) throw ParseError(1, "grid file is empty");
    if (values.size() != expected)
        throw ParseError(1, "expected " + std::to_string(expected) +
                                " values, got " +
                                std::to_string(values.size()));
    return GridFunction(std::move(shape), std::move(values));
}

EmpiricalSample parse_sample_csv(std::istream& in) {
    EmpiricalSample S;
    for_each_row(in, [&](int lineno, const std::string& line) {
        auto cells = split_commas(line);
        if (cells.size() < 2 || cells.size() > 3)
            throw ParseError(lineno, "expected 'x,re' or 'x,re,im'");
        double x = parse_real_token(lineno, trim(cells[0]));
        double re = parse_real_token(lineno, trim(cells[1]));
        double im =
            cells.size() == 3 ? parse_real_token(lineno, trim(cells[2])) : 0.0;
        S.xs.push_back(x);
        S.fs.emplace_back(re, im);
    });
    if (S.xs.empty()) throw ParseError(1, "sample file is empty");
    return S;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_direction_rows(std::ostream& out,
                         const std::vector<DirectionClass>& dirs) {
    for (const DirectionClass& w : dirs) {
        const ivec& d = w.coords();
        for (std::size_t j = 0; j < d.size(); ++j)
            out << (j ? " " : "") << d[j];
        out << "\n";
    }
}

void emit_spectrum(std::ostream& out, const LatticeSpectrum& S) {
    for (const auto& [k, v] : S.c) {
        for (int kj : k) out << kj << " ";
        out << format_double(v.real()) << " " << format_double(v.imag())
            << "\n";
    }
}

void emit_grid(std::ostream& out, const GridFunction& G) {
    out << G.m;
    for (int n : G.shape) out << " " << n;
    out << "\n";
    for (const cplx& v : G.values)
        out << format_double(v.real()) << " " << format_double(v.imag())
            << "\n";
}

void emit_sample_csv(std::ostream& out, const EmpiricalSample& S) {
    for (std::size_t i = 0; i < S.xs.size(); ++i)
        out << format_double(S.xs[i]) << "," << format_double(S.fs[i].real())
            << "," << format_double(S.fs[i].imag()) << "\n";
}

void emit_binned_csv(std::ostream& out, const BinnedConditional& C) {
    for (std::size_t b = 0; b < C.counts.size(); ++b) {
        double center = 0.5 * (C.edges[b] + C.edges[b + 1]);
        out << format_double(center) << "," << C.counts[b] << ",";
        if (C.counts[b] > 0)
            out << format_double(C.means[b].real()) << ","
                << format_double(C.means[b].imag());
        else
            out << ",";
        out << "\n";
    }
}

}  // namespace ridgekit

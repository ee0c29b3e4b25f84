#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "oracles.hpp"
#include "ridgekit/io.hpp"

using namespace ridgekit;

namespace {

template <typename F>
std::string message_of(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

template <typename F>
int line_of(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("direction rows round-trip through text") {
    std::vector<DirectionClass> dirs = {DirectionClass::canonical({1, -2}),
                                        DirectionClass::canonical({0, 1}),
                                        DirectionClass::canonical({3, 5})};
    std::ostringstream out;
    emit_direction_rows(out, dirs);
    CHECK(out.str() == "1 -2\n0 1\n3 5\n");

    std::istringstream in(out.str());
    std::vector<ivec> rows = parse_direction_rows(in);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(rows[i] == dirs[i].coords());
}

TEST_CASE("direction parsing reports the offending line") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_direction_rows(in);
    };
    std::string bad = "# directions\n\n1 2\nx 9\n";
    CHECK(line_of([&] { parse(bad); }) == 4);
    CHECK(message_of([&] { parse(bad); }) ==
          "line 4: expected an integer, got 'x'");
    CHECK(message_of([&] { parse("1 2\n3 4 5\n"); }) ==
          "line 2: expected 2 entries, got 3");
    CHECK(message_of([&] { parse("1 999999999999\n"); }) ==
          "line 1: entry out of range: 999999999999");

    std::istringstream comments_only("# nothing\n\n# more\n");
    CHECK(parse_direction_rows(comments_only).empty());
}

TEST_CASE("real rows accept decimals and enforce width") {
    std::istringstream in("0.5 -1.25e-3\n# note\n1 2\n");
    std::vector<rvec> rows = parse_real_rows(in);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == rvec{0.5, -1.25e-3});
    CHECK(rows[1] == rvec{1.0, 2.0});

    auto parse = [](const std::string& text) {
        std::istringstream s(text);
        return parse_real_rows(s);
    };
    CHECK(message_of([&] { parse("0.5 abc\n"); }) ==
          "line 1: expected a number, got 'abc'");
    CHECK(message_of([&] { parse("1 2\n3\n"); }) ==
          "line 2: expected 2 entries, got 1");
}

TEST_CASE("spectra round-trip with full precision") {
    Rng rng(919);
    LatticeSpectrum S = oracles::random_spectrum(rng, 3, 9, 12);
    S.set({1, 0, -2}, {1.0 / 3.0, -0.1});
    std::ostringstream out;
    emit_spectrum(out, S);
    std::istringstream in(out.str());
    LatticeSpectrum R = parse_spectrum(in);
    CHECK(R.m == S.m);
    CHECK(R.c == S.c);
}

TEST_CASE("spectrum parsing diagnoses malformed rows") {
    auto parse = [](const std::string& text) {
        std::istringstream s(text);
        return parse_spectrum(s);
    };
    CHECK(message_of([&] { parse("1 2\n"); }) ==
          "line 1: expected 'k_1 ... k_m re im' with m >= 1");
    CHECK(message_of([&] { parse("1 2 0.5 0\n1 2 1 0\n"); }) ==
          "line 2: duplicate frequency");
    CHECK(message_of([&] { parse("1 2 0.5 0\n1 2 3 0.5 0\n"); }) ==
          "line 2: expected 4 entries, got 5");
    CHECK(message_of([&] { parse("99999999999 1 0\n"); }) ==
          "line 1: frequency out of range");
    CHECK(message_of([&] { parse("# only comments\n"); }) ==
          "line 1: spectrum file is empty");

    std::istringstream zero_row("0 0 0\n");
    LatticeSpectrum Z = parse_spectrum(zero_row);
    CHECK(Z.m == 1);
    CHECK(Z.support_size() == 0);
}

TEST_CASE("grids round-trip with shape intact") {
    Rng rng(412);
    GridFunction G = GridFunction::zeros({3, 2, 4});
    for (cplx& v : G.values) v = rng.uniform_cplx(-5.0, 5.0);
    std::ostringstream out;
    emit_grid(out, G);
    std::istringstream in(out.str());
    GridFunction R = parse_grid(in);
    CHECK(R.m == 3);
    CHECK(R.shape == G.shape);
    CHECK(R.values == G.values);
}

TEST_CASE("grid parsing validates the header and the count") {
    auto parse = [](const std::string& text) {
        std::istringstream s(text);
        return parse_grid(s);
    };
    CHECK(message_of([&] { parse("oops\n"); }) ==
          "line 1: expected header 'm n_1 ... n_m'");
    CHECK(message_of([&] { parse("2 4\n"); }) ==
          "line 1: expected header 'm n_1 ... n_m'");
    CHECK(message_of([&] { parse("1 2\n0 0\n0 0\n0 0\n"); }) ==
          "line 4: more values than the header announces");
    CHECK(message_of([&] { parse("1 2\n0 0\n"); }) ==
          "line 1: expected 2 values, got 1");
    CHECK(message_of([&] { parse("1 2\n0\n0 0\n"); }) ==
          "line 2: expected 're im'");
    CHECK(message_of([&] { parse(""); }) == "line 1: grid file is empty");
}

TEST_CASE("samples round-trip and accept a missing imaginary part") {
    EmpiricalSample S;
    S.xs = {0.5, -1.0, 0.0};
    S.fs = {{1.0, -2.0}, {0.25, 0.0}, {-1.0 / 3.0, 7.0}};
    std::ostringstream out;
    emit_sample_csv(out, S);
    std::istringstream in(out.str());
    EmpiricalSample R = parse_sample_csv(in);
    CHECK(R.xs == S.xs);
    CHECK(R.fs == S.fs);

    std::istringstream two_cols("0.5,1.25\n# c\n1.5, 2.0, -3\n");
    EmpiricalSample T = parse_sample_csv(two_cols);
    REQUIRE(T.xs.size() == 2);
    CHECK(T.fs[0] == cplx{1.25, 0.0});
    CHECK(T.fs[1] == cplx{2.0, -3.0});

    auto parse = [](const std::string& text) {
        std::istringstream s(text);
        return parse_sample_csv(s);
    };
    CHECK(message_of([&] { parse("1,2,3,4\n"); }) ==
          "line 1: expected 'x,re' or 'x,re,im'");
    CHECK(message_of([&] { parse("\n# hi\n"); }) ==
          "line 1: sample file is empty");
}

TEST_CASE("binned output leaves empty bins blank") {
    EmpiricalSample S;
    S.xs = {0.1, 0.2, 2.9};
    S.fs = {{1.0, 0.0}, {3.0, 0.0}, {5.0, -1.0}};
    BinnedConditional C = conditional_expectation(S, {0.0, 1.0, 2.0, 3.0});
    std::ostringstream out;
    emit_binned_csv(out, C);
    CHECK(out.str() == "0.5,2,2,0\n1.5,0,,\n2.5,1,5,-1\n");
}

TEST_CASE("formatted doubles parse back bitwise") {
    std::vector<double> values = {0.0,           1.0,     -2.0,
                                  0.1,           1.0 / 3.0, pi,
                                  1e-300,        1e308,   -4.9e-324,
                                  0.12345678901234567};
    for (double v : values) {
        std::string text = format_double(v);
        double back = std::strtod(text.c_str(), nullptr);
        CHECK(back == v);
    }
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(0.5) == "0.5");
}

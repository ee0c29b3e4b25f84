#pragma once

#include <iosfwd>
#include <string>

#include "ridgekit/direction.hpp"
#include "ridgekit/spectrum.hpp"
#include "ridgekit/stochastic.hpp"

namespace ridgekit {

/** Input rejection with the 1-based line it happened on. */
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/** '#' starts a comment; blank lines are skipped. One row of whitespace-
 * separated integers per direction.
 */
std::vector<ivec> parse_direction_rows(std::istream& in);

/** Same layout with real-valued entries (query points, displacements). */
std::vector<rvec> parse_real_rows(std::istream& in);

/** Rows "k_1 ... k_m re im"; m is fixed by the first row. */
LatticeSpectrum parse_spectrum(std::istream& in);

/** Header "m n_1 ... n_m", then prod n_j rows "re im" in row-major order. */
GridFunction parse_grid(std::istream& in);

/** CSV rows "x,re,im" or "x,re" (imaginary part defaults to 0). */
EmpiricalSample parse_sample_csv(std::istream& in);

void emit_direction_rows(std::ostream& out,
                         const std::vector<DirectionClass>& dirs);
void emit_spectrum(std::ostream& out, const LatticeSpectrum& S);
void emit_grid(std::ostream& out, const GridFunction& G);
void emit_sample_csv(std::ostream& out, const EmpiricalSample& S);

/** CSV rows "bin_center,count,mean_re,mean_im"; empty bins leave the mean
 * cells blank.
 */
void emit_binned_csv(std::ostream& out, const BinnedConditional& C);

/** Shortest round-trip-exact decimal form (printf %.17g). */
std::string format_double(double v);

}  // namespace ridgekit

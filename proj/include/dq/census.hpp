#pragma once

// Counting pipelines turning bounds on d into bounds on the number of
// quintuples, per triple case, and their total.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dq/arith.hpp"

namespace dq {

struct CensusLine {
    std::string case_id;  // 2i, 2ii, 2iii, 2iv, third
    std::vector<std::pair<std::string, Real>> inputs;
    std::vector<std::pair<std::string, Real>> factors;
    Real result = 0;
    std::optional<Real> published;
    std::vector<std::pair<std::string, Real>> alternates;
    std::vector<std::string> flags;
};

/// Published d bounds and parameters.
struct PrintedInputs {
    static constexpr Real d_2i = 4.02e70L;
    static constexpr Real d_2ii = 2.09e71L;
    static constexpr Real d_2iii = 9.12e58L;
    static constexpr Real eta = 1.29e11L;
    static constexpr Real N_2iv = 2.66e25L;
    static constexpr Real N_third = 4.33e23L;
    static constexpr Real line_2i = 1.81e29L;
    static constexpr Real line_2ii = 2.0e27L;
    static constexpr Real line_2iii = 1.994e25L;
    static constexpr Real line_2iv = 3.88e27L;
    static constexpr Real line_third = 5.9e25L;
    static constexpr Real total_theorem = 2.32e29L;
    static constexpr Real total_table = 1.9e29L;
    static constexpr Real dminus1 = 3.01e60L;
};

/// Smallest value >= x with `digits` significant decimal digits.
Real round_up_sig(Real x, int digits);

/// result is the product as displayed, r_max * 3 * 4 * 2^(omega+2); the
/// pair-count reading and the stated value are carried alongside.
CensusLine census_2i(Real d_bound);

CensusLine census_2ii(Real d_bound, Real eff_factor = 2);

struct EtaSplit {
    Real eta = 0;
    Real N3a = 0, N3b = 0;
    unsigned omega_max = 0;
    Real branch_a = 0, branch_b = 0;

    Real value() const { return branch_a > branch_b ? branch_a : branch_b; }
};

EtaSplit census_2iii(Real d_bound, Real eta);

/// Crossing of the two branches in log eta over (1e5, 1e20).
EtaSplit optimize_eta(Real d_bound, Real eta_lo = 1e5L, Real eta_hi = 1e20L);

CensusLine census_2iii_line(Real d_bound, Real eta);

/// 4 * (6/pi^2 N log N + 0.787 N - 0.3762 + 8.14 N^(2/3)) for 2(iv) and the third kind.
std::pair<CensusLine, CensusLine> census_tail(Real N_2iv = PrintedInputs::N_2iv, Real N_third = PrintedInputs::N_third);

struct TotalReport {
    std::vector<CensusLine> lines;
    Real computed_total = 0;         // sum of computed line results
    Real computed_total_pairs = 0;   // same with the 2(i) pair-count reading
    Real published_lines_total = 0;  // sum of the printed line values
    Real theorem_total = PrintedInputs::total_theorem;
    Real table_total = PrintedInputs::total_table;
    std::vector<std::string> flags;
};

TotalReport total_bound(const std::vector<CensusLine>& lines);

/// Lines from the printed d bounds and eta.
std::vector<CensusLine> census_from_printed();

/// Lines from d bounds supplied by the caller (2i, 2ii, 2iii), eta optimized.
std::vector<CensusLine> census_from_bounds(Real d_2i, Real d_2ii, Real d_2iii);

struct DMinus1Config {
    Real N = 1e30L;
    Real multiplier = 0;
};

/// multiplier * (Lem15 bound at N)
Real dminus1_bound(Real N, Real multiplier);

/// Shipped configuration: N = 1e30 with the multiplier fitted to 3.01e60.
/// Neither number is derived here.
DMinus1Config default_dminus1_config();

}  // namespace dq

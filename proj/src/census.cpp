#include "dq/census.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dq/explicit_bounds.hpp"
#include "dq/omega_sieve.hpp"

namespace dq {

namespace {

constexpr Real kUp = 1 + 1e-15L;

unsigned omega_cap(Real X)
{
    return max_omega_below(ceil_to_bigint(std::floor(X)));
}

std::string sci(Real x)
{
    std::ostringstream os;
    os.precision(4);
    os << std::scientific << static_cast<double>(x);
    return os.str();
}

}  // namespace

Real round_up_sig(Real x, int digits)
{
    if (!(x > 0))
        return x;
    const int e = static_cast<int>(std::floor(std::log10(x))) - (digits - 1);
    const Real scale = std::pow(10.0L, static_cast<Real>(e));
    return std::ceil(x / scale * (1 - 1e-15L)) * scale;
}

CensusLine census_2i(Real d_bound)
{
    if (!(d_bound > 0))
        throw std::domain_error("census_2i: d bound must be positive");
    CensusLine line;
    line.case_id = "2i";
    const Real shrink = 1 - 1.0L / 1681;
    const Real r_max = std::pow(d_bound / 16, 0.25L) / std::sqrt(shrink) * kUp;
    // ab = r^2 - 1 with a < b: half the divisor count of r^2 - 1.
    const Real pairs = bound_value(BoundId::Lem14, r_max) / 2;
    const Real b_max = std::sqrt(d_bound / 20) * kUp;
    const unsigned w = omega_cap(b_max);
    const Real tail = 3 * 4 * std::ldexp(1.0L, static_cast<int>(w + 2));

    line.inputs = {{"d_bound", d_bound}, {"r_max", r_max}, {"pairs", pairs}, {"b_max", b_max}};
    line.factors = {{"r_max", r_max}, {"3", 3}, {"4", 4}, {"2^(omega+2)", std::ldexp(1.0L, static_cast<int>(w + 2))}};
    line.result = r_max * tail;
    line.published = PrintedInputs::line_2i;
    line.alternates = {{"pair_count_reading", pairs * tail}, {"omega_max", static_cast<Real>(w)}};
    if (std::fabs(line.result / PrintedInputs::line_2i - 1) > 0.01L)
        line.flags.push_back("displayed product r_max*3*4*2^" + std::to_string(w + 2) + " = " + sci(line.result) +
                             " differs from stated " + sci(PrintedInputs::line_2i));
    if (std::fabs(pairs * tail / PrintedInputs::line_2i - 1) > 0.01L)
        line.flags.push_back("pair-count reading " + sci(pairs * tail) + " differs from stated " +
                             sci(PrintedInputs::line_2i));
    return line;
}

CensusLine census_2ii(Real d_bound, Real eff_factor)
{
    if (!(d_bound > 0) || !(eff_factor > 0))
        throw std::domain_error("census_2ii: inputs must be positive");
    CensusLine line;
    line.case_id = "2ii";
    const Real r_max = std::cbrt(d_bound / 12) * kUp;
    line.inputs = {{"d_bound", d_bound}, {"r_max", r_max}, {"eff_factor", eff_factor}};
    line.factors = {{"eff_factor", eff_factor}, {"Lem14(r_max)", bound_value(BoundId::Lem14, r_max)}};
    line.result = eff_factor * bound_value(BoundId::Lem14, r_max);
    line.published = PrintedInputs::line_2ii;
    return line;
}

EtaSplit census_2iii(Real d_bound, Real eta)
{
    if (!(d_bound > 0) || !(eta > 1))
        throw std::domain_error("census_2iii: need d > 0 and eta > 1");
    EtaSplit s;
    s.eta = eta;
    s.N3a = std::pow(d_bound / (4 * eta), 0.4L) * kUp;
    s.N3b = std::sqrt(1 + std::pow(eta * eta * eta * d_bound * d_bound / 16, 0.2L)) * kUp;
    s.omega_max = omega_cap(std::pow(d_bound / 4, 0.4L) * kUp);
    s.branch_a = bound_value(BoundId::EFF33, s.N3a) * 8 * 5 * 4;
    s.branch_b = 4 * std::ldexp(1.0L, static_cast<int>(s.omega_max)) * 5 * 4 *
                 bound_value(BoundId::Core3, s.N3b, eta);
    return s;
}

EtaSplit optimize_eta(Real d_bound, Real eta_lo, Real eta_hi)
{
    Real lo = std::log(eta_lo), hi = std::log(eta_hi);
    auto diff = [&](Real L) {
        const EtaSplit s = census_2iii(d_bound, std::exp(L));
        return s.branch_a - s.branch_b;
    };
    if (!(diff(lo) > 0 && diff(hi) < 0))
        throw std::runtime_error("optimize_eta: branches do not cross in the search interval");
    while (hi - lo > 1e-6L) {
        const Real mid = (lo + hi) / 2;
        (diff(mid) > 0 ? lo : hi) = mid;
    }
    return census_2iii(d_bound, std::exp(hi));
}

CensusLine census_2iii_line(Real d_bound, Real eta)
{
    const EtaSplit s = census_2iii(d_bound, eta);
    CensusLine line;
    line.case_id = "2iii";
    line.inputs = {{"d_bound", d_bound}, {"eta", eta}, {"N3a", s.N3a}, {"N3b", s.N3b}};
    line.factors = {{"branch_a", s.branch_a}, {"branch_b", s.branch_b},
                    {"2^omega", std::ldexp(1.0L, static_cast<int>(s.omega_max))}};
    line.result = s.value();
    line.published = PrintedInputs::line_2iii;
    return line;
}

std::pair<CensusLine, CensusLine> census_tail(Real N_2iv, Real N_third)
{
    auto make = [](const char* id, Real N, Real published) {
        if (!(N >= 1))
            throw std::domain_error("census_tail: N must be at least 1");
        CensusLine line;
        line.case_id = id;
        line.inputs = {{"N", N}};
        line.factors = {{"4", 4}, {"BourbonLinear(N)", bound_value(BoundId::BourbonLinear, N)}};
        line.result = 4 * bound_value(BoundId::BourbonLinear, N);
        line.published = published;
        return line;
    };
    return {make("2iv", N_2iv, PrintedInputs::line_2iv), make("third", N_third, PrintedInputs::line_third)};
}

TotalReport total_bound(const std::vector<CensusLine>& lines)
{
    TotalReport t;
    t.lines = lines;
    for (const auto& l : lines) {
        t.computed_total += l.result;
        Real alt = l.result;
        for (const auto& [k, v] : l.alternates)
            if (k == "pair_count_reading")
                alt = v;
        t.computed_total_pairs += alt;
        t.published_lines_total += l.published.value_or(0);
    }
    auto rel = [](Real a, Real b) { return std::fabs(a / b - 1); };
    t.flags.push_back("sum of printed line values " + sci(t.published_lines_total) +
                      (t.published_lines_total <= t.table_total ? " <= " : " > ") + "table total " +
                      sci(t.table_total));
    if (rel(t.theorem_total, t.table_total) > 0.01L)
        t.flags.push_back("theorem total " + sci(t.theorem_total) + " disagrees with table total " +
                          sci(t.table_total));
    if (rel(t.published_lines_total, t.theorem_total) > 0.01L)
        t.flags.push_back("sum of printed line values " + sci(t.published_lines_total) +
                          " does not reproduce theorem total " + sci(t.theorem_total));
    for (const auto& l : lines)
        for (const auto& f : l.flags)
            t.flags.push_back(l.case_id + ": " + f);
    return t;
}

std::vector<CensusLine> census_from_printed()
{
    auto tail = census_tail();
    return {census_2i(PrintedInputs::d_2i), census_2ii(PrintedInputs::d_2ii),
            census_2iii_line(PrintedInputs::d_2iii, PrintedInputs::eta), tail.first, tail.second};
}

std::vector<CensusLine> census_from_bounds(Real d_2i, Real d_2ii, Real d_2iii)
{
    auto tail = census_tail();
    const EtaSplit s = optimize_eta(d_2iii);
    return {census_2i(d_2i), census_2ii(d_2ii), census_2iii_line(d_2iii, s.eta), tail.first, tail.second};
}

Real dminus1_bound(Real N, Real multiplier)
{
    if (!(multiplier > 0))
        throw std::domain_error("dminus1_bound: multiplier must be positive");
    return multiplier * bound_value(BoundId::Lem15, N);
}

DMinus1Config default_dminus1_config()
{
    DMinus1Config c;
    c.N = 1e30L;
    c.multiplier = 9.7273e26L;
    return c;
}

}  // namespace dq

#include "dq/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dq {

namespace {

void dump(const Json& j, int indent, std::string& out)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ",\n";
            first = false;
            out += inner + Json(it.key()).dump() + ": ";
            dump(it.value(), indent + 1, out);
        }
        out += "\n" + pad + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                out += ",\n";
            out += inner;
            dump(j[i], indent + 1, out);
        }
        out += "\n" + pad + "]";
        return;
    }
    case Json::value_t::number_float: {
        const double x = j.get<double>();
        out += std::isfinite(x) ? format_real(x) : "\"" + format_real(x) + "\"";
        return;
    }
    default:
        out += j.dump();
    }
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

Json real(Real x)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (std::isnan(x))
        return "nan";
    return static_cast<double>(x);
}

Json pairs_json(const std::vector<std::pair<std::string, Real>>& v)
{
    Json j = Json::object();
    for (const auto& [k, x] : v)
        j[k] = real(x);
    return j;
}

}  // namespace

Format parse_format(const std::string& name)
{
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    if (name == "markdown" || name == "md")
        return Format::Markdown;
    throw std::invalid_argument("unknown format: " + name);
}

std::string format_real(Real x)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (std::isnan(x))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(x));
    return buf;
}

std::string dump_json(const Json& j)
{
    std::string out;
    dump(j, 0, out);
    out += "\n";
    return out;
}

std::string to_csv(const Table& t)
{
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ",";
            out += csv_cell(cells[i]);
        }
        out += "\n";
    };
    line(t.header);
    for (const auto& r : t.rows)
        line(r);
    return out;
}

std::string to_markdown(const Table& t)
{
    std::string out = "|";
    for (const auto& h : t.header)
        out += " " + h + " |";
    out += "\n|";
    for (std::size_t i = 0; i < t.header.size(); ++i)
        out += " --- |";
    out += "\n";
    for (const auto& r : t.rows) {
        out += "|";
        for (const auto& c : r)
            out += " " + c + " |";
        out += "\n";
    }
    return out;
}

std::string emit_report(const Report& r, Format f)
{
    switch (f) {
    case Format::Json: return dump_json(r.json);
    case Format::Csv: return to_csv(r.table);
    case Format::Markdown: return to_markdown(r.table);
    }
    return {};
}

Json to_json(const Quadruple& q)
{
    return {{"a", q.a.get_str()}, {"b", q.b.get_str()}, {"c", q.c.get_str()}, {"d", q.d.get_str()},
            {"subcase", to_string(q.subcase)}};
}

Json to_json(const SumValue& v)
{
    Json j = {{"kind", to_string(v.kind)}, {"N", v.N}, {"integral", v.integral}};
    if (v.A)
        j["A"] = *v.A;
    if (v.integral)
        j["exact"] = v.exact.get_str();
    else {
        j["value"] = real(v.approx);
        j["error"] = real(v.error);
    }
    return j;
}

Json to_json(const SumReport& r)
{
    Json j = {{"kind", to_string(r.id)}, {"N", r.N},           {"bound", real(r.bound)},
              {"margin", real(r.margin)}, {"violated", r.violated}};
    if (r.A)
        j["A"] = *r.A;
    if (r.integral)
        j["exact"] = r.exact_int.get_str();
    else {
        j["exact"] = real(r.exact);
        j["exact_error"] = real(r.exact_error);
    }
    return j;
}

Json to_json(const GValues& g)
{
    return {{"g1", real(g.g1)}, {"g2", real(g.g2)}, {"g4", real(g.g4)}, {"g5", real(g.g5)},
            {"g6", real(g.g6)}, {"h1", real(g.h1)}, {"h4", real(g.h4)}};
}

Json to_json(const AlphaResult& a)
{
    return {{"alpha_exact", real(a.alpha_exact)}, {"alpha", real(a.alpha)}, {"kappa", real(a.kappa)},
            {"p", std::to_string(a.p_num) + "/" + std::to_string(a.p_den)}};
}

Json to_json(const IterationResult& r)
{
    Json trace = Json::array();
    for (const auto& s : r.trace)
        trace.push_back({{"iteration", s.index}, {"C1", real(s.C1)}, {"g", to_json(s.g)}, {"K", real(s.K)},
                         {"E_coeff", real(s.E_coeff)}, {"new_bound", real(s.new_bound)}});
    return {{"d_bound", real(r.d_bound)}, {"converged", r.converged}, {"trace", trace}};
}

Json to_json(const CensusLine& l)
{
    Json j = {{"case", l.case_id},         {"inputs", pairs_json(l.inputs)},
              {"factors", pairs_json(l.factors)}, {"result", real(l.result)},
              {"alternates", pairs_json(l.alternates)}, {"flags", l.flags}};
    if (l.published)
        j["published"] = real(*l.published);
    return j;
}

Json to_json(const EtaSplit& s)
{
    return {{"eta", real(s.eta)},           {"N3a", real(s.N3a)},           {"N3b", real(s.N3b)},
            {"omega_max", s.omega_max},     {"branch_a", real(s.branch_a)}, {"branch_b", real(s.branch_b)},
            {"value", real(s.value())}};
}

Json to_json(const TotalReport& t)
{
    Json lines = Json::array();
    for (const auto& l : t.lines)
        lines.push_back(to_json(l));
    return {{"lines", lines},
            {"computed_total", real(t.computed_total)},
            {"computed_total_pair_reading", real(t.computed_total_pairs)},
            {"published_lines_total", real(t.published_lines_total)},
            {"theorem_total", real(t.theorem_total)},
            {"table_total", real(t.table_total)},
            {"flags", t.flags}};
}

Json to_json(const ResidueScanReport& r)
{
    Json ce = Json::array();
    for (const auto& c : r.counterexamples)
        ce.push_back({{"b", c.b}, {"count", c.count}, {"expected", c.expected}, {"rule", c.rule}});
    return {{"b_max", r.b_max},
            {"checked", r.checked},
            {"vine_plus_violations", r.vine_plus_violations},
            {"vine_minus_violations", r.vine_minus_violations},
            {"counterexamples", ce},
            {"classes_attaining_upper_bound", r.classes_attaining_upper_bound}};
}

}  // namespace dq

#include "records.hpp"

#include "hdq/errors.hpp"
#include "hdq/text_format.hpp"

namespace hdq::records {

namespace {

json rational_array(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& x : values) out.push_back(format_rational(x));
    return out;
}

bool looks_like_json(std::string_view text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string_view::npos && text[pos] == '{';
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON record: ") + e.what());
    }
}

std::vector<Rational> rationals_field(const json& record, const char* key) {
    if (!record.contains(key) || !record[key].is_array()) {
        throw ParseError(std::string("record is missing array field '") + key + "'");
    }
    std::vector<Rational> out;
    for (const auto& item : record[key]) {
        if (item.is_string()) {
            out.push_back(parse_rational(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            out.emplace_back(item.get<long>());
        } else {
            throw ParseError("record field '" + std::string(key) + "' holds a non-rational value " +
                             item.dump());
        }
    }
    return out;
}

void check_declared_order(const json& record, int actual) {
    if (record.contains("m") && record["m"].get<int>() != actual) {
        throw ArgumentError("record declares m=" + std::to_string(record["m"].get<int>()) +
                            " but its vector has order " + std::to_string(actual));
    }
}

}  // namespace

json to_json(const CRVector& v) {
    return {{"m", v.order()}, {"v", rational_array(v.values())}};
}

json to_json(const PairDotVector& a) {
    return {{"m", a.order()}, {"a", rational_array(a.values())}};
}

json to_json(const SpanReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"i", v.pair.i},
                              {"j", v.pair.j},
                              {"L", v.pair.linear()},
                              {"residual", format_rational(v.residual)}});
    }
    return {{"in_span", report.in_span}, {"violations", violations}};
}

json to_json(const ClassificationReport& report) {
    json out = {{"order", report.order},
                {"hadamard", report.hadamard},
                {"pm1_crv_in_span", report.pm1_crv_in_span},
                {"lattice_point", report.lattice_point},
                {"consistent", report.consistent()},
                {"negated_columns", report.negated_columns},
                {"span", to_json(report.span)}};
    out["crv"] = report.crv ? to_json(*report.crv) : json(nullptr);
    out["shape_error"] = report.shape_error.empty() ? json(nullptr) : json(report.shape_error);
    return out;
}

json to_json(const Solution& solution) {
    const auto& v = solution.verification;
    return {{"columns", solution.columns},
            {"sums_zero", v.sums_zero},
            {"in_span", v.in_span ? json(*v.in_span) : json(nullptr)},
            {"dense_hadamard", v.dense_hadamard}};
}

json to_json(const SearchReport& report) {
    json solutions = json::array();
    for (const auto& s : report.solutions) solutions.push_back(to_json(s));
    return {{"m", report.order},
            {"solutions", solutions},
            {"solution_count", report.solutions.size()},
            {"nodes", report.nodes},
            {"elapsed_seconds", report.elapsed.count()},
            {"exhaustive", report.exhaustive},
            {"limit", to_string(report.limit)},
            {"normalized", report.normalized},
            {"workers", report.workers}};
}

std::string_view flavor_name(Flavor flavor) {
    switch (flavor) {
    case Flavor::canonical: return "canonical";
    case Flavor::uniform_rational: return "rational";
    case Flavor::uniform_irrational: return "irrational";
    }
    return "unknown";
}

json multiset_record(const Realization& r, Flavor flavor) {
    json columns = json::array();
    for (const auto& c : r.matrix.columns()) {
        columns.push_back({format_rational(c.q), c.col, c.multiplicity.get_str()});
    }
    json out = {{"m", r.matrix.order()},
                {"flavor", flavor_name(flavor)},
                {"columns", columns},
                {"column_count", r.matrix.column_count().get_str()},
                {"crv", to_json(r.crv)}};
    out["denominator"] = r.denominator ? json(r.denominator->get_str()) : json(nullptr);
    return out;
}

CRVector parse_crv(std::string_view text) {
    if (!looks_like_json(text)) return CRVector(parse_rationals(text));
    const json record = parse_json(text);
    CRVector v(rationals_field(record, "v"));
    check_declared_order(record, v.order());
    return v;
}

PairDotVector parse_pair_dots(std::string_view text) {
    if (!looks_like_json(text)) return PairDotVector(parse_rationals(text));
    const json record = parse_json(text);
    PairDotVector a(rationals_field(record, "a"));
    check_declared_order(record, a.order());
    return a;
}

HadamardesqueMatrix parse_multiset(std::string_view text) {
    const json record = parse_json(text);
    if (!record.contains("m") || !record.contains("columns")) {
        throw ParseError("multiset record needs fields 'm' and 'columns'");
    }
    std::vector<WeightedColumn> columns;
    for (const auto& c : record["columns"]) {
        if (!c.is_array() || c.size() != 3) throw ParseError("multiset column must be [q, j, multiplicity]");
        columns.push_back({parse_rational(c[0].get<std::string>()), c[1].get<ColumnIndex>(),
                           Integer(c[2].get<std::string>())});
    }
    return {record["m"].get<int>(), std::move(columns)};
}

}  // namespace hdq::records

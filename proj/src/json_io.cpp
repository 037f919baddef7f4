#include "nmds/json_io.hpp"

namespace nmds {

Json matrix_to_json(const FieldMatrix& a, Notation notation) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.field().format_rep(a(i, j), notation));
        rows.push_back(std::move(row));
    }
    return rows;
}

FieldMatrix matrix_from_json(const Field& field, const Json& j) {
    if (!j.is_array() || j.empty()) raise(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
    std::vector<std::vector<Rep>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) raise(ErrorKind::ParseError, "matrix row must be an array");
        std::vector<Rep> r;
        for (const auto& cell : row) {
            if (cell.is_string()) {
                r.push_back(field.parse_rep(cell.get<std::string>()));
            } else if (cell.is_number_unsigned()) {
                const auto v = cell.get<std::uint64_t>();
                if (v >= field.order()) raise(ErrorKind::ParseError, "representative out of field range");
                r.push_back(static_cast<Rep>(v));
            } else {
                raise(ErrorKind::ParseError, "matrix entries must be strings or non-negative integers");
            }
        }
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) raise(ErrorKind::ParseError, "ragged matrix rows");
    return FieldMatrix(field, rows);
}

Json indices_to_json(const std::vector<std::size_t>& zero_based) {
    Json out = Json::array();
    for (auto i : zero_based) out.push_back(i + 1);
    return out;
}

Json code_report_to_json(const Field& field, const CodeReport& report) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["field"] = field.to_string();
    j["n"] = report.n;
    j["k"] = report.k;
    j["d1"] = report.d1;
    j["d2"] = report.d2 ? Json(*report.d2) : Json(nullptr);
    if (!report.dr_profile.empty()) j["dr_profile"] = report.dr_profile;
    j["verdict"] = std::string(to_string(report.verdict));
    Json w = Json::array();
    for (const auto& c : report.witnesses) w.push_back({{"clause", c.clause}, {"columns", indices_to_json(c.columns)}});
    j["witnesses"] = std::move(w);
    return j;
}

Json condition_report_to_json(const ConditionReport& r) {
    Json j;
    j["mode"] = std::string(to_string(r.mode));
    j["subsets"] = r.subsets;
    j["zero"] = r.zero_count;
    j["nonzero"] = r.nonzero_count;
    j["witness"] = r.witness ? indices_to_json(*r.witness) : Json(nullptr);
    j["designated_nonzero"] = r.designated_nonzero;
    j["mds_eligible"] = r.mds_eligible;
    j["nmds_eligible"] = r.nmds_eligible;
    return j;
}

Json three_clause_to_json(const ThreeClauseCheck& c) {
    auto clause = [](bool holds, const std::vector<std::size_t>& w) {
        Json j{{"holds", holds}};
        j["witness"] = w.empty() ? Json(nullptr) : indices_to_json(w);
        return j;
    };
    Json j;
    j["holds"] = c.holds();
    j["i"] = clause(c.clause_i, c.witness_i);
    j["ii"] = clause(c.clause_ii, c.witness_ii);
    j["iii"] = clause(c.clause_iii, c.witness_iii);
    return j;
}

Json elements_to_json(const Field& field, const std::vector<Rep>& v, Notation notation) {
    Json out = Json::array();
    for (auto e : v) out.push_back(field.format_rep(e, notation));
    return out;
}

Json construction_to_json(const XYSpec& spec, Target target, const Construction& c, const std::optional<CodeReport>& report,
                          Notation nt) {
    const Field& f = spec.field();
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "construct";
    j["construction"] = "gvand";
    j["field"] = f.to_string();
    j["x"] = elements_to_json(f, spec.x(), nt);
    j["y"] = elements_to_json(f, spec.y(), nt);
    j["disc"] = std::string(to_string(spec.disc()));
    j["target"] = std::string(to_string(target));
    j["conditions"] = condition_report_to_json(c.conditions);
    j["matrix"] = matrix_to_json(c.matrix, nt);
    j["inverse_direction"] = matrix_to_json(c.inverse_direction, nt);
    j["verified"] = c.verified;
    j["report"] = report ? code_report_to_json(f, *report) : Json(nullptr);
    return j;
}

Json involutory_to_json(const std::vector<Rep>& x, Rep l, Target target, const InvolutoryConstruction& c,
                        const std::optional<CodeReport>& report, Notation nt) {
    const Field& f = c.base.matrix.field();
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "construct";
    j["construction"] = "involutory";
    j["field"] = f.to_string();
    j["x"] = elements_to_json(f, x, nt);
    j["l"] = f.format_rep(l, nt);
    j["y"] = elements_to_json(f, c.y, nt);
    j["target"] = std::string(to_string(target));
    j["conditions"] = condition_report_to_json(c.base.conditions);
    j["matrix"] = matrix_to_json(c.base.matrix, nt);
    j["involutory"] = c.involutory;
    j["lower_triangular"] = c.lower_triangular;
    j["verified"] = c.base.verified;
    j["report"] = report ? code_report_to_json(f, *report) : Json(nullptr);
    return j;
}

}  // namespace nmds

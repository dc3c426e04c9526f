#include "cering/report.hpp"

namespace cering {

Json field_to_json(const FieldSpec& f) {
    Json j;
    switch (f.kind) {
        case FieldKind::PrimeField:
            j["kind"] = "prime-field";
            j["p"] = f.p;
            break;
        case FieldKind::Rationals:
            j["kind"] = "rationals";
            break;
        case FieldKind::RationalFunctions:
            j["kind"] = "rational-functions-2var";
            break;
    }
    return j;
}

FieldSpec field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw Error(ErrorCode::ParseError, "field: expected an object with a 'kind' string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "prime-field") {
        if (!j.contains("p") || !j["p"].is_number_integer())
            throw Error(ErrorCode::ParseError, "prime-field needs an integer 'p'");
        return FieldSpec::prime(j["p"].get<int64_t>());
    }
    if (kind == "rationals") return FieldSpec::rationals();
    if (kind == "rational-functions-2var") return FieldSpec::rational_functions();
    throw Error(ErrorCode::ParseError, "unknown field kind: " + kind);
}

Json vec_to_json(const Algebra& a, const Vec& v) {
    Json coeffs = Json::array();
    for (const auto& c : v) coeffs.push_back(c.to_string());
    Json j;
    j["coeffs"] = std::move(coeffs);
    j["pretty"] = a.format_element(v);
    return j;
}

Json subspace_to_json(const Subspace& s) {
    Json j;
    j["dim"] = s.dim();
    Json rows = Json::array();
    Json pretty = Json::array();
    for (const auto& r : s.rows()) {
        Json row = Json::array();
        for (const auto& c : r) row.push_back(c.to_string());
        rows.push_back(std::move(row));
        pretty.push_back(s.algebra()->format_element(r));
    }
    j["basis"] = std::move(rows);
    j["elements"] = std::move(pretty);
    return j;
}

Json verdict_to_json(const Algebra& a, const Verdict& v) {
    Json j;
    j["value"] = truth_name(v.value);
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.witness_element) j["witness_element"] = vec_to_json(a, *v.witness_element);
    if (v.witness_pair) {
        j["witness_pair"] = Json{{"x", vec_to_json(a, v.witness_pair->first)},
                                 {"y", vec_to_json(a, v.witness_pair->second)}};
    }
    if (v.witness_space) j["witness_space"] = subspace_to_json(*v.witness_space);
    if (v.witness_spaces) {
        j["witness_spaces"] = Json::array({subspace_to_json(v.witness_spaces->first),
                                           subspace_to_json(v.witness_spaces->second)});
    }
    if (v.enumeration_complete) j["enumeration_complete"] = true;
    if (v.points_checked > 0) j["points_checked"] = v.points_checked;
    if (v.seed) j["seed"] = *v.seed;
    if (v.samples) j["samples"] = *v.samples;
    return j;
}

Json algebra_summary_json(const Algebra& a) {
    Json j;
    j["name"] = a.name();
    j["field"] = field_to_json(a.field());
    j["dim"] = a.dim();
    j["basis"] = a.basis_labels();
    return j;
}

Json algebra_to_spec_json(const Algebra& a) {
    Json j;
    j["field"] = field_to_json(a.field());
    j["dim"] = a.dim();
    j["basis"] = a.basis_labels();
    Json unit = Json::array();
    for (const auto& c : a.unit()) unit.push_back(c.to_string());
    j["unit"] = std::move(unit);
    Json table = Json::array();
    for (size_t i = 0; i < a.dim(); i++)
        for (size_t k = 0; k < a.dim(); k++)
            for (const auto& [t, c] : a.basis_product(i, k))
                table.push_back(Json::array({i, k, t, c.to_string()}));
    j["table"] = std::move(table);
    return j;
}

AlgebraPtr algebra_from_spec_json(const Json& j, const std::string& name) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "spec: expected a JSON object");
    for (const char* key : {"field", "dim", "basis", "unit", "table"})
        if (!j.contains(key))
            throw Error(ErrorCode::ParseError, std::string("spec: missing field '") + key + "'");
    FieldSpec f = field_from_json(j["field"]);
    if (!j["dim"].is_number_unsigned() || j["dim"].get<size_t>() == 0)
        throw Error(ErrorCode::ParseError, "spec: 'dim' must be a positive integer");
    size_t dim = j["dim"].get<size_t>();
    if (!j["basis"].is_array() || j["basis"].size() != dim)
        throw Error(ErrorCode::ParseError, "spec: 'basis' must list exactly dim labels");
    std::vector<std::string> labels;
    for (const auto& l : j["basis"]) {
        if (!l.is_string()) throw Error(ErrorCode::ParseError, "spec: basis labels are strings");
        labels.push_back(l.get<std::string>());
    }
    if (!j["unit"].is_array() || j["unit"].size() != dim)
        throw Error(ErrorCode::ParseError, "spec: 'unit' must have dim coefficients");
    Vec unit;
    for (const auto& c : j["unit"]) {
        if (!c.is_string()) throw Error(ErrorCode::ParseError, "spec: unit coefficients are strings");
        unit.push_back(parse_scalar(f, c.get<std::string>()));
    }
    if (!j["table"].is_array())
        throw Error(ErrorCode::ParseError, "spec: 'table' must be an array of quadruples");
    std::vector<TableEntry> table;
    for (const auto& entry : j["table"]) {
        if (!entry.is_array() || entry.size() != 4)
            throw Error(ErrorCode::ParseError, "spec: table entries are [i, j, k, coeff]");
        size_t i = entry[0].get<size_t>(), jj = entry[1].get<size_t>(), k = entry[2].get<size_t>();
        if (i >= dim || jj >= dim || k >= dim)
            throw Error(ErrorCode::ParseError, "spec: table index out of range in " + entry.dump());
        table.push_back({i, jj, k, parse_scalar(f, entry[3].get<std::string>())});
    }
    return make_algebra(f, std::move(labels), table, std::move(unit), name);
}

AlgebraPtr algebra_from_spec_text(const std::string& text, const std::string& name) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        // map the byte offset to a line number
        size_t line = 1;
        for (size_t i = 0; i < e.byte && i < text.size(); i++)
            if (text[i] == '\n') line++;
        throw Error(ErrorCode::ParseError, name + ":" + std::to_string(line) + ": " + e.what());
    }
    return algebra_from_spec_json(j, name);
}

Json structure_to_json(const Algebra& a, const StructureReport& rep) {
    Json j;
    j["center"] = subspace_to_json(rep.center);
    j["radical"] = subspace_to_json(rep.radical);
    j["radical_nilpotence_index"] = rep.radical_nilpotence_index;
    j["center_radical"] = subspace_to_json(rep.center_radical);
    j["center_radical_equals_center_cap_radical"] = rep.center_radical_matches;
    j["right_socle"] = subspace_to_json(rep.right_socle);
    j["left_socle"] = subspace_to_json(rep.left_socle);
    j["bimodule_socle"] = subspace_to_json(rep.bimodule_socle);
    j["quotient_commutative"] = rep.quotient_commutative;
    if (rep.cores) {
        j["cores"] = Json{{"right", verdict_to_json(a, rep.cores->right)},
                          {"left", verdict_to_json(a, rep.cores->left)},
                          {"two_sided", verdict_to_json(a, rep.cores->two_sided)}};
    }
    if (rep.center_cores)
        j["center_cores"] = Json{{"right", verdict_to_json(a, rep.center_cores->right)},
                                 {"left", verdict_to_json(a, rep.center_cores->left)},
                                 {"two_sided", verdict_to_json(a, rep.center_cores->two_sided)}};
    if (rep.local.value != Truth::Inconclusive || !rep.local.reason.empty())
        j["local"] = verdict_to_json(a, rep.local);
    if (rep.invariant.value != Truth::Inconclusive || !rep.invariant.reason.empty())
        j["invariant"] = verdict_to_json(a, rep.invariant);
    if (rep.minimal_right) {
        Json ideals = Json::array();
        for (const auto& ideal : *rep.minimal_right)
            ideals.push_back(subspace_to_json(ideal.space));
        j["minimal_right_ideals"] = std::move(ideals);
    }
    return j;
}

Json diffmat_report_to_json(const DiffmatReport& rep) {
    Json j;
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["ok"] = rep.ok();
    return j;
}

}  // namespace cering

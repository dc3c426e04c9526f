#include "cering/run.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "cering/constructions.hpp"
#include "cering/enumerate.hpp"

namespace cering {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

StructureOptions options_from(const RunConfig& cfg) {
    StructureOptions opts;
    opts.with_cores = !cfg.skip.count("cores");
    opts.with_invariant = !cfg.skip.count("invariant");
    opts.with_local = !cfg.skip.count("local");
    opts.with_minimal_right_ideals = !cfg.skip.count("minimal-ideals");
    opts.seed = cfg.seed;
    return opts;
}

Json report_header(const char* command, const RunConfig& cfg) {
    Json j;
    j["tool"] = "cering";
    j["command"] = command;
    j["input"] = cfg.input;
    j["method"] = ce_method_name(cfg.method);
    j["seed"] = cfg.seed;
    return j;
}

// the report body shared by report/quotient/scan rows
Json algebra_report_body(AlgebraPtr a, const RunConfig& cfg) {
    Json j;
    j["algebra"] = algebra_summary_json(*a);
    CheckReport chk = check_algebra(*a);
    j["table_check"] = Json{{"associative", chk.associative}, {"unital", chk.unital}};
    j["commutative"] = a->is_commutative();

    StructureOptions opts = options_from(cfg);
    StructureReport rep = structure_report(a, opts);
    j["structure"] = structure_to_json(*a, rep);
    if (rep.cores) j["subdirectly_indecomposable"] = verdict_to_json(*a, rep.cores->two_sided);
    if (rep.center_cores)
        j["center_subdirectly_indecomposable"] =
            verdict_to_json(*a, rep.center_cores->two_sided);

    if (!cfg.skip.count("essential")) {
        try {
            CeDecision d = decide_centrally_essential(a, cfg.method, cfg.seed);
            Json ce = verdict_to_json(*a, d.verdict);
            ce["method"] = ce_method_name(d.method_used);
            if (!d.method_detail.empty()) ce["method_detail"] = d.method_detail;
            j["centrally_essential"] = std::move(ce);
        } catch (const Error& e) {
            j["centrally_essential"] =
                Json{{"value", "error"}, {"error", error_code_name(e.code())},
                     {"reason", e.what()}};
        }
    }
    return j;
}

}  // namespace

AlgebraPtr resolve_input(const std::string& input) {
    std::vector<std::string> parts = split(input, ':');
    if (parts[0] == "exterior" && parts.size() == 3) {
        FieldSpec f = FieldSpec::from_name(parts[1]);
        size_t n = 0;
        try {
            n = static_cast<size_t>(std::stoull(parts[2]));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad exterior generator count: " + parts[2]);
        }
        return exterior_algebra(f, n);
    }
    if (parts[0] == "group" && parts.size() == 3) {
        FieldSpec f = FieldSpec::from_name(parts[1]);
        if (parts[2] == "q8") return group_algebra(f, quaternion_group(), input);
        if (!parts[2].empty() && parts[2][0] == '@') {
            std::string path = parts[2].substr(1);
            return group_algebra(f, cayley_from_text(read_file(path)), input);
        }
        throw Error(ErrorCode::ParseError, "unknown group construction: " + parts[2]);
    }
    if (input == "diffmat")
        throw Error(ErrorCode::ParseError,
                    "diffmat is not a structure-constant algebra; only 'report diffmat' works");
    // otherwise a spec file
    return algebra_from_spec_text(read_file(input), input);
}

Json cmd_build(const RunConfig& cfg) {
    AlgebraPtr a = resolve_input(cfg.input);
    // the output doubles as a loadable spec document, so the spec keys
    // live at the top level next to the tool metadata
    Json j;
    j["tool"] = "cering";
    j["command"] = "build";
    j["input"] = cfg.input;
    j["name"] = a->name();
    CheckReport chk = check_algebra(*a);
    Json check = Json{{"associative", chk.associative}, {"unital", chk.unital}};
    if (!chk.assoc_violations.empty()) {
        Json v = Json::array();
        for (const auto& t : chk.assoc_violations) v.push_back(Json::array({t[0], t[1], t[2]}));
        check["associativity_violations"] = std::move(v);
    }
    if (!chk.unit_violations.empty()) check["unit_violations"] = chk.unit_violations;
    j["table_check"] = std::move(check);
    j.update(algebra_to_spec_json(*a));
    return j;
}

Json cmd_report(const RunConfig& cfg) {
    Json j = report_header("report", cfg);
    if (cfg.input == "diffmat") {
        j["diffmat"] = diffmat_report_to_json(diffmat_checks(cfg.seed, 100));
        return j;
    }
    AlgebraPtr a = resolve_input(cfg.input);
    Json body = algebra_report_body(a, cfg);
    j.update(body);
    return j;
}

Json cmd_quotient(const RunConfig& cfg) {
    AlgebraPtr a = resolve_input(cfg.input);
    Json j = report_header("quotient", cfg);
    j["base"] = algebra_summary_json(*a);

    Mat gens;
    Json gen_json = Json::array();
    for (const auto& expr : cfg.generators) {
        Vec v = parse_element(*a, expr);
        gen_json.push_back(Json{{"expr", expr}, {"element", vec_to_json(*a, v)}});
        gens.push_back(std::move(v));
    }
    j["generators"] = std::move(gen_json);
    if (gens.empty()) gens.push_back(zero_vec(a->field(), a->dim()));

    Ideal ideal = ideal_generated_by(a, gens, Sidedness::TwoSided);
    j["ideal"] = subspace_to_json(ideal.space);
    QuotientResult q = quotient(a, ideal);
    RunConfig sub = cfg;
    sub.input = q.algebra->name();
    j.update(algebra_report_body(q.algebra, sub));
    return j;
}

/* Scan families
 * ============================================================
 */

namespace {

struct ScanTask {
    std::string label;
    AlgebraPtr algebra;
    Json extra;  // per-row fields (e.g. the quotient generator)
};

Json scan_rows(const std::vector<ScanTask>& tasks, const RunConfig& cfg) {
    std::vector<Json> rows(tasks.size());
    std::atomic<size_t> next{0};
    size_t jobs = std::max<size_t>(1, cfg.jobs);
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            RunConfig sub = cfg;
            sub.input = tasks[i].label;
            Json row;
            row["input"] = tasks[i].label;
            row.update(tasks[i].extra);
            try {
                row.update(algebra_report_body(tasks[i].algebra, sub));
            } catch (const Error& e) {
                row["error"] = e.what();
            }
            rows[i] = std::move(row);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < jobs; t++) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    Json out = Json::array();
    for (auto& r : rows) out.push_back(std::move(r));
    return out;
}

// condensed row view used in the scan summary table
Json condense_row(const Json& row) {
    Json c;
    c["input"] = row.value("input", std::string("?"));
    if (row.contains("ideal_generator")) c["ideal_generator"] = row["ideal_generator"];
    if (row.contains("error")) {
        c["error"] = row["error"];
        return c;
    }
    c["dim"] = row["algebra"]["dim"];
    c["commutative"] = row["commutative"];
    c["center_dim"] = row["structure"]["center"]["dim"];
    c["radical_dim"] = row["structure"]["radical"]["dim"];
    c["right_socle_dim"] = row["structure"]["right_socle"]["dim"];
    if (row.contains("subdirectly_indecomposable"))
        c["subdirectly_indecomposable"] = row["subdirectly_indecomposable"]["value"];
    if (row["structure"].contains("local")) c["local"] = row["structure"]["local"]["value"];
    if (row["structure"].contains("invariant"))
        c["invariant"] = row["structure"]["invariant"]["value"];
    if (row.contains("centrally_essential"))
        c["centrally_essential"] = row["centrally_essential"]["value"];
    return c;
}

}  // namespace

Json cmd_scan(const RunConfig& cfg) {
    std::vector<std::string> parts = split(cfg.family, ':');
    std::vector<ScanTask> tasks;

    if (parts[0] == "exterior" && parts.size() == 3) {
        FieldSpec f = FieldSpec::from_name(parts[1]);
        size_t maxn = static_cast<size_t>(std::stoull(parts[2]));
        for (size_t n = 1; n <= maxn; n++)
            tasks.push_back({"exterior:" + parts[1] + ":" + std::to_string(n),
                             exterior_algebra(f, n), Json::object()});
    } else if (parts[0] == "groups" && parts.size() == 3 && !parts[2].empty() &&
               parts[2][0] == '@') {
        FieldSpec f = FieldSpec::from_name(parts[1]);
        std::string dir = parts[2].substr(1);
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.is_regular_file()) files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& fpath : files)
            tasks.push_back({"group:" + parts[1] + ":@" + fpath,
                             group_algebra(f, cayley_from_text(read_file(fpath))),
                             Json::object()});
    } else if (parts[0] == "quotients" && parts.size() >= 2) {
        std::string base_name = cfg.family.substr(std::string("quotients:").size());
        AlgebraPtr base = resolve_input(base_name);
        if (base->field().kind != FieldKind::PrimeField)
            throw Error(ErrorCode::UnsupportedField,
                        "quotient scans enumerate principal ideals over prime fields");
        // distinct principal two-sided ideals from projective points
        std::vector<std::pair<Subspace, Vec>> ideals;
        EnumStats stats = for_each_projective_point(
            base->field(), base->dim(), kEnumerationCap, [&](const Vec& v) {
                Subspace s = ideal_generated_by(base, {v}, Sidedness::TwoSided).space;
                for (const auto& [known, gen] : ideals)
                    if (known == s) return true;
                ideals.emplace_back(std::move(s), v);
                return true;
            });
        if (!stats.completed)
            throw Error(ErrorCode::CapExceeded, "quotient scan exceeds the point cap");
        // canonical order: by ideal dimension, then generator pretty form
        std::sort(ideals.begin(), ideals.end(), [&](const auto& a, const auto& b) {
            if (a.first.dim() != b.first.dim()) return a.first.dim() < b.first.dim();
            return base->format_element(a.second) < base->format_element(b.second);
        });
        for (const auto& [space, gen] : ideals) {
            if (space.dim() == base->dim()) continue;  // improper
            if (space.is_zero()) continue;             // the base ring itself
            QuotientResult q = quotient(base, Ideal{space, Sidedness::TwoSided});
            Json extra;
            extra["ideal_generator"] = base->format_element(gen);
            extra["ideal_dim"] = space.dim();
            tasks.push_back({base_name + "/(" + base->format_element(gen) + ")", q.algebra,
                             std::move(extra)});
        }
    } else {
        throw Error(ErrorCode::ParseError, "unknown scan family: " + cfg.family);
    }

    Json j;
    j["tool"] = "cering";
    j["command"] = "scan";
    j["family"] = cfg.family;
    j["method"] = ce_method_name(cfg.method);
    j["seed"] = cfg.seed;
    j["jobs_note"] = "rows are independent of the worker count";
    Json rows = scan_rows(tasks, cfg);

    // quotient scans: does any proper non-commutative centrally essential factor appear?
    bool any_noncomm_ce = false;
    Json table = Json::array();
    for (const auto& row : rows) {
        table.push_back(condense_row(row));
        if (row.contains("centrally_essential") && row.contains("commutative") &&
            row["centrally_essential"]["value"] == "true" && row["commutative"] == false)
            any_noncomm_ce = true;
    }
    if (parts[0] == "quotients")
        j["any_proper_noncommutative_centrally_essential_factor"] = any_noncomm_ce;
    j["table"] = std::move(table);
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace cering

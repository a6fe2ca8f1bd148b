// Batch front end: tableau enumeration, truncated zeta evaluation, MZV
// expansion, identity verification and the quasi-symmetric layer, with
// deterministic JSON output (sorted keys, canonical rational strings).

#include "schurzeta/identities.hpp"
#include "schurzeta/qsym.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

using json = nlohmann::ordered_json;
using namespace schurzeta;

namespace {

ShapeMode mode_for(Family family) {
    return family == Family::SP || family == Family::SO ? ShapeMode::Straight : ShapeMode::Shifted;
}

VarValue parse_var_value(const json& v) {
    if (v.is_number_integer()) return VarValue(static_cast<std::int64_t>(v.get<std::int64_t>()));
    if (v.is_number_float()) return VarValue(std::complex<double>(v.get<double>(), 0.0));
    if (v.is_object()) return VarValue(std::complex<double>(v.value("re", 0.0), v.value("im", 0.0)));
    if (v.is_string ()) {
        const std::string s = v.get<std::string>();
        if (s.find('.') != std::string::npos) return VarValue(std::complex<double>(std::stod(s), 0.0));
        return VarValue(parse_rational(s));
    }
    throw std::invalid_argument("unsupported exponent value in JSON");
}

/// "--diag 0=2,1=1,2=3": content=value pairs.
std::map<int, VarValue> parse_diag_flag(const std::string& text) {
    std::map<int, VarValue> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--diag expects content=value pairs");
        out[std::stoi(item.substr(0, eq))] = VarValue(parse_rational(item.substr(eq + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

VarTableau vars_from_json(const json& j) {
    if (j.contains("diag")) {
        std::map<int, VarValue> m;
        for (const auto& [k, v] : j.at("diag").items()) m[std::stoi(k)] = parse_var_value(v);
        return VarTableau::diag(std::move(m));
    }
    if (j.contains("boxes")) {
        std::map<std::pair<int, int>, VarValue> m;
        for (const auto& b : j.at("boxes"))
            m[{b.at("row").get<int>(), b.at("col").get<int>()}] = parse_var_value(b.at("s"));
        return VarTableau::by_box(std::move(m));
    }
    throw std::invalid_argument("vars JSON needs a 'diag' or 'boxes' member");
}

std::string box_symbol(const Box& b) {
    if (b.row >= 1 && b.row <= 9 && b.col >= 1 && b.col <= 9)
        return "s" + std::to_string(b.row) + std::to_string(b.col);
    return "s(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

json expansion_to_json(const std::vector<ExpansionTerm>& terms, const PositionedShape& shape,
                       const std::optional<VarTableau>& vars) {
    struct Row {
        json index;
        std::string coeff;
        std::vector<std::int64_t> sort_numeric;
        std::vector<std::string> sort_symbolic;
    };
    std::vector<Row> rows;
    for (const ExpansionTerm& t : terms) {
        Row row;
        row.coeff = t.coeff.str();
        if (vars) {
            std::vector<std::int64_t> exps = vars->integer_exponents(shape);
            row.sort_numeric = term_index(t, exps);
            row.index = row.sort_numeric;
        } else {
            json idx = json::array();
            for (const auto& part : t.parts) {
                std::string sym;
                for (std::size_t i = 0; i < part.size(); ++i)
                    sym += (i ? "+" : "") + box_symbol(shape.boxes()[part[i]]);
                idx.push_back(sym);
                row.sort_symbolic.push_back(sym);
            }
            row.index = idx;
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        if (vars) return a.sort_numeric < b.sort_numeric;
        return a.sort_symbolic < b.sort_symbolic;
    });
    json out = json::array();
    for (const Row& r : rows) out.push_back(json{{"index", r.index}, {"coeff", r.coeff}});
    return out;
}

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::array();
        for (std::size_t i = 0; i < static_cast<std::size_t>(p.nvars()); ++i)
            exps.push_back(i < e.size() ? e[i] : 0);
        out.push_back(json{{"exps", exps}, {"coeff", c.str()}});
    }
    return out;
}

json report_to_json(const CheckReport& r) {
    json j;
    j["id"] = r.id;
    json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["mode"] = r.mode;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    json res = json::array();
    for (const Residual& p : r.residuals) res.push_back(json{{"N", p.N}, {"delta", p.delta}});
    j["residuals"] = res;
    j["verdict"] = r.pass ? "pass" : "fail";
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::vector<int> lambda_from(const json& spec, const char* key) {
    const auto& v = spec.at(key);
    if (v.is_string()) return parse_parts(v.get<std::string>());
    return v.get<std::vector<int>>();
}

std::map<int, std::int64_t> diag_map_from(const json& spec) {
    std::map<int, std::int64_t> m;
    for (const auto& [k, v] : spec.at("diag").items()) m[std::stoi(k)] = v.get<std::int64_t>();
    return m;
}

/// Dense a-vector over contents [0, hi] for the shifted Q checks.
std::vector<std::int64_t> dense_a(const std::map<int, std::int64_t>& m, int lo, int hi) {
    std::vector<std::int64_t> a;
    for (int c = lo; c <= hi; ++c) {
        const auto it = m.find(c);
        if (it == m.end())
            throw std::invalid_argument("diag exponents missing content " + std::to_string(c));
        a.push_back(it->second);
    }
    return a;
}

int max_content(const PositionedShape& s) {
    int hi = 0;
    for (const Box& b : s.boxes()) hi = std::max(hi, b.content());
    return hi;
}

int min_content(const PositionedShape& s) {
    int lo = 0;
    for (const Box& b : s.boxes()) lo = std::min(lo, b.content());
    return lo;
}

OutsideDecomposition decomposition_from(const json& spec, const PositionedShape& parent) {
    const auto& d = spec.at("decomposition");
    if (d.is_string()) {
        const std::string name = d.get<std::string>();
        if (name == "rows") return OutsideDecomposition::by_rows(parent);
        if (name == "columns" || name == "cols") return OutsideDecomposition::by_columns(parent);
        throw std::invalid_argument("unknown decomposition '" + name + "'");
    }
    Approach def = Approach::FromLeft;
    if (d.contains("default_approach") && d.at("default_approach") == "below")
        def = Approach::FromBelow;
    std::map<int, Approach> presets;
    if (d.contains("approach"))
        for (const auto& [content, dir] : d.at("approach").items())
            presets[std::stoi(content)] =
                dir == "below" ? Approach::FromBelow : Approach::FromLeft;
    if (d.contains("by_approach")) {
        std::map<int, Approach> dirs;
        for (const auto& [content, dir] : d.at("by_approach").items())
            dirs[std::stoi(content)] = dir == "below" ? Approach::FromBelow : Approach::FromLeft;
        return OutsideDecomposition::from_approaches(parent, dirs, def);
    }
    std::vector<Strip> strips;
    for (const auto& strip_boxes : d.at("strips")) {
        std::vector<Box> boxes;
        for (const auto& b : strip_boxes) boxes.push_back(Box{b.at(0).get<int>(), b.at(1).get<int>()});
        strips.emplace_back(std::move(boxes));
    }
    return OutsideDecomposition(parent, std::move(strips), def, std::move(presets));
}

/// {"rows":[...],"skew":[...],"mode":"shifted"|"straight"}
PositionedShape shape_from_json(const json& j) {
    const std::vector<int> rows = j.at("rows").get<std::vector<int>>();
    const std::vector<int> skew =
        j.contains("skew") ? j.at("skew").get<std::vector<int>>() : std::vector<int>{};
    const std::string mode = j.value("mode", "shifted");
    return mode == "straight" ? PositionedShape::straight(rows, skew)
                              : PositionedShape::shifted(rows, skew);
}

NumericPolicy policy_from(const json& spec) {
    NumericPolicy policy;
    if (spec.contains("grid")) policy.grid = spec.at("grid").get<std::vector<long>>();
    if (spec.contains("bound")) policy.bound = spec.at("bound").get<double>();
    return policy;
}

CheckReport run_check(const json& spec) {
    const std::string check = spec.at("check").get<std::string>();
    if (check == "q_pfaffian") {
        const auto lambda = lambda_from(spec, "lambda");
        const auto a = dense_a(diag_map_from(spec), 0, lambda.empty() ? 0 : lambda[0] - 1);
        return verify_q_pfaffian(lambda, a, spec.at("N").get<int>());
    }
    if (check == "diag_sum") {
        const auto lambda = lambda_from(spec, "lambda");
        std::map<std::pair<int, int>, std::int64_t> svars;
        for (const auto& b : spec.at("vars"))
            svars[{b.at(0).get<int>(), b.at(1).get<int>()}] = b.at(2).get<std::int64_t>();
        return verify_diag_sum(lambda, svars, spec.at("N").get<int>(), policy_from(spec));
    }
    if (check == "skew_pfaffian") {
        const auto lambda = lambda_from(spec, "lambda");
        const auto mu = lambda_from(spec, "mu");
        const auto a = dense_a(diag_map_from(spec), 0, lambda.empty() ? 0 : lambda[0] - 1);
        return verify_skew_pfaffian(lambda, mu, a, spec.at("N").get<int>());
    }
    if (check == "outside_pfaffian") {
        const auto lambda = lambda_from(spec, "lambda");
        const std::vector<int> mu =
            spec.contains("mu") ? lambda_from(spec, "mu") : std::vector<int>{};
        const PositionedShape parent = PositionedShape::shifted(lambda, mu);
        const auto dec = decomposition_from(spec, parent);
        const auto a = dense_a(diag_map_from(spec), 0, max_content(parent));
        return verify_outside_pfaffian(lambda, mu, dec, a, spec.at("N").get<int>());
    }
    if (check == "sp_determinant" || check == "so_determinant") {
        const auto lambda = lambda_from(spec, "lambda");
        const std::vector<int> mu =
            spec.contains("mu") ? lambda_from(spec, "mu") : std::vector<int>{};
        const PositionedShape parent = PositionedShape::straight(lambda, mu);
        const auto dec = decomposition_from(spec, parent);
        const auto a = dense_a(diag_map_from(spec), min_content(parent), max_content(parent));
        return verify_spso_determinant(check[0] == 's' && check[1] == 'p' ? Family::SP : Family::SO,
                                       lambda, mu, dec, a, spec.at("N").get<int>());
    }
    if (check == "decomposition") {
        const Family fam = parse_family(spec.at("family").get<std::string>());
        const DecompositionShape shape = spec.at("shape") == "column" ? DecompositionShape::Column
                                                                      : DecompositionShape::Row;
        return verify_decomposition_identity(fam, shape, spec.at("s").get<std::vector<std::int64_t>>(),
                                             spec.at("N").get<int>());
    }
    if (check == "sum_formula")
        return verify_sum_formula(spec.at("k").get<long>(), spec.at("r").get<long>(),
                                  policy_from(spec));
    if (check == "qstar")
        return verify_qstar(spec.at("k").get<std::vector<std::int64_t>>(), policy_from(spec));
    if (check == "cor113") return verify_cor113(spec.at("k").get<long>(), policy_from(spec));
    if (check == "dual_cor") return verify_dual_cor(spec.at("k").get<long>(), policy_from(spec));
    if (check == "content_remark") return verify_content_remark(spec.value("maxN", 4));
    if (check == "qsym_q_pfaffian") {
        const auto lambda = lambda_from(spec, "lambda");
        const auto a = dense_a(diag_map_from(spec), 0, lambda.empty() ? 0 : lambda[0] - 1);
        CheckReport r;
        r.id = check;
        r.mode = "exact";
        r.params = {{"lambda", json(lambda).dump()}, {"N", std::to_string(spec.at("N").get<int>())}};
        r.pass = qsym_q_pfaffian_holds(lambda, a, spec.at("N").get<int>());
        r.lhs = r.rhs = r.pass ? "polynomials equal" : "polynomials differ";
        return r;
    }
    if (check == "qsym_skew_pfaffian") {
        const auto lambda = lambda_from(spec, "lambda");
        const auto mu = spec.contains("mu") ? lambda_from(spec, "mu") : std::vector<int>{};
        const auto a = dense_a(diag_map_from(spec), 0, lambda.empty() ? 0 : lambda[0] - 1);
        CheckReport r;
        r.id = check;
        r.mode = "exact";
        r.params = {{"lambda", json(lambda).dump()}, {"N", std::to_string(spec.at("N").get<int>())}};
        r.pass = qsym_skew_pfaffian_holds(lambda, mu, a, spec.at("N").get<int>());
        r.lhs = r.rhs = r.pass ? "polynomials equal" : "polynomials differ";
        return r;
    }
    if (check == "qsym_outside_pfaffian") {
        const auto lambda = lambda_from(spec, "lambda");
        const std::vector<int> mu =
            spec.contains("mu") ? lambda_from(spec, "mu") : std::vector<int>{};
        const PositionedShape parent = PositionedShape::shifted(lambda, mu);
        const auto dec = decomposition_from(spec, parent);
        const auto a = dense_a(diag_map_from(spec), 0, max_content(parent));
        CheckReport r;
        r.id = check;
        r.mode = "exact";
        r.params = {{"lambda", json(lambda).dump()}, {"N", std::to_string(spec.at("N").get<int>())}};
        r.pass = qsym_outside_pfaffian_holds(dec, a, spec.at("N").get<int>());
        r.lhs = r.rhs = r.pass ? "polynomials equal" : "polynomials differ";
        return r;
    }
    if (check == "qsym_sp_determinant" || check == "qsym_so_determinant") {
        const auto lambda = lambda_from(spec, "lambda");
        const PositionedShape parent = PositionedShape::straight(lambda);
        const auto dec = decomposition_from(spec, parent);
        const auto a = dense_a(diag_map_from(spec), min_content(parent), max_content(parent));
        CheckReport r;
        r.id = check;
        r.mode = "exact";
        r.params = {{"lambda", json(lambda).dump()}, {"N", std::to_string(spec.at("N").get<int>())}};
        r.pass = qsym_spso_determinant_holds(
            check.find("sp") != std::string::npos ? Family::SP : Family::SO, dec, a,
            spec.at("N").get<int>());
        r.lhs = r.rhs = r.pass ? "polynomials equal" : "polynomials differ";
        return r;
    }
    throw std::invalid_argument("unknown check '" + check + "'");
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << text << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur multiple zeta kernel"};
    app.require_subcommand(1);

    std::string shape_text, skew_text, shape_json_path, kind_name = "qsst", diag_text, vars_path;
    std::string out_path, mode_name = "exact", suite_path;
    int cap = 0;
    std::vector<long> grid;
    bool star = false;

    const auto add_common = [&](CLI::App* sub, bool needs_shape) {
        if (needs_shape) {
            sub->add_option("--shape", shape_text, "outer partition, e.g. 4,2,1");
            sub->add_option("--skew", skew_text, "inner partition");
            sub->add_option("--shape-json", shape_json_path, "shape as a JSON file");
            sub->add_option("--kind", kind_name, "psst|qsst|sp|so");
        }
        sub->add_option("--out", out_path, "also write the JSON to this path");
    };

    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list tableaux");
    add_common(cmd_enumerate, true);
    cmd_enumerate->add_option("--max", cap, "entry cap N")->required();

    CLI::App* cmd_count = app.add_subcommand("count", "count tableaux");
    add_common(cmd_count, true);
    cmd_count->add_option("--max", cap, "entry cap N")->required();

    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a Schur-type zeta");
    add_common(cmd_eval, true);
    cmd_eval->add_option("--max", cap, "truncation / alphabet cap N");
    cmd_eval->add_option("--diag", diag_text, "diag-constant exponents, content=value pairs");
    cmd_eval->add_option("--vars", vars_path, "exponents JSON file");
    cmd_eval->add_option("--mode", mode_name, "exact|float");
    cmd_eval->add_option("--grid", grid, "evaluate on an N-grid (float) and report deltas");

    CLI::App* cmd_expand = app.add_subcommand("expand", "expand into MZV/MZSV indices");
    add_common(cmd_expand, true);
    cmd_expand->add_flag("--star", star, "expand into zeta-star indices");
    cmd_expand->add_option("--diag", diag_text, "optional exponents; omit for symbolic output");
    cmd_expand->add_option("--vars", vars_path, "exponents JSON file");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run identity checks");
    cmd_verify->add_option("--suite", suite_path, "manifest JSON file")->required();
    cmd_verify->add_option("--out", out_path, "also write the JSON to this path");

    CLI::App* cmd_qsym = app.add_subcommand("qsym", "quasi-symmetric polynomials");
    std::string op = "m";
    std::string gamma_text;
    bool specialize = false;
    cmd_qsym->add_option("--op", op, "m|e|schur");
    cmd_qsym->add_option("--gamma", gamma_text, "composition for m/e");
    cmd_qsym->add_option("--shape", shape_text, "shape for schur");
    cmd_qsym->add_option("--skew", skew_text, "inner partition");
    cmd_qsym->add_option("--kind", kind_name, "psst|qsst|sp|so");
    cmd_qsym->add_option("--diag", diag_text, "diag-constant exponents");
    cmd_qsym->add_option("--vars", vars_path, "exponents JSON file");
    cmd_qsym->add_option("--max", cap, "variable count N")->required();
    cmd_qsym->add_flag("--specialize", specialize, "apply t_i -> 1/i (and u_i -> i)");
    cmd_qsym->add_option("--out", out_path, "also write the JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        const auto parse_with_skew = [&](Family family) {
            if (!shape_json_path.empty()) {
                std::ifstream f(shape_json_path);
                if (!f) throw std::invalid_argument("cannot open shape file " + shape_json_path);
                json j;
                f >> j;
                return shape_from_json(j);
            }
            if (shape_text.empty()) throw std::invalid_argument("--shape or --shape-json required");
            const std::string text = skew_text.empty() ? shape_text : shape_text + "/" + skew_text;
            return parse_shape(text, mode_for(family));
        };
        const auto load_vars = [&]() -> std::optional<VarTableau> {
            if (!diag_text.empty()) return VarTableau::diag(parse_diag_flag(diag_text));
            if (!vars_path.empty()) {
                std::ifstream f(vars_path);
                if (!f) throw std::invalid_argument("cannot open vars file " + vars_path);
                json j;
                f >> j;
                return vars_from_json(j);
            }
            return std::nullopt;
        };

        if (*cmd_enumerate) {
            const Family family = parse_family(kind_name);
            const PositionedShape shape = parse_with_skew(family);
            json out = json::array();
            enumerate_tableaux(TableauKind{family, cap}, shape, [&](const Tableau& t) {
                json row = json::array();
                for (const Entry& e : t) row.push_back(entry_to_string(e));
                out.push_back(row);
            });
            emit(json{{"tableaux", out}}, out_path);
            return 0;
        }
        if (*cmd_count) {
            const Family family = parse_family(kind_name);
            const PositionedShape shape = parse_with_skew(family);
            emit(json{{"count", count_tableaux(TableauKind{family, cap}, shape).str()}}, out_path);
            return 0;
        }
        if (*cmd_eval) {
            const Family family = parse_family(kind_name);
            const PositionedShape shape = parse_with_skew(family);
            const auto vars = load_vars();
            if (!vars) throw std::invalid_argument("eval needs --diag or --vars");
            if (!grid.empty()) {
                const auto points = approx_infinite(
                    [&](long n) {
                        return schur_zeta_float(family, shape, *vars, static_cast<int>(n));
                    },
                    grid);
                json out = json::array();
                for (const auto& p : points)
                    out.push_back(json{{"N", p.N}, {"value", p.value.real()}, {"delta", p.delta}});
                emit(json{{"grid", out}}, out_path);
                return 0;
            }
            if (cap <= 0) throw std::invalid_argument("eval needs --max or --grid");
            if (mode_name == "exact") {
                const Rational v = schur_zeta_exact(family, shape, *vars, cap);
                emit(json{{"value", to_string(v)}}, out_path);
            } else if (mode_name == "float") {
                const auto v = schur_zeta_float(family, shape, *vars, cap);
                if (v.imag() == 0.0)
                    emit(json{{"value", v.real()}}, out_path);
                else
                    emit(json{{"value", {{"re", v.real()}, {"im", v.imag()}}}}, out_path);
            } else {
                throw std::invalid_argument("--mode must be exact or float");
            }
            return 0;
        }
        if (*cmd_expand) {
            const Family family = parse_family(kind_name);
            if (family != Family::PSST && family != Family::QSST)
                throw std::invalid_argument("expand applies to the marked families");
            const PositionedShape shape = parse_with_skew(family);
            const auto terms = star ? expand_mzsv(family, shape) : expand_mzv(family, shape);
            emit(json{{"terms", expansion_to_json(terms, shape, load_vars())}}, out_path);
            return 0;
        }
        if (*cmd_verify) {
            std::ifstream f(suite_path);
            if (!f) throw std::invalid_argument("cannot open suite manifest " + suite_path);
            json manifest;
            f >> manifest;
            std::vector<CheckReport> reports;
            for (const auto& spec : manifest) reports.push_back(run_check(spec));
            std::stable_sort(reports.begin(), reports.end(),
                             [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
            json out = json::array();
            bool all = true;
            for (const CheckReport& r : reports) {
                out.push_back(report_to_json(r));
                all = all && r.pass;
            }
            emit(json{{"checks", out}, {"all_pass", all}}, out_path);
            return all ? 0 : 1;
        }
        if (*cmd_qsym) {
            if (op == "m" || op == "e") {
                const std::vector<int> gamma = parse_parts(gamma_text);
                const Poly p = op == "m" ? monomial_M(gamma, cap) : essential_E(gamma, cap);
                if (specialize)
                    emit(json{{"value", to_string(specialize_e(p, cap))}}, out_path);
                else
                    emit(json{{"poly", poly_to_json(p)}}, out_path);
                return 0;
            }
            if (op == "schur") {
                const Family family = parse_family(kind_name);
                const PositionedShape shape = parse_with_skew(family);
                const auto vars = load_vars();
                if (!vars) throw std::invalid_argument("qsym schur needs --diag or --vars");
                const Poly p = schur_qsym(family, shape, vars->integer_exponents(shape), cap);
                if (specialize)
                    emit(json{{"value", to_string(specialize_e(p, cap))}}, out_path);
                else
                    emit(json{{"poly", poly_to_json(p)}}, out_path);
                return 0;
            }
            throw std::invalid_argument("--op must be m, e or schur");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "equigen/json_io.hpp"

#include <fstream>

namespace equigen {

namespace {

const Json& require_field(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

long require_long(const Json& j, const char* key, const char* what) {
    const Json& v = require_field(j, key, what);
    if (!v.is_number_integer()) throw schema_error(std::string(what) + ": '" + key + "' must be an integer");
    return v.get<long>();
}

std::vector<Cyclotomic> parse_value_row(const Json& row, size_t expected, const char* what) {
    if (!row.is_array() || row.size() != expected)
        throw schema_error(std::string(what) + ": expected an array of " + std::to_string(expected) +
                           " cyclotomic literals");
    std::vector<Cyclotomic> out;
    out.reserve(expected);
    for (const auto& v : row) {
        if (!v.is_string()) throw schema_error(std::string(what) + ": cyclotomic literals must be strings");
        out.push_back(Cyclotomic::parse(v.get<std::string>()));
    }
    return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw schema_error("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

TablePtr table_from_json(const Json& j) {
    const char* what = "character table";
    std::string name = j.value("name", std::string("user"));
    const long group_order = require_long(j, "groupOrder", what);
    const Json& jclasses = require_field(j, "classes", what);
    if (!jclasses.is_array() || jclasses.empty()) throw schema_error("character table: bad 'classes'");
    std::vector<ConjClass> classes;
    for (const auto& jc : jclasses) {
        ConjClass cc;
        cc.label = require_field(jc, "label", what).get<std::string>();
        cc.size = require_long(jc, "size", what);
        cc.order = require_long(jc, "order", what);
        classes.push_back(std::move(cc));
    }
    const Json& jpm = require_field(j, "powerMap", what);
    if (!jpm.is_array() || jpm.size() != classes.size())
        throw schema_error("character table: powerMap needs one row per class");
    std::vector<std::vector<int>> power_map;
    for (const auto& row : jpm) {
        if (!row.is_array()) throw schema_error("character table: powerMap rows must be arrays");
        power_map.emplace_back();
        for (const auto& v : row) power_map.back().push_back(v.get<int>());
    }
    const Json& jirreps = require_field(j, "irreps", what);
    if (!jirreps.is_array()) throw schema_error("character table: bad 'irreps'");
    std::vector<std::vector<Cyclotomic>> irreps;
    for (const auto& row : jirreps) irreps.push_back(parse_value_row(row, classes.size(), what));
    return std::make_shared<CharacterTable>(std::move(name), group_order, std::move(classes),
                                            std::move(power_map), std::move(irreps));
}

Json table_to_json(const CharacterTable& t) {
    Json j;
    j["name"] = t.name();
    j["groupOrder"] = t.group_order();
    Json classes = Json::array();
    for (int c = 0; c < t.num_classes(); ++c) {
        classes.push_back({{"label", t.cls(c).label}, {"size", t.cls(c).size}, {"order", t.cls(c).order}});
    }
    j["classes"] = std::move(classes);
    Json pm = Json::array();
    for (int c = 0; c < t.num_classes(); ++c) {
        Json row = Json::array();
        for (long k = 0; k < t.cls(c).order; ++k) row.push_back(t.power_class(c, k));
        pm.push_back(std::move(row));
    }
    j["powerMap"] = std::move(pm);
    Json irreps = Json::array();
    for (int i = 0; i < t.num_irreps(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < t.num_classes(); ++c) row.push_back(t.value(i, c).str());
        irreps.push_back(std::move(row));
    }
    j["irreps"] = std::move(irreps);
    return j;
}

TablePtr resolve_table(const std::string& name_or_path) {
    if (name_or_path.find('/') != std::string::npos ||
        (name_or_path.size() > 5 && name_or_path.substr(name_or_path.size() - 5) == ".json")) {
        return table_from_json(load_json_file(name_or_path));
    }
    return builtin_table(name_or_path);
}

ClassFunction class_function_from_json(const Json& j, const TablePtr& table) {
    return {table, parse_value_row(j, table->num_classes(), "class function")};
}

SurfaceCohomology surface_from_json(const Json& j) {
    const char* what = "surface cohomology";
    TablePtr table = resolve_table(require_field(j, "group", what).get<std::string>());
    const Json& jh = require_field(j, "characters", what);
    if (!jh.is_array() || jh.size() % 2 == 0)
        throw schema_error("surface cohomology: 'characters' must list degrees 0..2N");
    std::vector<ClassFunction> h;
    for (const auto& row : jh) {
        if (row.is_array() && row.empty()) {
            h.emplace_back(table);  // zero character
        } else {
            h.push_back(class_function_from_json(row, table));
        }
    }
    return {std::move(table), std::move(h)};
}

NodalCurveData curve_from_json(const Json& j) {
    const char* what = "nodal curve";
    TablePtr table = resolve_table(require_field(j, "group", what).get<std::string>());
    ClassFunction h1 = class_function_from_json(require_field(j, "normalizationH1", what), table);
    const long nodes = require_long(j, "nodes", what);
    const Json& jact = require_field(j, "actions", what);
    if (!jact.is_array() || jact.size() != static_cast<size_t>(table->num_classes()))
        throw schema_error("nodal curve: 'actions' needs one entry per class");
    std::vector<NodeAction> actions(table->num_classes());
    std::vector<bool> seen(table->num_classes(), false);
    for (const auto& ja : jact) {
        const long c = require_long(ja, "class", what);
        if (c < 0 || c >= table->num_classes() || seen[c])
            throw schema_error("nodal curve: bad or repeated class index in actions");
        seen[c] = true;
        NodeAction act;
        const Json& jperm = require_field(ja, "permutation", what);
        if (!jperm.is_array() || jperm.size() != static_cast<size_t>(nodes))
            throw schema_error("nodal curve: permutation length must equal node count");
        for (const auto& v : jperm) act.permutation.push_back(v.get<int>());
        const Json& jflags = require_field(ja, "branchFlags", what);
        if (!jflags.is_array() || jflags.size() != static_cast<size_t>(nodes))
            throw schema_error("nodal curve: branchFlags length must equal node count");
        for (size_t n = 0; n < jflags.size(); ++n) {
            const std::string f = jflags[n].get<std::string>();
            if (f == "fixed") act.flag.push_back(BranchFlag::Fixed);
            else if (f == "swapped") act.flag.push_back(BranchFlag::Swapped);
            else if (f == "moved") act.flag.push_back(std::nullopt);
            else throw schema_error("nodal curve: branch flag must be fixed|swapped|moved");
        }
        actions[c] = std::move(act);
    }
    return {std::move(table), std::move(h1), nodes, std::move(actions)};
}

std::vector<StratumSpec> strata_from_json(const Json& j, TablePtr& group_out) {
    const char* what = "strata";
    group_out = resolve_table(require_field(j, "group", what).get<std::string>());
    const Json& js = require_field(j, "strata", what);
    if (!js.is_array()) throw schema_error("strata: 'strata' must be an array");
    std::vector<StratumSpec> out;
    for (const auto& jst : js) {
        StratumSpec spec;
        spec.base_euler = require_long(jst, "baseEuler", what);
        const Json& jstab = require_field(jst, "stabilizer", what);
        const std::string kind = require_field(jstab, "type", what).get<std::string>();
        TablePtr fiber_table;
        if (kind == "full") {
            spec.inducer = StratumSpec::Inducer::FullGroup;
            fiber_table = group_out;
        } else if (kind == "cyclic") {
            spec.inducer = StratumSpec::Inducer::Cyclic;
            spec.stabilizer_class =
                group_out->class_index(require_field(jstab, "class", what).get<std::string>());
            fiber_table = cyclic_table(group_out->cls(spec.stabilizer_class).order);
        } else if (kind == "matrix") {
            spec.inducer = StratumSpec::Inducer::Matrix;
            fiber_table = resolve_table(require_field(jstab, "subgroup", what).get<std::string>());
            const Json& jm = require_field(jstab, "matrix", what);
            for (const auto& row : jm) {
                spec.induction_matrix.emplace_back();
                for (const auto& v : row)
                    spec.induction_matrix.back().push_back(parse_rational(v.get<std::string>()));
            }
        } else {
            throw schema_error("strata: stabilizer type must be full|cyclic|matrix");
        }
        if (jst.contains("fiber")) {
            Json fiber = jst["fiber"];
            if (!fiber.contains("group")) fiber["group"] = fiber_table->name();
            spec.fiber = curve_from_json(fiber);
            if (!same_table(spec.fiber->table(), fiber_table))
                throw schema_error("strata: fiber group does not match the stabilizer subgroup");
        } else if (jst.contains("fiberEulerRep")) {
            spec.fiber_euler_rep = class_function_from_json(jst["fiberEulerRep"], fiber_table);
        } else {
            throw schema_error("strata: stratum needs 'fiber' or 'fiberEulerRep'");
        }
        out.push_back(std::move(spec));
    }
    return out;
}

ClassFunction target_from_json(const Json& j) {
    TablePtr table = resolve_table(require_field(j, "group", "target").get<std::string>());
    return class_function_from_json(require_field(j, "values", "target"), table);
}

NamedBasis basis_from_json(const Json& j) {
    TablePtr table = resolve_table(require_field(j, "group", "basis").get<std::string>());
    const Json& je = require_field(j, "elements", "basis");
    if (!je.is_array() || je.empty()) throw schema_error("basis: 'elements' must be a non-empty array");
    NamedBasis out;
    for (const auto& e : je) {
        out.names.push_back(e.value("name", "n" + std::to_string(out.names.size() + 1)));
        out.elements.push_back(class_function_from_json(require_field(e, "values", "basis"), table));
    }
    return out;
}

}  // namespace equigen

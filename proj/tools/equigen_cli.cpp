// equigen: exact equivariant generating functions at the command line.
// Exit codes: 0 success, 1 internal error, 2 usage, 3 schema error,
// 4 precondition failure, 5 verification mismatch.
#include "CLI11.hpp"

#include "equigen/goettsche.hpp"
#include "equigen/jacobian.hpp"
#include "equigen/json_io.hpp"
#include "equigen/printing.hpp"
#include "equigen/rh.hpp"

#include <iostream>

using namespace equigen;

namespace {

constexpr int kExitVerification = 5;

Json decomposition_json(const ClassFunction& f) {
    Json j;
    j["decomposition"] = Json::array();
    const auto m = decompose(f);
    for (const auto& x : m) j["decomposition"].push_back(x.get_str());
    j["display"] = format_decomposition(m);
    Json values = Json::array();
    for (int c = 0; c < f.num_classes(); ++c) values.push_back(f.value(c).str());
    j["values"] = std::move(values);
    return j;
}

Json qseries_json(const QSeries& s) {
    Json j;
    j["offset"] = rational_str(s.offset());
    Json coeffs = Json::array();
    for (long n = 0; n <= s.order(); ++n) coeffs.push_back(rational_str(s.coeff(n)));
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json rep_series_json(const RepSeries& s) {
    Json j = Json::array();
    for (long n = 0; n <= s.order(); ++n) {
        Json coeff;
        coeff["t"] = n;
        Json comps = Json::array();
        for (const auto& [d, f] : s.coeff(n).components()) {
            Json comp = decomposition_json(f);
            comp["degree"] = d;
            comps.push_back(std::move(comp));
        }
        coeff["components"] = std::move(comps);
        j.push_back(std::move(coeff));
    }
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct K3TraceOptions {
    long symplectic_order = 0;
    std::string nonsymplectic;
    long order = 20;
    std::string cls;
    bool identity = false;
};

int run_k3_trace(const K3TraceOptions& opt, bool as_json) {
    K3ActionData data;
    if (opt.symplectic_order > 0) {
        data.kind = K3ActionData::Kind::Symplectic;
        data.table = cyclic_table(opt.symplectic_order);
    } else {
        data.kind = K3ActionData::Kind::NonSymplecticPrime;
        long p = 0, rank_t = 0;
        for (const auto& field : {std::string("p"), std::string("rankT")}) {
            const std::string& spec = opt.nonsymplectic;
            const auto pos = spec.find(field + "=");
            if (pos == std::string::npos)
                throw precondition_error("nonsymplectic spec needs p=<prime>,rankT=<rank>");
            const auto end = spec.find(',', pos);
            const std::string value = spec.substr(pos + field.size() + 1,
                                                  end == std::string::npos ? end : end - pos - field.size() - 1);
            (field == "p" ? p : rank_t) = std::stol(value);
        }
        data.p = p;
        data.rank_t = rank_t;
        data.table = cyclic_table(p);
    }
    int g;
    if (opt.identity) g = data.table->identity_class();
    else if (!opt.cls.empty()) g = data.table->class_index(opt.cls);
    else g = data.table->group_order() == 1 ? 0 : 1;  // generator
    const QSeries series = k3_trace_series(data, g, opt.order);
    if (as_json) {
        Json j = qseries_json(series);
        j["group"] = data.table->name();
        j["class"] = data.table->cls(g).label;
        emit(j);
    } else {
        std::cout << series.str() << "\n";
    }
    return 0;
}

int run_eta_verify(long order, bool as_json) {
    int matched = 0;
    Json rows = Json::array();
    for (long n = 1; n <= 8; ++n) {
        const QSeries trace =
            k3_trace_series({cyclic_table(n), K3ActionData::Kind::Symplectic, 0, 0},
                            n == 1 ? 0 : 1, order);
        const QSeries quotient = eta_quotient_expand(symplectic_trace_eta_row(n), order);
        const QSeries reciprocal = QSeries(order, quotient.coeffs(), Rational(0)).inverse();
        const QCompare cmp = qseries_equal(trace, reciprocal, order);
        if (cmp.equal) ++matched;
        const Rational weight = eta_weight(symplectic_trace_eta_row(n));
        if (as_json) {
            Json row;
            row["N"] = n;
            row["quotient"] = symplectic_trace_eta_row(n).str();
            row["weight"] = rational_str(weight);
            row["equal"] = cmp.equal;
            if (!cmp.equal) row["mismatch"] = cmp.message;
            rows.push_back(std::move(row));
        } else {
            std::cout << "N=" << n << " quotient=" << symplectic_trace_eta_row(n).str()
                      << " weight=" << rational_str(weight) << " "
                      << (cmp.equal ? "OK" : ("MISMATCH (" + cmp.message + ")")) << "\n";
        }
    }
    if (as_json) {
        Json j;
        j["rows"] = std::move(rows);
        j["matched"] = matched;
        emit(j);
    } else {
        std::cout << matched << "/8 rows equal\n";
    }
    return matched == 8 ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant generating functions for symmetric powers, Hilbert schemes "
                 "of points, and compactified Jacobians"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured JSON output");

    // table verify|show
    auto* table_cmd = app.add_subcommand("table", "inspect or verify a character table");
    table_cmd->require_subcommand(1);
    std::string table_name;
    auto* verify_cmd = table_cmd->add_subcommand("verify", "check all table invariants");
    verify_cmd->add_option("group", table_name, "registry key or table file")->required();
    auto* show_cmd = table_cmd->add_subcommand("show", "print classes and character values");
    show_cmd->add_option("group", table_name, "registry key or table file")->required();

    // induce
    auto* induce_cmd = app.add_subcommand("induce", "induce the trivial character of <g>");
    std::string induce_group, induce_class;
    induce_cmd->add_option("group", induce_group)->required();
    induce_cmd->add_option("class", induce_class)->required();

    // macdonald
    auto* mac_cmd = app.add_subcommand("macdonald", "symmetric-power cohomology series");
    std::string mac_file;
    long mac_order = 20;
    mac_cmd->add_option("cohomology-file", mac_file)->required();
    mac_cmd->add_option("--order", mac_order, "truncation order (default 20)");

    // goettsche
    auto* goe_cmd = app.add_subcommand("goettsche", "Hilbert-scheme cohomology series");
    std::string goe_file, goe_trace_class;
    long goe_order = 20;
    bool goe_poincare = false, goe_euler = false;
    goe_cmd->add_option("cohomology-file", goe_file)->required();
    goe_cmd->add_option("--order", goe_order, "truncation order (default 20)");
    goe_cmd->add_flag("--poincare", goe_poincare, "Poincare polynomial specialization");
    goe_cmd->add_flag("--euler", goe_euler, "signed Euler characters per coefficient");
    goe_cmd->add_option("--trace", goe_trace_class, "signed trace series at a class");

    // k3-trace
    auto* k3_cmd = app.add_subcommand("k3-trace", "trace series on K3 Hilbert schemes");
    K3TraceOptions k3_opt;
    auto* symp = k3_cmd->add_option("--symplectic", k3_opt.symplectic_order,
                                    "cyclic symplectic action of this order (1..8)");
    auto* nonsymp = k3_cmd->add_option("--nonsymplectic", k3_opt.nonsymplectic,
                                       "non-symplectic prime action, p=<p>,rankT=<r>");
    symp->excludes(nonsymp);
    k3_cmd->add_option("--order", k3_opt.order, "truncation order (default 20)");
    k3_cmd->add_option("--class", k3_opt.cls, "class label (default: generator)");
    k3_cmd->add_flag("--identity", k3_opt.identity, "trace at the identity");

    // eta
    auto* eta_cmd = app.add_subcommand("eta", "expand an eta quotient");
    std::string eta_spec;
    long eta_order = 20;
    eta_cmd->add_option("quotient-spec", eta_spec, "e.g. 1^8,2^8 for eta(t)^8 eta(t^2)^8")
        ->required();
    eta_cmd->add_option("--order", eta_order, "truncation order (default 20)");

    // eta-verify
    auto* etav_cmd = app.add_subcommand("eta-verify", "check the symplectic trace identities");
    bool all_rows = false;
    long etav_order = 20;
    etav_cmd->add_flag("--all-table-rows", all_rows, "verify all orders 1..8")->required();
    etav_cmd->add_option("--order", etav_order, "truncation order (default 20)");

    // jacobian
    auto* jac_cmd = app.add_subcommand("jacobian", "Euler character of a compactified Jacobian");
    std::string jac_file;
    jac_cmd->add_option("curve-file", jac_file)->required();

    // family
    auto* fam_cmd = app.add_subcommand("family", "aggregate strata of a stratified family");
    std::string fam_file;
    fam_cmd->add_option("strata-file", fam_file)->required();

    // orbit-solve
    auto* orb_cmd = app.add_subcommand("orbit-solve", "solve integer orbit counts");
    std::string orb_target, orb_basis;
    orb_cmd->add_option("target-file", orb_target)->required();
    orb_cmd->add_option("basis-file", orb_basis)->required();

    // rh-search
    auto* rh_cmd = app.add_subcommand("rh-search", "admissible branch data over P^1");
    std::string rh_group;
    int rh_max_branch = 4;
    bool rh_any_quotient = false, rh_non_genuine = false, rh_keep_fixed = false;
    rh_cmd->add_option("group", rh_group)->required();
    rh_cmd->add_option("--max-branch", rh_max_branch, "maximum branch points (default 4)");
    rh_cmd->add_flag("--any-quotient", rh_any_quotient, "drop the rational-quotient constraint");
    rh_cmd->add_flag("--include-non-genuine", rh_non_genuine, "keep virtual H^1 candidates");
    rh_cmd->add_flag("--keep-fixed-irreps", rh_keep_fixed,
                     "keep irreps with fixed vectors at every class");

    CLI11_PARSE(app, argc, argv);

    try {
        for (long order : {mac_order, goe_order, k3_opt.order, eta_order, etav_order}) {
            if (order < 1) throw precondition_error("truncation order must be >= 1");
        }
        if (verify_cmd->parsed() || show_cmd->parsed()) {
            const TablePtr t = resolve_table(table_name);
            if (verify_cmd->parsed()) {
                const auto report = t->verify();
                if (as_json) {
                    Json j;
                    j["table"] = t->name();
                    j["violations"] = report;
                    emit(j);
                } else if (report.empty()) {
                    std::cout << "table " << t->name() << ": OK (order " << t->group_order()
                              << ", " << t->num_classes() << " classes)\n";
                } else {
                    for (const auto& line : report) std::cout << "violation: " << line << "\n";
                }
                return report.empty() ? 0 : kExitVerification;
            }
            if (as_json) {
                emit(table_to_json(*t));
            } else {
                std::cout << "table " << t->name() << " order " << t->group_order() << "\n";
                std::cout << "classes:";
                for (int c = 0; c < t->num_classes(); ++c)
                    std::cout << " " << t->cls(c).label << "(size " << t->cls(c).size << ", ord "
                              << t->cls(c).order << ")";
                std::cout << "\n";
                for (int i = 0; i < t->num_irreps(); ++i) {
                    std::cout << "χ" << (i + 1) << ":";
                    for (int c = 0; c < t->num_classes(); ++c)
                        std::cout << " " << t->value(i, c).str();
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (induce_cmd->parsed()) {
            const TablePtr t = resolve_table(induce_group);
            const int c = t->class_index(induce_class);
            const ClassFunction ind = induce_from_cyclic(t, c);
            if (as_json) {
                Json j = decomposition_json(ind);
                j["group"] = t->name();
                j["class"] = t->cls(c).label;
                emit(j);
            } else {
                std::cout << "Ind_" << t->cls(c).label << " 1 = " << format_decomposition(ind)
                          << "  (dim " << rational_str(ind.dim().rational_value()) << ")\n";
            }
            return 0;
        }
        if (mac_cmd->parsed()) {
            const SurfaceCohomology x = surface_from_json(load_json_file(mac_file));
            const RepSeries s = macdonald_series(x, mac_order);
            if (as_json) emit(rep_series_json(s));
            else std::cout << format_rep_series(s) << "\n";
            return 0;
        }
        if (goe_cmd->parsed()) {
            const SurfaceCohomology x = surface_from_json(load_json_file(goe_file));
            const RepSeries s = goettsche_series(x, goe_order);
            if (!goe_trace_class.empty()) {
                const QSeries tr = trace_at(s, x.table()->class_index(goe_trace_class), true);
                if (as_json) emit(qseries_json(tr));
                else std::cout << tr.str() << "\n";
            } else if (goe_poincare) {
                const ZTPoly p = poincare_at(s);
                if (as_json) {
                    Json j = Json::array();
                    for (long n = 0; n <= p.t_order(); ++n) {
                        Json row = Json::array();
                        for (long d = 0; d <= p.z_degree(n); ++d)
                            row.push_back(rational_str(p.coeff(n, d)));
                        j.push_back(std::move(row));
                    }
                    emit(j);
                } else {
                    std::cout << p.str() << "\n";
                }
            } else if (goe_euler) {
                if (as_json) {
                    Json j = Json::array();
                    for (long n = 0; n <= s.order(); ++n) {
                        Json row = decomposition_json(s.coeff(n).euler_collapse());
                        row["t"] = n;
                        j.push_back(std::move(row));
                    }
                    emit(j);
                } else {
                    for (long n = 0; n <= s.order(); ++n)
                        std::cout << "t^" << n << ": "
                                  << format_decomposition(s.coeff(n).euler_collapse()) << "\n";
                }
            } else {
                if (as_json) emit(rep_series_json(s));
                else std::cout << format_rep_series(s) << "\n";
            }
            return 0;
        }
        if (k3_cmd->parsed()) {
            if (k3_opt.symplectic_order == 0 && k3_opt.nonsymplectic.empty())
                throw precondition_error("k3-trace needs --symplectic or --nonsymplectic");
            return run_k3_trace(k3_opt, as_json);
        }
        if (eta_cmd->parsed()) {
            const QSeries s = eta_quotient_expand(EtaQuotient::parse(eta_spec), eta_order);
            if (as_json) emit(qseries_json(s));
            else std::cout << s.str() << "\n";
            return 0;
        }
        if (etav_cmd->parsed()) return run_eta_verify(etav_order, as_json);
        if (jac_cmd->parsed()) {
            const NodalCurveData curve = curve_from_json(load_json_file(jac_file));
            const ClassFunction e = jac_euler_rep(curve);
            const bool vanishes = vanishing_certificate(curve);
            if (as_json) {
                Json j = decomposition_json(e);
                j["vanishingCertificate"] = vanishes;
                emit(j);
            } else {
                std::cout << "e(JbarC) = " << format_decomposition(e) << "\n";
                std::cout << "values = " << format_class_values(e) << "\n";
                std::cout << "vanishing certificate: " << (vanishes ? "holds" : "does not hold")
                          << "\n";
            }
            return 0;
        }
        if (fam_cmd->parsed()) {
            TablePtr group;
            const auto strata = strata_from_json(load_json_file(fam_file), group);
            const ClassFunction total = family_euler_rep(group, strata);
            if (as_json) {
                Json j = decomposition_json(total);
                j["group"] = group->name();
                j["strata"] = strata.size();
                emit(j);
            } else {
                std::cout << "e(JbarC_family) = " << format_decomposition(total) << "\n";
                std::cout << "values = " << format_class_values(total) << "\n";
            }
            return 0;
        }
        if (orb_cmd->parsed()) {
            const ClassFunction target = target_from_json(load_json_file(orb_target));
            const NamedBasis basis = basis_from_json(load_json_file(orb_basis));
            const auto result = solve_orbit_counts(target, basis.elements);
            if (as_json) {
                Json j;
                j["status"] = result.status == OrbitSolveResult::Status::Solved ? "solved"
                              : result.status == OrbitSolveResult::Status::Infeasible
                                  ? "infeasible"
                                  : "under-determined";
                if (result.status == OrbitSolveResult::Status::Solved) {
                    Json counts = Json::object();
                    for (size_t i = 0; i < basis.names.size(); ++i)
                        counts[basis.names[i]] = result.counts[i].get_str();
                    j["counts"] = std::move(counts);
                } else {
                    j["message"] = result.message;
                }
                emit(j);
            } else if (result.status == OrbitSolveResult::Status::Solved) {
                std::cout << "(";
                for (size_t i = 0; i < result.counts.size(); ++i) {
                    if (i) std::cout << ", ";
                    std::cout << result.counts[i].get_str();
                }
                std::cout << ")\n";
                for (size_t i = 0; i < basis.names.size(); ++i)
                    std::cout << basis.names[i] << " = " << result.counts[i].get_str() << "\n";
            } else {
                std::cout << (result.status == OrbitSolveResult::Status::Infeasible
                                  ? "infeasible: "
                                  : "under-determined: ")
                          << result.message << "\n";
            }
            return result.status == OrbitSolveResult::Status::Solved ? 0 : kExitVerification;
        }
        if (rh_cmd->parsed()) {
            const TablePtr t = resolve_table(rh_group);
            RHConstraints constraints;
            constraints.require_rational_quotient = !rh_any_quotient;
            constraints.require_genuine = !rh_non_genuine;
            constraints.forbid_always_fixed_irreps = !rh_keep_fixed;
            const auto sols = enumerate_branch_data(t, rh_max_branch, constraints);
            if (as_json) {
                Json j = Json::array();
                for (const auto& s : sols) {
                    Json sol = decomposition_json(s.h1);
                    Json classes = Json::array();
                    for (int c : s.data.classes) classes.push_back(t->cls(c).label);
                    sol["branchClasses"] = std::move(classes);
                    sol["genus"] = s.genus;
                    j.push_back(std::move(sol));
                }
                emit(j);
            } else if (sols.empty()) {
                std::cout << "no solutions\n";
            } else {
                for (const auto& s : sols) {
                    std::cout << "{";
                    for (size_t i = 0; i < s.data.classes.size(); ++i) {
                        if (i) std::cout << ",";
                        std::cout << t->cls(s.data.classes[i]).label;
                    }
                    std::cout << "} H1=" << format_decomposition(s.h1) << " genus=" << s.genus
                              << "\n";
                }
            }
            return 0;
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const schema_error& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return 4;
    } catch (const verification_error& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

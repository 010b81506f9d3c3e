// Command-line front end: expand integral tables, run the verification
// suites, query three-point covering counts. Data goes to stdout (or a
// file), human-readable progress to stderr. Exit codes: 0 success,
// 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include <hhodge/checks.hpp>
#include <hhodge/serialize.hpp>

using namespace hhodge;

namespace {

Group parse_group(const std::string& token) {
    if (token == "z2z2") return Group::Z2xZ2;
    if (token == "a4") return Group::A4;
    if (token == "s4") return Group::S4;
    throw CLI::ValidationError("--group", "unknown group '" + token + "'");
}

int write_output(const std::string& data, const std::string& path) {
    if (path.empty()) {
        std::cout << data;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    f << data;
    return 0;
}

int cmd_expand(const std::string& group_token, int order, const std::string& format,
               const std::string& out_path) {
    const Group g = parse_group(group_token);
    TableDump dump;
    if (g == Group::S4) {
        // Closed-form route: the section from its kernel, the tau^2 family
        // from the shifted tangent, the tau-rho family from the recovered
        // squares with length-three anchors.
        const HurwitzTable section = extract_table(build_s4_section(order), Group::S4);
        S4Tables tables;
        tables.order = order;
        tables.sigma_zeta = section.entries;
        for (int a = 0; a <= order; ++a)
            for (int b = 0; a + b < 3 && a + b <= order; ++b)
                tables.sigma_zeta.emplace(std::vector<int>{a, b}, Rational(0));
        const RatSeries b = b_series(order);
        tables.tau2_sigma.assign(static_cast<std::size_t>(std::max(0, order - 2)) + 1, Rational(0));
        for (int a = 1; a + 2 <= order; ++a)
            tables.tau2_sigma[static_cast<std::size_t>(a)] =
                b[a - 1] * Rational(factorial(static_cast<unsigned>(a - 1)));
        tables.tau2_sigma_zeta.assign(static_cast<std::size_t>(std::max(0, order - 3)) + 1,
                                      Rational(0));
        tables.tau2_sigma_zeta[0] = Rational(1, 4);
        const CdRecovery cd = recover_cd(tables, b, order);
        dump = dump_s4_tables(tables, cd);
    } else {
        dump = dump_table(extract_table(build_explicit(g, order), g));
    }
    std::string data;
    if (format == "json")
        data = to_json(dump).dump(2) + "\n";
    else
        data = to_csv(dump);
    return write_output(data, out_path);
}

int cmd_verify(const std::string& check, int order) {
    std::vector<CheckResult> results;
    auto extend = [&](std::vector<CheckResult> v) {
        for (auto& r : v) results.push_back(std::move(r));
    };
    RecursionResult recursion;
    bool ran_recursion = false;
    if (check == "theorem1" || check == "all") extend(run_theorem1_checks(order));
    if (check == "wdvv" || check == "all") extend(run_wdvv_checks(order));
    if (check == "specializations" || check == "all") extend(run_specialization_checks(order));
    if (check == "trig" || check == "all") extend(run_trig_checks(order));
    if (check == "recursion" || check == "all") {
        extend(run_recursion_checks(order, &recursion));
        ran_recursion = true;
    }
    if (check == "all") {
        extend(run_length3_checks());
        extend(run_rationality_checks(order));
    }

    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cerr << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                  << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    }

    ordered_json report;
    report["check"] = check;
    report["order"] = order;
    report["pass"] = all_pass;
    ordered_json items = ordered_json::array();
    for (const auto& r : results) {
        ordered_json item;
        item["name"] = r.name;
        item["status"] = r.pass ? "pass" : "fail";
        if (!r.detail.empty()) item["detail"] = r.detail;
        items.push_back(std::move(item));
    }
    report["results"] = std::move(items);
    if (ran_recursion) {
        ordered_json stages = ordered_json::array();
        auto stage_block = [](const SolveReport& sr) {
            ordered_json arr = ordered_json::array();
            for (const auto& st : sr.stages) {
                ordered_json s;
                s["length"] = st.length;
                s["unknowns"] = st.unknowns;
                s["equations"] = st.equations;
                s["rank"] = st.unknowns;  // unique solvability is asserted
                arr.push_back(std::move(s));
            }
            return arr;
        };
        report["solver"] = ordered_json();
        report["solver"]["z2z2"] = stage_block(recursion.z2z2_report);
        report["solver"]["a4"] = stage_block(recursion.a4_report);
        report["solver"]["s4"] = ordered_json();
        report["solver"]["s4"]["branch_root_taken"] =
            to_string(recursion.s4_report.branch_root_taken);
        report["solver"]["s4"]["branch_root_other"] =
            to_string(recursion.s4_report.branch_root_other);
        report["solver"]["s4"]["recurrence_leading"] =
            to_string(recursion.s4_report.quadratic_leading);
    }
    std::cout << report.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_three_point(const std::string& group_token, const std::vector<std::string>& classes) {
    const Group g = parse_group(group_token);
    const GroupData& gd = group_table(g);
    std::vector<int> idx;
    for (const auto& tok : classes) idx.push_back(gd.class_index(tok));
    std::cout << to_string(three_point(gd, idx[0], idx[1], idx[2])) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hurwitz-Hodge integral tables for the Klein four group, A4 and S4"};
    app.require_subcommand(1);

    std::string group = "z2z2", format = "json", out_path, check = "all";
    int order = 10, max_order = 16;

    auto* expand = app.add_subcommand("expand", "emit all integrals of length <= order");
    expand->add_option("--group", group, "z2z2 | a4 | s4")->required();
    expand->add_option("--order", order, "truncation order (default 10)");
    expand->add_option("--max-order", max_order, "configured order cap (default 16)");
    expand->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    expand->add_option("--out", out_path, "write to file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--check", check,
                       "theorem1 | wdvv | specializations | trig | recursion | all")
        ->check(CLI::IsMember({"theorem1", "wdvv", "specializations", "trig", "recursion", "all"}));
    verify->add_option("--order", order, "truncation order (default 10)");
    verify->add_option("--max-order", max_order, "configured order cap (default 16)");

    std::vector<std::string> classes;
    auto* three = app.add_subcommand("three-point", "exact covering count for three classes");
    three->add_option("--group", group, "z2z2 | a4 | s4")->required();
    three->add_option("classes", classes, "three class tokens")->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (order < 3 || order > max_order) {
            std::cerr << "--order must lie in [3, " << max_order << "]\n";
            return 2;
        }
        if (expand->parsed()) return cmd_expand(group, order, format, out_path);
        if (verify->parsed()) return cmd_verify(check, order);
        if (three->parsed()) return cmd_three_point(group, classes);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

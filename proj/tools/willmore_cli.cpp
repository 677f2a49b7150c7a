// Command-line front end for the Willmore curve solver.
//
// Subcommands: constants, solve (navier | navier-symmetric | dirichlet),
// sample, verify. Structured results are emitted as a single JSON document
// on stdout unless --out is given. Exit codes: 0 success, 2 invalid input,
// 3 empty solution set.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "willmore.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitEmpty = 3;

struct OutputTarget {
    std::string path; // empty = stdout
};

int emit(const OutputTarget& target, const std::string& text) {
    if (target.path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(target.path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << target.path << "\n";
        return kExitInvalid;
    }
    out << text;
    return kExitOk;
}

int fail_status(wlm_status st) {
    std::cerr << "error: " << wlm_status_str(st);
    const char* msg = wlm_last_error();
    if (msg != nullptr && msg[0] != '\0') std::cerr << ": " << msg;
    std::cerr << "\n";
    return kExitInvalid;
}

json solution_to_json(const wlm_solution& s) {
    json j;
    j["a"] = s.a;
    j["b"] = s.b;
    j["L"] = s.length;
    j["Q"] = {s.rotation[0], s.rotation[1], s.rotation[2], s.rotation[3]};
    j["A"] = {s.start[0], s.start[1]};
    if (s.has_branch)
        j["branch"] = {{"sigma1", s.sigma1}, {"sigma2", s.sigma2}, {"j", s.j}};
    else
        j["branch"] = "line";
    j["energy"] = s.energy;
    j["length"] = s.length;
    switch (s.symmetry) {
    case WLM_SYM_AXIAL: j["symmetry"] = "axial"; break;
    case WLM_SYM_POINT: j["symmetry"] = "point"; break;
    default: j["symmetry"] = "none"; break;
    }
    if (s.class_label[0] != '\0') j["class_label"] = s.class_label;
    if (s.boundary_case) j["boundary_case"] = true;
    json res;
    res["endpoint"] = s.residuals.endpoint;
    if (s.residuals.angles)
        res["angle"] = {s.residuals.r1, s.residuals.r2};
    else
        res["curvature"] = {s.residuals.r1, s.residuals.r2};
    res["ode_defect"] = s.residuals.ode_defect;
    res["pass"] = s.residuals.pass != 0;
    j["residuals"] = res;
    return j;
}

bool solution_from_json(const json& j, wlm_solution& out) {
    out = wlm_solution{};
    try {
        out.a = j.at("a").get<double>();
        out.b = j.at("b").get<double>();
        out.length = j.at("L").get<double>();
        for (int i = 0; i < 4; ++i) out.rotation[i] = j.at("Q").at(i).get<double>();
        out.start[0] = j.at("A").at(0).get<double>();
        out.start[1] = j.at("A").at(1).get<double>();
        if (j.at("branch").is_string()) {
            out.has_branch = 0;
        } else {
            out.has_branch = 1;
            out.sigma1 = j.at("branch").at("sigma1").get<int>();
            out.sigma2 = j.at("branch").at("sigma2").get<int>();
            out.j = j.at("branch").at("j").get<unsigned>();
        }
        out.energy = j.at("energy").get<double>();
        const auto& res = j.at("residuals");
        out.residuals.endpoint = res.at("endpoint").get<double>();
        const bool angles = res.contains("angle");
        out.residuals.angles = angles ? 1 : 0;
        const auto& pair = angles ? res.at("angle") : res.at("curvature");
        out.residuals.r1 = pair.at(0).get<double>();
        out.residuals.r2 = pair.at(1).get<double>();
        out.residuals.ode_defect = res.at("ode_defect").get<double>();
        out.residuals.pass = res.at("pass").get<bool>() ? 1 : 0;
    } catch (const json::exception&) {
        return false;
    }
    return true;
}

json collect(wlm_solution_set* set) {
    json arr = json::array();
    const size_t n = wlm_solution_count(set);
    for (size_t i = 0; i < n; ++i) {
        wlm_solution s;
        if (wlm_solution_at(set, i, &s) == WLM_OK) arr.push_back(solution_to_json(s));
    }
    return arr;
}

int emit_document(const OutputTarget& target, const json& problem, const json& solutions) {
    json doc;
    doc["schema_version"] = "1";
    doc["problem"] = problem;
    doc["solutions"] = solutions;
    const int rc = emit(target, doc.dump(2) + "\n");
    if (rc != kExitOk) return rc;
    return solutions.empty() ? kExitEmpty : kExitOk;
}

std::string format_double(double v, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

// ---- constants ---------------------------------------------------------

int run_constants(unsigned kmax, const OutputTarget& target) {
    double period = 0.0;
    double block = 0.0;
    if (wlm_constants(&period, &block) != WLM_OK) return kExitInvalid;
    std::ostringstream out;
    out << "T = " << format_double(period, 17) << "\n";
    out << "C = " << format_double(block, 17) << "\n";
    out << "2C = " << format_double(2.0 * block, 17) << "\n";
    for (unsigned k = 0; k <= kmax; ++k) {
        double m = 0.0;
        double zs = 0.0;
        if (wlm_threshold(k, &m, &zs) != WLM_OK) return kExitInvalid;
        out << "M" << k << " = " << format_double(m, 17) << "\n";
    }
    return emit(target, out.str());
}

// ---- sampling exports ----------------------------------------------------

std::string samples_to_csv(const std::vector<double>& flat) {
    std::ostringstream out;
    out << "s,x,y,kappa\n";
    for (size_t i = 0; i + 3 < flat.size(); i += 4) {
        out << format_double(flat[i], 17) << ',' << format_double(flat[i + 1], 17) << ','
            << format_double(flat[i + 2], 17) << ',' << format_double(flat[i + 3], 17) << "\n";
    }
    return out.str();
}

std::string samples_to_json(const std::vector<double>& flat) {
    json arr = json::array();
    for (size_t i = 0; i + 3 < flat.size(); i += 4) {
        json rec;
        rec["s"] = flat[i];
        rec["x"] = flat[i + 1];
        rec["y"] = flat[i + 2];
        rec["kappa"] = flat[i + 3];
        arr.push_back(rec);
    }
    return arr.dump(2) + "\n";
}

std::string samples_to_svg(const std::vector<double>& flat) {
    // y axis flipped so the curve appears in conventional orientation
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (size_t i = 0; i + 3 < flat.size(); i += 4) {
        const double x = flat[i + 1];
        const double y = -flat[i + 2];
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    const double w = std::max(xmax - xmin, 1e-12);
    const double h = std::max(ymax - ymin, 1e-12);
    const double pad = 0.05 * std::max(w, h);
    const double stroke = 0.008 * std::max(w + 2 * pad, h + 2 * pad);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << format_double(xmin - pad, 9) << ' ' << format_double(ymin - pad, 9) << ' '
        << format_double(w + 2 * pad, 9) << ' ' << format_double(h + 2 * pad, 9) << "\">\n";
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\""
        << format_double(stroke, 9) << "\" points=\"";
    for (size_t i = 0; i + 3 < flat.size(); i += 4) {
        if (i > 0) out << ' ';
        out << format_double(flat[i + 1], 9) << ',' << format_double(-flat[i + 2], 9);
    }
    out << "\"/>\n";
    const size_t last = flat.size() - 4;
    for (size_t idx : {size_t{0}, last}) {
        out << "  <circle cx=\"" << format_double(flat[idx + 1], 9) << "\" cy=\""
            << format_double(-flat[idx + 2], 9) << "\" r=\"" << format_double(2.0 * stroke, 9)
            << "\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

// ---- document-driven commands -------------------------------------------

std::optional<json> load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open input file: " << path << "\n";
        return std::nullopt;
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << "\n";
        return std::nullopt;
    }
    return doc;
}

int run_sample(const std::string& in_path, size_t index, size_t n, const std::string& format,
               const OutputTarget& target) {
    auto doc = load_document(in_path);
    if (!doc) return kExitInvalid;
    if (!doc->contains("solutions") || !(*doc)["solutions"].is_array()) {
        std::cerr << "error: document has no solutions array\n";
        return kExitInvalid;
    }
    const auto& sols = (*doc)["solutions"];
    if (index >= sols.size()) {
        std::cerr << "error: solution index " << index << " out of range (have " << sols.size()
                  << ")\n";
        return kExitInvalid;
    }
    wlm_solution sol;
    if (!solution_from_json(sols[index], sol)) {
        std::cerr << "error: malformed solution record\n";
        return kExitInvalid;
    }
    std::vector<double> flat(4 * n);
    const wlm_status st = wlm_sample(&sol, n, flat.data());
    if (st != WLM_OK) return fail_status(st);

    std::string text;
    if (format == "csv")
        text = samples_to_csv(flat);
    else if (format == "json")
        text = samples_to_json(flat);
    else if (format == "svg")
        text = samples_to_svg(flat);
    else {
        std::cerr << "error: unknown format: " << format << "\n";
        return kExitInvalid;
    }
    return emit(target, text);
}

int run_verify(const std::string& in_path, double tol, const OutputTarget& target) {
    auto doc = load_document(in_path);
    if (!doc) return kExitInvalid;
    if (!doc->contains("problem") || !doc->contains("solutions")) {
        std::cerr << "error: document lacks problem/solutions\n";
        return kExitInvalid;
    }
    const auto& prob = (*doc)["problem"];
    const std::string kind = prob.value("kind", "");
    double ax, ay, bx, by;
    try {
        ax = prob.at("A").at(0).get<double>();
        ay = prob.at("A").at(1).get<double>();
        bx = prob.at("B").at(0).get<double>();
        by = prob.at("B").at(1).get<double>();
    } catch (const json::exception&) {
        std::cerr << "error: malformed problem record\n";
        return kExitInvalid;
    }

    json results = json::array();
    bool all_pass = true;
    const auto& sols = (*doc)["solutions"];
    for (size_t i = 0; i < sols.size(); ++i) {
        wlm_solution sol;
        if (!solution_from_json(sols[i], sol)) {
            std::cerr << "error: malformed solution record at index " << i << "\n";
            return kExitInvalid;
        }
        wlm_residuals res;
        wlm_status st = WLM_ERR_INVALID_ARGUMENT;
        if (kind == "navier") {
            st = wlm_verify_navier(ax, ay, bx, by, prob.at("kappa1").get<double>(),
                                   prob.at("kappa2").get<double>(), &sol, tol, &res);
        } else if (kind == "navier-symmetric") {
            const double kappa = prob.at("kappa").get<double>();
            st = wlm_verify_navier(ax, ay, bx, by, kappa, kappa, &sol, tol, &res);
        } else if (kind == "dirichlet") {
            st = wlm_verify_dirichlet(ax, ay, bx, by, prob.at("theta1").get<double>(),
                                      prob.at("theta2").get<double>(), &sol, tol, &res);
        } else {
            std::cerr << "error: unknown problem kind: " << kind << "\n";
            return kExitInvalid;
        }
        if (st != WLM_OK) return fail_status(st);

        const auto close = [](double x, double y) { return std::fabs(x - y) <= 1e-12; };
        const bool matches = close(res.endpoint, sol.residuals.endpoint) &&
                             close(res.r1, sol.residuals.r1) && close(res.r2, sol.residuals.r2) &&
                             close(res.ode_defect, sol.residuals.ode_defect);
        json rec;
        rec["index"] = i;
        rec["pass"] = res.pass != 0;
        rec["matches_stored"] = matches;
        json rr;
        rr["endpoint"] = res.endpoint;
        if (res.angles)
            rr["angle"] = {res.r1, res.r2};
        else
            rr["curvature"] = {res.r1, res.r2};
        rr["ode_defect"] = res.ode_defect;
        rr["pass"] = res.pass != 0;
        rec["residuals"] = rr;
        results.push_back(rec);
        if (res.pass == 0) all_pass = false;
    }
    json outdoc;
    outdoc["schema_version"] = "1";
    outdoc["results"] = results;
    const int rc = emit(target, outdoc.dump(2) + "\n");
    if (rc != kExitOk) return rc;
    return all_pass ? kExitOk : kExitEmpty;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar Willmore curve boundary value problem solver"};
    app.require_subcommand(1);

    OutputTarget target;

    // constants
    auto* cmd_constants = app.add_subcommand("constants", "Print T, C and the thresholds M_k");
    unsigned kmax = 4;
    cmd_constants->add_option("--kmax", kmax, "Largest threshold index (default 4)");
    cmd_constants->add_option("--out", target.path, "Output file (default stdout)");

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "Solve a boundary value problem");
    cmd_solve->require_subcommand(1);

    double ax = 0.0, ay = 0.0, bx = 0.0, by = 0.0;
    double k1 = 0.0, k2 = 0.0, kappa = 0.0, theta1 = 0.0, theta2 = 0.0;
    int sigma1 = 0, sigma2 = 0;
    unsigned jidx = 0, jmax = 4;
    bool enumerate_flag = false, catalog_flag = false, minimizer_flag = false;
    int cat_kmax = -1;

    auto add_endpoints = [&](CLI::App* c) {
        c->add_option("--ax", ax, "start point x")->required();
        c->add_option("--ay", ay, "start point y")->required();
        c->add_option("--bx", bx, "end point x")->required();
        c->add_option("--by", by, "end point y")->required();
        c->add_option("--out", target.path, "Output file (default stdout)");
    };

    auto* nav = cmd_solve->add_subcommand("navier", "Endpoints plus endpoint curvatures");
    add_endpoints(nav);
    nav->add_option("--k1", k1, "curvature at the start")->required();
    nav->add_option("--k2", k2, "curvature at the end")->required();
    auto* o_s1 = nav->add_option("--sigma1", sigma1, "branch sign at the start (+1/-1)");
    auto* o_s2 = nav->add_option("--sigma2", sigma2, "branch sign at the end (+1/-1)");
    auto* o_j = nav->add_option("--j", jidx, "branch period index");
    auto* o_enum = nav->add_flag("--enumerate", enumerate_flag, "all branches up to --jmax");
    nav->add_option("--jmax", jmax, "largest branch index for --enumerate");
    o_enum->excludes(o_s1)->excludes(o_s2)->excludes(o_j);

    auto* sym = cmd_solve->add_subcommand("navier-symmetric", "Equal endpoint curvatures");
    add_endpoints(sym);
    sym->add_option("--kappa", kappa, "endpoint curvature")->required();
    auto* o_cat = sym->add_flag("--catalog", catalog_flag, "full catalog (default)");
    auto* o_min = sym->add_flag("--minimizer", minimizer_flag, "energy minimizer only");
    sym->add_option("--kmax", cat_kmax, "largest class index (default automatic)");
    o_min->excludes(o_cat);

    auto* dir = cmd_solve->add_subcommand("dirichlet", "Endpoints plus tangent angles");
    add_endpoints(dir);
    dir->add_option("--theta1", theta1, "tangent angle at the start (radians)")->required();
    dir->add_option("--theta2", theta2, "tangent angle at the end (radians)")->required();
    dir->add_option("--jmax", jmax, "largest branch index")->required();

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "Sample a stored solution");
    std::string in_path, format = "csv";
    size_t index = 0, nsamples = 256;
    cmd_sample->add_option("--in", in_path, "solution document")->required();
    cmd_sample->add_option("--index", index, "solution index (default 0)");
    cmd_sample->add_option("--n", nsamples, "number of samples (default 256)");
    cmd_sample->add_option("--format", format, "csv | svg | json (default csv)");
    cmd_sample->add_option("--out", target.path, "Output file (default stdout)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Re-verify a solution document");
    double tol = -1.0;
    cmd_verify->add_option("--in", in_path, "solution document")->required();
    cmd_verify->add_option("--tol", tol, "verification tolerance (default library)");
    cmd_verify->add_option("--out", target.path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    if (cmd_constants->parsed()) return run_constants(kmax, target);

    if (cmd_sample->parsed()) {
        if (nsamples < 2) {
            std::cerr << "error: --n must be at least 2\n";
            return kExitInvalid;
        }
        return run_sample(in_path, index, nsamples, format, target);
    }

    if (cmd_verify->parsed()) return run_verify(in_path, tol, target);

    // solve subcommands
    wlm_solution_set* set = nullptr;
    json problem;
    problem["A"] = {ax, ay};
    problem["B"] = {bx, by};

    if (nav->parsed()) {
        problem["kind"] = "navier";
        problem["kappa1"] = k1;
        problem["kappa2"] = k2;
        if (enumerate_flag) {
            json all = json::array();
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1})
                    for (unsigned j = 0; j <= jmax; ++j) {
                        wlm_solution_set* part = nullptr;
                        const wlm_status st =
                            wlm_navier_branch(ax, ay, bx, by, k1, k2, s1, s2, j, &part);
                        if (st != WLM_OK) return fail_status(st);
                        for (auto& rec : collect(part)) all.push_back(rec);
                        wlm_solution_set_free(part);
                    }
            std::sort(all.begin(), all.end(), [](const json& x, const json& y) {
                return x["energy"].get<double>() < y["energy"].get<double>();
            });
            return emit_document(target, problem, all);
        }
        if (o_s1->count() == 0 || o_s2->count() == 0 || o_j->count() == 0) {
            std::cerr << "error: give --sigma1 --sigma2 --j or --enumerate\n";
            return kExitInvalid;
        }
        if ((sigma1 != 1 && sigma1 != -1) || (sigma2 != 1 && sigma2 != -1)) {
            std::cerr << "error: sigma flags must be +1 or -1\n";
            return kExitInvalid;
        }
        const wlm_status st =
            wlm_navier_branch(ax, ay, bx, by, k1, k2, sigma1, sigma2, jidx, &set);
        if (st != WLM_OK) return fail_status(st);
    } else if (sym->parsed()) {
        problem["kind"] = "navier-symmetric";
        problem["kappa"] = kappa;
        const wlm_status st =
            minimizer_flag ? wlm_navier_minimizer(ax, ay, bx, by, kappa, &set)
                           : wlm_navier_symmetric_catalog(ax, ay, bx, by, kappa, cat_kmax, &set);
        if (st != WLM_OK) return fail_status(st);
    } else if (dir->parsed()) {
        problem["kind"] = "dirichlet";
        problem["theta1"] = theta1;
        problem["theta2"] = theta2;
        const wlm_status st = wlm_dirichlet_enumerate(ax, ay, bx, by, theta1, theta2, jmax, &set);
        if (st != WLM_OK) return fail_status(st);
    } else {
        return kExitInvalid;
    }

    const json solutions = collect(set);
    wlm_solution_set_free(set);
    return emit_document(target, problem, solutions);
}

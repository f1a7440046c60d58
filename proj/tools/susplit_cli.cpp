// susplit: batch front end for the suspension-splitting verifications.
// Every run reads JSON, dispatches one verification pipeline, and emits a
// deterministic JSON report. Exit codes: 0 = PASS/computed, 1 = verification
// FAIL, 2 = invalid input or hypothesis rejection.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "susplit/susplit.hpp"

using namespace susplit;

namespace {

std::size_t cell_cap_from_env() {
    const char* v = std::getenv("SUSPLIT_MAX_CELLS");
    if (!v) return kDefaultCellCap;
    return std::stoull(v);
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

FiniteSSet space_model(const std::string& name) {
    if (name == "point") return point_sset();
    if (name == "interval") return interval_sset();
    if (name.rfind("wedge", 0) == 0 && name.size() > 5)
        return wedge_of_circles(std::stoi(name.substr(5)));
    if (name.size() >= 2 && name[0] == 's') {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 8) return sphere_sset(n);
    }
    throw InputError("unknown space model \"" + name + "\" (use point, interval, s1..s8, wedge<k>)");
}

std::vector<BasedPair> pairs_from_input(const Json& j, int m) {
    if (!j.contains("pairs")) throw InputError("input needs a \"pairs\" array");
    std::vector<BasedPair> pairs;
    for (const auto& p : j.at("pairs")) pairs.push_back(pair_from_json(p));
    if (int(pairs.size()) == 1 && m > 1)  // one entry means m copies
        pairs.assign(std::size_t(m), pairs[0]);
    return pairs;
}

struct Output {
    std::string path;  // empty = stdout

    void emit(Json report, int exit_code) const {
        report["report_version"] = 1;
        report["exit_code"] = exit_code;
        std::string text = report.dump(2) + "\n";
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path);
            out << text;
        }
    }
};

int finish_comparison(const Output& out, const std::string& verb, const VerifyReport& rep,
                      Json extra = Json::object()) {
    Json j = extra;
    j["verb"] = verb;
    j["status"] = rep.pass ? "PASS" : "FAIL";
    j["comparison"] = verify_report_to_json(rep);
    int code = rep.pass ? 0 : 1;
    out.emit(j, code);
    return code;
}

int reject(const Output& out, const std::string& verb, const std::string& kind,
           const std::string& what) {
    Json j;
    j["verb"] = verb;
    j["status"] = "REJECT";
    j["kind"] = kind;
    j["error"] = what;
    out.emit(j, 2);
    return 2;
}

// ---------------------------------------------------------------------------
// seed-corpus: regenerates the fixtures used by the acceptance criteria

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << "\n";
}

void seed_corpus(const std::string& dir) {
    for (const auto& [name, k] : standard_complex_corpus())
        write_file(dir + "/" + name + ".json", complex_to_json(k));
    // pair input files for the bbcg verb
    for (const auto& [name, k] : standard_complex_corpus()) {
        for (const std::string model : {"disk1", "s1"}) {
            Json input;
            input["K"] = complex_to_json(k);
            Json pairs = Json::array();
            Json p;
            p["model"] = model;
            pairs.push_back(p);
            input["pairs"] = pairs;
            write_file(dir + "/bbcg_" + name + "_" + model + ".json", input);
        }
    }
    {
        Json input;
        input["K"] = complex_to_json(SimplicialComplex::from_facets(2, {{1}, {2}}));
        Json pairs = Json::array();
        Json p;
        p["model"] = "disk2";
        pairs.push_back(p);
        input["pairs"] = pairs;
        write_file(dir + "/bbcg_moment_angle.json", input);
    }
    // a ready-made retractile diagram: two circles over 2^[2]
    {
        auto [d, r] = product_diagram({circle_chains(), circle_chains()});
        write_file(dir + "/diagram_two_circles.json", diagram_to_json(d, r));
    }
    write_file(dir + "/chains_circle.json", chains_to_json(circle_chains()));
    write_file(dir + "/sset_s1.json", sset_to_json(sphere_sset(1)));
    std::cout << "fixtures written to " << dir << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"susplit: chain-level verification of suspension splittings"};
    app.require_subcommand(0, 1);

    Output out;
    app.add_option("--out", out.path, "write the report to a file instead of stdout");

    std::string chains_path, input_path, complex_path, diagram_path, space = "s1", seed_dir;
    bool reduced = false;
    int stage = -1, power_n = 2, euler_n = 0, euler_m = 0, manifold_dim = -1;
    long long chi = 0;

    auto* homology_cmd = app.add_subcommand("homology", "homology of a chain complex");
    homology_cmd->add_option("--chains", chains_path, "chain complex JSON")->required();
    homology_cmd->add_flag("--reduced", reduced, "reduced homology (needs augmentation)");

    auto* bbcg_cmd = app.add_subcommand("bbcg", "verify the polyhedral-product splitting");
    bbcg_cmd->add_option("--input", input_path, "JSON with K and pairs")->required();

    auto* retractile_cmd = app.add_subcommand("retractile", "retractile diagram operations");
    auto* retr_verify = retractile_cmd->add_subcommand("verify", "validate and split a diagram");
    retr_verify->add_option("--diagram", diagram_path, "diagram JSON")->required();
    retr_verify->add_option("--stage", stage, "filtration stage")->required();

    auto* diagonal_cmd = app.add_subcommand("diagonal", "diagonal arrangement operations");
    auto* diag_verify = diagonal_cmd->add_subcommand("verify", "verify the arrangement splitting");
    diag_verify->add_option("--space", space, "space model (point, s1..s8, wedge<k>)");
    diag_verify->add_option("--complex", complex_path, "simplicial complex JSON")->required();

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic calculators");
    auto* euler_comp = euler_cmd->add_subcommand("complement", "χ of the arrangement complement");
    euler_comp->add_option("--chi", chi, "χ(X)")->required();
    euler_comp->add_option("--n", euler_n, "manifold dimension n");
    euler_comp->add_option("--m", euler_m, "number of coordinates")->required();
    euler_comp->add_option("--complex", complex_path, "simplicial complex JSON")->required();
    euler_comp
        ->add_option("--manifold-dim", manifold_dim,
                     "attests that X is a closed connected manifold of this dimension")
        ->required();
    auto* euler_cross = euler_cmd->add_subcommand("cross-check", "three-way χ agreement");
    euler_cross->add_option("--space", space, "space model");
    euler_cross->add_option("--complex", complex_path, "simplicial complex JSON")->required();

    auto* abbcg_cmd = app.add_subcommand("abbcg", "verify the simplicial-space splitting of X^n");
    abbcg_cmd->add_option("--space", space, "space model");
    abbcg_cmd->add_option("--power", power_n, "the power n")->required();

    auto* census_cmd = app.add_subcommand("census", "Davis-Januszkiewicz wedge census");
    census_cmd->add_option("--space", space, "space model");
    census_cmd->add_option("--complex", complex_path, "simplicial complex JSON")->required();

    auto* seed_cmd = app.add_subcommand("seed-corpus", "regenerate acceptance fixtures");
    seed_cmd->add_option("--out-dir", seed_dir, "target directory")->required();

    CLI11_PARSE(app, argc, argv);

    const std::size_t cap = cell_cap_from_env();
    std::string verb = app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();

    try {
        if (homology_cmd->parsed()) {
            ChainComplex c = chains_from_json(load_json(chains_path));
            Homology h = reduced ? reduced_homology(c) : homology(c);
            Json j;
            j["verb"] = "homology";
            j["status"] = "COMPUTED";
            j["reduced"] = reduced;
            j["homology"] = homology_to_json(h);
            j["pretty"] = h.pretty();
            out.emit(j, 0);
            return 0;
        }
        if (bbcg_cmd->parsed()) {
            Json input = load_json(input_path);
            SimplicialComplex k = complex_from_json(input.at("K"));
            std::vector<BasedPair> pairs = pairs_from_input(input, k.vertex_count());
            return finish_comparison(out, "bbcg", bbcg_verify(k, pairs));
        }
        if (retr_verify->parsed()) {
            DiagramFile df = diagram_from_json(load_json(diagram_path));
            VerifyReport rep = splitting_verify(df.diagram, df.retractions, stage);
            Json extra;
            extra["stage"] = stage;
            return finish_comparison(out, "retractile", rep, extra);
        }
        if (diag_verify->parsed()) {
            SimplicialComplex k = complex_from_json(load_json(complex_path));
            VerifyReport rep = second_decomp_verify(space_model(space), k, cap);
            Json extra;
            extra["space"] = space;
            return finish_comparison(out, "diagonal", rep, extra);
        }
        if (euler_comp->parsed()) {
            if (euler_n != 0 && manifold_dim != euler_n)
                throw InputError("--n and --manifold-dim disagree");
            SimplicialComplex k = complex_from_json(load_json(complex_path));
            Int value = euler_complement(Int(chi), manifold_dim, euler_m, k);
            Json j;
            j["verb"] = "euler";
            j["status"] = "COMPUTED";
            j["chi_x"] = int_to_json(Int(chi));
            j["manifold_dim_attested"] = manifold_dim;
            j["m"] = euler_m;
            j["value"] = int_to_json(value);
            out.emit(j, 0);
            return 0;
        }
        if (euler_cross->parsed()) {
            SimplicialComplex k = complex_from_json(load_json(complex_path));
            VerifyReport rep = euler_cross_check(space_model(space), k, cap);
            return finish_comparison(out, "euler", rep);
        }
        if (abbcg_cmd->parsed()) {
            VerifyReport rep = abbcg_verify(space_model(space), power_n, cap);
            Json extra;
            extra["space"] = space;
            extra["power"] = power_n;
            return finish_comparison(out, "abbcg", rep, extra);
        }
        if (census_cmd->parsed()) {
            SimplicialComplex k = complex_from_json(load_json(complex_path));
            FiniteSSet x = space_model(space);
            BasedPair pair = based_pair(normalized_chains(x), "(" + space + ",*)");
            auto census = dj_census(k, pair);
            Json j;
            j["verb"] = "census";
            j["status"] = "COMPUTED";
            Json entries = Json::array();
            for (const auto& e : census) {
                Json row;
                row["sigma"] = e.sigma.vertices;
                row["homology"] = homology_to_json(e.h);
                row["pretty"] = e.h.pretty();
                entries.push_back(row);
            }
            j["entries"] = entries;
            j["total"] = homology_to_json(census_total(census));
            out.emit(j, 0);
            return 0;
        }
        if (seed_cmd->parsed()) {
            seed_corpus(seed_dir);
            return 0;
        }
        std::cout << app.help();
        return 2;
    } catch (const HypothesisError& e) {
        return reject(out, verb, "hypothesis", e.what());
    } catch (const InputError& e) {
        return reject(out, verb, "input", e.what());
    } catch (const Error& e) {
        return reject(out, verb, "internal", e.what());
    }
}

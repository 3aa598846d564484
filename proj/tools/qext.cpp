// Command line front end: exact factorizations, extension groups, cocycle
// representatives, operator axiom suites and the numerical example banks.
// JSON reports go to stdout, human prose to stderr; exit code 0 means all
// checks passed, 1 a failed mathematical check, 2 bad usage or input.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qext/bicrossed.hpp"
#include "qext/cohomology.hpp"
#include "qext/continuous.hpp"
#include "qext/fixtures.hpp"
#include "qext/json_io.hpp"

namespace fs = std::filesystem;
using qext::json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + p.string());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Run {
    json report;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Run(const std::string& command) {
        report["command"] = command;
        report["inputs"] = json::object();
    }
    json load(const fs::path& p) {
        std::string bytes = slurp(p);
        report["inputs"][p.string()] = fnv1a_digest(bytes);
        return json::parse(bytes);
    }
    // deterministic report on stdout; timing only on stderr
    int finish(bool pass) {
        report["pass"] = pass;
        std::cout << report.dump(2) << "\n";
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << (pass ? "ok" : "FAILED") << " (" << ms << " ms)\n";
        return pass ? 0 : kExitCheckFailed;
    }
};

qext::MatchedPair load_pair(Run& run, const fs::path& pair_path) {
    json pj = run.load(pair_path);
    json ambient_json;
    if (pj.at("ambient").is_string()) {
        fs::path gp = pair_path.parent_path() / pj.at("ambient").get<std::string>();
        ambient_json = run.load(gp);
    } else {
        ambient_json = pj.at("ambient");
    }
    qext::FiniteGroup ambient = qext::group_from_json(ambient_json);
    return qext::pair_from_json(pj, ambient);
}

qext::CocyclePair load_cocycle(Run& run, const std::string& spec,
                               const qext::MatchedPair& pair) {
    if (spec == "trivial") return qext::trivial_cocycle(pair);
    return qext::cocycle_from_json(run.load(spec), pair);
}

json sample_report_json(const qext::SampleReport& r) {
    json j;
    j["name"] = r.name;
    j["samples"] = r.samples;
    j["rejected"] = r.rejected;
    j["tolerance"] = r.tolerance;
    j["max_residual"] = r.max_residual;
    j["notes"] = r.notes;
    j["pass"] = r.pass;
    return j;
}

void write_fixtures(const fs::path& dir) {
    fs::create_directories(dir);
    auto put = [&](const std::string& name, const json& j) {
        std::ofstream out(dir / name);
        out << j.dump(2) << "\n";
        std::cerr << "wrote " << (dir / name).string() << "\n";
    };

    struct Item {
        std::string base;
        qext::MatchedPair pair;
    };
    std::vector<Item> items = {{"kp", qext::fixtures::kac_paljutkin_pair()},
                               {"z3sw", qext::fixtures::zm_swap_pair(3)},
                               {"z4sw", qext::fixtures::zm_swap_pair(4)},
                               {"s4", qext::fixtures::s4_pair()}};
    for (const auto& it : items) {
        put(it.base + "_group.json", qext::group_to_json(it.pair.G));
        json pj = qext::pair_to_json(it.pair);
        pj["ambient"] = it.base + "_group.json";
        put(it.base + "_pair.json", pj);
    }
    put("dihedral8_group.json",
        qext::group_to_json(qext::fixtures::dihedral8_by_inversion()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bicrossed-product toolkit"};
    app.require_subcommand(0, 1);

    std::string fixtures_dir;
    app.add_option("--fixtures", fixtures_dir, "write bundled example files and exit");

    auto* cmd_fact = app.add_subcommand("factorize", "derive a matched pair");
    std::string fact_group;
    std::vector<int> fact_h1, fact_h2;
    cmd_fact->add_option("group", fact_group)->required();
    cmd_fact->add_option("--h1", fact_h1, "element indices of the first subgroup")
        ->required()
        ->delimiter(',');
    cmd_fact->add_option("--h2", fact_h2, "element indices of the second subgroup")
        ->required()
        ->delimiter(',');

    auto* cmd_ext = app.add_subcommand("extgroup", "group of extensions");
    std::string ext_pair;
    cmd_ext->add_option("pair", ext_pair)->required();

    auto* cmd_coc = app.add_subcommand("cocycles", "class representatives");
    std::string coc_pair;
    std::int64_t coc_order = 0;
    cmd_coc->add_option("pair", coc_pair)->required();
    cmd_coc->add_option("--order", coc_order, "phase denominator d")->required();

    auto* cmd_ver = app.add_subcommand("verify", "full operator axiom suite");
    std::string ver_pair, ver_cocycle = "trivial";
    cmd_ver->add_option("pair", ver_pair)->required();
    cmd_ver->add_option("--cocycle", ver_cocycle, "cocycle file or 'trivial'");

    auto* cmd_theta = app.add_subcommand("theta", "diagonal cocycle twist");
    std::string th_pair, th_cocycle = "trivial";
    cmd_theta->add_option("pair", th_pair)->required();
    cmd_theta->add_option("--cocycle", th_cocycle, "cocycle file or 'trivial'");

    auto* cmd_ex = app.add_subcommand("example", "numerical example banks");
    std::string ex_which;
    int ex_n = 1, ex_samples = 1000, ex_budget = 18;
    std::uint64_t ex_seed = 1;
    double ex_tol = 0;
    cmd_ex->add_option("which", ex_which, "axb | sl2 | cocycle")->required();
    cmd_ex->add_option("--n", ex_n, "quantization integer");
    cmd_ex->add_option("--samples", ex_samples);
    cmd_ex->add_option("--seed", ex_seed);
    cmd_ex->add_option("--tol", ex_tol, "override the default tolerance");
    cmd_ex->add_option("--budget", ex_budget, "adaptive quadrature depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    if (const char* th = std::getenv("QEXT_THREADS"); th && std::string(th) != "1")
        std::cerr << "QEXT_THREADS=" << th << " requested; running single-threaded\n";

    try {
        if (!fixtures_dir.empty()) {
            write_fixtures(fixtures_dir);
            return 0;
        }

        if (*cmd_fact) {
            Run run("factorize");
            qext::FiniteGroup g = qext::group_from_json(run.load(fact_group));
            qext::MatchedPair pair = qext::exact_factorization(g, fact_h1, fact_h2);
            auto violations = qext::verify_matched_identities(pair);
            run.report["result"] = qext::pair_to_json(pair);
            run.report["result"]["violations"] = violations.size();
            return run.finish(violations.empty());
        }

        if (*cmd_ext) {
            Run run("extgroup");
            qext::MatchedPair pair = load_pair(run, ext_pair);
            run.report["result"] = qext::gamma_to_json(qext::extension_group(pair));
            return run.finish(true);
        }

        if (*cmd_coc) {
            Run run("cocycles");
            qext::MatchedPair pair = load_pair(run, coc_pair);
            qext::RepresentativeSet reps = qext::cocycle_representatives(pair, coc_order);
            json arr = json::array();
            for (const auto& c : reps.reps) arr.push_back(qext::cocycle_to_json(c));
            run.report["result"]["classes"] = arr;
            run.report["result"]["count"] = reps.reps.size();
            run.report["result"]["complete"] = reps.complete;
            run.report["result"]["gamma"] = qext::gamma_to_json(reps.gamma);
            return run.finish(true);
        }

        if (*cmd_ver) {
            Run run("verify");
            qext::MatchedPair pair = load_pair(run, ver_pair);
            qext::CocyclePair c = load_cocycle(run, ver_cocycle, pair);
            auto violations = qext::is_cocycle(pair, c);
            if (!violations.empty()) {
                run.report["result"]["cocycle_violations"] = violations.size();
                return run.finish(false);
            }
            qext::FiniteQG qg = qext::build_qg(pair, qext::normalize_cocycle(pair, c));
            auto checks = qext::full_axiom_suite(qg);
            run.report["result"]["checks"] = qext::checks_to_json(checks);
            bool pass = true;
            for (const auto& ch : checks) pass = pass && ch.pass;
            return run.finish(pass);
        }

        if (*cmd_theta) {
            Run run("theta");
            qext::MatchedPair pair = load_pair(run, th_pair);
            qext::CocyclePair c = load_cocycle(run, th_cocycle, pair);
            auto violations = qext::is_cocycle(pair, c);
            if (!violations.empty()) {
                run.report["result"]["cocycle_violations"] = violations.size();
                return run.finish(false);
            }
            qext::ThetaReport th = qext::theta_operator(pair, qext::normalize_cocycle(pair, c));
            run.report["result"]["theta"] = qext::operator_to_json(th.theta);
            run.report["result"]["matches_w_hat"] = th.matches_w_hat;
            run.report["result"]["multiplicative"] = !th.mu_violation.has_value();
            return run.finish(th.matches_w_hat && !th.mu_violation.has_value());
        }

        if (*cmd_ex) {
            Run run("example " + ex_which);
            qext::SampleReport rep;
            if (ex_which == "axb") {
                rep = qext::axb_example_check(ex_samples, ex_seed,
                                              ex_tol > 0 ? ex_tol : 1e-12);
            } else if (ex_which == "sl2") {
                rep = qext::sl2_example_check(ex_samples, ex_seed,
                                              ex_tol > 0 ? ex_tol : 1e-12);
            } else if (ex_which == "cocycle") {
                double tol = ex_tol > 0 ? ex_tol : 1e-6;
                qext::PvOptions opt;
                opt.max_depth = ex_budget;
                qext::SampleReport pv =
                    qext::pv_value_check(std::min(ex_samples, 100), ex_seed, tol, opt);
                qext::SampleReport qz = qext::quantization_check(
                    20, {-2, -1, 0, ex_n, 2}, ex_seed, tol, opt);
                qext::SampleReport inf = qext::infinitesimal_check();
                run.report["result"]["pv"] = sample_report_json(pv);
                run.report["result"]["quantization"] = sample_report_json(qz);
                run.report["result"]["infinitesimal"] = sample_report_json(inf);
                return run.finish(pv.pass && qz.pass && inf.pass);
            } else {
                std::cerr << "unknown example '" << ex_which << "'\n";
                return kExitBadInput;
            }
            run.report["result"] = sample_report_json(rep);
            return run.finish(rep.pass);
        }

        std::cerr << app.help() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

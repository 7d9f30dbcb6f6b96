#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgt/canonical.hpp"
#include "sgt/families.hpp"
#include "sgt/forbidden.hpp"
#include "sgt/search.hpp"
#include "sgt/spectra.hpp"
#include "sgt/verify.hpp"

namespace {

using nlohmann::ordered_json;

// Exit codes: 0 success/holds, 1 verification failure (or witness found),
// 2 usage error, 3 counterexample found.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kCounterexample = 3;

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (...) {
        throw sgt::ConfigError("bad range '" + text + "': expected a or a..b");
    }
}

void emit(bool json, const ordered_json& doc, const std::string& human) {
    if (json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sgt::Error("cannot open '" + path + "' for writing");
    out << content;
}

ordered_json spectrum_json(const sgt::SpectrumReport& r) {
    ordered_json j;
    j["eigenvalues"] = std::vector<double>(r.eigenvalues.data(),
                                           r.eigenvalues.data() + r.eigenvalues.size());
    j["lambda1"] = r.lambda1;
    j["rho"] = r.rho;
    j["tol"] = r.tol;
    return j;
}

ordered_json witness_json(const sgt::Witness& w) {
    ordered_json j;
    j["vertices"] = w.vertices;
    j["certificate_cycle"] = w.certificate_cycle;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph spectral toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "optional key = value configuration file");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    bool json = false;
    app.add_flag("--json", json, "emit a single JSON document on stdout");

    int exit_code = kOk;

    // construct ------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a named family graph");
    construct->fallthrough();
    std::string c_family;
    int c_n = 0, c_t = 0;
    std::string c_out;
    construct->add_option("family", c_family, "gamma|u|z1|z2|w")->required();
    construct->add_option("--n", c_n, "order")->required();
    construct->add_option("--t", c_t, "attachment count (gamma only)");
    construct->add_option("--out", c_out, "output .sg path (default: stdout)");
    construct->callback([&] {
        auto fam = sgt::family_from_string(c_family);
        if (!fam) throw sgt::InvalidFamily("unknown family '" + c_family + "'");
        if (*fam == sgt::Family::GammaNT && !construct->count("--t"))
            throw sgt::InvalidFamily("gamma requires --t");
        sgt::FamilySpec spec{*fam, c_n, c_t};
        sgt::SignedGraph g = sgt::build(spec);
        std::string text = sgt::write_graph(g);
        if (!c_out.empty()) write_file(c_out, text);
        ordered_json j;
        j["family"] = c_family;
        j["n"] = g.order();
        j["edges"] = g.size();
        j["negative_edges"] = g.negative_edge_count();
        if (!c_out.empty()) j["out"] = c_out;
        else j["sg"] = text;
        std::fprintf(stderr, "%s n=%d: %d edges, %d negative\n", c_family.c_str(), g.order(),
                     g.size(), g.negative_edge_count());
        emit(json, j, c_out.empty() ? text : "");
    });

    // lambda1 / spectrum -----------------------------------------------------
    auto* lambda1 = app.add_subcommand("lambda1", "largest adjacency eigenvalue of a .sg file");
    lambda1->fallthrough();
    std::string l_file;
    double l_tol = 1e-10;
    lambda1->add_option("file", l_file)->required();
    lambda1->add_option("--tol", l_tol, "report tolerance");
    lambda1->callback([&] {
        sgt::SignedGraph g = sgt::read_graph_file(l_file);
        auto rep = sgt::spectrum(g, l_tol);
        ordered_json j;
        j["n"] = g.order();
        j["edges"] = g.size();
        j["lambda1"] = rep.lambda1;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12f\n", rep.lambda1);
        emit(json, j, buf);
    });

    auto* spectrum_cmd = app.add_subcommand("spectrum", "full spectrum of a .sg file");
    spectrum_cmd->fallthrough();
    std::string s_file;
    double s_tol = 1e-10;
    spectrum_cmd->add_option("file", s_file)->required();
    spectrum_cmd->add_option("--tol", s_tol, "report tolerance");
    spectrum_cmd->callback([&] {
        sgt::SignedGraph g = sgt::read_graph_file(s_file);
        auto rep = sgt::spectrum(g, s_tol);
        std::string human;
        char buf[64];
        for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.12f\n", rep.eigenvalues(i));
            human += buf;
        }
        emit(json, spectrum_json(rep), human);
    });

    // check ------------------------------------------------------------------
    auto* check = app.add_subcommand("check", "forbidden-subgraph detection");
    check->fallthrough();
    std::string k_file, k_family = "kst:3,3";
    check->add_option("file", k_file)->required();
    check->add_option("--family", k_family, "kst:S,T | kr:R | ck:K (default kst:3,3)");
    check->callback([&] {
        auto fam = sgt::ForbiddenFamily::parse(k_family);
        if (!fam) throw sgt::ConfigError("bad family '" + k_family + "'");
        sgt::SignedGraph g = sgt::read_graph_file(k_file);
        std::optional<sgt::Witness> w;
        switch (fam->kind) {
            case sgt::ForbiddenFamily::Kind::CompleteBipartite:
                w = sgt::find_unbalanced_kst(g, fam->s, fam->t);
                break;
            case sgt::ForbiddenFamily::Kind::Complete:
                w = sgt::find_unbalanced_kr(g, fam->s);
                break;
            case sgt::ForbiddenFamily::Kind::Cycle:
                w = sgt::find_unbalanced_ck(g, fam->s);
                break;
        }
        ordered_json j;
        j["family"] = fam->str();
        j["free"] = !w.has_value();
        if (w) j["witness"] = witness_json(*w);
        std::string human = w ? "witness found\n" : "free\n";
        emit(json, j, human);
        if (w) exit_code = kFail;
    });

    // canon / switch-iso -------------------------------------------------------
    auto* canon = app.add_subcommand("canon", "canonical key (switching-isomorphism invariant)");
    canon->fallthrough();
    std::string n_file;
    int n_limit = sgt::limits::kCanonicalization;
    canon->add_option("file", n_file)->required();
    canon->add_option("--limit", n_limit, "canonicalization order limit");
    canon->callback([&] {
        sgt::SignedGraph g = sgt::read_graph_file(n_file);
        auto key = sgt::canonical_key(g, n_limit);
        ordered_json j;
        j["key"] = key.hex();
        emit(json, j, key.hex() + "\n");
    });

    auto* iso = app.add_subcommand("switch-iso", "are two graphs switching isomorphic?");
    iso->fallthrough();
    std::string i_a, i_b;
    int i_limit = sgt::limits::kCanonicalization;
    iso->add_option("a", i_a)->required();
    iso->add_option("b", i_b)->required();
    iso->add_option("--limit", i_limit, "canonicalization order limit");
    iso->callback([&] {
        bool same = sgt::switching_isomorphic(sgt::read_graph_file(i_a),
                                              sgt::read_graph_file(i_b), i_limit);
        ordered_json j;
        j["switching_isomorphic"] = same;
        emit(json, j, same ? "yes\n" : "no\n");
        if (!same) exit_code = kFail;
    });

    // verify --------------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "replay a lemma/theorem check suite");
    verify->fallthrough();
    std::string v_suite, v_range = "7..12";
    int v_workers = 0;
    std::uint64_t v_seed = 0;
    verify->add_option("suite", v_suite,
                       "lemma22|lemma23|lemma21-reconstruction|theorem11-small-n|bounds-32-33")
        ->required();
    verify->add_option("--n", v_range, "order range a..b");
    verify->add_option("--workers", v_workers, "parallel workers")->envname("SGSPEC_WORKERS");
    verify->add_option("--seed", v_seed, "sampling seed");
    verify->callback([&] {
        Range r = parse_range(v_range);
        if (v_workers <= 0) v_workers = 1;
        sgt::CheckReport rep;
        if (v_suite == "lemma22")
            rep = sgt::verify_lemma22(r.lo, r.hi);
        else if (v_suite == "lemma23")
            rep = sgt::verify_lemma23(r.lo, r.hi);
        else if (v_suite == "lemma21-reconstruction")
            rep = sgt::verify_lemma21_reconstruction(r.lo, r.hi);
        else if (v_suite == "theorem11-small-n") {
            for (int n = r.lo; n <= r.hi; ++n) {
                auto one = sgt::verify_theorem11_small_n(n, v_workers, v_seed);
                rep.suite = one.suite;
                for (auto& row : one.rows) {
                    row.check += " (n=" + std::to_string(n) + ")";
                    rep.rows.push_back(std::move(row));
                }
                rep.certificate = std::move(one.certificate);
            }
        } else if (v_suite == "bounds-32-33")
            rep = sgt::verify_bounds_32_33(r.lo, r.hi, v_seed);
        else
            throw sgt::ConfigError("unknown suite '" + v_suite + "'");

        std::string human;
        for (const auto& row : rep.rows) {
            human += row.pass ? "PASS " : "FAIL ";
            human += row.check;
            if (!row.detail.empty()) human += "  [" + row.detail + "]";
            human += "\n";
        }
        if (json)
            std::cout << sgt::report_json(rep);
        else
            std::cout << human;
        if (!rep.all_pass()) exit_code = kFail;
    });

    // search ----------------------------------------------------------------------
    auto* search = app.add_subcommand("search", "extremal search for the lambda1 bound");
    search->fallthrough();
    sgt::SearchConfig cfg;
    std::string g_mode, g_family = "kst:3,3", g_out, g_hist;
    int g_workers = 0;
    search->add_option("--n", cfg.n, "order")->required();
    search->add_option("--mode", g_mode, "exhaustive|guided|anneal|hillclimb");
    search->add_option("--family", g_family, "forbidden family (default kst:3,3)");
    search->add_option("--seed", cfg.seed, "rng seed");
    search->add_option("--restarts", cfg.restarts, "stochastic restarts");
    search->add_option("--max-steps", cfg.max_steps, "steps per restart");
    search->add_option("--tol", cfg.tol, "decision tolerance");
    search->add_option("--workers", g_workers, "parallel workers")->envname("SGSPEC_WORKERS");
    search->add_option("--t0", cfg.t0, "annealing start temperature");
    search->add_option("--cooling", cfg.cooling, "annealing cooling factor");
    search->add_option("--out", g_out, "certificate JSON path");
    search->add_option("--hist", g_hist, "lambda1 histogram CSV path (enumeration modes)");
    search->callback([&] {
        auto fam = sgt::ForbiddenFamily::parse(g_family);
        if (!fam) throw sgt::ConfigError("bad family '" + g_family + "'");
        cfg.family = *fam;
        if (!g_mode.empty()) {
            auto m = sgt::search_mode_from_string(g_mode);
            if (!m) throw sgt::ConfigError("bad mode '" + g_mode + "'");
            cfg.mode = *m;
        } else {
            cfg.mode = cfg.n <= 6   ? sgt::SearchMode::Exhaustive
                       : cfg.n <= 8 ? sgt::SearchMode::GuidedOneNegativeEdge
                                    : sgt::SearchMode::Anneal;
        }
        cfg.workers = g_workers > 0 ? g_workers : 1;
        sgt::SearchCertificate cert = sgt::run_search(cfg);
        std::string cert_text = sgt::certificate_json(cert);
        if (!g_out.empty()) write_file(g_out, cert_text);
        bool enumerated = cfg.mode == sgt::SearchMode::Exhaustive ||
                          cfg.mode == sgt::SearchMode::GuidedOneNegativeEdge;
        if (enumerated) {
            std::string hist_path = g_hist;
            if (hist_path.empty() && !g_out.empty()) hist_path = g_out + ".hist.csv";
            if (!hist_path.empty()) write_file(hist_path, sgt::histogram_csv(cert));
        }
        std::fprintf(stderr, "best lambda1 = %.12f (bound %.1f), verdict: %s\n",
                     cert.best_lambda1, cert.bound,
                     cert.verdict == sgt::Verdict::BoundHolds ? "bound-holds"
                                                              : "counterexample-found");
        if (json)
            std::cout << cert_text;
        else if (g_out.empty())
            std::cout << cert_text;
        if (cert.verdict == sgt::Verdict::CounterexampleFound) exit_code = kCounterexample;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    } catch (const sgt::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const sgt::InvalidFamily& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const sgt::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const sgt::InvariantViolation& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const sgt::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kFail;
    }
    return exit_code;
}

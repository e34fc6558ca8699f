#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qh/algebra.hpp"
#include "qh/curve.hpp"
#include "qh/exporter.hpp"
#include "qh/extremal.hpp"
#include "qh/genfun.hpp"
#include "qh/io.hpp"
#include "qh/report.hpp"
#include "qh/sequence.hpp"
#include "qh/spherical.hpp"

namespace {

using qh::json;

int default_threads() {
    if (const char* env = std::getenv("QH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    qh::write_file(out_path, content);
}

// ---- gen ------------------------------------------------------------------

int run_gen(std::int64_t len, const std::string& form, const std::string& out_path) {
    std::string content;
    if (form == "signs") {
        auto a = qh::prefix(len);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) content.push_back(' ');
            content.push_back(a[i] > 0 ? '+' : '-');
        }
        content.push_back('\n');
    } else if (form == "letters") {
        auto w = qh::fixed_word(qh::rule_s0(), static_cast<std::size_t>(len));
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) content.push_back(' ');
            content += qh::to_string(w[i]);
        }
        content.push_back('\n');
    } else {  // digits
        for (std::int64_t n = 0; n < len; ++n) {
            content += qh::digits4_string(qh::Int(n));
            content.push_back('\n');
        }
    }
    emit(content, out_path);
    return 0;
}

// ---- selfcheck ------------------------------------------------------------

bool matrix_identities(json& out, json& witnesses) {
    const qh::Mat4i& m = qh::matrix_M();
    const qh::Mat4i& t = qh::matrix_T();
    bool t2 = (t * t) == m;
    bool m2 = (m * m) == (4 * qh::Mat4i::Identity()).eval();
    bool unitary = (m * m.transpose()) == (4 * qh::Mat4i::Identity()).eval();
    bool eigen_ok = ((m * qh::EigenFrame::p0()) == (2 * qh::EigenFrame::p0()).eval()) &&
                    ((m * qh::EigenFrame::p1()) == (2 * qh::EigenFrame::p1()).eval()) &&
                    ((m * qh::EigenFrame::q0()) == (-2 * qh::EigenFrame::q0()).eval()) &&
                    ((m * qh::EigenFrame::q1()) == (-2 * qh::EigenFrame::q1()).eval());
    out = json{{"T_squared_is_M", t2},
               {"M_squared_is_4I", m2},
               {"half_M_orthogonal", unitary},
               {"eigen_relations", eigen_ok}};
    bool ok = t2 && m2 && unitary && eigen_ok;
    if (!ok) witnesses.push_back(json{{"check", "matrix_identities"}, {"detail", out}});
    return ok;
}

int run_selfcheck(std::int64_t len, std::int64_t corrupt_index) {
    qh::RunReport rep;
    rep.command = "selfcheck";
    rep.parameters = json{{"len", len}};
    bool all_ok = true;

    auto eq = qh::verify_equivalence(len, corrupt_index);
    json eq_json{{"ok", eq.ok}, {"length", eq.length}};
    if (!eq.ok) {
        eq_json["first_mismatch"] = eq.first_mismatch;
        json vals = json::object();
        for (std::size_t g = 0; g < eq.kGenerators.size(); ++g)
            vals[eq.kGenerators[g]] = eq.values_at_mismatch[g];
        eq_json["values"] = vals;
        rep.witnesses.push_back(json{{"check", "equivalence"}, {"detail", eq_json}});
        all_ok = false;
    }
    rep.data["equivalence"] = eq_json;

    json mat;
    all_ok &= matrix_identities(mat, rep.witnesses);
    rep.data["matrix_identities"] = mat;

    auto feq = qh::functional_equation_check(std::max<std::int64_t>(len / 4, 16));
    json feq_json{{"ok", feq.ok}, {"length", feq.length}};
    if (!feq.ok) {
        feq_json["first_mismatch_index"] = feq.first_mismatch_index;
        feq_json["component"] = feq.component;
        rep.witnesses.push_back(json{{"check", "functional_equation"}, {"detail", feq_json}});
        all_ok = false;
    }
    rep.data["functional_equation"] = feq_json;

    json norms = json::array();
    bool norms_ok = true;
    for (int level = 1; level <= 4; ++level) {
        double err = qh::norm_identity_max_error(level, 64);
        double rel = err / std::pow(4.0, level + 1);
        bool ok = rel <= 1e-9;
        norms_ok &= ok;
        norms.push_back(json{{"level", level}, {"max_abs_error", err}, {"ok", ok}});
    }
    if (!norms_ok) {
        rep.witnesses.push_back(json{{"check", "norm_identity"}, {"detail", norms}});
        all_ok = false;
    }
    rep.data["norm_identity"] = norms;

    json arcs = json::array();
    bool arcs_ok = true;
    for (std::int64_t j : {0, 1, 2, 3, 4, 5, 6, 7, 16, 21}) {
        auto arc = qh::check_arc_isometry(j, 8);
        arcs_ok &= arc.ok;
        arcs.push_back(json{{"j", arc.j}, {"j0", arc.j0}, {"sign", arc.sign}, {"ok", arc.ok}});
        if (!arc.ok)
            rep.witnesses.push_back(json{{"check", "arc_isometry"},
                                         {"j", arc.j},
                                         {"s", arc.witness_s.str()},
                                         {"t", arc.witness_t.str()}});
    }
    all_ok &= arcs_ok;
    rep.data["arc_isometries"] = arcs;

    rep.outcome = all_ok ? "pass" : "fail";
    std::cout << rep.render();
    return all_ok ? 0 : 1;
}

// ---- bounds ---------------------------------------------------------------

int run_bounds(std::int64_t nmax, const std::string& window, int threads,
               const std::string& out_path) {
    qh::RunReport rep;
    rep.command = "bounds";
    rep.parameters = json{{"nmax", nmax}};

    if (!window.empty()) {
        auto colon = window.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--window", "expected LO:HI");
        std::int64_t lo = std::stoll(window.substr(0, colon));
        std::int64_t hi = std::stoll(window.substr(colon + 1));
        rep.parameters["window"] = json{{"lo_exclusive", lo}, {"hi_inclusive", hi}};
        auto win = qh::window_min(lo, hi, nmax, threads);
        json pairs = json::array();
        for (const auto& p : win.argmins) pairs.push_back(qh::pair_record_json(p));
        rep.data["window_min"] =
            json{{"min_sq_dist", win.min_sq_dist}, {"argmins", pairs}};
    }

    auto rb = qh::ratio_bounds(nmax, threads);
    json mins = json::array(), maxes = json::array();
    for (const auto& p : rb.argmins) mins.push_back(qh::pair_record_json(p));
    for (const auto& p : rb.argmaxes) maxes.push_back(qh::pair_record_json(p));
    rep.data["ratio_bounds"] = json{{"min_sq_ratio", qh::ratio_json(rb.min_sq_ratio)},
                                    {"max_sq_ratio", qh::ratio_json(rb.max_sq_ratio)},
                                    {"argmins", mins},
                                    {"argmaxes", maxes}};

    auto conj = qh::conjecture_scan(nmax, threads);
    rep.data["conjecture"] = json{
        {"one_fifth_beaten", conj.one_fifth_beaten},
        {"beats_25_17_from_above", conj.beats_25_17_from_above},
        {"min_sq_ratio", qh::ratio_json(conj.min_sq_ratio)},
        {"max_sq_ratio", qh::ratio_json(conj.max_sq_ratio)}};

    rep.outcome = "info";
    emit(rep.render(), out_path);
    return 0;
}

// ---- lemmas ---------------------------------------------------------------

int run_lemmas(std::int64_t scan_max, int threads, const std::string& out_path) {
    qh::RunReport rep;
    rep.command = "lemmas";
    rep.parameters = json{{"scan_max", scan_max}};

    auto l1 = qh::lemma_one();
    json table = json::array();
    for (const auto& e : l1.table)
        table.push_back(json{{"n", e.n}, {"m", e.m}, {"sq_dist", e.sq_dist}});
    json equalities = json::array();
    for (const auto& e : l1.bound_equalities)
        equalities.push_back(json{{"n", e.n}, {"m", e.m}, {"sq_dist", e.sq_dist}});
    rep.data["lemma_one"] = json{{"bounds_ok", l1.bounds_ok},
                                 {"nine_only_at_odd_m", l1.nine_only_at_odd_m},
                                 {"alpha", l1.alpha},
                                 {"alpha_closed_form", l1.alpha_closed_form},
                                 {"table", table},
                                 {"bound_equalities", equalities}};

    auto l2 = qh::lemma_two(16, scan_max, threads);
    json wit = json::array();
    for (const auto& p : l2.witnesses) wit.push_back(qh::pair_record_json(p));
    rep.data["lemma_two"] = json{{"A", l2.A},
                                 {"scan_max", l2.scan_max},
                                 {"pass", l2.pass},
                                 {"min_sq_dist", l2.min_sq_dist},
                                 {"witnesses", wit}};

    auto hc = qh::hoelder_constants();
    rep.data["constants"] = json{{"alpha", hc.alpha},
                                 {"A", hc.A},
                                 {"a_lower", hc.a_lower},
                                 {"b_upper", hc.b_upper},
                                 {"b_upper_sq", hc.b_upper_sq}};

    bool ok = l1.bounds_ok && l1.nine_only_at_odd_m && l2.pass;
    rep.outcome = ok ? "pass" : "fail";
    if (!ok) {
        rep.witnesses.push_back(json{{"check", "lemmas"},
                                     {"lemma_one_bounds_ok", l1.bounds_ok},
                                     {"lemma_two_pass", l2.pass},
                                     {"lemma_two_min", l2.min_sq_dist}});
        if (!l2.witnesses.empty())
            rep.witnesses.push_back(qh::pair_record_json(l2.witnesses.front()));
    }
    emit(rep.render(), out_path);
    return ok ? 0 : 1;
}

// ---- density ----------------------------------------------------------------

int run_density(std::int64_t nmax, int grid, int threads, const std::string& out_path) {
    auto rep = qh::direction_density(nmax, grid, threads);
    qh::RunReport run;
    run.command = "density";
    run.parameters = json{{"nmax", nmax}, {"grid", grid}};
    run.outcome = "info";  // exploratory evidence, makes no claim
    run.data = json{{"pair_count", rep.pair_count},
                    {"total_cells", rep.total_cells},
                    {"occupied_cells", rep.occupied_cells},
                    {"fraction", rep.fraction},
                    {"largest_empty_cap_radians", rep.largest_empty_cap_radians}};
    emit(run.render(), out_path);
    return 0;
}

// ---- export ---------------------------------------------------------------

int run_export(const std::string& kind, const std::string& format, const std::string& out_path,
               double tmin, bool tmin_given, double tmax, int samples, double anchor,
               std::int64_t steps, std::int64_t nmax) {
    qh::ExportFormat fmt = format == "csv" ? qh::ExportFormat::csv : qh::ExportFormat::json;
    std::string content;
    if (kind == "curve") content = qh::export_curve(tmin, tmax, samples, fmt);
    else if (kind == "sphere") content = qh::export_sphere(anchor, samples, fmt);
    else if (kind == "central")
        content = qh::export_central(tmin_given ? tmin : 1.0, tmax, samples, fmt);
    else if (kind == "projective") content = qh::export_projective(steps, fmt);
    else content = qh::export_directions(nmax, fmt);
    qh::write_file(out_path, content);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generators, searches and exports for the base-4 automatic "
                 "sign sequence and its quasi-helix curve"};
    app.set_version_flag("--version", qh::kLibraryVersion);
    app.require_subcommand(1);

    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads for searches (env QH_THREADS)")
        ->check(CLI::PositiveNumber);
    app.fallthrough();

    auto* gen = app.add_subcommand("gen", "write the first N terms");
    std::int64_t gen_len = 16;
    std::string gen_form = "signs", gen_out;
    gen->add_option("--len", gen_len, "number of terms")->required()->check(CLI::PositiveNumber);
    gen->add_option("--form", gen_form, "signs|letters|digits")
        ->check(CLI::IsMember({"signs", "letters", "digits"}));
    gen->add_option("--out", gen_out, "output path (stdout when absent)");

    auto* selfcheck = app.add_subcommand("selfcheck", "run the cross-definition checks");
    std::int64_t sc_len = 4096, sc_corrupt = -1;
    selfcheck->add_option("--len", sc_len, "terms to cross-check")->check(CLI::PositiveNumber);
    selfcheck->add_option("--corrupt-index", sc_corrupt)->group("");  // test hook, hidden

    auto* bounds = app.add_subcommand("bounds", "extremal pair searches");
    std::int64_t b_nmax = 256;
    std::string b_window, b_out;
    bounds->add_option("--nmax", b_nmax, "scan indices up to nmax")->required();
    bounds->add_option("--window", b_window, "gap window LO:HI (LO exclusive, HI inclusive)");
    bounds->add_option("--out", b_out, "output path (stdout when absent)");

    auto* lemmas = app.add_subcommand("lemmas", "lemma tables and derived constants");
    std::int64_t l_scan = 4096;
    std::string l_out;
    lemmas->add_option("--scan-max", l_scan, "exhaustive scan bound");
    lemmas->add_option("--out", l_out, "output path (stdout when absent)");

    auto* density = app.add_subcommand("density", "direction coverage report (exploratory)");
    std::int64_t d_nmax = 1024;
    int d_grid = 8;
    std::string d_out;
    density->add_option("--nmax", d_nmax, "pair bound")->check(CLI::PositiveNumber);
    density->add_option("--grid", d_grid, "cells per face edge")->check(CLI::PositiveNumber);
    density->add_option("--out", d_out, "output path (stdout when absent)");

    auto* exp = app.add_subcommand("export", "write sampled data files");
    std::string e_kind, e_format = "csv", e_out;
    double e_tmin = 0.0, e_tmax = 16.0, e_anchor = 1.0;
    int e_samples = 1024;
    std::int64_t e_steps = 64, e_nmax = 256;
    exp->add_option("--kind", e_kind, "curve|sphere|central|projective|directions")
        ->required()
        ->check(CLI::IsMember({"curve", "sphere", "central", "projective", "directions"}));
    exp->add_option("--format", e_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    exp->add_option("--out", e_out, "output path")->required();
    exp->add_option("--tmin", e_tmin, "range start (curve, central)");
    exp->add_option("--tmax", e_tmax, "range end (curve, central)");
    exp->add_option("--samples", e_samples, "sample count")->check(CLI::PositiveNumber);
    exp->add_option("--anchor", e_anchor, "loop anchor (sphere)");
    exp->add_option("--steps", e_steps, "steps (projective)")->check(CLI::PositiveNumber);
    exp->add_option("--nmax", e_nmax, "pair bound (directions)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (gen->parsed()) rc = run_gen(gen_len, gen_form, gen_out);
        else if (selfcheck->parsed()) rc = run_selfcheck(sc_len, sc_corrupt);
        else if (bounds->parsed()) rc = run_bounds(b_nmax, b_window, threads, b_out);
        else if (lemmas->parsed()) rc = run_lemmas(l_scan, threads, l_out);
        else if (density->parsed()) rc = run_density(d_nmax, d_grid, threads, d_out);
        else if (exp->parsed())
            rc = run_export(e_kind, e_format, e_out, e_tmin, exp->count("--tmin") > 0, e_tmax,
                            e_samples, e_anchor, e_steps, e_nmax);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started).count();
    std::cerr << "qh: " << elapsed << " ms (threads=" << threads << ")\n";
    return rc;
}

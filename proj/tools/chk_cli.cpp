#include "chk/chk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#ifndef CHK_DEFAULT_ALLOWLIST
#define CHK_DEFAULT_ALLOWLIST "config/allowlist.json"
#endif

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json envelope(const std::string& command, json config) {
    return {{"schema", 1}, {"tool", "chk"}, {"version", kVersion}, {"command", command}, {"config", std::move(config)}};
}

// Write to a sibling temp file and rename, so readers never see a partial report.
void write_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot write " + path);
        out << text;
        if (!out) throw UsageError("cannot write " + path);
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw UsageError("cannot write " + path);
    }
}

void emit(const json& j, const std::string& report) {
    std::string text = j.dump(2) + "\n";
    if (report.empty()) std::cout << text;
    else write_atomic(report, text);
}

chk::Allowlist allowlist_or_usage(const std::string& path) {
    if (path.empty()) return {};
    try {
        return chk::load_allowlist(path);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::complex<double> parse_complex(const std::string& s) {
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("expected a complex number as re[,im], got '" + s + "'");
    }
}

// ---- poly ----

struct PolyOpts {
    int max_degree = 4;
    std::string out;
};

int run_poly(const PolyOpts& o) {
    if (o.max_degree < 0) throw UsageError("max-degree must be >= 0");
    chk::PolyTable t(o.max_degree);
    std::ostringstream os;
    t.write_csv(os);
    if (o.out.empty()) std::cout << os.str();
    else write_atomic(o.out, os.str());
    return kPass;
}

// ---- check ----

struct CheckOpts {
    std::string suite = "all";
    int cutoff = 10;
    int range_max = -1;
    std::string allowlist = CHK_DEFAULT_ALLOWLIST;
    std::string report;
    unsigned jobs = 0;
};

int run_check(const CheckOpts& o) {
    if (!chk::valid_suite(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");
    if (o.cutoff < 2) throw UsageError("cutoff must be >= 2");
    chk::Allowlist allow = allowlist_or_usage(o.allowlist);
    chk::RunOptions opt;
    opt.cutoff = o.cutoff;
    opt.range_max = o.range_max;
    opt.jobs = o.jobs;
    chk::SuiteReport rep = chk::run_suite(o.suite, opt, allow);
    json j = envelope("check", {{"suite", o.suite},
                                {"cutoff", o.cutoff},
                                {"range_max", o.range_max >= 0 ? o.range_max : o.cutoff / 2},
                                {"allowlist", o.allowlist.empty() ? "" : std::filesystem::path(o.allowlist).filename().string()},
                                {"allowlist_entries", allow.size()}});
    j.update(chk::to_json(rep));
    j["passed"] = rep.passed();
    emit(j, o.report);
    return rep.passed() ? kPass : kFail;
}

// ---- spectrum ----

struct SpectrumOpts {
    std::string h = "Hs";
    int cutoff = 10;
    std::string form = "basis";
    std::string allowlist = CHK_DEFAULT_ALLOWLIST;
    std::string report;
};

int run_spectrum(const SpectrumOpts& o) {
    if (o.h != "Hs" && o.h != "Hr" && o.h != "H0") throw UsageError("spectrum supports Hs, Hr, H0");
    if (o.form != "basis" && o.form != "constructor") throw UsageError("form must be basis or constructor");
    chk::Catalog cat(o.cutoff);
    chk::Form form = o.form == "basis" ? chk::Form::Basis : chk::Form::Constructor;
    if (!cat.has_form(o.h, form)) throw UsageError(o.h + " has no " + o.form + " form");
    chk::Allowlist allow = allowlist_or_usage(o.allowlist);
    auto rows = chk::spectrum_check(cat, o.h, form);
    json jr = json::array();
    int eigen = 0, match = 0;
    for (const auto& r : rows) {
        eigen += r.eigenvector;
        match += r.match;
        json e{{"k", r.k},
               {"l", r.l},
               {"eigenvector", r.eigenvector},
               {"computed", r.computed.to_string()},
               {"printed", r.printed.to_string()},
               {"match", r.match}};
        if (!r.eigenvector) e["residual"] = r.residual;
        jr.push_back(e);
    }
    const int n = static_cast<int>(rows.size());
    auto it = allow.find("spectrum/" + o.h);
    std::string status;
    if (match == n) status = "holds";
    else if (eigen == n && it != allow.end()) status = "fails (allowlisted)";
    else status = "fails";
    json j = envelope("spectrum", {{"h", o.h}, {"cutoff", o.cutoff}, {"form", o.form}});
    j["rows"] = jr;
    j["summary"] = {{"states", n}, {"eigenvectors", eigen}, {"matches", match}};
    j["status"] = status;
    if (it != allow.end()) j["oracle_form"] = it->second.oracle_form;
    emit(j, o.report);
    return status == "fails" ? kFail : kPass;
}

// ---- quad ----

struct QuadOpts {
    int max_degree = 4;
    int resolution = 2000;
    double box = 3.2;
    double mass_tolerance = 2e-3;
    double gram_tolerance = 5e-3;
    std::string report;
    unsigned jobs = 0;
};

int run_quad(const QuadOpts& o) {
    chk::QuadratureGrid g{o.resolution, o.box, o.jobs};
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.max_degree < 0 || o.max_degree > 12) throw UsageError("max-degree must be in [0, 12]");
    chk::PolyTable t(o.max_degree);
    chk::QuadReport q = chk::orthonormality_check(t, o.max_degree, g);
    const auto& f = q.fine;
    bool ok = std::abs(f.mass - 1.0) <= o.mass_tolerance && f.max_deviation() <= o.gram_tolerance && q.reliable();
    json j = envelope("quad", {{"max_degree", o.max_degree},
                               {"resolution", o.resolution},
                               {"comparison_resolution", q.coarse.resolution},
                               {"box", o.box},
                               {"mass_tolerance", o.mass_tolerance},
                               {"gram_tolerance", o.gram_tolerance}});
    j["mass"] = f.mass;
    j["gram_max_abs_offdiag"] = f.max_abs_offdiag();
    j["gram_max_diag_error"] = f.max_diag_error();
    j["richardson_gap"] = q.richardson_gap;
    j["reliable"] = q.reliable();
    j["passed"] = ok;
    emit(j, o.report);
    return ok ? kPass : kFail;
}

// ---- structure ----

struct StructureOpts {
    int cutoff = 12;
    int window = 6;
    std::uint64_t seed = 7;
    std::string report;
};

json type_rows(const chk::TypeClosureReport& r) {
    json rows = json::array();
    for (const auto& t : r.rows)
        rows.push_back({{"pair", t.pair},
                        {"claimed", t.claimed},
                        {"checked", t.checked},
                        {"in_span", t.in_span},
                        {"in_span_modulo_units", t.in_span_with_units},
                        {"skipped", t.skipped},
                        {"offending", t.offending}});
    return rows;
}

int run_structure(const StructureOpts& o) {
    try {
        chk::detail::check_window(o.cutoff, o.window);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    chk::ProbeConfig probe;
    json j = envelope("structure", {{"cutoff", o.cutoff},
                                    {"window", o.window},
                                    {"seed", o.seed},
                                    {"probe", {{"cutoff", probe.cutoff},
                                               {"degree", probe.degree},
                                               {"sample_bound", probe.sample_bound},
                                               {"span_bound", probe.span_bound},
                                               {"unit_window", probe.unit_window}}}});

    auto center = chk::center_dimension(o.cutoff, o.window);
    j["center"] = {{"dimension", center.dimension}, {"candidates", center.candidates}, {"basis", center.basis}};

    auto ab = chk::maximal_abelian_check(o.cutoff, o.window);
    j["abelian"] = {{"diagonals_commute", ab.diagonals_commute},
                    {"identities_in_span", ab.identities},
                    {"commutant_diagonal", ab.commutant_diagonal},
                    {"commutant_dimension", ab.commutant_dimension},
                    {"passed", ab.passed()}};

    auto types = chk::type_closure_check(8, o.seed, probe);
    j["type_closure"] = {{"checked", types.checked}, {"in_span", types.in_span}, {"passed", types.passed()},
                         {"rows", type_rows(types)}};

    json spans = json::array();
    for (const auto& c : chk::derived_spans(o.seed + 1, 6, probe))
        spans.push_back({{"claim", c.name}, {"checked", c.checked}, {"held", c.held}, {"holds", c.holds()},
                         {"first_failure", c.first_failure}});
    j["derived_spans"] = spans;

    auto sweep = chk::ideal_closure_all_seeds(o.window);
    j["ideal_closure"] = {{"window_dimension", sweep.window_dimension},
                          {"seeds", sweep.seeds},
                          {"full", sweep.full},
                          {"min_dimension", sweep.min_dimension},
                          {"ideal_closure_full", sweep.full == sweep.seeds},
                          {"short_examples", sweep.short_examples}};

    auto ad = chk::ad_square_random(60, o.seed + 2, std::min(o.window, 4), o.cutoff);
    j["ad_square"] = {{"instances", ad.instances}, {"held", ad.held}, {"nonzero_alpha", ad.nonzero_alpha}};

    json levels = json::array();
    bool levels_ok = true;
    for (int n = 0; n <= 6; ++n) {
        auto d = chk::sectorial_level_dimension(n, std::max(o.cutoff, n + 1));
        int expect = n == 0 ? 4 : 3 * n + 4;
        levels_ok &= d.represented == expect;
        levels.push_back({{"level", n}, {"represented", d.represented}, {"formal", d.formal}});
    }
    j["sectorial_levels"] = levels;

    json verdicts{{"center_one_dimensional", center.dimension == 1},
                  {"maximal_abelian", ab.passed()},
                  {"type_closure", types.passed()},
                  {"ideal_closure_full", sweep.full == sweep.seeds},
                  {"ad_square", ad.held == ad.instances},
                  {"level_dimensions", levels_ok}};
    bool ok = true;
    for (const auto& [k, v] : verdicts.items()) ok &= v.get<bool>();
    j["verdicts"] = verdicts;
    j["passed"] = ok;
    emit(j, o.report);
    return ok ? kPass : kFail;
}

// ---- catalog ----

std::vector<chk::FieldElem> sample_scalars(const chk::CatalogEntry& e) {
    return std::vector<chk::FieldElem>(static_cast<std::size_t>(e.n_scalars), chk::FieldElem(chk::Rational(1, 2)));
}

int run_catalog_list(int cutoff, const std::string& report) {
    chk::Catalog cat(cutoff);
    json entries = json::array();
    for (const auto& e : chk::catalog_entries()) {
        chk::GeneratorId id{e.name, e.sample_ints, sample_scalars(e)};
        const chk::SparseOp& op = cat.build(id);
        entries.push_back({{"name", e.name},
                           {"int_params", e.n_ints},
                           {"field_params", e.n_scalars},
                           {"constructor_form", e.has_constructor},
                           {"ref", e.ref},
                           {"sample", id.key()},
                           {"reach", op.lattice_reach()}});
    }
    json j = envelope("catalog list", {{"cutoff", cutoff}});
    j["generators"] = entries;
    emit(j, report);
    return kPass;
}

int run_catalog_check(int cutoff, const std::string& allowlist, const std::string& report) {
    chk::Catalog cat(cutoff);
    std::vector<std::string> documented;
    for (const auto& [id, e] : allowlist_or_usage(allowlist))
        if (id.starts_with("crosscheck/")) documented.push_back(id.substr(11));
    json rows = json::array();
    bool ok = true;
    for (const auto& e : chk::catalog_entries()) {
        if (!e.has_constructor) continue;
        auto ints = e.sample_ints;
        std::vector<std::vector<int>> variants{ints};
        if (e.n_ints == 1) variants = {{1}, {-1}};
        for (const auto& v : variants) {
            auto r = chk::cross_check(cat, chk::GeneratorId{e.name, v, sample_scalars(e)}, documented);
            ok &= r.status != "inconsistent (new)";
            rows.push_back({{"id", r.id},
                            {"status", r.status},
                            {"domain", r.domain},
                            {"residual", r.residual},
                            {"first_difference", r.first_difference}});
        }
    }
    json j = envelope("catalog check", {{"cutoff", cutoff}});
    j["cross_checks"] = rows;
    j["passed"] = ok;
    emit(j, report);
    return ok ? kPass : kFail;
}

// ---- kernel ----

struct KernelOpts {
    std::string kind = "sectorial";
    std::string z = "0";
    std::string zeta = "0";
    int cutoff = 6;
    std::string report;
};

int run_kernel(const KernelOpts& o) {
    if (o.kind != "sectorial" && o.kind != "radial") throw UsageError("kind must be sectorial or radial");
    if (o.cutoff < 0) throw UsageError("cutoff must be >= 0");
    auto z = parse_complex(o.z), zeta = parse_complex(o.zeta);
    chk::PolyTable t(o.cutoff);
    auto v = chk::poisson_kernel(t, o.kind == "sectorial" ? chk::KernelKind::Sectorial : chk::KernelKind::Radial, z, zeta,
                                 o.cutoff);
    json j = envelope("kernel", {{"kind", o.kind},
                                 {"z", {z.real(), z.imag()}},
                                 {"zeta", {zeta.real(), zeta.imag()}},
                                 {"cutoff", o.cutoff}});
    j["value"] = {v.real(), v.imag()};
    emit(j, o.report);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the ChK oscillator algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    PolyOpts poly;
    auto* c_poly = app.add_subcommand("poly", "Dump U_{k,l} coefficients as CSV");
    c_poly->add_option("--max-degree", poly.max_degree)->capture_default_str();
    c_poly->add_option("--out", poly.out, "CSV path (stdout when omitted)");

    CheckOpts check;
    auto* c_check = app.add_subcommand("check", "Run relation suites");
    c_check->add_option("--suite", check.suite, "sectorial, radial, boundary, full or all")->capture_default_str();
    c_check->add_option("--cutoff", check.cutoff)->capture_default_str();
    c_check->add_option("--range-max", check.range_max, "largest free index (default cutoff/2)");
    c_check->add_option("--allowlist", check.allowlist, "documented inconsistencies; empty string disables")
        ->capture_default_str();
    c_check->add_option("--report", check.report, "JSON path (stdout when omitted)");
    c_check->add_option("--jobs", check.jobs, "worker threads, 0 for all cores");

    SpectrumOpts spec;
    auto* c_spec = app.add_subcommand("spectrum", "Eigenvalue tables of Hs, Hr, H0");
    c_spec->add_option("--hamiltonian", spec.h, "Hs, Hr or H0")->capture_default_str();
    c_spec->add_option("--cutoff", spec.cutoff)->capture_default_str();
    c_spec->add_option("--form", spec.form, "basis or constructor")->capture_default_str();
    c_spec->add_option("--allowlist", spec.allowlist)->capture_default_str();
    c_spec->add_option("--report", spec.report);

    QuadOpts quad;
    auto* c_quad = app.add_subcommand("quad", "Mass and Gram matrix over the deltoid");
    c_quad->add_option("--max-degree", quad.max_degree)->capture_default_str();
    c_quad->add_option("--resolution", quad.resolution)->capture_default_str();
    c_quad->add_option("--box", quad.box, "half-width of the square box")->capture_default_str();
    c_quad->add_option("--mass-tolerance", quad.mass_tolerance)->capture_default_str();
    c_quad->add_option("--gram-tolerance", quad.gram_tolerance)->capture_default_str();
    c_quad->add_option("--report", quad.report);
    c_quad->add_option("--jobs", quad.jobs);

    StructureOpts st;
    auto* c_st = app.add_subcommand("structure", "Center, commutant, typing, ideals, level ranks");
    c_st->add_option("--cutoff", st.cutoff)->capture_default_str();
    c_st->add_option("--window", st.window)->capture_default_str();
    c_st->add_option("--seed", st.seed)->capture_default_str();
    c_st->add_option("--report", st.report);

    int cat_cutoff = 10;
    std::string cat_report;
    std::string cat_allowlist = CHK_DEFAULT_ALLOWLIST;
    auto* c_cat = app.add_subcommand("catalog", "Generator catalog");
    c_cat->require_subcommand(1);
    c_cat->add_option("--cutoff", cat_cutoff)->capture_default_str();
    c_cat->add_option("--report", cat_report);
    c_cat->add_option("--allowlist", cat_allowlist)->capture_default_str();
    auto* c_list = c_cat->add_subcommand("list", "Every generator with reference and reach");
    auto* c_cross = c_cat->add_subcommand("check", "Constructor vs basis-action cross-checks");
    // catalog options may follow the nested subcommand
    c_list->fallthrough();
    c_cross->fallthrough();

    KernelOpts ker;
    auto* c_ker = app.add_subcommand("kernel", "Truncated Poisson kernel");
    c_ker->add_option("--kind", ker.kind, "sectorial or radial")->capture_default_str();
    c_ker->add_option("--z", ker.z, "re,im")->capture_default_str();
    c_ker->add_option("--zeta", ker.zeta, "re,im")->capture_default_str();
    c_ker->add_option("--cutoff", ker.cutoff)->capture_default_str();
    c_ker->add_option("--report", ker.report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*c_poly) return run_poly(poly);
        if (*c_check) return run_check(check);
        if (*c_spec) return run_spectrum(spec);
        if (*c_quad) return run_quad(quad);
        if (*c_st) return run_structure(st);
        if (*c_list) return run_catalog_list(cat_cutoff, cat_report);
        if (*c_cross) return run_catalog_check(cat_cutoff, cat_allowlist, cat_report);
        if (*c_ker) return run_kernel(ker);
    } catch (const UsageError& e) {
        std::cerr << "chk: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "chk: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "chk: internal error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

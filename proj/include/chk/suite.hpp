#pragma once

// Relation runner: compiles registry entries, enumerates index instances,
// compares printed and oracle forms exactly on the safe domain.

#include "chk/relation_dsl.hpp"
#include "chk/relations.hpp"

#include <json.hpp>

#include <atomic>
#include <climits>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

namespace chk {

struct AllowEntry {
    std::string id;
    std::string reason;
    std::string origin;  // "spec" or "checker"
    std::string oracle_form;
};

using Allowlist = std::map<std::string, AllowEntry>;

/// Reads {"schema":1,"entries":[{id, reason, origin, oracle_form}]}.
inline Allowlist load_allowlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read allowlist " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("schema", 0) != 1) throw std::runtime_error("allowlist schema must be 1");
    Allowlist out;
    for (const auto& e : j.at("entries")) {
        AllowEntry a{e.at("id").get<std::string>(), e.value("reason", ""), e.value("origin", "checker"),
                     e.value("oracle_form", "")};
        out[a.id] = a;
    }
    return out;
}

struct ParamDecl {
    std::string name;
    bool sign = false;
};

struct CompiledRelation {
    const RelationSpec* spec = nullptr;
    std::vector<ParamDecl> params;
    dsl::Symbols syms;
    std::vector<dsl::Comparison> cond;
    dsl::NodePtr lhs, rhs, oracle;
};

inline CompiledRelation compile(const RelationSpec& s) {
    CompiledRelation c;
    c.spec = &s;
    std::istringstream ps{std::string(s.params)};
    std::string tok;
    while (ps >> tok) {
        ParamDecl p;
        auto colon = tok.find(':');
        p.name = tok.substr(0, colon);
        if (colon != std::string::npos) {
            if (tok.substr(colon + 1) != "sign") throw dsl::ParseError("unknown parameter kind in " + tok);
            p.sign = true;
        }
        if (c.syms.find(p.name) >= 0) throw dsl::ParseError("duplicate parameter " + p.name);
        c.syms.add(p.name);
        c.params.push_back(p);
    }
    c.syms.n_params = c.params.size();
    c.cond = dsl::Parser(s.cond, c.syms).parse_condition();
    c.lhs = dsl::Parser(s.lhs, c.syms).parse_expression();
    c.rhs = dsl::Parser(s.rhs, c.syms).parse_expression();
    if (!s.oracle.empty()) c.oracle = dsl::Parser(s.oracle, c.syms).parse_expression();
    return c;
}

struct InstanceRecord {
    std::vector<std::pair<std::string, int>> assignment;
    double residual = 0;
    int safe_degree = 0;
    std::string difference;
    std::string lhs;
};

struct FormVerdict {
    long holds = 0;
    long fails = 0;
    long skipped = 0;
    double residual_max = 0;
    int min_safe_degree = INT_MAX;
    std::vector<InstanceRecord> failing;  // first few
};

struct RelationOutcome {
    const RelationSpec* spec = nullptr;
    long instances = 0;
    FormVerdict printed;
    std::optional<FormVerdict> oracle;
    std::string status;
    std::string oracle_note;
};

struct RunOptions {
    int cutoff = 10;
    int range_max = -1;  // default cutoff/2
    std::size_t keep_failures = 3;
    unsigned jobs = 0;  // 0: hardware concurrency
};

namespace detail {

inline void judge(const SparseOp& lhs, const SparseOp& rhs, FormVerdict& v,
                  const std::vector<std::pair<std::string, int>>& assignment, std::size_t keep) {
    SparseOp diff = lhs - rhs;
    int safe = diff.effective_horizon();
    if (safe < 0) {
        ++v.skipped;
        return;
    }
    v.min_safe_degree = std::min(v.min_safe_degree, safe);
    double res = 0;
    for (const auto& col : diff.columns()) {
        if (index_of(col.src).degree() > safe) continue;
        for (const auto& e : col.entries) res = std::max(res, e.c.abs());
    }
    if (res == 0) {
        ++v.holds;
        return;
    }
    ++v.fails;
    v.residual_max = std::max(v.residual_max, res);
    if (v.failing.size() < keep) {
        v.failing.push_back(InstanceRecord{assignment, res, safe, diff.dump(safe), lhs.dump(safe)});
    }
}

}  // namespace detail

inline RelationOutcome run_relation(const CompiledRelation& c, Catalog& cat, const RunOptions& opt,
                                    const Allowlist& allow) {
    RelationOutcome out;
    out.spec = c.spec;
    if (c.oracle) out.oracle = FormVerdict{};
    int hi = opt.range_max >= 0 ? opt.range_max : cat.cutoff() / 2;
    std::vector<int> env(c.syms.names.size(), 0);
    const std::size_t np = c.params.size();
    std::vector<int> idx(np, 0);
    auto value_of = [&](std::size_t p, int i) { return c.params[p].sign ? (i == 0 ? 1 : -1) : i; };
    auto extent = [&](std::size_t p) { return c.params[p].sign ? 2 : hi + 1; };
    dsl::Evaluator ev(cat, env);
    for (;;) {
        for (std::size_t p = 0; p < np; ++p) env[p] = value_of(p, idx[p]);
        if (ev.holds(c.cond)) {
            ++out.instances;
            std::vector<std::pair<std::string, int>> as;
            as.reserve(np);
            for (std::size_t p = 0; p < np; ++p) as.emplace_back(c.params[p].name, env[p]);
            SparseOp lhs = ev.as_operator(*c.lhs);
            detail::judge(lhs, ev.as_operator(*c.rhs), out.printed, as, opt.keep_failures);
            if (c.oracle) detail::judge(lhs, ev.as_operator(*c.oracle), *out.oracle, as, opt.keep_failures);
        }
        std::size_t p = 0;
        while (p < np && ++idx[p] == extent(p)) idx[p++] = 0;
        if (p == np) break;
    }

    bool allowed = allow.count(std::string(c.spec->id)) > 0;
    if (out.printed.fails == 0) {
        out.status = out.printed.holds > 0 ? "holds" : "skipped";
    } else if (allowed && out.oracle && out.oracle->fails == 0 && out.oracle->holds > 0) {
        out.status = "fails (allowlisted)";
    } else {
        out.status = "fails";
    }
    if (out.printed.fails > 0) {
        std::ostringstream os;
        if (out.oracle) {
            os << "oracle form " << (out.oracle->fails == 0 ? "holds" : "fails") << " on " << out.oracle->holds
               << " of " << (out.oracle->holds + out.oracle->fails) << " checked instances";
        } else {
            os << "no oracle form registered; failing instances carry the basis-action bracket";
        }
        out.oracle_note = os.str();
    }
    return out;
}

/// Suites: sectorial, radial, boundary, full, all; empty string selects nothing.
inline bool suite_selected(std::string_view suite, std::string_view rel_suite) {
    return suite == "all" || suite == rel_suite;
}

inline bool valid_suite(std::string_view s) {
    return s == "all" || s == "sectorial" || s == "radial" || s == "boundary" || s == "full" || s.empty();
}

struct SuiteReport {
    std::vector<RelationOutcome> relations;
    long holds = 0, fails = 0, allowlisted = 0, skipped = 0;

    [[nodiscard]] bool passed() const { return fails == 0; }
};

inline SuiteReport run_suite(std::string_view suite, const RunOptions& opt, const Allowlist& allow,
                             const std::vector<std::string>& only_ids = {}) {
    if (!valid_suite(suite)) throw std::invalid_argument("unknown suite " + std::string(suite));
    Catalog cat(opt.cutoff);
    SuiteReport rep;
    std::vector<const RelationSpec*> sel;
    for (const auto& s : relation_registry()) {
        if (!suite_selected(suite, s.suite)) continue;
        if (!only_ids.empty() && std::find(only_ids.begin(), only_ids.end(), s.id) == only_ids.end()) continue;
        sel.push_back(&s);
    }
    std::sort(sel.begin(), sel.end(), [](const RelationSpec* a, const RelationSpec* b) { return a->id < b->id; });
    // relations are independent; results land in their sorted slot
    rep.relations.resize(sel.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (std::size_t i = next++; i < sel.size(); i = next++) {
            try {
                CompiledRelation c = compile(*sel[i]);
                rep.relations[i] = run_relation(c, cat, opt, allow);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, sel.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
    }
    if (err) std::rethrow_exception(err);
    for (const auto& o : rep.relations) {
        const auto& st = o.status;
        if (st == "holds") ++rep.holds;
        else if (st == "skipped") ++rep.skipped;
        else if (st == "fails") ++rep.fails;
        else ++rep.allowlisted;
    }
    return rep;
}

inline nlohmann::json to_json(const InstanceRecord& r) {
    nlohmann::json a = nlohmann::json::object();
    for (const auto& [k, v] : r.assignment) a[k] = v;
    return {{"instance", a}, {"residual", r.residual}, {"safe_degree", r.safe_degree}, {"difference", r.difference},
            {"lhs", r.lhs}};
}

inline nlohmann::json to_json(const FormVerdict& v) {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& r : v.failing) f.push_back(to_json(r));
    return {{"holds", v.holds},
            {"fails", v.fails},
            {"skipped", v.skipped},
            {"residual_max", v.residual_max},
            {"safe_degree", v.min_safe_degree == INT_MAX ? -1 : v.min_safe_degree},
            {"failing_instances", f}};
}

inline nlohmann::json to_json(const RelationOutcome& o) {
    nlohmann::json j{{"id", std::string(o.spec->id)},
                     {"suite", std::string(o.spec->suite)},
                     {"anchor_quote", std::string(o.spec->anchor)},
                     {"lhs", std::string(o.spec->lhs)},
                     {"rhs", std::string(o.spec->rhs)},
                     {"instances", o.instances},
                     {"verdict", o.printed.fails ? "fails" : (o.printed.holds ? "holds" : "skipped")},
                     {"residual_max", o.printed.residual_max},
                     {"safe_degree", o.printed.min_safe_degree == INT_MAX ? -1 : o.printed.min_safe_degree},
                     {"printed", to_json(o.printed)},
                     {"status", o.status},
                     {"oracle_note", o.oracle_note}};
    if (o.oracle) {
        j["oracle_form"] = std::string(o.spec->oracle);
        j["oracle"] = to_json(*o.oracle);
    }
    return j;
}

inline nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json rels = nlohmann::json::array();
    nlohmann::json allowed = nlohmann::json::array();
    for (const auto& o : r.relations) {
        rels.push_back(to_json(o));
        if (o.status == "fails (allowlisted)") allowed.push_back(std::string(o.spec->id));
    }
    return {{"relations", rels},
            {"summary", {{"holds", r.holds}, {"fails", r.fails}, {"allowlisted", r.allowlisted}, {"skipped", r.skipped}}},
            {"allowlisted_failures", allowed}};
}

/// Randomized Jacobi triples over catalog generators; every cyclic sum must vanish on its safe domain.
struct JacobiReport {
    int samples = 0;
    int zero = 0;
    int skipped = 0;
    std::vector<std::string> failures;
};

inline JacobiReport jacobi_spot_check(int samples, std::uint64_t seed, int cutoff) {
    if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
    Catalog cat(cutoff);
    std::mt19937_64 rng(seed);
    const int hi = cutoff / 2;
    std::vector<std::string> names{"I", "N1", "N2", "as", "ar", "P1", "P2", "P", "Pbk", "Pkb", "HL", "HR", "ab0", "a0b"};
    auto pick = [&]() {
        const std::string& n = names[rng() % names.size()];
        const CatalogEntry* e = find_entry(n);
        GeneratorId id{n, {}, {}};
        for (int k = 0; k < e->n_ints; ++k) {
            if (n == "as" || n == "ar" || n == "ab0" || n == "a0b") id.ints.push_back(rng() % 2 ? 1 : -1);
            else id.ints.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(hi + 1)));
        }
        return id;
    };
    JacobiReport rep;
    for (int s = 0; s < samples; ++s) {
        GeneratorId a = pick(), b = pick(), c = pick();
        const SparseOp& x = cat.build(a);
        const SparseOp& y = cat.build(b);
        const SparseOp& z = cat.build(c);
        SparseOp j = commutator(commutator(x, y), z) + commutator(commutator(y, z), x) + commutator(commutator(z, x), y);
        ++rep.samples;
        int safe = j.effective_horizon();
        if (safe < 0) {
            ++rep.skipped;
            continue;
        }
        if (j.restricted(safe).is_zero()) ++rep.zero;
        else rep.failures.push_back(a.key() + " " + b.key() + " " + c.key());
    }
    return rep;
}

}  // namespace chk

#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using nlohmann::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    std::string cmd = std::string(CHK_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args, int expect_code) {
    CliRun r = run(args);
    EXPECT_EQ(r.code, expect_code) << args;
    json j = json::parse(r.out, nullptr, false);
    EXPECT_FALSE(j.is_discarded()) << args;
    if (!j.is_discarded()) EXPECT_EQ(j.value("schema", 0), 1) << args;
    return j;
}

std::string tmp(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / "chk_cli_test";
    std::filesystem::create_directories(d);
    return (d / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST(Cli, Usage) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("check --cutoff notanumber").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Poly) {
    CliRun r = run("poly --max-degree 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0,0,0,0,1\n");
    r = run("poly --max-degree 2");
    EXPECT_NE(r.out.find("1,1,1,1,1\n"), std::string::npos);
    EXPECT_NE(r.out.find("1,1,0,0,-1\n"), std::string::npos);
    EXPECT_NE(r.out.find("1,0,1,0,1\n"), std::string::npos);
    EXPECT_EQ(run("poly --max-degree -1").code, 2);
    EXPECT_EQ(run("poly --max-degree 1 --out /nonexistent-dir/x.csv").code, 2);
    std::string path = tmp("poly.csv");
    EXPECT_EQ(run("poly --max-degree 1 --out " + path).code, 0);
    EXPECT_EQ(slurp(path), "0,0,0,0,1\n0,1,0,1,1\n1,0,1,0,1\n");
}

TEST(Cli, CheckExitCodes) {
    EXPECT_EQ(run("check --suite sectorial --cutoff 10").code, 0);
    EXPECT_EQ(run("check --suite sectorial --allowlist ''").code, 1);
    EXPECT_EQ(run("check --suite radial --allowlist ''").code, 1);
    EXPECT_EQ(run("check --suite radial").code, 0);
    EXPECT_EQ(run("check --suite nope").code, 2);
    EXPECT_EQ(run("check --suite radial --allowlist /nonexistent.json").code, 2);
    EXPECT_EQ(run("check --suite radial --report /nonexistent-dir/r.json").code, 2);
}

TEST(Cli, CheckReportShape) {
    json j = run_json("check --suite boundary", 0);
    ASSERT_TRUE(j.contains("relations"));
    long holds = 0, fails = 0, allowed = 0, skipped = 0;
    for (const auto& r : j["relations"]) {
        for (const char* k : {"id", "anchor_quote", "verdict", "residual_max", "safe_degree", "oracle_note", "status"})
            EXPECT_TRUE(r.contains(k)) << k;
        std::string st = r["status"];
        if (st == "holds") ++holds;
        else if (st == "fails") ++fails;
        else if (st == "skipped") ++skipped;
        else ++allowed;
        if (r["verdict"] == "fails") {
            EXPECT_FALSE(r["printed"]["failing_instances"].empty());
            EXPECT_FALSE(r["oracle_note"].get<std::string>().empty());
        }
    }
    EXPECT_EQ(j["summary"]["holds"], holds);
    EXPECT_EQ(j["summary"]["fails"], fails);
    EXPECT_EQ(j["summary"]["allowlisted"], allowed);
    EXPECT_EQ(j["summary"]["skipped"], skipped);
    EXPECT_EQ(j["allowlisted_failures"].size(), static_cast<std::size_t>(allowed));
}

TEST(Cli, ReportsAreByteDeterministic) {
    std::string a = tmp("a.json"), b = tmp("b.json");
    ASSERT_EQ(run("check --suite sectorial --report " + a).code, 0);
    ASSERT_EQ(run("check --suite sectorial --jobs 3 --report " + b).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(std::filesystem::exists(a + ".tmp"));
    run("quad --resolution 300 --max-degree 2 --report " + a);
    run("quad --resolution 300 --max-degree 2 --report " + b);
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, Spectrum) {
    json hs = run_json("spectrum --hamiltonian Hs", 0);
    EXPECT_EQ(hs["status"], "holds");
    json h0 = run_json("spectrum --hamiltonian H0", 0);
    EXPECT_EQ(h0["status"], "holds");
    json hr = run_json("spectrum --hamiltonian Hr", 0);
    EXPECT_EQ(hr["status"], "fails (allowlisted)");
    EXPECT_EQ(hr["summary"]["eigenvectors"], hr["summary"]["states"]);
    EXPECT_EQ(run("spectrum --hamiltonian Hr --allowlist ''").code, 1);
    EXPECT_EQ(run("spectrum --hamiltonian Hx").code, 2);
    EXPECT_EQ(run("spectrum --hamiltonian H0 --form constructor").code, 2);
}

TEST(Cli, Quad) {
    json j = run_json("quad --max-degree 2 --resolution 600", 0);
    for (const char* k : {"mass", "gram_max_abs_offdiag", "gram_max_diag_error", "richardson_gap"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_NEAR(j["mass"].get<double>(), 1.0, 2e-3);
    json bad = run_json("quad --max-degree 2 --resolution 1", 1);
    EXPECT_FALSE(bad["reliable"].get<bool>());
    EXPECT_EQ(run("quad --box 2").code, 2);
    EXPECT_EQ(run("quad --resolution 0").code, 2);
}

TEST(Cli, Structure) {
    EXPECT_EQ(run("structure --window 1").code, 2);
    EXPECT_EQ(run("structure --cutoff 8 --window 6").code, 2);
    CliRun r = run("structure");
    json j = json::parse(r.out);
    EXPECT_EQ(j["center"]["dimension"], 1);
    EXPECT_EQ(j["sectorial_levels"][3]["formal"], 15);
    EXPECT_EQ(j["sectorial_levels"][3]["represented"], 13);
    bool all = true;
    for (const auto& [k, v] : j["verdicts"].items()) all &= v.get<bool>();
    EXPECT_EQ(j["passed"].get<bool>(), all);
    EXPECT_EQ(r.code, all ? 0 : 1);
    const auto& ic = j["ideal_closure"];
    EXPECT_EQ(ic["ideal_closure_full"].get<bool>(), ic["full"] == ic["seeds"]);
}

TEST(Cli, Catalog) {
    json j = run_json("catalog list", 0);
    std::set<std::string> names;
    for (const auto& g : j["generators"]) {
        names.insert(g["name"]);
        EXPECT_GE(g["reach"].get<int>(), 0);
    }
    for (const char* n : {"I", "as", "ar", "HL", "HR", "P", "IB", "Hr"}) EXPECT_TRUE(names.count(n)) << n;
    json c = run_json("catalog check", 0);
    EXPECT_TRUE(c["passed"].get<bool>());
    EXPECT_EQ(run("catalog check --allowlist ''").code, 1);
    EXPECT_EQ(run("catalog").code, 2);
}

TEST(Cli, Kernel) {
    json j = run_json("kernel --kind sectorial --z 0.3,0.2 --zeta -1,0.5 --cutoff 0", 0);
    EXPECT_EQ(j["value"][0], 1.0);
    EXPECT_EQ(j["value"][1], 0.0);
    json r = run_json("kernel --kind radial --cutoff 1", 0);
    EXPECT_NEAR(r["value"][0].get<double>(), 1.0, 1e-15);
    EXPECT_EQ(run("kernel --kind other").code, 2);
    EXPECT_EQ(run("kernel --z abc").code, 2);
}

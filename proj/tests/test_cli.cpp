#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "sfp_cli_out.txt";
    std::string cmd = std::string(SFP_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    return r;
}

std::string data_path(const char* name) { return std::string(SFP_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("cli usage errors exit with 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("bound").exit_code == 2);          // missing --instance
    CHECK(run_cli("frobnicate").exit_code == 2);     // unknown subcommand
}

TEST_CASE("cli runtime failures exit with 1") {
    CHECK(run_cli("bound --instance /nonexistent.sfp --kind uc").exit_code == 1);
    CHECK(run_cli("bound --instance " + data_path("instA.sfp") + " --kind bogus").exit_code == 1);
}

TEST_CASE("cli bound prints one line per kind") {
    RunResult r = run_cli("bound --instance " + data_path("instA.sfp") + " --kind uc");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("kind=uc") != std::string::npos);
    CHECK(r.output.find("status=optimal") != std::string::npos);
    CHECK(r.output.find("bound=2") != std::string::npos);

    RunResult all = run_cli("bound --instance " + data_path("instA.sfp") + " --kind all");
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("kind=mr") != std::string::npos);
}

TEST_CASE("cli bound exports the initial program on request") {
    const fs::path lp = fs::temp_directory_path() / "sfp_cli_export.lp";
    fs::remove(lp);
    RunResult r = run_cli("bound --instance " + data_path("instA.sfp") +
                          " --kind uc --export-lp " + lp.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(lp).find("minimize") != std::string::npos);
}

TEST_CASE("cli exact reports the integer optimum") {
    RunResult r = run_cli("exact --instance " + data_path("instC.sfp"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("value=7") != std::string::npos);
    CHECK(r.output.find("optimal=1") != std::string::npos);
}

TEST_CASE("cli compare prints the audit") {
    RunResult r = run_cli("compare --instance " + data_path("instB.sfp") + " --kind all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("audit uf = uc") != std::string::npos);
    CHECK(r.output.find("all_passed=1") != std::string::npos);
}

TEST_CASE("cli campaign and report round-trip byte-identically") {
    const fs::path dir = fs::temp_directory_path() / "sfp_cli_campaign";
    fs::remove_all(dir);
    RunResult c = run_cli("campaign --grid n=8,k=2,p=1.0,alpha=1.8 --seed 1/2 --kind uc"
                          " --out " + dir.string() + " --workers 2");
    CHECK(c.exit_code == 0);
    CHECK(fs::exists(dir / "campaign.csv"));
    std::string csv = slurp(dir / "campaign.csv");
    CHECK(csv.find("instance,n,k,p,alpha,seed,kind,status,bound,rounds,cuts,wall_time_s") == 0);
    CHECK(csv.find("n8_k2_p1_a1.8_s1,8,2,1,1.8,1,uc,optimal") != std::string::npos);

    CHECK(run_cli("report --out " + dir.string()).exit_code == 0);
    std::string solved = slurp(dir / "solved.csv");
    std::string improv = slurp(dir / "improvement.csv");
    std::string svg = slurp(dir / "improvement.svg");
    CHECK(solved.find("8,2,uc,100,2") != std::string::npos);
    // a campaign of the cut bound alone has improvement factor exactly one
    CHECK(improv.find("uc,2,1,1,1,1,1") != std::string::npos);
    CHECK(svg.find("<svg") != std::string::npos);

    CHECK(run_cli("report --out " + dir.string()).exit_code == 0);
    CHECK(slurp(dir / "solved.csv") == solved);
    CHECK(slurp(dir / "improvement.csv") == improv);
    CHECK(slurp(dir / "improvement.svg") == svg);
}

TEST_CASE("cli campaign skips grid cells that cannot host two terminals per set") {
    const fs::path dir = fs::temp_directory_path() / "sfp_cli_skip";
    fs::remove_all(dir);
    RunResult c = run_cli("campaign --grid n=6,k=2/4,p=0.5,alpha=1.8 --seed 1 --kind uc --out " +
                          dir.string());
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("skip cell n=6 k=4") != std::string::npos);
    std::string csv = slurp(dir / "campaign.csv");
    CHECK(csv.find("k=4") == std::string::npos);
}

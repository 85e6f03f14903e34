#include "qsb/exactla.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qsb;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(QSB_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("eval prints closed scalars and labeled operators") {
        Run r = run("eval --n 2 \"cupS ; capS\"");
        CHECK(r.code == 0);
        CHECK(r.out == "2\n");

        Run m = run("eval --n 3 \"capV\"");
        CHECK(m.code == 0);
        LabeledOp op = labeled_from_json(m.out);
        CHECK(op.mat.rows() == 1);
        CHECK(op.mat.cols() == 9);
        CHECK(op.mat(0, 4) == Scalar::q_pow(1));
        // printed matrix parses back exactly
        CHECK(to_json(op, 2) + "\n" == m.out);
    }

    TEST_CASE("params") {
        Run r = run("params --n 3");
        CHECK(r.code == 0);
        CHECK(r.out == "N 3\nn 1\nsigma_N -1\nt u^-3\nkappa -u^-4\nd_S -u^2 - u^-2\nd_V u^4 + 1 + u^-4\n");
    }

    TEST_CASE("usage errors exit with status 2") {
        CHECK(run("").code == 2);
        CHECK(run("verify").code == 2);
        CHECK(run("verify --n 3 --suite bogus").code == 2);
        CHECK(run("verify --n 3 --eps 2").code == 2);
        CHECK(run("eval --n 2 \"capV ; capS\"").code == 2);
        CHECK(run("eval --n 2 \"cupS ;\"").code == 2);
        CHECK(run("rank --n 2 --word \"S V\"").code == 2);
    }

    TEST_CASE("verify exit codes and reports") {
        auto dir = std::filesystem::temp_directory_path() / "qsb_cli_test";
        std::filesystem::create_directories(dir);
        auto a = dir / "a.jsonl", b = dir / "b.jsonl";

        Run ok = run("verify --n 3 --suite defining --report " + a.string());
        CHECK(ok.code == 0);
        CHECK(ok.out.find("40/40 checks pass") != std::string::npos);
        Run again = run("--threads 1 verify --n 3 --suite defining --report " + b.string());
        CHECK(again.code == 0);
        std::string ra = slurp(a);
        CHECK(!ra.empty());
        CHECK(ra == slurp(b));
        CHECK(ok.out == again.out);

        Run bad = run("verify --n 1 --suite asym --rmax 1 --report " + a.string());
        CHECK(bad.code == 1);
        CHECK(bad.out.find("FAIL asym / Deligne (r=1)") != std::string::npos);
        CHECK(slurp(a).find("\"pass\":false") != std::string::npos);

        Run probe = run("verify --n 2 --suite derived --probe");
        CHECK(probe.code == 0);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("spectrum, qtrace and rank") {
        Run s = run("spectrum --n 2");
        CHECK(s.code == 0);
        CHECK(s.out.rfind("0\t2\n1\t1\n-1\t1\n", 0) == 0);
        Run t = run("qtrace --n 3 \"id(S)\"");
        CHECK(t.code == 0);
        CHECK(t.out == "-u^2 - u^-2\n");
        Run k = run("rank --n 4 --word \"S S\"");
        CHECK(k.code == 0);
        CHECK(k.out == "5\n");
    }
}

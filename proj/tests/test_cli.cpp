#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("vpa-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CmdResult run(const std::string& args, const std::string& env_prefix = "") {
    fs::path out = scratch_dir() / "stdout.txt";
    fs::path err = scratch_dir() / "stderr.txt";
    std::string cmd = env_prefix + std::string(VPA_CLI_PATH) + " " + args + " > " +
                      out.string() + " 2> " + err.string();
    int rv = std::system(cmd.c_str());
    return {WEXITSTATUS(rv), slurp(out), slurp(err)};
}

std::string file_arg(const std::string& name) { return (scratch_dir() / name).string(); }

} // namespace

TEST_CASE("construct, verify, hurwitz, iso pipeline") {
    CHECK(run("construct --field Q --base-norms 1,1 -o " + file_arg("cross.json")).exit_code == 0);
    CHECK(run("verify " + file_arg("cross.json")).exit_code == 0);
    CHECK(run("construct --field Q --base-norms 1,1,1 -o " + file_arg("oct.json")).exit_code == 0);
    CHECK(run("verify " + file_arg("oct.json")).exit_code == 0);
    CHECK(run("hurwitz " + file_arg("oct.json") + " -o " + file_arg("octH.json")).exit_code == 0);
    CHECK(run("verify " + file_arg("octH.json")).exit_code == 0);
    auto iso = run("iso " + file_arg("oct.json") + " " + file_arg("oct.json"));
    CHECK(iso.exit_code == 0);
    CHECK(iso.out.find("Isomorphic") != std::string::npos);

    // the inverse construction round-trips to the identical document
    CHECK(run("hurwitz --inverse " + file_arg("octH.json") + " -o " + file_arg("oct2.json"))
              .exit_code == 0);
    CHECK(slurp(file_arg("oct.json")) == slurp(file_arg("oct2.json")));
}

TEST_CASE("golden documents are byte-exact") {
    for (std::string name : {"dim3_q", "dim7_q"}) {
        std::string norms = name == "dim3_q" ? "1,1" : "1,1,1";
        fs::path produced = scratch_dir() / (name + ".json");
        CHECK(run("construct --field Q --base-norms " + norms + " -o " + produced.string())
                  .exit_code == 0);
        fs::path golden = fs::path(VPA_GOLDEN_DIR) / (name + ".json");
        CHECK(slurp(produced) == slurp(golden));
    }
}

TEST_CASE("construct rejects four norms with exit 2") {
    auto r = run("construct --base-norms 1,1,1,1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("0, 1, 3 and 7") != std::string::npos);
}

TEST_CASE("multiply and table") {
    run("construct --field Q --base-norms 1,1 -o " + file_arg("cross.json"));
    auto r = run("multiply " + file_arg("cross.json") + " --u 1,0,0 --v 0,1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0,0,1\n");
    auto t = run("table " + file_arg("cross.json"));
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("-b1") != std::string::npos);
    auto tj = run("table " + file_arg("cross.json") + " --json");
    CHECK(tj.exit_code == 0);
    CHECK(tj.out.find("\"products\"") != std::string::npos);
}

TEST_CASE("verify failure exits 1") {
    run("construct --field Q --base-norms 1,1 -o " + file_arg("cross.json"));
    std::string doc = slurp(file_arg("cross.json"));
    // break d2 by scaling one gram entry (stays symmetric, parses fine)
    auto pos = doc.find("[\"1\",\"0\",\"0\"]");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, 13, "[\"2\",\"0\",\"0\"]");
    std::ofstream(file_arg("broken.json")) << doc;
    auto r = run("verify " + file_arg("broken.json"));
    CHECK(r.exit_code == 1);
    auto rj = run("verify --json " + file_arg("broken.json"));
    CHECK(rj.exit_code == 1);
    CHECK(rj.out.find("\"violations\"") != std::string::npos);
}

TEST_CASE("base command") {
    run("construct --field Fp:7 --base-norms 2,3 -o " + file_arg("f7.json"));
    auto r = run("base " + file_arg("f7.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("size 2") != std::string::npos);
    CHECK(r.out.find("N = 2") != std::string::npos);

    // an axiom-failing document gets a reason and exit 1
    run("construct --field Q --base-norms 1,1 -o " + file_arg("cross.json"));
    std::string doc = slurp(file_arg("cross.json"));
    auto pos = doc.find("[\"1\",\"0\",\"0\"]");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, 13, "[\"2\",\"0\",\"0\"]");
    std::ofstream(file_arg("broken2.json")) << doc;
    auto bad = run("base " + file_arg("broken2.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("fails the axioms") != std::string::npos);
}

TEST_CASE("iso exit codes") {
    run("construct --field Fp:7 --base-norms 1,1 -o " + file_arg("f7_11.json"));
    run("construct --field Fp:7 --base-norms 2,2 -o " + file_arg("f7_22.json"));
    auto yes = run("iso " + file_arg("f7_11.json") + " " + file_arg("f7_22.json"));
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("Isomorphic") == 0);

    run("construct --field Fp:5 --base-norms 1 -o " + file_arg("a5.json"));
    run("construct --field Fp:5 --base-norms 2 -o " + file_arg("b5.json"));
    auto no = run("iso " + file_arg("a5.json") + " " + file_arg("b5.json"));
    CHECK(no.exit_code == 1);
    CHECK(no.out.find("NotIsomorphic") != std::string::npos);

    // Q norms (1,1) vs (3,3): inconclusive -> exit 3
    run("construct --field Q --base-norms 1,1 -o " + file_arg("q1.json"));
    run("construct --field Q --base-norms 3,3 -o " + file_arg("q3.json"));
    CHECK(run("iso " + file_arg("q1.json") + " " + file_arg("q3.json")).exit_code == 3);
}

TEST_CASE("height bound: flag wins over environment") {
    run("construct --field Q --base-norms 1,1 -o " + file_arg("q1.json"));
    run("construct --field Q --base-norms 2,2 -o " + file_arg("q2.json"));
    std::string pair = file_arg("q1.json") + " " + file_arg("q2.json");
    CHECK(run("iso " + pair).exit_code == 0);
    // a height bound of 1 cannot reach the needed denominators
    CHECK(run("iso " + pair, "VPA_HEIGHT_BOUND=1 ").exit_code == 3);
    CHECK(run("iso --height-bound 20 " + pair, "VPA_HEIGHT_BOUND=1 ").exit_code == 0);
}

TEST_CASE("forms equiv") {
    // bare gram comparisons work on any parsable documents, here dim-2
    // zero-product tables carrying the forms of interest
    auto doc = [&](const std::string& name, const std::string& d0, const std::string& d1) {
        std::ofstream(file_arg(name)) << R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":2,)"
                                       << R"("gram":[[")" << d0 << R"(","0"],["0",")" << d1
                                       << R"("]],"structure":)"
                                       << R"([[["0","0"],["0","0"]],[["0","0"],["0","0"]]]})";
    };
    doc("f11.json", "1", "1");
    doc("f22.json", "2", "2");
    doc("f33.json", "3", "3");
    doc("f12.json", "1", "2");
    CHECK(run("forms equiv " + file_arg("f11.json") + " " + file_arg("f22.json")).exit_code == 0);
    CHECK(run("forms equiv " + file_arg("f11.json") + " " + file_arg("f12.json")).exit_code == 1);
    CHECK(run("forms equiv " + file_arg("f11.json") + " " + file_arg("f33.json")).exit_code == 3);
}

TEST_CASE("obstruct") {
    run("construct --field Fp:7 --base-norms 1,1,1 -o " + file_arg("o7.json"));
    auto r = run("obstruct " + file_arg("o7.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("obstruction demonstrated") != std::string::npos);

    run("construct --field Q --base-norms 1,1 -o " + file_arg("cross.json"));
    CHECK(run("obstruct " + file_arg("cross.json")).exit_code == 2); // precondition: dim 7
}

TEST_CASE("usage and io errors exit 2") {
    CHECK(run("nonsense-subcommand").exit_code == 2);
    CHECK(run("verify /no/such/file.json").exit_code == 2);
    CHECK(run("construct --field Fp:4 --base-norms 1").exit_code == 2);
    auto r = run("construct --field Fp:2 --base-norms 1");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("char_two") != std::string::npos);

    run("construct --field Q --base-norms 1,1 -o " + file_arg("cross.json"));
    CHECK(run("multiply " + file_arg("cross.json") + " --u 1,0 --v 0,1,0").exit_code == 2);
    run("hurwitz " + file_arg("cross.json") + " -o " + file_arg("crossH.json"));
    CHECK(run("iso " + file_arg("crossH.json") + " " + file_arg("crossH.json")).exit_code == 2);
}

TEST_CASE("json reports are byte-stable across runs") {
    run("construct --field Fp:7 --base-norms 1,1,1 -o " + file_arg("o7.json"));
    auto first = run("verify --json " + file_arg("o7.json"));
    auto second = run("verify --json " + file_arg("o7.json"));
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

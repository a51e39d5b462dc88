#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the CLI and captures stdout (stderr folded in).
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SCL_BIN_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    int status = pclose(pipe);
    int code = status >= 256 ? status / 256 : status;  // WEXITSTATUS without <sys/wait.h>
    return {code, output};
}

}  // namespace

TEST_CASE("cli tree") {
    RunResult r = run_cli("tree \"!b && a\" --semantics free --render structured");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(F <b> (T <a> F))\n");

    RunResult mem = run_cli("tree \"a && (b && a)\" --semantics mem");
    CHECK(mem.output == "((T <b> F) <a> F)\n");

    RunResult st = run_cli("tree \"!a || (b && a)\" --semantics static --order ab");
    CHECK(st.output == "((T <b> F) <a> (T <b> T))\n");

    RunResult st_ba = run_cli("tree \"!a || (b && a)\" --semantics static --order ba");
    CHECK(st_ba.output == "((T <a> T) <b> (F <a> T))\n");

    RunResult all_false = run_cli("tree F --semantics static --order ab");
    CHECK(all_false.output == "((F <b> F) <a> (F <b> F))\n");
    CHECK(run_cli("tree F --semantics static --order ba").output ==
          "((F <a> F) <b> (F <a> F))\n");

    RunResult dot = run_cli("tree a --semantics free --render dot");
    CHECK(dot.output.find("digraph evaltree") == 0);
    CHECK(dot.output.find("style=dashed") != std::string::npos);

    RunResult missing = run_cli("tree a --semantics static");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cli eq") {
    RunResult neq = run_cli("eq \"F && a\" \"a && F\" --semantics mem");
    CHECK(neq.exit_code == 1);
    CHECK(neq.output ==
          "NOT EQUIVALENT\n"
          "lhs: F\n"
          "rhs: (F <a> F)\n");

    RunResult eq = run_cli("eq \"F && a\" \"a && F\" --semantics static --order a");
    CHECK(eq.exit_code == 0);
    CHECK(eq.output.find("EQUIVALENT") == 0);
}

TEST_CASE("cli count") {
    CHECK(run_cli("count --kind memorizing --n 3").output == "16430\n");
    CHECK(run_cli("count --kind static --n 2").output == "16\n");
    CHECK(run_cli("count --kind memorizing --n 0").output == "2\n");
}

TEST_CASE("cli parse, translate, dual") {
    CHECK(run_cli("parse \"!b && a\"").output == "SeqAnd(Not(Atom(b)), Atom(a))\n");
    CHECK(run_cli("parse \"F <| a |> T\" --format sexpr").output == "(cond F a T)\n");
    CHECK(run_cli("translate \"a && b\" --to cp").output == "b <| a |> F\n");
    CHECK(run_cli("translate '$x <| T |> $y' --to scl").output ==
          "T && $x || !T && $y\n");
    CHECK(run_cli("dual \"a && F\"").output == "a || T\n");
    CHECK(run_cli("dual \"a <| b |> c\"").exit_code == 2);
}

TEST_CASE("cli truth table") {
    RunResult r = run_cli("tree \"!a || (b && a)\" --semantics static --order ab --render table");
    CHECK(r.output ==
          "a b | !a || b && a\n"
          "T T | T\n"
          "T F | F\n"
          "F T | T\n"
          "F F | T\n");
}

TEST_CASE("cli laws subset") {
    RunResult ok = run_cli("laws --set \"Table 2\" --depth 1");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("FAIL") == std::string::npos);
    CHECK(ok.output.find("5 law(s) checked, 0 failed") != std::string::npos);

    RunResult fail = run_cli("laws --set Comm --semantics free --depth 1");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("FAIL") != std::string::npos);
    CHECK(fail.output.find("counterexample") != std::string::npos);

    RunResult from_file = run_cli("laws --file " + std::string(SCLOGIC_SOURCE_DIR) +
                                  "/data/laws.txt --set \"Table 3\" --depth 1");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output.find("4 law(s) checked, 0 failed") != std::string::npos);
}

TEST_CASE("cli witness") {
    RunResult r = run_cli("witness --from free --to mem --depth 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("witness found:") == 0);

    RunResult none = run_cli("witness --from free --to free --depth 1");
    CHECK(none.exit_code == 1);
}

TEST_CASE("cli models") {
    RunResult v = run_cli("models verify builtin:comm");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("PASS") != std::string::npos);

    RunResult file = run_cli(
        "models verify " + std::string(SCLOGIC_SOURCE_DIR) +
        "/data/models/comm.model --axioms eqsscl --drop comm --refute \"F && a = a && F\"");
    CHECK(file.exit_code == 0);
    CHECK(file.output.find("PASS") != std::string::npos);

    RunResult s = run_cli("models search --axioms eqsscl --drop tand --k 2");
    CHECK(s.exit_code == 0);
    CHECK(s.output.find("domain 2") != std::string::npos);
    CHECK(s.output.find("# refutes:") != std::string::npos);
}

TEST_CASE("cli enumerate") {
    CHECK(run_cli("enumerate --atoms a --depth 0").output == "T\nF\na\n");
    CHECK(run_cli("enumerate --atoms ab --depth 0 --no-constants").output == "a\nb\n");
    CHECK(run_cli("enumerate --atoms a --depth 2 --distinct --semantics mem").output == "6\n");
    CHECK(run_cli("enumerate --atoms ab --depth 3 --distinct --semantics static --order ab")
              .output == "16\n");
}

TEST_CASE("cli usage errors exit with 2") {
    CHECK(run_cli("tree").exit_code > 0);
    CHECK(run_cli("eq a b --semantics static").exit_code == 2);
    CHECK(run_cli("parse \"a &&\"").exit_code == 2);
    CHECK(run_cli("count --kind bogus --n 1").exit_code == 2);
}

TEST_CASE("cli output is stable across runs") {
    std::string cmd = "laws --set CPcon1 --seed 42";
    CHECK(run_cli(cmd).output == run_cli(cmd).output);
}

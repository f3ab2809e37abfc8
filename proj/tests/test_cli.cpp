// Exercises the installed command-line surface: formats, exit codes and
// byte-level determinism.  argv[1] is the tool path, argv[2] the data
// directory with the shipped corpus and polygon files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "intnorm/corpus.hpp"

namespace {

int checks = 0;
int failures = 0;

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& cmd) {
    RunResult res;
    const std::string errfile =
        (std::filesystem::temp_directory_path() / "intnorm_cli_stderr.txt").string();
    FILE* pipe = popen((cmd + " 2>" + errfile).c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream ef(errfile);
    std::ostringstream es;
    es << ef.rdbuf();
    res.err = es.str();
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: test_cli <tool> <data-dir>\n";
        return 2;
    }
    const std::string tool = argv[1];
    const std::string data = argv[2];

    // shipped corpus files stay in sync with the embedded corpus
    for (const auto& item : intnorm::corpus()) {
        const std::string path = data + "/corpus/" + item.name + ".rg";
        expect(std::filesystem::exists(path), "data file exists: " + path);
        expect(read_file(path) == item.text, "data file matches embedded text: " + path);
    }

    const std::string t1 = data + "/corpus/T1.rg";
    const std::string t0 = data + "/corpus/T0.rg";

    {
        const RunResult r = run(tool + " check " + t1);
        expect(r.exit_code == 0, "check T1 exit code");
        expect(r.out ==
                   "vertices: 1\nedges: 2\nfaces: 1\ngenus: 1\ncomponents: 2\n",
               "check T1 output");
    }
    {
        const RunResult r = run(tool + " norm " + t1 + " 1,1");
        expect(r.exit_code == 0, "norm T1 (1,1) exit code");
        expect(r.out == "2\n", "norm T1 (1,1) prints 2");
    }
    {
        const RunResult r = run(tool + " norm " + t1 + " 1,0");
        expect(r.out == "1\n", "norm T1 (1,0) prints 1");
    }
    {
        const RunResult r = run(tool + " norm " + t1 + " 1,1 --oracle");
        expect(r.exit_code == 0, "oracle norm exit code");
        expect(r.out == "2\n", "oracle norm T1 (1,1) prints 2");
    }
    {
        const RunResult r = run(tool + " ball " + t0);
        expect(r.exit_code == 4, "ball on genus 0 exits 4");
        expect(r.err.find("genus 0: trivial norm") != std::string::npos,
               "ball on genus 0 message");
    }
    {
        const RunResult r = run(tool + " norm " + t0 + " 1,0");
        expect(r.exit_code == 4, "norm on genus 0 exits 4");
    }
    {
        const RunResult r = run(tool + " ball " + t1);
        expect(r.exit_code == 0, "ball T1 exit code");
        expect(r.out ==
                   "dim 2\nv -1 -1\nv -1 1\nv 1 -1\nv 1 1\n"
                   "symmetric: true\nparity: true\n",
               "ball T1 output");
    }
    {
        const RunResult r = run(tool + " certify " + t1);
        expect(r.exit_code == 0, "certify T1 exit code");
        expect(r.out.find("verdict: REALIZABLE") != std::string::npos, "certify T1 verdict");
        expect(r.out.find("genus: 1") != std::string::npos, "certify T1 genus line");
        expect(r.out.find("basis:") != std::string::npos, "certify T1 basis block");
    }
    {
        const std::string square = data + "/polygons/square.poly";
        const RunResult r = run(tool + " realize-torus " + square);
        expect(r.exit_code == 0, "realize-torus square exit code");
        expect(r.out == "geodesic: p=0 q=1 m=1\ngeodesic: p=1 q=0 m=1\n",
               "realize-torus square output");
    }
    {
        const std::string segment = write_temp("segment.poly", "v 2 0\nv -2 0\n");
        const RunResult r = run(tool + " realize-torus " + segment);
        expect(r.exit_code == 4, "realize-torus on a segment exits 4");
    }
    {
        const RunResult r = run(tool + " corpus");
        expect(r.exit_code == 0, "corpus exit code");
        expect(r.out.find("T1: PASS") != std::string::npos, "corpus shows T1 PASS");
        expect(r.out.find("FAIL") == std::string::npos, "corpus has no failures");
    }

    // exit-code contract for bad input
    {
        const RunResult r = run(tool + " check /nonexistent-file.rg");
        expect(r.exit_code == 2, "missing file exits 2");
    }
    {
        const std::string bad = write_temp("bad_parse.rg", "vertices 1\nnonsense\n");
        expect(run(tool + " check " + bad).exit_code == 2, "parse error exits 2");
    }
    {
        const std::string fixed =
            write_temp("fixed_point.rg",
                       "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 0\n1 3\nend\n");
        expect(run(tool + " check " + fixed).exit_code == 3, "validation error exits 3");
    }
    {
        expect(run(tool + " norm " + t1 + " 1,x").exit_code == 2, "bad class vector exits 2");
        expect(run(tool + " norm " + t1 + " 1,0,0").exit_code == 2,
               "wrong class length exits 2");
    }
    {
        const RunResult r = run(tool + " ball " + t1 + " --max-edges 1");
        expect(r.exit_code == 5, "enumeration cap exits 5");
    }
    {
        const RunResult r = run(tool + " norm " + t1 + " 1,1 --oracle --bound 1");
        expect(r.exit_code == 5, "unconverged oracle exits 5");
    }

    // byte-level determinism across runs
    for (const std::string cmd :
         {tool + " corpus", tool + " certify " + t1, tool + " ball " + t1}) {
        const RunResult a = run(cmd);
        const RunResult b = run(cmd);
        expect(a.out == b.out && a.exit_code == b.exit_code,
               "deterministic output for: " + cmd);
    }

    std::cout << (failures == 0 ? "PASS" : "FAIL") << " (" << checks - failures << "/"
              << checks << " checks)\n";
    return failures == 0 ? 0 : 1;
}

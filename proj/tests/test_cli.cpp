// CLI-level tests: the parse/print round trip on the bundled corpus, and
// byte-exact golden JSON outputs for every subcommand, with the on-disk
// Groebner cache enabled (cold and warm) and disabled.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "frobkit/session.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ManifestEntry {
    std::string golden;
    std::string session;
    std::string command;
    std::vector<std::string> args;
};

std::vector<ManifestEntry> load_manifest() {
    std::vector<ManifestEntry> entries;
    std::ifstream in(fs::path(FROBKIT_CORPUS_DIR) / "manifest.txt");
    REQUIRE(in);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream parts(line);
        ManifestEntry e;
        parts >> e.golden >> e.session >> e.command;
        std::string tok;
        while (parts >> tok) e.args.push_back(tok);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::string run_cli(const ManifestEntry& e, const fs::path& cache_dir, bool no_cache,
                    int* exit_code = nullptr) {
    std::ostringstream cmd;
    cmd << "FROBKIT_CACHE_DIR='" << cache_dir.string() << "' '" << FROBKIT_BIN << "' "
        << e.command << " --session '"
        << (fs::path(FROBKIT_CORPUS_DIR) / e.session).string() << "'";
    for (const auto& a : e.args) cmd << " '" << a << "'";
    if (no_cache) cmd << " --no-cache";
    cmd << " 2>/dev/null";
    FILE* pipe = popen(cmd.str().c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("frobkit-test-" + tag + "-" +
                                                std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("corpus parse/print round trip") {
    std::size_t count = 0;
    for (const auto& entry : fs::directory_iterator(FROBKIT_CORPUS_DIR)) {
        if (entry.path().extension() != ".session") continue;
        ++count;
        std::string text = read_file(entry.path());
        frobkit::SessionFile first = frobkit::parse_session(text);
        std::string printed = frobkit::print_session(first);
        frobkit::SessionFile second = frobkit::parse_session(printed);
        INFO(entry.path().filename().string());
        CHECK(frobkit::session_equal(first, second));
        CHECK(frobkit::print_session(second) == printed);
    }
    CHECK(count == 20);
}

TEST_CASE("golden outputs, cache off and cache on") {
    auto entries = load_manifest();
    REQUIRE(entries.size() >= 20);
    fs::path cache = fresh_dir("cache");
    for (const auto& e : entries) {
        INFO(e.golden << " (" << e.command << ")");
        std::string expected = read_file(fs::path(FROBKIT_CORPUS_DIR) / "golden" / e.golden);
        int code = -1;
        std::string no_cache_out = run_cli(e, cache, /*no_cache=*/true, &code);
        CHECK(code == 0);
        CHECK(no_cache_out == expected);
        std::string cold = run_cli(e, cache, /*no_cache=*/false);
        CHECK(cold == expected);
        std::string warm = run_cli(e, cache, /*no_cache=*/false);
        CHECK(warm == expected);
    }
    fs::remove_all(cache);
}

TEST_CASE("json-out writes the document to a file") {
    fs::path dir = fresh_dir("jsonout");
    fs::path out_file = dir / "out.json";
    std::ostringstream cmd;
    cmd << "FROBKIT_CACHE_DIR='" << (dir / "cache").string() << "' '" << FROBKIT_BIN
        << "' trace --session '" << (fs::path(FROBKIT_CORPUS_DIR) / "09_trace.session").string()
        << "' --poly f --json-out '" << out_file.string() << "' 2>/dev/null";
    int status = std::system(cmd.str().c_str());
    CHECK(WEXITSTATUS(status) == 0);
    std::string written = read_file(out_file);
    std::string golden = read_file(fs::path(FROBKIT_CORPUS_DIR) / "golden" / "g09_trace.json");
    CHECK(written == golden);
    fs::remove_all(dir);
}

TEST_CASE("resource caps exit with code 2") {
    fs::path dir = fresh_dir("rescap");
    {
        std::ofstream s(dir / "big.session");
        s << "ring p=2 vars=x,y\nsplitting S = [ [x] ]\n";
    }
    std::ostringstream cmd;
    cmd << "FROBKIT_CACHE_DIR='" << (dir / "cache").string() << "' '" << FROBKIT_BIN
        << "' oracle-submodules --session '" << (dir / "big.session").string()
        << "' --splitting S --window 4 2>/dev/null";  // 4^2 = 16 window dims > cap 12
    FILE* pipe = popen(cmd.str().c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);
    CHECK(out.find("\"error\": \"resource-cap\"") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("concurrent invocations never corrupt cache entries") {
    auto entries = load_manifest();
    REQUIRE(!entries.empty());
    const ManifestEntry& e = entries.front();
    fs::path cache = fresh_dir("parcache");
    std::string expected = read_file(fs::path(FROBKIT_CORPUS_DIR) / "golden" / e.golden);
    // launch several concurrent invocations sharing one cache directory
    std::ostringstream cmd;
    cmd << "for i in 1 2 3 4 5 6; do FROBKIT_CACHE_DIR='" << cache.string() << "' '"
        << FROBKIT_BIN << "' " << e.command << " --session '"
        << (fs::path(FROBKIT_CORPUS_DIR) / e.session).string() << "'";
    for (const auto& a : e.args) cmd << " '" << a << "'";
    cmd << " > \"" << cache.string() << "/out$i.json\" 2>/dev/null & done; wait";
    int status = std::system(cmd.str().c_str());
    CHECK(WEXITSTATUS(status) == 0);
    for (int i = 1; i <= 6; ++i)
        CHECK(read_file(cache / ("out" + std::to_string(i) + ".json")) == expected);
    // and a subsequent cached run still agrees
    CHECK(run_cli(e, cache, false) == expected);
    fs::remove_all(cache);
}

TEST_CASE("error envelope and exit codes") {
    fs::path cache = fresh_dir("errcache");
    fs::path dir = fresh_dir("errs");
    // parse error -> exit 3
    {
        std::ofstream out(dir / "bad.session");
        out << "ring p=4 vars=x\n";
    }
    std::ostringstream cmd;
    cmd << "FROBKIT_CACHE_DIR='" << cache.string() << "' '" << FROBKIT_BIN
        << "' gb --session '" << (dir / "bad.session").string() << "' --ideal I 2>/dev/null";
    FILE* pipe = popen(cmd.str().c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 3);
    CHECK(out.find("\"error\": \"parse\"") != std::string::npos);

    // mathematical-input error -> exit 1
    {
        std::ofstream s(dir / "invalid.session");
        s << "ring p=2 vars=x\nmatrix A = [ [x] ]\nmatrix B = [ [1] ]\n"
             "presentation P = (A=A, B=B)\n";
    }
    std::ostringstream cmd2;
    cmd2 << "FROBKIT_CACHE_DIR='" << cache.string() << "' '" << FROBKIT_BIN
         << "' validate --session '" << (dir / "invalid.session").string()
         << "' --presentation P 2>/dev/null";
    pipe = popen(cmd2.str().c_str(), "r");
    REQUIRE(pipe);
    out.clear();
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(out.find("\"error\": \"invalid-structure\"") != std::string::npos);

    fs::remove_all(dir);
    fs::remove_all(cache);
}

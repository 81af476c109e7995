/*
   Copyright 2026 The frobkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// frobkit: matrix presentations of Frobenius actions on Artinian modules,
// nilpotency and stable parts, Hom-set solving, and Frobenius near-splittings
// over F_p[x_1..x_d], driven by declarative session files.
//
//   frobkit <subcommand> --session <file> [flags]
//
// Exit codes: 0 success, 1 mathematical-input error, 2 resource cap,
// 3 parse error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "frobkit/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw frobkit::ConfigError("cannot open session file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("FROBKIT_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "frobkit";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "frobkit";
    return std::filesystem::temp_directory_path() / "frobkit-cache";
}

int exit_code_for(const frobkit::Error& e) {
    std::string kind = e.kind();
    if (kind == "parse") return 3;
    if (kind == "resource-cap") return 2;
    return 1;
}

struct Options {
    std::string session_path;
    std::string json_out;
    bool no_cache = false;
    frobkit::CommandArgs args;
};

void emit(const frobkit::Json& doc, const Options& opts) {
    std::string text = doc.dump(2);
    text.push_back('\n');
    if (!opts.json_out.empty()) {
        std::ofstream out(opts.json_out, std::ios::binary | std::ios::trunc);
        out << text;
    } else {
        std::cout << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frobkit: Frobenius actions, splittings and compatible submodules over F_p[x]"};
    app.require_subcommand(1);

    Options opts;

    struct Spec {
        const char* name;
        const char* help;
        std::vector<const char*> string_opts;
        std::vector<const char*> uint_opts;
    };
    // clang-format off
    const std::vector<Spec> specs = {
        {"gb", "reduced Groebner basis of an ideal or module", {"ideal", "module", "submodule", "order"}, {}},
        {"member", "submodule membership of an element", {"ideal", "module", "submodule", "element"}, {}},
        {"colon", "colon ideal (I : J)", {"ideal", "by"}, {}},
        {"intersect", "ideal intersection", {"ideal", "with"}, {}},
        {"bracket", "bracket power A^[p^e]", {"matrix", "ideal", "module", "submodule"}, {"e"}},
        {"root", "Frobenius root W^[1/p^e]", {"ideal", "module", "submodule"}, {"e"}},
        {"trace", "trace map of a polynomial", {"poly"}, {}},
        {"solve-hom", "Hom-set of R[Theta;f]-module morphisms", {"I", "J", "u", "v"}, {"degree-bound"}},
        {"validate", "validate a presentation (A, B)", {"presentation"}, {}},
        {"kchain", "the ascending dual chain K_e", {"presentation"}, {"cap"}},
        {"hsl", "nilpotency order of Theta", {"presentation"}, {"cap"}},
        {"nilpart", "presentation of Nil(M)", {"presentation"}, {"cap"}},
        {"stablepart", "presentation of the stable part M*", {"presentation"}, {"cap"}},
        {"compatible", "compatibility of a submodule with a splitting", {"splitting", "ideal", "module", "submodule"}, {}},
        {"closure", "smallest compatible submodule containing V", {"splitting", "ideal", "module", "submodule"}, {"cap"}},
        {"enumerate", "enumerate compatible submodules within a constraint", {"splitting"}, {"kmax", "window"}},
        {"oracle-nilpotent", "windowed nilpotency oracle", {"presentation", "splitting"}, {"window", "emax"}},
        {"oracle-submodules", "windowed stable-submodule oracle", {"presentation", "splitting"}, {"window"}},
        {"injectivity", "injectivity of the dual Frobenius", {"splitting"}, {}},
    };
    // clang-format on

    std::map<std::string, std::map<std::string, std::string>> collected;
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--session", opts.session_path, "session file")->required();
        sub->add_option("--json-out", opts.json_out, "write the JSON document to a file");
        sub->add_flag("--no-cache", opts.no_cache, "disable the on-disk Groebner cache");
        auto& store = collected[spec.name];
        for (const char* opt : spec.string_opts)
            sub->add_option(std::string("--") + opt, store[opt]);
        for (const char* opt : spec.uint_opts) {
            std::string names = std::string("--") + opt;
            if (std::string(opt) == "e") names = "-e,--e";
            sub->add_option(names, store[opt]);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        frobkit::Json err;
        err["error"] = "parse";
        err["detail"] = std::string("command line: ") + e.what();
        std::cout << err.dump(2) << "\n";
        return 3;
    }
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    for (auto& [key, value] : collected[command])
        if (!value.empty()) opts.args.named[key] = value;

    try {
        if (!opts.no_cache) frobkit::GroebnerCache::instance().set_directory(default_cache_dir());
        frobkit::SessionFile session = frobkit::parse_session(read_file(opts.session_path));
        frobkit::Json doc = frobkit::run_command(session, command, opts.args);
        emit(doc, opts);
        return 0;
    } catch (const frobkit::Error& e) {
        frobkit::Json err;
        err["error"] = e.kind();
        err["detail"] = e.what();
        emit(err, opts);
        return exit_code_for(e);
    } catch (const std::exception& e) {
        frobkit::Json err;
        err["error"] = "internal";
        err["detail"] = e.what();
        emit(err, opts);
        return 1;
    }
}

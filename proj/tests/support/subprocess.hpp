#pragma once

// Helpers for the integration tests that drive the real binary.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace oomet::testsupport {

inline std::string oomet_binary() {
    const char* bin = std::getenv("OOMET_BIN");
    return bin ? bin : "";
}

inline std::filesystem::path fixtures_dir() {
#ifdef OOMET_FIXTURES_DIR
    return OOMET_FIXTURES_DIR;
#else
    return "fixtures";
#endif
}

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'') quoted += "'\\''";
        else quoted.push_back(c);
    }
    quoted += "'";
    return quoted;
}

inline CommandResult run_command(const std::vector<std::string>& argv,
                                 const std::filesystem::path& scratch) {
    std::filesystem::create_directories(scratch);
    const auto out_path = scratch / "stdout.txt";
    const auto err_path = scratch / "stderr.txt";
    std::string cmd;
    for (const std::string& arg : argv) {
        if (!cmd.empty()) cmd += ' ';
        cmd += shell_quote(arg);
    }
    cmd += " > " + shell_quote(out_path.string()) + " 2> " + shell_quote(err_path.string());
    const int status = std::system(cmd.c_str());

    CommandResult result;
    result.exit_code = status < 0 ? status : WEXITSTATUS(status);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
}

// Fresh scratch directory under the system temp root.
inline std::filesystem::path make_scratch_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("oomet_test_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace oomet::testsupport

#ifndef POWSUM_TESTS_SUPPORT_HPP
#define POWSUM_TESTS_SUPPORT_HPP

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace testsupport {

struct CommandResult {
    int exit_code;
    std::string output;
};

/// Runs a shell command and captures its stdout. Redirect inside `cmd` to
/// inspect stderr.
inline CommandResult run_command(const std::string& cmd) {
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed: " + cmd);
    }
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    int code = -1;
    if (WIFEXITED(status)) {
        code = WEXITSTATUS(status);
    }
    return {code, out};
}

/// Path of the CLI under test, wired up by ctest through POWSUM_CLI.
inline std::string cli_path() {
    const char* p = std::getenv("POWSUM_CLI");
    if (p == nullptr || *p == '\0') {
        throw std::runtime_error("POWSUM_CLI is not set; run through ctest");
    }
    return p;
}

}  // namespace testsupport

#endif

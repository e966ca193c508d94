#pragma once

// Minimal popen wrapper for driving the CLI from tests.

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace subprocess {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

inline RunResult run_command(const std::string& cmd_line) {
    static int counter = 0;
    const std::string err_path =
        "/tmp/kodag_sub_err_" + std::to_string(counter++) + ".txt";
    RunResult result;
    const std::string cmd = cmd_line + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.out.append(buf, got);
    }
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_path);
    result.err.assign((std::istreambuf_iterator<char>(err)),
                      std::istreambuf_iterator<char>());
    std::remove(err_path.c_str());
    return result;
}

} // namespace subprocess

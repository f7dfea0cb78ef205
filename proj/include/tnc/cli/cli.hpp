#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tnc/cli/json_io.hpp"

namespace tnc::cli {

struct RunConfig {
    std::string subcommand;  // validate, mincut, transfer, simulate, feasibility, transform, align
    std::string input;       // path; ignored when `fixture` is set
    std::optional<std::string> fixture;
    std::uint64_t seed = 0;
    std::optional<std::size_t> n;
    std::size_t budget = 500;
    std::uint32_t max_ext_degree = 12;
    std::size_t max_n = 4096;
    std::size_t n_min = 1;
    bool find_plan = false;
    bool verify_only = false;
    std::size_t trials = 100;
    std::optional<std::string> dump_normalized;
    bool pretty = false;
};

struct RunResult {
    int exit_code = 0;
    std::string output;  // report, newline terminated
    std::string diagnostic;
};

/// Exit 0 on pass / feasible, 1 on fail / infeasible, 2 on input errors. The
/// report of an input error is a JSON object with "error" and "message" (and
/// "violations" for schema errors).
RunResult run(const RunConfig& config);

/// Parses argv and runs; writes the report to stdout.
int main_entry(int argc, char** argv);

/// Bundled fixture documents: "example1" (transfer matrices) and "example2"
/// (network with the reference kernels). Throws UnknownFixture.
Json load_fixture(const std::string& name);

}  // namespace tnc::cli

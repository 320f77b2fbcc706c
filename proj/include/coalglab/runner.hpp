#ifndef COALGLAB_RUNNER_HPP
#define COALGLAB_RUNNER_HPP

#include <iosfwd>

#include "coalglab/json_io.hpp"

namespace coalglab {

// Input is rejected before anything runs; maps to exit status 2.
struct spec_validation_error : coalg_error {
    using coalg_error::coalg_error;
};

struct RunOptions {
    std::size_t budget = default_enumeration_budget;
    int degree_cap = 12;
    std::string out_dir = ".";
    bool write_files = true;
};

struct RunResult {
    Json report;
    int exit_code = 0; // 0 pass, 1 math failure, 2 validation error, 3 degraded
    std::vector<std::string> files_written;
};

// COALG_LAB_BUDGET overrides the built-in default when set.
std::size_t budget_from_environment(std::size_t fallback = default_enumeration_budget);

void validate_spec(const Json& spec);

RunResult run_spec(const Json& spec, const RunOptions& opts);
RunResult run_spec_file(const std::string& path, const RunOptions& opts);

void emit_quiver_dot(const QuiverReport& quiver, std::ostream& os);

std::vector<std::string> known_construction_kinds();
std::string explain_construction(const std::string& kind);

} // namespace coalglab

#endif

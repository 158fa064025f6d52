#ifndef SNC_CLI_HPP
#define SNC_CLI_HPP

#include <string>
#include <vector>

#include "snc/io.hpp"

namespace snc
{

struct RunReport
{
    std::string command;
    std::string inputs_digest;
    Json results;
    int exit_status = 0;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

Json report_to_json(const RunReport& report);
RunReport report_from_json(const Json& json);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

struct CommandResult
{
    RunReport report;
    std::string out;  ///< human text, or the JSON report with --json
    std::string err;
};

/// Runs one invocation; `args` excludes the program name. Exit status 0 on
/// success, 1 on validation errors, 2 on usage errors.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace snc

#endif

#pragma once

#include <string>
#include <vector>

namespace bnspecht::cli {

enum class Status { ok, rejected_input, resource_exceeded };

std::string to_string(Status s);

struct CommandResult {
    Status status = Status::ok;
    /// JSON text, DOT text for `poset --dot`, or usage text for --help. Ends in a newline.
    std::string payload;

    int exit_code() const noexcept;
};

/// Runs one subcommand. args excludes the program name. Never throws for bad input;
/// malformed text and constraint violations come back as rejected_input, exhausted caps
/// as resource_exceeded, both with a JSON payload {"status", "message"}.
CommandResult run(const std::vector<std::string>& args);

} // namespace bnspecht::cli

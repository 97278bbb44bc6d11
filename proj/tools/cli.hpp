#pragma once

// The pi2 command-line frontend. Every subcommand prints one JSON report on
// the output stream:
//
//   {"schema": "pi2-report/1", "command": ..., "args": [...],
//    "inputs": {name: {"path"|"named": ..., "sha256": ...}},
//    "version": ..., "result": {...}}
//
// Exit codes: 0 on success (a false verdict is a success), 1 on domain
// errors and exhausted budgets (the report then carries "error" instead of
// "result"), 2 on usage errors (message on the error stream).

#include <iosfwd>
#include <string>
#include <vector>

namespace pi2::cli {

inline constexpr const char* kSchema = "pi2-report/1";
inline constexpr const char* kVersion = "pi2 0.1.0";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pi2::cli

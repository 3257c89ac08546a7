#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psi3ut/errors.hpp"

namespace psi3ut::cli {

inline constexpr const char* kToolName = "psi3ut";
inline constexpr const char* kToolVersion = "1.0.0";

// Fully resolved invocation. The CLI front end only translates flags into
// this struct; everything behind it is a pure function of the config, so
// identical configs produce byte-identical artifacts.
struct RunConfig {
    std::string command;
    unsigned n = 12;
    unsigned size = 0; // 0 = command-specific default
    unsigned mod2exp = 128;
    std::vector<std::uint64_t> seeds; // empty = command-specific default
    unsigned long max = 64;           // valuations --max
    unsigned degree = 4;              // psi3-matrix --degree
    unsigned basis_m = 1;             // basis --m
    unsigned basis_l = 0;             // basis --l
    std::string c_entries_path;       // conjugate --c-entries
    std::string out_path;             // --out (empty = stdout)
    std::string format = "json";      // json | csv
};

struct RunResult {
    int exit_code = 0;     // 0 iff every check in scope passed
    std::string artifact;  // JSON or CSV report
    std::string table;     // human-readable table (verify-paper only)
};

// Validates the config (ConfigError on bad flags), runs the command, writes
// the artifact to out_path when set. Computation errors propagate.
RunResult run(const RunConfig& config);

// Stable mapping from error classes to distinct nonzero exit codes.
int exit_code_for(const Error& e);

} // namespace psi3ut::cli

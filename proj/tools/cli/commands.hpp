#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "render.hpp"

namespace utcochar::cli
{

struct RunConfig {
    std::string command;
    int k = 1;
    std::optional<std::size_t> d;
    std::optional<int> max_degree;
    Format format = Format::text;
    std::string out_path;
    std::vector<std::string> checks;
    bool v_form = false;

    // 2k − 1 unless given.
    std::size_t variables() const;
    // 10 for k ≤ 3, 8 otherwise, unless given.
    int degree_bound() const;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_failure_cap = 125;

// Exit code for a verify run with `failures` failed checks: 0, or 1 + failures
// capped at exit_failure_cap.
int verification_exit_code(std::size_t failures);

// Parses argv-style arguments (without the program name) and runs the command.
// Results go to `out` (or the --out file), diagnostics and timings to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace utcochar::cli

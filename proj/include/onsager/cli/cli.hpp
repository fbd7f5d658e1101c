#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace onsager::cli {

// Desk-scale defaults. Flags override them; so does a key=value file named by
// the ONSAGER_ACE_DEFAULTS environment variable.
struct Defaults {
    int window = 8;
    int kmax = 8;
    int depth = 18;
    int pbw_bound = 8;
    int ace_bound = 6;

    friend bool operator==(const Defaults&, const Defaults&) = default;
};

// Keys: window, kmax, depth, pbw_bound, ace_bound. "#" comments and blank
// lines allowed. ParseError on unknown keys or non-integer values.
Defaults parse_defaults(const std::string& text, Defaults base = {});
// Built-in defaults, overlaid with the file named by ONSAGER_ACE_DEFAULTS if set.
Defaults defaults_from_env();

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Defaults& defaults);

}  // namespace onsager::cli

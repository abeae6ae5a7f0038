#pragma once

#include <stdexcept>
#include <string>

namespace bridge {

// Bad user input: malformed config, out-of-range parameters. CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A checked internal invariant failed. CLI exit code 3.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct PeripheralCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised by returning_arc_surgery when the curve has no returning arc but
// still meets the arc system.
struct NotADisk : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

}  // namespace bridge

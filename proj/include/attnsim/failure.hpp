#pragma once

#include <stdexcept>
#include <string>

namespace attnsim {

// Configuration / construction errors: programming or input-file mistakes.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// In-trial failures are values, not crashes: the executive can see them and
// repair. FailureKind::None means no failure.
enum class FailureKind {
    None,
    Deadline,            // simulated clock exceeded t_c
    NoCandidate,         // selection found no unit passing the task filter
    Localization,        // restart budget exhausted during top-down descent
    DegeneratePercept,   // zero-vector comparison, no usable representation
    NothingToFixate,     // conspicuity map empty under inhibition
    NoCpForTask,         // library has no template for the taxonomy node
    WorldError,          // environment misuse (e.g. stepping a dead world)
    GaveUp,              // repair ladder exhausted
};

const char* failure_name(FailureKind k);

struct Failure {
    FailureKind kind = FailureKind::None;
    std::string detail;
};

// Internal carrier used to unwind a primitive; execute_cp converts it into a
// structured Failure result before returning, so it never escapes the module.
struct TrialFailure {
    Failure failure;
};

[[noreturn]] inline void fail_trial(FailureKind kind, std::string detail = {}) {
    throw TrialFailure{Failure{kind, std::move(detail)}};
}

}  // namespace attnsim

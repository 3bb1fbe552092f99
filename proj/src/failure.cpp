#include "attnsim/failure.hpp"

namespace attnsim {

const char* failure_name(FailureKind k) {
    switch (k) {
        case FailureKind::None: return "none";
        case FailureKind::Deadline: return "deadline";
        case FailureKind::NoCandidate: return "no_candidate";
        case FailureKind::Localization: return "localization";
        case FailureKind::DegeneratePercept: return "degenerate_percept";
        case FailureKind::NothingToFixate: return "nothing_to_fixate";
        case FailureKind::NoCpForTask: return "no_cp_for_task";
        case FailureKind::WorldError: return "world_error";
        case FailureKind::GaveUp: return "gave_up";
    }
    return "unknown";
}

}  // namespace attnsim

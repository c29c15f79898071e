#pragma once

#include <cstdint>

#include "errors.hpp"

namespace vf {

// Work budget shared along one computation.  Charged per processed S-pair and
// per reduction step; generous by default for the intended <= 3 variable scale.
struct Budget {
    std::int64_t remaining = 50'000'000;

    void charge(std::int64_t cost = 1) {
        remaining -= cost;
        if (remaining < 0)
            throw ResourceExhausted("work budget exhausted");
    }
};

inline Budget& unlimited_budget() {
    thread_local Budget b{INT64_MAX};
    b.remaining = INT64_MAX;
    return b;
}

} // namespace vf

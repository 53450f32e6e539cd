#pragma once

// The computations behind the command-line tool, returning exactly the text
// it prints so that outputs can be compared byte for byte.

#include "trisep/enumerate.hpp"
#include "trisep/maxsep.hpp"
#include "trisep/scene.hpp"

#include <string>

namespace trisep {

struct RunOptions {
    Backend backend = Backend::rank;
    bool brute_force = false;
    ApexPolicy apex = ApexPolicy::lowest_vertex;
    bool oracles = false;
    unsigned threads = 1;
    bool timings = false; // add a "timings" object to the report
};

struct RunOutput {
    std::string lines;  // JSON lines for stdout
    std::string report; // summary JSON object
    bool ok = true;     // false on a brute-force mismatch or a failed check
};

RunOutput run_enumerate(const Scene& scene, const RunOptions& options);
RunOutput run_maxsep(const Scene& scene, const RunOptions& options);

// Worker count: TRISEP_THREADS caps the request; 0 asks for the hardware
// concurrency.
unsigned resolve_threads(unsigned requested);

} // namespace trisep

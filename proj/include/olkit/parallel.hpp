#pragma once

#include <cstdint>

namespace olkit {

/// Execution knobs shared by all kernels. threads == 1 selects the serial
/// reference implementations; anything else the OpenMP kernels. Results are
/// byte-identical either way.
struct RunConfig {
    int threads = 0;              // 0 = OpenMP default
    std::uint64_t seed = 0x01E55EED;  // for sampled law checks over omega
    int sample_count = 256;       // random samples per sampled suite

    bool serial() const { return threads == 1; }
};

int resolved_threads(const RunConfig& cfg);

/// Process-wide default used when a caller does not pass a RunConfig.
RunConfig& global_config();

}  // namespace olkit

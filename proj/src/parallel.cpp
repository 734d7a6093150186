#include "olkit/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace olkit {

int resolved_threads(const RunConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

RunConfig& global_config() {
    static RunConfig cfg;
    return cfg;
}

}  // namespace olkit

#include "beamlab/oracle/kernels.hpp"

#define BEAMLAB_KERNEL_NS omp
#define BEAMLAB_PARALLEL_FOR _Pragma("omp parallel for schedule(static)")
#include "kernels_impl.inc"

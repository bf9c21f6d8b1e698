#include "beamlab/oracle/kernels.hpp"

#define BEAMLAB_KERNEL_NS serial
#define BEAMLAB_PARALLEL_FOR
#include "kernels_impl.inc"

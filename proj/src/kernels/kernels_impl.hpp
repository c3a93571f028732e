#pragma once

#include "amgm/kernels.hpp"

namespace amgm::kernels {

extern const KernelTable kScalarTable;

#if defined(AMGM_HAVE_AVX2_KERNELS)
extern const KernelTable kAvx2Table;
#endif

}  // namespace amgm::kernels

#pragma once

#include "huella/kernels/kernels.hpp"

namespace huella::kernels {

namespace scalar {
extern const KernelTable table;
}

#if defined(HUELLA_HAVE_AVX2)
namespace avx2 {
extern const KernelTable table;
}
#endif

#if defined(HUELLA_HAVE_NEON)
namespace neon {
extern const KernelTable table;
}
#endif

}  // namespace huella::kernels

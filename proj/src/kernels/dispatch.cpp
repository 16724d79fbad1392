#include <cstdlib>
#include <cstring>

#include "slin/kernels.hpp"

namespace slin::kernels {

#if defined(SLIN_HAVE_AVX2)
const Ops* avx2_ops_table();  // defined in kernels_avx2.cpp
#endif

bool avx2_supported() {
#if defined(SLIN_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Ops* avx2_ops() {
#if defined(SLIN_HAVE_AVX2)
  if (avx2_supported()) return avx2_ops_table();
#endif
  return nullptr;
}

namespace {

const Ops* select() {
  const char* env = std::getenv("SLIN_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0) return &scalar_ops();
  if (const Ops* v = avx2_ops()) return v;
  return &scalar_ops();
}

}  // namespace

const Ops& active() {
  static const Ops* chosen = select();
  return *chosen;
}

Backend active_backend() {
  return &active() == &scalar_ops() ? Backend::scalar : Backend::avx2;
}

}  // namespace slin::kernels

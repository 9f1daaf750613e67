#include "heatrec/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace heatrec::kernels {

#if defined(HEATREC_HAVE_AVX2)
const Backend* avx2_backend_impl();
#endif
#if defined(HEATREC_HAVE_NEON)
const Backend* neon_backend_impl();
#endif

const std::vector<const Backend*>& available_backends() {
    static const std::vector<const Backend*> list = [] {
        std::vector<const Backend*> v;
        v.push_back(&scalar_backend());
#if defined(HEATREC_HAVE_AVX2)
        if (__builtin_cpu_supports("avx2")) v.push_back(avx2_backend_impl());
#endif
#if defined(HEATREC_HAVE_NEON)
        v.push_back(neon_backend_impl());
#endif
        return v;
    }();
    return list;
}

namespace {

const Backend* find_backend(std::string_view name) {
    for (const Backend* b : available_backends())
        if (name == b->name) return b;
    return nullptr;
}

const Backend* select_default() {
    if (const char* env = std::getenv("HEATREC_KERNELS")) {
        if (const Backend* b = find_backend(env)) return b;
        std::fprintf(stderr,
                     "heatrec: HEATREC_KERNELS=%s not available, using default\n",
                     env);
    }
    return available_backends().back();
}

const Backend*& active_slot() {
    static const Backend* slot = select_default();
    return slot;
}

} // namespace

const Backend& active_backend() { return *active_slot(); }

void set_active_backend(std::string_view name) {
    const Backend* b = find_backend(name);
    if (!b)
        throw std::invalid_argument("unknown kernel backend: " + std::string(name));
    active_slot() = b;
}

} // namespace heatrec::kernels

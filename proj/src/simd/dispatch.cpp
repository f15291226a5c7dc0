#include "zeon/simd.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace zeon::simd {

namespace {

Isa detect() {
#if defined(ZEON_HAVE_AVX2)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) {
        return Isa::Avx2;
    }
#endif
#if defined(ZEON_HAVE_NEON)
    return Isa::Neon;
#endif
    return Isa::Scalar;
}

std::atomic<const KernelTable*>& active_table() {
    static std::atomic<const KernelTable*> table{&kernels_for(detect())};
    return table;
}

std::atomic<Isa>& active_tag() {
    static std::atomic<Isa> tag{detect()};
    return tag;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(ZEON_HAVE_AVX2)
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(ZEON_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (isa_available(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

const KernelTable& kernels_for(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("SIMD variant not available: " + std::string(isa_name(isa)));
    }
    switch (isa) {
#if defined(ZEON_HAVE_AVX2)
    case Isa::Avx2: return detail::avx2_kernels();
#endif
#if defined(ZEON_HAVE_NEON)
    case Isa::Neon: return detail::neon_kernels();
#endif
    default: return detail::scalar_kernels();
    }
}

Isa active_isa() { return active_tag().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
    const KernelTable& table = kernels_for(isa);
    active_table().store(&table, std::memory_order_relaxed);
    active_tag().store(isa, std::memory_order_relaxed);
}

void reset_isa() { set_isa(detect()); }

const KernelTable& kernels() { return *active_table().load(std::memory_order_relaxed); }

}  // namespace zeon::simd

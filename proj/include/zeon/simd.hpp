#pragma once

// Data-parallel word kernels behind the algebra's inner loops.
//
// Monomial supports are bitsets split into 64-bit words. Multiplying one term
// against a block of terms, and scanning a block of terms for dominating
// ones, reduce to word-wise AND/OR/compare over a column of words taken from
// the block. Each kernel has a scalar reference and vector variants; the
// variant is chosen once at startup from the CPU and can be pinned for tests.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace zeon::simd {

enum class Isa { Scalar, Avx2, Neon };

/// Raw kernel signatures. All arrays have length n.
struct KernelTable {
    /// out[t] = a | b[t];  dead[t] |= ((a & conflict & b[t]) != 0)
    void (*combine)(std::uint64_t a, std::uint64_t conflict, const std::uint64_t* b,
                    std::uint64_t* out, std::uint8_t* dead, std::size_t n);
    /// miss[t] |= ((w[t] & q) != q)
    void (*mark_not_superset)(std::uint64_t q, const std::uint64_t* w, std::uint8_t* miss,
                              std::size_t n);
    /// miss[t] |= ((w[t] & ~q) != 0)
    void (*mark_not_subset)(std::uint64_t q, const std::uint64_t* w, std::uint8_t* miss,
                            std::size_t n);
};

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
std::vector<Isa> available_isas();

/// Best available variant unless pinned with set_isa().
Isa active_isa();
/// Throws std::invalid_argument if the variant is not available on this CPU.
void set_isa(Isa isa);
/// Restores automatic selection.
void reset_isa();

const KernelTable& kernels();
const KernelTable& kernels_for(Isa isa);

inline void combine(std::uint64_t a, std::uint64_t conflict, std::span<const std::uint64_t> b,
                    std::span<std::uint64_t> out, std::span<std::uint8_t> dead) {
    kernels().combine(a, conflict, b.data(), out.data(), dead.data(), b.size());
}

inline void mark_not_superset(std::uint64_t q, std::span<const std::uint64_t> w,
                              std::span<std::uint8_t> miss) {
    kernels().mark_not_superset(q, w.data(), miss.data(), w.size());
}

inline void mark_not_subset(std::uint64_t q, std::span<const std::uint64_t> w,
                            std::span<std::uint8_t> miss) {
    kernels().mark_not_subset(q, w.data(), miss.data(), w.size());
}

namespace detail {
const KernelTable& scalar_kernels();
#if defined(ZEON_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif
#if defined(ZEON_HAVE_NEON)
const KernelTable& neon_kernels();
#endif
}  // namespace detail

}  // namespace zeon::simd

#include "zeon/simd.hpp"

#include <immintrin.h>

namespace zeon::simd::detail {

namespace {

// Lane l of a 4x64 compare result, as a 0/1 byte, via the sign-bit mask.
inline int lane_mask(__m256i cmp) { return _mm256_movemask_pd(_mm256_castsi256_pd(cmp)); }

inline void or_flags(std::uint8_t* flags, int zero_lanes_mask) {
    // bit l set means lane l compared equal to zero, i.e. not flagged
    flags[0] |= static_cast<std::uint8_t>(((zero_lanes_mask >> 0) & 1) ^ 1);
    flags[1] |= static_cast<std::uint8_t>(((zero_lanes_mask >> 1) & 1) ^ 1);
    flags[2] |= static_cast<std::uint8_t>(((zero_lanes_mask >> 2) & 1) ^ 1);
    flags[3] |= static_cast<std::uint8_t>(((zero_lanes_mask >> 3) & 1) ^ 1);
}

void combine_avx2(std::uint64_t a, std::uint64_t conflict, const std::uint64_t* b,
                  std::uint64_t* out, std::uint8_t* dead, std::size_t n) {
    const std::uint64_t hot = a & conflict;
    const __m256i va = _mm256_set1_epi64x(static_cast<long long>(a));
    const __m256i vhot = _mm256_set1_epi64x(static_cast<long long>(hot));
    const __m256i zero = _mm256_setzero_si256();
    const std::size_t body = n & ~std::size_t{3};
    std::size_t t = 0;
    for (; t < body; t += 4) {
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + t));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + t), _mm256_or_si256(va, vb));
        const __m256i clash = _mm256_and_si256(vhot, vb);
        or_flags(dead + t, lane_mask(_mm256_cmpeq_epi64(clash, zero)));
    }
    for (; t < n; ++t) {
        out[t] = a | b[t];
        dead[t] |= static_cast<std::uint8_t>((hot & b[t]) != 0);
    }
}

void mark_not_superset_avx2(std::uint64_t q, const std::uint64_t* w, std::uint8_t* miss,
                            std::size_t n) {
    const __m256i vq = _mm256_set1_epi64x(static_cast<long long>(q));
    const __m256i zero = _mm256_setzero_si256();
    const std::size_t body = n & ~std::size_t{3};
    std::size_t t = 0;
    for (; t < body; t += 4) {
        const __m256i vw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + t));
        // bits of q missing from w[t]
        const __m256i missing = _mm256_andnot_si256(vw, vq);
        or_flags(miss + t, lane_mask(_mm256_cmpeq_epi64(missing, zero)));
    }
    for (; t < n; ++t) {
        miss[t] |= static_cast<std::uint8_t>((w[t] & q) != q);
    }
}

void mark_not_subset_avx2(std::uint64_t q, const std::uint64_t* w, std::uint8_t* miss,
                          std::size_t n) {
    const __m256i vq = _mm256_set1_epi64x(static_cast<long long>(q));
    const __m256i zero = _mm256_setzero_si256();
    const std::size_t body = n & ~std::size_t{3};
    std::size_t t = 0;
    for (; t < body; t += 4) {
        const __m256i vw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + t));
        const __m256i extra = _mm256_andnot_si256(vq, vw);
        or_flags(miss + t, lane_mask(_mm256_cmpeq_epi64(extra, zero)));
    }
    for (; t < n; ++t) {
        miss[t] |= static_cast<std::uint8_t>((w[t] & ~q) != 0);
    }
}

}  // namespace

const KernelTable& avx2_kernels() {
    static const KernelTable table{combine_avx2, mark_not_superset_avx2, mark_not_subset_avx2};
    return table;
}

}  // namespace zeon::simd::detail

#include "zeon/simd.hpp"

#include <arm_neon.h>

namespace zeon::simd::detail {

namespace {

// Two 64-bit lanes per register. A lane of `nonzero` is all-ones when the
// corresponding input lane had any bit set.
inline uint64x2_t nonzero_lanes(uint64x2_t v) { return vtstq_u64(v, v); }

inline void or_flags(std::uint8_t* flags, uint64x2_t set) {
    flags[0] |= static_cast<std::uint8_t>(vgetq_lane_u64(set, 0) & 1);
    flags[1] |= static_cast<std::uint8_t>(vgetq_lane_u64(set, 1) & 1);
}

void combine_neon(std::uint64_t a, std::uint64_t conflict, const std::uint64_t* b,
                  std::uint64_t* out, std::uint8_t* dead, std::size_t n) {
    const std::uint64_t hot = a & conflict;
    const uint64x2_t va = vdupq_n_u64(a);
    const uint64x2_t vhot = vdupq_n_u64(hot);
    const std::size_t body = n & ~std::size_t{1};
    std::size_t t = 0;
    for (; t < body; t += 2) {
        const uint64x2_t vb = vld1q_u64(b + t);
        vst1q_u64(out + t, vorrq_u64(va, vb));
        or_flags(dead + t, vtstq_u64(vhot, vb));
    }
    for (; t < n; ++t) {
        out[t] = a | b[t];
        dead[t] |= static_cast<std::uint8_t>((hot & b[t]) != 0);
    }
}

void mark_not_superset_neon(std::uint64_t q, const std::uint64_t* w, std::uint8_t* miss,
                            std::size_t n) {
    const uint64x2_t vq = vdupq_n_u64(q);
    const std::size_t body = n & ~std::size_t{1};
    std::size_t t = 0;
    for (; t < body; t += 2) {
        const uint64x2_t vw = vld1q_u64(w + t);
        // q & ~w: bits of q missing from w
        or_flags(miss + t, nonzero_lanes(vbicq_u64(vq, vw)));
    }
    for (; t < n; ++t) {
        miss[t] |= static_cast<std::uint8_t>((w[t] & q) != q);
    }
}

void mark_not_subset_neon(std::uint64_t q, const std::uint64_t* w, std::uint8_t* miss,
                          std::size_t n) {
    const uint64x2_t vq = vdupq_n_u64(q);
    const std::size_t body = n & ~std::size_t{1};
    std::size_t t = 0;
    for (; t < body; t += 2) {
        const uint64x2_t vw = vld1q_u64(w + t);
        or_flags(miss + t, nonzero_lanes(vbicq_u64(vw, vq)));
    }
    for (; t < n; ++t) {
        miss[t] |= static_cast<std::uint8_t>((w[t] & ~q) != 0);
    }
}

}  // namespace

const KernelTable& neon_kernels() {
    static const KernelTable table{combine_neon, mark_not_superset_neon, mark_not_subset_neon};
    return table;
}

}  // namespace zeon::simd::detail

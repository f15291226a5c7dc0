#include "zeon/simd.hpp"

namespace zeon::simd::detail {

namespace {

void combine_scalar(std::uint64_t a, std::uint64_t conflict, const std::uint64_t* b,
                    std::uint64_t* out, std::uint8_t* dead, std::size_t n) {
    const std::uint64_t hot = a & conflict;
    for (std::size_t t = 0; t < n; ++t) {
        out[t] = a | b[t];
        dead[t] |= static_cast<std::uint8_t>((hot & b[t]) != 0);
    }
}

void mark_not_superset_scalar(std::uint64_t q, const std::uint64_t* w, std::uint8_t* miss,
                              std::size_t n) {
    for (std::size_t t = 0; t < n; ++t) {
        miss[t] |= static_cast<std::uint8_t>((w[t] & q) != q);
    }
}

void mark_not_subset_scalar(std::uint64_t q, const std::uint64_t* w, std::uint8_t* miss,
                            std::size_t n) {
    for (std::size_t t = 0; t < n; ++t) {
        miss[t] |= static_cast<std::uint8_t>((w[t] & ~q) != 0);
    }
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{combine_scalar, mark_not_superset_scalar,
                                   mark_not_subset_scalar};
    return table;
}

}  // namespace zeon::simd::detail

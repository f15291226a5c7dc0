#include <doctest.h>

#include <random>
#include <vector>

#include "zeon/algebra.hpp"
#include "zeon/simd.hpp"

namespace simd = zeon::simd;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) {
        // sparse words so that subset/superset relations actually occur
        x = rng() & rng() & rng();
    }
    return w;
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("scalar variant is always available and first") {
    const auto isas = simd::available_isas();
    REQUIRE_FALSE(isas.empty());
    CHECK(isas.front() == simd::Isa::Scalar);
    CHECK(simd::isa_available(simd::Isa::Scalar));
    CHECK(simd::isa_name(simd::Isa::Scalar) == "scalar");
}

TEST_CASE("every available variant matches the scalar reference") {
    std::mt19937_64 rng(11);
    const auto& ref = simd::kernels_for(simd::Isa::Scalar);
    for (simd::Isa isa : simd::available_isas()) {
        CAPTURE(simd::isa_name(isa));
        const auto& k = simd::kernels_for(isa);
        for (std::size_t n = 0; n < 70; ++n) {
            for (int rep = 0; rep < 20; ++rep) {
                const auto b = random_words(rng, n);
                const std::uint64_t a = rng() & rng();
                const std::uint64_t conflict = rng();
                std::vector<std::uint64_t> out_ref(n), out(n);
                std::vector<std::uint8_t> dead_ref(n), dead(n);
                for (std::size_t t = 0; t < n; ++t) {
                    dead_ref[t] = dead[t] = static_cast<std::uint8_t>(rng() % 2);
                }
                ref.combine(a, conflict, b.data(), out_ref.data(), dead_ref.data(), n);
                k.combine(a, conflict, b.data(), out.data(), dead.data(), n);
                CHECK(out == out_ref);
                CHECK(dead == dead_ref);

                const std::uint64_t q = rng() & rng() & rng();
                std::vector<std::uint8_t> miss_ref(n), miss(n);
                ref.mark_not_superset(q, b.data(), miss_ref.data(), n);
                k.mark_not_superset(q, b.data(), miss.data(), n);
                CHECK(miss == miss_ref);

                std::fill(miss_ref.begin(), miss_ref.end(), 0);
                std::fill(miss.begin(), miss.end(), 0);
                ref.mark_not_subset(q, b.data(), miss_ref.data(), n);
                k.mark_not_subset(q, b.data(), miss.data(), n);
                CHECK(miss == miss_ref);
            }
        }
    }
}

TEST_CASE("scalar kernels follow their definitions") {
    const auto& k = simd::kernels_for(simd::Isa::Scalar);
    const std::vector<std::uint64_t> b{0b0011, 0b0100, 0b1100};
    std::vector<std::uint64_t> out(3);
    std::vector<std::uint8_t> dead(3, 0);
    k.combine(0b0001, 0b0001, b.data(), out.data(), dead.data(), 3);
    CHECK(out == std::vector<std::uint64_t>{0b0011, 0b0101, 0b1101});
    CHECK(dead == std::vector<std::uint8_t>{1, 0, 0});

    std::vector<std::uint8_t> miss(3, 0);
    k.mark_not_superset(0b0100, b.data(), miss.data(), 3);
    CHECK(miss == std::vector<std::uint8_t>{1, 0, 0});
    std::fill(miss.begin(), miss.end(), 0);
    k.mark_not_subset(0b0111, b.data(), miss.data(), 3);
    CHECK(miss == std::vector<std::uint8_t>{0, 0, 1});
}

TEST_CASE("pinning a variant changes the active table") {
    for (simd::Isa isa : simd::available_isas()) {
        simd::set_isa(isa);
        CHECK(simd::active_isa() == isa);
    }
    simd::reset_isa();
    CHECK(simd::active_isa() == simd::available_isas().back());
    for (simd::Isa isa : {simd::Isa::Avx2, simd::Isa::Neon}) {
        if (!simd::isa_available(isa)) {
            CHECK_THROWS_AS(simd::set_isa(isa), std::invalid_argument);
        }
    }
}

TEST_CASE("algebra products agree across variants") {
    zeon::SignatureBuilder b;
    b.add_block(70, zeon::GeneratorRule::nilpotent(2), "z");
    b.add_block(10, zeon::GeneratorRule::idempotent(), "e");
    const auto ctx = b.build();
    std::mt19937_64 rng(5);
    auto random_element = [&] {
        std::vector<zeon::Element::Term> terms;
        for (int t = 0; t < 40; ++t) {
            std::vector<zeon::GenId> ids;
            for (int g = 0; g < 3; ++g) {
                ids.push_back(static_cast<zeon::GenId>(rng() % 80));
            }
            terms.emplace_back(zeon::Monomial::blade(ids), zeon::Rational(static_cast<int>(rng() % 7) - 3));
        }
        return zeon::Element::from_terms(ctx, std::move(terms));
    };
    for (int rep = 0; rep < 20; ++rep) {
        const auto x = random_element();
        const auto y = random_element();
        const auto expected = zeon::mul_reference(x, y);
        for (simd::Isa isa : simd::available_isas()) {
            simd::set_isa(isa);
            CHECK(zeon::mul(x, y) == expected);
        }
        simd::reset_isa();
    }
}

}

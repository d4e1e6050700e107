#include <doctest.h>

#include <random>
#include <vector>

#include "ltlsync/kernels.hpp"

using namespace ltlsync;

TEST_CASE("kernels: vector variants match the scalar reference") {
    std::mt19937 rng(5);
    for (int round = 0; round < 400; ++round) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 70)(rng);
        const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 90)(rng);
        std::vector<std::uint32_t> column(n), index(m);
        for (auto& c : column) c = rng() % 1000;
        for (auto& i : index) i = static_cast<std::uint32_t>(rng() % n);
        std::vector<std::uint32_t> a(m), b(m), c(m);
        kernels::scalar::gather(column, index, a);
        kernels::gather(column, index, c);
        CHECK(a == c);
        const std::uint32_t probe = rng() % 1000;
        CHECK(kernels::contains(column, probe) == kernels::scalar::contains(column, probe));
        if (kernels::avx2::available()) {
            kernels::avx2::gather(column, index, b);
            CHECK(a == b);
            CHECK(kernels::avx2::contains(column, probe) == kernels::scalar::contains(column, probe));
            CHECK(kernels::avx2::contains(index, 0xffffffffU) == kernels::scalar::contains(index, 0xffffffffU));
        }
    }
}

TEST_CASE("kernels: selection") {
    const kernels::Isa before = kernels::active_isa();
    CHECK(kernels::select_isa(kernels::Isa::scalar) == kernels::Isa::scalar);
    CHECK(kernels::active_isa() == kernels::Isa::scalar);
    const kernels::Isa got = kernels::select_isa(kernels::Isa::avx2);
    CHECK((got == kernels::Isa::avx2) == kernels::avx2::available());
    kernels::select_isa(before);
    CHECK(kernels::isa_name(kernels::Isa::scalar) == "scalar");
}

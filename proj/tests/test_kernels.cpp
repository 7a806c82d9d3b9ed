#include <doctest.h>

#include "oracles.hpp"

#include <kgeo/kernels.hpp>
#include <kgeo/walks.hpp>

#include <random>

using namespace kgeo;

namespace {

struct AlignedRow {
    explicit AlignedRow(std::size_t len) : data(static_cast<std::uint8_t *>(::operator new[](len, std::align_val_t{32}))), len(len) {}
    ~AlignedRow() { ::operator delete[](data, std::align_val_t{32}); }
    AlignedRow(const AlignedRow &) = delete;
    auto operator=(const AlignedRow &) -> AlignedRow & = delete;
    std::uint8_t * data;
    std::size_t len;
};

void fill_random(std::mt19937 & rng, AlignedRow & row)
{
    // Bias towards the saturation boundary.
    std::uniform_int_distribution<int> pick(0, 3), any(0, 255);
    for (std::size_t i = 0; i < row.len; ++i) {
        switch (pick(rng)) {
        case 0: row.data[i] = 0; break;
        case 1: row.data[i] = static_cast<std::uint8_t>(250 + any(rng) % 6); break;
        default: row.data[i] = static_cast<std::uint8_t>(any(rng)); break;
        }
    }
}

} // namespace

TEST_CASE("scalar kernel is always available and listed first")
{
    auto ops = kernels::available_ops();
    REQUIRE(! ops.empty());
    CHECK(ops.front()->isa == kernels::Isa::scalar);
    CHECK(kernels::padded_length(1) == 32);
    CHECK(kernels::padded_length(32) == 32);
    CHECK(kernels::padded_length(33) == 64);
    MESSAGE("active kernel: " << kernels::isa_name(kernels::active_ops().isa));
}

TEST_CASE("every SIMD row kernel matches the scalar reference")
{
    std::mt19937 rng(12345);
    const auto & ref = kernels::scalar_ops();
    for (auto * ops : kernels::available_ops()) {
        CAPTURE(kernels::isa_name(ops->isa));
        for (std::size_t len : {32u, 64u, 96u, 512u}) {
            for (int trial = 0; trial < 200; ++trial) {
                AlignedRow a(len), b(len), x(len), y(len);
                fill_random(rng, a);
                fill_random(rng, b);
                std::copy(a.data, a.data + len, x.data);
                std::copy(a.data, a.data + len, y.data);

                ref.add_saturate(x.data, b.data, len);
                ops->add_saturate(y.data, b.data, len);
                REQUIRE(std::equal(x.data, x.data + len, y.data));

                ref.sum_saturate(x.data, a.data, b.data, len);
                ops->sum_saturate(y.data, a.data, b.data, len);
                REQUIRE(std::equal(x.data, x.data + len, y.data));

                REQUIRE(ref.max_value(a.data, len) == ops->max_value(a.data, len));
                REQUIRE(ref.count_nonzero(a.data, len) == ops->count_nonzero(a.data, len));
            }
        }
    }
}

TEST_CASE("saturating add clamps at 255")
{
    for (auto * ops : kernels::available_ops()) {
        AlignedRow a(32), b(32);
        std::fill(a.data, a.data + 32, std::uint8_t{200});
        std::fill(b.data, b.data + 32, std::uint8_t{100});
        ops->add_saturate(a.data, b.data, 32);
        CHECK(ops->max_value(a.data, 32) == 255);
        CHECK(a.data[17] == 255);
    }
}

TEST_CASE("walk counter agrees across kernels and with explicit walk counts")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 40;
        auto g = oracle::random_digraph(rng, n, 0.08 + 0.3 * (rng() % 3) / 3.0, true);
        unsigned k = 1 + rng() % 4;
        auto out_of = [&] (std::size_t u) { return g.out(static_cast<Vertex>(u)); };

        WalkCounter ref(n, kernels::scalar_ops());
        ref.run(k, out_of);

        // explicit integer walk counts, capped like the kernel
        std::vector<std::vector<unsigned>> total(n, std::vector<unsigned>(n, 0)), layer = total;
        for (std::size_t u = 0; u < n; ++u)
            layer[u][u] = total[u][u] = 1;
        for (unsigned s = 1; s <= k; ++s) {
            std::vector<std::vector<unsigned>> next(n, std::vector<unsigned>(n, 0));
            for (std::size_t u = 0; u < n; ++u)
                for (auto v : g.out(static_cast<Vertex>(u)))
                    for (std::size_t w = 0; w < n; ++w)
                        next[u][w] = std::min(255u, next[u][w] + layer[v][w]);
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t w = 0; w < n; ++w)
                    total[u][w] = std::min(255u, total[u][w] + next[u][w]);
            layer = next;
        }
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t w = 0; w < n; ++w)
                REQUIRE(ref.total(u, w) == total[u][w]);

        for (auto * ops : kernels::available_ops()) {
            WalkCounter simd(n, *ops);
            simd.run(k, out_of);
            REQUIRE(simd.geodetic() == ref.geodetic());
            for (std::size_t u = 0; u < n; ++u) {
                REQUIRE(simd.reach_count(u) == ref.reach_count(u));
                REQUIRE(std::equal(simd.total_row(u), simd.total_row(u) + n, ref.total_row(u)));
            }
        }
    }
}

TEST_CASE("walk counter is reusable")
{
    auto cycle = directed_cycle(5);
    auto complete = complete_digraph(5);
    WalkCounter counter(5);
    counter.run(3, [&] (std::size_t u) { return complete.out(static_cast<Vertex>(u)); });
    CHECK_FALSE(counter.geodetic());
    counter.run(3, [&] (std::size_t u) { return cycle.out(static_cast<Vertex>(u)); });
    CHECK(counter.geodetic());
    CHECK(counter.reach_count(0) == 4);
}

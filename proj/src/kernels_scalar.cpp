#include <kgeo/kernels.hpp>

#include <algorithm>

namespace kgeo::kernels {

namespace {

void add_saturate(std::uint8_t * dst, const std::uint8_t * src, std::size_t len)
{
    for (std::size_t i = 0; i < len; ++i) {
        unsigned s = unsigned{dst[i]} + src[i];
        dst[i] = static_cast<std::uint8_t>(std::min(s, 255u));
    }
}

void sum_saturate(std::uint8_t * dst, const std::uint8_t * a, const std::uint8_t * b, std::size_t len)
{
    for (std::size_t i = 0; i < len; ++i) {
        unsigned s = unsigned{a[i]} + b[i];
        dst[i] = static_cast<std::uint8_t>(std::min(s, 255u));
    }
}

auto max_value(const std::uint8_t * row, std::size_t len) -> std::uint8_t
{
    std::uint8_t m = 0;
    for (std::size_t i = 0; i < len; ++i)
        m = std::max(m, row[i]);
    return m;
}

auto count_nonzero(const std::uint8_t * row, std::size_t len) -> std::size_t
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < len; ++i)
        c += row[i] != 0;
    return c;
}

constexpr RowOps ops{Isa::scalar, add_saturate, sum_saturate, max_value, count_nonzero};

} // namespace

auto scalar_ops() -> const RowOps & { return ops; }

} // namespace kgeo::kernels

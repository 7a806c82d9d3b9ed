#pragma once

// Row kernels over padded byte vectors used by the walk counter. Every row
// length passed in is a multiple of row_align and the buffers are
// row_align-byte aligned; padding bytes are expected to be zero.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace kgeo::kernels {

inline constexpr std::size_t row_align = 32;

inline constexpr auto padded_length(std::size_t n) -> std::size_t
{
    return (n + row_align - 1) / row_align * row_align;
}

enum class Isa { scalar, avx2, neon };

auto isa_name(Isa isa) -> std::string_view;

struct RowOps {
    Isa isa;
    // dst[i] = min(255, dst[i] + src[i])
    void (*add_saturate)(std::uint8_t * dst, const std::uint8_t * src, std::size_t len);
    // dst[i] = min(255, a[i] + b[i])
    void (*sum_saturate)(std::uint8_t * dst, const std::uint8_t * a, const std::uint8_t * b, std::size_t len);
    auto (*max_value)(const std::uint8_t * row, std::size_t len) -> std::uint8_t;
    auto (*count_nonzero)(const std::uint8_t * row, std::size_t len) -> std::size_t;
};

auto scalar_ops() -> const RowOps &;

// nullptr when the variant was not compiled in or the CPU lacks it.
auto avx2_ops() -> const RowOps *;
auto neon_ops() -> const RowOps *;

// Best variant supported by the running CPU. Chosen once, on first call.
auto active_ops() -> const RowOps &;

// Every variant usable on this machine, scalar first.
auto available_ops() -> std::vector<const RowOps *>;

} // namespace kgeo::kernels

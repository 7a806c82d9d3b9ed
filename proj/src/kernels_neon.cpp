#include <kgeo/kernels.hpp>

#include <arm_neon.h>

namespace kgeo::kernels::neon_impl {

namespace {

void add_saturate(std::uint8_t * dst, const std::uint8_t * src, std::size_t len)
{
    for (std::size_t i = 0; i < len; i += 16)
        vst1q_u8(dst + i, vqaddq_u8(vld1q_u8(dst + i), vld1q_u8(src + i)));
}

void sum_saturate(std::uint8_t * dst, const std::uint8_t * a, const std::uint8_t * b, std::size_t len)
{
    for (std::size_t i = 0; i < len; i += 16)
        vst1q_u8(dst + i, vqaddq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
}

auto max_value(const std::uint8_t * row, std::size_t len) -> std::uint8_t
{
    uint8x16_t m = vdupq_n_u8(0);
    for (std::size_t i = 0; i < len; i += 16)
        m = vmaxq_u8(m, vld1q_u8(row + i));
    return vmaxvq_u8(m);
}

auto count_nonzero(const std::uint8_t * row, std::size_t len) -> std::size_t
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < len; i += 16) {
        uint8x16_t nz = vtstq_u8(vld1q_u8(row + i), vld1q_u8(row + i));
        c += vaddvq_u8(vshrq_n_u8(nz, 7));
    }
    return c;
}

} // namespace

extern const RowOps ops;
constinit const RowOps ops{Isa::neon, add_saturate, sum_saturate, max_value, count_nonzero};

} // namespace kgeo::kernels::neon_impl

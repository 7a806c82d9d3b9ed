// Compiled with -mavx2; only reached through avx2_ops() after a CPU check.

#include <kgeo/kernels.hpp>

#include <bit>
#include <immintrin.h>

namespace kgeo::kernels::avx2_impl {

namespace {

void add_saturate(std::uint8_t * dst, const std::uint8_t * src, std::size_t len)
{
    for (std::size_t i = 0; i < len; i += 32) {
        __m256i d = _mm256_load_si256(reinterpret_cast<const __m256i *>(dst + i));
        __m256i s = _mm256_load_si256(reinterpret_cast<const __m256i *>(src + i));
        _mm256_store_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_adds_epu8(d, s));
    }
}

void sum_saturate(std::uint8_t * dst, const std::uint8_t * a, const std::uint8_t * b, std::size_t len)
{
    for (std::size_t i = 0; i < len; i += 32) {
        __m256i x = _mm256_load_si256(reinterpret_cast<const __m256i *>(a + i));
        __m256i y = _mm256_load_si256(reinterpret_cast<const __m256i *>(b + i));
        _mm256_store_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_adds_epu8(x, y));
    }
}

auto max_value(const std::uint8_t * row, std::size_t len) -> std::uint8_t
{
    __m256i m = _mm256_setzero_si256();
    for (std::size_t i = 0; i < len; i += 32)
        m = _mm256_max_epu8(m, _mm256_load_si256(reinterpret_cast<const __m256i *>(row + i)));
    __m128i h = _mm_max_epu8(_mm256_castsi256_si128(m), _mm256_extracti128_si256(m, 1));
    h = _mm_max_epu8(h, _mm_srli_si128(h, 8));
    h = _mm_max_epu8(h, _mm_srli_si128(h, 4));
    h = _mm_max_epu8(h, _mm_srli_si128(h, 2));
    h = _mm_max_epu8(h, _mm_srli_si128(h, 1));
    return static_cast<std::uint8_t>(_mm_cvtsi128_si32(h) & 0xff);
}

auto count_nonzero(const std::uint8_t * row, std::size_t len) -> std::size_t
{
    const __m256i zero = _mm256_setzero_si256();
    std::size_t c = 0;
    for (std::size_t i = 0; i < len; i += 32) {
        __m256i v = _mm256_load_si256(reinterpret_cast<const __m256i *>(row + i));
        auto zeros = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
        c += 32 - static_cast<std::size_t>(std::popcount(zeros));
    }
    return c;
}

} // namespace

extern const RowOps ops;
constinit const RowOps ops{Isa::avx2, add_saturate, sum_saturate, max_value, count_nonzero};

} // namespace kgeo::kernels::avx2_impl

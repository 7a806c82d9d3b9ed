#include <kgeo/walks.hpp>

#include <cstdlib>
#include <new>

namespace kgeo {

void WalkCounter::AlignedDelete::operator()(std::uint8_t * p) const
{
    ::operator delete[](p, std::align_val_t{kernels::row_align});
}

WalkCounter::WalkCounter(std::size_t n, const kernels::RowOps & ops) :
    _n(n), _stride(kernels::padded_length(n ? n : 1)), _ops(&ops)
{
    const std::size_t bytes = 3 * _n * _stride + kernels::row_align;
    _storage.reset(static_cast<std::uint8_t *>(::operator new[](bytes, std::align_val_t{kernels::row_align})));
    _layers = _storage.get();
    _total = _layers + 2 * _n * _stride;
    std::fill(_layers, _layers + bytes, std::uint8_t{0});
}

auto WalkCounter::geodetic() const -> bool
{
    return _ops->max_value(_total, _n * _stride) <= 1;
}

auto WalkCounter::reach_count(std::size_t u) const -> std::size_t
{
    return _ops->count_nonzero(total_row(u), _stride);
}

} // namespace kgeo

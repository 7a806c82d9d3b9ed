#pragma once

#include <kgeo/kernels.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>

namespace kgeo {

// Counts walks of length 0..k between all ordered vertex pairs using the
// recurrence W_i(u) = sum over v in N+(u) of W_{i-1}(v), one padded byte row
// per source. Counts saturate at 255, which is all that geodecity needs.
// Reusable across calls on digraphs of the same order.
class WalkCounter {
public:
    explicit WalkCounter(std::size_t n, const kernels::RowOps & ops = kernels::active_ops());

    WalkCounter(const WalkCounter &) = delete;
    auto operator=(const WalkCounter &) -> WalkCounter & = delete;
    WalkCounter(WalkCounter &&) noexcept = default;
    auto operator=(WalkCounter &&) noexcept -> WalkCounter & = default;

    // out_of(u) must return a range of out-neighbours of u. After the call,
    // total(u, w) is the number of walks of length <= k from u to w, with
    // the length-0 walk counted on the diagonal.
    template <typename OutOf>
    void run(unsigned k, OutOf && out_of);

    // True iff every total entry is <= 1, i.e. the digraph seen by the last
    // run() is k-geodetic.
    auto geodetic() const -> bool;

    auto total(std::size_t u, std::size_t w) const -> std::uint8_t { return _total[u * _stride + w]; }
    auto total_row(std::size_t u) const -> const std::uint8_t * { return _total + u * _stride; }

    // Number of w with total(u, w) > 0, i.e. |T_k(u)|.
    auto reach_count(std::size_t u) const -> std::size_t;

    auto order() const -> std::size_t { return _n; }
    auto ops() const -> const kernels::RowOps & { return *_ops; }

private:
    struct AlignedDelete {
        void operator()(std::uint8_t * p) const;
    };

    auto layer(int which) -> std::uint8_t * { return _layers + static_cast<std::size_t>(which) * _n * _stride; }

    std::size_t _n;
    std::size_t _stride;
    const kernels::RowOps * _ops;
    std::unique_ptr<std::uint8_t[], AlignedDelete> _storage;
    std::uint8_t * _layers = nullptr;
    std::uint8_t * _total = nullptr;
};

template <typename OutOf>
void WalkCounter::run(unsigned k, OutOf && out_of)
{
    const std::size_t bytes = _n * _stride;
    std::uint8_t * prev = layer(0);
    std::uint8_t * next = layer(1);
    std::fill(prev, prev + bytes, std::uint8_t{0});
    std::fill(_total, _total + bytes, std::uint8_t{0});
    for (std::size_t u = 0; u < _n; ++u) {
        prev[u * _stride + u] = 1;
        _total[u * _stride + u] = 1;
    }

    for (unsigned step = 1; step <= k; ++step) {
        std::fill(next, next + bytes, std::uint8_t{0});
        for (std::size_t u = 0; u < _n; ++u) {
            std::uint8_t * row = next + u * _stride;
            for (auto v : out_of(u))
                _ops->add_saturate(row, prev + static_cast<std::size_t>(v) * _stride, _stride);
        }
        _ops->add_saturate(_total, next, bytes);
        std::swap(prev, next);
    }
}

} // namespace kgeo

#include <kgeo/kernels.hpp>

namespace kgeo::kernels {

#if defined(KGEO_HAVE_AVX2)
namespace avx2_impl {
extern const RowOps ops;
}
#endif
#if defined(KGEO_HAVE_NEON)
namespace neon_impl {
extern const RowOps ops;
}
#endif

auto isa_name(Isa isa) -> std::string_view
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

auto avx2_ops() -> const RowOps *
{
#if defined(KGEO_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &avx2_impl::ops : nullptr;
#else
    return nullptr;
#endif
}

auto neon_ops() -> const RowOps *
{
#if defined(KGEO_HAVE_NEON)
    // Advanced SIMD is mandatory on AArch64.
    return &neon_impl::ops;
#else
    return nullptr;
#endif
}

auto active_ops() -> const RowOps &
{
    static const RowOps & chosen = [] () -> const RowOps & {
        if (auto p = avx2_ops())
            return *p;
        if (auto p = neon_ops())
            return *p;
        return scalar_ops();
    }();
    return chosen;
}

auto available_ops() -> std::vector<const RowOps *>
{
    std::vector<const RowOps *> result{&scalar_ops()};
    if (auto p = avx2_ops())
        result.push_back(p);
    if (auto p = neon_ops())
        result.push_back(p);
    return result;
}

} // namespace kgeo::kernels

// NEON variants of the F_p row kernels, same Barrett scheme as the AVX2
// translation unit with 4-wide u32 lanes. NEON is baseline on aarch64 so the
// only runtime question is the p < 2^15 gate.

#include "modcohom/gfp_kernels.hpp"

#if defined(__ARM_NEON) || defined(__ARM_NEON__)

#include <arm_neon.h>

namespace modcohom {
namespace {

constexpr std::uint32_t kMaxSimdPrime = 1u << 15;

inline uint32x4_t barrett_mod(uint32x4_t x, uint32x4_t mv, uint32x4_t pv) {
    uint64x2_t lo = vmull_u32(vget_low_u32(x), vget_low_u32(mv));
    uint64x2_t hi = vmull_u32(vget_high_u32(x), vget_high_u32(mv));
    uint32x4_t q = vcombine_u32(vshrn_n_u64(lo, 32), vshrn_n_u64(hi, 32));
    uint32x4_t r = vsubq_u32(x, vmulq_u32(q, pv));
    return vminq_u32(r, vsubq_u32(r, pv));
}

void axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
               std::size_t n, std::uint32_t p) {
    if (p >= kMaxSimdPrime) {
        scalar_kernels().axpy(dst, src, c, n, p);
        return;
    }
    const std::uint32_t m = static_cast<std::uint32_t>((static_cast<std::uint64_t>(1) << 32) / p);
    const uint32x4_t cv = vdupq_n_u32(c);
    const uint32x4_t pv = vdupq_n_u32(p);
    const uint32x4_t mv = vdupq_n_u32(m);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t d = vld1q_u32(dst + i);
        uint32x4_t s = vld1q_u32(src + i);
        uint32x4_t x = vmlaq_u32(d, s, cv);
        vst1q_u32(dst + i, barrett_mod(x, mv, pv));
    }
    if (i < n) scalar_kernels().axpy(dst + i, src + i, c, n - i, p);
}

void scale_neon(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
    if (p >= kMaxSimdPrime) {
        scalar_kernels().scale(dst, c, n, p);
        return;
    }
    const std::uint32_t m = static_cast<std::uint32_t>((static_cast<std::uint64_t>(1) << 32) / p);
    const uint32x4_t cv = vdupq_n_u32(c);
    const uint32x4_t pv = vdupq_n_u32(p);
    const uint32x4_t mv = vdupq_n_u32(m);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t x = vmulq_u32(vld1q_u32(dst + i), cv);
        vst1q_u32(dst + i, barrett_mod(x, mv, pv));
    }
    if (i < n) scalar_kernels().scale(dst + i, c, n - i, p);
}

const RowKernels kNeon{axpy_neon, scale_neon, "neon"};

}  // namespace

const RowKernels* neon_kernels() { return &kNeon; }

}  // namespace modcohom

#else

namespace modcohom {
const RowKernels* neon_kernels() { return nullptr; }
}  // namespace modcohom

#endif

// AVX2 variants of the F_p row kernels. Compiled with -mavx2 in this one
// translation unit only; callers reach it through avx2_kernels(), which
// returns nullptr unless the running CPU reports AVX2.
//
// Reduction is Barrett with M = floor(2^32/p): for x < 2^31,
// q = (x*M)>>32 satisfies q in {floor(x/p)-1, floor(x/p)}, so x - q*p lands
// in [0, 2p) and one conditional subtract finishes. The inputs here satisfy
// x <= (p-1) + (p-1)^2 < p^2, hence the p < 2^15 gate.

#include "modcohom/gfp_kernels.hpp"

#if defined(__AVX2__) && (defined(__x86_64__) || defined(__i386__))

#include <immintrin.h>

namespace modcohom {
namespace {

constexpr std::uint32_t kMaxSimdPrime = 1u << 15;

inline __m256i barrett_mod(__m256i x, __m256i mv, __m256i pv) {
    __m256i pe = _mm256_mul_epu32(x, mv);
    __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), mv);
    __m256i qe = _mm256_srli_epi64(pe, 32);
    __m256i qo = _mm256_slli_epi64(_mm256_srli_epi64(po, 32), 32);
    __m256i q = _mm256_or_si256(qe, qo);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
               std::size_t n, std::uint32_t p) {
    if (p >= kMaxSimdPrime) {
        scalar_kernels().axpy(dst, src, c, n, p);
        return;
    }
    const std::uint32_t m = static_cast<std::uint32_t>((static_cast<std::uint64_t>(1) << 32) / p);
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(m));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, cv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_mod(x, mv, pv));
    }
    if (i < n) scalar_kernels().axpy(dst + i, src + i, c, n - i, p);
}

void scale_avx2(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
    if (p >= kMaxSimdPrime) {
        scalar_kernels().scale(dst, c, n, p);
        return;
    }
    const std::uint32_t m = static_cast<std::uint32_t>((static_cast<std::uint64_t>(1) << 32) / p);
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(m));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i x = _mm256_mullo_epi32(d, cv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_mod(x, mv, pv));
    }
    if (i < n) scalar_kernels().scale(dst + i, c, n - i, p);
}

const RowKernels kAvx2{axpy_avx2, scale_avx2, "avx2"};

}  // namespace

const RowKernels* avx2_kernels() {
    static const bool usable = __builtin_cpu_supports("avx2");
    return usable ? &kAvx2 : nullptr;
}

}  // namespace modcohom

#else

namespace modcohom {
const RowKernels* avx2_kernels() { return nullptr; }
}  // namespace modcohom

#endif

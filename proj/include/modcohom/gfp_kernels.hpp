#pragma once
// Row kernels for dense elimination over F_p: the inner loops of every rank,
// reduce and closure computation. A scalar reference implementation is always
// available; AVX2 and NEON variants are selected at runtime and are verified
// against the scalar kernel by the test suite (exact equality, these are
// integers). The SIMD paths require p < 2^15 and fall back to scalar above
// that; correctness never depends on which variant runs.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace modcohom {

struct RowKernels {
    // dst[i] = (dst[i] + c * src[i]) mod p, entries already reduced mod p.
    void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                 std::size_t n, std::uint32_t p);
    // dst[i] = (c * dst[i]) mod p.
    void (*scale)(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);
    const char* name;
};

// Kernel set chosen at startup from CPU features; MODCOHOM_KERNEL=scalar|avx2|neon
// forces a variant (silently falling back to scalar if unavailable).
const RowKernels& active_kernels();

// Every kernel set compiled in and runnable on this machine (for equivalence tests).
std::vector<const RowKernels*> available_kernels();

const RowKernels& scalar_kernels();
const RowKernels* avx2_kernels();  // nullptr when not compiled in or CPU lacks AVX2
const RowKernels* neon_kernels();  // nullptr off aarch64

}  // namespace modcohom

#include "modcohom/gfp_kernels.hpp"

#include "modcohom/gfp.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace modcohom {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::CharTooSmall: return "CharTooSmall";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::WeightOutOfRange: return "WeightOutOfRange";
        case Errc::NotASubmodule: return "NotASubmodule";
        case Errc::NotWeightHomogeneous: return "NotWeightHomogeneous";
        case Errc::AlgebraModuleMismatch: return "AlgebraModuleMismatch";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::NonDominantMaximal: return "NonDominantMaximal";
        case Errc::CharacterMismatch: return "CharacterMismatch";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

PrimeField make_prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, "modulus " + std::to_string(p) + " is not prime");
    if (p <= 3) throw Error(Errc::CharTooSmall, "characteristic must exceed 3, got " + std::to_string(p));
    if (p > (1u << 30)) throw Error(Errc::NotPrime, "modulus too large for 32-bit residues");
    return PrimeField{static_cast<std::uint32_t>(p)};
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    // extended Euclid; a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error(Errc::InternalInconsistency, "inverse of zero residue");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                 std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
    }
}

void scale_scalar(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
    }
}

const RowKernels kScalar{axpy_scalar, scale_scalar, "scalar"};

const RowKernels* pick_kernels() {
    const char* force = std::getenv("MODCOHOM_KERNEL");
    if (force != nullptr) {
        std::string want(force);
        if (want == "scalar") return &kScalar;
        if (want == "avx2" && avx2_kernels() != nullptr) return avx2_kernels();
        if (want == "neon" && neon_kernels() != nullptr) return neon_kernels();
        return &kScalar;
    }
    if (avx2_kernels() != nullptr) return avx2_kernels();
    if (neon_kernels() != nullptr) return neon_kernels();
    return &kScalar;
}

}  // namespace

const RowKernels& scalar_kernels() { return kScalar; }

const RowKernels& active_kernels() {
    static const RowKernels* chosen = pick_kernels();
    return *chosen;
}

std::vector<const RowKernels*> available_kernels() {
    std::vector<const RowKernels*> out{&kScalar};
    if (avx2_kernels() != nullptr) out.push_back(avx2_kernels());
    if (neon_kernels() != nullptr) out.push_back(neon_kernels());
    return out;
}

}  // namespace modcohom

#pragma once
// Prime field F_p arithmetic on least non-negative residues.
// p must be prime and > 3; everything downstream assumes odd characteristic
// with invertible 2 and 3.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modcohom {

enum class Errc {
    NotPrime,
    CharTooSmall,
    DimensionMismatch,
    WeightOutOfRange,
    NotASubmodule,
    NotWeightHomogeneous,
    AlgebraModuleMismatch,
    InternalInconsistency,
    NonDominantMaximal,
    CharacterMismatch,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

const char* errc_name(Errc code);

bool is_prime(std::uint64_t n);

struct PrimeField {
    std::uint32_t p = 0;

    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

// Throws NotPrime / CharTooSmall (p <= 3).
PrimeField make_prime_field(std::uint64_t p);

}  // namespace modcohom

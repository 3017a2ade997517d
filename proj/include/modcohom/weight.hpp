#pragma once
// Weights of the rank-2 datum in fundamental-weight coordinates, kept over Z
// throughout (restriction and divisibility are integer notions here, never
// mod p). Simple roots in these coordinates are a1 = (2,-1), a2 = (-1,2).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modcohom {

struct Weight {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend auto operator<=>(const Weight&, const Weight&) = default;
    Weight operator+(const Weight& o) const { return {a + o.a, b + o.b}; }
    Weight operator-(const Weight& o) const { return {a - o.a, b - o.b}; }
    Weight operator-() const { return {-a, -b}; }
    Weight operator*(std::int64_t k) const { return {a * k, b * k}; }

    bool divisible_by(std::int64_t m) const { return a % m == 0 && b % m == 0; }
    Weight divided_by(std::int64_t m) const { return {a / m, b / m}; }
    bool is_zero() const { return a == 0 && b == 0; }
    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

inline bool is_dominant(Weight w) { return w.a >= 0 && w.b >= 0; }
inline bool is_restricted(Weight w, std::int64_t p) {
    return 0 <= w.a && w.a <= p - 1 && 0 <= w.b && w.b <= p - 1;
}

// 2x2 integer matrix acting on (a,b) column vectors.
struct WeylElement {
    std::array<std::array<std::int64_t, 2>, 2> m;
    Weight apply(Weight w) const {
        return {m[0][0] * w.a + m[0][1] * w.b, m[1][0] * w.a + m[1][1] * w.b};
    }
    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

struct RootDatum {
    Weight alpha1{2, -1};
    Weight alpha2{-1, 2};
    Weight rho{1, 1};
    std::vector<WeylElement> weyl;  // all 6 elements, deterministic order
    WeylElement w0;                 // longest element, (a,b) -> (-b,-a)

    static const RootDatum& get();
};

// lambda = m*a1 + n*a2 with integral m, n, when solvable.
std::optional<std::pair<std::int64_t, std::int64_t>> root_coordinates(Weight lambda);

// mu <= lambda in dominance order: lambda - mu is a non-negative integer
// combination of simple roots (root coefficients, not coordinate signs).
bool dominance_leq(Weight mu, Weight lambda);

// lambda + rho == w(mu + rho) mod p, componentwise, for some Weyl element w.
bool is_linked(Weight lambda, Weight mu, std::int64_t p);

}  // namespace modcohom

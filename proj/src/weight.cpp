#include "modcohom/weight.hpp"

#include <algorithm>

namespace modcohom {

namespace {

WeylElement compose(const WeylElement& x, const WeylElement& y) {
    WeylElement z{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            z.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
        }
    }
    return z;
}

RootDatum build_datum() {
    RootDatum d;
    // s1(a,b) = (-a, a+b), s2(a,b) = (a+b, -b)
    WeylElement id{{{{1, 0}, {0, 1}}}};
    WeylElement s1{{{{-1, 0}, {1, 1}}}};
    WeylElement s2{{{{1, 1}, {0, -1}}}};
    std::vector<WeylElement> group{id, s1, s2};
    for (std::size_t i = 0; i < group.size(); ++i) {
        for (const WeylElement& gen : {s1, s2}) {
            WeylElement w = compose(gen, group[i]);
            if (std::find(group.begin(), group.end(), w) == group.end()) group.push_back(w);
        }
    }
    std::sort(group.begin(), group.end());
    d.weyl = std::move(group);
    for (const auto& w : d.weyl) {
        if (w.apply({1, 2}) == Weight{-2, -1}) d.w0 = w;  // (a,b) -> (-b,-a)
    }
    return d;
}

}  // namespace

const RootDatum& RootDatum::get() {
    static const RootDatum d = build_datum();
    return d;
}

std::optional<std::pair<std::int64_t, std::int64_t>> root_coordinates(Weight lambda) {
    // Inverse Cartan scaled by 3: m = (2a+b)/3, n = (a+2b)/3.
    std::int64_t tm = 2 * lambda.a + lambda.b;
    std::int64_t tn = lambda.a + 2 * lambda.b;
    auto div3 = [](std::int64_t x) { return x % 3 == 0; };
    if (!div3(tm) || !div3(tn)) return std::nullopt;
    return std::make_pair(tm / 3, tn / 3);
}

bool dominance_leq(Weight mu, Weight lambda) {
    auto mn = root_coordinates(lambda - mu);
    return mn.has_value() && mn->first >= 0 && mn->second >= 0;
}

bool is_linked(Weight lambda, Weight mu, std::int64_t p) {
    const RootDatum& d = RootDatum::get();
    Weight lr = lambda + d.rho;
    Weight mr = mu + d.rho;
    auto congruent = [p](Weight x, Weight y) {
        return (x.a - y.a) % p == 0 && (x.b - y.b) % p == 0;
    };
    return std::any_of(d.weyl.begin(), d.weyl.end(),
                       [&](const WeylElement& w) { return congruent(lr, w.apply(mr)); });
}

}  // namespace modcohom

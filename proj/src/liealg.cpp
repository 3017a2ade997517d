#include "modcohom/liealg.hpp"

#include "modcohom/gfp.hpp"

#include <algorithm>
#include <map>

namespace modcohom {

namespace {

// indices: e1 e2 e3 h1 h2 f1 f2 f3
enum : std::size_t { E1, E2, E3, H1, H2, F1, F2, F3 };

LieAlgebraSpec build_sl3() {
    LieAlgebraSpec g;
    g.name = "sl3";
    g.basis = {"e1", "e2", "e3", "h1", "h2", "f1", "f2", "f3"};
    g.weights = {{2, -1}, {-1, 2}, {1, 1}, {0, 0}, {0, 0}, {-2, 1}, {1, -2}, {-1, -1}};
    std::size_t n = g.basis.size();
    g.bracket_table.assign(n, std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>(n));

    auto set = [&](std::size_t i, std::size_t j,
                   std::vector<std::pair<std::size_t, std::int64_t>> v) {
        g.bracket_table[i][j] = v;
        for (auto& [k, c] : v) c = -c;
        g.bracket_table[j][i] = std::move(v);
    };

    set(E1, E2, {{E3, 1}});
    set(E1, H1, {{E1, -2}});
    set(E1, H2, {{E1, 1}});
    set(E1, F1, {{H1, 1}});
    set(E1, F3, {{F2, -1}});
    set(E2, H1, {{E2, 1}});
    set(E2, H2, {{E2, -2}});
    set(E2, F2, {{H2, 1}});
    set(E2, F3, {{F1, 1}});
    set(E3, H1, {{E3, -1}});
    set(E3, H2, {{E3, -1}});
    set(E3, F1, {{E2, -1}});
    set(E3, F2, {{E1, 1}});
    set(E3, F3, {{H1, 1}, {H2, 1}});  // h3 = h1 + h2
    set(H1, F1, {{F1, -2}});
    set(H1, F2, {{F2, 1}});
    set(H1, F3, {{F3, -1}});
    set(H2, F1, {{F1, 1}});
    set(H2, F2, {{F2, -2}});
    set(H2, F3, {{F3, -1}});
    set(F1, F2, {{F3, -1}});

    validate_structure(g);
    return g;
}

LieAlgebraSpec build_gl3() {
    LieAlgebraSpec g = sl3_spec();
    g.name = "gl3";
    g.basis.push_back("z");
    g.weights.push_back({0, 0});
    std::size_t n = g.basis.size();
    for (auto& row : g.bracket_table) row.emplace_back();
    g.bracket_table.emplace_back(n);
    validate_structure(g);
    return g;
}

using Combo = std::map<std::size_t, std::int64_t>;

Combo bracket_combo(const LieAlgebraSpec& g, const Combo& x, std::size_t j) {
    Combo out;
    for (const auto& [i, ci] : x) {
        for (const auto& [k, ck] : g.bracket(i, j)) out[k] += ci * ck;
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

}  // namespace

std::size_t LieAlgebraSpec::index_of(const std::string& label) const {
    auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end()) {
        throw Error(Errc::InternalInconsistency, "unknown basis label " + label);
    }
    return static_cast<std::size_t>(it - basis.begin());
}

void validate_structure(const LieAlgebraSpec& g) {
    std::size_t n = g.dim();
    auto fail = [&](const std::string& what) {
        throw Error(Errc::InternalInconsistency, g.name + " structure constants: " + what);
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.bracket(i, i).empty()) fail("nonzero [x,x]");
        for (std::size_t j = 0; j < n; ++j) {
            Combo ij, ji;
            for (const auto& [k, c] : g.bracket(i, j)) ij[k] += c;
            for (const auto& [k, c] : g.bracket(j, i)) ji[k] -= c;
            if (ij != ji) fail("antisymmetry fails at (" + g.basis[i] + "," + g.basis[j] + ")");
        }
    }
    // Jacobi: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 for all basis triples.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Combo acc;
                Combo xy, yz, zx;
                for (const auto& [t, c] : g.bracket(i, j)) xy[t] += c;
                for (const auto& [t, c] : g.bracket(j, k)) yz[t] += c;
                for (const auto& [t, c] : g.bracket(k, i)) zx[t] += c;
                for (const auto& [t, c] : bracket_combo(g, xy, k)) acc[t] += c;
                for (const auto& [t, c] : bracket_combo(g, yz, i)) acc[t] += c;
                for (const auto& [t, c] : bracket_combo(g, zx, j)) acc[t] += c;
                std::erase_if(acc, [](const auto& e) { return e.second == 0; });
                if (!acc.empty()) {
                    fail("Jacobi fails at (" + g.basis[i] + "," + g.basis[j] + "," + g.basis[k] + ")");
                }
            }
        }
    }
    // ad(h1), ad(h2) diagonal with eigenvalue <weight, alpha_i-coroot>.
    std::size_t h1 = g.index_of("h1"), h2 = g.index_of("h2");
    for (std::size_t x = 0; x < n; ++x) {
        for (auto [h, expect] : {std::pair{h1, g.weights[x].a}, std::pair{h2, g.weights[x].b}}) {
            Combo got;
            for (const auto& [t, c] : g.bracket(h, x)) got[t] += c;
            Combo want;
            if (expect != 0) want[x] = expect;
            if (got != want) fail("ad(h) not diagonal by weights at " + g.basis[x]);
        }
    }
}

const LieAlgebraSpec& sl3_spec() {
    static const LieAlgebraSpec g = build_sl3();
    return g;
}

const LieAlgebraSpec& gl3_spec() {
    static const LieAlgebraSpec g = build_gl3();
    return g;
}

}  // namespace modcohom

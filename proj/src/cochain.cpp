#include "modcohom/cochain.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

namespace modcohom {

namespace {

std::vector<std::uint32_t> subsets_of_size(std::size_t universe, std::size_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << universe); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) == n) out.push_back(mask);
    }
    return out;
}

// Position of set bit u within mask (number of lower set bits).
inline int bit_position(std::uint32_t mask, unsigned u) {
    return std::popcount(mask & ((1u << u) - 1));
}

void verify_weight_preservation(const GradedComplex& cx) {
    for (std::size_t n = 0; n + 1 < cx.degrees.size(); ++n) {
        const auto& dn = cx.degrees[n];
        const auto& up = cx.degrees[n + 1];
        for (std::size_t r = 0; r < dn.d.rows(); ++r) {
            for (const auto& e : dn.d.row(r)) {
                if (up.weights[r] != dn.weights[e.col]) {
                    throw Error(Errc::InternalInconsistency,
                                "coboundary entry changes weight at degree " + std::to_string(n));
                }
            }
        }
    }
}

void verify_d_squared_blockwise(const GradedComplex& cx) {
    for (std::size_t n = 0; n + 2 < cx.degrees.size(); ++n) {
        for (const auto& [mu, blk] : cx.degrees[n].blocks) {
            MatrixGFp a = block_matrix(cx, n, mu);
            MatrixGFp b = block_matrix(cx, n + 1, mu);
            if (!b.multiply(a).is_zero()) {
                throw Error(Errc::InternalInconsistency,
                            "d.d != 0 at degree " + std::to_string(n) + ", weight " + mu.str());
            }
        }
    }
}

void fill_blocks(GradedComplex& cx) {
    for (auto& deg : cx.degrees) {
        deg.blocks.clear();
        for (std::size_t k = 0; k < deg.basis.size(); ++k) {
            deg.blocks[deg.weights[k]].push_back(static_cast<std::uint32_t>(k));
        }
    }
}

}  // namespace

std::size_t GradedComplex::dim_block(std::size_t n, Weight mu) const {
    auto it = degrees[n].blocks.find(mu);
    return it == degrees[n].blocks.end() ? 0 : it->second.size();
}

GradedComplex build_complex(const LieAlgebraSpec& g, const Representation& module) {
    if (module.algebra.name != g.name || module.algebra.dim() != g.dim()) {
        throw Error(Errc::AlgebraModuleMismatch,
                    "module over " + module.algebra.name + " paired with algebra " + g.name);
    }
    const std::size_t N = g.dim();
    const std::size_t dm = module.dim;
    PrimeField f = module.field;

    GradedComplex cx;
    cx.algebra = g;
    cx.field = f;
    cx.module_label = module.label;
    cx.module_dim = dm;
    cx.degrees.resize(N + 1);

    // Sum of basis weights per subset mask.
    std::vector<Weight> mask_weight(1u << N);
    for (std::uint32_t mask = 1; mask < (1u << N); ++mask) {
        unsigned u = static_cast<unsigned>(std::countr_zero(mask));
        mask_weight[mask] = mask_weight[mask & (mask - 1)] + g.weights[u];
    }

    std::vector<std::vector<std::uint32_t>> masks(N + 2);
    std::vector<std::map<std::uint32_t, std::uint32_t>> mask_rank(N + 2);
    for (std::size_t n = 0; n <= N; ++n) {
        masks[n] = subsets_of_size(N, n);
        for (std::size_t k = 0; k < masks[n].size(); ++k) {
            mask_rank[n][masks[n][k]] = static_cast<std::uint32_t>(k);
        }
    }

    for (std::size_t n = 0; n <= N; ++n) {
        auto& deg = cx.degrees[n];
        deg.basis.reserve(masks[n].size() * dm);
        deg.weights.reserve(masks[n].size() * dm);
        for (std::uint32_t mask : masks[n]) {
            for (std::uint32_t m = 0; m < dm; ++m) {
                deg.basis.push_back({mask, m});
                deg.weights.push_back(module.weights[m] - mask_weight[mask]);
            }
        }
    }

    // Per target index k, the bracket pairs (a, b, c) with a < b and
    // [x_a, x_b] having coefficient c on x_k.
    std::vector<std::vector<std::tuple<unsigned, unsigned, std::int64_t>>> pairs_into(N);
    for (unsigned a = 0; a < N; ++a) {
        for (unsigned b = a + 1; b < N; ++b) {
            for (const auto& [k, c] : g.bracket(a, b)) pairs_into[k].emplace_back(a, b, c);
        }
    }

    std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>> action_cols;
    action_cols.reserve(N);
    for (std::size_t u = 0; u < N; ++u) action_cols.push_back(module.actions[u].columns());

    for (std::size_t n = 0; n < N; ++n) {
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
        const auto& up_rank = mask_rank[n + 1];
        for (std::size_t si = 0; si < masks[n].size(); ++si) {
            const std::uint32_t S = masks[n][si];
            // term A: add an operator u not in S, act on the module slot
            for (unsigned u = 0; u < N; ++u) {
                if (S & (1u << u)) continue;
                const std::uint32_t U = S | (1u << u);
                const std::int64_t sign = (bit_position(U, u) % 2 == 0) ? 1 : -1;
                const std::size_t row_base = static_cast<std::size_t>(up_rank.at(U)) * dm;
                const std::size_t col_base = si * dm;
                for (std::uint32_t m = 0; m < dm; ++m) {
                    for (const auto& [r, val] : action_cols[u][m]) {
                        trips.emplace_back(row_base + r, col_base + m,
                                           sign * static_cast<std::int64_t>(val));
                    }
                }
            }
            // term B: replace k in S by a bracket pair {a,b}, module slot fixed
            for (unsigned k = 0; k < N; ++k) {
                if (!(S & (1u << k))) continue;
                const std::uint32_t W = S & ~(1u << k);
                const std::int64_t sign_k = (bit_position(S, k) % 2 == 0) ? 1 : -1;
                for (const auto& [a, b, c] : pairs_into[k]) {
                    if (W & ((1u << a) | (1u << b))) continue;
                    const std::uint32_t U = W | (1u << a) | (1u << b);
                    const std::int64_t sign_ab =
                        ((bit_position(U, a) + bit_position(U, b)) % 2 == 0) ? 1 : -1;
                    const std::size_t row_base = static_cast<std::size_t>(up_rank.at(U)) * dm;
                    const std::size_t col_base = si * dm;
                    const std::int64_t coef = sign_ab * sign_k * c;
                    for (std::uint32_t m = 0; m < dm; ++m) {
                        trips.emplace_back(row_base + m, col_base + m, coef);
                    }
                }
            }
        }
        cx.degrees[n].d = MatrixGFp::from_triplets(f, masks[n + 1].size() * dm,
                                                   masks[n].size() * dm, trips);
    }
    cx.degrees[N].d = MatrixGFp::zero(f, 0, masks[N].size() * dm);

    fill_blocks(cx);
    verify_weight_preservation(cx);
    verify_d_squared_blockwise(cx);
    return cx;
}

GradedComplex restrict_to_pXT(const GradedComplex& cx) {
    const std::int64_t p = cx.field.p;
    GradedComplex out;
    out.algebra = cx.algebra;
    out.field = cx.field;
    out.module_label = cx.module_label;
    out.module_dim = cx.module_dim;
    out.restricted = true;
    out.degrees.resize(cx.degrees.size());

    std::vector<std::vector<std::uint32_t>> kept(cx.degrees.size());
    for (std::size_t n = 0; n < cx.degrees.size(); ++n) {
        const auto& deg = cx.degrees[n];
        auto& nd = out.degrees[n];
        for (std::size_t k = 0; k < deg.basis.size(); ++k) {
            if (deg.weights[k].divisible_by(p)) {
                kept[n].push_back(static_cast<std::uint32_t>(k));
                nd.basis.push_back(deg.basis[k]);
                nd.weights.push_back(deg.weights[k]);
            }
        }
    }
    for (std::size_t n = 0; n < cx.degrees.size(); ++n) {
        if (n + 1 < cx.degrees.size()) {
            out.degrees[n].d = cx.degrees[n].d.submatrix(kept[n + 1], kept[n]);
        } else {
            out.degrees[n].d = MatrixGFp::zero(cx.field, 0, kept[n].size());
        }
    }
    fill_blocks(out);
    return out;
}

MatrixGFp block_matrix(const GradedComplex& cx, std::size_t degree, Weight mu) {
    static const std::vector<std::uint32_t> kEmpty;
    const auto& deg = cx.degrees[degree];
    auto it = deg.blocks.find(mu);
    const std::vector<std::uint32_t>& cols = it == deg.blocks.end() ? kEmpty : it->second;
    if (degree + 1 >= cx.degrees.size()) {
        return MatrixGFp::zero(cx.field, 0, cols.size());
    }
    const auto& up = cx.degrees[degree + 1];
    auto ru = up.blocks.find(mu);
    const std::vector<std::uint32_t>& rows = ru == up.blocks.end() ? kEmpty : ru->second;
    return deg.d.submatrix(rows, cols);
}

bool d_squared_is_zero_full(const GradedComplex& cx) {
    for (std::size_t n = 0; n + 2 < cx.degrees.size(); ++n) {
        if (!cx.degrees[n + 1].d.multiply(cx.degrees[n].d).is_zero()) return false;
    }
    return true;
}

void write_block_triplets(const GradedComplex& cx, std::size_t degree, Weight mu,
                          std::ostream& os) {
    MatrixGFp m = block_matrix(cx, degree, mu);
    os << "# degree " << degree << " weight " << mu.str() << " rows " << m.rows() << " cols "
       << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& e : m.row(r)) os << r << " " << e.col << " " << e.val << "\n";
    }
}

}  // namespace modcohom

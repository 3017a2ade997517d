#include "modcohom/repr.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace modcohom {

namespace {

std::string rs_label(const std::string& family, std::int64_t r, std::int64_t s) {
    return family + "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

void require_restricted(PrimeField f, std::int64_t r, std::int64_t s) {
    if (r < 0 || s < 0 || r > f.p - 1 || s > f.p - 1) {
        throw Error(Errc::WeightOutOfRange,
                    "weight (" + std::to_string(r) + "," + std::to_string(s) +
                        ") not restricted for p=" + std::to_string(f.p));
    }
}

std::map<Weight, std::vector<std::uint32_t>> weight_blocks(const Representation& rep) {
    std::map<Weight, std::vector<std::uint32_t>> blocks;
    for (std::size_t k = 0; k < rep.dim; ++k) {
        blocks[rep.weights[k]].push_back(static_cast<std::uint32_t>(k));
    }
    return blocks;
}

}  // namespace

std::size_t Character::total() const {
    std::size_t n = 0;
    for (const auto& [w, m] : mult) n += m;
    return n;
}

bool Character::weyl_symmetric() const {
    const RootDatum& d = RootDatum::get();
    for (const auto& [w, m] : mult) {
        for (const auto& wy : d.weyl) {
            auto it = mult.find(wy.apply(w));
            if (it == mult.end() || it->second != m) return false;
        }
    }
    return true;
}

Character character(const Representation& rep) {
    Character ch;
    for (const auto& w : rep.weights) ++ch.mult[w];
    return ch;
}

Character tensor_character(const Character& x, const Character& y) {
    Character out;
    for (const auto& [wx, mx] : x.mult) {
        for (const auto& [wy, my] : y.mult) out.mult[wx + wy] += mx * my;
    }
    return out;
}

Character negated_character(const Character& x) {
    Character out;
    for (const auto& [w, m] : x.mult) out.mult[-w] = m;
    return out;
}

Character sum_character(const Character& x, const Character& y) {
    Character out = x;
    for (const auto& [w, m] : y.mult) out.mult[w] += m;
    return out;
}

Representation trivial_module(const LieAlgebraSpec& g, PrimeField f) {
    Representation rep;
    rep.algebra = g;
    rep.field = f;
    rep.dim = 1;
    rep.actions.assign(g.dim(), MatrixGFp::zero(f, 1, 1));
    rep.weights = {Weight{0, 0}};
    rep.highest_weight = {0, 0};
    rep.label = "trivial";
    return rep;
}

std::size_t verma_index(std::uint32_t p, std::int64_t i, std::int64_t j, std::int64_t t) {
    return static_cast<std::size_t>((i * p + j) * p + t);
}

Representation verma_module(PrimeField f, std::int64_t r, std::int64_t s) {
    require_restricted(f, r, s);
    const std::int64_t p = f.p;
    const std::size_t dim = static_cast<std::size_t>(p) * p * p;
    const LieAlgebraSpec& g = sl3_spec();

    Representation rep;
    rep.algebra = g;
    rep.field = f;
    rep.dim = dim;
    rep.highest_weight = {r, s};
    rep.label = rs_label("verma", r, s);
    rep.weights.resize(dim);

    using Trips = std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>;
    std::vector<Trips> trips(g.dim());
    auto put = [&](std::size_t op, std::int64_t i, std::int64_t j, std::int64_t t,
                   std::int64_t c, std::size_t from) {
        if (i < 0 || j < 0 || t < 0 || i > p - 1 || j > p - 1 || t > p - 1) return;
        trips[op].emplace_back(verma_index(f.p, i, j, t), from, c);
    };

    const std::size_t e1 = g.index_of("e1"), e2 = g.index_of("e2"), e3 = g.index_of("e3");
    const std::size_t h1 = g.index_of("h1"), h2 = g.index_of("h2");
    const std::size_t f1 = g.index_of("f1"), f2 = g.index_of("f2"), f3 = g.index_of("f3");

    for (std::int64_t i = 0; i < p; ++i) {
        for (std::int64_t j = 0; j < p; ++j) {
            for (std::int64_t t = 0; t < p; ++t) {
                std::size_t from = verma_index(f.p, i, j, t);
                rep.weights[from] = {r - 2 * i + j - t, s + i - 2 * j - t};
                put(e1, i, j + 1, t - 1, -(j + 1), from);
                put(e1, i - 1, j, t, r - i + 1, from);
                put(e2, i, j - 1, t, s + i - j - t + 1, from);
                put(e2, i + 1, j, t - 1, i + 1, from);
                put(e3, i, j, t - 1, r + s - i - j - t + 1, from);
                put(e3, i - 1, j - 1, t, r - i + 1, from);
                put(h1, i, j, t, r - 2 * i + j - t, from);
                put(h2, i, j, t, s + i - 2 * j - t, from);
                put(f1, i, j - 1, t + 1, -(t + 1), from);
                put(f1, i + 1, j, t, i + 1, from);
                put(f2, i, j + 1, t, j + 1, from);
                put(f3, i, j, t + 1, t + 1, from);
            }
        }
    }
    rep.actions.reserve(g.dim());
    for (std::size_t op = 0; op < g.dim(); ++op) {
        rep.actions.push_back(MatrixGFp::from_triplets(f, dim, dim, trips[op]));
    }
    return rep;
}

SubspaceBasis generated_submodule(const Representation& rep,
                                  const std::vector<std::vector<std::uint32_t>>& seeds) {
    return rowspace_closure(rep.field, rep.dim, seeds, rep.actions);
}

std::vector<std::uint32_t> project_to_quotient(const SubspaceBasis& sub,
                                               const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> red = sub.reduce(v);
    std::vector<std::uint32_t> out;
    for (std::size_t c : sub.free_columns()) out.push_back(red[c]);
    return out;
}

Representation quotient_module(const Representation& rep, const SubspaceBasis& sub,
                               const std::string& label) {
    if (sub.ambient_dim() != rep.dim) {
        throw Error(Errc::DimensionMismatch, "quotient: subspace ambient != module dim");
    }
    for (const auto& row : sub.basis()) {
        bool seen = false;
        Weight wt{};
        for (std::size_t c = 0; c < rep.dim; ++c) {
            if (row[c] == 0) continue;
            if (!seen) {
                wt = rep.weights[c];
                seen = true;
            } else if (rep.weights[c] != wt) {
                throw Error(Errc::NotWeightHomogeneous,
                            "quotient: submodule basis vector mixes weights");
            }
        }
        for (const auto& a : rep.actions) {
            if (!sub.contains(a.apply(row))) {
                throw Error(Errc::NotASubmodule, "quotient: subspace not action-stable");
            }
        }
    }

    std::vector<std::size_t> free = sub.free_columns();
    std::vector<std::int64_t> local(rep.dim, -1);
    for (std::size_t k = 0; k < free.size(); ++k) local[free[k]] = static_cast<std::int64_t>(k);

    Representation q;
    q.algebra = rep.algebra;
    q.field = rep.field;
    q.dim = free.size();
    q.highest_weight = rep.highest_weight;
    q.label = label.empty() ? "quotient(" + rep.label + ")" : label;
    q.weights.reserve(free.size());
    for (std::size_t c : free) q.weights.push_back(rep.weights[c]);

    for (const auto& a : rep.actions) {
        auto cols = a.columns();
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
        for (std::size_t k = 0; k < free.size(); ++k) {
            std::vector<std::uint32_t> y(rep.dim, 0);
            for (const auto& [row, val] : cols[free[k]]) y[row] = val;
            y = sub.reduce(std::move(y));
            for (std::size_t c = 0; c < rep.dim; ++c) {
                if (y[c] != 0) trips.emplace_back(static_cast<std::size_t>(local[c]), k, y[c]);
            }
        }
        q.actions.push_back(MatrixGFp::from_triplets(rep.field, q.dim, q.dim, trips));
    }
    return q;
}

namespace {

// Divided-power model for the Weyl module. One factor D^n holds monomials
// x1^(a1) x2^(a2) x3^(a3), a1+a2+a3 = n; a root element moves single letters
// (with a sign on the dual factor) and its k-th divided power moves k letters
// at once, picking up the binomial C(target_count + k, k).
struct DividedFactor {
    std::int64_t n = 0;
    bool dual = false;  // letters from std* (sign -1 on every move)
    std::vector<std::array<std::int64_t, 3>> comps;
    std::map<std::array<std::int64_t, 3>, std::size_t> index;

    explicit DividedFactor(std::int64_t total, bool is_dual) : n(total), dual(is_dual) {
        for (std::int64_t a1 = 0; a1 <= n; ++a1) {
            for (std::int64_t a2 = 0; a1 + a2 <= n; ++a2) {
                comps.push_back({a1, a2, n - a1 - a2});
            }
        }
        for (std::size_t k = 0; k < comps.size(); ++k) index[comps[k]] = k;
    }

    std::size_t dim() const { return comps.size(); }

    Weight weight_of(std::size_t k) const {
        const auto& c = comps[k];
        Weight w{c[0] - c[1], c[1] - c[2]};
        return dual ? -w : w;
    }

    // k-th divided power of the letter move from->to (0-based slots); each
    // monomial maps to at most one monomial.
    std::vector<std::pair<std::size_t, std::int64_t>> divided_entries(int from, int to,
                                                                      std::int64_t k) const {
        std::vector<std::pair<std::size_t, std::int64_t>> out(dim(), {0, 0});
        for (std::size_t c = 0; c < comps.size(); ++c) {
            auto cc = comps[c];
            if (cc[from] < k) {
                out[c] = {0, 0};
                continue;
            }
            std::int64_t binom = 1;  // C(cc[to]+k, k), small arguments
            for (std::int64_t i = 1; i <= k; ++i) {
                binom = binom * (cc[to] + i) / i;
            }
            cc[from] -= k;
            cc[to] += k;
            std::int64_t sign = (dual && k % 2 == 1) ? -1 : 1;
            out[c] = {index.at(cc), sign * binom};
        }
        return out;
    }
};

// Letter moves of e1,e2,e3,f1,f2,f3 on the standard basis x1,x2,x3.
constexpr int kRootMoves[6][2] = {{1, 0}, {2, 1}, {2, 0}, {0, 1}, {1, 2}, {0, 2}};

struct WeylTensorModel {
    PrimeField f;
    DividedFactor left, right;
    std::size_t dim;
    std::vector<Weight> weights;

    WeylTensorModel(PrimeField field, std::int64_t r, std::int64_t s)
        : f(field), left(r, false), right(s, true), dim(left.dim() * right.dim()) {
        weights.reserve(dim);
        for (std::size_t a = 0; a < left.dim(); ++a) {
            for (std::size_t b = 0; b < right.dim(); ++b) {
                weights.push_back(left.weight_of(a) + right.weight_of(b));
            }
        }
    }

    std::size_t flat(std::size_t a, std::size_t b) const { return a * right.dim() + b; }

    // X^(k) on the tensor product: sum of X^(a) (x) X^(k-a).
    MatrixGFp divided_operator(int root, std::int64_t k) const {
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
        const int from = kRootMoves[root][0], to = kRootMoves[root][1];
        // the dual factor moves letters along the reversed arrow
        for (std::int64_t a = 0; a <= k; ++a) {
            std::int64_t b = k - a;
            if (a > left.n || b > right.n) continue;
            auto le = left.divided_entries(from, to, a);
            auto re = right.divided_entries(to, from, b);
            for (std::size_t ci = 0; ci < left.dim(); ++ci) {
                if (le[ci].second == 0) continue;
                for (std::size_t cj = 0; cj < right.dim(); ++cj) {
                    if (re[cj].second == 0) continue;
                    trips.emplace_back(flat(le[ci].first, re[cj].first), flat(ci, cj),
                                       le[ci].second * re[cj].second);
                }
            }
        }
        return MatrixGFp::from_triplets(f, dim, dim, trips);
    }

    MatrixGFp cartan_operator(int which) const {  // 0 -> h1, 1 -> h2
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
        for (std::size_t k = 0; k < dim; ++k) {
            trips.emplace_back(k, k, which == 0 ? weights[k].a : weights[k].b);
        }
        return MatrixGFp::from_triplets(f, dim, dim, trips);
    }
};

}  // namespace

WeylRealization weyl_realization(PrimeField f, std::int64_t r, std::int64_t s) {
    require_restricted(f, r, s);
    const std::string label = rs_label("weyl", r, s);
    WeylTensorModel model(f, r, s);

    std::vector<MatrixGFp> closure_ops;
    std::vector<MatrixGFp> root_actions;  // k = 1 actions of e1,e2,e3,f1,f2,f3
    for (int root = 0; root < 6; ++root) {
        for (std::int64_t k = 1; k <= r + s; ++k) {
            MatrixGFp op = model.divided_operator(root, k);
            if (k == 1) root_actions.push_back(op);
            if (!op.is_zero()) closure_ops.push_back(std::move(op));
        }
        if (r + s == 0) root_actions.push_back(MatrixGFp::zero(f, model.dim, model.dim));
    }

    std::vector<std::uint32_t> hw(model.dim, 0);
    hw[model.flat(model.left.index.at({r, 0, 0}), model.right.index.at({0, 0, s}))] = 1;
    SubspaceBasis span = rowspace_closure(f, model.dim, {hw}, closure_ops);

    // Restrict the eight generator actions to the invariant subspace; in RREF
    // coordinates a member vector's coefficients are its pivot entries.
    Representation tensor_rep;
    tensor_rep.algebra = sl3_spec();
    tensor_rep.field = f;
    tensor_rep.dim = span.dim();
    tensor_rep.highest_weight = {r, s};
    tensor_rep.label = label;
    for (std::size_t k = 0; k < span.dim(); ++k) {
        tensor_rep.weights.push_back(model.weights[span.pivots()[k]]);
    }
    auto to_coords = [&](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> out(span.dim());
        for (std::size_t k = 0; k < span.dim(); ++k) out[k] = v[span.pivots()[k]];
        return out;
    };
    std::vector<MatrixGFp> ambient;  // order e1,e2,e3,h1,h2,f1,f2,f3
    ambient.push_back(root_actions[0]);
    ambient.push_back(root_actions[1]);
    ambient.push_back(root_actions[2]);
    ambient.push_back(model.cartan_operator(0));
    ambient.push_back(model.cartan_operator(1));
    ambient.push_back(root_actions[3]);
    ambient.push_back(root_actions[4]);
    ambient.push_back(root_actions[5]);
    for (const auto& op : ambient) {
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
        for (std::size_t c = 0; c < span.dim(); ++c) {
            std::vector<std::uint32_t> y = op.apply(span.basis()[c]);
            if (!span.contains(y)) {
                throw Error(Errc::InternalInconsistency, "Weyl span not operator-stable");
            }
            std::vector<std::uint32_t> coords = to_coords(y);
            for (std::size_t k = 0; k < coords.size(); ++k) {
                if (coords[k] != 0) trips.emplace_back(k, c, coords[k]);
            }
        }
        tensor_rep.actions.push_back(
            MatrixGFp::from_triplets(f, tensor_rep.dim, tensor_rep.dim, trips));
    }

    // Canonical map from the Verma module: v_{i,j,t} -> F3^(t) F2^(j) F1^(i) u.
    WeylRealization out;
    out.verma = verma_module(f, r, s);
    const std::int64_t p = f.p;
    auto divided = [&](int root, std::int64_t k) { return model.divided_operator(root, k); };
    std::vector<std::vector<std::uint32_t>> images(
        static_cast<std::size_t>(p) * p * p);
    std::vector<std::uint32_t> base = hw;
    for (std::int64_t i = 0; i < p; ++i) {
        std::vector<std::uint32_t> fi = i == 0 ? base : divided(3, i).apply(base);
        for (std::int64_t j = 0; j < p; ++j) {
            std::vector<std::uint32_t> fij = j == 0 ? fi : divided(4, j).apply(fi);
            for (std::int64_t t = 0; t < p; ++t) {
                std::vector<std::uint32_t> v = t == 0 ? fij : divided(5, t).apply(fij);
                if (!span.contains(v)) {
                    throw Error(Errc::InternalInconsistency,
                                "divided monomial image left the Weyl span");
                }
                images[verma_index(f.p, i, j, t)] = to_coords(v);
            }
        }
    }

    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> map_trips;
    for (std::size_t col = 0; col < images.size(); ++col) {
        for (std::size_t row = 0; row < images[col].size(); ++row) {
            if (images[col][row] != 0) map_trips.emplace_back(row, col, images[col][row]);
        }
    }
    MatrixGFp phi = MatrixGFp::from_triplets(f, tensor_rep.dim, images.size(), map_trips);
    RankKernel rk = rank_and_kernel(phi);
    out.kernel = std::move(rk.kernel);
    out.verma_quotient = rk.rank == tensor_rep.dim;
    if (out.verma_quotient) {
        out.module = quotient_module(out.verma, out.kernel, label);
        // projection in quotient coordinates
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> proj_trips;
        std::vector<std::size_t> free = out.kernel.free_columns();
        for (std::size_t col = 0; col < out.verma.dim; ++col) {
            std::vector<std::uint32_t> unit(out.verma.dim, 0);
            unit[col] = 1;
            std::vector<std::uint32_t> img = project_to_quotient(out.kernel, unit);
            for (std::size_t row = 0; row < img.size(); ++row) {
                if (img[row] != 0) proj_trips.emplace_back(row, col, img[row]);
            }
        }
        out.verma_to_weyl =
            MatrixGFp::from_triplets(f, out.module.dim, out.verma.dim, proj_trips);
    } else {
        out.module = std::move(tensor_rep);
        out.verma_to_weyl = std::move(phi);
    }
    return out;
}

Representation weyl_module(PrimeField f, std::int64_t r, std::int64_t s) {
    return weyl_realization(f, r, s).module;
}

std::vector<std::pair<Weight, SubspaceBasis>> singular_vectors(const Representation& rep) {
    const std::size_t e1 = rep.algebra.index_of("e1");
    const std::size_t e2 = rep.algebra.index_of("e2");
    auto cols_e1 = rep.actions[e1].columns();
    auto cols_e2 = rep.actions[e2].columns();

    std::vector<std::pair<Weight, SubspaceBasis>> out;
    for (const auto& [wt, block] : weight_blocks(rep)) {
        if (wt == rep.highest_weight) continue;
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
        for (std::size_t c = 0; c < block.size(); ++c) {
            for (const auto& [row, val] : cols_e1[block[c]]) trips.emplace_back(row, c, val);
            for (const auto& [row, val] : cols_e2[block[c]]) trips.emplace_back(rep.dim + row, c, val);
        }
        MatrixGFp m = MatrixGFp::from_triplets(rep.field, 2 * rep.dim, block.size(), trips);
        RankKernel rk = rank_and_kernel(m);
        if (rk.kernel.dim() == 0) continue;
        SubspaceBasis ambient(rep.field, rep.dim);
        for (const auto& kv : rk.kernel.basis()) {
            std::vector<std::uint32_t> v(rep.dim, 0);
            for (std::size_t c = 0; c < block.size(); ++c) v[block[c]] = kv[c];
            ambient.insert(std::move(v));
        }
        out.emplace_back(wt, std::move(ambient));
    }
    return out;
}

Representation simple_module(PrimeField f, std::int64_t r, std::int64_t s) {
    require_restricted(f, r, s);
    Representation v = weyl_module(f, r, s);
    const std::string label = rs_label("simple", r, s);
    for (std::size_t guard = 0; guard <= v.dim + 1; ++guard) {
        auto sing = singular_vectors(v);
        if (sing.empty()) {
            v.label = label;
            return v;
        }
        std::vector<std::vector<std::uint32_t>> seeds;
        for (const auto& [wt, basis] : sing) {
            for (const auto& row : basis.basis()) seeds.push_back(row);
        }
        SubspaceBasis sub = generated_submodule(v, seeds);
        std::size_t before = v.dim;
        v = quotient_module(v, sub, label);
        if (v.dim >= before) {
            throw Error(Errc::InternalInconsistency, "simple_module: dimension did not decrease");
        }
    }
    throw Error(Errc::InternalInconsistency, "simple_module: quotient loop did not terminate");
}

Representation dual_module(const Representation& rep) {
    Representation d;
    d.algebra = rep.algebra;
    d.field = rep.field;
    d.dim = rep.dim;
    d.label = "dual(" + rep.label + ")";
    d.weights.reserve(rep.dim);
    for (const auto& w : rep.weights) d.weights.push_back(-w);
    d.highest_weight = {rep.highest_weight.b, rep.highest_weight.a};  // -w0
    d.actions.reserve(rep.actions.size());
    for (const auto& a : rep.actions) {
        d.actions.push_back(a.transpose().scaled(rep.field.neg(1)));
    }
    return d;
}

Representation induced_module(PrimeField f, std::int64_t r, std::int64_t s) {
    require_restricted(f, r, s);
    Representation ind = dual_module(weyl_module(f, s, r));
    ind.label = rs_label("induced", r, s);
    return ind;
}

Representation as_gl3_module(const Representation& rep) {
    if (rep.algebra.name != "sl3") {
        throw Error(Errc::AlgebraModuleMismatch, "as_gl3_module expects an sl3 module");
    }
    Representation g = rep;
    g.algebra = gl3_spec();
    g.actions.push_back(MatrixGFp::zero(rep.field, rep.dim, rep.dim));
    return g;
}

Representation direct_sum(const Representation& x, const Representation& y) {
    if (x.algebra != y.algebra || !(x.field == y.field)) {
        throw Error(Errc::AlgebraModuleMismatch, "direct_sum: algebra or field mismatch");
    }
    Representation s;
    s.algebra = x.algebra;
    s.field = x.field;
    s.dim = x.dim + y.dim;
    s.label = "sum(" + x.label + "," + y.label + ")";
    s.weights = x.weights;
    s.weights.insert(s.weights.end(), y.weights.begin(), y.weights.end());
    s.highest_weight =
        dominance_leq(y.highest_weight, x.highest_weight) ? x.highest_weight
        : dominance_leq(x.highest_weight, y.highest_weight)
            ? y.highest_weight
            : std::max(x.highest_weight, y.highest_weight);
    for (std::size_t op = 0; op < x.actions.size(); ++op) {
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
        for (std::size_t r = 0; r < x.dim; ++r) {
            for (const auto& e : x.actions[op].row(r)) trips.emplace_back(r, e.col, e.val);
        }
        for (std::size_t r = 0; r < y.dim; ++r) {
            for (const auto& e : y.actions[op].row(r)) {
                trips.emplace_back(x.dim + r, x.dim + e.col, e.val);
            }
        }
        s.actions.push_back(MatrixGFp::from_triplets(x.field, s.dim, s.dim, trips));
    }
    return s;
}

std::vector<std::string> check_representation(const Representation& rep) {
    std::vector<std::string> bad;
    const LieAlgebraSpec& g = rep.algebra;
    PrimeField f = rep.field;
    if (rep.actions.size() != g.dim()) {
        bad.push_back("action count != algebra dimension");
        return bad;
    }
    for (const auto& a : rep.actions) {
        if (a.rows() != rep.dim || a.cols() != rep.dim) {
            bad.push_back("action matrix shape mismatch");
            return bad;
        }
    }

    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            MatrixGFp comm = rep.actions[i].multiply(rep.actions[j])
                                 .minus(rep.actions[j].multiply(rep.actions[i]));
            MatrixGFp expect = MatrixGFp::zero(f, rep.dim, rep.dim);
            for (const auto& [k, c] : g.bracket(i, j)) {
                expect = expect.plus(rep.actions[k].scaled(f.reduce(c)));
            }
            if (!(comm == expect)) {
                bad.push_back("bracket compatibility fails at [" + g.basis[i] + "," + g.basis[j] + "]");
            }
        }
    }

    for (std::size_t x = 0; x < g.dim(); ++x) {
        Weight beta = g.weights[x];
        for (std::size_t r = 0; r < rep.dim; ++r) {
            for (const auto& e : rep.actions[x].row(r)) {
                if (rep.weights[r] != rep.weights[e.col] + beta) {
                    bad.push_back("weight compatibility fails in action of " + g.basis[x]);
                    r = rep.dim;
                    break;
                }
            }
        }
    }

    for (auto [h, pick] : {std::pair{g.index_of("h1"), 0}, std::pair{g.index_of("h2"), 1}}) {
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
        for (std::size_t k = 0; k < rep.dim; ++k) {
            trips.emplace_back(k, k, pick == 0 ? rep.weights[k].a : rep.weights[k].b);
        }
        if (!(rep.actions[h] == MatrixGFp::from_triplets(f, rep.dim, rep.dim, trips))) {
            bad.push_back("h-eigenvalue mismatch on " + g.basis[h]);
        }
    }

    for (const char* lab : {"e1", "e2", "e3", "f1", "f2", "f3"}) {
        const MatrixGFp& a = rep.actions[g.index_of(lab)];
        if (!a.power(f.p).is_zero()) {
            bad.push_back(std::string("p-th power of ") + lab + " action is nonzero");
        }
    }
    return bad;
}

}  // namespace modcohom

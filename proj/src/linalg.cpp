#include "modcohom/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace modcohom {

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// a += c * b on sorted sparse rows.
SparseRow sparse_axpy(PrimeField f, const SparseRow& a, const SparseRow& b, std::uint32_t c) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            std::uint32_t v = f.mul(c, b[j].second);
            if (v != 0) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            std::uint32_t v = f.add(a[i].second, f.mul(c, b[j].second));
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

void sparse_scale(PrimeField f, SparseRow& a, std::uint32_t c) {
    for (auto& e : a) e.second = f.mul(e.second, c);
}

struct RrefResult {
    std::vector<std::size_t> pivots;   // strictly increasing
    std::vector<SparseRow> rows;       // one per pivot, RREF
};

RrefResult sparse_rref(PrimeField f, std::vector<SparseRow> active) {
    RrefResult out;
    std::vector<std::pair<std::size_t, SparseRow>> done;  // (pivot, row)
    std::erase_if(active, [](const SparseRow& r) { return r.empty(); });
    while (!active.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < active.size(); ++i) {
            if (active[i].front().first < active[best].front().first) best = i;
        }
        SparseRow piv = std::move(active[best]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
        const std::uint32_t lead_col = piv.front().first;
        sparse_scale(f, piv, f.inv(piv.front().second));
        auto eliminate = [&](SparseRow& r) {
            auto it = std::lower_bound(r.begin(), r.end(), lead_col,
                                       [](const auto& e, std::uint32_t c) { return e.first < c; });
            if (it != r.end() && it->first == lead_col) {
                r = sparse_axpy(f, r, piv, f.neg(it->second));
            }
        };
        for (auto& r : active) eliminate(r);
        for (auto& [q, r] : done) eliminate(r);
        done.emplace_back(lead_col, std::move(piv));
        std::erase_if(active, [](const SparseRow& r) { return r.empty(); });
    }
    std::sort(done.begin(), done.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [q, r] : done) {
        out.pivots.push_back(q);
        out.rows.push_back(std::move(r));
    }
    return out;
}

RrefResult dense_rref(PrimeField f, std::vector<std::vector<std::uint32_t>> rows, std::size_t cols) {
    const RowKernels& kr = active_kernels();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        if (rows[r][c] != 1) kr.scale(rows[r].data() + c, f.inv(rows[r][c]), cols - c, f.p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            kr.axpy(rows[i].data() + c, rows[r].data() + c, f.neg(rows[i][c]), cols - c, f.p);
        }
        pivots.push_back(c);
        ++r;
    }
    RrefResult out;
    out.pivots = pivots;
    out.rows.resize(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t c = pivots[i]; c < cols; ++c) {
            if (rows[i][c] != 0) out.rows[i].emplace_back(static_cast<std::uint32_t>(c), rows[i][c]);
        }
    }
    return out;
}

RrefResult rref_of(const MatrixGFp& m, ElimMode mode) {
    bool dense = mode == ElimMode::Dense ||
                 (mode == ElimMode::Auto && m.density() > kDenseSwitchDensity);
    if (dense) {
        std::vector<std::vector<std::uint32_t>> rows(m.rows(),
                                                     std::vector<std::uint32_t>(m.cols(), 0));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (const auto& e : m.row(i)) rows[i][e.col] = e.val;
        }
        return dense_rref(m.field(), std::move(rows), m.cols());
    }
    std::vector<SparseRow> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.row(i).size());
        for (const auto& e : m.row(i)) rows[i].emplace_back(e.col, e.val);
    }
    return sparse_rref(m.field(), std::move(rows));
}

}  // namespace

MatrixGFp MatrixGFp::zero(PrimeField f, std::size_t rows, std::size_t cols) {
    MatrixGFp m;
    m.field_ = f;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_ptr_.assign(rows + 1, 0);
    return m;
}

MatrixGFp MatrixGFp::identity(PrimeField f, std::size_t n) {
    MatrixGFp m = zero(f, n, n);
    m.entries_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.entries_.push_back({static_cast<std::uint32_t>(i), 1});
        m.row_ptr_[i + 1] = i + 1;
    }
    return m;
}

MatrixGFp MatrixGFp::from_triplets(
    PrimeField f, std::size_t rows, std::size_t cols,
    const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& trips) {
    std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> red;
    red.reserve(trips.size());
    for (const auto& [r, c, v] : trips) {
        if (r >= rows || c >= cols) {
            throw Error(Errc::DimensionMismatch, "triplet outside matrix bounds");
        }
        std::uint32_t rv = f.reduce(v);
        if (rv != 0) red.emplace_back(r, c, rv);
    }
    std::sort(red.begin(), red.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    MatrixGFp m = zero(f, rows, cols);
    m.entries_.reserve(red.size());
    std::size_t i = 0;
    while (i < red.size()) {
        std::size_t r = std::get<0>(red[i]), c = std::get<1>(red[i]);
        std::uint32_t acc = 0;
        while (i < red.size() && std::get<0>(red[i]) == r && std::get<1>(red[i]) == c) {
            acc = f.add(acc, std::get<2>(red[i]));
            ++i;
        }
        if (acc != 0) m.entries_.push_back({static_cast<std::uint32_t>(c), acc});
        m.row_ptr_[r + 1] = m.entries_.size();
    }
    for (std::size_t r = 1; r <= rows; ++r) {
        m.row_ptr_[r] = std::max(m.row_ptr_[r], m.row_ptr_[r - 1]);
    }
    return m;
}

MatrixGFp MatrixGFp::from_dense(PrimeField f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows[0].size();
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw Error(Errc::DimensionMismatch, "ragged dense matrix");
        for (std::size_t c = 0; c < nc; ++c) {
            if (rows[r][c] != 0) trips.emplace_back(r, c, rows[r][c]);
        }
    }
    return from_triplets(f, nr, nc, trips);
}

double MatrixGFp::density() const {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    return static_cast<double>(entries_.size()) / (static_cast<double>(rows_) * static_cast<double>(cols_));
}

std::uint32_t MatrixGFp::at(std::size_t r, std::size_t c) const {
    auto rw = row(r);
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const MatrixEntry& e, std::size_t col) { return e.col < col; });
    return (it != rw.end() && it->col == c) ? it->val : 0;
}

std::vector<std::uint32_t> MatrixGFp::apply(const std::vector<std::uint32_t>& x) const {
    if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "apply: vector length != cols");
    std::vector<std::uint32_t> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (const auto& e : row(r)) {
            acc += static_cast<std::uint64_t>(e.val) * x[e.col];
            if (acc >= (1ull << 62)) acc %= field_.p;
        }
        y[r] = static_cast<std::uint32_t>(acc % field_.p);
    }
    return y;
}

std::vector<std::vector<std::uint32_t>> MatrixGFp::to_dense() const {
    std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_, 0));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& e : row(r)) out[r][e.col] = e.val;
    }
    return out;
}

std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> MatrixGFp::columns() const {
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cols(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& e : row(r)) cols[e.col].emplace_back(static_cast<std::uint32_t>(r), e.val);
    }
    return cols;
}

MatrixGFp MatrixGFp::transpose() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
    trips.reserve(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& e : row(r)) trips.emplace_back(e.col, r, e.val);
    }
    return from_triplets(field_, cols_, rows_, trips);
}

MatrixGFp MatrixGFp::multiply(const MatrixGFp& rhs) const {
    if (cols_ != rhs.rows_) throw Error(Errc::DimensionMismatch, "multiply: inner dims differ");
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
    std::vector<std::uint32_t> scratch(rhs.cols_, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t r = 0; r < rows_; ++r) {
        touched.clear();
        for (const auto& e : row(r)) {
            for (const auto& g : rhs.row(e.col)) {
                if (scratch[g.col] == 0) touched.push_back(g.col);
                scratch[g.col] = field_.add(scratch[g.col], field_.mul(e.val, g.val));
            }
        }
        for (std::uint32_t c : touched) {
            if (scratch[c] != 0) trips.emplace_back(r, c, scratch[c]);
            scratch[c] = 0;
        }
    }
    return from_triplets(field_, rows_, rhs.cols_, trips);
}

MatrixGFp MatrixGFp::scaled(std::uint32_t c) const {
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
    trips.reserve(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& e : row(r)) trips.emplace_back(r, e.col, field_.mul(e.val, c));
    }
    return from_triplets(field_, rows_, cols_, trips);
}

MatrixGFp MatrixGFp::plus(const MatrixGFp& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(Errc::DimensionMismatch, "plus: shapes differ");
    }
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
    trips.reserve(entries_.size() + rhs.entries_.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& e : row(r)) trips.emplace_back(r, e.col, e.val);
        for (const auto& e : rhs.row(r)) trips.emplace_back(r, e.col, e.val);
    }
    return from_triplets(field_, rows_, cols_, trips);
}

MatrixGFp MatrixGFp::minus(const MatrixGFp& rhs) const {
    return plus(rhs.scaled(field_.neg(1)));
}

MatrixGFp MatrixGFp::power(std::uint64_t e) const {
    if (rows_ != cols_) throw Error(Errc::DimensionMismatch, "power: matrix not square");
    MatrixGFp acc = identity(field_, rows_);
    MatrixGFp base = *this;
    while (e) {
        if (e & 1) acc = acc.multiply(base);
        e >>= 1;
        if (e) base = base.multiply(base);
    }
    return acc;
}

MatrixGFp MatrixGFp::submatrix(std::span<const std::uint32_t> row_ids,
                               std::span<const std::uint32_t> col_ids) const {
    std::vector<std::int64_t> col_map(cols_, -1);
    for (std::size_t j = 0; j < col_ids.size(); ++j) col_map[col_ids[j]] = static_cast<std::int64_t>(j);
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
    for (std::size_t i = 0; i < row_ids.size(); ++i) {
        for (const auto& e : row(row_ids[i])) {
            if (col_map[e.col] >= 0) trips.emplace_back(i, static_cast<std::size_t>(col_map[e.col]), e.val);
        }
    }
    return from_triplets(field_, row_ids.size(), col_ids.size(), trips);
}

MatrixGFp MatrixGFp::vstack(const MatrixGFp& below) const {
    if (cols_ != below.cols_) throw Error(Errc::DimensionMismatch, "vstack: column counts differ");
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
    trips.reserve(entries_.size() + below.entries_.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& e : row(r)) trips.emplace_back(r, e.col, e.val);
    }
    for (std::size_t r = 0; r < below.rows_; ++r) {
        for (const auto& e : below.row(r)) trips.emplace_back(rows_ + r, e.col, e.val);
    }
    return from_triplets(field_, rows_ + below.rows_, cols_, trips);
}

SubspaceBasis SubspaceBasis::from_vectors(PrimeField f, std::size_t ambient,
                                          const std::vector<std::vector<std::uint32_t>>& vecs) {
    SubspaceBasis b(f, ambient);
    for (const auto& v : vecs) b.insert(v);
    return b;
}

std::vector<std::size_t> SubspaceBasis::free_columns() const {
    std::vector<std::size_t> free;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
        } else {
            free.push_back(c);
        }
    }
    return free;
}

std::vector<std::uint32_t> SubspaceBasis::reduce(std::vector<std::uint32_t> v) const {
    if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "reduce: vector length != ambient");
    const RowKernels& kr = active_kernels();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint32_t c = v[pivots_[k]];
        if (c != 0) {
            kr.axpy(v.data(), rows_[k].data(), field_.neg(c), ambient_, field_.p);
        }
    }
    return v;
}

bool SubspaceBasis::contains(const std::vector<std::uint32_t>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool SubspaceBasis::insert(std::vector<std::uint32_t> v) {
    v = reduce(std::move(v));
    std::size_t lead = ambient_;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (v[c] != 0) {
            lead = c;
            break;
        }
    }
    if (lead == ambient_) return false;
    const RowKernels& kr = active_kernels();
    if (v[lead] != 1) kr.scale(v.data(), field_.inv(v[lead]), ambient_, field_.p);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint32_t c = rows_[k][lead];
        if (c != 0) kr.axpy(rows_[k].data(), v.data(), field_.neg(c), ambient_, field_.p);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

RankKernel rank_and_kernel(const MatrixGFp& m, ElimMode mode) {
    PrimeField f = m.field();
    RrefResult rr = rref_of(m, mode);
    RankKernel out;
    out.rank = rr.pivots.size();
    out.kernel = SubspaceBasis(f, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t q : rr.pivots) is_pivot[q] = true;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint32_t> x(m.cols(), 0);
        x[c] = 1;
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
            auto it = std::lower_bound(rr.rows[k].begin(), rr.rows[k].end(), c,
                                       [](const auto& e, std::size_t col) { return e.first < col; });
            if (it != rr.rows[k].end() && it->first == c) x[rr.pivots[k]] = f.neg(it->second);
        }
        out.kernel.insert(std::move(x));
    }
    return out;
}

std::size_t rank_of(const MatrixGFp& m, ElimMode mode) { return rref_of(m, mode).pivots.size(); }

SubspaceBasis row_space(const MatrixGFp& m, ElimMode mode) {
    RrefResult rr = rref_of(m, mode);
    SubspaceBasis b(m.field(), m.cols());
    for (const auto& r : rr.rows) {
        std::vector<std::uint32_t> v(m.cols(), 0);
        for (const auto& [c, val] : r) v[c] = val;
        b.insert(std::move(v));
    }
    return b;
}

SubspaceBasis rowspace_closure(PrimeField f, std::size_t ambient_dim,
                               const std::vector<std::vector<std::uint32_t>>& seeds,
                               const std::vector<MatrixGFp>& operators) {
    for (const auto& op : operators) {
        if (op.rows() != ambient_dim || op.cols() != ambient_dim) {
            throw Error(Errc::DimensionMismatch, "rowspace_closure: operator not square of ambient size");
        }
    }
    SubspaceBasis basis(f, ambient_dim);
    std::vector<std::vector<std::uint32_t>> pending;
    for (const auto& s : seeds) {
        if (s.size() != ambient_dim) {
            throw Error(Errc::DimensionMismatch, "rowspace_closure: seed length != ambient");
        }
        if (basis.insert(s)) pending.push_back(s);
    }
    while (!pending.empty()) {
        std::vector<std::uint32_t> v = std::move(pending.back());
        pending.pop_back();
        for (const auto& op : operators) {
            std::vector<std::uint32_t> y = op.apply(v);
            if (basis.insert(y)) pending.push_back(std::move(y));
        }
    }
    return basis;
}

}  // namespace modcohom

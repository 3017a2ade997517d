#pragma once
// Exact sparse/dense linear algebra over F_p: rank, kernel basis, reduced row
// echelon form, and row-space closure under a set of operators.
//
// Conventions used throughout the project:
//   * MatrixGFp is immutable CSR; stored entries are nonzero residues.
//   * Vectors are coordinate rows (std::vector<uint32_t>); a matrix acts on
//     them as columns, y = A x.
//   * SubspaceBasis keeps the unique RREF of its row space, so subspace
//     equality is plain row-by-row equality.
// Elimination picks the first nonzero in column order; over a finite field
// there is nothing numerical to stabilise, and the echelon form is canonical
// whichever internal storage (sparse or dense) did the work.

#include "modcohom/gfp.hpp"
#include "modcohom/gfp_kernels.hpp"

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

namespace modcohom {

struct MatrixEntry {
    std::uint32_t col;
    std::uint32_t val;
    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

class MatrixGFp {
public:
    MatrixGFp() = default;
    static MatrixGFp zero(PrimeField f, std::size_t rows, std::size_t cols);
    static MatrixGFp identity(PrimeField f, std::size_t n);
    // Triplets may repeat (accumulated) and carry arbitrary integers (reduced).
    static MatrixGFp from_triplets(PrimeField f, std::size_t rows, std::size_t cols,
                                   const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& trips);
    static MatrixGFp from_dense(PrimeField f, const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    double density() const;
    PrimeField field() const { return field_; }

    std::span<const MatrixEntry> row(std::size_t i) const {
        return {entries_.data() + row_ptr_[i], entries_.data() + row_ptr_[i + 1]};
    }
    std::uint32_t at(std::size_t r, std::size_t c) const;

    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& x) const;
    std::vector<std::vector<std::uint32_t>> to_dense() const;
    // Column-major view, cols[c] = list of (row, val).
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> columns() const;

    MatrixGFp transpose() const;
    MatrixGFp multiply(const MatrixGFp& rhs) const;
    MatrixGFp scaled(std::uint32_t c) const;
    MatrixGFp plus(const MatrixGFp& rhs) const;
    MatrixGFp minus(const MatrixGFp& rhs) const;
    MatrixGFp power(std::uint64_t e) const;
    MatrixGFp submatrix(std::span<const std::uint32_t> row_ids,
                        std::span<const std::uint32_t> col_ids) const;
    MatrixGFp vstack(const MatrixGFp& below) const;

    bool is_zero() const { return entries_.empty(); }
    friend bool operator==(const MatrixGFp&, const MatrixGFp&) = default;

private:
    PrimeField field_{};
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<MatrixEntry> entries_;
};

// Row space in reduced row echelon form; pivot columns strictly increasing.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(PrimeField f, std::size_t ambient) : field_(f), ambient_(ambient) {}
    static SubspaceBasis from_vectors(PrimeField f, std::size_t ambient,
                                      const std::vector<std::vector<std::uint32_t>>& vecs);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    PrimeField field() const { return field_; }
    const std::vector<std::vector<std::uint32_t>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::size_t> free_columns() const;

    // Residual of v after eliminating all pivot coordinates; zero iff v lies
    // in the subspace.
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;
    bool contains(const std::vector<std::uint32_t>& v) const;
    // Inserts v, keeping RREF; returns true when the dimension grew.
    bool insert(std::vector<std::uint32_t> v);

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    PrimeField field_{};
    std::size_t ambient_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

enum class ElimMode { Auto, Sparse, Dense };

// Density above which Auto switches to dense elimination. Either path gives
// identical results; this only trades speed.
inline constexpr double kDenseSwitchDensity = 0.20;

struct RankKernel {
    std::size_t rank = 0;
    SubspaceBasis kernel;  // right kernel {x : A x = 0}, canonical RREF
};

RankKernel rank_and_kernel(const MatrixGFp& m, ElimMode mode = ElimMode::Auto);
std::size_t rank_of(const MatrixGFp& m, ElimMode mode = ElimMode::Auto);

// Canonical RREF basis of the row space of m.
SubspaceBasis row_space(const MatrixGFp& m, ElimMode mode = ElimMode::Auto);

// Smallest subspace containing the seeds and stable under every operator,
// computed by iterated apply-and-reduce until the dimension stabilises.
// Operators must be square of size ambient_dim (DimensionMismatch otherwise).
SubspaceBasis rowspace_closure(PrimeField f, std::size_t ambient_dim,
                               const std::vector<std::vector<std::uint32_t>>& seeds,
                               const std::vector<MatrixGFp>& operators);

}  // namespace modcohom

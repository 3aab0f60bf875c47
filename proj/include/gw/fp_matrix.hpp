#pragma once

#include "gw/fp.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gw {

struct Echelon;

// Dense matrix over F_p with exact arithmetic. Row reduction always takes
// the leftmost available pivot in row order, so echelon forms and everything
// derived from them (rank, kernels, solutions, inverses, chosen bases) are
// deterministic functions of the input. All higher layers rely on that.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FpMatrix identity(std::size_t n, std::uint32_t p);
    static FpMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows,
                              std::uint32_t p);
    static FpMatrix column(const std::vector<std::uint32_t>& entries, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v % p_; }

    bool operator==(const FpMatrix& o) const = default;

    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix scaled(std::uint32_t c) const;
    FpMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    Echelon rref() const;
    std::size_t rank() const;

    // Columns form a basis of { x : A x = 0 }. Each basis vector has a 1 in
    // "its" free coordinate, echoing the rref free columns left to right.
    FpMatrix kernel_basis() const;

    // Solves A X = B for X (B may carry several right-hand sides at once).
    // Returns nullopt when some column of B is outside the column space.
    std::optional<FpMatrix> solve(const FpMatrix& b) const;

    std::optional<FpMatrix> inverse() const;

    // Basis of the column space: the columns of A sitting at rref pivot
    // positions, kept in their original order.
    FpMatrix column_space_basis() const;

    FpMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    FpMatrix columns(const std::vector<std::size_t>& idx) const;
    FpMatrix row(std::size_t r) const;
    FpMatrix col(std::size_t c) const;

    static FpMatrix hstack(const std::vector<FpMatrix>& parts);
    static FpMatrix vstack(const std::vector<FpMatrix>& parts);
    static FpMatrix block_diag(const std::vector<FpMatrix>& parts);

    FpMatrix pow(std::uint64_t e) const; // square matrices only

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;

    void check_same_shape(const FpMatrix& o) const;
};

struct Echelon {
    FpMatrix mat;                        // reduced row echelon form
    std::vector<std::size_t> pivot_cols; // one entry per pivot row
    std::size_t rank = 0;
};

// Standard-basis columns extending span(cols of B) to the full space F^n,
// chosen greedily by increasing coordinate index. B must have n rows.
FpMatrix complement_basis(const FpMatrix& b);

// Coordinates of each column of v in the basis given by the columns of B.
// Throws if some column is outside the span (callers pass genuine members).
FpMatrix coordinates_in_basis(const FpMatrix& basis, const FpMatrix& v);

// True when every column of v lies in the span of the columns of B.
bool spans_contain(const FpMatrix& basis, const FpMatrix& v);

} // namespace gw

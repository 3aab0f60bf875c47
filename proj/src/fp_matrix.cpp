#include "gw/fp_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace gw {

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("fp_inv: zero is not invertible");
    return fp_pow(a, p - 2, p);
}

bool fp_is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    if (!fp_is_prime(p)) throw std::domain_error("FpMatrix: modulus must be prime");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows,
                             std::uint32_t p) {
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows.begin()->size() : 0;
    FpMatrix m(nr, nc, p);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw std::invalid_argument("from_rows: ragged rows");
        std::size_t c = 0;
        for (long long v : row) m.set(r, c++, fp_from_int(v, p));
        ++r;
    }
    return m;
}

FpMatrix FpMatrix::column(const std::vector<std::uint32_t>& entries, std::uint32_t p) {
    FpMatrix m(entries.size(), 1, p);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

void FpMatrix::check_same_shape(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw std::invalid_argument("FpMatrix: shape or modulus mismatch");
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    check_same_shape(o);
    FpMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp_add(data_[i], o.data_[i], p_);
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    check_same_shape(o);
    FpMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp_sub(data_[i], o.data_[i], p_);
    return r;
}

namespace {

// Multiply-based reduction x -> x mod p for 32 bit x, replacing the
// hardware division in the hot loops. The magic constant trick needs both
// operands below 2^32; entries stay below p < 2^15 so every accumulated
// value here fits.
struct FastMod {
    std::uint64_t magic;
    std::uint32_t p;
    explicit FastMod(std::uint32_t prime) : magic(~0ull / prime + 1), p(prime) {}
    std::uint32_t operator()(std::uint64_t x) const {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(magic * x) * p) >> 64);
    }
};

} // namespace

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_)
        throw std::invalid_argument("FpMatrix: product shape mismatch");
    FpMatrix r(rows_, o.cols_, p_);
    if (rows_ == 0 || cols_ == 0 || o.cols_ == 0) return r;
    if (p_ == 2) {
        // Wide products pack the rows of o into machine words and
        // xor-accumulate; the packing overhead only pays off above a size
        // threshold, smaller products xor the rows directly.
        if (o.cols_ >= 64 && rows_ * cols_ >= 4096) {
            const std::size_t W = (o.cols_ + 63) / 64;
            std::vector<std::uint64_t> ob(o.rows_ * W, 0), acc(W);
            for (std::size_t k = 0; k < o.rows_; ++k) {
                const std::uint32_t* src = &o.data_[k * o.cols_];
                std::uint64_t* dst = &ob[k * W];
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (src[j]) dst[j >> 6] |= 1ull << (j & 63);
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                std::fill(acc.begin(), acc.end(), 0);
                const std::uint32_t* a = &data_[i * cols_];
                for (std::size_t k = 0; k < cols_; ++k) {
                    if (!a[k]) continue;
                    const std::uint64_t* src = &ob[k * W];
                    for (std::size_t w = 0; w < W; ++w) acc[w] ^= src[w];
                }
                std::uint32_t* dst = &r.data_[i * o.cols_];
                for (std::size_t j = 0; j < o.cols_; ++j)
                    dst[j] = (acc[j >> 6] >> (j & 63)) & 1u;
            }
            return r;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            const std::uint32_t* a = &data_[i * cols_];
            std::uint32_t* dst = &r.data_[i * o.cols_];
            for (std::size_t k = 0; k < cols_; ++k) {
                if (!a[k]) continue;
                const std::uint32_t* src = &o.data_[k * o.cols_];
                for (std::size_t j = 0; j < o.cols_; ++j) dst[j] ^= src[j];
            }
        }
        return r;
    }
    const FastMod redp(p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t a = at(i, k);
            if (!a) continue;
            const std::uint32_t* src = &o.data_[k * o.cols_];
            std::uint32_t* dst = &r.data_[i * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j)
                dst[j] = redp(static_cast<std::uint64_t>(a) * src[j] + dst[j]);
        }
    }
    return r;
}

FpMatrix FpMatrix::scaled(std::uint32_t c) const {
    FpMatrix r = *this;
    for (auto& v : r.data_) v = fp_mul(v, c, p_);
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FpMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

Echelon FpMatrix::rref() const {
    Echelon e{*this, {}, 0};
    if (rows_ == 0 || cols_ == 0) return e;
    FpMatrix& m = e.mat;
    // Rows at or below `lead` are zero left of the current column, so row
    // operations never need to look left of it. Both paths below use that.
    if (p_ == 2 && cols_ >= 64 && rows_ * cols_ >= 32768) {
        const std::size_t W = (cols_ + 63) / 64;
        std::vector<std::uint64_t> bits(rows_ * W, 0);
        for (std::size_t r = 0; r < rows_; ++r) {
            const std::uint32_t* src = &data_[r * cols_];
            std::uint64_t* dst = &bits[r * W];
            for (std::size_t c = 0; c < cols_; ++c)
                if (src[c]) dst[c >> 6] |= 1ull << (c & 63);
        }
        std::size_t lead = 0;
        for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
            const std::size_t w = c >> 6;
            const std::uint64_t mask = 1ull << (c & 63);
            std::size_t piv = lead;
            while (piv < rows_ && !(bits[piv * W + w] & mask)) ++piv;
            if (piv == rows_) continue;
            if (piv != lead)
                for (std::size_t j = w; j < W; ++j)
                    std::swap(bits[piv * W + j], bits[lead * W + j]);
            const std::uint64_t* lr = &bits[lead * W];
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == lead) continue;
                std::uint64_t* rr = &bits[r * W];
                if (rr[w] & mask)
                    for (std::size_t j = w; j < W; ++j) rr[j] ^= lr[j];
            }
            e.pivot_cols.push_back(c);
            ++lead;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint32_t* dst = &m.data_[r * cols_];
            const std::uint64_t* src = &bits[r * W];
            for (std::size_t c = 0; c < cols_; ++c)
                dst[c] = (src[c >> 6] >> (c & 63)) & 1u;
        }
        e.rank = e.pivot_cols.size();
        return e;
    }
    if (p_ == 3 && cols_ >= 64 && rows_ * cols_ >= 32768) {
        // Bit-sliced GF(3): entry x sits in two planes as (lo, hi) with
        // 1 = (1,0) and 2 = (0,1). Sums are carry-free word ops, negation
        // swaps the planes (since -x = 2x), so elimination subtracts the
        // lead row by adding it straight (f = 2) or plane-swapped (f = 1).
        const std::size_t W = (cols_ + 63) / 64;
        std::vector<std::uint64_t> lo(rows_ * W, 0), hi(rows_ * W, 0);
        for (std::size_t r = 0; r < rows_; ++r) {
            const std::uint32_t* src = &data_[r * cols_];
            std::uint64_t* dl = &lo[r * W];
            std::uint64_t* dh = &hi[r * W];
            for (std::size_t c = 0; c < cols_; ++c) {
                if (src[c] == 1) dl[c >> 6] |= 1ull << (c & 63);
                else if (src[c] == 2) dh[c >> 6] |= 1ull << (c & 63);
            }
        }
        std::size_t lead = 0;
        for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
            const std::size_t w = c >> 6;
            const std::uint64_t mask = 1ull << (c & 63);
            std::size_t piv = lead;
            while (piv < rows_ && !((lo[piv * W + w] | hi[piv * W + w]) & mask)) ++piv;
            if (piv == rows_) continue;
            if (piv != lead)
                for (std::size_t j = w; j < W; ++j) {
                    std::swap(lo[piv * W + j], lo[lead * W + j]);
                    std::swap(hi[piv * W + j], hi[lead * W + j]);
                }
            std::uint64_t* ll = &lo[lead * W];
            std::uint64_t* lh = &hi[lead * W];
            if (lh[w] & mask)
                for (std::size_t j = w; j < W; ++j) std::swap(ll[j], lh[j]);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == lead) continue;
                std::uint64_t* rl = &lo[r * W];
                std::uint64_t* rh = &hi[r * W];
                std::uint64_t f1 = rl[w] & mask, f2 = rh[w] & mask;
                if (!(f1 | f2)) continue;
                const std::uint64_t* b0 = f1 ? lh : ll;
                const std::uint64_t* b1 = f1 ? ll : lh;
                for (std::size_t j = w; j < W; ++j) {
                    const std::uint64_t a0 = rl[j], a1 = rh[j];
                    const std::uint64_t u = (a0 | b1[j]) ^ (a1 | b0[j]);
                    const std::uint64_t s = a1 | b1[j];
                    const std::uint64_t c0 = u ^ s;
                    rl[j] = c0;
                    rh[j] = c0 ^ (a0 | b0[j]) ^ s;
                }
            }
            e.pivot_cols.push_back(c);
            ++lead;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint32_t* dst = &m.data_[r * cols_];
            const std::uint64_t* sl = &lo[r * W];
            const std::uint64_t* sh = &hi[r * W];
            for (std::size_t c = 0; c < cols_; ++c)
                dst[c] = ((sl[c >> 6] >> (c & 63)) & 1u) +
                         2u * ((sh[c >> 6] >> (c & 63)) & 1u);
        }
        e.rank = e.pivot_cols.size();
        return e;
    }
    const FastMod redp(p_);
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t piv = lead;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != lead)
            for (std::size_t j = c; j < cols_; ++j)
                std::swap(m.data_[piv * cols_ + j], m.data_[lead * cols_ + j]);
        std::uint32_t* lr = &m.data_[lead * cols_];
        std::uint32_t inv = fp_inv(lr[c], p_);
        if (inv != 1)
            for (std::size_t j = c; j < cols_; ++j)
                lr[j] = redp(static_cast<std::uint64_t>(lr[j]) * inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            std::uint32_t* rr = &m.data_[r * cols_];
            std::uint32_t f = rr[c];
            if (!f) continue;
            if (p_ == 2) {
                for (std::size_t j = c; j < cols_; ++j) rr[j] ^= lr[j];
            } else {
                const std::uint64_t fn = p_ - f; // add fn times the lead row
                for (std::size_t j = c; j < cols_; ++j)
                    rr[j] = redp(rr[j] + fn * lr[j]);
            }
        }
        e.pivot_cols.push_back(c);
        ++lead;
    }
    e.rank = e.pivot_cols.size();
    return e;
}

std::size_t FpMatrix::rank() const { return rref().rank; }

FpMatrix FpMatrix::kernel_basis() const {
    Echelon e = rref();
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pi < e.pivot_cols.size() && e.pivot_cols[pi] == c) ++pi;
            else free_cols.push_back(c);
        }
    }
    FpMatrix k(cols_, free_cols.size(), p_);
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        k.set(fc, fi, 1);
        for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr)
            k.set(e.pivot_cols[pr], fi, fp_neg(e.mat.at(pr, fc), p_));
    }
    return k;
}

std::optional<FpMatrix> FpMatrix::solve(const FpMatrix& b) const {
    if (b.rows_ != rows_ || b.p_ != p_)
        throw std::invalid_argument("solve: right-hand side shape mismatch");
    FpMatrix aug(rows_, cols_ + b.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        for (std::size_t j = 0; j < b.cols_; ++j) aug.set(i, cols_ + j, b.at(i, j));
    }
    Echelon e = aug.rref();
    // A pivot in the augmented block means that column of b is unreachable.
    for (std::size_t c : e.pivot_cols)
        if (c >= cols_) return std::nullopt;
    FpMatrix x(cols_, b.cols_, p_);
    for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr)
        for (std::size_t j = 0; j < b.cols_; ++j)
            x.set(e.pivot_cols[pr], j, e.mat.at(pr, cols_ + j));
    return x;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(rows_, p_));
    if (!x) return std::nullopt;
    // solve() finds a preimage of the identity; for square full-rank A that
    // preimage is two-sided.
    if (rank() != rows_) return std::nullopt;
    return x;
}

FpMatrix FpMatrix::column_space_basis() const {
    Echelon e = rref();
    return columns(e.pivot_cols);
}

FpMatrix FpMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows,
                             std::size_t ncols) const {
    FpMatrix m(nrows, ncols, p_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m.set(i, j, at(r0 + i, c0 + j));
    return m;
}

FpMatrix FpMatrix::columns(const std::vector<std::size_t>& idx) const {
    FpMatrix m(rows_, idx.size(), p_);
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) m.set(i, j, at(i, idx[j]));
    return m;
}

FpMatrix FpMatrix::row(std::size_t r) const { return submatrix(r, 0, 1, cols_); }
FpMatrix FpMatrix::col(std::size_t c) const { return submatrix(0, c, rows_, 1); }

FpMatrix FpMatrix::hstack(const std::vector<FpMatrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("hstack: no parts");
    std::size_t nc = 0;
    for (const auto& m : parts) nc += m.cols();
    FpMatrix r(parts[0].rows(), nc, parts[0].prime());
    std::size_t off = 0;
    for (const auto& m : parts) {
        if (m.rows() != r.rows() || m.prime() != r.prime())
            throw std::invalid_argument("hstack: incompatible parts");
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, off + j, m.at(i, j));
        off += m.cols();
    }
    return r;
}

FpMatrix FpMatrix::vstack(const std::vector<FpMatrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("vstack: no parts");
    std::size_t nr = 0;
    for (const auto& m : parts) nr += m.rows();
    FpMatrix r(nr, parts[0].cols(), parts[0].prime());
    std::size_t off = 0;
    for (const auto& m : parts) {
        if (m.cols() != r.cols() || m.prime() != r.prime())
            throw std::invalid_argument("vstack: incompatible parts");
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r.set(off + i, j, m.at(i, j));
        off += m.rows();
    }
    return r;
}

FpMatrix FpMatrix::block_diag(const std::vector<FpMatrix>& parts) {
    std::size_t nr = 0, nc = 0;
    std::uint32_t p = parts.empty() ? 2 : parts[0].prime();
    for (const auto& m : parts) { nr += m.rows(); nc += m.cols(); }
    FpMatrix r(nr, nc, p);
    std::size_t ro = 0, co = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r.set(ro + i, co + j, m.at(i, j));
        ro += m.rows();
        co += m.cols();
    }
    return r;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw std::invalid_argument("pow: square matrices only");
    FpMatrix acc = identity(rows_, p_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string FpMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

FpMatrix complement_basis(const FpMatrix& b) {
    std::size_t n = b.rows();
    std::uint32_t p = b.prime();
    // Pivots of [B | I] that fall in the identity block are exactly the
    // standard vectors a greedy index scan would pick.
    FpMatrix aug = b.cols() ? FpMatrix::hstack({b, FpMatrix::identity(n, p)})
                            : FpMatrix::identity(n, p);
    auto e = aug.rref();
    std::vector<std::size_t> chosen;
    for (std::size_t c : e.pivot_cols)
        if (c >= b.cols()) chosen.push_back(c - b.cols());
    FpMatrix r(n, chosen.size(), p);
    for (std::size_t j = 0; j < chosen.size(); ++j) r.set(chosen[j], j, 1);
    return r;
}

FpMatrix coordinates_in_basis(const FpMatrix& basis, const FpMatrix& v) {
    auto x = basis.solve(v);
    if (!x) throw std::invalid_argument("coordinates_in_basis: vector outside span");
    return *x;
}

bool spans_contain(const FpMatrix& basis, const FpMatrix& v) {
    if (v.cols() == 0) return true;
    if (basis.cols() == 0) return v.is_zero();
    return basis.solve(v).has_value();
}

} // namespace gw

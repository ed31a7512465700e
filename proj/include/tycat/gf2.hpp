#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tycat {

/// Element of (Z_2)^n as a fixed-width bit vector.  Composition is XOR,
/// every element is its own inverse and the identity is the zero vector.
struct GroupElement {
    std::uint32_t bits = 0;
    int width = 0;

    GroupElement() = default;
    GroupElement(std::uint32_t b, int n) : bits(b), width(n) {
        if (n < 0 || n > 31) throw std::invalid_argument("GroupElement width out of range");
        if (n < 31 && (b >> n) != 0) throw std::invalid_argument("GroupElement bits exceed width");
    }

    static GroupElement zero(int n) { return GroupElement(0, n); }

    static GroupElement unit(int pos, int n) {
        if (pos < 0 || pos >= n) throw std::invalid_argument("unit position out of range");
        return GroupElement(std::uint32_t(1) << pos, n);
    }

    bool bit(int pos) const { return (bits >> pos) & 1u; }
    bool is_zero() const { return bits == 0; }

    GroupElement operator^(const GroupElement& o) const {
        if (width != o.width) throw std::invalid_argument("GroupElement width mismatch");
        return GroupElement(bits ^ o.bits, width);
    }

    bool operator==(const GroupElement& o) const { return bits == o.bits && width == o.width; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return bits < o.bits; }
};

/// Parity of the standard dot product a.b over F_2.
inline int dot_f2(const GroupElement& a, const GroupElement& b) {
    if (a.width != b.width) throw std::invalid_argument("GroupElement width mismatch");
    return std::popcount(a.bits & b.bits) & 1;
}

/// Dense matrix over F_2, rows stored as bit masks.  All rank/inverse
/// computations are exact Gaussian elimination.
class F2Matrix {
  public:
    F2Matrix() : rows_(0), cols_(0) {}
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), r_(rows, 0) {
        if (rows < 0 || cols < 0 || cols > 31) throw std::invalid_argument("F2Matrix shape out of range");
    }

    static F2Matrix identity(int n) {
        F2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool at(int i, int j) const { return (r_[i] >> j) & 1u; }
    void set(int i, int j, bool v) {
        if (v) {
            r_[i] |= std::uint32_t(1) << j;
        } else {
            r_[i] &= ~(std::uint32_t(1) << j);
        }
    }

    std::uint32_t row_bits(int i) const { return r_[i]; }
    void set_row_bits(int i, std::uint32_t b) { r_[i] = b; }

    /// Packed key for hashing / ordering (rows <= 8, cols <= 8).
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (int i = 0; i < rows_; ++i) k |= std::uint64_t(r_[i] & 0xffu) << (8 * i);
        return k;
    }

    GroupElement apply(const GroupElement& v) const {
        if (v.width != cols_) throw std::invalid_argument("matrix/vector width mismatch");
        std::uint32_t out = 0;
        for (int i = 0; i < rows_; ++i) {
            out |= std::uint32_t(std::popcount(r_[i] & v.bits) & 1) << i;
        }
        return GroupElement(out, rows_);
    }

    F2Matrix operator*(const F2Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("F2Matrix shape mismatch in product");
        F2Matrix res(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            std::uint32_t acc = 0;
            std::uint32_t row = r_[i];
            for (int t = 0; t < cols_; ++t) {
                if ((row >> t) & 1u) acc ^= o.r_[t];
            }
            res.r_[i] = acc;
        }
        return res;
    }

    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_;
    }
    bool operator!=(const F2Matrix& o) const { return !(*this == o); }

    F2Matrix transpose() const {
        F2Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (at(i, j)) t.set(j, i, true);
            }
        }
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i) {
            for (int j = i + 1; j < cols_; ++j) {
                if (at(i, j) != at(j, i)) return false;
            }
        }
        return true;
    }

    bool is_identity() const { return *this == identity(rows_); }

    int rank() const {
        std::vector<std::uint32_t> w = r_;
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int i = rank; i < rows_; ++i) {
                if ((w[i] >> col) & 1u) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) continue;
            std::swap(w[rank], w[pivot]);
            for (int i = 0; i < rows_; ++i) {
                if (i != rank && ((w[i] >> col) & 1u)) w[i] ^= w[rank];
            }
            ++rank;
        }
        return rank;
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    /// Inverse by Gauss-Jordan; throws if singular.
    F2Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square F2Matrix");
        int n = rows_;
        std::vector<std::uint32_t> w = r_;
        F2Matrix inv = identity(n);
        int row = 0;
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int i = row; i < n; ++i) {
                if ((w[i] >> col) & 1u) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) throw std::invalid_argument("singular F2Matrix");
            std::swap(w[row], w[pivot]);
            std::swap(inv.r_[row], inv.r_[pivot]);
            for (int i = 0; i < n; ++i) {
                if (i != row && ((w[i] >> col) & 1u)) {
                    w[i] ^= w[row];
                    inv.r_[i] ^= inv.r_[row];
                }
            }
            ++row;
        }
        return inv;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) s += at(i, j) ? '1' : '0';
            if (i + 1 < rows_) s += '\n';
        }
        return s;
    }

  private:
    int rows_, cols_;
    std::vector<std::uint32_t> r_;
};

/// chi_M(i, j) = (-1)^(i . M j), the +-1 valued pairing encoded by a
/// symmetric matrix M over F_2.  Multiplicative in each argument.
inline int bicharacter_eval(const F2Matrix& m, const GroupElement& i, const GroupElement& j) {
    if (m.rows() != m.cols()) throw std::invalid_argument("bicharacter matrix must be square");
    if (i.width != m.rows() || j.width != m.cols()) {
        throw std::invalid_argument("bicharacter argument width mismatch");
    }
    return dot_f2(i, m.apply(j)) ? -1 : 1;
}

} // namespace tycat

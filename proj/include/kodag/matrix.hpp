#pragma once

#include <vector>

#include "kodag/bigint.hpp"

namespace kodag {

/// Dense matrix of exact integers. 0-based indexing.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix ones(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const {
        return v_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator*(const BigInt& scalar) const;

    bool is_zero() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> v_;
};

/// Level-block index map: translates between 1-based (level, pos) grid
/// coordinates, 1-based linear labels, and 0-based matrix indices.
class LevelIndex {
public:
    LevelIndex() = default;
    explicit LevelIndex(std::vector<int> sizes);

    int levels() const { return static_cast<int>(sizes_.size()); }
    int size(int level) const; // 1-based level
    int total() const { return total_; }
    const std::vector<int>& sizes() const { return sizes_; }

    /// 0-based matrix index of the first node of a level.
    int offset(int level) const;

    /// 1-based level of a 0-based matrix index.
    int level_of(int index) const;

    bool operator==(const LevelIndex&) const = default;

private:
    std::vector<int> sizes_;
    std::vector<int> offsets_; // offsets_[k] = nodes strictly before level k+1
    int total_ = 0;
};

/// N x N exact-integer matrix over the nodes of an F-denominated graded
/// poset, carrying its level-block map. Houses zeta, mu, kappa, eta, [Max]
/// and any other incidence-algebra element.
class IncidenceMatrix {
public:
    IncidenceMatrix() = default;
    explicit IncidenceMatrix(std::vector<int> sizes); // zero matrix
    IncidenceMatrix(std::vector<int> sizes, IntMatrix entries);

    static IncidenceMatrix identity(std::vector<int> sizes);

    const LevelIndex& levels() const { return index_; }
    const std::vector<int>& sizes() const { return index_.sizes(); }
    int dim() const { return index_.total(); }

    BigInt& at(int i, int j) { return entries_.at(i, j); }
    const BigInt& at(int i, int j) const { return entries_.at(i, j); }

    IntMatrix& entries() { return entries_; }
    const IntMatrix& entries() const { return entries_; }

    /// Copy of block (r, s), 1-based levels.
    IntMatrix block(int r, int s) const;

    /// Overwrites block (r, s) with the given matrix (shape-checked).
    void set_block(int r, int s, const IntMatrix& m);

    bool operator==(const IncidenceMatrix&) const = default;

private:
    LevelIndex index_;
    IntMatrix entries_;
};

/// 0-based coordinate for mismatch and validation reports.
struct MatrixCoord {
    int row = 0;
    int col = 0;
    bool operator==(const MatrixCoord&) const = default;
};

} // namespace kodag

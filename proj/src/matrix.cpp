#include "kodag/matrix.hpp"

#include <string>

#include "kodag/errors.hpp"

namespace kodag {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimensions");
    v_.assign(static_cast<size_t>(rows) * cols, BigInt(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(int rows, int cols) {
    IntMatrix m(rows, cols);
    for (auto& x : m.v_) x = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw DomainError("matrix product shape mismatch: " +
                          std::to_string(cols_) + " vs " +
                          std::to_string(rhs.rows_));
    }
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a.is_zero()) continue; // block-triangular inputs stay cheap
            for (int j = 0; j < rhs.cols_; ++j) {
                const BigInt& b = rhs.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DomainError("matrix sum shape mismatch");
    }
    IntMatrix out = *this;
    for (size_t i = 0; i < v_.size(); ++i) out.v_[i] += rhs.v_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DomainError("matrix difference shape mismatch");
    }
    IntMatrix out = *this;
    for (size_t i = 0; i < v_.size(); ++i) out.v_[i] -= rhs.v_[i];
    return out;
}

IntMatrix IntMatrix::operator*(const BigInt& scalar) const {
    IntMatrix out = *this;
    for (auto& x : out.v_) x *= scalar;
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : v_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

LevelIndex::LevelIndex(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw DomainError("level size list must be nonempty");
    offsets_.reserve(sizes_.size());
    for (int s : sizes_) {
        if (s < 1) throw DomainError("level sizes must be >= 1");
        offsets_.push_back(total_);
        total_ += s;
    }
}

int LevelIndex::size(int level) const {
    if (level < 1 || level > levels()) {
        throw DomainError("level " + std::to_string(level) +
                          " out of range [1," + std::to_string(levels()) + "]");
    }
    return sizes_[static_cast<size_t>(level) - 1];
}

int LevelIndex::offset(int level) const {
    if (level < 1 || level > levels()) {
        throw DomainError("level " + std::to_string(level) +
                          " out of range [1," + std::to_string(levels()) + "]");
    }
    return offsets_[static_cast<size_t>(level) - 1];
}

int LevelIndex::level_of(int index) const {
    if (index < 0 || index >= total_) {
        throw DomainError("node index " + std::to_string(index) +
                          " out of range");
    }
    int level = 1;
    while (level < levels() && offsets_[static_cast<size_t>(level)] <= index) {
        ++level;
    }
    return level;
}

IncidenceMatrix::IncidenceMatrix(std::vector<int> sizes)
    : index_(std::move(sizes)), entries_(index_.total(), index_.total()) {}

IncidenceMatrix::IncidenceMatrix(std::vector<int> sizes, IntMatrix entries)
    : index_(std::move(sizes)), entries_(std::move(entries)) {
    if (entries_.rows() != index_.total() ||
        entries_.cols() != index_.total()) {
        throw DomainError("incidence matrix shape does not match level sizes");
    }
}

IncidenceMatrix IncidenceMatrix::identity(std::vector<int> sizes) {
    LevelIndex idx(sizes);
    return IncidenceMatrix(std::move(sizes), IntMatrix::identity(idx.total()));
}

IntMatrix IncidenceMatrix::block(int r, int s) const {
    const int roff = index_.offset(r), rsz = index_.size(r);
    const int coff = index_.offset(s), csz = index_.size(s);
    IntMatrix out(rsz, csz);
    for (int i = 0; i < rsz; ++i) {
        for (int j = 0; j < csz; ++j) out.at(i, j) = at(roff + i, coff + j);
    }
    return out;
}

void IncidenceMatrix::set_block(int r, int s, const IntMatrix& m) {
    const int roff = index_.offset(r), rsz = index_.size(r);
    const int coff = index_.offset(s), csz = index_.size(s);
    if (m.rows() != rsz || m.cols() != csz) {
        throw DomainError("block shape mismatch at (" + std::to_string(r) +
                          "," + std::to_string(s) + ")");
    }
    for (int i = 0; i < rsz; ++i) {
        for (int j = 0; j < csz; ++j) entries_.at(roff + i, coff + j) = m.at(i, j);
    }
}

} // namespace kodag

#pragma once

#include <vector>

#include "lypbw/rational.hpp"

namespace lypbw {

/// Dense rational matrix, row major. Just enough exact linear algebra for
/// degreewise rank checks.
class QMatrix {
public:
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

private:
    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

/// Rank by Gaussian elimination; the matrix is consumed.
int rank(QMatrix m);

}  // namespace lypbw

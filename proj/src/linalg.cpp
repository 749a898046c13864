#include "lypbw/linalg.hpp"

namespace lypbw {

int rank(QMatrix m) {
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int row = r; row < m.rows(); ++row)
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(r, c));
        for (int row = r + 1; row < m.rows(); ++row) {
            if (m.at(row, col) == 0) continue;
            const Rational factor = m.at(row, col) / m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(row, c) -= factor * m.at(r, c);
        }
        ++r;
    }
    return r;
}

}  // namespace lypbw

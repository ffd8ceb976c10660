#include "confspace/exact.hpp"

namespace confspace {

int exact_rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw InputError("exact_rank: ragged input");

    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[row]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            const Rational f = rows[r][col] / rows[row][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rational exact_det(const std::vector<RationalVector>& cols) {
    const std::size_t n = cols.size();
    for (const auto& c : cols)
        if (c.size() != n) throw InputError("exact_det: matrix not square");
    // row-major working copy; a[i][j] = cols[j][i]
    std::vector<RationalVector> a(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];

    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

Rational parse_rational(const std::string& num, const std::string& den) {
    try {
        boost::multiprecision::cpp_int n(num), d(den);
        if (d == 0) throw InputError("rational with zero denominator");
        return Rational(n, d);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad rational literal: ") + e.what());
    }
}

std::pair<std::string, std::string> rational_parts(const Rational& r) {
    return {numerator(r).str(), denominator(r).str()};
}

} // namespace confspace

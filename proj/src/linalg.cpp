#include "ratdecomp/linalg.hpp"

namespace ratdecomp {

std::vector<std::vector<Elem>> nullspace(Matrix m, std::size_t cols, const Field& field)
{
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        Elem inv = m[row][col].inv();
        for (auto& e : m[row])
            e = e * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            Elem factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!m[row][c].is_zero())
                    m[r][c] -= factor * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Elem> v(cols, field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace ratdecomp

#ifndef RATDECOMP_LINALG_HPP
#define RATDECOMP_LINALG_HPP

#include <vector>

#include "ratdecomp/field.hpp"

namespace ratdecomp {

using Matrix = std::vector<std::vector<Elem>>;

// Basis of {v : m * v = 0} over the field, from the reduced row echelon
// form; `cols` is the number of unknowns. Each basis vector has a 1 in its
// free column.
std::vector<std::vector<Elem>> nullspace(Matrix m, std::size_t cols, const Field& field);

} // namespace ratdecomp

#endif

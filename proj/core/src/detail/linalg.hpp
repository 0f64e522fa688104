#pragma once

#include <array>
#include <vector>

#include "polya/abelian.hpp"

namespace polya::detail {

using Row3 = std::array<Int, 3>;
using Mat3 = std::array<Row3, 3>;

// Basis of {x : A x = 0} over F_p; A has rows of equal length.
std::vector<std::vector<Int>> nullspace_mod_p(std::vector<std::vector<Int>> A, Int p);
// Basis of {x : x A = 0} over F_p (left kernel).
std::vector<std::vector<Int>> left_kernel_mod_p(const std::vector<std::vector<Int>>& A, Int p);

// Upper-triangular Hermite normal form of the Z-span of `rows` in Z^3.
// When modulus > 0 the lattice is assumed to contain modulus * Z^3 and the
// computation is carried out modulo it. Throws std::domain_error if the
// span has rank < 3.
Mat3 hnf3(const std::vector<Row3>& rows, Int modulus);

// Coefficients of v in the basis given by an upper-triangular HNF, if integral.
bool solve_upper(const Mat3& h, const Row3& v, Row3* coeffs);

Int det3(const Mat3& m);
// Adjugate, so that m * adj(m) = det(m) I.
Mat3 adjugate3(const Mat3& m);

}  // namespace polya::detail

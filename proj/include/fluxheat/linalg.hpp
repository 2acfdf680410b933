#pragma once

#include <array>
#include <vector>

namespace fluxheat {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

struct EigenDecomposition {
    Vec4 values{};   // ascending
    Mat4 vectors{};  // vectors[k] is the unit eigenvector for values[k]
    int sweeps = 0;
};

// Cyclic Jacobi diagonalization of a symmetric 4x4 matrix. Rotations are
// applied in a fixed (p,q) order until the off-diagonal Frobenius norm falls
// below 1e-30 relative to the matrix norm, so results are deterministic.
// Throws ParamError if the input is asymmetric beyond 1e-12 relative.
EigenDecomposition jacobi_eigen(const Mat4& a);

// Gaussian elimination with partial pivoting on an n x n system stored
// row-major in `a`. Returns false if the system is singular.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, int n);

}  // namespace fluxheat

#include "fluxheat/linalg.hpp"

#include <cmath>
#include <cstdlib>

#include "fluxheat/errors.hpp"

namespace fluxheat {

namespace {

double off_diagonal_sq(const Mat4& a) {
    double s = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q) s += a[p][q] * a[p][q];
    return s;
}

double frobenius_sq(const Mat4& a) {
    double s = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) s += a[p][q] * a[p][q];
    return s;
}

}  // namespace

EigenDecomposition jacobi_eigen(const Mat4& input) {
    double maxAbs = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) maxAbs = std::max(maxAbs, std::fabs(input[i][j]));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::fabs(input[i][j] - input[j][i]) > 1e-12 * std::max(maxAbs, 1e-300))
                throw ParamError("jacobi_eigen: matrix is not symmetric");

    Mat4 a = input;
    Mat4 v{};  // accumulated rotations, columns are eigenvectors
    for (int i = 0; i < 4; ++i) v[i][i] = 1.0;

    const double norm2 = frobenius_sq(a);
    int sweep = 0;
    for (; sweep < 64; ++sweep) {
        const double off2 = off_diagonal_sq(a);
        if (off2 <= 1e-60 * norm2 || off2 == 0.0) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = a[p][p], aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (int k = 0; k < 4; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = a[p][k] = akp - s * (akq + tau * akp);
                    a[k][q] = a[q][k] = akq + s * (akp - tau * akq);
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = vkp - s * (vkq + tau * vkp);
                    v[k][q] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    EigenDecomposition out;
    out.sweeps = sweep;
    int order[4] = {0, 1, 2, 3};
    for (int i = 0; i < 4; ++i)  // insertion sort, ascending eigenvalue
        for (int j = i; j > 0 && a[order[j]][order[j]] < a[order[j - 1]][order[j - 1]]; --j)
            std::swap(order[j], order[j - 1]);
    for (int k = 0; k < 4; ++k) {
        out.values[k] = a[order[k]][order[k]];
        for (int i = 0; i < 4; ++i) out.vectors[k][i] = v[i][order[k]];
    }
    return out;
}

bool solve_dense(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r * n + col]) > std::fabs(a[pivot * n + col])) pivot = r;
        if (a[pivot * n + col] == 0.0) return false;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
            std::swap(b[col], b[pivot]);
        }
        const double inv = 1.0 / a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] * inv;
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * b[c];
        b[r] = s / a[r * n + r];
    }
    return true;
}

}  // namespace fluxheat

#include "cleansched/linalg.hpp"

#include <cmath>

namespace cleansched {

std::vector<double> solve_least_squares(const Matrix& a, const std::vector<double>& b,
                                        double rank_tol) {
    const std::size_t m = a.rows, n = a.cols;
    if (b.size() != m) throw std::invalid_argument("solve_least_squares: length mismatch");
    if (m < n) throw std::invalid_argument("solve_least_squares: underdetermined system");

    Matrix r = a;
    std::vector<double> y = b;

    // Householder reflections applied in place to [R | y].
    for (std::size_t k = 0; k < n; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < m; ++i) norm += r.at(i, k) * r.at(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            r.at(k, k) = 0.0;
            continue;
        }
        const double alpha = r.at(k, k) > 0 ? -norm : norm;
        std::vector<double> v(m - k);
        v[0] = r.at(k, k) - alpha;
        for (std::size_t i = k + 1; i < m; ++i) v[i - k] = r.at(i, k);
        double vnorm2 = 0.0;
        for (double x : v) vnorm2 += x * x;
        if (vnorm2 == 0.0) {
            r.at(k, k) = alpha;
            continue;
        }
        for (std::size_t j = k; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) dot += v[i - k] * r.at(i, j);
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < m; ++i) r.at(i, j) -= f * v[i - k];
        }
        double dot = 0.0;
        for (std::size_t i = k; i < m; ++i) dot += v[i - k] * y[i];
        const double f = 2.0 * dot / vnorm2;
        for (std::size_t i = k; i < m; ++i) y[i] -= f * v[i - k];
        r.at(k, k) = alpha;
    }

    double rmax = 0.0;
    for (std::size_t k = 0; k < n; ++k) rmax = std::max(rmax, std::fabs(r.at(k, k)));
    for (std::size_t k = 0; k < n; ++k) {
        if (std::fabs(r.at(k, k)) <= rank_tol * rmax)
            throw SingularMatrixError(
                "design matrix is rank deficient: |R[" + std::to_string(k) + "," +
                std::to_string(k) + "]| <= rank_tol=" + std::to_string(rank_tol) +
                " * max|R_ll|");
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        double s = y[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= r.at(k, j) * x[j];
        x[k] = s / r.at(k, k);
    }
    return x;
}

} // namespace cleansched

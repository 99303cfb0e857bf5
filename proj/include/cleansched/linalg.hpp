#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cleansched/matrix.hpp"

namespace cleansched {

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

// Least-squares solve min ||A x - b||_2 via Householder QR.
// Throws SingularMatrixError when a diagonal of R falls below
// rank_tol * max|R_ll| (rank-deficient system).
std::vector<double> solve_least_squares(const Matrix& a, const std::vector<double>& b,
                                        double rank_tol = 1e-10);

} // namespace cleansched

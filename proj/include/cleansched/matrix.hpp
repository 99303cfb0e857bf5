#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cleansched {

// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    void push_row(std::span<const double> values) {
        if (cols == 0) cols = values.size();
        if (values.size() != cols) throw std::invalid_argument("row width mismatch");
        data.insert(data.end(), values.begin(), values.end());
        ++rows;
    }

    std::vector<double> column(std::size_t c) const {
        std::vector<double> out(rows);
        for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
        return out;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix out(idx.size(), cols);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t c = 0; c < cols; ++c) out.at(i, c) = at(idx[i], c);
        return out;
    }

    Matrix select_cols(const std::vector<std::size_t>& idx) const {
        Matrix out(rows, idx.size());
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t i = 0; i < idx.size(); ++i) out.at(r, i) = at(r, idx[i]);
        return out;
    }
};

} // namespace cleansched

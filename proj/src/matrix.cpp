#include "zeon/matrix.hpp"

#include "zeon/errors.hpp"

namespace zeon {

AlgebraMatrix::AlgebraMatrix(Context ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), entries_(rows * cols, Element(ctx)) {}

AlgebraMatrix AlgebraMatrix::identity(Context ctx, std::size_t n) {
    AlgebraMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Element::one(ctx);
    }
    return m;
}

AlgebraMatrix AlgebraMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                                   std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) {
        throw ContractViolation("block outside matrix bounds");
    }
    AlgebraMatrix out(ctx_, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out(r, c) = (*this)(r0 + r, c0 + c);
        }
    }
    return out;
}

AlgebraMatrix multiply(const AlgebraMatrix& a, const AlgebraMatrix& b, const Limits& limits) {
    if (a.cols() != b.rows()) {
        throw ContractViolation("matrix dimensions do not agree");
    }
    AlgebraMatrix out(a.context(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Element acc(a.context());
            for (std::size_t r = 0; r < a.cols(); ++r) {
                if (a(i, r).is_zero() || b(r, j).is_zero()) {
                    continue;
                }
                acc = add(acc, mul(a(i, r), b(r, j), limits));
            }
            out(i, j) = std::move(acc);
        }
    }
    return out;
}

AlgebraMatrix power(const AlgebraMatrix& a, unsigned k, const Limits& limits) {
    if (a.rows() != a.cols()) {
        throw ContractViolation("matrix power needs a square matrix");
    }
    AlgebraMatrix out = AlgebraMatrix::identity(a.context(), a.rows());
    for (unsigned i = 0; i < k; ++i) {
        out = multiply(out, a, limits);
    }
    return out;
}

std::vector<Element> multiply(const std::vector<Element>& row, const AlgebraMatrix& m,
                              const Limits& limits) {
    if (row.size() != m.rows()) {
        throw ContractViolation("row vector length does not match matrix rows");
    }
    std::vector<Element> out(m.cols(), Element(m.context()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (row[r].is_zero() || m(r, j).is_zero()) {
                continue;
            }
            out[j] = add(out[j], mul(row[r], m(r, j), limits));
        }
    }
    return out;
}

}  // namespace zeon

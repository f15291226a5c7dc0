#pragma once

#include <cstddef>
#include <vector>

#include "zeon/algebra.hpp"

namespace zeon {

/// Dense matrix whose entries are elements of one algebra context.
class AlgebraMatrix {
public:
    AlgebraMatrix(Context ctx, std::size_t rows, std::size_t cols);

    static AlgebraMatrix identity(Context ctx, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Context& context() const { return ctx_; }

    const Element& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    Element& operator()(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

    /// Submatrix [r0, r0+rows) x [c0, c0+cols).
    AlgebraMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    friend bool operator==(const AlgebraMatrix& lhs, const AlgebraMatrix& rhs) {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
    }

private:
    Context ctx_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> entries_;
};

/// Throws ContractViolation when inner dimensions differ.
AlgebraMatrix multiply(const AlgebraMatrix& a, const AlgebraMatrix& b, const Limits& limits = {});
/// a^k by iterated multiplication; k = 0 gives the identity.
AlgebraMatrix power(const AlgebraMatrix& a, unsigned k, const Limits& limits = {});
/// Row vector times matrix.
std::vector<Element> multiply(const std::vector<Element>& row, const AlgebraMatrix& m,
                              const Limits& limits = {});

}  // namespace zeon

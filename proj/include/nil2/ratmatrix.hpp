#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nil2/rat.hpp"

namespace nil2 {

using RatVec = std::vector<Rat>;

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const RatVec& a, const Rat& c);
Rat dot(const RatVec& a, const RatVec& b);
bool vec_is_zero(const RatVec& v);

// Sparse exact matrix over Q. Stored entries are nonzero and canonical.
// Elimination runs on a dense scratch copy; the blocks showing up here are
// small but numerous, so this is the right trade.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rat& at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    bool is_zero() const { return ent_.empty(); }
    std::size_t nnz() const { return ent_.size(); }

    static RatMatrix identity(int n);
    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const;

    RatVec apply(const RatVec& x) const;             // M x
    RatVec apply_transposed(const RatVec& x) const;  // M^T x

    // fraction-free elimination on an integer-scaled copy; pivot order fixed,
    // result independent of it anyway
    int rank() const;
    std::vector<RatVec> kernel_basis() const;
    // any exact solution of Mx = b, free coordinates set to zero
    std::optional<RatVec> solve(const RatVec& b) const;

    const std::map<std::pair<int, int>, Rat>& entries() const { return ent_; }

private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, Rat> ent_;
};

// Unique x with Sx = b and x orthogonal to ker S. Throws std::domain_error
// "not in image" when b is outside the column space and std::invalid_argument
// "not symmetric" when S is not symmetric.
RatVec solve_in_image(const RatMatrix& S, const RatVec& b);

}  // namespace nil2

#include "nil2/ratmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace nil2 {

static const Rat kZero = 0;

RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_scale(const RatVec& a, const Rat& c) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool vec_is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

const Rat& RatMatrix::at(int r, int c) const {
    auto it = ent_.find({r, c});
    return it == ent_.end() ? kZero : it->second;
}

void RatMatrix::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    if (v == 0)
        ent_.erase({r, c});
    else
        ent_[{r, c}] = v;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (const auto& [rc, v] : ent_) t.ent_[{rc.second, rc.first}] = v;
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    // row-sparse walk over o's rows
    std::vector<std::vector<std::pair<int, Rat>>> orows(o.rows_);
    for (const auto& [rc, v] : o.ent_) orows[rc.first].push_back({rc.second, v});
    RatMatrix r(rows_, o.cols_);
    std::map<std::pair<int, int>, Rat> acc;
    for (const auto& [rc, v] : ent_) {
        for (const auto& [c2, w] : orows[rc.second]) acc[{rc.first, c2}] += v * w;
    }
    for (auto& [rc, v] : acc)
        if (v != 0) r.ent_[rc] = v;
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    RatMatrix r = *this;
    for (const auto& [rc, v] : o.ent_) {
        Rat s = r.at(rc.first, rc.second) + v;
        r.set(rc.first, rc.second, s);
    }
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    RatMatrix r = *this;
    for (const auto& [rc, v] : o.ent_) {
        Rat s = r.at(rc.first, rc.second) - v;
        r.set(rc.first, rc.second, s);
    }
    return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ent_ == o.ent_;
}

RatVec RatMatrix::apply(const RatVec& x) const {
    if ((int)x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    RatVec y(rows_, Rat(0));
    for (const auto& [rc, v] : ent_) y[rc.first] += v * x[rc.second];
    return y;
}

RatVec RatMatrix::apply_transposed(const RatVec& x) const {
    if ((int)x.size() != rows_) throw std::invalid_argument("apply_transposed: size mismatch");
    RatVec y(cols_, Rat(0));
    for (const auto& [rc, v] : ent_) y[rc.second] += v * x[rc.first];
    return y;
}

int RatMatrix::rank() const {
    if (ent_.empty()) return 0;
    // clear denominators per row, then Bareiss-style fraction-free steps
    std::vector<std::vector<mpz_class>> a(rows_, std::vector<mpz_class>(cols_, 0));
    {
        std::vector<mpz_class> den(rows_, 1);
        for (const auto& [rc, v] : ent_) den[rc.first] = lcm(den[rc.first], v.get_den());
        for (const auto& [rc, v] : ent_) {
            mpz_class scaled = v.get_num() * (den[rc.first] / v.get_den());
            a[rc.first][rc.second] = scaled;
        }
    }
    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r) {
            if (a[r][col] != 0 && (piv < 0 || mpz_sizeinbase(a[r][col].get_mpz_t(), 2) <
                                                   mpz_sizeinbase(a[piv][col].get_mpz_t(), 2)))
                piv = r;
        }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < rows_; ++r) {
            for (int c = col + 1; c < cols_; ++c) {
                mpz_class t = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

// reduced row echelon form in place; returns pivot columns
static std::vector<int> rref(std::vector<RatVec>& a, int rows, int cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        Rat inv = a[row][col];
        for (int c = col; c < cols; ++c) a[row][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<RatVec> RatMatrix::kernel_basis() const {
    std::vector<RatVec> a(rows_, RatVec(cols_, Rat(0)));
    for (const auto& [rc, v] : ent_) a[rc.first][rc.second] = v;
    std::vector<int> pivots = rref(a, rows_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        RatVec x(cols_, Rat(0));
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatVec> RatMatrix::solve(const RatVec& b) const {
    if ((int)b.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
    std::vector<RatVec> a(rows_, RatVec(cols_ + 1, Rat(0)));
    for (const auto& [rc, v] : ent_) a[rc.first][rc.second] = v;
    for (int r = 0; r < rows_; ++r) a[r][cols_] = b[r];
    std::vector<int> pivots = rref(a, rows_, cols_ + 1);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    RatVec x(cols_, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols_];
    return x;
}

RatVec solve_in_image(const RatMatrix& S, const RatVec& b) {
    if (S.rows() != S.cols() || !(S == S.transpose()))
        throw std::invalid_argument("not symmetric");
    auto x0 = S.solve(b);
    if (!x0) throw std::domain_error("not in image");
    auto ker = S.kernel_basis();
    if (ker.empty()) return *x0;
    // remove the kernel component via the Gram system of the kernel basis
    int m = (int)ker.size();
    RatMatrix gram(m, m);
    RatVec rhs(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) gram.set(i, j, dot(ker[i], ker[j]));
        rhs[i] = dot(ker[i], *x0);
    }
    auto c = gram.solve(rhs);
    if (!c) throw std::logic_error("kernel Gram system inconsistent");
    RatVec x = *x0;
    for (int i = 0; i < m; ++i) x = vec_sub(x, vec_scale(ker[i], (*c)[i]));
    return x;
}

}  // namespace nil2

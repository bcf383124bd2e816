#include "nil2/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "nil2/rat.hpp"

namespace nil2 {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

bool Partition::operator<(const Partition& o) const {
    if (size() != o.size()) return size() < o.size();
    return std::lexicographical_compare(o.parts.begin(), o.parts.end(), parts.begin(),
                                        parts.end());
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::string FrobeniusForm::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < arms.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(arms[i]);
    }
    s += "|";
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(legs[i]);
    }
    return s + ")";
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.parts.empty()) {
        cols.resize(p.parts[0], 0);
        for (int row : p.parts)
            for (int c = 0; c < row; ++c) ++cols[c];
    }
    return Partition(std::move(cols));
}

bool self_conjugate(const Partition& p) { return conjugate(p) == p; }

FrobeniusForm frobenius(const Partition& p) {
    FrobeniusForm f;
    Partition q = conjugate(p);
    for (int i = 0; i < (int)p.parts.size(); ++i) {
        if (p.parts[i] <= i) break;  // past the diagonal
        f.arms.push_back(p.parts[i] - i - 1);
        f.legs.push_back(q.parts[i] - i - 1);
    }
    return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
    int r = f.rank();
    if ((int)f.legs.size() != r) throw std::invalid_argument("frobenius arm/leg count mismatch");
    int rows = r;
    for (int i = 0; i < r; ++i) rows = std::max(rows, i + 1 + f.legs[i]);
    std::vector<int> parts(rows, 0);
    for (int i = 0; i < r; ++i) {
        parts[i] = i + 1 + f.arms[i];
        for (int j = i + 1; j <= i + f.legs[i]; ++j) parts[j] = std::max(parts[j], i + 1);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::vector<Partition> self_conjugate_by_degree(int hom_degree) {
    // diagonal hooks have odd sizes 2a+1 with strictly decreasing a, and
    // (|p| + r)/2 = sum of (a_i + 1); enumerate distinct-part partitions
    std::vector<Partition> out;
    std::vector<int> hooks;  // values a_i + 1, strictly decreasing
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            FrobeniusForm f;
            for (int c : hooks) {
                f.arms.push_back(c - 1);
                f.legs.push_back(c - 1);
            }
            out.push_back(from_frobenius(f));
            return;
        }
        for (int c = std::min(remaining, max_part); c >= 1; --c) {
            hooks.push_back(c);
            rec(remaining - c, c - 1);
            hooks.pop_back();
        }
    };
    if (hom_degree >= 0) rec(hom_degree, hom_degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> self_conjugate_up_to_size(int max_size) {
    std::vector<Partition> out;
    // degree = (|p| + r)/2 never exceeds |p|, so this range is exhaustive
    for (int d = 0; d <= max_size; ++d) {
        for (const auto& p : self_conjugate_by_degree(d))
            if (p.size() <= max_size) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long schur_dim(const Partition& p, int n) {
    if (n < 0) throw std::invalid_argument("schur_dim: negative n");
    if (p.height() > n) return 0;
    Partition q = conjugate(p);
    Rat d = 1;
    for (int i = 0; i < (int)p.parts.size(); ++i) {
        for (int j = 0; j < p.parts[i]; ++j) {
            int hook = (p.parts[i] - j) + (q.parts[j] - i) - 1;
            d *= n + j - i;
            d /= hook;
        }
    }
    if (d.get_den() != 1) throw std::logic_error("hook content product not integral");
    return (long long)d.get_num().get_si();
}

void enumerate_ssyt(const Partition& p, int n,
                    const std::function<void(const std::vector<int>&)>& visit) {
    if (p.height() > n) return;
    int rows = p.height();
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(p.parts[i], 0);
    std::vector<int> content(n, 0);
    // fill cells row-major; weakly increasing rows, strictly increasing columns
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            visit(content);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= p.parts[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0 && c < p.parts[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[r][c] = v;
            ++content[v - 1];
            rec(nr, nc);
            --content[v - 1];
        }
    };
    if (rows == 0) {
        visit(content);
        return;
    }
    rec(0, 0);
}

long long ssyt_count(const Partition& p, int n) {
    long long cnt = 0;
    enumerate_ssyt(p, n, [&](const std::vector<int>&) { ++cnt; });
    return cnt;
}

}  // namespace nil2

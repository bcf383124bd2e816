#include "nil2/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nil2 {

SymPoly::SymPoly(int k, int D) : k_(k), d_(D) {
    if (k < 1 || D < 0) throw std::invalid_argument("bad SymPoly shape");
}

static int total_degree(const std::vector<int>& expo) {
    return std::accumulate(expo.begin(), expo.end(), 0);
}

SymPoly SymPoly::constant(int k, int D, long long c) {
    SymPoly p(k, D);
    if (c != 0) p.terms_[std::vector<int>(k, 0)] = c;
    return p;
}

SymPoly SymPoly::variable(int k, int D, int i) {
    if (i < 0 || i >= k) throw std::out_of_range("variable index");
    SymPoly p(k, D);
    if (D >= 1) {
        std::vector<int> e(k, 0);
        e[i] = 1;
        p.terms_[e] = 1;
    }
    return p;
}

long long SymPoly::coeff(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? 0 : it->second;
}

void SymPoly::add_term(const std::vector<int>& expo, long long c) {
    if ((int)expo.size() != k_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0 || total_degree(expo) > d_) return;
    long long& slot = terms_[expo];
    slot += c;
    if (slot == 0) terms_.erase(expo);
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    if (k_ != o.k_ || d_ != o.d_) throw std::invalid_argument("SymPoly shape mismatch");
    SymPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    if (k_ != o.k_ || d_ != o.d_) throw std::invalid_argument("SymPoly shape mismatch");
    SymPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    if (k_ != o.k_ || d_ != o.d_) throw std::invalid_argument("SymPoly shape mismatch");
    SymPoly r(k_, d_);
    std::vector<int> e(k_);
    for (const auto& [ea, ca] : terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + total_degree(eb) > d_) continue;
            for (int i = 0; i < k_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool SymPoly::operator==(const SymPoly& o) const {
    return k_ == o.k_ && d_ == o.d_ && terms_ == o.terms_;
}

static std::string monomial_str(const std::vector<int>& e, long long c) {
    std::string s = std::to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        s += "*x" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string SymPoly::first_difference(const SymPoly& a, const SymPoly& b) {
    SymPoly d = a - b;
    if (d.terms_.empty()) return "";
    // report the lowest total degree mismatch
    const std::vector<int>* best = nullptr;
    for (const auto& [e, c] : d.terms_) {
        (void)c;
        if (!best || total_degree(e) < total_degree(*best) ||
            (total_degree(e) == total_degree(*best) && e < *best))
            best = &e;
    }
    return monomial_str(*best, a.coeff(*best)) + " vs " + monomial_str(*best, b.coeff(*best));
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    // ascending total degree, then exponent order
    std::vector<std::pair<std::vector<int>, long long>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::string s;
    for (const auto& [e, c] : ts) {
        if (!s.empty()) s += c >= 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        long long a = c < 0 ? -c : c;
        bool has_var = total_degree(e) > 0;
        if (a != 1 || !has_var) s += std::to_string(a);
        bool first = (a == 1 && has_var);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) s += "*";
            first = false;
            s += "x" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

SymPoly schur_poly_ssyt(const Partition& p, int k, int D) {
    if (D < p.size()) throw std::invalid_argument("truncation below |partition|");
    SymPoly r(k, D);
    enumerate_ssyt(p, k, [&](const std::vector<int>& content) { r.add_term(content, 1); });
    return r;
}

SymPoly complete_homogeneous(int k, int D, int m) {
    SymPoly r(k, D);
    if (m < 0) return r;  // h_m = 0 for negative index
    if (m > D) return r;
    std::vector<int> e(k, 0);
    // all monomials of total degree m
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == k - 1) {
            e[i] = rem;
            r.add_term(e, 1);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[i] = v;
            rec(i + 1, rem - v);
        }
    };
    rec(0, m);
    return r;
}

// cofactor expansion; the matrices here are tiny
static SymPoly det(const std::vector<std::vector<SymPoly>>& m, std::vector<int> cols, int row,
                   int k, int D) {
    if (cols.empty()) return SymPoly::constant(k, D, 1);
    SymPoly acc(k, D);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + j);
        SymPoly minor = det(m, rest, row + 1, k, D);
        SymPoly term = m[row][cols[j]] * minor;
        if (j % 2)
            acc = acc - term;
        else
            acc = acc + term;
    }
    return acc;
}

SymPoly schur_poly_jacobi_trudi(const Partition& p, int k, int D) {
    if (D < p.size()) throw std::invalid_argument("truncation below |partition|");
    int l = p.height();
    if (l == 0) return SymPoly::constant(k, D, 1);
    std::vector<std::vector<SymPoly>> h(l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            h[i].push_back(complete_homogeneous(k, D, p.parts[i] - i + j));
    std::vector<int> cols(l);
    for (int j = 0; j < l; ++j) cols[j] = j;
    return det(h, cols, 0, k, D);
}

SymPoly littlewood_lhs(int k, int D) {
    SymPoly r = SymPoly::constant(k, D, 1);
    for (int i = 0; i < k; ++i)
        r = r * (SymPoly::constant(k, D, 1) - SymPoly::variable(k, D, i));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            r = r * (SymPoly::constant(k, D, 1) -
                     SymPoly::variable(k, D, i) * SymPoly::variable(k, D, j));
    return r;
}

SymPoly littlewood_rhs(int k, int D) {
    SymPoly r(k, D);
    for (const auto& p : self_conjugate_up_to_size(D)) {
        if (p.height() > k) continue;  // Schur polynomial vanishes
        int deg = (p.size() + frobenius(p).rank()) / 2;
        SymPoly s = schur_poly_ssyt(p, k, D);
        if (deg % 2)
            r = r - s;
        else
            r = r + s;
    }
    return r;
}

Report littlewood_verify(int k, int D) {
    Report rep;
    SymPoly lhs = littlewood_lhs(k, D);
    SymPoly rhs = littlewood_rhs(k, D);
    bool ok = lhs == rhs;
    std::string detail = "k=" + std::to_string(k) + " D=" + std::to_string(D);
    if (!ok) detail += " first difference: " + SymPoly::first_difference(lhs, rhs);
    rep.add("littlewood", ok, detail);
    return rep;
}

SymPoly hilbert_numerator(int n, int D) {
    SymPoly num(1, D);
    int d = n * (n + 1) / 2;
    for (int p = 0; p <= d; ++p) {
        for (const auto& lam : self_conjugate_by_degree(p)) {
            long long dim = schur_dim(lam, n);
            if (dim == 0 || lam.size() > D) continue;
            num.add_term({lam.size()}, (p % 2 ? -dim : dim));
        }
    }
    return num;
}

SymPoly pbw_series(int n, int D) {
    // invert (1-t)^n (1-t^2)^(n(n-1)/2) as a truncated series
    SymPoly poly = SymPoly::constant(1, D, 1);
    SymPoly one = SymPoly::constant(1, D, 1);
    SymPoly t = SymPoly::variable(1, D, 0);
    for (int i = 0; i < n; ++i) poly = poly * (one - t);
    for (int i = 0; i < n * (n - 1) / 2; ++i) poly = poly * (one - t * t);
    std::vector<long long> p(D + 1, 0);
    for (const auto& [e, c] : poly.terms()) p[e[0]] = c;
    std::vector<long long> q(D + 1, 0);
    q[0] = 1;  // leading coefficient is 1
    for (int m = 1; m <= D; ++m) {
        long long s = 0;
        for (int j = 1; j <= m; ++j) s += p[j] * q[m - j];
        q[m] = -s;
    }
    SymPoly r(1, D);
    for (int m = 0; m <= D; ++m) r.add_term({m}, q[m]);
    return r;
}

Report hilbert_verify(int n, int D) {
    Report rep;
    SymPoly prod = hilbert_numerator(n, D) * pbw_series(n, D);
    bool ok = prod == SymPoly::constant(1, D, 1);
    std::string detail = "n=" + std::to_string(n) + " D=" + std::to_string(D);
    if (!ok)
        detail += " numerator*series=" + prod.str();
    rep.add("hilbert_euler", ok, detail);
    return rep;
}

}  // namespace nil2

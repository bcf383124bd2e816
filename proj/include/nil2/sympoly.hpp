#pragma once

#include <map>
#include <string>
#include <vector>

#include "nil2/partition.hpp"
#include "nil2/report.hpp"

namespace nil2 {

// Integer polynomial in k commuting variables, truncated above total degree D.
// Every product discards the overflow, so arithmetic stays degree-local.
class SymPoly {
public:
    SymPoly(int k, int D);

    int vars() const { return k_; }
    int trunc() const { return d_; }

    static SymPoly constant(int k, int D, long long c);
    static SymPoly variable(int k, int D, int i);  // 0-based

    long long coeff(const std::vector<int>& expo) const;
    void add_term(const std::vector<int>& expo, long long c);

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    bool operator==(const SymPoly& o) const;

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }
    // first monomial where the two differ, rendered; empty when equal
    static std::string first_difference(const SymPoly& a, const SymPoly& b);
    std::string str() const;

private:
    int k_, d_;
    std::map<std::vector<int>, long long> terms_;
};

SymPoly schur_poly_ssyt(const Partition& p, int k, int D);
SymPoly schur_poly_jacobi_trudi(const Partition& p, int k, int D);
SymPoly complete_homogeneous(int k, int D, int m);

// product of (1 - x_i) and (1 - x_i x_j) against the signed Schur sum over
// self-conjugate diagrams, both truncated at degree D
SymPoly littlewood_lhs(int k, int D);
SymPoly littlewood_rhs(int k, int D);
Report littlewood_verify(int k, int D);

// alternating Schur-dimension numerator times the weight series of the free
// graded algebra on n weight-1 and n(n-1)/2 weight-2 generators equals 1
SymPoly hilbert_numerator(int n, int D);
SymPoly pbw_series(int n, int D);
Report hilbert_verify(int n, int D);

}  // namespace nil2

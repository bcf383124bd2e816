#pragma once

#include <map>
#include <vector>

#include "nil2/exterior.hpp"
#include "nil2/ratmatrix.hpp"
#include "nil2/report.hpp"

namespace nil2 {

// One multidegree block of the chain complex. The boundary preserves the
// multidegree, so every computation happens inside a single block.
struct Block {
    std::vector<int> mdeg;
    int weight = 0;
    std::vector<std::vector<Mono>> basis;       // by homological degree
    std::vector<std::map<Mono, int>> index;
    std::vector<RatMatrix> bnd;                 // bnd[p] maps degree p to p-1

    // built on demand
    std::vector<int> rkb;                       // rank of bnd[p]
    char rkb_done = 0;
    std::vector<std::vector<RatVec>> harm;      // harmonic basis per degree
    std::vector<char> harm_done;
    std::vector<RatMatrix> hop;                 // homotopy matrix per degree
    std::vector<char> hop_done;
    std::vector<RatMatrix> proj;                // harmonic projector per degree
    std::vector<char> proj_done;

    int top() const { return (int)basis.size() - 1; }
    int dim(int p) const { return p >= 0 && p <= top() ? (int)basis[p].size() : 0; }
};

class Complex {
public:
    explicit Complex(int n);

    int n() const { return n_; }
    const GenTable& gens() const { return gens_; }
    int dim_g() const { return gens_.count(); }
    int global_dim() const { return n_ * (n_ + 1) / 2; }

    // coderivation extending the pair merge on weight-1 generators
    Element boundary(const Element& x) const;
    Element boundary_mono(Mono m) const;
    Element coboundary(const Element& x);  // blockwise transpose of boundary
    Element laplacian(const Element& x);

    Block& block(const std::vector<int>& mdeg);
    std::vector<std::vector<int>> all_multidegrees() const;
    // block construction over every multidegree, in parallel
    void prepare_all_blocks();

    std::vector<long long> homology_dims();
    std::map<std::pair<int, int>, long long> homology_by_weight();  // (p, t)

    const std::vector<RatVec>& harmonic_block(const std::vector<int>& mdeg, int p);
    std::vector<Element> harmonic_basis(int p);
    Element project(const Element& x);   // orthogonal projection onto harmonics
    Element homotopy(const Element& x);  // h, drops the degree by one
    const RatMatrix& projector(Block& b, int p);
    const RatMatrix& homotopy_matrix(Block& b, int p);

    Report verify_retract();
    Report jw_verify();
    Report duality_verify();

private:
    int n_;
    GenTable gens_;
    std::map<std::vector<int>, Block> blocks_;

    void build_block(Block& b, const std::vector<int>& mdeg) const;
    RatMatrix block_laplacian(Block& b, int p);
};

}  // namespace nil2

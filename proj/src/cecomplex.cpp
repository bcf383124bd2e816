#include "nil2/cecomplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nil2/parallel.hpp"
#include "nil2/partition.hpp"

namespace nil2 {

Complex::Complex(int n) : n_(n), gens_(n) {}

Element Complex::boundary_mono(Mono m) const {
    Element r;
    std::vector<int> vpos;
    for (int id = 0; id < n_; ++id)
        if (m >> id & 1) vpos.push_back(id);
    for (std::size_t a = 0; a + 1 < vpos.size(); ++a) {
        for (std::size_t b = a + 1; b < vpos.size(); ++b) {
            int w = gens_.w_gen(vpos[a] + 1, vpos[b] + 1);
            Mono rest = m & ~((Mono(1) << vpos[a]) | (Mono(1) << vpos[b]));
            int s = wedge_sign(Mono(1) << w, rest);
            if (!s) continue;  // the merged generator already occurs
            // position sign on 1-based positions (a+1, b+1)
            int pos = ((int)(a + b)) % 2 ? -1 : 1;
            r.add((Mono(1) << w) | rest, Rat(pos * s));
        }
    }
    return r;
}

Element Complex::boundary(const Element& x) const {
    Element r;
    for (const auto& [m, c] : x.terms()) r = r + boundary_mono(m) * c;
    return r;
}

void Complex::build_block(Block& b, const std::vector<int>& mdeg) const {
    b.mdeg = mdeg;
    b.weight = std::accumulate(mdeg.begin(), mdeg.end(), 0);
    int top = dim_g();
    b.basis.assign(top + 1, {});
    for (Mono m : basis_block(gens_, mdeg)) b.basis[mono_degree(m)].push_back(m);
    b.index.assign(top + 1, {});
    for (int p = 0; p <= top; ++p)
        for (int i = 0; i < (int)b.basis[p].size(); ++i) b.index[p][b.basis[p][i]] = i;
    b.bnd.assign(top + 1, RatMatrix());
    b.bnd[0] = RatMatrix(0, b.dim(0));
    for (int p = 1; p <= top; ++p) {
        RatMatrix m(b.dim(p - 1), b.dim(p));
        for (int j = 0; j < b.dim(p); ++j) {
            Element d = boundary_mono(b.basis[p][j]);
            for (const auto& [mono, c] : d.terms()) {
                auto it = b.index[p - 1].find(mono);
                if (it == b.index[p - 1].end())
                    throw std::logic_error("boundary left its multidegree block");
                m.set(it->second, j, c);
            }
        }
        b.bnd[p] = std::move(m);
    }
    b.harm.assign(top + 1, {});
    b.harm_done.assign(top + 1, 0);
    b.hop.assign(top + 1, RatMatrix());
    b.hop_done.assign(top + 1, 0);
    b.proj.assign(top + 1, RatMatrix());
    b.proj_done.assign(top + 1, 0);
}

Block& Complex::block(const std::vector<int>& mdeg) {
    auto it = blocks_.find(mdeg);
    if (it != blocks_.end()) return it->second;
    Block b;
    build_block(b, mdeg);
    return blocks_.emplace(mdeg, std::move(b)).first->second;
}

std::vector<std::vector<int>> Complex::all_multidegrees() const {
    std::set<std::vector<int>> seen;
    Mono all = (dim_g() >= 32) ? ~Mono(0) : ((Mono(1) << dim_g()) - 1);
    for (Mono m = 0; m <= all; ++m) {
        seen.insert(multidegree(gens_, m));
        if (m == all) break;
    }
    return {seen.begin(), seen.end()};
}

void Complex::prepare_all_blocks() {
    auto mdegs = all_multidegrees();
    std::vector<const std::vector<int>*> missing;
    for (const auto& md : mdegs)
        if (!blocks_.count(md)) missing.push_back(&md);
    std::vector<Block> built(missing.size());
    parallel_for(missing.size(), [&](std::size_t i) { build_block(built[i], *missing[i]); });
    for (std::size_t i = 0; i < missing.size(); ++i)
        blocks_.emplace(*missing[i], std::move(built[i]));
}

static const std::vector<int>& block_ranks(Block& b, int top) {
    if (!b.rkb_done) {
        b.rkb.assign(top + 2, 0);
        for (int p = 1; p <= b.top(); ++p) b.rkb[p] = b.bnd[p].rank();
        b.rkb_done = 1;
    }
    return b.rkb;
}

std::vector<long long> Complex::homology_dims() {
    prepare_all_blocks();
    std::vector<Block*> items;
    for (auto& kv : blocks_) items.push_back(&kv.second);
    std::vector<std::vector<long long>> partial(items.size());
    int top = dim_g();
    parallel_for(items.size(), [&](std::size_t i) {
        Block& b = *items[i];
        const auto& rk = block_ranks(b, top);
        std::vector<long long> dims(top + 1, 0);
        for (int p = 0; p <= b.top(); ++p)
            dims[p] = (long long)b.dim(p) - rk[p] - rk[p + 1];
        partial[i] = std::move(dims);
    });
    std::vector<long long> total(top + 1, 0);
    for (const auto& dims : partial)
        for (std::size_t p = 0; p < dims.size(); ++p) total[p] += dims[p];
    return total;
}

std::map<std::pair<int, int>, long long> Complex::homology_by_weight() {
    prepare_all_blocks();
    std::map<std::pair<int, int>, long long> out;
    for (auto& [md, b] : blocks_) {
        const auto& rk = block_ranks(b, dim_g());
        for (int p = 0; p <= b.top(); ++p) {
            long long d = (long long)b.dim(p) - rk[p] - rk[p + 1];
            if (d) out[{p, b.weight}] += d;
        }
    }
    return out;
}

const std::vector<RatVec>& Complex::harmonic_block(const std::vector<int>& mdeg, int p) {
    Block& b = block(mdeg);
    static const std::vector<RatVec> kEmpty;
    if (p < 0 || p > b.top()) return kEmpty;
    if (!b.harm_done[p]) {
        // kernel of the boundary and of the coboundary at once
        int dp = b.dim(p);
        int rows_down = b.bnd[p].rows();
        int rows_up = p < b.top() ? b.dim(p + 1) : 0;
        RatMatrix stacked(rows_down + rows_up, dp);
        for (const auto& [rc, v] : b.bnd[p].entries()) stacked.set(rc.first, rc.second, v);
        if (rows_up)
            for (const auto& [rc, v] : b.bnd[p + 1].entries())
                stacked.set(rows_down + rc.second, rc.first, v);
        b.harm[p] = stacked.kernel_basis();
        b.harm_done[p] = 1;
    }
    return b.harm[p];
}

std::vector<Element> Complex::harmonic_basis(int p) {
    prepare_all_blocks();
    std::vector<Element> out;
    for (auto& [md, b] : blocks_) {
        for (const RatVec& v : harmonic_block(md, p)) {
            Element e;
            for (int i = 0; i < (int)v.size(); ++i) e.add(b.basis[p][i], v[i]);
            out.push_back(e);
        }
    }
    return out;
}

RatMatrix Complex::block_laplacian(Block& b, int p) {
    RatMatrix lap(b.dim(p), b.dim(p));
    if (p >= 0 && p <= b.top()) {
        lap = b.bnd[p].transpose() * b.bnd[p];
        if (p < b.top()) lap = lap + b.bnd[p + 1] * b.bnd[p + 1].transpose();
    }
    return lap;
}

const RatMatrix& Complex::projector(Block& b, int p) {
    if (!b.proj_done[p]) {
        const auto& H = harmonic_block(b.mdeg, p);
        int dp = b.dim(p), h = (int)H.size();
        RatMatrix P(dp, dp);
        if (h) {
            RatMatrix gram(h, h);
            for (int i = 0; i < h; ++i)
                for (int j = 0; j < h; ++j) gram.set(i, j, dot(H[i], H[j]));
            // columns of (H^T H)^{-1} H^T, then P = H * that
            RatMatrix coords(h, dp);
            for (int c = 0; c < dp; ++c) {
                RatVec rhs(h);
                for (int i = 0; i < h; ++i) rhs[i] = H[i][c];
                auto sol = gram.solve(rhs);
                if (!sol) throw std::logic_error("harmonic Gram system inconsistent");
                for (int i = 0; i < h; ++i) coords.set(i, c, (*sol)[i]);
            }
            RatMatrix Hm(dp, h);
            for (int j = 0; j < h; ++j)
                for (int r = 0; r < dp; ++r) Hm.set(r, j, H[j][r]);
            P = Hm * coords;
        }
        b.proj[p] = std::move(P);
        b.proj_done[p] = 1;
    }
    return b.proj[p];
}

const RatMatrix& Complex::homotopy_matrix(Block& b, int p) {
    if (!b.hop_done[p]) {
        int dp = b.dim(p);
        int target = p >= 1 ? b.dim(p - 1) : 0;
        RatMatrix h(target, dp);
        if (p >= 1 && dp && target) {
            RatMatrix lap = block_laplacian(b, p - 1);
            for (int j = 0; j < dp; ++j) {
                RatVec e(dp, Rat(0));
                e[j] = 1;
                RatVec w = b.bnd[p].apply(e);
                RatVec x = solve_in_image(lap, w);
                for (int r = 0; r < target; ++r)
                    if (x[r] != 0) h.set(r, j, x[r]);
            }
        }
        b.hop[p] = std::move(h);
        b.hop_done[p] = 1;
    }
    return b.hop[p];
}

// split an element into (multidegree, degree) slices and act blockwise
template <typename F>
static Element blockwise(Complex& cx, const Element& x, F&& act) {
    std::map<std::pair<std::vector<int>, int>, Element> slices;
    for (const auto& [m, c] : x.terms())
        slices[{multidegree(cx.gens(), m), mono_degree(m)}].add(m, c);
    Element out;
    for (auto& [key, slice] : slices) {
        Block& b = cx.block(key.first);
        int p = key.second;
        RatVec coords(b.dim(p), Rat(0));
        for (const auto& [m, c] : slice.terms()) coords[b.index[p].at(m)] = c;
        out = out + act(b, p, coords);
    }
    return out;
}

Element Complex::coboundary(const Element& x) {
    return blockwise(*this, x, [&](Block& b, int p, const RatVec& v) {
        Element r;
        if (p >= b.top()) return r;
        RatVec up = b.bnd[p + 1].apply_transposed(v);
        for (int i = 0; i < (int)up.size(); ++i) r.add(b.basis[p + 1][i], up[i]);
        return r;
    });
}

Element Complex::laplacian(const Element& x) {
    return boundary(coboundary(x)) + coboundary(boundary(x));
}

Element Complex::project(const Element& x) {
    return blockwise(*this, x, [&](Block& b, int p, const RatVec& v) {
        Element r;
        RatVec w = projector(b, p).apply(v);
        for (int i = 0; i < (int)w.size(); ++i) r.add(b.basis[p][i], w[i]);
        return r;
    });
}

Element Complex::homotopy(const Element& x) {
    return blockwise(*this, x, [&](Block& b, int p, const RatVec& v) {
        Element r;
        if (p < 1) return r;
        RatVec w = homotopy_matrix(b, p).apply(v);
        for (int i = 0; i < (int)w.size(); ++i) r.add(b.basis[p - 1][i], w[i]);
        return r;
    });
}

namespace {

struct IdentityCheck {
    std::string name;
    long long checked = 0;
    bool pass = true;
    std::string witness;

    void fail(const std::string& w) {
        if (pass) {
            pass = false;
            witness = w;
        }
    }
    void count() { ++checked; }
};

std::string mdeg_str(const std::vector<int>& md) {
    std::string s = "(";
    for (std::size_t i = 0; i < md.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(md[i]);
    }
    return s + ")";
}

}  // namespace

Report Complex::verify_retract() {
    prepare_all_blocks();
    IdentityCheck pi{"p_after_i_is_identity"};
    IdentityCheck hmt{"one_minus_ip_equals_dh_plus_hd"};
    IdentityCheck hh{"h_after_h_vanishes"};
    IdentityCheck hi{"h_after_i_vanishes"};
    IdentityCheck ph{"p_after_h_vanishes"};
    IdentityCheck dd{"boundary_squared_zero"};
    IdentityCheck cc{"coboundary_squared_zero"};

    for (auto& [md, b] : blocks_) {
        for (int p = 0; p <= b.top(); ++p) {
            if (b.dim(p) == 0) continue;
            std::string where = "block " + mdeg_str(md) + " degree " + std::to_string(p);
            const auto& H = harmonic_block(md, p);
            const RatMatrix& P = projector(b, p);
            const RatMatrix& h_here = homotopy_matrix(b, p);

            // p i = id: the projector fixes every harmonic vector
            for (const auto& v : H) {
                pi.count();
                if (!(P.apply(v) == v)) pi.fail(where);
            }
            // id - i p = delta h + h delta
            {
                RatMatrix lhs = RatMatrix::identity(b.dim(p)) - P;
                RatMatrix rhs(b.dim(p), b.dim(p));
                if (p >= 1) rhs = rhs + b.bnd[p].transpose() * h_here;
                if (p < b.top()) {
                    const RatMatrix& h_up = homotopy_matrix(b, p + 1);
                    rhs = rhs + h_up * b.bnd[p + 1].transpose();
                }
                hmt.count();
                if (!(lhs == rhs)) hmt.fail(where);
            }
            // h h = 0
            if (p >= 2) {
                hh.count();
                if (!(homotopy_matrix(b, p - 1) * h_here).is_zero()) hh.fail(where);
            }
            // h i = 0
            for (const auto& v : H) {
                hi.count();
                if (!vec_is_zero(h_here.apply(v))) hi.fail(where);
            }
            // p h = 0
            if (p >= 1) {
                ph.count();
                if (!(projector(b, p - 1) * h_here).is_zero()) ph.fail(where);
            }
            // boundary and coboundary square to zero
            if (p >= 2) {
                dd.count();
                cc.count();
                RatMatrix sq = b.bnd[p - 1] * b.bnd[p];
                if (!sq.is_zero()) dd.fail(where);
                if (!(sq.transpose()).is_zero()) cc.fail(where);
            }
        }
    }

    Report rep;
    for (const IdentityCheck* c : {&pi, &hmt, &hh, &hi, &ph, &dd, &cc}) {
        std::string detail = std::to_string(c->checked) + " checks";
        if (!c->pass) detail = "first failure at " + c->witness;
        rep.add(c->name, c->pass, detail);
    }
    return rep;
}

Report Complex::jw_verify() {
    Report rep;
    auto dims = homology_dims();
    auto by_weight = homology_by_weight();

    Table t;
    t.name = "homology";
    t.columns = {"degree", "dim", "diagrams"};
    bool degree_ok = true, weight_ok = true;
    std::string witness;
    for (int p = 0; p <= dim_g(); ++p) {
        auto parts = self_conjugate_by_degree(p);
        long long sum = 0;
        std::string cell;
        std::map<int, long long> weight_sum;
        for (const auto& lam : parts) {
            long long d = schur_dim(lam, n_);
            if (d == 0) continue;
            sum += d;
            weight_sum[lam.size()] += d;
            if (!cell.empty()) cell += ", ";
            cell += lam.str() + "=" + frobenius(lam).str() + ":" + std::to_string(d);
        }
        if (cell.empty()) cell = "-";
        if (dims[p] != sum) {
            degree_ok = false;
            if (witness.empty())
                witness = "degree " + std::to_string(p) + ": rank route " +
                          std::to_string(dims[p]) + " vs diagram route " + std::to_string(sum);
        }
        // per weight slice
        std::map<int, long long> rank_slice;
        for (const auto& [pt, d] : by_weight)
            if (pt.first == p) rank_slice[pt.second] = d;
        if (rank_slice != weight_sum) {
            weight_ok = false;
            if (witness.empty()) witness = "weight slices differ at degree " + std::to_string(p);
        }
        t.rows.push_back({std::to_string(p), std::to_string(dims[p]), cell});
    }
    rep.tables.push_back(std::move(t));
    rep.add("diagram_dims_per_degree", degree_ok, degree_ok ? "" : witness);
    rep.add("diagram_dims_per_weight", weight_ok, weight_ok ? "" : witness);
    return rep;
}

Report Complex::duality_verify() {
    Report rep;
    auto dims = homology_dims();
    int d = global_dim();
    bool palindrome = true, top_nonzero = dims[d] != 0, above_zero = true;
    long long euler = 0;
    std::string witness;
    for (int p = 0; p <= dim_g(); ++p) {
        euler += (p % 2 ? -1 : 1) * dims[p];
        if (p <= d && dims[p] != dims[d - p]) {
            palindrome = false;
            if (witness.empty())
                witness = "H" + std::to_string(p) + "=" + std::to_string(dims[p]) +
                          " vs H" + std::to_string(d - p) + "=" + std::to_string(dims[d - p]);
        }
        if (p > d && dims[p] != 0) above_zero = false;
    }
    rep.add("poincare_palindrome", palindrome, palindrome ? "d=" + std::to_string(d) : witness);
    rep.add("top_degree_nonzero", top_nonzero, "H" + std::to_string(d));
    rep.add("vanishing_above_top", above_zero, "");
    rep.add("euler_characteristic_zero", n_ >= 1 ? euler == 0 : true,
            "chi=" + std::to_string(euler));
    return rep;
}

}  // namespace nil2

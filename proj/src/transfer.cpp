#include "nil2/transfer.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "nil2/partition.hpp"

namespace nil2 {

int split_sign(int variant, int u, int v) {
    switch (variant) {
        case 0: return (u + 1) % 2 ? -1 : 1;        // (-1)^(u+1)
        case 1: return u % 2 ? -1 : 1;              // (-1)^u
        case 2: return (v * (u + 1)) % 2 ? -1 : 1;  // (-1)^(v(u+1))
        case 3: return (u * (v + 1)) % 2 ? -1 : 1;  // (-1)^(u(v+1))
        default: throw std::invalid_argument("sign variant out of range");
    }
}

std::string sign_variant_formula(int variant) {
    switch (variant) {
        case 0: return "(-1)^(u+1)";
        case 1: return "(-1)^u";
        case 2: return "(-1)^(v(u+1))";
        case 3: return "(-1)^(u(v+1))";
        default: return "uncalibrated";
    }
}

Transfer::Transfer(Complex& cx, int variant) : cx_(cx), variant_(variant) {
    if (variant < 0 || variant >= kNumSignVariants)
        throw std::invalid_argument("uncalibrated");
}

Element Transfer::m2(const Element& x, const Element& y) {
    return cx_.project(wedge(x, y));
}

Element Transfer::m3(const Element& x, const Element& y, const Element& z) {
    // the two planar trees, homotopy on the inner pair
    Element left = wedge(x, cx_.homotopy(wedge(y, z)));
    Element right = wedge(cx_.homotopy(wedge(x, y)), z);
    return cx_.project(left - right);
}

Element Transfer::tree_sum(const std::vector<Element>& args) {
    int k = (int)args.size();
    if (k < 2) throw std::invalid_argument("tree_sum needs arity >= 2");
    // ht[l][r] carries h applied to the subtree sum on [l, r), except that a
    // single leaf is the argument itself
    std::vector<std::vector<Element>> ht(k + 1, std::vector<Element>(k + 1));
    for (int l = 0; l < k; ++l) ht[l][l + 1] = args[l];
    Element lam_full;
    for (int len = 2; len <= k; ++len) {
        for (int l = 0; l + len <= k; ++l) {
            int r = l + len;
            Element lam;
            for (int m = l + 1; m < r; ++m) {
                Element w = wedge(ht[l][m], ht[m][r]);
                if (w.is_zero()) continue;
                // the pair case is the plain product; variant signs only
                // enter where a genuine splitting choice exists
                int s = len == 2 ? 1 : split_sign(variant_, m - l, r - m);
                lam = s > 0 ? lam + w : lam - w;
            }
            if (len == k)
                lam_full = lam;
            else
                ht[l][r] = cx_.homotopy(lam);
        }
    }
    return lam_full;
}

Element Transfer::mn(const std::vector<Element>& args) {
    if (args.size() <= 1) return Element();  // the induced differential is zero
    return cx_.project(tree_sum(args));
}

std::vector<ShuffleTerm> shuffle_terms(const std::vector<int>& degs, int p) {
    int k = (int)degs.size();
    if (p < 1 || p >= k) throw std::invalid_argument("shuffle split out of range");
    std::vector<ShuffleTerm> out;
    std::vector<int> order;
    // riffle the blocks [0, p) and [p, k); taking a right letter before the
    // remaining left letters costs one degree product per left letter skipped
    std::function<void(int, int, int)> rec = [&](int i, int j, int sign) {
        if (i == p && j == k) {
            out.push_back({sign, order});
            return;
        }
        if (i < p) {
            order.push_back(i);
            rec(i + 1, j, sign);
            order.pop_back();
        }
        if (j < k) {
            int s = sign;
            for (int t = i; t < p; ++t)
                if ((degs[j] * degs[t]) % 2) s = -s;
            order.push_back(j);
            rec(i, j + 1, s);
            order.pop_back();
        }
    };
    rec(0, p, 1);
    return out;
}

namespace {

struct HarmonicPool {
    // harmonic basis elements by homological degree, degree 0 excluded
    std::vector<std::vector<Element>> by_degree;
    std::vector<Element> low;     // degree 1 entries
    std::vector<Element> higher;  // degree >= 2 entries

    explicit HarmonicPool(Complex& cx, int max_degree) {
        by_degree.assign(max_degree + 1, {});
        for (int p = 1; p <= max_degree; ++p) {
            by_degree[p] = cx.harmonic_basis(p);
            for (const auto& e : by_degree[p]) (p == 1 ? low : higher).push_back(e);
        }
    }
};

std::string tuple_str(const GenTable& g, const std::vector<Element>& args) {
    std::string s = "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += "; ";
        s += element_str(g, args[i]);
    }
    return s + ")";
}

// every arity-k tuple of weight-1 generators, visited in index order
void each_degree1_tuple(Complex& cx, int k,
                        const std::function<void(const std::vector<Element>&)>& fn) {
    int n = cx.n();
    std::vector<int> idx(k, 0);
    std::vector<Element> args(k);
    while (true) {
        for (int i = 0; i < k; ++i) args[i] = Element::monomial(Mono(1) << idx[i]);
        fn(args);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - 1) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
}

// deterministic mixed-degree tuples: one slot is forced to a class of degree
// at least two so every sample leaves the weight-1 regime
std::vector<std::vector<Element>> sample_mixed_tuples(const HarmonicPool& pool, int k,
                                                      int count, std::mt19937_64& rng) {
    std::vector<std::vector<Element>> out;
    if (pool.higher.empty()) return out;
    std::vector<const Element*> all;
    for (const auto& e : pool.low) all.push_back(&e);
    for (const auto& e : pool.higher) all.push_back(&e);
    for (int s = 0; s < count; ++s) {
        std::vector<Element> tuple(k);
        std::size_t forced = rng() % k;
        for (int i = 0; i < k; ++i) {
            if ((std::size_t)i == forced)
                tuple[i] = pool.higher[rng() % pool.higher.size()];
            else
                tuple[i] = *all[rng() % all.size()];
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

Element stasheff_residual(Transfer& tr, const std::vector<Element>& args) {
    int n = (int)args.size();
    Element total;
    for (int r = 0; r <= n - 2; ++r) {
        for (int s = 2; s <= n - r; ++s) {
            int t = n - r - s;
            if (r + 1 + t < 2) continue;  // outer slot is m1, which is zero
            int sgn = ((r + s * t) % 2) ? -1 : 1;
            // Koszul factor for moving the inner operation past the prefix,
            // in the suspended grading where the operations are even
            for (int i = 0; i < r; ++i)
                if ((element_degree(args[i]) - 1) % 2) sgn = -sgn;
            std::vector<Element> inner(args.begin() + r, args.begin() + r + s);
            Element mid = tr.mn(inner);
            if (mid.is_zero()) continue;
            std::vector<Element> outer(args.begin(), args.begin() + r);
            outer.push_back(mid);
            for (int i = r + s; i < n; ++i) outer.push_back(args[i]);
            Element term = tr.mn(outer);
            total = sgn > 0 ? total + term : total - term;
        }
    }
    return total;
}

Element shuffle_residual(Transfer& tr, const std::vector<Element>& args, int p) {
    std::vector<int> degs(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) degs[i] = element_degree(args[i]);
    Element total;
    for (const auto& term : shuffle_terms(degs, p)) {
        std::vector<Element> perm(args.size());
        for (std::size_t i = 0; i < args.size(); ++i) perm[i] = args[term.order[i]];
        Element val = tr.mn(perm);
        if (val.is_zero()) continue;
        total = term.sign > 0 ? total + val : total - val;
    }
    return total;
}

}  // namespace

Report check_stasheff(Transfer& tr, int n_max, int mixed_samples, std::uint64_t seed) {
    Report rep;
    Complex& cx = tr.complex();
    for (int n = 2; n <= n_max; ++n) {
        long long checked = 0;
        bool ok = true;
        std::string witness;
        each_degree1_tuple(cx, n, [&](const std::vector<Element>& args) {
            if (!ok) return;
            ++checked;
            Element res = stasheff_residual(tr, args);
            if (!res.is_zero()) {
                ok = false;
                witness = tuple_str(cx.gens(), args) + " residual " + element_str(cx.gens(), res);
            }
        });
        rep.add("stasheff_degree1_arity" + std::to_string(n), ok,
                ok ? std::to_string(checked) + " tuples" : witness);
    }
    HarmonicPool pool(cx, cx.dim_g());
    std::mt19937_64 rng(seed);
    long long checked = 0;
    bool ok = true;
    std::string witness;
    for (int n = 2; n <= n_max; ++n) {
        for (const auto& args : sample_mixed_tuples(pool, n, mixed_samples / (n_max - 1), rng)) {
            ++checked;
            Element res = stasheff_residual(tr, args);
            if (!res.is_zero() && ok) {
                ok = false;
                witness = tuple_str(cx.gens(), args) + " residual " + element_str(cx.gens(), res);
            }
        }
    }
    rep.add("stasheff_mixed_sampled", ok,
            ok ? std::to_string(checked) + " tuples" : witness);
    return rep;
}

Report check_cinfty(Transfer& tr, int n_max, int mixed_samples, std::uint64_t seed) {
    Report rep;
    Complex& cx = tr.complex();
    for (int k = 2; k <= n_max; ++k) {
        long long checked = 0;
        bool ok = true;
        std::string witness;
        each_degree1_tuple(cx, k, [&](const std::vector<Element>& args) {
            for (int p = 1; p < k && ok; ++p) {
                ++checked;
                Element res = shuffle_residual(tr, args, p);
                if (!res.is_zero()) {
                    ok = false;
                    witness = "split " + std::to_string(p) + "," + std::to_string(k - p) + " at " +
                              tuple_str(cx.gens(), args) + " residual " +
                              element_str(cx.gens(), res);
                }
            }
        });
        rep.add("shuffle_degree1_arity" + std::to_string(k), ok,
                ok ? std::to_string(checked) + " shuffle sums" : witness);
    }
    HarmonicPool pool(cx, cx.dim_g());
    std::mt19937_64 rng(seed);
    long long checked = 0;
    bool ok = true;
    std::string witness;
    auto note = [&](const std::vector<Element>& args, int p, const Element& res) {
        ++checked;
        if (res.is_zero() || !ok) return;
        ok = false;
        witness = "split " + std::to_string(p) + "," + std::to_string(args.size() - p) + " at " +
                  tuple_str(cx.gens(), args) + " residual " + element_str(cx.gens(), res);
    };
    // sweep every degree-1 x higher pair before sampling; duality pairs the
    // degree-1 classes perfectly against the top complement, so a violation
    // at arity 2 can never hide behind an unlucky seed
    for (const Element& x : pool.low)
        for (const Element& y : pool.higher) {
            std::vector<Element> args = {x, y};
            note(args, 1, shuffle_residual(tr, args, 1));
        }
    for (int k = 2; k <= n_max; ++k) {
        for (const auto& args : sample_mixed_tuples(pool, k, mixed_samples / (n_max - 1), rng)) {
            for (int p = 1; p < k; ++p) note(args, p, shuffle_residual(tr, args, p));
        }
    }
    rep.add("shuffle_mixed_sampled", ok, ok ? std::to_string(checked) + " shuffle sums" : witness);
    return rep;
}

namespace {

// dedicated m3 against the pinned class: m3(e_i, e_j, e_k) for i < j < k
// projects to the class of e_{ik} wedge e_j
bool m3_class_pin_holds(Transfer& tr) {
    Complex& cx = tr.complex();
    const GenTable& g = cx.gens();
    int n = cx.n();
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
        for (int j = i + 1; j <= n && ok; ++j)
            for (int k = j + 1; k <= n && ok; ++k) {
                Element ei = Element::monomial(Mono(1) << g.v_gen(i));
                Element ej = Element::monomial(Mono(1) << g.v_gen(j));
                Element ek = Element::monomial(Mono(1) << g.v_gen(k));
                Element got = tr.m3(ei, ej, ek);
                Element rep = wedge(Element::monomial(Mono(1) << g.w_gen(i, k)),
                                    Element::monomial(Mono(1) << g.v_gen(j)));
                ok = ok && got == cx.project(rep) && !got.is_zero();
            }
    return ok;
}

}  // namespace

CalibrationResult calibrate_signs(int mixed_samples, std::uint64_t seed) {
    CalibrationResult result;
    Complex c2(2), c3(3);

    std::vector<bool> gate_a(kNumSignVariants, false), gate_b(kNumSignVariants, false);
    for (int v = 0; v < kNumSignVariants; ++v) {
        Transfer t3(c3, v);
        // (a) the recursion reproduces the dedicated two-tree m3 at dim V = 3
        bool a = m3_class_pin_holds(t3);
        each_degree1_tuple(c3, 3, [&](const std::vector<Element>& args) {
            if (!a) return;
            a = t3.mn(args) == t3.m3(args[0], args[1], args[2]);
        });
        gate_a[v] = a;
        // (b) Stasheff identities up to arity 4 at dim V = 2 and 3
        bool b = true;
        for (Complex* cx : {&c2, &c3}) {
            Transfer t(*cx, v);
            b = b && check_stasheff(t, 4, mixed_samples, seed).all_pass();
        }
        gate_b[v] = b;
    }

    std::vector<int> passing;
    for (int v = 0; v < kNumSignVariants; ++v)
        if (gate_a[v] && gate_b[v]) passing.push_back(v);

    // probe evaluations to split observationally different survivors
    auto probe_signature = [&](int v) {
        std::vector<Element> sig;
        for (Complex* cx : {&c2, &c3}) {
            Transfer t(*cx, v);
            for (int k = 2; k <= 4; ++k)
                each_degree1_tuple(*cx, k,
                                   [&](const std::vector<Element>& args) { sig.push_back(t.mn(args)); });
            HarmonicPool pool(*cx, cx->dim_g());
            std::mt19937_64 rng(seed);
            for (int k = 2; k <= 4; ++k)
                for (const auto& args : sample_mixed_tuples(pool, k, mixed_samples / 3, rng))
                    sig.push_back(t.mn(args));
        }
        return sig;
    };
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<Element>> signatures;
    for (int v : passing) {
        auto sig = probe_signature(v);
        bool placed = false;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (signatures[c] == sig) {
                classes[c].push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({v});
            signatures.push_back(std::move(sig));
        }
    }

    Table t;
    t.name = "sign_variants";
    t.columns = {"variant", "m3_gate", "stasheff_gate"};
    for (int v = 0; v < kNumSignVariants; ++v)
        t.rows.push_back({sign_variant_formula(v), gate_a[v] ? "pass" : "fail",
                          gate_b[v] ? "pass" : "fail"});
    result.report.tables.push_back(std::move(t));

    if (passing.empty()) {
        result.variant = -1;
        result.unique = false;
        result.report.add("calibration", false, "no variant passes");
        return result;
    }
    std::string class_str;
    for (const auto& c : classes) {
        class_str += "{";
        for (std::size_t i = 0; i < c.size(); ++i)
            class_str += (i ? " " : "") + sign_variant_formula(c[i]);
        class_str += "}";
    }
    if (classes.size() > 1) {
        result.variant = -1;
        result.unique = false;
        result.report.add("calibration", false,
                          "multiple variants pass and differ on probes: " + class_str);
        return result;
    }
    // survivors agree on every probe; freeze the first as representative
    result.variant = classes[0][0];
    result.unique = true;
    result.report.add("calibration", true,
                      "passing class " + class_str + ", frozen " +
                          sign_variant_formula(result.variant));
    return result;
}

namespace {

// incremental span tracker over a fixed monomial basis
struct Span {
    std::vector<Mono> basis;
    std::map<Mono, int> index;
    std::vector<RatVec> rows;  // reduced, each with a unit pivot
    std::vector<int> pivots;

    explicit Span(std::vector<Mono> b) : basis(std::move(b)) {
        for (int i = 0; i < (int)basis.size(); ++i) index[basis[i]] = i;
    }

    int dim() const { return (int)rows.size(); }

    bool add(const Element& e) {
        RatVec v(basis.size(), Rat(0));
        for (const auto& [m, c] : e.terms()) v[index.at(m)] = c;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rat& f = v[pivots[r]];
            if (f != 0) v = vec_sub(v, vec_scale(rows[r], f));
        }
        int piv = -1;
        for (int i = 0; i < (int)v.size(); ++i)
            if (v[i] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return false;
        v = vec_scale(v, Rat(1) / v[piv]);
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }
};

std::vector<Mono> slice_monomials(Complex& cx, int p, int t) {
    std::vector<Mono> out;
    for (Mono m : basis_all(cx.gens(), p))
        if (mono_weight(cx.gens(), m) == t) out.push_back(m);
    return out;
}

}  // namespace

Report generation_closure(Transfer& tr) {
    Report rep;
    Complex& cx = tr.complex();
    auto target = cx.homology_by_weight();

    std::map<std::pair<int, int>, Span> spans;
    auto span_of = [&](int p, int t) -> Span& {
        auto it = spans.find({p, t});
        if (it == spans.end())
            it = spans.emplace(std::pair<int, int>{p, t}, Span(slice_monomials(cx, p, t))).first;
        return it->second;
    };

    struct Entry {
        Element e;
        int p, t, round;
    };
    std::vector<Entry> pool;
    auto try_add = [&](const Element& e, int round) {
        if (e.is_zero()) return false;
        int p = element_degree(e);
        int t = 0;
        for (const auto& [m, c] : e.terms()) {
            (void)c;
            t = mono_weight(cx.gens(), m);
            break;
        }
        if (!span_of(p, t).add(e)) return false;
        pool.push_back({e, p, t, round});
        return true;
    };

    try_add(Element::monomial(0), 0);  // the unit class spans degree 0
    for (const auto& e : cx.harmonic_basis(1)) try_add(e, 0);

    int max_p = cx.dim_g();
    int max_t = cx.n() * cx.n();
    for (int round = 1;; ++round) {
        bool grew = false;
        std::size_t count = pool.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                const Entry &x = pool[i], &y = pool[j];
                if (x.round != round - 1 && y.round != round - 1) continue;
                if (x.p + y.p > max_p || x.t + y.t > max_t) continue;
                grew |= try_add(tr.m2(x.e, y.e), round);
            }
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j)
                for (std::size_t k = 0; k < count; ++k) {
                    const Entry &x = pool[i], &y = pool[j], &z = pool[k];
                    if (x.round != round - 1 && y.round != round - 1 && z.round != round - 1)
                        continue;
                    if (x.p + y.p + z.p - 1 > max_p || x.t + y.t + z.t > max_t) continue;
                    grew |= try_add(tr.m3(x.e, y.e, z.e), round);
                }
        if (!grew) break;
    }

    Table t;
    t.name = "closure";
    t.columns = {"degree", "weight", "closure_dim", "homology_dim"};
    bool ok = true;
    std::string witness;
    std::map<std::pair<int, int>, long long> reached;
    for (const auto& [key, span] : spans)
        if (span.dim()) reached[key] = span.dim();
    for (const auto& [key, dim] : target) {
        long long got = reached.count(key) ? reached[key] : 0;
        t.rows.push_back({std::to_string(key.first), std::to_string(key.second),
                          std::to_string(got), std::to_string(dim)});
        if (got != dim) {
            ok = false;
            if (witness.empty())
                witness = "slice degree " + std::to_string(key.first) + " weight " +
                          std::to_string(key.second) + ": closure " + std::to_string(got) +
                          " vs homology " + std::to_string(dim);
        }
    }
    for (const auto& [key, dim] : reached) {
        if (!target.count(key)) {
            ok = false;
            if (witness.empty())
                witness = "closure escaped homology at degree " + std::to_string(key.first);
        }
    }
    rep.tables.push_back(std::move(t));
    std::vector<long long> by_degree(max_p + 1, 0);
    for (const auto& [key, dim] : reached) by_degree[key.first] += dim;
    std::string dims = "dims (";
    for (int p = 0; p <= cx.global_dim(); ++p)
        dims += (p ? ", " : "") + std::to_string(by_degree[p]);
    dims += ")";
    rep.add("closure_spans_homology", ok, ok ? dims : witness);

    // elementary hooks through iterated triple products on weight-1 classes
    const GenTable& g = cx.gens();
    std::vector<Element> ones;
    for (int i = 1; i <= cx.n(); ++i) ones.push_back(Element::monomial(Mono(1) << g.v_gen(i)));
    std::vector<Element> layer = ones;
    bool hooks_ok = true;
    std::string hook_detail;
    for (int k = 1; k <= cx.n() - 1; ++k) {
        Span hook_span(slice_monomials(cx, k + 1, 2 * k + 1));
        std::vector<Element> next;
        for (const auto& x : layer)
            for (const auto& a : ones)
                for (const auto& b : ones) {
                    for (const Element& c :
                         {tr.m3(x, a, b), tr.m3(a, x, b), tr.m3(a, b, x)}) {
                        if (c.is_zero()) continue;
                        if (hook_span.add(c)) next.push_back(c);
                    }
                }
        std::vector<int> hp(1, k + 1);
        hp.insert(hp.end(), k, 1);
        Partition hook(hp);
        long long hook_dim = schur_dim(hook, cx.n());
        if (!hook_detail.empty()) hook_detail += ", ";
        hook_detail += hook.str() + ": reached " + std::to_string(hook_span.dim()) + " of " +
                       std::to_string(hook_dim);
        if (hook_span.dim() == 0 && hook_dim > 0) hooks_ok = false;
        layer = std::move(next);
    }
    rep.add("elementary_hooks_reached", hooks_ok, hook_detail);
    return rep;
}

}  // namespace nil2

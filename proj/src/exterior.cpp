#include "nil2/exterior.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nil2 {

static const Rat kZero = 0;

GenTable::GenTable(int n) : n_(n) {
    if (n < 1 || n > 6) throw std::invalid_argument("dim V out of range 1..6");
    pair_to_id_.assign(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pair_to_id_[i][j] = n_ + (int)pair_.size();
            pair_.push_back({i, j});
        }
    total_ = n_ + (int)pair_.size();
}

int GenTable::v_gen(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("e index out of range");
    return i - 1;
}

int GenTable::w_gen(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i >= j)
        throw std::out_of_range("e{i,j} needs 1 <= i < j <= n");
    return pair_to_id_[i][j];
}

std::pair<int, int> GenTable::pair_of(int g) const {
    if (g < n_ || g >= total_) throw std::out_of_range("not a pair generator");
    return pair_[g - n_];
}

std::string GenTable::name(int g) const {
    if (g < 0 || g >= total_) throw std::out_of_range("generator id");
    if (g < n_) return "e" + std::to_string(g + 1);
    auto [i, j] = pair_[g - n_];
    return "e{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

int mono_degree(Mono m) { return std::popcount(m); }

int mono_weight(const GenTable& g, Mono m) {
    int v = std::popcount(m & ((Mono(1) << g.n()) - 1));
    return v + 2 * (std::popcount(m) - v);
}

std::vector<int> multidegree(const GenTable& g, Mono m) {
    std::vector<int> md(g.n(), 0);
    for (int id = 0; id < g.count(); ++id) {
        if (!(m >> id & 1)) continue;
        if (g.is_v(id)) {
            ++md[id];
        } else {
            auto [i, j] = g.pair_of(id);
            ++md[i - 1];
            ++md[j - 1];
        }
    }
    return md;
}

int wedge_sign(Mono a, Mono b) {
    if (a & b) return 0;
    // inversions: pairs (x in a, y in b) with x > y
    int inv = 0;
    Mono bb = b;
    while (bb) {
        int y = std::countr_zero(bb);
        bb &= bb - 1;
        inv += std::popcount(a >> (y + 1));
    }
    return inv % 2 ? -1 : 1;
}

std::string mono_str(const GenTable& g, Mono m) {
    if (m == 0) return "1";
    std::string s;
    for (int id = 0; id < g.count(); ++id) {
        if (!(m >> id & 1)) continue;
        if (!s.empty()) s += "^";
        s += g.name(id);
    }
    return s;
}

bool mono_word_less(Mono a, Mono b) {
    // lexicographic on ascending id words
    while (a && b) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

SignedMono normalize_word(const std::vector<int>& ids) {
    SignedMono r{1, 0};
    for (int id : ids) {
        Mono bit = Mono(1) << id;
        if (r.mono & bit) return {0, 0};
        int inv = std::popcount(r.mono >> (id + 1));
        if (inv % 2) r.sign = -r.sign;
        r.mono |= bit;
    }
    return r;
}

Element Element::monomial(Mono m, const Rat& c) {
    Element e;
    e.add(m, c);
    return e;
}

Element& Element::add(Mono m, const Rat& c) {
    if (c == 0) return *this;
    Rat& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
    return *this;
}

const Rat& Element::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
}

Element Element::operator*(const Rat& c) const {
    Element r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

bool Element::operator==(const Element& o) const { return terms_ == o.terms_; }

Element wedge(const Element& x, const Element& y) {
    Element r;
    for (const auto& [ma, ca] : x.terms()) {
        for (const auto& [mb, cb] : y.terms()) {
            int s = wedge_sign(ma, mb);
            if (s) r.add(ma | mb, ca * cb * s);
        }
    }
    return r;
}

int element_degree(const Element& x) {
    int p = -1;
    for (const auto& [m, c] : x.terms()) {
        (void)c;
        int d = mono_degree(m);
        if (p < 0)
            p = d;
        else if (p != d)
            return -1;
    }
    return p;
}

std::vector<Mono> basis_all(const GenTable& g, int p) {
    if (p < 0 || p > g.count()) return {};
    std::vector<Mono> out;
    // enumerate p-subsets in ascending mask order
    std::function<void(int, int, Mono)> rec = [&](int next, int left, Mono acc) {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (int id = next; id <= g.count() - left; ++id) rec(id + 1, left - 1, acc | Mono(1) << id);
    };
    rec(0, p, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mono> basis_block(const GenTable& g, const std::vector<int>& mdeg) {
    if ((int)mdeg.size() != g.n()) throw std::invalid_argument("multidegree arity mismatch");
    std::vector<Mono> out;
    std::vector<int> left = mdeg;
    std::function<void(int, Mono)> rec = [&](int id, Mono acc) {
        if (std::all_of(left.begin(), left.end(), [](int v) { return v == 0; })) {
            // budget met exactly; every generator adds positive counts, so
            // nothing extends this choice
            out.push_back(acc);
            return;
        }
        if (id == g.count()) return;
        rec(id + 1, acc);
        if (g.is_v(id)) {
            if (left[id] >= 1) {
                --left[id];
                rec(id + 1, acc | Mono(1) << id);
                ++left[id];
            }
        } else {
            auto [i, j] = g.pair_of(id);
            if (left[i - 1] >= 1 && left[j - 1] >= 1) {
                --left[i - 1];
                --left[j - 1];
                rec(id + 1, acc | Mono(1) << id);
                ++left[i - 1];
                ++left[j - 1];
            }
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string element_str(const GenTable& g, const Element& x) {
    if (x.is_zero()) return "0";
    std::vector<Mono> monos;
    for (const auto& [m, c] : x.terms()) {
        (void)c;
        monos.push_back(m);
    }
    std::sort(monos.begin(), monos.end(), mono_word_less);
    std::string s;
    for (Mono m : monos) {
        Rat c = x.coeff(m);
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (m == 0) {
            s += rat_str(a);
        } else {
            if (a != 1) s += rat_str(a) + "*";
            s += mono_str(g, m);
        }
    }
    return s;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && s[i] == ' ') ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

int parse_int(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && isdigit((unsigned char)c.s[c.i])) ++c.i;
    if (c.i == start) throw std::invalid_argument("expected integer in element at pos " +
                                                  std::to_string(start));
    return std::stoi(c.s.substr(start, c.i - start));
}

// generator factor: e<i> or e{<i>,<j>}; returns id, accumulating the sign of
// a swapped pair e{j,i} into sign
int parse_factor(const GenTable& g, Cursor& c, int& sign) {
    if (c.peek() != 'e') throw std::invalid_argument("expected generator (e<i> or e{i,j})");
    c.take();
    if (c.peek() == '{') {
        c.take();
        int i = parse_int(c);
        if (c.take() != ',') throw std::invalid_argument("expected ',' in e{i,j}");
        int j = parse_int(c);
        if (c.take() != '}') throw std::invalid_argument("expected '}' in e{i,j}");
        if (i == j) {
            sign = 0;
            return -1;
        }
        if (i > j) {
            sign = -sign;
            std::swap(i, j);
        }
        return g.w_gen(i, j);
    }
    return g.v_gen(parse_int(c));
}

}  // namespace

Element parse_element(const GenTable& g, const std::string& text) {
    Cursor c{text};
    Element out;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.take();
            sign = ch == '-' ? -1 : 1;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        first = false;
        Rat coef = 1;
        c.skip_ws();
        if (c.peek() != 'e') {
            // rational coefficient, optionally followed by *monomial
            std::size_t start = c.i;
            while (c.i < c.s.size() && (isdigit((unsigned char)c.s[c.i]) || c.s[c.i] == '/')) ++c.i;
            if (c.i == start) throw std::invalid_argument("expected coefficient or generator");
            coef = rat_parse(c.s.substr(start, c.i - start));
            if (c.peek() == '*') {
                c.take();
            } else {
                out.add(0, coef * sign);
                continue;
            }
        }
        int msign = sign;
        Mono m = 0;
        while (true) {
            int id = parse_factor(g, c, msign);
            if (msign == 0) break;
            Mono bit = Mono(1) << id;
            if (m & bit) {
                msign = 0;
                break;
            }
            // merge one factor: each earlier factor above it is one inversion
            int inv = std::popcount(m >> (id + 1));
            if (inv % 2) msign = -msign;
            m |= bit;
            if (c.peek() == '^') {
                c.take();
                continue;
            }
            break;
        }
        if (msign != 0) out.add(m, coef * msign);
        // skip any residue of a zero factor like e{2,2}
        if (msign == 0) {
            while (!c.done() && c.peek() == '^') {
                c.take();
                int dummy = 1;
                parse_factor(g, c, dummy);
            }
        }
    }
    return out;
}

}  // namespace nil2

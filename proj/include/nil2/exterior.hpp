#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nil2/rat.hpp"

namespace nil2 {

// A wedge monomial is a bitmask over generator ids. Ids 0..n-1 are the
// weight-1 generators e_1..e_n; ids n.. are the weight-2 generators e_{ij},
// i < j lexicographic. Ascending id is the canonical factor order.
using Mono = std::uint32_t;

class GenTable {
public:
    explicit GenTable(int n);

    int n() const { return n_; }
    int count() const { return total_; }
    bool is_v(int g) const { return g < n_; }
    int weight(int g) const { return g < n_ ? 1 : 2; }
    int v_gen(int i) const;                 // 1-based index
    int w_gen(int i, int j) const;          // 1-based, requires i < j
    std::pair<int, int> pair_of(int g) const;
    std::string name(int g) const;          // "e3" or "e{1,3}"

private:
    int n_, total_;
    std::vector<std::pair<int, int>> pair_;       // W id - n -> (i, j)
    std::vector<std::vector<int>> pair_to_id_;
};

int mono_degree(Mono m);  // factor count
int mono_weight(const GenTable& g, Mono m);
std::vector<int> multidegree(const GenTable& g, Mono m);
// merge sign of two disjoint ascending words; 0 when they overlap
int wedge_sign(Mono a, Mono b);
std::string mono_str(const GenTable& g, Mono m);  // "e1^e2^e{1,2}", "1" when empty
// ascending generator-id word comparison, used for output ordering
bool mono_word_less(Mono a, Mono b);

// canonical form of a generator-id word; sign 0 on a repeated generator
struct SignedMono {
    int sign;
    Mono mono;
};
SignedMono normalize_word(const std::vector<int>& ids);

// Sparse rational linear combination of monomials.
class Element {
public:
    Element() = default;
    static Element monomial(Mono m, const Rat& c = 1);

    Element& add(Mono m, const Rat& c);
    const Rat& coeff(Mono m) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Rat>& terms() const { return terms_; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Rat& c) const;
    bool operator==(const Element& o) const;

private:
    std::map<Mono, Rat> terms_;
};

Element wedge(const Element& x, const Element& y);
// -1 when the element is zero or mixes homogeneous degrees
int element_degree(const Element& x);

std::vector<Mono> basis_all(const GenTable& g, int p);
std::vector<Mono> basis_block(const GenTable& g, const std::vector<int>& mdeg);

std::string element_str(const GenTable& g, const Element& x);
// element grammar: terms joined by + or -, each an optional rational
// coefficient "c*" before a wedge word like e1^e{2,3}; "0" and "1" accepted
Element parse_element(const GenTable& g, const std::string& text);

}  // namespace nil2

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nil2 {

// Young diagram as weakly decreasing positive row lengths.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;  // number of boxes
    int height() const { return (int)parts.size(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    // by size first, then reverse-lexicographic: stable table order
    bool operator<(const Partition& o) const;
    std::string str() const;  // "(3,1,1)", empty diagram renders as "()"
};

struct FrobeniusForm {
    std::vector<int> arms;  // boxes right of diagonal, strictly decreasing
    std::vector<int> legs;  // boxes below diagonal
    int rank() const { return (int)arms.size(); }
    bool operator==(const FrobeniusForm& o) const { return arms == o.arms && legs == o.legs; }
    std::string str() const;  // "(1,0|1,0)"
};

Partition conjugate(const Partition& p);
bool self_conjugate(const Partition& p);
FrobeniusForm frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusForm& f);

// all self-conjugate diagrams with (|p| + rank)/2 equal to the homological
// degree; equivalently distinct-part partitions of the degree via diagonal hooks
std::vector<Partition> self_conjugate_by_degree(int hom_degree);
std::vector<Partition> self_conjugate_up_to_size(int max_size);

// semistandard tableau count with entries in 1..n, by the hook content product
long long schur_dim(const Partition& p, int n);
// brute-force cross check, exponential, intended for |p| <= 8
long long ssyt_count(const Partition& p, int n);
// visits the content vector (occurrences of each entry value) of every SSYT
void enumerate_ssyt(const Partition& p, int n,
                    const std::function<void(const std::vector<int>&)>& visit);

}  // namespace nil2

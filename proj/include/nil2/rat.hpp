#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nil2 {

using Rat = mpq_class;

// lowest terms, "p" when integral, "p/q" otherwise
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace nil2

#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace minw {

/// Exact rational scalar. All arithmetic in the engine is done over Q.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Serialized as "p" or "p/q", the form used throughout the JSON output.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline Rat binom(unsigned n, unsigned k) {
    if (k > n) return Rat(0);
    Rat r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= Rat(static_cast<long>(n - i));
        r /= Rat(static_cast<long>(i + 1));
    }
    return r;
}

}  // namespace minw

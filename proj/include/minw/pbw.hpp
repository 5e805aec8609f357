#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "minw/rat.hpp"

namespace minw {

/// PBW monomial: (letter, exponent) pairs sorted by letter. Letters are the
/// positions of a fixed total order; exponents are positive.
using Mono = std::vector<std::pair<int, int>>;

/// Sparse element of the algebra in normal form.
using Element = std::map<Mono, Rat>;

/// coefficient * word; words may be in any order (they get straightened).
using WordTerm = std::pair<Rat, std::vector<int>>;
using WordSum = std::vector<WordTerm>;

void el_add(Element& dst, const Element& src, const Rat& scale = Rat(1));
Element el_scale(const Element& a, const Rat& c);
bool el_eq(const Element& a, const Element& b);
Element el_sub(const Element& a, const Element& b);

/// Straightening engine for an algebra with a PBW basis: letters 0..n-1 with
/// filtration degrees, and a commutator rule [L_a, L_b] for a > b whose terms
/// all have degree strictly below deg(a) + deg(b). That degree drop is what
/// makes the rewriting terminate.
class PbwAlgebra {
public:
    PbwAlgebra(std::vector<long> degrees, std::function<WordSum(int, int)> comm)
        : deg_(std::move(degrees)), comm_(std::move(comm)) {}

    int n_letters() const { return static_cast<int>(deg_.size()); }
    long letter_degree(int l) const { return deg_[l]; }
    long degree(const Mono& m) const;
    long degree(const Element& e) const;  // max over monomials; -1 for zero

    Element unit() const { return Element{{Mono{}, Rat(1)}}; }
    Element letter(int l) const { return Element{{Mono{{l, 1}}, Rat(1)}}; }

    Element mul(const Element& a, const Element& b) const;
    Element mul_mono_letter(const Mono& m, int g) const;
    Element word(const std::vector<int>& w) const;

    void clear_cache() const;

private:
    std::vector<long> deg_;
    std::function<WordSum(int, int)> comm_;

    struct KeyHash {
        size_t operator()(const std::vector<int>& v) const {
            size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    mutable std::unordered_map<std::vector<int>, Element, KeyHash> memo_;
    mutable std::mutex mu_;

    Element mul_el_letter(const Element& a, int g) const;
    Element append_letter_mono(const Mono& m, int x) const;
};

}  // namespace minw

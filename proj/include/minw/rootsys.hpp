#pragma once

#include <map>
#include <string>
#include <vector>

#include "minw/qmat.hpp"
#include "minw/rat.hpp"

namespace minw {

/// Root in simple-root coordinates (all entries share a sign).
using RootCoords = std::vector<long>;

/// Weight in fundamental-weight coordinates.
using Weight = QVec;

/// A simple root system with Bourbaki-numbered simple roots, both the Bourbaki
/// scalar product (.|.) and the normalization (.,.) in which long roots have
/// squared length 2, and the distinguished long root beta used by the
/// highest-root sl2 construction.
class RootSystem {
public:
    char type = 'A';
    int rank = 0;
    std::vector<RootCoords> positive;  // ordered by (height, lex)
    QMat cartan;                       // cartan(i,j) = <alpha_i, alpha_j>
    QMat gram;                         // gram(i,j) = (alpha_i | alpha_j), Bourbaki tables
    QVec dhalf;                        // (alpha_i|alpha_i)/2
    Rat kappa;                         // (long|long)/2; (.,.) = (.|.)/kappa
    int beta_simple = 0;               // simple index (0-based) of beta
    int beta_pos = 0;                  // index of beta in `positive`
    int highest_pos = 0;               // index of the highest root

    size_t n_positive() const { return positive.size(); }
    long height(const RootCoords& r) const;
    bool is_root(const RootCoords& r) const;
    int positive_index(const RootCoords& r) const;  // -1 if not a positive root

    // coordinate conversions
    Weight root_to_fw(const RootCoords& r) const;
    QVec fw_to_rootcoords(const Weight& w) const;

    // bilinear data
    Rat bourbaki(const Weight& a, const Weight& b) const;
    Rat bourbaki_roots(const RootCoords& a, const RootCoords& b) const;
    Rat inner(const Weight& a, const Weight& b) const;  // normalized (.,.)
    Rat pairing(const Weight& w, const RootCoords& alpha) const;  // <w, alpha>

    Weight rho() const;
    Weight fundamental_weight(int i) const;
    Weight zero_weight() const { return Weight(rank, Rat(0)); }

    RootCoords simple_root(int i) const;
    RootCoords reflect(const RootCoords& gamma, const RootCoords& alpha) const;
    Weight reflect_weight(const Weight& w, const RootCoords& alpha) const;
    /// Dot action w.lambda = w(lambda+rho)-rho for w given as a word in simple
    /// reflections (applied right to left).
    Weight dot_action(const std::vector<int>& word, const Weight& lambda) const;

    /// Classical count of positive roots for the given type and rank.
    static size_t classical_positive_count(char type, int rank);

private:
    std::map<RootCoords, int> pos_index_;
    mutable QMat cartan_t_inv_;  // cached inverse of cartan^T
    mutable bool have_inv_ = false;
    friend RootSystem build_root_system(char, int);
};

/// Builds the root system; B2 is canonicalized to C2. Throws
/// std::invalid_argument on unsupported (type, rank).
RootSystem build_root_system(char type_letter, int rank);

}  // namespace minw

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minw/qmat.hpp"
#include "minw/rootsys.hpp"

namespace minw {

/// Sparse vector over the Lie algebra basis, sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_scale(const SparseVec& a, const Rat& c);
SparseVec sv_single(int idx, const Rat& c);
bool sv_is_zero(const SparseVec& a);

/// Chevalley basis of g with exact structure constants, the invariant form
/// normalized by (e,f) = 1 for the distinguished sl2-triple, and the short
/// Z-grading by ad h.
///
/// Basis layout: e_gamma for the positive roots (enumeration order), then
/// e_{-gamma} in the same order, then the Cartan: first the h_e basis vectors
/// t_k (one per simple root other than beta), then h = h_beta last.
struct LieAlgebraData {
    RootSystem rs;
    int dim = 0;
    int n_pos = 0;
    std::vector<std::string> labels;
    std::vector<SparseVec> bracket_table;  // dim*dim, row-major
    QMat form;
    std::vector<int> grading;  // ad h eigenvalue in {-2..2}
    int e_idx = 0, f_idx = 0, h_idx = 0;

    int epos(int i) const { return i; }
    int eneg(int i) const { return n_pos + i; }
    bool is_root_vector(int idx) const { return idx < 2 * n_pos; }
    /// Root of a root-vector basis index, in simple-root coordinates.
    RootCoords root_of(int idx) const;

    const SparseVec& bracket(int i, int j) const { return bracket_table[i * dim + j]; }
    SparseVec bracket_vv(const SparseVec& a, const SparseVec& b) const;
    Rat form_vv(const SparseVec& a, const SparseVec& b) const;
    /// ad-h grade of a homogeneous vector; throws if mixed.
    int grade_of(const SparseVec& v) const;
    /// chi(x) = (e, x)
    Rat chi(const SparseVec& v) const;
};

/// Symplectic slice data at the minimal nilpotent: the Darboux basis of g(-1),
/// the bases of the centralizer's graded pieces, Casimir dual pairs, h0 and
/// m_chi.
struct SliceData {
    const LieAlgebraData* la = nullptr;
    int s = 0;
    std::vector<SparseVec> z;      // z_1..z_{2s}; first s are negative root vectors
    std::vector<SparseVec> zstar;  // z_i^* = z_{i+s} (i<=s), z_{i+s}^* = -z_i
    // z_chi(0) basis, in order: x-list, y-list, h_e-list
    std::vector<int> xlist, ylist, helist;  // letters (basis indices)
    int q = 0;                              // dim z_chi(0)
    // z_chi(1) basis: u_1..u_s then u*_1..u*_s
    std::vector<SparseVec> gen1;
    std::vector<SparseVec> cas_a, cas_b;  // dual bases of z_chi(0)
    SparseVec h0;
    std::vector<SparseVec> mchi;  // f, z_{s+1..2s}

    SparseVec gen0_vec(int i) const;
    int gen0_letter(int i) const;
    /// coordinates of a z_chi(0) vector in the gen0 basis
    QVec gen0_coords(const SparseVec& v) const;
    QVec gen1_coords(const SparseVec& v) const;
    Rat symp(const SparseVec& a, const SparseVec& b) const;  // <a,b> = (e,[a,b])
};

LieAlgebraData build_lie(const RootSystem& rs);
SliceData build_slice(const LieAlgebraData& la);

/// Projection x -> x - (x,h)/2 h of g(0) onto z_chi(0). Throws if x is not in g(0).
SparseVec sharp(const LieAlgebraData& la, const SparseVec& x);

/// The constant c0 of the quadratic relation, from the closed-form table.
Rat c0_constant(char type, int rank);

/// The highest weight lambda0 whose annihilator realizes the distinguished
/// completely prime ideal (types other than A).
Weight lambda0_weight(const RootSystem& rs);

/// ht_beta: coefficient sum of a root skipping the beta coefficient.
long ht_beta(const RootSystem& rs, const RootCoords& r);

}  // namespace minw

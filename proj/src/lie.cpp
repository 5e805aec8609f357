#include "minw/lie.hpp"

#include "minw/rat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace minw {

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
    SparseVec out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Rat c = a[i].second + b[j].second;
            if (c != 0) out.push_back({a[i].first, c});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sv_scale(const SparseVec& a, const Rat& c) {
    if (c == 0) return {};
    SparseVec out(a);
    for (auto& [k, v] : out) v *= c;
    return out;
}

SparseVec sv_single(int idx, const Rat& c) {
    if (c == 0) return {};
    return {{idx, c}};
}

bool sv_is_zero(const SparseVec& a) { return a.empty(); }

RootCoords LieAlgebraData::root_of(int idx) const {
    if (idx < n_pos) return rs.positive[idx];
    RootCoords r = rs.positive[idx - n_pos];
    for (auto& x : r) x = -x;
    return r;
}

SparseVec LieAlgebraData::bracket_vv(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) out = sv_add(out, sv_scale(bracket(i, j), ci * cj));
    return out;
}

Rat LieAlgebraData::form_vv(const SparseVec& a, const SparseVec& b) const {
    Rat s(0);
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b)
            if (form(i, j) != 0) s += ci * cj * form(i, j);
    return s;
}

int LieAlgebraData::grade_of(const SparseVec& v) const {
    if (v.empty()) throw std::invalid_argument("grade of zero vector");
    int g = grading[v.front().first];
    for (const auto& [i, c] : v)
        if (grading[i] != g) throw std::invalid_argument("vector not grade-homogeneous");
    return g;
}

Rat LieAlgebraData::chi(const SparseVec& v) const {
    Rat s(0);
    for (const auto& [i, c] : v)
        if (form(e_idx, i) != 0) s += c * form(e_idx, i);
    return s;
}

namespace {

/// Structure constants N_{a,b} on pairs of roots, built from the extraspecial
/// pairs with the positive-sign convention and propagated through the Jacobi
/// identity. Signed root ids: r < P is positive[r], r >= P is its negative.
class ChevalleyConstants {
public:
    explicit ChevalleyConstants(const RootSystem& rs)
        : rs_(rs), P_(static_cast<int>(rs.n_positive())) {
        build();
    }

    /// N_{r1,r2} with [e_{r1}, e_{r2}] = N e_{r1+r2}; 0 when r1+r2 is not a root.
    Rat N(int r1, int r2) const {
        bool n1 = r1 >= P_, n2 = r2 >= P_;
        int p1 = n1 ? r1 - P_ : r1, p2 = n2 ? r2 - P_ : r2;
        if (!n1 && !n2) return Npp(p1, p2);
        if (n1 && n2) return -Npp(p1, p2);
        if (n1 && !n2) return Nmixed(p1, p2);
        return -Nmixed(p2, p1);
    }

private:
    const RootSystem& rs_;
    int P_;
    std::map<std::pair<int, int>, Rat> npp_;  // keyed by posidx pair (a<b)

    const RootCoords& coords(int pidx) const { return rs_.positive[pidx]; }

    Rat len2(int pidx) const { return rs_.bourbaki_roots(coords(pidx), coords(pidx)); }

    std::optional<int> pos_of_diff(const RootCoords& a, const RootCoords& b) const {
        RootCoords s(a);
        for (size_t i = 0; i < s.size(); ++i) s[i] -= b[i];
        int idx = rs_.positive_index(s);
        if (idx < 0) return std::nullopt;
        return idx;
    }

    bool sum_is_root(int a, int b) const {
        RootCoords s(coords(a));
        for (int i = 0; i < rs_.rank; ++i) s[i] += coords(b)[i];
        return rs_.positive_index(s) >= 0;
    }

    Rat Npp(int a, int b) const {
        if (a == b) return Rat(0);
        if (!sum_is_root(a, b)) return Rat(0);
        if (a < b) {
            auto it = npp_.find({a, b});
            if (it == npp_.end()) throw std::logic_error("Npp: constant not yet computed");
            return it->second;
        }
        return -Npp(b, a);
    }

    /// N_{-alpha, beta} for positive alpha != beta.
    Rat Nmixed(int alpha, int beta) const {
        if (alpha == beta) throw std::logic_error("Nmixed on opposite roots");
        if (auto d = pos_of_diff(coords(beta), coords(alpha))) {
            return -Npp(*d, alpha) * len2(*d) / len2(beta);
        }
        if (auto d = pos_of_diff(coords(alpha), coords(beta))) {
            return -Npp(*d, beta) * len2(*d) / len2(alpha);
        }
        return Rat(0);
    }

    void build() {
        for (int g = 0; g < P_; ++g) {
            const RootCoords& gamma = coords(g);
            if (rs_.height(gamma) == 1) continue;
            // extraspecial pair: minimal first component in the root order
            int a1 = -1, b1 = -1;
            for (int a = 0; a < P_; ++a) {
                if (auto d = pos_of_diff(gamma, coords(a))) {
                    a1 = a;
                    b1 = *d;
                    break;
                }
            }
            if (a1 < 0) throw std::logic_error("no special pair found");
            long p = 0;
            {
                RootCoords r = coords(b1);
                while (true) {
                    for (int i = 0; i < rs_.rank; ++i) r[i] -= coords(a1)[i];
                    if (!rs_.is_root(r)) break;
                    ++p;
                }
            }
            npp_[{a1, b1}] = Rat(p + 1);

            Rat ngma1 = -npp_[{a1, b1}] * len2(b1) / len2(g);  // N_{gamma, -alpha1}
            for (int a = a1 + 1; a < P_; ++a) {
                auto bo = pos_of_diff(gamma, coords(a));
                if (!bo) continue;
                int b = *bo;
                if (a >= b) break;  // beyond this the pairs repeat mirrored
                Rat term1(0), term2(0);
                if (auto d = pos_of_diff(coords(a), coords(a1))) {
                    Rat nm = -Npp(*d, a1) * len2(*d) / len2(a);  // N_{-a1, a}
                    term1 = nm * Npp(*d, b);
                }
                if (auto d = pos_of_diff(coords(b), coords(a1))) {
                    Rat nm = Npp(*d, a1) * len2(*d) / len2(b);  // N_{b, -a1}
                    term2 = nm * Npp(*d, a);
                }
                npp_[{a, b}] = -(term1 + term2) / ngma1;
            }
        }
    }
};

}  // namespace

LieAlgebraData build_lie(const RootSystem& rs) {
    LieAlgebraData la;
    la.rs = rs;
    int P = static_cast<int>(rs.n_positive());
    int ell = rs.rank;
    la.n_pos = P;
    la.dim = 2 * P + ell;

    int beta = rs.beta_simple;
    const RootCoords beta_root = rs.simple_root(beta);

    auto root_label = [&](const RootCoords& r) {
        std::string s = "[";
        for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
        return s + "]";
    };
    la.labels.resize(la.dim);
    for (int i = 0; i < P; ++i) {
        la.labels[i] = "e" + root_label(rs.positive[i]);
        la.labels[P + i] = "f" + root_label(rs.positive[i]);
    }
    {
        int k = 0;
        for (int j = 0; j < ell; ++j) {
            if (j == beta) continue;
            la.labels[2 * P + k] = "t" + std::to_string(j + 1);
            ++k;
        }
        la.labels[2 * P + ell - 1] = "h";
    }

    // Cartan indexing: simple j != beta -> t slot; h_beta last
    std::vector<int> tslot(ell, -1);
    {
        int k = 0;
        for (int j = 0; j < ell; ++j) {
            if (j == beta) continue;
            tslot[j] = 2 * P + k;
            ++k;
        }
    }
    la.h_idx = 2 * P + ell - 1;
    la.e_idx = rs.beta_pos;
    la.f_idx = P + rs.beta_pos;

    auto pairing_roots = [&](const RootCoords& a, const RootCoords& b) -> Rat {
        return 2 * rs.bourbaki_roots(a, b) / rs.bourbaki_roots(b, b);  // <a, b>
    };

    // h_gamma in the (t, h) Cartan basis
    auto coroot_vec = [&](const RootCoords& gamma) {
        Rat glen = rs.bourbaki_roots(gamma, gamma);
        SparseVec out;
        Rat hcoef(0);
        std::vector<Rat> tco(ell, Rat(0));
        for (int j = 0; j < ell; ++j) {
            if (gamma[j] == 0) continue;
            Rat cj = Rat(gamma[j]) * rs.gram(j, j) / glen;  // coefficient of h_{alpha_j}
            if (j == beta) {
                hcoef += cj;
            } else {
                tco[j] += cj;
                hcoef += cj * pairing_roots(beta_root, rs.simple_root(j)) / 2;
            }
        }
        for (int j = 0; j < ell; ++j)
            if (tco[j] != 0) out.push_back({tslot[j], tco[j]});
        if (hcoef != 0) out.push_back({la.h_idx, hcoef});
        std::sort(out.begin(), out.end());
        return out;
    };

    // gamma evaluated on a Cartan basis vector
    auto root_on_cartan = [&](const RootCoords& gamma, int cidx) -> Rat {
        if (cidx == la.h_idx) return pairing_roots(gamma, beta_root);
        for (int j = 0; j < ell; ++j) {
            if (tslot[j] == cidx) {
                return pairing_roots(gamma, rs.simple_root(j)) -
                       pairing_roots(beta_root, rs.simple_root(j)) / 2 *
                           pairing_roots(gamma, beta_root);
            }
        }
        throw std::logic_error("bad cartan index");
    };

    ChevalleyConstants cc(rs);

    la.bracket_table.assign(static_cast<size_t>(la.dim) * la.dim, SparseVec{});
    auto set_bk = [&](int i, int j, SparseVec v) {
        la.bracket_table[static_cast<size_t>(i) * la.dim + j] = std::move(v);
    };

    for (int i = 0; i < 2 * P; ++i) {
        RootCoords ri = la.root_of(i);
        for (int j = 0; j < 2 * P; ++j) {
            if (i == j) continue;
            RootCoords rj = la.root_of(j);
            RootCoords sum(ri);
            for (int k = 0; k < ell; ++k) sum[k] += rj[k];
            bool zero_sum = std::all_of(sum.begin(), sum.end(), [](long x) { return x == 0; });
            if (zero_sum) {
                // [e_gamma, e_{-gamma}] = h_gamma for positive gamma
                SparseVec h = coroot_vec(i < P ? ri : rj);
                set_bk(i, j, i < P ? h : sv_scale(h, Rat(-1)));
                continue;
            }
            int target;
            if (int pi = rs.positive_index(sum); pi >= 0) {
                target = pi;
            } else {
                RootCoords neg(sum);
                for (auto& x : neg) x = -x;
                int ni = rs.positive_index(neg);
                if (ni < 0) continue;  // not a root: bracket is zero
                target = P + ni;
            }
            Rat n = cc.N(i, j);
            if (n != 0) set_bk(i, j, sv_single(target, n));
        }
    }
    // Cartan against root vectors; Cartan x Cartan is zero.
    for (int c = 2 * P; c < la.dim; ++c) {
        for (int i = 0; i < 2 * P; ++i) {
            Rat v = root_on_cartan(la.root_of(i), c);
            if (v != 0) {
                set_bk(c, i, sv_single(i, v));
                set_bk(i, c, sv_single(i, -v));
            }
        }
    }

    // invariant form, normalized by (e_beta, e_{-beta}) = 1
    la.form = QMat(la.dim, la.dim);
    for (int i = 0; i < P; ++i) {
        Rat v = 2 * rs.kappa / rs.bourbaki_roots(rs.positive[i], rs.positive[i]);
        la.form(i, P + i) = v;
        la.form(P + i, i) = v;
    }
    {
        // Gram of the h_{alpha_i}, pushed through the (t, h) change of basis
        QMat K(ell, ell);
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < ell; ++j)
                K(i, j) = 4 * rs.kappa * rs.gram(i, j) / (rs.gram(i, i) * rs.gram(j, j));
        std::vector<QVec> expn(ell, QVec(ell, Rat(0)));  // slot -> h_alpha coords
        int k = 0;
        for (int j = 0; j < ell; ++j) {
            if (j == beta) continue;
            expn[k][j] = 1;
            expn[k][beta] = -pairing_roots(beta_root, rs.simple_root(j)) / 2;
            ++k;
        }
        expn[ell - 1][beta] = 1;
        for (int a = 0; a < ell; ++a)
            for (int b = 0; b < ell; ++b) {
                Rat sum(0);
                for (int i = 0; i < ell; ++i)
                    for (int j = 0; j < ell; ++j)
                        if (expn[a][i] != 0 && expn[b][j] != 0)
                            sum += expn[a][i] * expn[b][j] * K(i, j);
                la.form(2 * P + a, 2 * P + b) = sum;
            }
    }

    // grading by ad h
    la.grading.assign(la.dim, 0);
    for (int i = 0; i < 2 * P; ++i) {
        Rat g = pairing_roots(la.root_of(i), beta_root);
        if (g.get_den() != 1) throw std::logic_error("non-integer grade");
        long gi = g.get_num().get_si();
        if (gi < -2 || gi > 2) throw std::logic_error("grade out of range");
        la.grading[i] = static_cast<int>(gi);
    }
    return la;
}

SparseVec sharp(const LieAlgebraData& la, const SparseVec& x) {
    for (const auto& [i, c] : x)
        if (la.grading[i] != 0) throw std::invalid_argument("sharp: vector not in g(0)");
    Rat xh = la.form_vv(x, sv_single(la.h_idx, Rat(1)));
    return sv_add(x, sv_single(la.h_idx, -xh / 2));
}

SliceData build_slice(const LieAlgebraData& la) {
    SliceData sd;
    sd.la = &la;
    const RootSystem& rs = la.rs;
    int P = la.n_pos;
    const RootCoords beta_root = rs.simple_root(rs.beta_simple);

    auto beta_pairing = [&](const RootCoords& r) {
        Rat v = 2 * rs.bourbaki_roots(r, beta_root) / rs.bourbaki_roots(beta_root, beta_root);
        return v.get_num().get_si();
    };

    // z_chi(0) letters
    for (int i = 0; i < P; ++i) {
        if (beta_pairing(rs.positive[i]) == 0) {
            sd.xlist.push_back(la.epos(i));
            sd.ylist.push_back(la.eneg(i));
        }
    }
    for (int c = 2 * P; c < la.dim - 1; ++c) sd.helist.push_back(c);
    sd.q = static_cast<int>(sd.xlist.size() + sd.ylist.size() + sd.helist.size());

    // g(-1): the negative-root half comes from positive deltas with <delta,beta> = 1
    std::vector<int> deltas;
    for (int i = 0; i < P; ++i)
        if (beta_pairing(rs.positive[i]) == 1) deltas.push_back(i);
    sd.s = static_cast<int>(deltas.size());
    SparseVec fvec = sv_single(la.f_idx, Rat(1));
    SparseVec evec = sv_single(la.e_idx, Rat(1));
    for (int d : deltas) sd.z.push_back(sv_single(la.eneg(d), Rat(1)));
    for (int i = 0; i < sd.s; ++i) {
        RootCoords gstar = rs.positive[deltas[i]];
        for (int k = 0; k < rs.rank; ++k) gstar[k] -= beta_root[k];
        int gsi = rs.positive_index(gstar);
        if (gsi < 0) throw std::runtime_error("slice: gamma_i^* is not a positive root");
        SparseVec cand = sv_single(la.epos(gsi), Rat(1));
        Rat t = la.form_vv(evec, la.bracket_vv(cand, sd.z[i]));
        if (t == 0) throw std::runtime_error("slice: degenerate symplectic pairing");
        sd.z.push_back(sv_scale(cand, 1 / t));
    }
    for (int i = 0; i < sd.s; ++i) sd.zstar.push_back(sd.z[sd.s + i]);
    for (int i = 0; i < sd.s; ++i) sd.zstar.push_back(sv_scale(sd.z[i], Rat(-1)));

    // invariants of the Darboux basis
    for (int i = 0; i < 2 * sd.s; ++i)
        for (int j = 0; j < 2 * sd.s; ++j) {
            Rat v = sd.symp(sd.zstar[i], sd.z[j]);
            if (v != (i == j ? 1 : 0)) throw std::runtime_error("slice: <z_i^*, z_j> != delta_ij");
        }
    for (int i = 0; i < sd.s; ++i)
        for (int j = 0; j < sd.s; ++j) {
            if (!sv_is_zero(la.bracket_vv(sd.z[i], sd.z[j])))
                throw std::runtime_error("slice: [z_i, z_j] != 0");
            if (!sv_is_zero(la.bracket_vv(sd.z[sd.s + i], sd.z[sd.s + j])))
                throw std::runtime_error("slice: [z_{i+s}, z_{j+s}] != 0");
            SparseVec br = la.bracket_vv(sd.z[sd.s + i], sd.z[j]);
            SparseVec expect = i == j ? fvec : SparseVec{};
            if (br != expect) throw std::runtime_error("slice: [z_{i+s}, z_j] != delta_ij f");
        }

    // z_chi(1): u_i = [e, z_i], u_i^* = [e, z_i^*]
    for (int i = 0; i < sd.s; ++i) sd.gen1.push_back(la.bracket_vv(evec, sd.z[i]));
    for (int i = 0; i < sd.s; ++i) sd.gen1.push_back(la.bracket_vv(evec, sd.zstar[i]));
    for (const auto& u : sd.gen1)
        if (sv_is_zero(u) || la.grade_of(u) != 1)
            throw std::runtime_error("slice: bad z_chi(1) vector");

    // Casimir dual pairs from the Gram matrix of the gen0 basis
    if (sd.q > 0) {
        QMat G(sd.q, sd.q);
        for (int i = 0; i < sd.q; ++i)
            for (int j = 0; j < sd.q; ++j) G(i, j) = la.form_vv(sd.gen0_vec(i), sd.gen0_vec(j));
        QMat Gi = G.inverse();
        for (int i = 0; i < sd.q; ++i) {
            sd.cas_a.push_back(sd.gen0_vec(i));
            SparseVec b;
            for (int k = 0; k < sd.q; ++k)
                if (Gi(k, i) != 0) b = sv_add(b, sv_scale(sd.gen0_vec(k), Gi(k, i)));
            sd.cas_b.push_back(b);
        }
    }

    // h0: the Cartan element grading root vectors by ht_beta
    {
        int ell = rs.rank;
        QMat C(ell, ell);
        QVec target(ell, Rat(1));
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < ell; ++j) C(i, j) = rs.cartan(i, j);
        target[rs.beta_simple] = 0;
        QVec cvec;
        if (!qmat_solve(C, target, cvec)) throw std::runtime_error("slice: h0 solve failed");
        SparseVec h0;
        for (int j = 0; j < ell; ++j) {
            if (cvec[j] == 0) continue;
            if (j == rs.beta_simple) {
                h0 = sv_add(h0, sv_single(la.h_idx, cvec[j]));
            } else {
                int k = 0;
                for (int jj = 0; jj < ell; ++jj) {
                    if (jj == rs.beta_simple) continue;
                    if (jj == j) break;
                    ++k;
                }
                h0 = sv_add(h0, sv_single(2 * P + k, cvec[j]));
                Rat bp = 2 * rs.bourbaki_roots(beta_root, rs.simple_root(j)) /
                         rs.bourbaki_roots(rs.simple_root(j), rs.simple_root(j));
                h0 = sv_add(h0, sv_single(la.h_idx, cvec[j] * bp / 2));
            }
        }
        sd.h0 = h0;
        for (int i = 0; i < 2 * P; ++i) {
            SparseVec br = la.bracket_vv(sd.h0, sv_single(i, Rat(1)));
            SparseVec want = sv_single(i, Rat(ht_beta(rs, la.root_of(i))));
            if (br != want) throw std::runtime_error("slice: h0 grading check failed");
        }
        // raising property: every u_i^* has strictly positive ht_beta weight
        for (int i = 0; i < sd.s; ++i) {
            int letter = sd.gen1[sd.s + i][0].first;
            if (ht_beta(rs, la.root_of(letter)) <= 0)
                throw std::runtime_error("slice: u_i^* does not raise the h0-weight");
        }
    }

    sd.mchi.push_back(fvec);
    for (int i = 0; i < sd.s; ++i) sd.mchi.push_back(sd.z[sd.s + i]);
    return sd;
}

SparseVec SliceData::gen0_vec(int i) const { return sv_single(gen0_letter(i), Rat(1)); }

int SliceData::gen0_letter(int i) const {
    int nx = static_cast<int>(xlist.size());
    int ny = static_cast<int>(ylist.size());
    if (i < nx) return xlist[i];
    if (i < nx + ny) return ylist[i - nx];
    return helist[i - nx - ny];
}

QVec SliceData::gen0_coords(const SparseVec& v) const {
    QVec out(q, Rat(0));
    for (int i = 0; i < q; ++i) {
        int letter = gen0_letter(i);
        for (const auto& [k, c] : v)
            if (k == letter) out[i] = c;
    }
    SparseVec recon;
    for (int i = 0; i < q; ++i)
        if (out[i] != 0) recon = sv_add(recon, sv_scale(gen0_vec(i), out[i]));
    if (recon != v) throw std::invalid_argument("vector not in z_chi(0)");
    return out;
}

QVec SliceData::gen1_coords(const SparseVec& v) const {
    QVec out(2 * s, Rat(0));
    SparseVec recon;
    for (int i = 0; i < 2 * s; ++i) {
        const SparseVec& u = gen1[i];
        if (u.size() != 1) throw std::logic_error("gen1 vector not a single letter");
        for (const auto& [k, c] : v)
            if (k == u[0].first) out[i] = c / u[0].second;
        if (out[i] != 0) recon = sv_add(recon, sv_scale(u, out[i]));
    }
    if (recon != v) throw std::invalid_argument("vector not in z_chi(1)");
    return out;
}

Rat SliceData::symp(const SparseVec& a, const SparseVec& b) const {
    return la->form_vv(sv_single(la->e_idx, Rat(1)), la->bracket_vv(a, b));
}

Rat c0_constant(char type, int rank) {
    long n = rank;
    if (type == 'B' && rank == 2) type = 'C';
    switch (type) {
        case 'A': return -rat(n * (n + 1), 4);
        case 'B': return -rat((2 * n + 1) * (2 * n - 3), 4);
        case 'C': return -rat(n * (2 * n + 1), 8);
        case 'D': return rat(-n * (n - 2));
        case 'E': return n == 6 ? Rat(-36) : (n == 7 ? Rat(-84) : Rat(-240));
        case 'F': return -rat(39, 2);
        case 'G': return -rat(28, 9);
    }
    throw std::invalid_argument("c0: unknown type");
}

Weight lambda0_weight(const RootSystem& rs) {
    Weight w = rs.zero_weight();
    int n = rs.rank;
    switch (rs.type) {
        case 'B':
            w[n - 3] = -Rat(1, 2);
            w[n - 2] = -Rat(1, 2);
            return w;
        case 'C':
            w[n - 1] = -Rat(1, 2);
            return w;
        case 'D':
            w[n - 3] = -1;
            return w;
        case 'E':
            w[3] = -1;
            return w;
        case 'F':
            w[0] = -Rat(1, 2);
            w[1] = -Rat(1, 2);
            return w;
        case 'G':
            w[1] = -Rat(2, 3);
            return w;
    }
    throw std::invalid_argument("lambda0: not defined for type A");
}

long ht_beta(const RootSystem& rs, const RootCoords& r) {
    long s = 0;
    for (int i = 0; i < rs.rank; ++i)
        if (i != rs.beta_simple) s += r[i];
    return s;
}

}  // namespace minw

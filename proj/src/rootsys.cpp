#include "minw/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace minw {

namespace {

struct DynkinData {
    std::vector<std::pair<int, int>> edges;  // 0-based
    QVec dhalf;
};

DynkinData dynkin_data(char t, int n) {
    DynkinData d;
    d.dhalf.assign(n, Rat(1));
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) d.edges.push_back({i, i + 1});
    };
    switch (t) {
        case 'A':
            chain(n);
            break;
        case 'B':
            chain(n);
            d.dhalf[n - 1] = Rat(1, 2);
            break;
        case 'C':
            chain(n);
            d.dhalf[n - 1] = Rat(2);
            break;
        case 'D':
            chain(n - 1);
            d.edges.push_back({n - 3, n - 1});
            break;
        case 'E':
            // Bourbaki: alpha2 hangs off alpha4; the chain is 1-3-4-5-6(-7-8).
            d.edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
            if (n >= 7) d.edges.push_back({5, 6});
            if (n == 8) d.edges.push_back({6, 7});
            break;
        case 'F':
            chain(4);
            d.dhalf[2] = Rat(1, 2);
            d.dhalf[3] = Rat(1, 2);
            break;
        case 'G':
            d.edges = {{0, 1}};
            d.dhalf[1] = Rat(3);
            break;
        default:
            throw std::invalid_argument("unknown type");
    }
    return d;
}

int beta_simple_index(char t, int n) {
    switch (t) {
        case 'A': return n - 1;
        case 'B': return 1;
        case 'C': return n - 1;
        case 'D': return 1;
        case 'E': return n == 6 ? 1 : (n == 7 ? 0 : 7);
        case 'F': return 0;
        case 'G': return 1;
    }
    throw std::invalid_argument("unknown type");
}

}  // namespace

long RootSystem::height(const RootCoords& r) const {
    return std::accumulate(r.begin(), r.end(), 0L);
}

bool RootSystem::is_root(const RootCoords& r) const {
    if (pos_index_.count(r)) return true;
    RootCoords neg(r);
    for (auto& x : neg) x = -x;
    return pos_index_.count(neg) > 0;
}

int RootSystem::positive_index(const RootCoords& r) const {
    auto it = pos_index_.find(r);
    return it == pos_index_.end() ? -1 : it->second;
}

Weight RootSystem::root_to_fw(const RootCoords& r) const {
    Weight w(rank, Rat(0));
    for (int i = 0; i < rank; ++i) {
        if (r[i] == 0) continue;
        for (int j = 0; j < rank; ++j) w[j] += Rat(r[i]) * cartan(i, j);
    }
    return w;
}

QVec RootSystem::fw_to_rootcoords(const Weight& w) const {
    if (!have_inv_) {
        QMat ct(rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) ct(i, j) = cartan(j, i);
        cartan_t_inv_ = ct.inverse();
        have_inv_ = true;
    }
    return cartan_t_inv_.apply(w);
}

Rat RootSystem::bourbaki_roots(const RootCoords& a, const RootCoords& b) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (b[j] != 0) s += Rat(a[i]) * Rat(b[j]) * gram(i, j);
    }
    return s;
}

Rat RootSystem::bourbaki(const Weight& a, const Weight& b) const {
    QVec ar = fw_to_rootcoords(a), br = fw_to_rootcoords(b);
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
        if (ar[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (br[j] != 0) s += ar[i] * br[j] * gram(i, j);
    }
    return s;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const { return bourbaki(a, b) / kappa; }

Rat RootSystem::pairing(const Weight& w, const RootCoords& alpha) const {
    if (std::all_of(alpha.begin(), alpha.end(), [](long x) { return x == 0; }))
        throw std::invalid_argument("pairing with alpha = 0");
    Weight af = root_to_fw(alpha);
    return 2 * bourbaki(w, af) / bourbaki(af, af);
}

Weight RootSystem::rho() const { return Weight(rank, Rat(1)); }

Weight RootSystem::fundamental_weight(int i) const {
    Weight w(rank, Rat(0));
    w[i] = 1;
    return w;
}

RootCoords RootSystem::simple_root(int i) const {
    RootCoords r(rank, 0);
    r[i] = 1;
    return r;
}

RootCoords RootSystem::reflect(const RootCoords& gamma, const RootCoords& alpha) const {
    Weight gf = root_to_fw(gamma), af = root_to_fw(alpha);
    Rat k = 2 * bourbaki(gf, af) / bourbaki(af, af);
    if (k.get_den() != 1) throw std::runtime_error("reflection gave non-integral pairing");
    long ki = static_cast<long>(k.get_num().get_si());
    RootCoords out(gamma);
    for (int i = 0; i < rank; ++i) out[i] -= ki * alpha[i];
    return out;
}

Weight RootSystem::reflect_weight(const Weight& w, const RootCoords& alpha) const {
    Rat k = pairing(w, alpha);
    Weight af = root_to_fw(alpha);
    Weight out(w);
    for (int i = 0; i < rank; ++i) out[i] -= k * af[i];
    return out;
}

Weight RootSystem::dot_action(const std::vector<int>& word, const Weight& lambda) const {
    Weight w = lambda;
    Weight r = rho();
    for (int i = 0; i < rank; ++i) w[i] += r[i];
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        w = reflect_weight(w, simple_root(*it));
    for (int i = 0; i < rank; ++i) w[i] -= r[i];
    return w;
}

size_t RootSystem::classical_positive_count(char type, int rank) {
    size_t n = static_cast<size_t>(rank);
    switch (type) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

RootSystem build_root_system(char type_letter, int rank) {
    char t = type_letter;
    int n = rank;
    if (t == 'B' && n == 2) {  // B2 and C2 are the same system; keep one name
        t = 'C';
    }
    bool ok = (t == 'A' && n >= 1) || (t == 'B' && n >= 3) || (t == 'C' && n >= 2) ||
              (t == 'D' && n >= 4) || (t == 'E' && n >= 6 && n <= 8) || (t == 'F' && n == 4) ||
              (t == 'G' && n == 2);
    if (!ok) throw std::invalid_argument(std::string("unsupported type ") + type_letter + std::to_string(rank));

    RootSystem rs;
    rs.type = t;
    rs.rank = n;
    DynkinData dd = dynkin_data(t, n);
    rs.dhalf = dd.dhalf;

    rs.gram = QMat(n, n);
    for (int i = 0; i < n; ++i) rs.gram(i, i) = 2 * dd.dhalf[i];
    for (auto [i, j] : dd.edges) {
        Rat v = -std::max(dd.dhalf[i], dd.dhalf[j]);
        rs.gram(i, j) = v;
        rs.gram(j, i) = v;
    }
    rs.cartan = QMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.cartan(i, j) = rs.gram(i, j) / dd.dhalf[j];

    rs.kappa = *std::max_element(dd.dhalf.begin(), dd.dhalf.end());

    // Enumerate positive roots by closing upward from the simple roots. The
    // alpha-string through gamma gives q = p - <gamma, alpha> further roots up.
    std::vector<RootCoords> byheight;
    for (int i = 0; i < n; ++i) byheight.push_back(rs.simple_root(i));
    std::sort(byheight.begin(), byheight.end());
    std::map<RootCoords, bool> seen;
    for (auto& r : byheight) seen[r] = true;
    std::vector<RootCoords> frontier = byheight;
    std::vector<RootCoords> all = byheight;
    while (!frontier.empty()) {
        std::vector<RootCoords> next;
        for (const auto& g : frontier) {
            for (int i = 0; i < n; ++i) {
                RootCoords down(g);
                long p = 0;
                while (true) {
                    down[i] -= 1;
                    if (!seen.count(down)) break;
                    ++p;
                }
                Weight gf = rs.root_to_fw(g);
                Rat pr = gf[i];  // <g, alpha_i> is the i-th fundamental coordinate
                Rat q = Rat(p) - pr;
                if (q > 0) {
                    RootCoords up(g);
                    up[i] += 1;
                    if (!seen.count(up)) {
                        seen[up] = true;
                        next.push_back(up);
                        all.push_back(up);
                    }
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [&](const RootCoords& a, const RootCoords& b) {
        long ha = std::accumulate(a.begin(), a.end(), 0L);
        long hb = std::accumulate(b.begin(), b.end(), 0L);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.positive = std::move(all);
    for (size_t i = 0; i < rs.positive.size(); ++i) rs.pos_index_[rs.positive[i]] = static_cast<int>(i);

    rs.highest_pos = static_cast<int>(rs.positive.size()) - 1;
    rs.beta_simple = beta_simple_index(t, n);
    rs.beta_pos = rs.positive_index(rs.simple_root(rs.beta_simple));

    // beta must be long, and adjacent to the affine node unless the type-A/C
    // override applies.
    if (rs.dhalf[rs.beta_simple] != rs.kappa)
        throw std::runtime_error("beta is not a long root");
    if (t != 'A' && t != 'C') {
        Rat adj = rs.bourbaki_roots(rs.positive[rs.highest_pos], rs.simple_root(rs.beta_simple));
        if (adj == 0) throw std::runtime_error("beta not linked to the highest root");
    }
    return rs;
}

}  // namespace minw

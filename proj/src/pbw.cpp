#include "minw/pbw.hpp"

#include <stdexcept>

namespace minw {

void el_add(Element& dst, const Element& src, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [m, c] : src) {
        auto it = dst.find(m);
        if (it == dst.end()) {
            Rat v = c * scale;
            if (v != 0) dst.emplace(m, std::move(v));
        } else {
            it->second += c * scale;
            if (it->second == 0) dst.erase(it);
        }
    }
}

Element el_scale(const Element& a, const Rat& c) {
    Element out;
    el_add(out, a, c);
    return out;
}

bool el_eq(const Element& a, const Element& b) { return a == b; }

Element el_sub(const Element& a, const Element& b) {
    Element out = a;
    el_add(out, b, Rat(-1));
    return out;
}

long PbwAlgebra::degree(const Mono& m) const {
    long d = 0;
    for (auto [l, e] : m) d += deg_[l] * e;
    return d;
}

long PbwAlgebra::degree(const Element& e) const {
    long d = -1;
    for (const auto& [m, c] : e) d = std::max(d, degree(m));
    return d;
}

Element PbwAlgebra::word(const std::vector<int>& w) const {
    Element t = unit();
    for (int l : w) t = mul_el_letter(t, l);
    return t;
}

Element PbwAlgebra::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [mb, cb] : b) {
        Element t;
        t.emplace(Mono{}, Rat(1));
        // multiply a by the normal word of mb, letter by letter
        t = a;
        for (auto [l, e] : mb)
            for (int k = 0; k < e; ++k) t = mul_el_letter(t, l);
        el_add(out, t, cb);
    }
    return out;
}

Element PbwAlgebra::mul_el_letter(const Element& a, int g) const {
    Element out;
    for (const auto& [m, c] : a) el_add(out, mul_mono_letter(m, g), c);
    return out;
}

Element PbwAlgebra::append_letter_mono(const Mono& m, int x) const {
    if (m.empty() || m.back().first <= x) {
        Mono out = m;
        if (!out.empty() && out.back().first == x)
            out.back().second += 1;
        else
            out.push_back({x, 1});
        return Element{{std::move(out), Rat(1)}};
    }
    return mul_mono_letter(m, x);
}

Element PbwAlgebra::mul_mono_letter(const Mono& m, int g) const {
    if (m.empty() || m.back().first <= g) {
        Mono out = m;
        if (!out.empty() && out.back().first == g)
            out.back().second += 1;
        else
            out.push_back({g, 1});
        return Element{{std::move(out), Rat(1)}};
    }

    std::vector<int> key;
    key.reserve(2 * m.size() + 1);
    for (auto [l, e] : m) {
        key.push_back(l);
        key.push_back(e);
    }
    key.push_back(~g);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    int x = m.back().first;
    Mono m2 = m;
    if (m2.back().second > 1)
        m2.back().second -= 1;
    else
        m2.pop_back();

    Element out;
    // swap path: (m2 * g) * x
    for (const auto& [mu, c] : mul_mono_letter(m2, g)) el_add(out, append_letter_mono(mu, x), c);
    // correction path: m2 * [x, g]
    for (const auto& [coef, w] : comm_(x, g)) {
        Element t{{m2, Rat(1)}};
        for (int l : w) t = mul_el_letter(t, l);
        el_add(out, t, coef);
    }

    {
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(std::move(key), out);
    }
    return out;
}

void PbwAlgebra::clear_cache() const {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.clear();
}

}  // namespace minw

#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wordrep/numbers.hpp"

namespace wordrep {

enum class Var : int { x = 0, y = 1, z = 2 };

// Multi-degree of the monomial x^i y^j z^k.
struct Degree {
    int x = 0;
    int y = 0;
    int z = 0;
    int operator[](int v) const { return v == 0 ? x : v == 1 ? y : z; }
    int& operator[](int v) { return v == 0 ? x : v == 1 ? y : z; }
    friend bool operator==(const Degree&, const Degree&) = default;
};

// Inclusive per-variable truncation bounds.
struct Caps {
    int x = 0;
    int y = 0;
    int z = 0;
    int operator[](int v) const { return v == 0 ? x : v == 1 ? y : z; }
    int& operator[](int v) { return v == 0 ? x : v == 1 ? y : z; }
    bool contains(const Degree& d) const {
        return 0 <= d.x && d.x <= x && 0 <= d.y && d.y <= y && 0 <= d.z && d.z <= z;
    }
    Caps meet(const Caps& o) const {
        return {std::min(x, o.x), std::min(y, o.y), std::min(z, o.z)};
    }
    friend bool operator==(const Caps&, const Caps&) = default;
};

// A power series in x, y, z over the rationals, truncated to a per-variable
// degree box.  Coefficients beyond the box are dropped, so all arithmetic is
// exact modulo the ideal (x^{cx+1}, y^{cy+1}, z^{cz+1}).  Binary operations
// accept operands with different boxes and truncate to the meet.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Caps caps)
        : caps_(caps), coeff_(std::size_t(caps.x + 1) * (caps.y + 1) * (caps.z + 1)) {
        assert(caps.x >= 0 && caps.y >= 0 && caps.z >= 0);
    }

    static TruncatedSeries constant(const Rational& value, Caps caps) {
        TruncatedSeries s(caps);
        s.coeff_[0] = value;
        return s;
    }

    static TruncatedSeries monomial(const Rational& value, Degree d, Caps caps) {
        return from_terms({{d, value}}, caps);
    }

    static TruncatedSeries from_terms(const std::vector<std::pair<Degree, Rational>>& terms,
                                      Caps caps) {
        TruncatedSeries s(caps);
        for (const auto& [d, v] : terms) {
            if (!caps.contains(d))
                throw std::out_of_range("TruncatedSeries: term degree outside the caps");
            s.coeff_[s.index(d)] += v;
        }
        return s;
    }

    const Caps& caps() const { return caps_; }

    const Rational& coeff(const Degree& d) const {
        if (!caps_.contains(d))
            throw std::out_of_range("TruncatedSeries: coefficient degree outside the caps");
        return coeff_[index(d)];
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        return combined(o, [](Rational& a, const Rational& b) { a += b; });
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const {
        return combined(o, [](Rational& a, const Rational& b) { a -= b; });
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        TruncatedSeries out(caps_.meet(o.caps_));
        Degree a, b;
        for (a.x = 0; a.x <= out.caps_.x; ++a.x)
            for (a.y = 0; a.y <= out.caps_.y; ++a.y)
                for (a.z = 0; a.z <= out.caps_.z; ++a.z) {
                    const Rational& ca = coeff_[index(a)];
                    if (ca.is_zero()) continue;
                    for (b.x = 0; a.x + b.x <= out.caps_.x; ++b.x)
                        for (b.y = 0; a.y + b.y <= out.caps_.y; ++b.y)
                            for (b.z = 0; a.z + b.z <= out.caps_.z; ++b.z) {
                                const Rational& cb = o.coeff_[o.index(b)];
                                if (cb.is_zero()) continue;
                                out.coeff_[out.index({a.x + b.x, a.y + b.y, a.z + b.z})] +=
                                    ca * cb;
                            }
                }
        return out;
    }

    TruncatedSeries scaled(const Rational& factor) const {
        TruncatedSeries out(caps_);
        for (std::size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = coeff_[i] * factor;
        return out;
    }

    // exp of a series with zero constant term, variable by variable: writing
    // f = sum_k f_k v^k with v-free slices f_k, the exponential g satisfies
    // g_0 = exp(f_0) and k g_k = sum_{i=1..k} i f_i g_{k-i}, which needs no
    // divisions beyond the leading k.
    TruncatedSeries exp() const {
        if (!coeff_[0].is_zero())
            throw std::domain_error("TruncatedSeries::exp: nonzero constant term " +
                                    coeff_[0].str());
        return exp_over(0);
    }

    // Derivative in v; the cap of v drops by one (not below zero).
    TruncatedSeries derivative(Var v) const {
        const int vi = static_cast<int>(v);
        Caps caps = caps_;
        caps[vi] = std::max(0, caps[vi] - 1);
        TruncatedSeries out(caps);
        Degree d;
        for (d.x = 0; d.x <= caps.x; ++d.x)
            for (d.y = 0; d.y <= caps.y; ++d.y)
                for (d.z = 0; d.z <= caps.z; ++d.z) {
                    Degree up = d;
                    up[vi] += 1;
                    if (caps_.contains(up))
                        out.coeff_[out.index(d)] = Rational(up[vi]) * coeff_[index(up)];
                }
        return out;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::size_t index(const Degree& d) const {
        return (std::size_t(d.x) * (caps_.y + 1) + d.y) * (caps_.z + 1) + d.z;
    }

    template <class Fold>
    TruncatedSeries combined(const TruncatedSeries& o, Fold fold) const {
        TruncatedSeries out(caps_.meet(o.caps_));
        Degree d;
        for (d.x = 0; d.x <= out.caps_.x; ++d.x)
            for (d.y = 0; d.y <= out.caps_.y; ++d.y)
                for (d.z = 0; d.z <= out.caps_.z; ++d.z) {
                    std::size_t i = out.index(d);
                    out.coeff_[i] = coeff_[index(d)];
                    fold(out.coeff_[i], o.coeff_[o.index(d)]);
                }
        return out;
    }

    // v-free slice: the coefficient of v^k, as a series with cap 0 in v.
    TruncatedSeries slice(int vi, int k) const {
        Caps caps = caps_;
        caps[vi] = 0;
        TruncatedSeries out(caps);
        Degree d;
        for (d.x = 0; d.x <= caps.x; ++d.x)
            for (d.y = 0; d.y <= caps.y; ++d.y)
                for (d.z = 0; d.z <= caps.z; ++d.z) {
                    Degree src = d;
                    src[vi] = k;
                    out.coeff_[out.index(d)] = coeff_[index(src)];
                }
        return out;
    }

    TruncatedSeries exp_over(int vi) const {
        if (vi == 3) {
            // no variables left: only the constant term remains, and it is 0
            assert(coeff_[0].is_zero());
            return constant(1, caps_);
        }
        const int top = caps_[vi];
        if (top == 0) return exp_over(vi + 1);
        std::vector<TruncatedSeries> f, g;
        for (int k = 0; k <= top; ++k) f.push_back(slice(vi, k));
        g.push_back(f[0].exp_over(vi + 1));
        for (int k = 1; k <= top; ++k) {
            TruncatedSeries acc(f[0].caps());
            for (int i = 1; i <= k; ++i) acc = acc + (f[i] * g[k - i]).scaled(i);
            g.push_back(acc.scaled(Rational(1, k)));
        }
        TruncatedSeries out(caps_);
        Degree d;
        for (int k = 0; k <= top; ++k)
            for (d.x = 0; d.x <= g[k].caps_.x; ++d.x)
                for (d.y = 0; d.y <= g[k].caps_.y; ++d.y)
                    for (d.z = 0; d.z <= g[k].caps_.z; ++d.z) {
                        Degree dst = d;
                        dst[vi] = k;
                        out.coeff_[out.index(dst)] = g[k].coeff_[g[k].index(d)];
                    }
        return out;
    }

    Caps caps_;
    std::vector<Rational> coeff_;
};

}  // namespace wordrep

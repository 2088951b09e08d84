// Univariate polynomial helpers: gcd, squarefree part, exact root extraction.
#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "cmtilt/field.hpp"

namespace cmtilt {

// Polynomials are coefficient vectors in ascending degree, normalized so the
// leading coefficient is nonzero (empty vector = zero polynomial).
template <class F>
using Poly = std::vector<typename F::Elt>;

template <class F>
Poly<F> poly_trim(const F& K, Poly<F> p) {
    while (!p.empty() && K.is_zero(p.back())) p.pop_back();
    return p;
}

template <class T>
int poly_deg(const std::vector<T>& p) { return static_cast<int>(p.size()) - 1; }

template <class F>
Poly<F> poly_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
    return poly_trim(K, r);
}

template <class F>
Poly<F> poly_scale(const F& K, const Poly<F>& a, const typename F::Elt& c) {
    Poly<F> r = a;
    for (auto& x : r) x = K.mul(x, c);
    return poly_trim(K, r);
}

template <class F>
Poly<F> poly_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    return poly_trim(K, r);
}

/// Quotient and remainder of a by b (b nonzero).
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& K, Poly<F> a, const Poly<F>& b) {
    Poly<F> q;
    if (b.empty()) throw std::domain_error("poly division by zero");
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, K.zero());
    auto linv = K.inv(b.back());
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        if (K.is_zero(a[i])) continue;
        auto f = K.mul(a[i], linv);
        q[i - (b.size() - 1)] = f;
        for (size_t j = 0; j < b.size(); ++j)
            a[i - (b.size() - 1) + j] = K.sub(a[i - (b.size() - 1) + j], K.mul(f, b[j]));
    }
    return {poly_trim(K, q), poly_trim(K, a)};
}

template <class F>
Poly<F> poly_mod(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(K, a, b).second;
}

template <class F>
Poly<F> poly_monic(const F& K, Poly<F> p) {
    if (p.empty()) return p;
    auto li = K.inv(p.back());
    for (auto& x : p) x = K.mul(x, li);
    return p;
}

template <class F>
Poly<F> poly_gcd(const F& K, Poly<F> a, Poly<F> b) {
    a = poly_trim(K, a);
    b = poly_trim(K, b);
    while (!b.empty()) {
        auto r = poly_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(K, a);
}

template <class F>
Poly<F> poly_derivative(const F& K, const Poly<F>& p) {
    Poly<F> r;
    for (size_t i = 1; i < p.size(); ++i) {
        auto c = K.mul(p[i], K.from_int(static_cast<long>(i)));
        r.push_back(c);
    }
    return poly_trim(K, r);
}

template <class F>
typename F::Elt poly_eval(const F& K, const Poly<F>& p, const typename F::Elt& x) {
    auto r = K.zero();
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = K.add(K.mul(r, x), p[i]);
    return r;
}

template <class F>
Poly<F> poly_squarefree(const F& K, const Poly<F>& p) {
    auto d = poly_derivative(K, p);
    if (d.empty()) return poly_monic(K, p);  // constant or char-p degenerate; callers guard
    auto g = poly_gcd(K, p, d);
    if (poly_deg(g) <= 0) return poly_monic(K, p);
    return poly_monic(K, poly_divmod(K, p, g).first);
}

// ---------------------------------------------------------------------------
// Rational root extraction over Q, exact, via Sturm isolation plus
// minimal-denominator search (Stern-Brocot) in each isolating interval.
// ---------------------------------------------------------------------------

namespace detail {

using Q = RationalField::Elt;
using Z = boost::multiprecision::mpz_int;

inline int sign_of(const Q& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline int sturm_changes(const RationalField& K, const std::vector<Poly<RationalField>>& chain,
                         const Q& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_of(poly_eval(K, p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

inline Z floor_q(const Q& x) {
    Z f = Z(numerator(x) / denominator(x));
    if (x < 0 && numerator(x) % denominator(x) != 0) f -= 1;
    return f;
}

/// The rational with smallest denominator in the closed interval [lo, hi]
/// (Stern-Brocot / continued-fraction walk).
inline Q simplest_in(Q lo, Q hi) {
    if (lo > hi) throw std::logic_error("empty interval");
    Q int_part(0);
    Q result(0);
    // iterative continued-fraction expansion
    std::vector<Z> cf;
    while (true) {
        Z f = floor_q(lo);
        Q fq(f);
        // is there an integer in [lo, hi]?
        Z cand = f;
        if (fq < lo) cand += 1;
        if (Q(cand) <= hi) {
            cf.push_back(cand);
            break;
        }
        cf.push_back(f);
        // recurse on reciprocals of fractional parts, interval flips
        Q nlo = Q(1) / (hi - fq);
        Q nhi = Q(1) / (lo - fq);
        lo = nlo;
        hi = nhi;
    }
    // fold the continued fraction back up
    Q r(cf.back());
    for (int i = static_cast<int>(cf.size()) - 2; i >= 0; --i) r = Q(cf[i]) + Q(1) / r;
    return r;
}

}  // namespace detail

/// All rational roots of p, each exactly verified; p need not be squarefree.
inline std::vector<RationalField::Elt> rational_roots(const RationalField& K,
                                                      const Poly<RationalField>& p_in) {
    using Q = RationalField::Elt;
    using Z = detail::Z;
    std::vector<Q> roots;
    auto p = poly_squarefree(K, poly_trim(K, p_in));
    if (poly_deg(p) <= 0) return roots;
    if (poly_deg(p) == 1) {
        roots.push_back(K.div(K.neg(p[0]), p[1]));
        return roots;
    }
    // clear denominators to get integer coefficients
    Z den_lcm = 1;
    for (const auto& c : p) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    std::vector<Z> ic(p.size());
    for (size_t i = 0; i < p.size(); ++i) ic[i] = Z(numerator(p[i]) * (den_lcm / denominator(p[i])));
    Z lead = boost::multiprecision::abs(ic.back());
    // strip zero roots
    size_t lowz = 0;
    while (lowz < ic.size() && ic[lowz] == 0) ++lowz;
    if (lowz > 0) {
        roots.push_back(Q(0));
        Poly<RationalField> q(p.begin() + lowz, p.end());
        for (const auto& r : rational_roots(K, q)) roots.push_back(r);
        return roots;
    }
    // Cauchy bound
    Q bound(1);
    for (size_t i = 0; i + 1 < ic.size(); ++i) {
        Q c = Q(boost::multiprecision::abs(ic[i])) / Q(lead);
        if (c > bound - 1) bound = c + 1;
    }
    // Sturm chain
    std::vector<Poly<RationalField>> chain;
    chain.push_back(p);
    chain.push_back(poly_derivative(K, p));
    while (!chain.back().empty() && poly_deg(chain.back()) > 0) {
        auto r = poly_mod(K, chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& x : r) x = K.neg(x);
        chain.push_back(r);
    }
    // denominators of rational roots divide the leading coefficient
    Q min_gap = Q(1) / Q(2 * lead * lead);
    std::function<void(Q, Q, int, int)> isolate = [&](Q lo, Q hi, int vlo, int vhi) {
        int n_roots = vlo - vhi;
        if (n_roots == 0) return;
        if (n_roots == 1 && hi - lo < min_gap) {
            // at most one rational with denominator <= lead in interval
            Q cand = detail::simplest_in(lo, hi);
            if (denominator(cand) <= lead && poly_eval(K, p, cand) == 0) roots.push_back(cand);
            return;
        }
        Q mid = (lo + hi) / 2;
        if (poly_eval(K, p, mid) == 0) {
            roots.push_back(mid);
            // deflate interval around mid slightly to separate remaining roots
            Q eps = min_gap / 4;
            int vml = detail::sturm_changes(K, chain, mid - eps);
            int vmr = detail::sturm_changes(K, chain, mid + eps);
            isolate(lo, mid - eps, vlo, vml);
            isolate(mid + eps, hi, vmr, vhi);
            return;
        }
        int vm = detail::sturm_changes(K, chain, mid);
        isolate(lo, mid, vlo, vm);
        isolate(mid, hi, vm, vhi);
    };
    Q lo = -bound - 1, hi = bound + 1;
    isolate(lo, hi, detail::sturm_changes(K, chain, lo), detail::sturm_changes(K, chain, hi));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// All roots in GF(p) of a polynomial over GF(p), seeded equal-degree split.
inline std::vector<PrimeField::Elt> prime_field_roots(const PrimeField& K,
                                                      const Poly<PrimeField>& p_in, Rng& rng) {
    std::vector<PrimeField::Elt> roots;
    auto f = poly_monic(K, poly_trim(K, p_in));
    if (poly_deg(f) <= 0) return roots;
    // strip zero root
    if (K.is_zero(f[0])) {
        roots.push_back(0);
        size_t lowz = 0;
        while (lowz < f.size() && K.is_zero(f[lowz])) ++lowz;
        f.erase(f.begin(), f.begin() + lowz);
        if (poly_deg(f) <= 0) return roots;
    }
    // g = gcd(f, t^p - t): product of (t - root) over distinct roots
    // compute t^p mod f by repeated squaring
    Poly<PrimeField> t = {K.zero(), K.one()};
    Poly<PrimeField> acc = {K.one()};
    Poly<PrimeField> base = poly_mod(K, t, f);
    if (base.empty() && f.size() == 2) base = {};  // f = t handled above
    auto e = K.p;
    Poly<PrimeField> b = base;
    while (e) {
        if (e & 1) acc = poly_mod(K, poly_mul(K, acc, b), f);
        b = poly_mod(K, poly_mul(K, b, b), f);
        e >>= 1;
    }
    // acc = t^p mod f; subtract t
    Poly<PrimeField> tp_minus_t = poly_add(K, acc, poly_scale(K, t, K.neg(K.one())));
    auto g = poly_gcd(K, f, tp_minus_t);
    if (poly_deg(g) <= 0) return roots;
    if (K.p <= 4096) {
        for (PrimeField::Elt c = 0; c < K.p; ++c)
            if (K.is_zero(poly_eval(K, g, c))) roots.push_back(c);
        return roots;
    }
    // Cantor-Zassenhaus split into linear factors
    std::function<void(Poly<PrimeField>)> split = [&](Poly<PrimeField> h) {
        h = poly_monic(K, h);
        if (poly_deg(h) == 0) return;
        if (poly_deg(h) == 1) {
            roots.push_back(K.neg(h[0]));
            return;
        }
        while (true) {
            std::uniform_int_distribution<std::uint64_t> d(0, K.p - 1);
            PrimeField::Elt c = d(rng);
            // (t + c)^((p-1)/2) - 1 mod h
            Poly<PrimeField> lin = {c, K.one()};
            Poly<PrimeField> r = {K.one()};
            auto ex = (K.p - 1) / 2;
            Poly<PrimeField> bb = poly_mod(K, lin, h);
            while (ex) {
                if (ex & 1) r = poly_mod(K, poly_mul(K, r, bb), h);
                bb = poly_mod(K, poly_mul(K, bb, bb), h);
                ex >>= 1;
            }
            r = poly_add(K, r, Poly<PrimeField>{K.neg(K.one())});
            auto g1 = poly_gcd(K, h, r);
            if (poly_deg(g1) > 0 && poly_deg(g1) < poly_deg(h)) {
                split(g1);
                split(poly_divmod(K, h, g1).first);
                return;
            }
        }
    };
    split(g);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace cmtilt

#ifndef MACJACK_XRAT_HPP
#define MACJACK_XRAT_HPP

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace macjack {

namespace detail {

inline int cmp(const Rat& a, const Rat& b) { return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()); }

inline int cmp(const PExp& a, const PExp& b) {
    for (int i = 0; i < kMaxParamVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

inline int cmp(const ParamPoly& a, const ParamPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (int c = cmp(ia->first, ib->first)) return c;
        if (int c = cmp(ia->second, ib->second)) return c;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

inline int cmp(const RatFunc& a, const RatFunc& b) {
    if (int c = cmp(a.num(), b.num())) return c;
    return cmp(a.den(), b.den());
}

inline int cmp(const XExp& a, const XExp& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

inline int cmp(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (int c = cmp(ia->first, ib->first)) return c;
        if (int c = cmp(ia->second, ib->second)) return c;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

struct LaurentLess {
    bool operator()(const LaurentPoly& a, const LaurentPoly& b) const { return cmp(a, b) < 0; }
};

}  // namespace detail

/**
 * Rational function of x over the parameter field, kept as a Laurent
 * numerator and a multiset of denominator factors.  Factors stay in a
 * canonical shape (exponents shifted to the nonnegative orthant, leading
 * coefficient one, at least two terms), so common factors across terms can
 * be recognized without a full gcd: reduction is trial division of the
 * numerator by each factor, which is all the Demazure-Lusztig machinery
 * ever needs.
 */
class XRat {
public:
    XRat() = default;
    explicit XRat(LaurentPoly num) : num_(std::move(num)) {}
    explicit XRat(int n) : num_(LaurentPoly(n)) {}

    static XRat constant(int n, const RatFunc& c) { return XRat(LaurentPoly::constant(n, c)); }

    static XRat quotient(LaurentPoly num, const LaurentPoly& den) {
        XRat r(std::move(num));
        r.divide_by_poly(den);
        return r;
    }

    const LaurentPoly& num() const { return num_; }
    const std::vector<LaurentPoly>& den_factors() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    // The canonical split F = c * x^s * G of a factor, G canonical.
    struct Canonical {
        LaurentPoly factor;  // G
        RatFunc coeff;       // c
        XExp shift;          // s
        bool unit = false;   // true when F was a single term (G == 1)
    };

    static Canonical canonicalize_factor(const LaurentPoly& f) {
        if (f.is_zero()) throw arithmetic_error("zero denominator factor");
        size_t n = static_cast<size_t>(f.nvars());
        Canonical c;
        c.shift.assign(n, 0);
        bool first = true;
        for (const auto& [e, coeff] : f.terms()) {
            for (size_t i = 0; i < n; ++i)
                c.shift[i] = first ? e[i] : std::min(c.shift[i], e[i]);
            first = false;
        }
        LaurentPoly g(f.nvars());
        for (const auto& [e, coeff] : f.terms()) {
            XExp d(n);
            for (size_t i = 0; i < n; ++i) d[i] = e[i] - c.shift[i];
            g.add_term(d, coeff);
        }
        c.coeff = g.terms().rbegin()->second;
        if (!c.coeff.is_one()) g.scale(c.coeff.inverse());
        if (g.num_terms() == 1) {
            c.unit = true;
            c.factor = LaurentPoly(f.nvars());
        } else {
            c.factor = std::move(g);
        }
        return c;
    }

    void divide_by_poly(const LaurentPoly& den) {
        Canonical c = canonicalize_factor(den);
        XExp neg(c.shift.size());
        for (size_t i = 0; i < c.shift.size(); ++i) neg[i] = -c.shift[i];
        num_ = num_.times_monomial(neg, c.coeff.inverse());
        if (!c.unit) {
            den_.push_back(std::move(c.factor));
            std::sort(den_.begin(), den_.end(), detail::LaurentLess{});
            reduce();
        }
    }

    friend XRat operator*(const XRat& a, const XRat& b) {
        XRat r(a.num_ * b.num_);
        if (r.num_.is_zero()) return r;
        r.den_ = a.den_;
        r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
        std::sort(r.den_.begin(), r.den_.end(), detail::LaurentLess{});
        r.reduce();
        return r;
    }
    XRat& operator*=(const XRat& o) { return *this = *this * o; }

    XRat times_poly(const LaurentPoly& p) const {
        XRat r(num_ * p);
        if (r.num_.is_zero()) return r;
        r.den_ = den_;
        r.reduce();
        return r;
    }

    XRat& scale(const RatFunc& c) {
        num_.scale(c);
        if (num_.is_zero()) den_.clear();
        return *this;
    }

    XRat inverse() const {
        if (is_zero()) throw arithmetic_error("inverse of zero rational function in x");
        XRat r(LaurentPoly::one(num_.nvars()));
        for (const auto& f : den_) r.num_ *= f;
        r.divide_by_poly(num_);
        return r;
    }

    friend XRat operator/(const XRat& a, const XRat& b) { return a * b.inverse(); }

    friend XRat operator-(const XRat& a) {
        XRat r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend XRat operator+(const XRat& a, const XRat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // lcm of the denominator multisets
        std::vector<LaurentPoly> lcm, extra_a, extra_b;
        auto ia = a.den_.begin(), ib = b.den_.begin();
        while (ia != a.den_.end() || ib != b.den_.end()) {
            if (ib == b.den_.end()) {
                lcm.push_back(*ia);
                extra_b.push_back(*ia++);
            } else if (ia == a.den_.end()) {
                lcm.push_back(*ib);
                extra_a.push_back(*ib++);
            } else {
                int c = detail::cmp(*ia, *ib);
                if (c == 0) {
                    lcm.push_back(*ia);
                    ++ia;
                    ++ib;
                } else if (c < 0) {
                    lcm.push_back(*ia);
                    extra_b.push_back(*ia++);
                } else {
                    lcm.push_back(*ib);
                    extra_a.push_back(*ib++);
                }
            }
        }
        LaurentPoly na = a.num_, nb = b.num_;
        for (const auto& f : extra_a) na *= f;
        for (const auto& f : extra_b) nb *= f;
        XRat r(na + nb);
        if (!r.num_.is_zero()) {
            r.den_ = std::move(lcm);
            r.reduce();
        }
        return r;
    }
    friend XRat operator-(const XRat& a, const XRat& b) { return a + (-b); }
    XRat& operator+=(const XRat& o) { return *this = *this + o; }
    XRat& operator-=(const XRat& o) { return *this = *this - o; }

    bool equals(const XRat& o) const {
        LaurentPoly lhs = num_, rhs = o.num_;
        for (const auto& f : o.den_) lhs *= f;
        for (const auto& f : den_) rhs *= f;
        return lhs == rhs;
    }

    // Rebuilds through an arbitrary Laurent map (Weyl/affine action or a
    // coefficient substitution).  Factors are re-canonicalized; factors that
    // collapse to units are absorbed into the numerator.
    XRat transform(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const {
        XRat r(fn(num_));
        if (r.num_.is_zero()) return r;
        for (const auto& f : den_) {
            LaurentPoly g = fn(f);
            if (g.is_zero())
                throw singular_specialization_error("denominator factor vanished under substitution");
            r.divide_by_poly(g);
        }
        return r;
    }

    // Exact Laurent value; throws when the function is not polynomial.
    LaurentPoly to_laurent() const {
        if (!den_.empty())
            throw divisibility_error("rational function of x did not clear its denominator");
        return num_;
    }

    LaurentPoly denominator() const {
        LaurentPoly d = LaurentPoly::one(num_.nvars());
        for (const auto& f : den_) d *= f;
        return d;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        std::vector<LaurentPoly> rest;
        for (const auto& f : den_) {
            bool keep = true;
            while (keep) {
                auto q = LaurentPoly::try_divide(num_, f);
                if (!q) break;
                num_ = std::move(*q);
                keep = false;
            }
            if (keep) rest.push_back(f);
        }
        den_ = std::move(rest);
    }

    LaurentPoly num_;
    std::vector<LaurentPoly> den_;
};

}  // namespace macjack

#endif

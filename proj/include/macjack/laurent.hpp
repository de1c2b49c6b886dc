#ifndef MACJACK_LAURENT_HPP
#define MACJACK_LAURENT_HPP

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ratfunc.hpp"
#include "rootdata.hpp"

namespace macjack {

// Term order on exponent vectors: graded lexicographic.  Only used to drive
// the division loop and to print deterministically; no mathematical meaning
// is attached to it.
struct XGrlexLess {
    bool operator()(const XExp& a, const XExp& b) const {
        long da = 0, db = 0;
        for (int v : a) da += v;
        for (int v : b) db += v;
        if (da != db) return da < db;
        return a < b;
    }
};

/**
 * Laurent polynomial in x_1..x_n with RatFunc coefficients.  Exponent
 * vectors live on the half-coweight lattice: an entry e[i] stands for the
 * exponent e[i]/2 of x_i (D_x = 2 throughout).  No stored coefficient is
 * zero.
 */
class LaurentPoly {
public:
    using TermMap = std::map<XExp, RatFunc, XGrlexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(int n) : n_(n) {}

    static LaurentPoly constant(int n, RatFunc c) {
        LaurentPoly p(n);
        if (!c.is_zero()) p.terms_.emplace(XExp(static_cast<size_t>(n), 0), std::move(c));
        return p;
    }
    static LaurentPoly one(int n) { return constant(n, RatFunc(Rat(1))); }

    static LaurentPoly monomial(RatFunc c, const XExp& e) {
        LaurentPoly p(static_cast<int>(e.size()));
        if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
        return p;
    }
    // x_b for a lattice weight b.
    static LaurentPoly x_weight(const Weight& b) {
        return monomial(RatFunc(Rat(1)), xexp_of_weight(b));
    }

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    const RatFunc& coeff(const XExp& e) const {
        static const RatFunc zero;
        auto it = terms_.find(e);
        return it == terms_.end() ? zero : it->second;
    }

    RatFunc constant_term() const { return coeff(XExp(static_cast<size_t>(n_), 0)); }

    void add_term(const XExp& e, const RatFunc& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.n_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                XExp e(ea.size());
                for (size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& scale(const RatFunc& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, coeff] : terms_) coeff *= c;
        return *this;
    }
    friend LaurentPoly operator*(const RatFunc& c, LaurentPoly p) { return p.scale(c); }

    LaurentPoly times_monomial(const XExp& shift, const RatFunc& c) const {
        LaurentPoly r(n_);
        for (const auto& [e, coeff] : terms_) {
            XExp f(e.size());
            for (size_t i = 0; i < e.size(); ++i) f[i] = e[i] + shift[i];
            r.add_term(f, coeff * c);
        }
        return r;
    }

    LaurentPoly pow(int k) const {
        if (k < 0) throw arithmetic_error("negative Laurent power; invert explicitly");
        LaurentPoly acc = one(n_), base = *this;
        while (k) {
            if (k & 1) acc *= base;
            if (k >>= 1) base *= base;
        }
        return acc;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // ---- exact division ------------------------------------------------------

    static std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g) {
        if (g.is_zero()) throw arithmetic_error("division by zero Laurent polynomial");
        if (f.is_zero()) return LaurentPoly(f.n_);
        size_t n = static_cast<size_t>(f.n_);
        // Shift both factors onto the nonnegative orthant.
        XExp sf(n, 0), sg(n, 0);
        auto min_exps = [n](const LaurentPoly& p, XExp& s) {
            bool first = true;
            for (const auto& [e, c] : p.terms()) {
                for (size_t i = 0; i < n; ++i) s[i] = first ? e[i] : std::min(s[i], e[i]);
                first = false;
            }
        };
        min_exps(f, sf);
        min_exps(g, sg);
        LaurentPoly rem(f.n_), gg(g.n_);
        for (const auto& [e, c] : f.terms()) {
            XExp d(n);
            for (size_t i = 0; i < n; ++i) d[i] = e[i] - sf[i];
            rem.terms_.emplace(d, c);
        }
        for (const auto& [e, c] : g.terms()) {
            XExp d(n);
            for (size_t i = 0; i < n; ++i) d[i] = e[i] - sg[i];
            gg.terms_.emplace(d, c);
        }
        const XExp& ge = gg.terms_.rbegin()->first;
        const RatFunc& gc = gg.terms_.rbegin()->second;
        LaurentPoly quot(f.n_);
        while (!rem.is_zero()) {
            const XExp& fe = rem.terms_.rbegin()->first;
            XExp qe(n);
            for (size_t i = 0; i < n; ++i) {
                qe[i] = fe[i] - ge[i];
                if (qe[i] < 0) return std::nullopt;
            }
            RatFunc qc = rem.terms_.rbegin()->second / gc;
            quot.add_term(qe, qc);
            rem -= gg.times_monomial(qe, qc);
        }
        // Undo the shifts: result = quot * x^{sf - sg}.
        XExp back(n);
        for (size_t i = 0; i < n; ++i) back[i] = sf[i] - sg[i];
        return quot.times_monomial(back, RatFunc(Rat(1)));
    }

    static LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
        auto q = try_divide(f, g);
        if (!q)
            throw divisibility_error(
                "Laurent division is not exact; an operator invariant is broken upstream");
        return *q;
    }

    // ---- involutions and substitutions ----------------------------------------

    // x_b -> x_{-b}, q -> q^{-1}, t -> t^{-1}.
    LaurentPoly star(const ParamSymbols& sym) const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) {
            XExp f(e.size());
            for (size_t i = 0; i < e.size(); ++i) f[i] = -e[i];
            r.add_term(f, c.bar(sym));
        }
        return r;
    }

    LaurentPoly map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

    // ---- group actions ---------------------------------------------------------

    LaurentPoly weyl_apply(const RootSystem& sys, int w) const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) r.add_term(sys.weyl_act_x(w, e), c);
        return r;
    }

    // Extended affine action; shifts contribute q-powers per monomial.
    LaurentPoly affine_apply(const RootSystem& sys, const ExtAffine& g,
                             const ParamSymbols& sym) const {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) {
            auto [f, qpow] = sys.aff_act_xexp(g, e);
            r.add_term(f, c.times_q_power(sym, qpow));
        }
        return r;
    }

    std::string to_string(const ParamSymbols& sym) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "[" << c.to_string(sym) << "]*x^(";
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) os << ",";
                Rat ex(e[i], kDx);
                ex.canonicalize();
                os << ex.get_str();
            }
            os << ")";
        }
        return os.str();
    }

private:
    int n_ = 0;
    TermMap terms_;
};

}  // namespace macjack

#endif

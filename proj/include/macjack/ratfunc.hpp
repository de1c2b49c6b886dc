#ifndef MACJACK_RATFUNC_HPP
#define MACJACK_RATFUNC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "parampoly.hpp"
#include "params.hpp"
#include "rational.hpp"

namespace macjack {

/**
 * Normalized quotient of two parameter polynomials: the coefficient field
 * C(q,t) (and C(k) on the Jack side).
 *
 * Canonical form: gcd(num, den) = 1, the denominator's first coefficient
 * under the fixed monomial order is +1, zero is 0/1.  Construction always
 * normalizes, so two equal values compare equal componentwise.
 */
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    explicit RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    explicit RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}

    RatFunc(ParamPoly num, ParamPoly den) { normalize(std::move(num), std::move(den)); }
    explicit RatFunc(ParamPoly num) : num_(std::move(num)), den_(Rat(1)) {}

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rat constant_value() const {
        if (!is_constant()) throw arithmetic_error("rational function is not a constant");
        return num_.constant_value();
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) return a;
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_one()) return b;
        if (b.is_one()) return a;
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw arithmetic_error("division by zero rational function");
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw arithmetic_error("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        RatFunc acc(Rat(1)), base = *this;
        while (n) {
            if (n & 1) acc *= base;
            if (n >>= 1) base *= base;
        }
        return acc;
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // ---- symbol-level maps --------------------------------------------------

    // The formal conjugation q -> q^{-1}, t_nu -> t_nu^{-1}.  Together with
    // exponent negation on the x side this is the star involution; alone it
    // is the reality check for Macdonald coefficients.  Jack symbols K are
    // untouched.
    RatFunc bar(const ParamSymbols& sym) const {
        int nu_vars = 1 + sym.num_lengths();  // V and the U block
        PExp m = zero_pexp();
        auto track = [&](const ParamPoly& p) {
            for (const auto& [e, c] : p.terms())
                for (int v = 0; v < nu_vars; ++v) m[v] = std::max(m[v], e[v]);
        };
        track(num_);
        track(den_);
        auto flip = [&](const ParamPoly& p) {
            ParamPoly r;
            for (const auto& [e, c] : p.terms()) {
                PExp f = e;
                for (int v = 0; v < nu_vars; ++v) f[v] = static_cast<int16_t>(m[v] - e[v]);
                r.add_term(f, c);
            }
            return r;
        };
        return RatFunc(flip(num_), flip(den_));
    }

    // The parameter half of the iota twist: t_nu^{1/2} -> -t_nu^{-1/2} for
    // every length, q and x untouched.
    RatFunc iota_t(const ParamSymbols& sym) const {
        PExp m = zero_pexp();
        auto track = [&](const ParamPoly& p) {
            for (const auto& [e, c] : p.terms())
                for (int i = 0; i < sym.num_lengths(); ++i) {
                    int v = sym.var_U(i);
                    m[v] = std::max(m[v], e[v]);
                }
        };
        track(num_);
        track(den_);
        auto flip = [&](const ParamPoly& p) {
            ParamPoly r;
            for (const auto& [e, c] : p.terms()) {
                PExp f = e;
                Rat coeff = c;
                for (int i = 0; i < sym.num_lengths(); ++i) {
                    int v = sym.var_U(i);
                    if (e[v] % 2 != 0) coeff = -coeff;
                    f[v] = static_cast<int16_t>(m[v] - e[v]);
                }
                r.add_term(f, coeff);
            }
            return r;
        };
        return RatFunc(flip(num_), flip(den_));
    }

    // Multiplication by the monomial q^e (e rational, checked against D_q).
    RatFunc times_q_power(const ParamSymbols& sym, const Rat& e) const {
        long ve = sym.v_exponent_of_q_power(e);
        PExp mono = zero_pexp();
        mono[sym.var_V()] = static_cast<int16_t>(ve < 0 ? -ve : ve);
        ParamPoly m = ParamPoly::monomial(Rat(1), mono);
        if (ve >= 0) return RatFunc(num_ * m, den_);
        return RatFunc(num_, den_ * m);
    }

    // One specialization step per root length: t_nu^{1/2} |-> eps * q^{k/2}.
    struct TSpec {
        Rat k;        // t_nu = q_nu^{k_nu} is handled by the caller; here the
                      // assignment is stated directly as a power of q
        int eps = 1;  // sign of the square root
    };

    // Applies U_i |-> eps_i V^{g_i} for every length; g_i = D_q * (exponent of
    // q in t^{1/2}).  Throws singular_specialization_error when the
    // denominator vanishes identically.
    RatFunc specialize_t(const ParamSymbols& sym, const std::vector<std::pair<int, long>>& u_to_v,
                         const std::vector<int>& eps) const {
        long shift_n = 0, shift_d = 0;
        ParamPoly n = subst_u(sym, num_, u_to_v, eps, shift_n);
        ParamPoly d = subst_u(sym, den_, u_to_v, eps, shift_d);
        if (d.is_zero())
            throw singular_specialization_error("denominator vanishes under t-specialization: " +
                                                den_.to_string(sym));
        // actual value: n * V^{shift_n} / (d * V^{shift_d})
        long rel = shift_n - shift_d;
        PExp mono = zero_pexp();
        mono[sym.var_V()] = static_cast<int16_t>(rel < 0 ? -rel : rel);
        ParamPoly m = ParamPoly::monomial(Rat(1), mono);
        if (rel >= 0) return RatFunc(n * m, d);
        return RatFunc(n, d * m);
    }

    // The multiplicative shift t_nu -> t_nu q^{2 g_nu / D_q}: every U_i picks
    // up a factor V^{g_i} but stays formal.  Exponents stay nonnegative.
    RatFunc shift_t_by_q(const ParamSymbols& sym,
                         const std::vector<std::pair<int, long>>& u_to_v) const {
        auto mapper = [&](const ParamPoly& p) {
            ParamPoly r;
            for (const auto& [e, c] : p.terms()) {
                PExp f = e;
                long ve = e[sym.var_V()];
                for (const auto& [uv, g] : u_to_v) ve += static_cast<long>(e[uv]) * g;
                if (ve < 0) throw lattice_error("negative q-power under t-shift");
                f[sym.var_V()] = static_cast<int16_t>(ve);
                r.add_term(f, c);
            }
            return r;
        };
        return RatFunc(mapper(num_), mapper(den_));
    }

    // K_i |-> rational value (numeric Jack parameters).
    RatFunc substitute_k(const ParamSymbols& sym, const std::vector<Rat>& kv) const {
        ParamPoly n = subst_k(sym, num_, kv);
        ParamPoly d = subst_k(sym, den_, kv);
        if (d.is_zero())
            throw singular_specialization_error("denominator vanishes under k-substitution");
        return RatFunc(n, d);
    }

    std::string to_string(const ParamSymbols& sym) const {
        if (den_.is_one()) return num_.to_string(sym);
        std::string n = num_.to_string(sym);
        if (num_.num_terms() > 1) n = "(" + n + ")";
        std::string d = den_.to_string(sym);
        if (den_.num_terms() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void normalize(ParamPoly num, ParamPoly den) {
        if (den.is_zero()) throw arithmetic_error("zero denominator");
        if (num.is_zero()) {
            num_ = ParamPoly();
            den_ = ParamPoly(Rat(1));
            return;
        }
        if (!den.is_one()) {
            ParamPoly g = ParamPoly::gcd(num, den);
            if (!g.is_one()) {
                num = ParamPoly::divide_exact(num, g);
                den = ParamPoly::divide_exact(den, g);
            }
        }
        Rat lc = den.terms().begin()->second;  // least term under the monomial order
        if (lc != 1) {
            Rat inv = Rat(1) / lc;
            num.scale(inv);
            den.scale(inv);
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    static ParamPoly subst_u(const ParamSymbols& sym, const ParamPoly& p,
                             const std::vector<std::pair<int, long>>& u_to_v,
                             const std::vector<int>& eps, long& v_shift) {
        // First pass with signed V exponents, then shift them nonnegative.
        std::map<PExp, Rat, GrlexLess> tmp;
        long minv = 0;
        std::vector<long> vexps;
        std::vector<PExp> keys;
        std::vector<Rat> vals;
        for (const auto& [e, c] : p.terms()) {
            PExp f = e;
            long ve = e[sym.var_V()];
            Rat coeff = c;
            for (size_t i = 0; i < u_to_v.size(); ++i) {
                int uv = u_to_v[i].first;
                int ue = f[uv];
                if (ue == 0) continue;
                ve += static_cast<long>(ue) * u_to_v[i].second;
                if (eps[i] < 0 && (ue % 2 != 0)) coeff = -coeff;
                f[uv] = 0;
            }
            f[sym.var_V()] = 0;
            keys.push_back(f);
            vals.push_back(coeff);
            vexps.push_back(ve);
            minv = std::min(minv, ve);
        }
        ParamPoly r;
        for (size_t i = 0; i < keys.size(); ++i) {
            PExp f = keys[i];
            f[sym.var_V()] = static_cast<int16_t>(vexps[i] - minv);
            r.add_term(f, vals[i]);
        }
        v_shift = minv;
        return r;
    }

    static ParamPoly subst_k(const ParamSymbols& sym, const ParamPoly& p,
                             const std::vector<Rat>& kv) {
        if (!sym.has_jack_symbols()) return p;
        ParamPoly r;
        for (const auto& [e, c] : p.terms()) {
            PExp f = e;
            Rat coeff = c;
            for (int i = 0; i < sym.num_lengths(); ++i) {
                int v = sym.var_K(i);
                if (f[v] != 0) {
                    coeff *= rat_pow(kv[static_cast<size_t>(i)], f[v]);
                    f[v] = 0;
                }
            }
            r.add_term(f, coeff);
        }
        return r;
    }

    ParamPoly num_, den_;
};

}  // namespace macjack

#endif

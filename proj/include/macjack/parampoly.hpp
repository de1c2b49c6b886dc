#ifndef MACJACK_PARAMPOLY_HPP
#define MACJACK_PARAMPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "params.hpp"
#include "rational.hpp"

namespace macjack {

// Graded lexicographic order on exponent vectors; the fixed monomial order
// of the whole library (V first, then U_nu, then K_nu).
struct GrlexLess {
    bool operator()(const PExp& a, const PExp& b) const {
        long da = 0, db = 0;
        for (int i = 0; i < kMaxParamVars; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db;
        for (int i = 0; i < kMaxParamVars; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/**
 * Multivariate polynomial over Q in the parameter symbols, exponents >= 0.
 *
 * Terms are kept in a map ordered by the fixed monomial order, so iteration
 * order, leading terms and printed forms are all deterministic.  No stored
 * coefficient is zero.
 */
class ParamPoly {
public:
    using TermMap = std::map<PExp, Rat, GrlexLess>;

    ParamPoly() = default;
    explicit ParamPoly(const Rat& c) {
        if (c != 0) terms_[zero_pexp()] = c;
    }
    explicit ParamPoly(long c) : ParamPoly(Rat(c)) {}

    static ParamPoly monomial(const Rat& c, const PExp& e) {
        ParamPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    static ParamPoly variable(int var, int exp = 1) {
        PExp e = zero_pexp();
        e[var] = static_cast<int16_t>(exp);
        return monomial(Rat(1), e);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_pexp());
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == zero_pexp() &&
               terms_.begin()->second == 1;
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        auto it = terms_.find(zero_pexp());
        return it == terms_.end() ? Rat(0) : it->second;
    }

    size_t num_terms() const { return terms_.size(); }

    // Leading term under the fixed monomial order.
    const PExp& leading_exp() const {
        if (is_zero()) throw arithmetic_error("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }
    const Rat& leading_coeff() const {
        if (is_zero()) throw arithmetic_error("leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    int degree(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
        return d;
    }

    int max_var() const {
        int m = -1;
        for (const auto& [e, c] : terms_)
            for (int v = kMaxParamVars - 1; v > m; --v)
                if (e[v] != 0) m = v;
        return m;
    }

    void add_term(const PExp& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator-(const ParamPoly& a) {
        ParamPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                PExp e;
                for (int i = 0; i < kMaxParamVars; ++i)
                    e[i] = static_cast<int16_t>(ea[i] + eb[i]);
                r.add_term(e, ca * cb);
            }
        return r;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly& scale(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, coeff] : terms_) coeff *= c;
        return *this;
    }
    friend ParamPoly operator*(const Rat& c, ParamPoly p) { return p.scale(c); }

    ParamPoly pow(int n) const {
        if (n < 0) throw arithmetic_error("negative polynomial power");
        ParamPoly acc(Rat(1)), base = *this;
        while (n) {
            if (n & 1) acc *= base;
            if (n >>= 1) base *= base;
        }
        return acc;
    }

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    // ---- exact division ---------------------------------------------------

    // Returns f / g when g divides f exactly, std::nullopt otherwise.
    static std::optional<ParamPoly> try_divide(const ParamPoly& f, const ParamPoly& g) {
        if (g.is_zero()) throw arithmetic_error("division by zero polynomial");
        if (f.is_zero()) return ParamPoly();
        if (g.is_constant()) {
            ParamPoly q = f;
            q.scale(Rat(1) / g.constant_value());
            return q;
        }
        ParamPoly rem = f, quot;
        const PExp& ge = g.leading_exp();
        const Rat& gc = g.leading_coeff();
        while (!rem.is_zero()) {
            const PExp& fe = rem.leading_exp();
            PExp qe;
            for (int i = 0; i < kMaxParamVars; ++i) {
                int d = fe[i] - ge[i];
                if (d < 0) return std::nullopt;
                qe[i] = static_cast<int16_t>(d);
            }
            Rat qc = rem.leading_coeff() / gc;
            ParamPoly t = monomial(qc, qe);
            quot += t;
            rem -= t * g;
        }
        return quot;
    }

    static ParamPoly divide_exact(const ParamPoly& f, const ParamPoly& g) {
        auto q = try_divide(f, g);
        if (!q) throw divisibility_error("parameter polynomial division is not exact");
        return *q;
    }

    // ---- gcd --------------------------------------------------------------

    // Rational content: the positive rational c with p/c integer-primitive;
    // carries the sign of the leading coefficient.
    Rat content() const {
        if (is_zero()) return Rat(1);
        Int num_gcd(0), den_lcm(1);
        for (const auto& [e, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat c(num_gcd, den_lcm);
        c.canonicalize();
        if (leading_coeff() < 0) c = -c;
        return c;
    }

    // Integer-primitive associate with positive leading coefficient.
    ParamPoly primitive() const {
        if (is_zero()) return *this;
        ParamPoly p = *this;
        p.scale(Rat(1) / content());
        return p;
    }

    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
        if (a.is_zero()) return b.primitive();
        if (b.is_zero()) return a.primitive();
        if (a.is_constant() || b.is_constant()) return ParamPoly(Rat(1));
        if (a == b) return a.primitive();
        return gcd_impl(a.primitive(), b.primitive());
    }

    // ---- printing ---------------------------------------------------------

    // Renders in the q / t_nu / k_nu alphabet, terms in the fixed monomial
    // order.  Fractional powers print as q^(p/r).
    std::string to_string(const ParamSymbols& sym) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat coeff = c;
            if (first) {
                if (coeff < 0) {
                    os << "-";
                    coeff = -coeff;
                }
            } else {
                os << (coeff < 0 ? " - " : " + ");
                if (coeff < 0) coeff = -coeff;
            }
            first = false;
            std::string mono = monomial_string(sym, e);
            if (mono.empty()) {
                os << coeff.get_str();
            } else {
                if (coeff != 1) os << coeff.get_str() << "*";
                os << mono;
            }
        }
        return os.str();
    }

private:
    static std::string power_string(const std::string& name, const Rat& e) {
        if (e == 1) return name;
        if (is_integer(e)) return name + "^" + e.get_str();
        return name + "^(" + e.get_str() + ")";
    }

    std::string monomial_string(const ParamSymbols& sym, const PExp& e) const {
        std::ostringstream os;
        bool any = false;
        auto emit = [&](const std::string& s) {
            if (any) os << "*";
            os << s;
            any = true;
        };
        if (e[0] != 0) {
            Rat qe(e[0], sym.dq());
            qe.canonicalize();
            emit(power_string("q", qe));
        }
        int nl = sym.num_lengths();
        for (int i = 0; i < nl; ++i) {
            int v = sym.var_U(i);
            if (e[v] != 0) {
                Rat te(e[v], 2);
                te.canonicalize();
                emit(power_string(nl == 1 ? "t" : "t" + std::to_string(i + 1), te));
            }
        }
        if (sym.has_jack_symbols()) {
            for (int i = 0; i < nl; ++i) {
                int v = sym.var_K(i);
                if (e[v] != 0)
                    emit(power_string(nl == 1 ? "k" : "k" + std::to_string(i + 1), Rat(e[v])));
            }
        }
        return any ? os.str() : std::string();
    }

    // Univariate view in variable v: coefficient polynomials by degree.
    std::vector<ParamPoly> coeffs_in(int v) const {
        std::vector<ParamPoly> cs(static_cast<size_t>(degree(v)) + 1);
        for (const auto& [e, c] : terms_) {
            PExp r = e;
            int d = r[v];
            r[v] = 0;
            cs[static_cast<size_t>(d)].add_term(r, c);
        }
        return cs;
    }

    static ParamPoly from_coeffs(int v, const std::vector<ParamPoly>& cs) {
        ParamPoly p;
        for (size_t d = 0; d < cs.size(); ++d)
            for (const auto& [e, c] : cs[d].terms()) {
                PExp r = e;
                r[v] = static_cast<int16_t>(r[v] + d);
                p.add_term(r, c);
            }
        return p;
    }

    // gcd of the univariate-view coefficients (the content w.r.t. v).
    static ParamPoly poly_content(const std::vector<ParamPoly>& cs) {
        ParamPoly g;
        for (const auto& c : cs) {
            if (c.is_zero()) continue;
            g = g.is_zero() ? c.primitive() : gcd(g, c);
            if (g.is_one()) break;
        }
        return g.is_zero() ? ParamPoly(Rat(1)) : g;
    }

    // Pseudo-remainder of a by b in variable v (both viewed univariately).
    static std::vector<ParamPoly> prem(std::vector<ParamPoly> a, const std::vector<ParamPoly>& b,
                                       int v) {
        int db = static_cast<int>(b.size()) - 1;
        const ParamPoly& lb = b.back();
        auto deg = [](const std::vector<ParamPoly>& p) {
            int d = static_cast<int>(p.size()) - 1;
            while (d >= 0 && p[static_cast<size_t>(d)].is_zero()) --d;
            return d;
        };
        int da = deg(a);
        while (da >= db) {
            ParamPoly la = a[static_cast<size_t>(da)];
            // a = lb * a - la * x^{da-db} * b
            for (int i = 0; i <= da; ++i) a[static_cast<size_t>(i)] *= lb;
            for (int i = 0; i <= db; ++i)
                a[static_cast<size_t>(i + da - db)] -= la * b[static_cast<size_t>(i)];
            int nd = deg(a);
            a.resize(static_cast<size_t>(std::max(nd, -1) + 1));
            da = nd;
        }
        (void)v;
        return a;
    }

    static ParamPoly gcd_impl(ParamPoly a, ParamPoly b) {
        int v = std::max(a.max_var(), b.max_var());
        if (v < 0) return ParamPoly(Rat(1));

        // Cheap outcomes first: trial divisions dodge the PRS entirely.
        if (try_divide(a, b)) return b.primitive();
        if (try_divide(b, a)) return a.primitive();

        auto ca = a.coeffs_in(v);
        auto cb = b.coeffs_in(v);
        ParamPoly cont_a = poly_content(ca);
        ParamPoly cont_b = poly_content(cb);
        ParamPoly cont_g = gcd(cont_a, cont_b);

        // Primitive parts w.r.t. v.
        auto divide_all = [](std::vector<ParamPoly>& cs, const ParamPoly& d) {
            if (d.is_one()) return;
            for (auto& c : cs)
                if (!c.is_zero()) c = divide_exact(c, d);
        };
        divide_all(ca, cont_a);
        divide_all(cb, cont_b);

        if (ca.size() < cb.size()) std::swap(ca, cb);
        // Primitive PRS in v.
        while (true) {
            auto r = prem(ca, cb, v);
            bool zero = true;
            for (const auto& c : r)
                if (!c.is_zero()) {
                    zero = false;
                    break;
                }
            if (zero) break;
            if (r.size() <= 1) return cont_g;  // degree 0 in v: coprime parts
            ParamPoly cr = poly_content(r);
            divide_all(r, cr);
            ca = std::move(cb);
            cb = std::move(r);
        }
        ParamPoly g = from_coeffs(v, cb) * cont_g;
        return g.primitive();
    }

    TermMap terms_;
};

}  // namespace macjack

#endif

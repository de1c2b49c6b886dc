#ifndef MACJACK_MACDONALD_HPP
#define MACJACK_MACDONALD_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "affineop.hpp"
#include "mac_params.hpp"
#include "symfun.hpp"

namespace macjack {

// Spectral point x_i(t^rho q^b) = q^{(b_i,b)} prod_nu t_nu^{(b_i,rho_nu)},
// one RatFunc monomial per coordinate.
inline std::vector<RatFunc> eigenvalue_point(const RootSystem& sys, const ParamSymbols& sym,
                                             const MacParams& params, const Weight& b) {
    std::vector<RatFunc> pt;
    for (int i = 0; i < sys.rank(); ++i) {
        Weight bi(static_cast<size_t>(sys.rank()), 0);
        bi[static_cast<size_t>(i)] = 1;
        RatFunc v = RatFunc(Rat(1)).times_q_power(sym, sys.pair(bi, b));
        for (int l = 0; l < sys.num_lengths(); ++l) {
            Rat e = sys.pair(bi, sys.rho_nu(l)) * 2;  // exponent of t^{1/2}
            if (!is_integer(e))
                throw lattice_error("t-exponent " + e.get_str() + " is not half-integral");
            v *= params.t_half_pow(sys, sym, l, to_long(e));
        }
        pt.push_back(v);
    }
    return pt;
}

// Value of a lattice Laurent polynomial at a coordinatewise monomial point.
inline RatFunc eval_at_point(const LaurentPoly& f, const std::vector<RatFunc>& pt) {
    RatFunc acc;
    for (const auto& [e, c] : f.terms()) {
        RatFunc term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] % kDx != 0)
                throw lattice_error("cannot evaluate a half-lattice exponent at a spectral point");
            term *= pt[i].pow(e[i] / kDx);
        }
        acc += term;
    }
    return acc;
}

/**
 * The finite form of the Macdonald weight function at integral k:
 * per positive coroot a the infinite product telescopes to
 *
 *   prod_{i=0}^{k-1} (1 - x_a q_a^i)(1 - x_a^{-1} q_a^{i+1}).
 */
inline LaurentPoly mu_finite(const RootSystem& sys, const ParamSymbols& sym,
                             const MacParams& params) {
    LaurentPoly mu = LaurentPoly::one(sys.rank());
    for (int idx : sys.positive_coroots()) {
        const Root& r = sys.root(idx);
        int li = sys.length_index(r.nu);
        const auto& spec = params.spec(li);
        if (spec.formal || !is_integer(spec.k) || spec.k < 0)
            throw error("mu_finite needs t_nu = q_nu^{k} with k a nonnegative integer");
        long k = to_long(spec.k);
        Rat qa = 2 / r.nu;  // q_a = q^{2/nu}
        XExp xa = xexp_of_weight(r.coroot);
        XExp xai = xexp_of_weight(-r.coroot);
        XExp zero(static_cast<size_t>(sys.rank()), 0);
        for (long i = 0; i < k; ++i) {
            LaurentPoly f1 = LaurentPoly::one(sys.rank());
            f1.add_term(xa, -RatFunc(Rat(1)).times_q_power(sym, qa * i));
            LaurentPoly f2 = LaurentPoly::one(sys.rank());
            f2.add_term(xai, -RatFunc(Rat(1)).times_q_power(sym, qa * (i + 1)));
            mu *= f1;
            mu *= f2;
        }
        (void)zero;
    }
    return mu;
}

// <f, g> = < mu f g* >, with mu in place of mu_1 (the global scalar <mu> is
// irrelevant to orthogonality and Gram-Schmidt).
inline RatFunc inner_product(const RootSystem& sys, const ParamSymbols& sym,
                             const MacParams& params, const SymPoly& f, const SymPoly& g) {
    LaurentPoly mu = mu_finite(sys, sym, params);
    LaurentPoly fe = expand(sys, f);
    LaurentPoly ge = expand(sys, g).star(sym);
    return (mu * fe * ge).constant_term();
}

// ---- truncated q-series ------------------------------------------------------

// Dense power series in V (the D_q-th root of q), truncated at a fixed order.
class QSeries {
public:
    QSeries(int order) : c_(static_cast<size_t>(order) + 1, Rat(0)) {}
    int order() const { return static_cast<int>(c_.size()) - 1; }
    Rat& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

    static QSeries one(int order) {
        QSeries s(order);
        s[0] = 1;
        return s;
    }

    QSeries mul(const QSeries& o) const {
        QSeries r(order());
        for (int i = 0; i <= order(); ++i) {
            if (c_[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= order(); ++j)
                if (o[j] != 0) r[i + j] += c_[static_cast<size_t>(i)] * o[j];
        }
        return r;
    }

    // multiply by (1 - s V^e)^{pm 1}
    QSeries mul_atom(int e, const Rat& s, bool inverse) const {
        if (e <= 0) throw singular_specialization_error("q-series atom with nonpositive exponent");
        if (!inverse) {
            QSeries f(order());
            f[0] = 1;
            if (e <= order()) f[e] = -s;
            return mul(f);
        }
        QSeries g = QSeries::one(order());
        Rat p = s;
        for (int j = e; j <= order(); j += e) {
            g[j] = p;
            p *= s;
        }
        return mul(g);
    }

    bool operator==(const QSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rat> c_;
};

// Series expansion of a rational function of V alone.
inline QSeries series_of_ratfunc(const ParamSymbols& sym, const RatFunc& r, int order) {
    auto coeffs = [&](const ParamPoly& p) {
        std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
        for (const auto& [e, v] : p.terms()) {
            for (int j = 1; j < kMaxParamVars; ++j)
                if (e[j] != 0) throw error("series expansion requires a specialized value");
            if (e[0] <= order) c[static_cast<size_t>(e[0])] = v;
        }
        return c;
    };
    std::vector<Rat> num = coeffs(r.num()), den = coeffs(r.den());
    if (den[0] == 0) throw singular_specialization_error("series denominator has no constant term");
    QSeries out(order);
    for (int j = 0; j <= order; ++j) {
        Rat acc = num[static_cast<size_t>(j)];
        for (int i = 0; i < j; ++i) acc -= out[i] * den[static_cast<size_t>(j - i)];
        out[j] = acc / den[0];
    }
    (void)sym;
    return out;
}

/**
 * The closed constant-term product expanded as a q-series to order q^N:
 *
 *   <mu> = prod_a prod_{i>=1} (1 - x_a(t^rho) q_a^i)^2
 *          / ((1 - x_a(t^rho) t_a q_a^i)(1 - x_a(t^rho) t_a^{-1} q_a^i)).
 */
inline QSeries mu_ct_closed(const RootSystem& sys, const ParamSymbols& sym,
                            const MacParams& params, int N) {
    int order = N * sym.dq();
    QSeries s = QSeries::one(order);
    std::vector<RatFunc> pt =
        eigenvalue_point(sys, sym, params, Weight(static_cast<size_t>(sys.rank()), 0));
    for (int idx : sys.positive_coroots()) {
        const Root& r = sys.root(idx);
        int li = sys.length_index(r.nu);
        const auto& spec = params.spec(li);
        if (spec.formal) throw error("mu_ct_closed needs specialized t parameters");
        // x_a(t^rho) as a signed q-power
        RatFunc xa(Rat(1));
        for (size_t i = 0; i < r.coroot.size(); ++i)
            xa *= pt[i].pow(r.coroot[i]);
        // xa = sign * V^g: read off the monomial
        if (xa.num().num_terms() != 1 || !xa.den().is_one())
            throw error("spectral value of x_a is not a monomial");
        Rat sign = xa.num().leading_coeff();
        long g = xa.num().leading_exp()[0];
        Rat qa = 2 / r.nu;
        long qa_step = sym.v_exponent_of_q_power(qa);
        long tk = sym.v_exponent_of_q_power(spec.k * qa);  // t_a = q_a^k in V units
        for (long i = 1;; ++i) {
            long base = g + i * qa_step;
            if (base - std::abs(tk) > order) break;
            auto atom = [&](long e, const Rat& sgn, bool inv) {
                if (e <= 0) {
                    if (sgn == 1 && e == 0)
                        throw singular_specialization_error("vanishing constant-term factor");
                    if (e <= 0) throw singular_specialization_error("non-positive series exponent");
                }
                if (e <= order) s = s.mul_atom(static_cast<int>(e), sgn, inv);
            };
            atom(base, sign, false);
            atom(base, sign, false);
            Rat tsign = spec.eps < 0 ? Rat(-1) : Rat(1);
            // t_a carries eps^2 = +1; the sign only rides on half powers.
            (void)tsign;
            atom(base + tk, sign, true);
            atom(base - tk, sign, true);
        }
    }
    return s;
}

// ---- the polynomials -----------------------------------------------------------

struct MacPoly {
    Weight b;
    SymPoly expansion;  // unit coefficient on m_b
};

/**
 * Gram-Schmidt route, integral k only: the unique p_b = m_b + sum u_c m_c
 * with <p_b, m_c> = 0 for every dominant c strictly below b.
 */
inline MacPoly macdonald_gs(const RootSystem& sys, const ParamSymbols& sym,
                            const MacParams& params, const Weight& b) {
    std::vector<Weight> cone = sys.lower_cone(b);
    cone.pop_back();  // drop b itself
    size_t n = cone.size();
    // Gram matrix and right-hand side
    std::vector<std::vector<RatFunc>> M(n, std::vector<RatFunc>(n));
    std::vector<RatFunc> rhs(n);
    auto mono = [&](const Weight& w) {
        SymPoly s;
        s.add_term(w, RatFunc(Rat(1)));
        return s;
    };
    LaurentPoly mu = mu_finite(sys, sym, params);
    auto pairing = [&](const Weight& u, const Weight& v) {
        LaurentPoly fe = monomial_symmetric(sys, u);
        LaurentPoly ge = monomial_symmetric(sys, v).star(sym);
        return (mu * fe * ge).constant_term();
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) M[i][j] = pairing(cone[j], cone[i]);
        rhs[i] = -pairing(b, cone[i]);
    }
    // Gaussian elimination over the rational-function field.
    std::vector<RatFunc> u(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col].is_zero()) ++piv;
        if (piv == n) throw degenerate_pairing_error("singular Gram matrix in Gram-Schmidt");
        std::swap(M[col], M[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (size_t row = col + 1; row < n; ++row) {
            if (M[row][col].is_zero()) continue;
            RatFunc f = M[row][col] / M[col][col];
            for (size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    for (size_t row = n; row-- > 0;) {
        RatFunc acc = rhs[row];
        for (size_t j = row + 1; j < n; ++j) acc -= M[row][j] * u[j];
        u[row] = acc / M[row][row];
    }
    MacPoly p;
    p.b = b;
    p.expansion.add_term(b, RatFunc(Rat(1)));
    for (size_t i = 0; i < n; ++i) p.expansion.add_term(cone[i], u[i]);
    (void)mono;
    return p;
}

/**
 * Operator route: triangular eigen-solve of L_f(p) = f(t^rho q^b) p with
 * unit coefficient on m_b, f running through m_{b_1}, m_{b_2}, ... until the
 * spectrum separates every cone element from b.
 */
class MacdonaldSolver {
public:
    MacdonaldSolver(const RootSystem& sys, ParamSymbols sym, MacParams params)
        : H_(sys, std::move(sym), std::move(params)) {}

    HeckeAlgebra& hecke() { return H_; }
    const RootSystem& sys() const { return H_.sys(); }
    const ParamSymbols& sym() const { return H_.sym(); }
    const MacParams& params() const { return H_.params(); }

    const MacPoly& polynomial(const Weight& b) {
        auto it = cache_.find(b);
        if (it != cache_.end()) return it->second;
        MacPoly p = solve(b);
        return cache_.emplace(b, std::move(p)).first->second;
    }

private:
    // m-basis matrix column of L_f on m_c, indexed within the cone.
    SymPoly apply_L_basis(int f, const Weight& c) {
        LaurentPoly img = H_.apply(H_.L_basis(f), monomial_symmetric(sys(), c));
        return to_m_basis(sys(), img);
    }

    MacPoly solve(const Weight& b) {
        const RootSystem& sys_ = sys();
        std::vector<Weight> cone = sys_.lower_cone(b);
        size_t n = cone.size();
        std::map<Weight, size_t> index;
        for (size_t i = 0; i < n; ++i) index[cone[i]] = i;

        // Columns of each generator operator, computed lazily per f.
        int nf = sys_.rank();
        std::vector<std::vector<SymPoly>> cols(static_cast<size_t>(nf));
        std::vector<bool> have(static_cast<size_t>(nf), false);
        auto ensure = [&](int f) {
            if (have[static_cast<size_t>(f)]) return;
            auto& cl = cols[static_cast<size_t>(f)];
            cl.resize(n);
            for (size_t j = 0; j < n; ++j) {
                cl[j] = apply_L_basis(f + 1, cone[j]);
                for (const auto& [w, c] : cl[j].terms())
                    if (!index.count(w))
                        throw error("L_f broke triangularity: image outside the lower cone");
            }
            have[static_cast<size_t>(f)] = true;
        };

        std::vector<RatFunc> u(n);
        u[n - 1] = RatFunc(Rat(1));
        for (size_t row = n - 1; row-- > 0;) {
            const Weight& c = cone[row];
            bool solved = false;
            for (int f = 0; f < nf && !solved; ++f) {
                ensure(f);
                const auto& cl = cols[static_cast<size_t>(f)];
                RatFunc lam = cl[n - 1].coeff(b);  // diagonal entry at the top
                RatFunc diag = cl[row].coeff(c);
                RatFunc gap = lam - diag;
                if (gap.is_zero()) continue;
                RatFunc acc;
                for (size_t j = row + 1; j < n; ++j) {
                    RatFunc m = cl[j].coeff(c);
                    if (!m.is_zero()) acc += m * u[j];
                }
                u[row] = acc / gap;
                solved = true;
            }
            if (!solved)
                throw degenerate_spectrum_error(
                    "eigenvalues collide on the whole generator set at this specialization");
        }

        MacPoly p;
        p.b = b;
        for (size_t i = 0; i < n; ++i) p.expansion.add_term(cone[i], u[i]);
        return p;
    }

    HeckeAlgebra H_;
    std::map<Weight, MacPoly> cache_;
};

inline MacPoly macdonald_eig(const RootSystem& sys, const ParamSymbols& sym,
                             const MacParams& params, const Weight& b) {
    MacdonaldSolver solver(sys, sym, params);
    return solver.polynomial(b);
}

/**
 * g_b = d_v * p_b at the shifted parameters t_nu q_nu, for the full set
 * v = nu_R:  d_v = prod_a ((t_a x_a)^{1/2} - (t_a x_a)^{-1/2}).
 */
inline LaurentPoly g_poly(const RootSystem& sys, const ParamSymbols& sym, const MacParams& params,
                          const Weight& b) {
    // d_v at the original parameters
    LaurentPoly d = LaurentPoly::one(sys.rank());
    for (int idx : sys.positive_coroots()) {
        const Root& r = sys.root(idx);
        int li = sys.length_index(r.nu);
        RatFunc th = params.t_half(sys, sym, li);
        XExp half(static_cast<size_t>(sys.rank()));
        for (size_t i = 0; i < half.size(); ++i) half[i] = r.coroot[i];  // a/2 in D_x units
        XExp mhalf(half.size());
        for (size_t i = 0; i < half.size(); ++i) mhalf[i] = -half[i];
        LaurentPoly factor(sys.rank());
        factor.add_term(half, th);
        factor.add_term(mhalf, -th.inverse());
        d *= factor;
    }
    // p_b at t_nu q_nu
    bool any_formal = params.any_formal();
    for (int l = 0; l < params.num_lengths(); ++l)
        if (params.spec(l).formal != any_formal)
            throw error("g_poly: mixed formal/specialized parameter modes are not supported");
    MacPoly p;
    if (any_formal) {
        MacPoly raw = macdonald_eig(sys, sym, params, b);
        auto shift = params.symbol_shift_data(sys, sym);
        p.b = raw.b;
        p.expansion =
            raw.expansion.map_coeffs([&](const RatFunc& c) { return c.shift_t_by_q(sym, shift); });
    } else {
        p = macdonald_eig(sys, sym, params.shifted_by_q(sys), b);
    }
    return d * expand(sys, p.expansion);
}

}  // namespace macjack

#endif

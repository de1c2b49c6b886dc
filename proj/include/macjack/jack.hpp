#ifndef MACJACK_JACK_HPP
#define MACJACK_JACK_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symfun.hpp"

namespace macjack {

/**
 * Jack parameters: one k_nu per root length, each either a formal symbol or
 * an exact rational.  Formal mode adds K symbols to the parameter context.
 */
class JackParams {
public:
    struct LengthSpec {
        bool formal = true;
        Rat value;
    };

    static JackParams all_formal(const RootSystem& sys) {
        JackParams p;
        p.spec_.assign(static_cast<size_t>(sys.num_lengths()), LengthSpec{});
        return p;
    }
    static JackParams values(const RootSystem& sys, const std::vector<Rat>& ks) {
        JackParams p;
        for (int i = 0; i < sys.num_lengths(); ++i)
            p.spec_.push_back(LengthSpec{false, ks[static_cast<size_t>(i)]});
        return p;
    }
    static JackParams value(const RootSystem& sys, const Rat& k) {
        return values(sys, std::vector<Rat>(static_cast<size_t>(sys.num_lengths()), k));
    }

    bool any_formal() const {
        for (const auto& s : spec_)
            if (s.formal) return true;
        return false;
    }
    const LengthSpec& spec(int i) const { return spec_[static_cast<size_t>(i)]; }

    // k_nu as a coefficient.
    RatFunc k(const ParamSymbols& sym, int length_idx) const {
        const LengthSpec& s = spec(length_idx);
        if (s.formal) return RatFunc(ParamPoly::variable(sym.var_K(length_idx)));
        return RatFunc(s.value);
    }

    // (r_k, r_k) = sum_{nu,mu} k_nu k_mu (r_nu, r_mu).
    RatFunc rk_norm(const RootSystem& sys, const ParamSymbols& sym) const {
        RatFunc acc;
        for (int a = 0; a < sys.num_lengths(); ++a)
            for (int b = 0; b < sys.num_lengths(); ++b) {
                Rat g = sys.pair(sys.r_nu(a), sys.r_nu(b));
                acc += RatFunc(g) * k(sym, a) * k(sym, b);
            }
        return acc;
    }

    // (b + r_k, b + r_k) as a coefficient (polynomial in the formal k's).
    RatFunc eigenvalue(const RootSystem& sys, const ParamSymbols& sym, const Weight& b) const {
        RatFunc acc = RatFunc(sys.pair(b, b));
        for (int a = 0; a < sys.num_lengths(); ++a)
            acc += RatFunc(Rat(2) * sys.pair(b, sys.r_nu(a))) * k(sym, a);
        return acc + rk_norm(sys, sym);
    }

    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < spec_.size(); ++i) {
            if (i) out += ";";
            out += spec_[i].formal ? "formal" : spec_[i].value.get_str();
        }
        return out;
    }

private:
    std::vector<LengthSpec> spec_;
};

/**
 * The degenerate (differential) operator
 *
 *   L_2^(k) f = sum_i d_{alpha_i} d_{b_i} f
 *             + sum_{a in R^vee_+} k_a (x_a + 1)/(x_a - 1) d_a f
 *             + (r_k, r_k) f,
 *
 * acting through exponent pairings: d_a(x_e) = (a, e) x_e.  The middle sum
 * is assembled over the common denominator prod (x_a - 1) and divided out
 * exactly at the end; the individual summands are not polynomial, only the
 * sum is.
 */
inline LaurentPoly apply_L2_laurent(const RootSystem& sys, const ParamSymbols& sym,
                                    const JackParams& k, const LaurentPoly& f) {
    int n = sys.rank();
    // Laplacian part: x_e -> (e,e) x_e.
    LaurentPoly lap(n);
    for (const auto& [e, c] : f.terms()) {
        auto z = RootSystem::xexp_to_rat(e);
        Rat ee = sys.pair(z, z);
        lap.add_term(e, RatFunc(ee) * c);
    }
    // Cross term over the common denominator.
    LaurentPoly numer(n);
    LaurentPoly denom = LaurentPoly::one(n);
    const auto& pos = sys.positive_coroots();
    std::vector<LaurentPoly> xa_minus_1;
    for (int idx : pos) {
        LaurentPoly xm = LaurentPoly::x_weight(sys.root(idx).coroot);
        xm.add_term(XExp(static_cast<size_t>(n), 0), RatFunc(Rat(-1)));
        xa_minus_1.push_back(xm);
        denom *= xm;
    }
    for (size_t ai = 0; ai < pos.size(); ++ai) {
        const Root& a = sys.root(pos[ai]);
        RatFunc ka = k.k(sym, sys.length_index(a.nu));
        if (ka.is_zero()) continue;
        // d_a f
        LaurentPoly da(n);
        for (const auto& [e, c] : f.terms()) {
            Rat p = sys.pair(sys.root(pos[ai]).coroot, RootSystem::xexp_to_rat(e));
            if (p != 0) da.add_term(e, RatFunc(p) * c);
        }
        if (da.is_zero()) continue;
        LaurentPoly xp1 = LaurentPoly::x_weight(a.coroot);
        xp1.add_term(XExp(static_cast<size_t>(n), 0), RatFunc(Rat(1)));
        LaurentPoly contrib = xp1 * da;
        for (size_t bi = 0; bi < pos.size(); ++bi)
            if (bi != ai) contrib *= xa_minus_1[bi];
        contrib.scale(ka);
        numer += contrib;
    }
    LaurentPoly cross(n);
    if (!numer.is_zero()) cross = LaurentPoly::divide_exact(numer, denom);

    LaurentPoly out = lap + cross;
    RatFunc rk2 = k.rk_norm(sys, sym);
    if (!rk2.is_zero()) out += rk2 * f;
    return out;
}

// SymPoly version; throws invariance_error when the rational part fails to
// clear (the input was not W-invariant).
inline SymPoly apply_L2(const RootSystem& sys, const ParamSymbols& sym, const JackParams& k,
                        const SymPoly& f) {
    LaurentPoly fe = expand(sys, f);
    LaurentPoly img;
    try {
        img = apply_L2_laurent(sys, sym, k, fe);
    } catch (const divisibility_error&) {
        throw invariance_error("L_2 left a residual denominator; input not W-invariant", 0);
    }
    return to_m_basis(sys, img);
}

struct JackPoly {
    Weight b;
    SymPoly expansion;  // unit coefficient on m_b
};

/**
 * Triangular eigen-solve of L_2(j) = (b + r_k, b + r_k) j, monic on m_b.
 * The diagonal entries come out of the computed matrix; an exact eigenvalue
 * collision raises degenerate_spectrum_error.
 */
inline JackPoly jack_eig(const RootSystem& sys, const ParamSymbols& sym, const JackParams& k,
                         const Weight& b) {
    std::vector<Weight> cone = sys.lower_cone(b);
    size_t n = cone.size();
    std::vector<SymPoly> cols(n);
    std::map<Weight, size_t> index;
    for (size_t i = 0; i < n; ++i) index[cone[i]] = i;
    for (size_t j = 0; j < n; ++j) {
        SymPoly mj;
        mj.add_term(cone[j], RatFunc(Rat(1)));
        cols[j] = apply_L2(sys, sym, k, mj);
        for (const auto& [w, c] : cols[j].terms())
            if (!index.count(w)) throw error("L_2 broke triangularity");
    }
    std::vector<RatFunc> u(n);
    u[n - 1] = RatFunc(Rat(1));
    RatFunc lam = cols[n - 1].coeff(b);
    for (size_t row = n - 1; row-- > 0;) {
        const Weight& c = cone[row];
        RatFunc gap = lam - cols[row].coeff(c);
        if (gap.is_zero())
            throw degenerate_spectrum_error("Jack eigenvalues collide: (b+r_k) and (c+r_k) have equal norms");
        RatFunc acc;
        for (size_t j = row + 1; j < n; ++j) {
            RatFunc m = cols[j].coeff(c);
            if (!m.is_zero()) acc += m * u[j];
        }
        u[row] = acc / gap;
    }
    JackPoly p;
    p.b = b;
    for (size_t i = 0; i < n; ++i) p.expansion.add_term(cone[i], u[i]);
    return p;
}

// Delta_k = prod_{a in R^vee_+} (x_{a/2} - x_{-a/2})^{k_a}, k integral >= 0
// per length.
inline LaurentPoly delta_power(const RootSystem& sys, const std::vector<long>& k_per_length) {
    for (long kv : k_per_length)
        if (kv < 0) throw error("delta_power needs nonnegative integer exponents");
    LaurentPoly d = LaurentPoly::one(sys.rank());
    for (int idx : sys.positive_coroots()) {
        const Root& r = sys.root(idx);
        long ka = k_per_length[static_cast<size_t>(sys.length_index(r.nu))];
        if (ka == 0) continue;
        XExp half(static_cast<size_t>(sys.rank()));
        for (size_t i = 0; i < half.size(); ++i) half[i] = r.coroot[i];
        XExp mhalf(half.size());
        for (size_t i = 0; i < half.size(); ++i) mhalf[i] = -half[i];
        LaurentPoly f(sys.rank());
        f.add_term(half, RatFunc(Rat(1)));
        f.add_term(mhalf, RatFunc(Rat(-1)));
        d *= f.pow(static_cast<int>(ka));
    }
    return d;
}

// The Jack pairing <f, g> = < Delta_{2k} f(x) g(x^{-1}) > for integral k.
inline RatFunc jack_inner_product(const RootSystem& sys, const std::vector<long>& k_per_length,
                                  const LaurentPoly& f, const LaurentPoly& g) {
    std::vector<long> twok;
    for (long kv : k_per_length) twok.push_back(2 * kv);
    LaurentPoly ginv(g.nvars());
    for (const auto& [e, c] : g.terms()) {
        XExp ne(e.size());
        for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
        ginv.add_term(ne, c);
    }
    return (delta_power(sys, twok) * f * ginv).constant_term();
}

}  // namespace macjack

#endif

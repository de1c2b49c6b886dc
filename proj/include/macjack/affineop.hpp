#ifndef MACJACK_AFFINEOP_HPP
#define MACJACK_AFFINEOP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mac_params.hpp"
#include "symfun.hpp"
#include "xrat.hpp"

namespace macjack {

/**
 * Difference-reflection operator: a finite sum of triples
 * (coefficient, shift, Weyl part), the coefficient a rational function of x
 * over the parameter field.  A term (c, b, w) acts on f by
 *
 *     f  |->  c * (b w)(f),   (b w)(x_e) = x_{w(e)} q^{-(b, w(e))}.
 *
 * Terms with equal (shift, Weyl part) are merged and zero coefficients
 * pruned, so the zero operator has an empty term map.
 */
class AffineOp {
public:
    using Key = std::pair<Weight, int>;
    using TermMap = std::map<Key, XRat>;

    AffineOp() = default;

    static AffineOp zero() { return AffineOp(); }

    static AffineOp single(const RootSystem& sys, const ExtAffine& g, XRat coeff) {
        AffineOp op;
        op.add_term(Key{g.shift, g.w}, std::move(coeff));
        (void)sys;
        return op;
    }

    static AffineOp identity(const RootSystem& sys) {
        return single(sys, sys.aff_identity(), XRat(LaurentPoly::one(sys.rank())));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    void add_term(const Key& k, const XRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AffineOp& operator+=(const AffineOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    AffineOp& operator-=(const AffineOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend AffineOp operator+(AffineOp a, const AffineOp& b) { return a += b; }
    friend AffineOp operator-(AffineOp a, const AffineOp& b) { return a -= b; }

    AffineOp& scale(const RatFunc& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, coeff] : terms_) coeff.scale(c);
        return *this;
    }
    friend AffineOp operator*(const RatFunc& c, AffineOp op) { return op.scale(c); }

    bool equals(const AffineOp& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto ia = terms_.begin(), ib = o.terms_.begin();
        for (; ia != terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (!ia->second.equals(ib->second)) return false;
        }
        return true;
    }

    // Debug dump: one line per term "coef | shift | weylpart-word".
    std::string dump(const RootSystem& sys, const ParamSymbols& sym) const {
        std::string out;
        for (const auto& [k, c] : terms_) {
            out += c.num().to_string(sym);
            if (!c.den_factors().empty()) {
                out += " / [";
                for (const auto& f : c.den_factors()) out += " (" + f.to_string(sym) + ")";
                out += " ]";
            }
            out += " | shift (";
            for (size_t i = 0; i < k.first.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(k.first[i]);
            }
            out += ") | w ";
            const auto& word = sys.weyl_word(k.second);
            if (word.empty()) out += "e";
            for (int j : word) out += "s" + std::to_string(j + 1);
            out += "\n";
        }
        return out;
    }

private:
    TermMap terms_;
};

/**
 * The polynomial representation of the (extended) affine Hecke algebra at
 * one parameter assignment: builds T_j, pi_r, Y_b and L_f = [f(Y)]_dagger
 * as materialized AffineOp values, with memoization.  One instance per
 * (root system, parameters) computation; not meant to be shared across
 * threads while warm-up is in progress.
 */
class HeckeAlgebra {
public:
    HeckeAlgebra(const RootSystem& sys, ParamSymbols sym, MacParams params)
        : sys_(sys), sym_(std::move(sym)), params_(std::move(params)) {}

    const RootSystem& sys() const { return sys_; }
    const ParamSymbols& sym() const { return sym_; }
    const MacParams& params() const { return params_; }

    RatFunc t_half(int j) const {
        return params_.t_half(sys_, sym_, sys_.length_index_of_simple(j));
    }

    // x_{a_j}: the j-th affine coroot monomial; x_{a_0} = q x_theta^{-1}.
    LaurentPoly x_affine_coroot(int j) const {
        if (j == 0) {
            XExp e = xexp_of_weight(-sys_.theta_coroot());
            return LaurentPoly::monomial(RatFunc(Rat(1)).times_q_power(sym_, Rat(1)), e);
        }
        return LaurentPoly::x_weight(sys_.coroot_of_simple(j - 1));
    }

    // Demazure-Lusztig generator T_j, 0 <= j <= n.
    const AffineOp& T(int j) {
        auto it = t_cache_.find(j);
        if (it != t_cache_.end()) return it->second;
        RatFunc th = t_half(j);
        LaurentPoly xa = x_affine_coroot(j);
        LaurentPoly den = xa - LaurentPoly::one(sys_.rank());
        XRat c = XRat::quotient(LaurentPoly::constant(sys_.rank(), th - th.inverse()), den);
        AffineOp op;
        ExtAffine sj = sys_.aff_simple(j);
        op.add_term({sj.shift, sj.w}, XRat::constant(sys_.rank(), th) + c);
        ExtAffine id = sys_.aff_identity();
        op.add_term({id.shift, id.w}, -c);
        return t_cache_.emplace(j, std::move(op)).first->second;
    }

    // T_j^{-1} = T_j - t_j^{1/2} + t_j^{-1/2}.
    const AffineOp& Tinv(int j) {
        auto it = tinv_cache_.find(j);
        if (it != tinv_cache_.end()) return it->second;
        RatFunc th = t_half(j);
        AffineOp op = T(j);
        AffineOp corr = AffineOp::identity(sys_);
        corr.scale(th.inverse() - th);
        op += corr;
        return tinv_cache_.emplace(j, std::move(op)).first->second;
    }

    // iota-image of T_j:  t^{1/2} -> -t^{-1/2}, s_j -> -s_j, x and q fixed.
    AffineOp iota_T(int j) { return iota(T(j)); }

    AffineOp pi(int r) const {
        ExtAffine p = sys_.aff_pi(r);
        return AffineOp::single(sys_, p, XRat(LaurentPoly::one(sys_.rank())));
    }
    AffineOp pi_inv(int r) const {
        ExtAffine p = sys_.aff_inverse(sys_.aff_pi(r));
        return AffineOp::single(sys_, p, XRat(LaurentPoly::one(sys_.rank())));
    }

    AffineOp weyl_op(int w) const {
        ExtAffine g{Weight(static_cast<size_t>(sys_.rank()), 0), w};
        return AffineOp::single(sys_, g, XRat(LaurentPoly::one(sys_.rank())));
    }

    // Operator composition: (A o B)(f) = A(B(f)).
    AffineOp compose(const AffineOp& a, const AffineOp& b) const {
        AffineOp out;
        for (const auto& [ka, ca] : a.terms()) {
            ExtAffine ga{ka.first, ka.second};
            for (const auto& [kb, cb] : b.terms()) {
                XRat moved = cb.transform(
                    [&](const LaurentPoly& p) { return p.affine_apply(sys_, ga, sym_); });
                AffineOp::Key key{ka.first + sys_.weyl_act(ka.second, kb.first),
                                  sys_.weyl_mult(ka.second, kb.second)};
                out.add_term(key, ca * moved);
            }
        }
        return out;
    }

    // Application to a Laurent polynomial, as an exact rational function.
    XRat apply_rational(const AffineOp& op, const LaurentPoly& f) const {
        XRat acc(sys_.rank());
        for (const auto& [k, c] : op.terms()) {
            ExtAffine g{k.first, k.second};
            acc += c.times_poly(f.affine_apply(sys_, g, sym_));
        }
        return acc;
    }

    // Application that must produce a Laurent polynomial (the divisibility
    // invariant of the Demazure-Lusztig operators).
    LaurentPoly apply(const AffineOp& op, const LaurentPoly& f) const {
        return apply_rational(op, f).to_laurent();
    }

    XRat apply_xrat(const AffineOp& op, const XRat& f) const {
        XRat acc(sys_.rank());
        for (const auto& [k, c] : op.terms()) {
            ExtAffine g{k.first, k.second};
            acc += c * f.transform(
                           [&](const LaurentPoly& p) { return p.affine_apply(sys_, g, sym_); });
        }
        return acc;
    }

    // [H]_dagger: drop the Weyl parts, keep coefficients and shifts.
    AffineOp dagger(const AffineOp& op) const {
        AffineOp out;
        int id = sys_.weyl_identity();
        for (const auto& [k, c] : op.terms()) out.add_term({k.first, id}, c);
        return out;
    }

    // Termwise iota: sign (-1)^{length} on the group part, parameter twist
    // on the coefficient.
    AffineOp iota(const AffineOp& op) const {
        AffineOp out;
        for (const auto& [k, c] : op.terms()) {
            ExtAffine g{k.first, k.second};
            int len = sys_.aff_length(g);
            XRat tw = c.transform([&](const LaurentPoly& p) {
                return p.map_coeffs([&](const RatFunc& r) { return r.iota_t(sym_); });
            });
            if (len % 2 != 0) tw = -tw;
            out.add_term(k, tw);
        }
        return out;
    }

    // Specializes every coefficient with the given assignment data.
    AffineOp specialize(const AffineOp& op, const std::vector<std::pair<int, long>>& u_to_v,
                        const std::vector<int>& eps) const {
        AffineOp out;
        for (const auto& [k, c] : op.terms()) {
            XRat sc = c.transform([&](const LaurentPoly& p) {
                return p.map_coeffs(
                    [&](const RatFunc& r) { return r.specialize_t(sym_, u_to_v, eps); });
            });
            out.add_term(k, sc);
        }
        return out;
    }

    // Y_b for any lattice weight; dominant translations go through their
    // reduced word, general b through the b = b_+ - b_- splitting.
    const AffineOp& Y(const Weight& b) {
        auto it = y_cache_.find(b);
        if (it != y_cache_.end()) return it->second;
        Weight bp(b.size()), bm(b.size());
        for (size_t i = 0; i < b.size(); ++i) {
            bp[i] = std::max(b[i], 0);
            bm[i] = std::max(-b[i], 0);
        }
        AffineOp op;
        if (is_zero_weight(bm)) {
            op = dominant_translation_op(bp);
        } else if (is_zero_weight(bp)) {
            op = dominant_translation_inv_op(bm);
        } else {
            op = compose(dominant_translation_op(bp), dominant_translation_inv_op(bm));
        }
        return y_cache_.emplace(b, std::move(op)).first->second;
    }

    /**
     * L_f = [f(Y_1,...,Y_n)]_dagger for W-invariant f given in the m-basis:
     * each m_b contributes sum over c in W(b) of Y_{-c}.  With `bar` set the
     * contribution is Y_{+c} instead (f replaced by f(x^{-1})).
     */
    AffineOp L(const SymPoly& f, bool bar = false) {
        AffineOp acc;
        for (const auto& [b, coeff] : f.terms()) {
            AffineOp orbit_sum;
            for (const Weight& c : sys_.orbit(b)) orbit_sum += Y(bar ? c : -c);
            orbit_sum.scale(coeff);
            acc += orbit_sum;
        }
        return dagger(acc);
    }

    // L_{m_{b_i}} for a basis coweight (1-indexed), cached.
    const AffineOp& L_basis(int i, bool bar = false) {
        auto key = std::make_pair(i, bar);
        auto it = l_cache_.find(key);
        if (it != l_cache_.end()) return it->second;
        SymPoly f;
        Weight bi(static_cast<size_t>(sys_.rank()), 0);
        bi[static_cast<size_t>(i - 1)] = 1;
        f.add_term(bi, RatFunc(Rat(1)));
        return l_cache_.emplace(key, L(f, bar)).first->second;
    }

private:
    AffineOp dominant_translation_op(const Weight& b) {
        if (is_zero_weight(b)) return AffineOp::identity(sys_);
        auto [r, word] = sys_.aff_reduced_word(sys_.aff_translation(b));
        AffineOp op = pi(r);
        for (int j : word) op = compose(op, T(j));
        return op;
    }
    AffineOp dominant_translation_inv_op(const Weight& b) {
        if (is_zero_weight(b)) return AffineOp::identity(sys_);
        auto [r, word] = sys_.aff_reduced_word(sys_.aff_translation(b));
        AffineOp op;
        bool started = false;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (!started) {
                op = Tinv(*it);
                started = true;
            } else {
                op = compose(op, Tinv(*it));
            }
        }
        AffineOp pinv = pi_inv(r);
        return started ? compose(op, pinv) : pinv;
    }

    const RootSystem& sys_;
    ParamSymbols sym_;
    MacParams params_;
    std::map<int, AffineOp> t_cache_;
    std::map<int, AffineOp> tinv_cache_;
    std::map<Weight, AffineOp> y_cache_;
    std::map<std::pair<int, bool>, AffineOp> l_cache_;
};

}  // namespace macjack

#endif

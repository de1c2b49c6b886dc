#ifndef MACJACK_SYMFUN_HPP
#define MACJACK_SYMFUN_HPP

#include <map>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "rootdata.hpp"

namespace macjack {

/**
 * W-invariant Laurent polynomial expanded in the monomial symmetric basis
 * m_b = sum_{c in W(b)} x_{-c}  (note the sign of c).  Keys are dominant
 * weights.
 */
class SymPoly {
public:
    using TermMap = std::map<Weight, RatFunc>;

    SymPoly() = default;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const RatFunc& coeff(const Weight& b) const {
        static const RatFunc zero;
        auto it = terms_.find(b);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const Weight& b, const RatFunc& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymPoly& operator+=(const SymPoly& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    SymPoly& operator-=(const SymPoly& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    SymPoly& scale(const RatFunc& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, coeff] : terms_) coeff *= c;
        return *this;
    }
    friend SymPoly operator*(const RatFunc& c, SymPoly p) { return p.scale(c); }
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }

    bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    SymPoly map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const {
        SymPoly r;
        for (const auto& [b, c] : terms_) r.add_term(b, fn(c));
        return r;
    }

private:
    TermMap terms_;
};

// m_b = sum over the W-orbit of b of x_{-c}.
inline LaurentPoly monomial_symmetric(const RootSystem& sys, const Weight& b) {
    if (!sys.is_dominant(b)) throw error("monomial_symmetric needs a dominant weight");
    LaurentPoly f(sys.rank());
    for (const Weight& c : sys.orbit(b)) f.add_term(xexp_of_weight(-c), RatFunc(Rat(1)));
    return f;
}

inline LaurentPoly expand(const RootSystem& sys, const SymPoly& s) {
    LaurentPoly f(sys.rank());
    for (const auto& [b, c] : s.terms()) f += c * monomial_symmetric(sys, b);
    return f;
}

enum class SymmetryType { symmetric, antisymmetric, neither };

// Classifies f under the finite simple reflections s_1..s_n.
inline SymmetryType symmetry_type(const RootSystem& sys, const LaurentPoly& f) {
    bool sym = true, anti = true;
    for (int i = 0; i < sys.rank() && (sym || anti); ++i) {
        LaurentPoly g = f.weyl_apply(sys, sys.weyl_simple(i));
        if (g != f) sym = false;
        LaurentPoly mf = -f;
        if (g != mf) anti = false;
    }
    if (sym) return SymmetryType::symmetric;
    if (anti) return SymmetryType::antisymmetric;
    return SymmetryType::neither;
}

/**
 * Exact expansion of a W-invariant Laurent polynomial in the m-basis.
 * Throws invariance_error (with a witness reflection index) when f is not
 * invariant.  Works on lattice exponents only; half-lattice support cannot
 * be W-invariant with our orbit sums and is rejected the same way.
 */
inline SymPoly to_m_basis(const RootSystem& sys, const LaurentPoly& f) {
    for (int i = 0; i < sys.rank(); ++i) {
        if (f.weyl_apply(sys, sys.weyl_simple(i)) != f)
            throw invariance_error("polynomial is not W-invariant", i + 1);
    }
    SymPoly out;
    LaurentPoly rem = f;
    while (!rem.is_zero()) {
        // Take any remaining exponent; its negative's dominant representative
        // labels the orbit sum it belongs to.
        const auto& [e, c] = *rem.terms().rbegin();
        Weight w(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] % kDx != 0)
                throw invariance_error("half-lattice exponent in symmetric expansion", 0);
            w[i] = -e[i] / kDx;
        }
        Weight b = sys.dominant_representative(w);
        RatFunc coeff = c;
        out.add_term(b, coeff);
        rem -= coeff * monomial_symmetric(sys, b);
    }
    return out;
}

}  // namespace macjack

#endif

#ifndef MACJACK_MAC_PARAMS_HPP
#define MACJACK_MAC_PARAMS_HPP

#include <string>
#include <vector>

#include "ratfunc.hpp"
#include "rootdata.hpp"

namespace macjack {

/**
 * Per-length assignment of the Macdonald parameters: either the formal
 * symbol t_nu, or the specialization t_nu = eps^2 q_nu^{k} with a chosen
 * sign eps for the square root t_nu^{1/2} = eps q_nu^{k/2}.
 *
 * q_nu = q^{2/nu}, so a specialization exponent k turns t_nu^{1/2} into
 * eps * q^{k/nu}.
 */
class MacParams {
public:
    struct LengthSpec {
        bool formal = true;
        Rat k;        // t_nu = q_nu^k when not formal
        int eps = 1;  // sign of t_nu^{1/2}
    };

    MacParams() = default;

    static MacParams all_formal(const RootSystem& sys) {
        MacParams p;
        p.spec_.assign(static_cast<size_t>(sys.num_lengths()), LengthSpec{});
        return p;
    }

    // t_nu = q_nu^{k_nu} for every length.
    static MacParams q_powers(const RootSystem& sys, const std::vector<Rat>& ks,
                              const std::vector<int>& eps = {}) {
        MacParams p;
        for (int i = 0; i < sys.num_lengths(); ++i) {
            LengthSpec s;
            s.formal = false;
            s.k = ks[static_cast<size_t>(i)];
            s.eps = eps.empty() ? 1 : eps[static_cast<size_t>(i)];
            p.spec_.push_back(s);
        }
        return p;
    }
    static MacParams q_power(const RootSystem& sys, const Rat& k) {
        return q_powers(sys, std::vector<Rat>(static_cast<size_t>(sys.num_lengths()), k));
    }

    const LengthSpec& spec(int length_idx) const { return spec_[static_cast<size_t>(length_idx)]; }
    int num_lengths() const { return static_cast<int>(spec_.size()); }
    bool any_formal() const {
        for (const auto& s : spec_)
            if (s.formal) return true;
        return false;
    }
    bool all_integer_k() const {
        for (const auto& s : spec_)
            if (s.formal || !is_integer(s.k) || s.k < 0) return false;
        return true;
    }

    // t_nu^{1/2} as a RatFunc over the given symbols.
    RatFunc t_half(const RootSystem& sys, const ParamSymbols& sym, int length_idx) const {
        const LengthSpec& s = spec(length_idx);
        if (s.formal) return RatFunc(ParamPoly::variable(sym.var_U(length_idx)));
        Rat qexp = s.k / sys.lengths()[static_cast<size_t>(length_idx)];  // k * (2/nu) / 2
        RatFunc r = RatFunc(Rat(s.eps)).times_q_power(sym, qexp);
        return r;
    }

    RatFunc t_half_pow(const RootSystem& sys, const ParamSymbols& sym, int length_idx,
                       long e) const {
        return t_half(sys, sym, length_idx).pow(e);
    }

    // t_nu as a RatFunc (sign squares away).
    RatFunc t_full(const RootSystem& sys, const ParamSymbols& sym, int length_idx) const {
        return t_half_pow(sys, sym, length_idx, 2);
    }

    // Shifted parameters t_nu -> t_nu q_nu (the tq_v twist for v = nu_R).
    MacParams shifted_by_q(const RootSystem& /*sys*/) const {
        MacParams p = *this;
        for (auto& s : p.spec_)
            if (!s.formal) s.k += 1;
        return p;
    }
    bool needs_symbol_shift() const { return any_formal(); }

    // Substitution data for re-specializing formal-t objects: U_i -> U_i * V^{dv}
    // with dv = D_q / nu_i (that is, t_nu -> t_nu q_nu on symbols).
    std::vector<std::pair<int, long>> symbol_shift_data(const RootSystem& sys,
                                                        const ParamSymbols& sym) const {
        std::vector<std::pair<int, long>> out;
        for (int i = 0; i < sys.num_lengths(); ++i) {
            Rat dv = Rat(sym.dq()) / sys.lengths()[static_cast<size_t>(i)];
            out.emplace_back(sym.var_U(i), to_long(dv));
        }
        return out;
    }

    // Specialization data (var, V-exponent) and signs for RatFunc::specialize_t.
    void specialization_data(const RootSystem& sys, const ParamSymbols& sym,
                             std::vector<std::pair<int, long>>& u_to_v,
                             std::vector<int>& eps) const {
        u_to_v.clear();
        eps.clear();
        for (int i = 0; i < num_lengths(); ++i) {
            const LengthSpec& s = spec(i);
            if (s.formal) continue;
            Rat qexp = s.k / sys.lengths()[static_cast<size_t>(i)];
            u_to_v.emplace_back(sym.var_U(i), sym.v_exponent_of_q_power(qexp));
            eps.push_back(s.eps);
        }
    }

    std::string to_string(const RootSystem& sys) const {
        std::string out;
        for (int i = 0; i < num_lengths(); ++i) {
            if (i) out += ";";
            const LengthSpec& s = spec(i);
            if (s.formal) {
                out += "formal";
            } else {
                if (s.eps < 0) out += "-";
                out += "q^" + s.k.get_str();
            }
        }
        (void)sys;
        return out;
    }

private:
    std::vector<LengthSpec> spec_;
};

}  // namespace macjack

#endif

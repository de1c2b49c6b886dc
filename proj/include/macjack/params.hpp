#ifndef MACJACK_PARAMS_HPP
#define MACJACK_PARAMS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace macjack {

// Hard cap on the number of parameter symbols: V, at most two U_nu, at most
// two K_nu (rank <= 2 systems carry at most two root lengths).
inline constexpr int kMaxParamVars = 6;

using PExp = std::array<int16_t, kMaxParamVars>;

inline PExp zero_pexp() {
    PExp e{};
    e.fill(0);
    return e;
}

/**
 * The parameter alphabet of one computation.
 *
 * Fixed symbol order: V first, then one U_nu per root length (nu descending),
 * then one K_nu per root length when the Jack side runs in formal-k mode.
 *
 *   q      = V^{D_q}           (D_q even, divisible by 2m)
 *   t_nu   = U_nu^2            (U_nu = t_nu^{1/2})
 *   k_nu   = K_nu
 *
 * The fractional q-powers the affine action and the specializations
 * t_nu = q_nu^{k + 1/2} produce are all integral powers of V once
 * D_q = 4m, which is the default.
 */
class ParamSymbols {
public:
    ParamSymbols() = default;

    ParamSymbols(int q_root_denominator, std::vector<Rat> lengths, bool with_jack_symbols = false)
        : dq_(q_root_denominator), lengths_(std::move(lengths)), jack_(with_jack_symbols) {
        if (dq_ <= 0 || dq_ % 2 != 0)
            throw lattice_error("q-root denominator D_q must be a positive even integer");
        if (static_cast<int>(lengths_.size()) > 2)
            throw lattice_error("at most two root lengths are supported");
    }

    int dq() const { return dq_; }
    int num_lengths() const { return static_cast<int>(lengths_.size()); }
    bool has_jack_symbols() const { return jack_; }
    const std::vector<Rat>& lengths() const { return lengths_; }

    int num_vars() const { return 1 + num_lengths() * (jack_ ? 2 : 1); }

    int var_V() const { return 0; }
    int var_U(int length_index) const { return 1 + length_index; }
    int var_K(int length_index) const {
        if (!jack_) throw lattice_error("no Jack symbols in this parameter context");
        return 1 + num_lengths() + length_index;
    }

    // Exponent of V representing q^e; throws when e is not representable.
    long v_exponent_of_q_power(const Rat& e) const {
        Rat scaled = e * dq_;
        if (!is_integer(scaled))
            throw lattice_error("q-power " + e.get_str() + " is not representable with D_q = " +
                                std::to_string(dq_));
        return to_long(scaled);
    }

    std::string var_name(int v) const {
        if (v == 0) return "V";
        int nl = num_lengths();
        if (v <= nl) return nl == 1 ? std::string("u") : "u" + std::to_string(v);
        return nl == 1 ? std::string("K") : "K" + std::to_string(v - nl);
    }

    bool operator==(const ParamSymbols& o) const {
        return dq_ == o.dq_ && lengths_ == o.lengths_ && jack_ == o.jack_;
    }

private:
    int dq_ = 2;
    std::vector<Rat> lengths_;  // nu values, descending
    bool jack_ = false;
};

}  // namespace macjack

#endif

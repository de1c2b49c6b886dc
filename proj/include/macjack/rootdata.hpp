#ifndef MACJACK_ROOTDATA_HPP
#define MACJACK_ROOTDATA_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "params.hpp"
#include "rational.hpp"

namespace macjack {

// Element of the coweight lattice B, in coordinates w.r.t. the basis b_1..b_n.
// The i-th coordinate of z is the pairing (z, alpha_i).
using Weight = std::vector<int>;

// Exponent vector of an x-monomial: coordinates in the b-basis scaled by
// D_x = 2, so half-coweights stay integral.
using XExp = std::vector<int>;

inline constexpr int kDx = 2;

inline XExp xexp_of_weight(const Weight& w) {
    XExp e(w.size());
    for (size_t i = 0; i < w.size(); ++i) e[i] = kDx * w[i];
    return e;
}

inline Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Weight operator-(const Weight& a) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline bool is_zero_weight(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int c) { return c == 0; });
}

// A root, carried in every coordinate system we need.
struct Root {
    std::vector<Rat> bcoords;   // b-basis coordinates of alpha
    Weight coroot;              // b-basis coordinates of alpha^vee (integral)
    std::vector<int> scoords;   // coefficients of alpha in the simple-root basis
    Rat nu;                     // (alpha, alpha)
    bool positive = false;
};

// Extended affine Weyl group element in the canonical form  translation *
// finite part:  w-hat = b' w.  Composition and inversion follow from
// (b1' w1)(b2' w2) = (b1 + w1 b2)' (w1 w2).
struct ExtAffine {
    Weight shift;
    int w = 0;  // index into the Weyl element table
};

// Affine root [alpha, k]: root index plus integral level.
struct AffineRoot {
    int root = 0;
    long k = 0;
};

/**
 * Cartan data, Weyl group, lattices and the affine bookkeeping for one
 * reduced root system.  Everything is enumerated exactly at construction;
 * the object is immutable afterwards and safe to share between threads.
 *
 * Supported labels: A1, A2, B2 (alias C2), G2.
 */
class RootSystem {
public:
    explicit RootSystem(const std::string& label) { build(label); }

    const std::string& label() const { return label_; }
    int rank() const { return n_; }
    int lattice_index_m() const { return m_; }
    const std::vector<Rat>& lengths() const { return lengths_; }
    int num_lengths() const { return static_cast<int>(lengths_.size()); }
    int length_index(const Rat& nu) const {
        for (int i = 0; i < num_lengths(); ++i)
            if (lengths_[static_cast<size_t>(i)] == nu) return i;
        throw error("unknown root length");
    }
    int length_index_of_simple(int j) const {
        // j = 0 refers to the affine node alpha_0, whose gradient is -theta.
        return j == 0 ? length_index(Rat(2)) : length_index(nu_[static_cast<size_t>(j - 1)]);
    }

    ParamSymbols make_symbols(bool with_jack = false) const {
        return ParamSymbols(4 * m_, lengths_, with_jack);
    }

    // ---- pairings -----------------------------------------------------------

    // (z, z') for z, z' given in b-coordinates.
    Rat pair(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
        Rat s(0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s += a[static_cast<size_t>(i)] * gram(i, j) * b[static_cast<size_t>(j)];
        return s;
    }
    Rat pair(const Weight& a, const Weight& b) const { return pair(to_rat(a), to_rat(b)); }
    Rat pair(const Weight& a, const std::vector<Rat>& b) const { return pair(to_rat(a), b); }

    // (z, alpha) for a coweight-side vector z and a root alpha: the sum of
    // z's coordinates against alpha's simple-basis coefficients.
    Rat pair_with_root(const std::vector<Rat>& z, int root_idx) const {
        const Root& r = roots_[static_cast<size_t>(root_idx)];
        Rat s(0);
        for (int i = 0; i < n_; ++i) s += z[static_cast<size_t>(i)] * r.scoords[static_cast<size_t>(i)];
        return s;
    }
    long pair_with_root(const Weight& z, int root_idx) const {
        const Root& r = roots_[static_cast<size_t>(root_idx)];
        long s = 0;
        for (int i = 0; i < n_; ++i) s += static_cast<long>(z[static_cast<size_t>(i)]) * r.scoords[static_cast<size_t>(i)];
        return s;
    }

    // Pairing of an exponent vector (half-coweights) with a lattice weight.
    Rat pair_xexp(const XExp& e, const Weight& b) const {
        return pair(xexp_to_rat(e), to_rat(b));
    }

    static std::vector<Rat> xexp_to_rat(const XExp& e) {
        std::vector<Rat> z(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            z[i] = Rat(e[i], kDx);
            z[i].canonicalize();
        }
        return z;
    }

    Rat gram(int i, int j) const { return gram_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    // ---- roots and distinguished vectors ------------------------------------

    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<int>& positive_coroots() const { return positive_roots_; }
    int num_positive() const { return static_cast<int>(positive_roots_.size()); }
    const Root& root(int idx) const { return roots_[static_cast<size_t>(idx)]; }
    int theta() const { return theta_; }  // index of the highest root
    const Weight& theta_coroot() const { return roots_[static_cast<size_t>(theta_)].coroot; }

    Weight coroot_of_simple(int i) const {  // a_i in b-coordinates
        Weight a(static_cast<size_t>(n_));
        for (int j = 0; j < n_; ++j) a[static_cast<size_t>(j)] = cartan_[static_cast<size_t>(j)][static_cast<size_t>(i)];
        return a;
    }
    Rat nu_simple(int i) const { return nu_[static_cast<size_t>(i)]; }

    // r_nu = sum of b_i over simple roots of length nu.
    Weight r_nu(int length_idx) const {
        Weight r(static_cast<size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            if (length_index(nu_[static_cast<size_t>(i)]) == length_idx) r[static_cast<size_t>(i)] = 1;
        return r;
    }
    // rho_nu = (nu/2) r_nu, in rational b-coordinates.
    std::vector<Rat> rho_nu(int length_idx) const {
        Weight r = r_nu(length_idx);
        std::vector<Rat> res(static_cast<size_t>(n_));
        Rat half_nu = lengths_[static_cast<size_t>(length_idx)] / 2;
        for (int i = 0; i < n_; ++i) res[static_cast<size_t>(i)] = half_nu * r[static_cast<size_t>(i)];
        return res;
    }
    // rho = sum over lengths of rho_nu (the half-sum of positive roots).
    std::vector<Rat> rho() const {
        std::vector<Rat> res(static_cast<size_t>(n_), Rat(0));
        for (int l = 0; l < num_lengths(); ++l) {
            auto r = rho_nu(l);
            for (int i = 0; i < n_; ++i) res[static_cast<size_t>(i)] += r[static_cast<size_t>(i)];
        }
        return res;
    }

    // ---- Weyl group ----------------------------------------------------------

    int weyl_order() const { return static_cast<int>(weyl_.size()); }
    int weyl_identity() const { return 0; }
    int weyl_simple(int i) const { return simple_elt_[static_cast<size_t>(i)]; }
    int weyl_mult(int a, int b) const { return mult_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int weyl_inverse(int a) const { return inv_[static_cast<size_t>(a)]; }
    int weyl_length(int a) const { return static_cast<int>(word_[static_cast<size_t>(a)].size()); }
    const std::vector<int>& weyl_word(int a) const { return word_[static_cast<size_t>(a)]; }
    int longest_element() const { return w0_; }

    Weight weyl_act(int a, const Weight& v) const { return mat_apply(weyl_[static_cast<size_t>(a)], v); }
    XExp weyl_act_x(int a, const XExp& v) const { return mat_apply(weyl_[static_cast<size_t>(a)], v); }
    std::vector<Rat> weyl_act(int a, const std::vector<Rat>& v) const {
        return mat_apply_rat(weyl_[static_cast<size_t>(a)], v);
    }
    // Image of a root under a Weyl element, as a root index.
    int weyl_act_root(int a, int root_idx) const {
        return root_action_[static_cast<size_t>(a)][static_cast<size_t>(root_idx)];
    }

    bool is_dominant(const Weight& w) const {
        return std::all_of(w.begin(), w.end(), [](int c) { return c >= 0; });
    }

    Weight dominant_representative(const Weight& w) const {
        Weight v = w;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i < n_; ++i)
                if (v[static_cast<size_t>(i)] < 0) {
                    v = weyl_act(weyl_simple(i), v);
                    moved = true;
                }
        }
        return v;
    }

    std::vector<Weight> orbit(const Weight& w) const {
        std::set<Weight> seen;
        for (int a = 0; a < weyl_order(); ++a) seen.insert(weyl_act(a, w));
        return {seen.begin(), seen.end()};
    }

    // ---- dominance order -----------------------------------------------------

    // Writes b - c in the coroot basis; empty result when not in the lattice.
    bool in_positive_coroot_cone(const Weight& d, std::vector<long>* coeffs = nullptr) const {
        // In b-coordinates d = A n (the coroot a_i is column i of A), so
        // n = A^{-1} d.
        std::vector<Rat> nr(static_cast<size_t>(n_), Rat(0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                nr[static_cast<size_t>(i)] += cartan_inv_[static_cast<size_t>(i)][static_cast<size_t>(j)] * d[static_cast<size_t>(j)];
        std::vector<long> n(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            if (!is_integer(nr[static_cast<size_t>(i)]) || nr[static_cast<size_t>(i)] < 0) return false;
            n[static_cast<size_t>(i)] = to_long(nr[static_cast<size_t>(i)]);
        }
        if (coeffs) *coeffs = n;
        return true;
    }

    // c strictly below b in the dominance order (both dominant).
    bool dominance_less(const Weight& c, const Weight& b) const {
        if (!is_dominant(c) || !is_dominant(b))
            throw error("dominance order is defined on dominant weights only");
        if (c == b) return false;
        return in_positive_coroot_cone(b - c);
    }

    /**
     * All dominant c with c = b or c < b, ordered so that every weight
     * appears after all weights strictly below it (b itself comes last).
     * Tie-break inside one dominance level: lexicographic b-coordinates.
     */
    std::vector<Weight> lower_cone(const Weight& b) const {
        if (!is_dominant(b)) throw error("lower_cone needs a dominant weight");
        Rat height = pair(to_rat(b), rho());
        long budget = static_cast<long>(mpz_class(height.get_num() / height.get_den()).get_si());
        std::vector<std::pair<long, Weight>> found;
        std::vector<long> nvec(static_cast<size_t>(n_), 0);
        enumerate_cone(b, nvec, 0, budget, found);
        std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first > y.first;  // deeper below b first
            return x.second < y.second;
        });
        std::vector<Weight> cone;
        cone.reserve(found.size());
        for (auto& [depth, w] : found) cone.push_back(std::move(w));
        return cone;
    }

    // ---- extended affine Weyl group ------------------------------------------

    ExtAffine aff_identity() const { return ExtAffine{Weight(static_cast<size_t>(n_), 0), weyl_identity()}; }

    ExtAffine aff_translation(const Weight& b) const { return ExtAffine{b, weyl_identity()}; }

    // s_j as an extended affine element; s_0 = theta^vee' s_theta.
    ExtAffine aff_simple(int j) const {
        if (j == 0) return ExtAffine{theta_coroot(), stheta_};
        return ExtAffine{Weight(static_cast<size_t>(n_), 0), weyl_simple(j - 1)};
    }

    ExtAffine aff_compose(const ExtAffine& a, const ExtAffine& b) const {
        return ExtAffine{a.shift + weyl_act(a.w, b.shift), weyl_mult(a.w, b.w)};
    }

    ExtAffine aff_inverse(const ExtAffine& a) const {
        int wi = weyl_inverse(a.w);
        return ExtAffine{-weyl_act(wi, a.shift), wi};
    }

    bool aff_equal(const ExtAffine& a, const ExtAffine& b) const {
        return a.w == b.w && a.shift == b.shift;
    }

    // Action on an affine root:  (c'w)([alpha,k]) = [w(alpha), k - (w(alpha), c)].
    AffineRoot aff_act_root(const ExtAffine& g, const AffineRoot& ar) const {
        int im = weyl_act_root(g.w, ar.root);
        return AffineRoot{im, ar.k - pair_with_root(g.shift, im)};
    }

    static bool affine_root_negative(const RootSystem& sys, const AffineRoot& ar) {
        if (ar.k != 0) return ar.k < 0;
        return !sys.roots_[static_cast<size_t>(ar.root)].positive;
    }

    // The affine simple root alpha_j ([alpha_j, 0] for j >= 1, [-theta, 1] for j = 0).
    AffineRoot affine_simple_root(int j) const {
        if (j == 0) return AffineRoot{negative_of_[static_cast<size_t>(theta_)], 1};
        return AffineRoot{simple_root_idx_[static_cast<size_t>(j - 1)], 0};
    }

    /**
     * Action on an x-monomial exponent: returns the transformed exponent and
     * the accumulated q-power, following  w-hat(x_{[b,k]}) = x_{w-hat([b,k])}
     * with a shift c acting by  x_e -> x_e q^{-(c,e)}.
     */
    std::pair<XExp, Rat> aff_act_xexp(const ExtAffine& g, const XExp& e) const {
        XExp we = weyl_act_x(g.w, e);
        Rat qpow = -pair_xexp(we, g.shift);
        return {we, qpow};
    }

    // Length = number of positive affine roots sent to negative ones.
    int aff_length(const ExtAffine& g) const {
        int len = 0;
        for (int r = 0; r < static_cast<int>(roots_.size()); ++r) {
            long bound = 0;
            int im = weyl_act_root(g.w, r);
            long p = pair_with_root(g.shift, im);
            bound = std::max(std::abs(p) + 1, 2L);
            long k0 = roots_[static_cast<size_t>(r)].positive ? 0 : 1;
            for (long k = k0; k <= bound; ++k) {
                AffineRoot image{im, k - p};
                if (affine_root_negative(*this, image)) ++len;
            }
        }
        return len;
    }

    /**
     * Greedy reduced word:  w-hat = pi_r s_{j_1} s_{j_2} ... s_{j_l} with
     * l = length(w-hat).  Returns r in O and the letters in composition
     * order, so re-composing pi_r * s_{j_1} * ... reproduces the element.
     */
    std::pair<int, std::vector<int>> aff_reduced_word(const ExtAffine& g) const {
        ExtAffine cur = g;
        std::vector<int> letters;
        int len = aff_length(cur);
        while (len > 0) {
            bool found = false;
            for (int j = 0; j <= n_; ++j) {
                AffineRoot aj = affine_simple_root(j);
                if (affine_root_negative(*this, aff_act_root(cur, aj))) {
                    cur = aff_compose(cur, aff_simple(j));
                    letters.push_back(j);
                    --len;
                    found = true;
                    break;
                }
            }
            if (!found) throw error("no descent found; length bookkeeping is broken");
        }
        std::reverse(letters.begin(), letters.end());
        // cur now has length zero: it must be one of the pi_r.
        for (int r : omega_) {
            if (aff_equal(cur, aff_pi(r))) return {r, letters};
        }
        throw error("length-zero element is not a diagram rotation");
    }

    // ---- Pi = length-zero elements -------------------------------------------

    const std::vector<int>& pi_indices() const { return omega_; }  // O (0 included)

    // pi_r = b_r' * omega_r^{-1}; pi_0 = identity.
    ExtAffine aff_pi(int r) const {
        if (r == 0) return aff_identity();
        Weight br(static_cast<size_t>(n_), 0);
        br[static_cast<size_t>(r - 1)] = 1;
        return ExtAffine{br, weyl_inverse(omega_elt_.at(r))};
    }

    // omega_r = w0 * w0^+ (longest element times longest stabilizer element).
    int omega_r(int r) const { return omega_elt_.at(r); }

private:
    static std::vector<Rat> to_rat(const Weight& w) {
        std::vector<Rat> r(w.size());
        for (size_t i = 0; i < w.size(); ++i) r[i] = Rat(w[i]);
        return r;
    }

    using IMat = std::vector<std::vector<int>>;

    static Weight mat_apply(const IMat& m, const Weight& v) {
        size_t n = v.size();
        Weight r(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
        return r;
    }
    static std::vector<Rat> mat_apply_rat(const IMat& m, const std::vector<Rat>& v) {
        size_t n = v.size();
        std::vector<Rat> r(n, Rat(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) r[i] += Rat(m[i][j]) * v[j];
        return r;
    }

    void build(const std::string& label) {
        label_ = label;
        if (label == "A1") {
            n_ = 1;
            cartan_ = {{2}};
            nu_ = {Rat(2)};
        } else if (label == "A2") {
            n_ = 2;
            cartan_ = {{2, -1}, {-1, 2}};
            nu_ = {Rat(2), Rat(2)};
        } else if (label == "B2" || label == "C2") {
            label_ = "B2";
            n_ = 2;
            cartan_ = {{2, -2}, {-1, 2}};
            nu_ = {Rat(2), Rat(1)};
        } else if (label == "G2") {
            n_ = 2;
            cartan_ = {{2, -3}, {-1, 2}};
            nu_ = {Rat(2), Rat(2, 3)};
        } else {
            throw unknown_label_error("unknown root system label '" + label + "'");
        }

        // Distinct lengths, descending.
        for (const Rat& nu : nu_)
            if (std::find(lengths_.begin(), lengths_.end(), nu) == lengths_.end())
                lengths_.push_back(nu);
        std::sort(lengths_.begin(), lengths_.end(), std::greater<Rat>());

        build_gram();
        build_weyl();
        build_roots();
        build_pi();

        // Lattice index constant m (the q-power grid of the affine action).
        if (label_ == "B2")
            m_ = 1;  // B_k / C_{2k} row of the table
        else
            m_ = static_cast<int>(omega_.size());  // |Pi| = |B/A| otherwise
    }

    void build_gram() {
        // C = (A^{-1})^T gives b_i = sum_k C_{ik} a_k; then
        // (b_i, b_j) = C_{ji} * (2/nu_i).
        std::vector<std::vector<Rat>> ainv(static_cast<size_t>(n_), std::vector<Rat>(static_cast<size_t>(n_)));
        if (n_ == 1) {
            ainv[0][0] = Rat(1, cartan_[0][0]);
        } else {
            Rat det = Rat(cartan_[0][0]) * cartan_[1][1] - Rat(cartan_[0][1]) * cartan_[1][0];
            ainv[0][0] = Rat(cartan_[1][1]) / det;
            ainv[0][1] = Rat(-cartan_[0][1]) / det;
            ainv[1][0] = Rat(-cartan_[1][0]) / det;
            ainv[1][1] = Rat(cartan_[0][0]) / det;
        }
        cartan_inv_ = ainv;

        gram_.assign(static_cast<size_t>(n_), std::vector<Rat>(static_cast<size_t>(n_)));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Rat c_ji = ainv[static_cast<size_t>(i)][static_cast<size_t>(j)];  // C_{ji} = (A^{-1})_{ij}
                gram_[static_cast<size_t>(i)][static_cast<size_t>(j)] = c_ji * 2 / nu_[static_cast<size_t>(i)];
            }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (gram_[static_cast<size_t>(i)][static_cast<size_t>(j)] != gram_[static_cast<size_t>(j)][static_cast<size_t>(i)])
                    throw error("Gram matrix is not symmetric; Cartan data is wrong");
    }

    void build_weyl() {
        // s_i on b-coordinates: column i of the identity gets - A_{ji}.
        std::vector<IMat> gens;
        for (int i = 0; i < n_; ++i) {
            IMat m(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_), 0));
            for (int j = 0; j < n_; ++j) m[static_cast<size_t>(j)][static_cast<size_t>(j)] = 1;
            for (int j = 0; j < n_; ++j) m[static_cast<size_t>(j)][static_cast<size_t>(i)] -= cartan_[static_cast<size_t>(j)][static_cast<size_t>(i)];
            gens.push_back(std::move(m));
        }
        IMat id(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_), 0));
        for (int j = 0; j < n_; ++j) id[static_cast<size_t>(j)][static_cast<size_t>(j)] = 1;

        weyl_.push_back(id);
        word_.push_back({});
        std::map<IMat, int> index{{id, 0}};
        for (size_t head = 0; head < weyl_.size(); ++head) {
            IMat cur = weyl_[head];  // copy: weyl_ may reallocate below
            for (int i = 0; i < n_; ++i) {
                IMat nx(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_), 0));
                // nx = cur * s_i  (append generator on the right)
                for (int r = 0; r < n_; ++r)
                    for (int c = 0; c < n_; ++c)
                        for (int k = 0; k < n_; ++k)
                            nx[static_cast<size_t>(r)][static_cast<size_t>(c)] += cur[static_cast<size_t>(r)][static_cast<size_t>(k)] * gens[static_cast<size_t>(i)][static_cast<size_t>(k)][static_cast<size_t>(c)];
                if (index.emplace(nx, static_cast<int>(weyl_.size())).second) {
                    std::vector<int> w = word_[head];
                    w.push_back(i);
                    weyl_.push_back(nx);
                    word_.push_back(std::move(w));
                }
            }
        }

        simple_elt_.resize(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) simple_elt_[static_cast<size_t>(i)] = index.at(gens[static_cast<size_t>(i)]);

        int order = weyl_order();
        mult_.assign(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b) {
                IMat prod(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_), 0));
                for (int r = 0; r < n_; ++r)
                    for (int c = 0; c < n_; ++c)
                        for (int k = 0; k < n_; ++k)
                            prod[static_cast<size_t>(r)][static_cast<size_t>(c)] += weyl_[static_cast<size_t>(a)][static_cast<size_t>(r)][static_cast<size_t>(k)] * weyl_[static_cast<size_t>(b)][static_cast<size_t>(k)][static_cast<size_t>(c)];
                mult_[static_cast<size_t>(a)][static_cast<size_t>(b)] = index.at(prod);
            }
        inv_.resize(static_cast<size_t>(order));
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                if (mult_[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0) inv_[static_cast<size_t>(a)] = b;

        w0_ = 0;
        for (int a = 0; a < order; ++a)
            if (weyl_length(a) > weyl_length(w0_)) w0_ = a;
    }

    void build_roots() {
        // Orbit closure of the simple roots, tracked in b-coordinates.
        std::map<std::vector<Rat>, int> seen;
        std::vector<std::vector<Rat>> queue;
        for (int i = 0; i < n_; ++i) {
            std::vector<Rat> alpha(static_cast<size_t>(n_));
            for (int j = 0; j < n_; ++j)
                alpha[static_cast<size_t>(j)] = Rat(cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]) * nu_[static_cast<size_t>(j)] / 2;
            // (alpha_i, alpha_j) = A_{ij} nu_j / 2
            if (seen.emplace(alpha, static_cast<int>(queue.size())).second) queue.push_back(alpha);
        }
        for (size_t head = 0; head < queue.size(); ++head)
            for (int i = 0; i < n_; ++i) {
                auto img = mat_apply_rat(weyl_[static_cast<size_t>(simple_elt_[static_cast<size_t>(i)])], queue[head]);
                if (seen.emplace(img, static_cast<int>(queue.size())).second) queue.push_back(img);
            }

        for (const auto& bc : queue) {
            Root r;
            r.bcoords = bc;
            // simple-basis coefficients: solve kappa_j = sum_k m_k (alpha_k, alpha_j)
            // with (alpha_k, alpha_j) = A_{kj} nu_j / 2; kappa_j = bc[j].
            // Equivalent: m = bc * S^{-1} with S_{kj} = A_{kj} nu_j/2.  For
            // rank <= 2 solve directly.
            std::vector<Rat> m(static_cast<size_t>(n_));
            if (n_ == 1) {
                m[0] = bc[0] / nu_[0];
            } else {
                Rat s00 = Rat(cartan_[0][0]) * nu_[0] / 2, s01 = Rat(cartan_[0][1]) * nu_[1] / 2;
                Rat s10 = Rat(cartan_[1][0]) * nu_[0] / 2, s11 = Rat(cartan_[1][1]) * nu_[1] / 2;
                Rat det = s00 * s11 - s01 * s10;
                // bc = m * S (row vector times matrix): solve transposed system.
                m[0] = (bc[0] * s11 - bc[1] * s10) / det;
                m[1] = (bc[1] * s00 - bc[0] * s01) / det;
            }
            r.scoords.resize(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i) r.scoords[static_cast<size_t>(i)] = static_cast<int>(to_long(m[static_cast<size_t>(i)]));
            r.nu = pair(bc, bc);
            r.coroot.resize(static_cast<size_t>(n_));
            for (int j = 0; j < n_; ++j) {
                Rat c = bc[static_cast<size_t>(j)] * 2 / r.nu;
                r.coroot[static_cast<size_t>(j)] = static_cast<int>(to_long(c));
            }
            bool pos = true, neg = true;
            for (int i = 0; i < n_; ++i) {
                if (r.scoords[static_cast<size_t>(i)] > 0) neg = false;
                if (r.scoords[static_cast<size_t>(i)] < 0) pos = false;
            }
            if (pos == neg) throw error("root with mixed-sign simple coefficients");
            r.positive = pos;
            roots_.push_back(std::move(r));
        }

        for (int i = 0; i < static_cast<int>(roots_.size()); ++i)
            if (roots_[static_cast<size_t>(i)].positive) positive_roots_.push_back(i);

        // index lookups
        std::map<std::vector<Rat>, int> byb;
        for (int i = 0; i < static_cast<int>(roots_.size()); ++i) byb[roots_[static_cast<size_t>(i)].bcoords] = i;
        negative_of_.resize(roots_.size());
        for (int i = 0; i < static_cast<int>(roots_.size()); ++i) {
            std::vector<Rat> neg = roots_[static_cast<size_t>(i)].bcoords;
            for (auto& c : neg) c = -c;
            negative_of_[static_cast<size_t>(i)] = byb.at(neg);
        }
        simple_root_idx_.resize(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            std::vector<Rat> alpha(static_cast<size_t>(n_));
            for (int j = 0; j < n_; ++j)
                alpha[static_cast<size_t>(j)] = Rat(cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]) * nu_[static_cast<size_t>(j)] / 2;
            simple_root_idx_[static_cast<size_t>(i)] = byb.at(alpha);
        }

        root_action_.assign(weyl_.size(), std::vector<int>(roots_.size()));
        for (int a = 0; a < weyl_order(); ++a)
            for (int r = 0; r < static_cast<int>(roots_.size()); ++r)
                root_action_[static_cast<size_t>(a)][static_cast<size_t>(r)] =
                    byb.at(mat_apply_rat(weyl_[static_cast<size_t>(a)], roots_[static_cast<size_t>(r)].bcoords));

        // theta: the dominant long root.
        theta_ = -1;
        for (int i : positive_roots_) {
            const Root& r = roots_[static_cast<size_t>(i)];
            if (r.nu != 2) continue;
            bool dom = std::all_of(r.bcoords.begin(), r.bcoords.end(), [](const Rat& c) { return c >= 0; });
            if (dom) theta_ = i;
        }
        if (theta_ < 0) throw error("no dominant long root found");
        // s_theta as a Weyl element: the reflection that negates theta and
        // fixes its orthogonal complement; find it by action.
        stheta_ = -1;
        for (int a = 0; a < weyl_order(); ++a) {
            if (weyl_act_root(a, theta_) != negative_of_[static_cast<size_t>(theta_)]) continue;
            // reflection in theta: z - (z, theta^vee) theta; test on basis.
            bool ok = true;
            for (int i = 0; i < n_ && ok; ++i) {
                std::vector<Rat> e(static_cast<size_t>(n_), Rat(0));
                e[static_cast<size_t>(i)] = 1;
                auto im = mat_apply_rat(weyl_[static_cast<size_t>(a)], e);
                Rat proj = pair(e, roots_[static_cast<size_t>(theta_)].bcoords) * 2 / roots_[static_cast<size_t>(theta_)].nu;
                for (int j = 0; j < n_ && ok; ++j)
                    if (im[static_cast<size_t>(j)] != e[static_cast<size_t>(j)] - proj * roots_[static_cast<size_t>(theta_)].bcoords[static_cast<size_t>(j)]) ok = false;
            }
            if (ok) {
                stheta_ = a;
                break;
            }
        }
        if (stheta_ < 0) throw error("reflection in theta not found");
    }

    void build_pi() {
        omega_.push_back(0);
        for (int r = 1; r <= n_; ++r) {
            // b_r is minuscule iff every positive root uses alpha_r at most once.
            bool minuscule = true;
            for (int i : positive_roots_)
                if (roots_[static_cast<size_t>(i)].scoords[static_cast<size_t>(r - 1)] > 1) minuscule = false;
            if (!minuscule) continue;
            omega_.push_back(r);
            // omega_r = w0 w0^+ with w0^+ the longest element fixing b_r.
            Weight br(static_cast<size_t>(n_), 0);
            br[static_cast<size_t>(r - 1)] = 1;
            int best = 0;
            for (int a = 0; a < weyl_order(); ++a)
                if (weyl_act(a, br) == br && weyl_length(a) > weyl_length(best)) best = a;
            omega_elt_[r] = weyl_mult(w0_, best);
        }
    }

    void enumerate_cone(const Weight& b, std::vector<long>& nvec, int pos, long budget,
                        std::vector<std::pair<long, Weight>>& out) const {
        if (pos == n_) {
            Weight c = b;
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    c[static_cast<size_t>(j)] -= static_cast<int>(nvec[static_cast<size_t>(i)]) * cartan_[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (is_dominant(c)) {
                long depth = std::accumulate(nvec.begin(), nvec.end(), 0L);
                out.emplace_back(depth, std::move(c));
            }
            return;
        }
        for (long v = 0; v <= budget; ++v) {
            nvec[static_cast<size_t>(pos)] = v;
            enumerate_cone(b, nvec, pos + 1, budget - v, out);
        }
        nvec[static_cast<size_t>(pos)] = 0;
    }

    std::string label_;
    int n_ = 0;
    int m_ = 1;
    IMat cartan_;
    std::vector<Rat> nu_;
    std::vector<Rat> lengths_;
    std::vector<std::vector<Rat>> gram_;
    std::vector<std::vector<Rat>> cartan_inv_;

    std::vector<IMat> weyl_;
    std::vector<std::vector<int>> word_;
    std::vector<int> simple_elt_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
    int w0_ = 0;

    std::vector<Root> roots_;
    std::vector<int> positive_roots_;
    std::vector<int> negative_of_;
    std::vector<int> simple_root_idx_;
    std::vector<std::vector<int>> root_action_;
    int theta_ = -1;
    int stheta_ = -1;

    std::vector<int> omega_;           // O, 0 first
    std::map<int, int> omega_elt_;     // r -> omega_r
};

}  // namespace macjack

#endif

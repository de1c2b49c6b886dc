#ifndef MACJACK_ERRORS_HPP
#define MACJACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace macjack {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by zero, zero denominators and friends.
class arithmetic_error : public error {
public:
    explicit arithmetic_error(const std::string& msg) : error(msg) {}
};

// An exact division that was supposed to succeed did not.  This usually
// signals a broken operator invariant upstream, so the message matters.
class divisibility_error : public error {
public:
    explicit divisibility_error(const std::string& msg) : error(msg) {}
};

// Exponent fell outside the representable lattice (q-root denominator D_q
// or x-denominator D_x exceeded).
class lattice_error : public error {
public:
    explicit lattice_error(const std::string& msg) : error(msg) {}
};

// A parameter specialization made a denominator vanish identically.
class singular_specialization_error : public error {
public:
    explicit singular_specialization_error(const std::string& msg) : error(msg) {}
};

// Input expected to be W-invariant is not; carries a witness reflection.
class invariance_error : public error {
public:
    invariance_error(const std::string& msg, int witness_reflection)
        : error(msg), witness(witness_reflection) {}
    int witness;  // index j of a simple reflection s_j with s_j(f) != f
};

// Triangular eigen-solve hit an eigenvalue collision that no generator
// resolved.
class degenerate_spectrum_error : public error {
public:
    explicit degenerate_spectrum_error(const std::string& msg) : error(msg) {}
};

// Gram matrix of the pairing is singular at the given specialization.
class degenerate_pairing_error : public error {
public:
    explicit degenerate_pairing_error(const std::string& msg) : error(msg) {}
};

class unknown_label_error : public error {
public:
    explicit unknown_label_error(const std::string& msg) : error(msg) {}
};

}  // namespace macjack

#endif

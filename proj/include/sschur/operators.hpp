#pragma once

#include <string>
#include <string_view>

#include "sschur/linear_operator.hpp"

namespace sschur {

// Adjoints of multiplication by e_r and h_r (x_k -> (1/k) d/dx_k).
LinearOperator e_perp(int r);
LinearOperator h_perp(int r);

// Derivation with respect to the odd generator etilde_r of the (e, etilde)
// generating set: (-1)^r sum_s h_s d/dtheta_{r+s+1}.
LinearOperator partial_e_tilde(int r);
// Scalar-product adjoint of partial_e_tilde(r), in closed form:
// (-1)^r sum_s theta_{r+s+1} h_s^perp applied after the parity twist.
LinearOperator partial_e_tilde_perp(int r);

// Formal substitution adjoint of an element f: x_k -> (1/k) d/dx_k and
// theta_k -> d/dtheta_k, keeping factor order. For f of odd parity it differs
// from the scalar-product adjoint by a parity twist applied to the output.
LinearOperator formal_adjoint(const SuperPolynomial& f, const std::string& name);
// Scalar-product adjoint of multiplication by f.
LinearOperator element_adjoint(const SuperPolynomial& f, const std::string& name);

// Creation modes. eps is the fermionic degree added by the mode.
LinearOperator bernstein_B(int n, int eps);
// Expanded double-sum form of B_n^(0).
LinearOperator bernstein_B0_expanded(int n);
LinearOperator bernstein_C(int n, int eps);
// Alternative closed form of C_n^(1) (no composition with an adjoint).
LinearOperator bernstein_C1_alternative(int n);
// Barred modes, defined by conjugation with phi and its adjoint.
LinearOperator bernstein_Bbar(int n, int eps);
LinearOperator bernstein_Cbar(int n, int eps);
// Barred B modes written with h_s(-beta/k) in place of h_s.
LinearOperator bernstein_Bbar_explicit(int n, int eps);

// sum_{r>0} theta_{r+n} d/dtheta_r (n may be negative).
LinearOperator beta(int n);

SuperPolynomial omega(const SuperPolynomial& f);
SuperPolynomial rho(const SuperPolynomial& f);
SuperPolynomial phi(const SuperPolynomial& f);
SuperPolynomial phi_inverse(const SuperPolynomial& f);

const LinearOperator& omega_operator();
const LinearOperator& rho_operator();
const LinearOperator& phi_operator();
const LinearOperator& phi_inverse_operator();

// Blockwise scalar-product adjoints of the automorphisms (shared caches).
const LinearOperator& rho_perp_operator();
const LinearOperator& phi_perp_operator();
const LinearOperator& phi_perp_inverse_operator();
SuperPolynomial rho_perp(const SuperPolynomial& f);
SuperPolynomial phi_perp(const SuperPolynomial& f);
SuperPolynomial phi_perp_inverse(const SuperPolynomial& f);

// Sign attached to the odd negative modes beyond the (-1)^n of the mode
// extraction: a constant or the parity of the input.
enum class OddModeSign { Plus, Minus, InputParity, MinusInputParity };

struct NegativeModeSigns {
  OddModeSign k_odd = OddModeSign::Plus;
  OddModeSign l_odd = OddModeSign::Plus;
};

// The convention used by mode_K/mode_L (see calibrate_negative_mode_signs).
NegativeModeSigns negative_mode_signs();

// Negative modes (intended n <= 0), built from adjoints of B and C conjugated
// by rho^perp and rho respectively.
LinearOperator mode_K(int n, int eps);
LinearOperator mode_L(int n, int eps);
LinearOperator mode_K(int n, int eps, OddModeSign odd_sign);
LinearOperator mode_L(int n, int eps, OddModeSign odd_sign);

// Parses "B4^1 C2^0 Bbar1^1 Cbar0^0 K-1^0 L-2^1 beta2 de0" (applied right to
// left). Throws UnknownOperator or ParseError.
LinearOperator parse_operator_string(std::string_view text);

}  // namespace sschur

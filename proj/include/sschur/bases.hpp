#pragma once

#include "sschur/superalgebra.hpp"
#include "sschur/superpartition.hpp"

namespace sschur {

// theta_{a1+1} ... theta_{am+1} x_{s1} ... in canonical form (with the
// reordering sign of the decreasing theta product).
SuperPolynomial power_sum_basis(const SuperPartition& sp);

// Memoized; negative indices give 0.
const SuperPolynomial& homogeneous(int n);         // h_n
const SuperPolynomial& elementary(int n);          // e_n
const SuperPolynomial& homogeneous_tilde(int n);   // sum_k theta_k h_{n-k+1}
const SuperPolynomial& elementary_tilde(int n);    // sum_k (-1)^(k+1) theta_k e_{n-k+1}

// theta_{a1+1} ... theta_{am+1} h_{s1} h_{s2} ...
SuperPolynomial h_check_basis(const SuperPartition& sp);

}  // namespace sschur

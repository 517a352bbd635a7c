#pragma once

#include <span>
#include <vector>

#include "cumulants/scalar.hpp"
#include "cumulants/series.hpp"
#include "cumulants/set_partitions.hpp"

// Slow reference computations by direct enumeration or series algebra. They
// share no code with the partition transform and exist to certify it.
namespace cumulants::oracle {

/// kappa_i = sum over set partitions pi of {1..i} of
/// (-1)^{|pi|-1} (|pi|-1)! prod_B m_{|B|}. i <= 10.
Scalar classical_cumulant(std::span<const Scalar> m, unsigned i);
/// m_i = sum over set partitions of prod_B kappa_{|B|}. i <= 10.
Scalar classical_moment(std::span<const Scalar> kappa, unsigned i);

/// h_i = sum over compositions (c_1..c_k) of i of (-1)^{k-1} prod a_{c_j}.
Scalar boolean_cumulant(std::span<const Scalar> m, unsigned i);
/// a_i = sum over compositions of i of prod h_{c_j}.
Scalar boolean_moment(std::span<const Scalar> h, unsigned i);

/// m_i = sum over non-crossing partitions of {1..i} of prod_B r_{|B|}. i <= 10.
Scalar free_moment(std::span<const Scalar> r, unsigned i);

/// Whole-sequence series oracles, orders 1..n with n = input length.
std::vector<Scalar> series_classical_cumulants(std::span<const Scalar> m);  // k! [t^k] log EGF
std::vector<Scalar> series_classical_moments(std::span<const Scalar> kappa);
std::vector<Scalar> series_boolean_cumulants(std::span<const Scalar> m);  // H = 1 - 1/M
std::vector<Scalar> series_boolean_moments(std::span<const Scalar> h);    // M = 1/(1 - H)
std::vector<Scalar> series_free_cumulants(std::span<const Scalar> m);     // M = R(tM)
std::vector<Scalar> series_free_moments(std::span<const Scalar> r);

}  // namespace cumulants::oracle

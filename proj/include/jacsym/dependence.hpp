#pragma once

#include "jacsym/pattern.hpp"
#include "jacsym/polymap.hpp"

#include <vector>

namespace jacsym {

/// A constant vector lambda with lambda^t JH = 0; the certificate is the
/// constant value of lambda^t H.
struct DependenceWitness {
    ScalarVector lambda;
    Scalar certificate;
};

/// Full basis of the solution space of lambda^t JH = 0; empty when only the
/// trivial solution exists. Each basis vector is re-verified by exact
/// polynomial multiplication before it is returned.
std::vector<DependenceWitness> solve_dependence(const PolyMap& h);

/// h = g(a x1 - b x2) + (c x1 - d x2) up to an additive constant.
/// g carries no terms of degree <= 1; (a, b) is a primitive integer vector
/// with a > 0 (or a = 0, b > 0), and (0, 0) exactly when the Hessian is zero.
struct PlanarHessianForm {
    Poly g;  // univariate (arity 1)
    Rational a, b, c, d;
};

/// Structure theorem for planar polynomials with singular Hessian.
/// Requires arity 2, rational coefficients and det Hess h = 0.
PlanarHessianForm planar_hessian_decompose(const Poly& h);

/// Rebuild g(a x1 - b x2) + (c x1 - d x2) as a 2-variable polynomial.
Poly planar_hessian_reconstruct(const PlanarHessianForm& form);

/// One-variable padding for the dependence problem: (H, h) with h = x_i^d
/// (smallest i whose unit row is outside the row space of JH) under the
/// det-zero and nilpotent regimes, h = x_{n+1}^d otherwise.
PolyMap nred_pad(const PolyMap& h, int d, Regime regime);

}  // namespace jacsym

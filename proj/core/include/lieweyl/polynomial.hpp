#pragma once

#include <string>

#include "lieweyl/sparse_poly.hpp"

namespace lieweyl {

// Element of S(g): a polynomial in x1..xn.
using Polynomial = SparsePoly;

std::string x_name(int i);
std::string render_polynomial(const Polynomial& f);

Polynomial x_var(int n, int i);
Polynomial x_monomial(int n, const Monomial& m, const Rational& c = 1);

// Standard polynomial coproduct x^e -> sum_k binom(e, k) x^k (x) x^(e-k), as a
// polynomial in 2n variables (left factor first).
SparsePoly polynomial_coproduct(const Polynomial& f);

// All exponent vectors of n variables with total degree exactly d.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace lieweyl

#pragma once

#include <string>
#include <vector>

#include "multbound/algebra.hpp"

namespace multbound {

/*
 * Plain expression grammar for polynomials: terms of the form
 * `c * x^a * y^b` joined by `+` / `-`, rational coefficients `p/q`,
 * negative exponents written `x^-1` or `x^(-1)`. Variable names come
 * from the caller.
 */
LaurentPolynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& variables);

}  // namespace multbound

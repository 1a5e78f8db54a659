#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multbound/numeric.hpp"

namespace multbound {

// Exponent vector in Z^n; entry i is the exponent of variable i.
using Exponents = std::vector<long>;

Exponents exponents_add(const Exponents& a, const Exponents& b);

/*
 * Multivariate Laurent polynomial with exact rational coefficients.
 * The term map never stores a zero coefficient, so the key set is
 * exactly the support. Ordered keys give deterministic iteration and
 * canonical serialization.
 */
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(int dim);

    static LaurentPolynomial zero(int dim) { return LaurentPolynomial(dim); }
    static LaurentPolynomial constant(int dim, const Rational& c);
    static LaurentPolynomial monomial(int dim, const Exponents& exp, const Rational& c);
    static LaurentPolynomial variable(int dim, int index);

    int dimension() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const;  // no negative exponents
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coefficient(const Exponents& exp) const;

    void add_term(const Exponents& exp, const Rational& c);

    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial pow(unsigned e) const;
    LaurentPolynomial scalar_mul(const Rational& c) const;
    bool operator==(const LaurentPolynomial& other) const;
    bool operator!=(const LaurentPolynomial& other) const { return !(*this == other); }

    // max over the support of the coordinate sums; rejects zero and Laurent input
    long total_degree() const;
    // degree in one variable (0 for the zero polynomial)
    long degree_in(int var) const;
    // (max(deg in time var, 1), max(total degree in the other vars, 1))
    std::pair<long, long> mixed_degrees(int time_index) const;

    LaurentPolynomial partial_derivative(int var) const;
    // substitution x -> x + p; defined for non-Laurent polynomials
    LaurentPolynomial shifted(const QVec& p) const;
    // point evaluation; negative exponents require nonzero coordinates
    Rational evaluate(const QVec& p) const;

    std::vector<Exponents> support() const;
    std::string to_expression(const std::vector<std::string>& names) const;

private:
    int dim_;
    std::map<Exponents, Rational> terms_;

    void check_dim(const LaurentPolynomial& other) const;
};

/*
 * Polynomial vector field. With a time index set, the field is in graph
 * form: the time component holds t(z) and the remaining components are
 * the numerators of the dependent equations.
 */
class VectorField {
public:
    VectorField(std::vector<LaurentPolynomial> components,
                std::optional<int> time_index = std::nullopt);

    int dimension() const { return dim_; }
    const std::vector<LaurentPolynomial>& components() const { return components_; }
    const LaurentPolynomial& component(int i) const { return components_[i]; }
    std::optional<int> time_index() const { return time_index_; }

    // max component total degree; requires non-Laurent components, at least one nonzero
    long degree() const;

    LaurentPolynomial lie_derivative(const LaurentPolynomial& p) const;
    LaurentPolynomial iterated_lie(const LaurentPolynomial& p, unsigned k) const;

    QVec evaluate(const QVec& p) const;
    bool singular_at(const QVec& p) const;

private:
    int dim_;
    std::vector<LaurentPolynomial> components_;
    std::optional<int> time_index_;
};

}  // namespace multbound

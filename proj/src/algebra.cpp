#include "multbound/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace multbound {

Exponents exponents_add(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

LaurentPolynomial::LaurentPolynomial(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
}

LaurentPolynomial LaurentPolynomial::constant(int dim, const Rational& c) {
    LaurentPolynomial p(dim);
    p.add_term(Exponents(dim, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(int dim, const Exponents& exp, const Rational& c) {
    LaurentPolynomial p(dim);
    p.add_term(exp, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(int dim, int index) {
    if (index < 0 || index >= dim) throw std::invalid_argument("variable index out of range");
    Exponents e(dim, 0);
    e[index] = 1;
    return monomial(dim, e, Rational(1));
}

bool LaurentPolynomial::is_polynomial() const {
    for (const auto& [exp, c] : terms_)
        for (long e : exp)
            if (e < 0) return false;
    return true;
}

bool LaurentPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

Rational LaurentPolynomial::coefficient(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponents& exp, const Rational& c) {
    if (static_cast<int>(exp.size()) != dim_)
        throw std::invalid_argument("exponent dimension mismatch");
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPolynomial::check_dim(const LaurentPolynomial& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    check_dim(other);
    LaurentPolynomial r = *this;
    for (const auto& [exp, c] : other.terms_) r.add_term(exp, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
    check_dim(other);
    LaurentPolynomial r = *this;
    for (const auto& [exp, c] : other.terms_) r.add_term(exp, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(dim_);
    for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    check_dim(other);
    LaurentPolynomial r(dim_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_)
            r.add_term(exponents_add(ea, eb), ca * cb);
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
    LaurentPolynomial r = constant(dim_, Rational(1));
    LaurentPolynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::scalar_mul(const Rational& c) const {
    LaurentPolynomial r(dim_);
    if (c == 0) return r;
    for (const auto& [exp, coeff] : terms_) r.terms_.emplace(exp, coeff * c);
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& other) const {
    return dim_ == other.dim_ && terms_ == other.terms_;
}

long LaurentPolynomial::total_degree() const {
    if (terms_.empty()) throw std::domain_error("total_degree of the zero polynomial");
    if (!is_polynomial()) throw std::domain_error("total_degree of a Laurent polynomial");
    long best = 0;
    for (const auto& [exp, c] : terms_) {
        long s = 0;
        for (long e : exp) s += e;
        best = std::max(best, s);
    }
    return best;
}

long LaurentPolynomial::degree_in(int var) const {
    if (var < 0 || var >= dim_) throw std::invalid_argument("variable index out of range");
    long best = 0;
    for (const auto& [exp, c] : terms_) best = std::max(best, exp[var]);
    return best;
}

std::pair<long, long> LaurentPolynomial::mixed_degrees(int time_index) const {
    if (time_index < 0 || time_index >= dim_)
        throw std::invalid_argument("invalid time index");
    if (!is_polynomial()) throw std::domain_error("mixed_degrees of a Laurent polynomial");
    long dz = 0, dx = 0;
    for (const auto& [exp, c] : terms_) {
        long s = 0;
        for (int i = 0; i < dim_; ++i)
            if (i != time_index) s += exp[i];
        dz = std::max(dz, exp[time_index]);
        dx = std::max(dx, s);
    }
    return {std::max(dz, 1L), std::max(dx, 1L)};
}

LaurentPolynomial LaurentPolynomial::partial_derivative(int var) const {
    if (var < 0 || var >= dim_) throw std::invalid_argument("variable index out of range");
    LaurentPolynomial r(dim_);
    for (const auto& [exp, c] : terms_) {
        if (exp[var] == 0) continue;
        Exponents e = exp;
        e[var] -= 1;
        r.add_term(e, c * Rational(exp[var]));
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const QVec& p) const {
    if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
    if (!is_polynomial()) throw std::domain_error("shift of a Laurent polynomial");
    LaurentPolynomial r(dim_);
    for (const auto& [exp, c] : terms_) {
        LaurentPolynomial term = constant(dim_, c);
        for (int i = 0; i < dim_; ++i) {
            if (exp[i] == 0) continue;
            LaurentPolynomial lin = variable(dim_, i) + constant(dim_, p[i]);
            term = term * lin.pow(static_cast<unsigned>(exp[i]));
        }
        r = r + term;
    }
    return r;
}

Rational LaurentPolynomial::evaluate(const QVec& p) const {
    if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
    Rational total = 0;
    for (const auto& [exp, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < dim_; ++i) {
            long e = exp[i];
            if (e == 0) continue;
            if (p[i] == 0 && e < 0)
                throw std::domain_error("negative exponent at a zero coordinate");
            Rational f = e > 0 ? rpow(p[i], static_cast<unsigned>(e))
                               : 1 / rpow(p[i], static_cast<unsigned>(-e));
            v *= f;
        }
        total += v;
    }
    return total;
}

std::vector<Exponents> LaurentPolynomial::support() const {
    std::vector<Exponents> s;
    s.reserve(terms_.size());
    for (const auto& [exp, c] : terms_) s.push_back(exp);
    return s;
}

std::string LaurentPolynomial::to_expression(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != dim_)
        throw std::invalid_argument("variable name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) { out << "-"; coeff = -coeff; }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool all_zero = std::all_of(exp.begin(), exp.end(), [](long e) { return e == 0; });
        bool wrote = false;
        if (coeff != 1 || all_zero) {
            out << to_string(coeff);
            wrote = true;
        }
        for (int i = 0; i < dim_; ++i) {
            if (exp[i] == 0) continue;
            if (wrote) out << "*";
            out << names[i];
            if (exp[i] != 1) out << "^" << exp[i];
            wrote = true;
        }
    }
    return out.str();
}

VectorField::VectorField(std::vector<LaurentPolynomial> components,
                         std::optional<int> time_index)
    : dim_(static_cast<int>(components.size())),
      components_(std::move(components)),
      time_index_(time_index) {
    if (dim_ < 1) throw std::invalid_argument("vector field needs at least one component");
    for (const auto& c : components_)
        if (c.dimension() != dim_)
            throw std::invalid_argument("component dimension mismatch");
    if (time_index_) {
        int t = *time_index_;
        if (t < 0 || t >= dim_) throw std::invalid_argument("time index out of range");
        for (const auto& [exp, c] : components_[t].terms())
            for (int i = 0; i < dim_; ++i)
                if (i != t && exp[i] != 0)
                    throw std::invalid_argument("time component must depend on the time variable only");
    }
}

long VectorField::degree() const {
    long best = -1;
    for (const auto& c : components_) {
        if (c.is_zero()) continue;
        best = std::max(best, c.total_degree());
    }
    if (best < 0) throw std::domain_error("degree of the zero vector field");
    return best;
}

LaurentPolynomial VectorField::lie_derivative(const LaurentPolynomial& p) const {
    if (p.dimension() != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    LaurentPolynomial r(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (components_[i].is_zero()) continue;
        r = r + components_[i] * p.partial_derivative(i);
    }
    return r;
}

LaurentPolynomial VectorField::iterated_lie(const LaurentPolynomial& p, unsigned k) const {
    LaurentPolynomial r = p;
    for (unsigned i = 0; i < k; ++i) r = lie_derivative(r);
    return r;
}

QVec VectorField::evaluate(const QVec& p) const {
    QVec v;
    v.reserve(dim_);
    for (const auto& c : components_) v.push_back(c.evaluate(p));
    return v;
}

bool VectorField::singular_at(const QVec& p) const {
    for (const auto& c : components_)
        if (c.evaluate(p) != 0) return false;
    return true;
}

}  // namespace multbound

#pragma once

#include <map>
#include <string>
#include <vector>

#include "lctforge/exponent.hpp"
#include "lctforge/rational.hpp"

namespace lctforge {

// Multivariate polynomial over the rationals. Terms live in a map keyed by
// exponent vector in ascending lexicographic order, which is descending
// negative-lexicographic order: begin() is always the initial term. No zero
// coefficient is ever stored. Values are immutable in spirit; the mutating
// operators are only used while a value is being assembled.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit Polynomial(int dim = 0) : dim_(dim) {}

    static Polynomial zero(int dim) { return Polynomial(dim); }
    static Polynomial constant(int dim, const Rational& c);
    static Polynomial monomial(int dim, const Exponent& k, const Rational& c);
    static Polynomial variable(int dim, int index);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    // Single term (any coefficient).
    bool is_term() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Exponents with nonzero coefficient; throws on the zero polynomial.
    std::vector<Exponent> support() const;

    // Neglex-greatest exponent / its coefficient; throws on zero.
    const Exponent& initial_exponent() const;
    const Rational& initial_coefficient() const;

    // Max / min total degree over the support; throws on zero.
    int degree() const;
    int order() const;

    const Rational& coefficient(const Exponent& k) const;  // 0 if absent
    void add_term(const Exponent& k, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    Polynomial scaled(const Rational& c) const;
    // this * c * x^k, the workhorse of reduction steps.
    Polynomial times_term(const Rational& c, const Exponent& k) const;
    Polynomial pow(int e) const;

    Polynomial derivative(int index) const;

    // Substitutes variable i by images[i]; images share a common dimension,
    // which becomes the dimension of the result.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // Divides by the initial coefficient.
    Polynomial monic() const;

    bool operator==(const Polynomial& other) const {
        return dim_ == other.dim_ && terms_ == other.terms_;
    }

    // Human/grammar form, e.g. "y^2 + x" (neglex-descending term order).
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int dim_;
    TermMap terms_;
};

std::string default_var_name(int index, int dim);
std::vector<std::string> default_var_names(int dim);

}  // namespace lctforge

#include "lctforge/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lctforge {

namespace {
const Rational kZero = 0;

void check_exponent(int dim, const Exponent& k) {
    if (static_cast<int>(k.size()) != dim)
        throw DimensionMismatch("exponent length does not match ambient dimension");
    for (int e : k)
        if (e < 0) throw std::invalid_argument("negative exponent");
}
}  // namespace

Polynomial Polynomial::constant(int dim, const Rational& c) {
    return monomial(dim, Exponent(dim, 0), c);
}

Polynomial Polynomial::monomial(int dim, const Exponent& k, const Rational& c) {
    check_exponent(dim, k);
    Polynomial p(dim);
    if (c != 0) p.terms_.emplace(k, c);
    return p;
}

Polynomial Polynomial::variable(int dim, int index) {
    if (index < 0 || index >= dim) throw std::invalid_argument("variable index out of range");
    Exponent k(dim, 0);
    k[index] = 1;
    return monomial(dim, k, 1);
}

std::vector<Exponent> Polynomial::support() const {
    if (is_zero()) throw std::invalid_argument("support of the zero polynomial");
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [k, c] : terms_) s.push_back(k);
    return s;
}

const Exponent& Polynomial::initial_exponent() const {
    if (is_zero()) throw std::invalid_argument("initial monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::initial_coefficient() const {
    if (is_zero()) throw std::invalid_argument("initial coefficient of the zero polynomial");
    return terms_.begin()->second;
}

int Polynomial::degree() const {
    if (is_zero()) throw std::invalid_argument("degree of the zero polynomial");
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, total_degree(k));
    return d;
}

int Polynomial::order() const {
    if (is_zero()) throw std::invalid_argument("order of the zero polynomial");
    int d = total_degree(terms_.begin()->first);
    for (const auto& [k, c] : terms_) d = std::min(d, total_degree(k));
    return d;
}

const Rational& Polynomial::coefficient(const Exponent& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? kZero : it->second;
}

void Polynomial::add_term(const Exponent& k, const Rational& c) {
    check_exponent(dim_, k);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(dim_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (dim_ != other.dim_) throw DimensionMismatch("polynomial dimension mismatch");
    for (const auto& [k, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (dim_ != other.dim_) throw DimensionMismatch("polynomial dimension mismatch");
    for (const auto& [k, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(k, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("polynomial dimension mismatch");
    Polynomial out(dim_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : other.terms_)
            out.add_term(exp_add(ka, kb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(dim_);
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

Polynomial Polynomial::times_term(const Rational& c, const Exponent& k) const {
    check_exponent(dim_, k);
    Polynomial out(dim_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(exp_add(e, k), v * c);
    return out;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = constant(dim_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return out;
}

Polynomial Polynomial::derivative(int index) const {
    if (index < 0 || index >= dim_) throw std::invalid_argument("variable index out of range");
    Polynomial out(dim_);
    for (const auto& [k, c] : terms_) {
        if (k[index] == 0) continue;
        Exponent d = k;
        d[index] -= 1;
        out.add_term(d, c * k[index]);
    }
    return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != dim_)
        throw DimensionMismatch("substitution requires one image per variable");
    int out_dim = dim_ == 0 ? 0 : images[0].dim();
    for (const auto& g : images)
        if (g.dim() != out_dim) throw DimensionMismatch("substitution images disagree on dimension");

    // Cache image powers; exponents repeat heavily across terms.
    std::vector<std::vector<Polynomial>> powers(dim_);
    for (int i = 0; i < dim_; ++i) powers[i].push_back(Polynomial::constant(out_dim, 1));

    Polynomial out(out_dim);
    for (const auto& [k, c] : terms_) {
        Polynomial t = Polynomial::constant(out_dim, c);
        for (int i = 0; i < dim_; ++i) {
            while (static_cast<int>(powers[i].size()) <= k[i])
                powers[i].push_back(powers[i].back() * images[i]);
            if (k[i] > 0) t = t * powers[i][k[i]];
        }
        out += t;
    }
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of the zero polynomial");
    return scaled(1 / initial_coefficient());
}

std::string default_var_name(int index, int dim) {
    static const char* xyz[] = {"x", "y", "z"};
    if (dim <= 3) return xyz[index];
    return "x" + std::to_string(index + 1);
}

std::vector<std::string> default_var_names(int dim) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (int i = 0; i < dim; ++i) names.push_back(default_var_name(i, dim));
    return names;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != dim_)
        throw DimensionMismatch("variable name list does not match dimension");
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < dim_; ++i) {
            if (k[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (k[i] > 1) mono += "^" + std::to_string(k[i]);
        }
        if (mono.empty()) {
            out += rat_str(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += rat_str(mag) + "*" + mono;
        }
    }
    return out;
}

}  // namespace lctforge

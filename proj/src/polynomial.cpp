#include "branchcheck/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace branchcheck {

Polynomial::Polynomial(const Rational& value) {
    if (value != 0) terms_.emplace(Monomial{}, value);
}

Polynomial Polynomial::variable(Var var, unsigned e) {
    return term(Monomial::variable(var, e), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& coefficient) {
    Polynomial p;
    if (coefficient != 0) p.terms_.emplace(m, coefficient);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::uses(Var var) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) > 0) return true;
    return false;
}

bool Polynomial::uses_only(VarSet allowed) const {
    for (std::size_t k = 0; k < kVarCount; ++k) {
        Var var = static_cast<Var>(k);
        if (!allowed.contains(var) && uses(var)) return false;
    }
    return true;
}

long long Polynomial::degree_in(Var var) const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    long long d = 0;
    for (const auto& [m, c] : terms_) d = std::max<long long>(d, m.exponent(var));
    return d;
}

long long Polynomial::total_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    // Leading term is graded-lex maximal, so it has maximal total degree.
    return terms_.begin()->first.degree();
}

long long Polynomial::ord_at_origin() const {
    if (terms_.empty()) throw std::domain_error("order of the zero polynomial");
    return terms_.rbegin()->first.degree();
}

Polynomial Polynomial::coefficient_in(Var var, unsigned k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(var) != k) continue;
        Monomial rest = m;
        rest.exponent(var) = 0;
        r.add_term(rest, c);
    }
    return r;
}

Polynomial Polynomial::leading_coefficient_in(Var var) const {
    return coefficient_in(var, static_cast<unsigned>(degree_in(var)));
}

Polynomial Polynomial::leading_form(FormMode mode) const {
    if (terms_.empty()) throw std::domain_error("leading form of the zero polynomial");
    long long target = mode == FormMode::Highest ? total_degree() : ord_at_origin();
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == target) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::derivative(Var var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exponent(var);
        if (e == 0) continue;
        Monomial d = m;
        d.exponent(var) = e - 1;
        r.add_term(d, c * e);
    }
    return r;
}

Polynomial Polynomial::shift(Var var, const Rational& c) const {
    if (c == 0) return *this;
    Polynomial r;
    for (const auto& [m, a] : terms_) {
        unsigned e = m.exponent(var);
        // (var + c)^e expanded by the binomial theorem.
        for (unsigned k = 0; k <= e; ++k) {
            Monomial part = m;
            part.exponent(var) = k;
            r.add_term(part, a * Rational(binomial(e, k)) * pow_rational(c, e - k));
        }
    }
    return r;
}

Polynomial Polynomial::substitute_power(Var var, unsigned n) const {
    if (n < 1) throw std::domain_error("substitute_power requires n >= 1");
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial s = m;
        s.exponent(var) = m.exponent(var) * n;
        r.terms_.emplace(s, c);
    }
    return r;
}

Polynomial Polynomial::evaluate_at_zero(Var var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) == 0) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::rename(Var from, Var to) const {
    if (from == to) return *this;
    if (uses(to)) throw std::logic_error("rename target variable already in use");
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial s = m;
        s.exponent(to) = s.exponent(from);
        s.exponent(from) = 0;
        r.terms_.emplace(s, c);
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial r;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, a] : p.terms_) r.terms_.emplace(m, c * a);
    return r;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m, bool coefficient_printed) {
    bool first = !coefficient_printed;
    for (std::size_t k = 0; k < kVarCount; ++k) {
        unsigned e = m.exp[k];
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        os << kVarNames[k];
        if (e > 1) os << '^' << e;
    }
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool is_unit_coefficient = (a == 1) && !(m == Monomial{});
        if (!is_unit_coefficient) os << branchcheck::to_string(a);
        if (!(m == Monomial{})) {
            if (!is_unit_coefficient) os << '*';
            append_monomial(os, m, false);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    Polynomial quotient;
    Polynomial rest = a;
    const auto& lead_b = *b.terms().begin();
    while (!rest.is_zero()) {
        const auto& lead_r = *rest.terms().begin();
        if (!lead_b.first.divides(lead_r.first))
            throw std::logic_error("exact_quotient: division is not exact");
        Polynomial t =
            Polynomial::term(lead_b.first.divided_into(lead_r.first), lead_r.second / lead_b.second);
        quotient += t;
        rest -= t * b;
    }
    return quotient;
}

namespace {

// Dense coefficient list of a polynomial univariate in var, low degree first.
std::vector<Rational> dense_coefficients(const Polynomial& p, Var var) {
    if (!p.uses_only(VarSet{var}))
        throw std::invalid_argument("univariate_gcd: input involves other variables");
    if (p.is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(p.degree_in(var)) + 1, Rational(0));
    for (const auto& [m, a] : p.terms()) c[m.exponent(var)] = a;
    return c;
}

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, Var var) {
    std::vector<Rational> f = dense_coefficients(a, var);
    std::vector<Rational> g = dense_coefficients(b, var);
    while (!g.empty()) {
        // f mod g by classical division over the rationals.
        while (f.size() >= g.size() && !f.empty()) {
            Rational factor = f.back() / g.back();
            std::size_t offset = f.size() - g.size();
            for (std::size_t k = 0; k < g.size(); ++k) f[offset + k] -= factor * g[k];
            trim(f);
        }
        std::swap(f, g);
    }
    if (f.empty()) return Polynomial();
    Polynomial r;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f[k] != 0) r += Polynomial::term(Monomial::variable(var, static_cast<unsigned>(k)),
                                             f[k] / f.back());
    return r;
}

Rational rational_from_string(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("malformed rational: " + text);
        return text.substr(start, pos - start);
    };
    Integer num(read_digits());
    Integer den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = Integer(read_digits());
    }
    if (pos != text.size()) throw std::invalid_argument("malformed rational: " + text);
    if (negative) num = -num;
    return make_rational(num, den);
}

}  // namespace branchcheck

#include "mpg/polynomial.hpp"

#include <sstream>

#include "json.hpp"
#include "mpg/errors.hpp"

namespace mpg {

Polynomial Polynomial::falling_factorial(int k) {
    Polynomial p = constant(1);
    for (int i = 0; i < k; ++i) p = p.times_linear(i);
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0_mpz);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0_mpz);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0_mpz);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::times_linear(long root) const {
    if (is_zero()) return Polynomial();
    // (t - root) * p
    std::vector<mpz_class> r(c_.size() + 1, 0_mpz);
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i + 1] += c_[i];
        r[i] -= root * c_[i];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::divide_linear_exact(long root) const {
    if (is_zero()) return Polynomial();
    // synthetic division by (t - root)
    std::vector<mpz_class> q(c_.size() - 1, 0_mpz);
    mpz_class carry = 0;
    for (int i = (int)c_.size() - 1; i >= 1; --i) {
        carry = c_[i] + root * carry;
        q[i - 1] = carry;
    }
    mpz_class rem = c_[0] + root * carry;
    if (rem != 0) fail(Err::BadFormat, "divide_linear_exact: nonzero remainder");
    return Polynomial(std::move(q));
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) fail(Err::BadFormat, "divide_exact: zero divisor");
    if (is_zero()) return Polynomial();
    std::vector<mpz_class> rem = c_;
    int dn = d.degree();
    if (degree() < dn) fail(Err::BadFormat, "divide_exact: degree too small");
    std::vector<mpz_class> q(degree() - dn + 1, 0_mpz);
    for (int i = degree(); i >= dn; --i) {
        mpz_class f, m;
        mpz_tdiv_qr(f.get_mpz_t(), m.get_mpz_t(), rem[i].get_mpz_t(), d.c_[dn].get_mpz_t());
        if (m != 0) fail(Err::BadFormat, "divide_exact: leading coefficient not divisible");
        q[i - dn] = f;
        for (int j = 0; j <= dn; ++j) rem[i - dn + j] -= f * d.c_[j];
    }
    for (auto& r : rem)
        if (r != 0) fail(Err::BadFormat, "divide_exact: nonzero remainder");
    return Polynomial(std::move(q));
}

mpz_class Polynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (int i = (int)c_.size() - 1; i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

BigFloat Polynomial::evaluate(const BigFloat& x) const {
    BigFloat acc(x.precision());
    for (int i = (int)c_.size() - 1; i >= 0; --i) acc = acc * x + BigFloat::of(c_[i], x.precision());
    return acc;
}

std::string Polynomial::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& c : c_) arr.push_back(c.get_str());
    return arr.dump();
}

Polynomial Polynomial::from_json(const std::string& s) {
    auto j = nlohmann::json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_array()) fail(Err::BadFormat, "polynomial json: expected array");
    std::vector<mpz_class> c;
    for (const auto& e : j) {
        if (e.is_number_integer())
            c.push_back(mpz_class((long)e));
        else if (e.is_string())
            c.push_back(mpz_class(e.get<std::string>()));
        else
            fail(Err::BadFormat, "polynomial json: bad coefficient");
    }
    return Polynomial(std::move(c));
}

std::string Polynomial::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        first = false;
        mpz_class mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

} // namespace mpg

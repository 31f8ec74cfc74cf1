#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mpg/bigfloat.hpp"

namespace mpg {

// Exact integer-coefficient polynomial in t, coefficients ascending by degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(long v) { return Polynomial({mpz_class(v)}); }
    static Polynomial t() { return Polynomial({0_mpz, 1_mpz}); }
    // t(t-1)...(t-k+1), the chromatic polynomial of K_k
    static Polynomial falling_factorial(int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    const mpz_class& coeff(int i) const { return c_[i]; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    Polynomial times_linear(long root) const;      // * (t - root)
    Polynomial divide_linear_exact(long root) const; // / (t - root), remainder must vanish
    Polynomial divide_exact(const Polynomial& d) const;

    mpz_class evaluate(const mpz_class& x) const;  // Horner
    BigFloat evaluate(const BigFloat& x) const;

    std::string to_json() const;                   // array of decimal strings
    static Polynomial from_json(const std::string& s);
    std::string pretty() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

} // namespace mpg

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace mpg {

// Thin RAII wrapper over mpfr_t at a fixed binary precision.
class BigFloat {
public:
    explicit BigFloat(long prec_bits = 128) : prec_(prec_bits) {
        mpfr_init2(v_, prec_);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) {
        std::swap(prec_, o.prec_);
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(long x, long prec = 128) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat of(const mpz_class& z, long prec = 128) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat sqrt_of(unsigned long x, long prec = 128) {
        BigFloat r(prec);
        mpfr_sqrt_ui(r.v_, x, MPFR_RNDN);
        return r;
    }

    long precision() const { return prec_; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec_, b.prec_));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec_, b.prec_));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec_, b.prec_));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec_, b.prec_));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat pow_si(long e) const {
        BigFloat r(prec_);
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(prec_);
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    int sign() const { return mpfr_sgn(v_); }
    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator<=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 30) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    long prec_;
    mpfr_t v_;
};

// tau = (1+sqrt 5)/2 and friends, at configurable precision
struct GoldenConstants {
    long prec_bits;
    BigFloat sqrt5, tau, tau2, tau_sqrt5; // tau_sqrt5 = tau + 2

    static GoldenConstants make(long prec_bits = 128) {
        GoldenConstants g{prec_bits, BigFloat::sqrt_of(5, prec_bits), BigFloat(prec_bits), BigFloat(prec_bits),
                          BigFloat(prec_bits)};
        g.tau = (g.sqrt5 + BigFloat::of(1, prec_bits)) / BigFloat::of(2, prec_bits);
        g.tau2 = g.tau * g.tau;
        g.tau_sqrt5 = g.tau * g.sqrt5;
        return g;
    }
};

} // namespace mpg

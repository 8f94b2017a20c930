#include "g2syl/cyclo.hpp"

#include <cmath>
#include <stdexcept>

namespace g2syl {

void Cyclo::check_compatible(const Cyclo& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Cyclo: mixed conductors");
}

Cyclo Cyclo::zeta_pow(int p, long long e) {
    Cyclo r(p);
    r.add_zeta_multiple(e, Rat(1));
    return r;
}

void Cyclo::add_zeta_multiple(long long e, const Rat& r) {
    long long m = e % p_;
    if (m < 0) m += p_;
    if (m == p_ - 1) {
        for (auto& c : c_) c -= r;
    } else {
        c_[size_t(m)] += r;
    }
}

bool Cyclo::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Cyclo Cyclo::conj() const {
    Cyclo r(p_);
    for (int j = 0; j < p_ - 1; ++j)
        if (!c_[j].is_zero()) r.add_zeta_multiple((p_ - j) % p_, c_[j]);
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    a.check_compatible(b);
    Cyclo r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    a.check_compatible(b);
    Cyclo r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    a.check_compatible(b);
    Cyclo r(a.p_);
    for (int i = 0; i < a.p_ - 1; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < a.p_ - 1; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.add_zeta_multiple(i + j, a.c_[i] * b.c_[j]);
        }
    }
    return r;
}

Cyclo Cyclo::operator*(const Rat& r) const {
    Cyclo out(p_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * r;
    return out;
}

Cyclo Cyclo::operator-() const {
    Cyclo out(p_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    a.check_compatible(b);
    return a.c_ == b.c_;
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> r = 0;
    for (int j = 0; j < p_ - 1; ++j) {
        double arg = 2.0 * M_PI * j / p_;
        r += c_[j].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return r;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int j = 0; j < p_ - 1; ++j) {
        if (c_[j].is_zero()) continue;
        std::string term;
        if (j == 0) {
            term = c_[j].str();
        } else {
            if (c_[j] == Rat(1)) term = "";
            else if (c_[j] == Rat(-1)) term = "-";
            else term = c_[j].str() + "*";
            term += "z^" + std::to_string(j);
        }
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    return s;
}

Cyclo theta(const Fq& F, Fq::elem x) {
    return Cyclo::zeta_pow(F.p(), F.trace(x));
}

Cyclo ZSum::to_cyclo() const {
    Cyclo r(p);
    for (int e = 0; e < p; ++e)
        if (cnt[e] != 0) r.add_zeta_multiple(e, Rat(cnt[e]));
    return r;
}

}  // namespace g2syl

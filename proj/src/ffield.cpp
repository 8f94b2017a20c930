#include "g2syl/ffield.hpp"

#include <stdexcept>

namespace g2syl {

namespace {

// Polynomials over F_p in little-endian coefficient order.
using Poly = std::vector<int>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // Reduce modulo the monic polynomial `mod` of degree k.
    int k = int(mod.size()) - 1;
    for (int d = int(prod.size()) - 1; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i)
            prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p) % p;
    }
    prod.resize(k, 0);
    return prod;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
    int k = int(f.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            g[d] = 1;
            long long t = idx;
            for (int i = 0; i < d; ++i) { g[i] = int(t % p); t /= p; }
            // Polynomial long division remainder f mod g.
            Poly r = f;
            for (int e = k; e >= d; --e) {
                int c = r[e];
                if (c == 0) continue;
                for (int i = 0; i <= d; ++i)
                    r[e - d + i] = ((r[e - d + i] - c * g[i]) % p + p) % p;
            }
            bool zero = true;
            for (int c : r)
                if (c != 0) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Fq::Fq(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("Fq: p must be an odd prime");
    if (k < 1 || k > 4) throw std::invalid_argument("Fq: need 1 <= k <= 4");
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;

    if (k == 1) {
        modulus_ = {0, 1};  // x (unused for prime fields)
    } else {
        // Least irreducible monic polynomial of degree k in the index order.
        long long count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        bool found = false;
        for (long long idx = 0; idx < count && !found; ++idx) {
            Poly f(k + 1, 0);
            f[k] = 1;
            long long t = idx;
            for (int i = 0; i < k; ++i) { f[i] = int(t % p); t /= p; }
            if (is_irreducible(f, p)) {
                modulus_ = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("Fq: no irreducible modulus found");
    }
    build_tables();
}

void Fq::build_tables() {
    add_.assign(size_t(q_) * q_, 0);
    mul_.assign(size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    trace_.assign(q_, 0);

    auto to_poly = [&](int a) {
        Poly c(k_, 0);
        for (int i = 0; i < k_; ++i) { c[i] = a % p_; a /= p_; }
        return c;
    };
    auto from_poly = [&](const Poly& c) {
        int v = 0;
        for (int i = k_ - 1; i >= 0; --i) v = v * p_ + c[i];
        return v;
    };

    for (int a = 0; a < q_; ++a) {
        Poly pa = to_poly(a);
        Poly na(k_);
        for (int i = 0; i < k_; ++i) na[i] = (p_ - pa[i]) % p_;
        neg_[a] = elem(from_poly(na));
        for (int b = 0; b < q_; ++b) {
            Poly pb = to_poly(b);
            Poly s(k_);
            for (int i = 0; i < k_; ++i) s[i] = (pa[i] + pb[i]) % p_;
            add_[size_t(a) * q_ + b] = elem(from_poly(s));
            if (b <= a) {
                elem m = elem(from_poly(poly_mul_mod(pa, pb, modulus_, p_)));
                mul_[size_t(a) * q_ + b] = m;
                mul_[size_t(b) * q_ + a] = m;
            }
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[size_t(a) * q_ + b] == 1) { inv_[a] = elem(b); break; }

    // Absolute trace via repeated Frobenius.
    for (int a = 0; a < q_; ++a) {
        elem frob = elem(a), t = 0;
        for (int i = 0; i < k_; ++i) {
            t = add(t, frob);
            frob = pow(frob, p_);
        }
        if (t >= elem(p_))
            throw std::logic_error("Fq: trace left the prime subfield");
        trace_[a] = std::uint8_t(t);
    }
}

Fq::elem Fq::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return elem(r);
}

Fq::elem Fq::inv(elem a) const {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    return inv_[a];
}

Fq::elem Fq::pow(elem a, long long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<int> Fq::coords(elem a) const {
    std::vector<int> c(k_);
    int v = a;
    for (int i = 0; i < k_; ++i) { c[i] = v % p_; v /= p_; }
    return c;
}

std::string Fq::elem_str(elem a) const { return std::to_string(int(a)); }

}  // namespace g2syl

#include "iwa/padic.hpp"

#include <algorithm>
#include <random>

namespace iwa {

namespace {

// ---- polynomial helpers over Z/p^e, coefficient vectors low-degree-first ----

using Poly = std::vector<Int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Int inv_mod(const Int& a, const Int& mod) {
    Int t = 0, newt = 1, r = mod, newr = mod_reduce(a, mod);
    while (newr != 0) {
        Int q = r / newr;
        Int tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    require(r == 1, errc::bad_argument, "element not invertible");
    return mod_reduce(t, mod);
}

Poly poly_mul(const Poly& a, const Poly& b, const Int& mod) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % mod;
    }
    trim(r);
    return r;
}

Poly poly_add(const Poly& a, const Poly& b, const Int& mod) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Int s = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
        r[i] = mod_reduce(s, mod);
    }
    trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, const Int& mod) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Int s = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        r[i] = mod_reduce(s, mod);
    }
    trim(r);
    return r;
}

// division by a divisor with unit leading coefficient; returns {q, r}
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, const Int& mod) {
    require(!b.empty(), errc::bad_argument, "division by zero polynomial");
    Int lead_inv = inv_mod(b.back(), mod);
    Poly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Int(0));
    for (size_t kk = a.size(); kk >= b.size(); --kk) {
        size_t k = kk - 1;
        Int f = a[k] * lead_inv % mod;
        if (f != 0) {
            q[k - (b.size() - 1)] = f;
            for (size_t j = 0; j < b.size(); ++j) {
                size_t idx = k - (b.size() - 1) + j;
                a[idx] = mod_reduce(a[idx] - f * b[j], mod);
            }
        }
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_mod(const Poly& a, const Poly& b, const Int& mod) { return poly_divmod(a, b, mod).second; }

Poly poly_powmod(Poly base, Int e, const Poly& modpoly, const Int& mod) {
    Poly r = {Int(1)};
    base = poly_mod(base, modpoly, mod);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mod(poly_mul(r, base, mod), modpoly, mod);
        base = poly_mod(poly_mul(base, base, mod), modpoly, mod);
        e >>= 1;
    }
    return r;
}

// extended gcd over the field Z/p; returns {g, s, t} with s a + t b = g
struct ExtGcd {
    Poly g, s, t;
};

ExtGcd poly_extgcd_modp(Poly a, Poly b, const Int& p) {
    Poly s0 = {Int(1)}, s1 = {};
    Poly t0 = {}, t1 = {Int(1)};
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b, p);
        a = b;
        b = r;
        Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        s0 = s1;
        s1 = s2;
        Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
        t0 = t1;
        t1 = t2;
    }
    return {a, s0, t0};
}

bool is_prime_small(size_t q) {
    if (q < 2) return false;
    for (size_t r = 2; r * r <= q; ++r)
        if (q % r == 0) return false;
    return true;
}

bool poly_is_irreducible_modp(const Poly& f, const Int& p) {
    // Rabin: x^{p^d} == x mod f and x^{p^{d/q}} - x coprime to f for primes q | d
    size_t d = f.size() - 1;
    Poly x = {Int(0), Int(1)};
    auto frob_pow = [&](unsigned k) {
        Poly r = x;
        for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
        return r;
    };
    if (poly_sub(frob_pow(static_cast<unsigned>(d)), x, p) != Poly{}) return false;
    for (size_t q = 2; q <= d; ++q) {
        if (d % q == 0 && is_prime_small(q)) {
            Poly diff = poly_sub(frob_pow(static_cast<unsigned>(d / q)), x, p);
            if (poly_extgcd_modp(f, diff, p).g.size() != 1) return false;
        }
    }
    return true;
}

// Quadratic Hensel lifting of f = g*h mod p to mod p^N; f and g monic, g and h
// coprime mod p. Returns the lift of g.
Poly hensel_lift_factor(const Poly& f, Poly g, Poly h, const Int& p, unsigned N) {
    ExtGcd e = poly_extgcd_modp(g, h, p);
    require(e.g.size() == 1, errc::bad_argument, "factors not coprime mod p");
    Int c = inv_mod(e.g[0], p);
    Poly s = e.s, t = e.t;
    for (auto& v : s) v = v * c % p;
    for (auto& v : t) v = v * c % p;

    unsigned k = 1;
    while (k < N) {
        unsigned k2 = std::min(2 * k, N);
        Int mod2 = pow_int(Int(p), k2);
        Poly err = poly_sub(f, poly_mul(g, h, mod2), mod2);
        Poly te = poly_mul(t, err, mod2);
        auto [q1, dg] = poly_divmod(te, g, mod2);
        Poly dh = poly_add(poly_mul(s, err, mod2), poly_mul(q1, h, mod2), mod2);
        g = poly_add(g, dg, mod2);
        h = poly_add(h, dh, mod2);
        Poly one = {Int(1)};
        Poly berr = poly_sub(one, poly_add(poly_mul(s, g, mod2), poly_mul(t, h, mod2), mod2), mod2);
        Poly tb = poly_mul(t, berr, mod2);
        auto [q2, dt] = poly_divmod(tb, g, mod2);
        Poly ds = poly_add(poly_mul(s, berr, mod2), poly_mul(q2, h, mod2), mod2);
        s = poly_add(s, ds, mod2);
        t = poly_add(t, dt, mod2);
        k = k2;
    }
    Int pN = pow_int(Int(p), N);
    for (auto& v : g) v = mod_reduce(v, pN);
    return g;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            fs.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t q : prime_factors(n)) r = r / q * (q - 1);
    return r;
}

} // namespace

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    require(m >= 1 && gcd_u64(a % m, m) <= 1, errc::bad_argument, "order: gcd(a,m) != 1");
    if (m == 1) return 1;
    require(gcd_u64(a % m, m) == 1, errc::bad_argument, "order: gcd(a,m) != 1");
    std::uint64_t ord = euler_phi(m);
    for (std::uint64_t q : prime_factors(ord)) {
        while (ord % q == 0 && powmod_u64(a, ord / q, m) == 1) ord /= q;
    }
    return ord;
}

RingPtr make_coeff_ring(std::uint64_t p, std::uint64_t m, unsigned N) {
    require(p % 2 == 1 && is_prime_u64(p), errc::bad_argument, "p must be an odd prime");
    require(m >= 1 && m % p != 0, errc::bad_argument, "m must be coprime to p");
    require(N >= 1, errc::bad_argument, "precision must be >= 1");

    auto ring = std::shared_ptr<CoeffRing>(new CoeffRing());
    ring->p_ = p;
    ring->m_ = m;
    ring->N_ = N;
    ring->ppow_.resize(N + 1);
    ring->ppow_[0] = 1;
    for (unsigned i = 1; i <= N; ++i) ring->ppow_[i] = ring->ppow_[i - 1] * p;
    ring->pN_ = ring->ppow_[N];
    const Int& pN = ring->pN_;

    unsigned d = (m == 1) ? 1 : static_cast<unsigned>(multiplicative_order(p % m, m));
    ring->d_ = d;

    if (m == 1) {
        ring->h_ = {Int(0), Int(1)}; // plain Z/p^N; h is never used for d = 1 arithmetic
        ring->zeta_ = {Int(1)};
        return ring;
    }

    if (d == 1) {
        // m | p - 1: primitive m-th root mod p, Newton-lifted along x^m - 1
        std::uint64_t r0 = 0;
        for (std::uint64_t g = 2; g < p; ++g) {
            std::uint64_t cand = powmod_u64(g, (p - 1) / m, p);
            if (cand != 0 && multiplicative_order(cand, p) == m) {
                r0 = cand;
                break;
            }
        }
        require(r0 != 0, errc::bad_argument, "no primitive m-th root mod p");
        Int r = r0;
        unsigned k = 1;
        while (k < N) {
            unsigned k2 = std::min(2 * k, N);
            Int mod2 = pow_int(Int(p), k2);
            Int fr = mod_reduce(powmod(r, Int(m), mod2) - 1, mod2);
            Int dfr = mod_reduce(Int(m) * powmod(r, Int(m - 1), mod2), mod2);
            r = mod_reduce(r - fr * inv_mod(dfr, mod2), mod2);
            k = k2;
        }
        ring->h_ = {mod_reduce(-r, pN), Int(1)};
        ring->zeta_ = {mod_reduce(r, pN)};
        return ring;
    }

    // d >= 2: build F_{p^d}, find zeta of exact order m, take its minimal polynomial
    // over F_p and Hensel-lift that factor of x^m - 1 to precision N.
    std::mt19937_64 rng(p * 1000003ull + m * 10007ull + d);
    Poly g;
    for (;;) {
        g.assign(d + 1, Int(0));
        g[d] = 1;
        for (unsigned i = 0; i < d; ++i) g[i] = Int(rng() % p);
        if (poly_is_irreducible_modp(g, Int(p))) break;
    }
    Int q_minus_1 = pow_int(Int(p), d) - 1;
    require(q_minus_1 % m == 0, errc::bad_argument, "internal: m does not divide q-1");
    Poly zbar;
    auto fs = prime_factors(m);
    for (;;) {
        Poly rho(d, Int(0));
        for (unsigned i = 0; i < d; ++i) rho[i] = Int(rng() % p);
        trim(rho);
        if (rho.empty()) continue;
        Poly cand = poly_powmod(rho, q_minus_1 / m, g, Int(p));
        if (cand.size() == 1 && cand[0] == 1) continue;
        if (cand.empty()) continue;
        bool exact = true;
        for (auto fq : fs) {
            Poly t = poly_powmod(cand, Int(m / fq), g, Int(p));
            if (t.size() == 1 && t[0] == 1) {
                exact = false;
                break;
            }
        }
        if (exact) {
            zbar = cand;
            break;
        }
    }
    // minimal polynomial = prod_{i<d} (x - zbar^{p^i}), coefficients drop to F_p
    std::vector<Poly> acc = {{Int(1)}};
    Poly conj = zbar;
    for (unsigned i = 0; i < d; ++i) {
        std::vector<Poly> next(acc.size() + 1, Poly{});
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = poly_add(next[j + 1], acc[j], Int(p));
            Poly t = poly_mod(poly_mul(acc[j], conj, Int(p)), g, Int(p));
            next[j] = poly_sub(next[j], t, Int(p));
        }
        acc = std::move(next);
        conj = poly_powmod(conj, Int(p), g, Int(p));
    }
    Poly hbar(acc.size(), Int(0));
    for (size_t j = 0; j < acc.size(); ++j) {
        require(acc[j].size() <= 1, errc::bad_argument, "internal: minpoly coefficient not in F_p");
        hbar[j] = acc[j].empty() ? Int(0) : acc[j][0];
    }
    trim(hbar);
    require(hbar.size() == d + 1, errc::bad_argument, "internal: minpoly degree mismatch");
    Poly f(m + 1, Int(0));
    f[0] = p - 1;
    f[m] = 1;
    auto [cof, rem] = poly_divmod(f, hbar, Int(p));
    require(rem.empty(), errc::bad_argument, "internal: minpoly does not divide x^m - 1");
    Poly h = hensel_lift_factor(f, hbar, cof, Int(p), N);
    h.resize(d + 1, Int(0));
    for (auto& v : h) v = mod_reduce(v, pN);
    ring->h_ = h;
    std::vector<Int> z(d, Int(0));
    z[1] = 1;
    ring->zeta_ = z;
    return ring;
}

// ---- PadicScalar ----

PadicScalar PadicScalar::zero(RingPtr ring) {
    PadicScalar s;
    s.ring_ = std::move(ring);
    s.c_.assign(s.ring_->degree(), Int(0));
    return s;
}

PadicScalar PadicScalar::one(RingPtr ring) { return PadicScalar(std::move(ring), Int(1)); }

PadicScalar::PadicScalar(RingPtr ring, Int value) {
    ring_ = std::move(ring);
    c_.assign(ring_->degree(), Int(0));
    c_[0] = mod_reduce(std::move(value), ring_->p_pow_N());
}

PadicScalar PadicScalar::from_coords(RingPtr ring, std::vector<Int> coords) {
    PadicScalar s;
    s.ring_ = std::move(ring);
    require(coords.size() == s.ring_->degree(), errc::bad_argument, "coordinate count mismatch");
    for (auto& v : coords) v = mod_reduce(std::move(v), s.ring_->p_pow_N());
    s.c_ = std::move(coords);
    return s;
}

PadicScalar PadicScalar::zeta(RingPtr ring) {
    PadicScalar s;
    s.ring_ = ring;
    s.c_ = ring->zeta_;
    s.c_.resize(ring->degree(), Int(0));
    return s;
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    require(ring_ && o.ring_ && ring_->same_structure(*o.ring_), errc::bad_argument, "ring mismatch");
    const RingPtr& r = ring_->precision() <= o.ring_->precision() ? ring_ : o.ring_;
    PadicScalar a = reduce_to(r), b = o.reduce_to(r);
    for (unsigned i = 0; i < r->degree(); ++i) a.c_[i] = mod_reduce(a.c_[i] + b.c_[i], r->p_pow_N());
    return a;
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::operator-() const {
    PadicScalar a = *this;
    for (auto& v : a.c_) v = mod_reduce(-v, ring_->p_pow_N());
    return a;
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    require(ring_ && o.ring_ && ring_->same_structure(*o.ring_), errc::bad_argument, "ring mismatch");
    const RingPtr& r = ring_->precision() <= o.ring_->precision() ? ring_ : o.ring_;
    PadicScalar a = reduce_to(r), b = o.reduce_to(r);
    unsigned d = r->degree();
    const Int& pN = r->p_pow_N();
    if (d == 1) {
        a.c_[0] = a.c_[0] * b.c_[0] % pN;
        return a;
    }
    std::vector<Int> prod(2 * d - 1, Int(0));
    for (unsigned i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a.c_[i] * b.c_[j]) % pN;
    }
    const auto& h = r->defining_poly();
    for (size_t k = prod.size(); k-- > d;) {
        Int f = prod[k];
        if (f == 0) continue;
        prod[k] = 0;
        for (unsigned j = 0; j < d; ++j) prod[k - d + j] = mod_reduce(prod[k - d + j] - f * h[j], pN);
    }
    prod.resize(d);
    a.c_ = std::move(prod);
    return a;
}

bool PadicScalar::operator==(const PadicScalar& o) const {
    if (!ring_ || !o.ring_) return !ring_ && !o.ring_;
    if (!ring_->same_structure(*o.ring_) || ring_->precision() != o.ring_->precision()) return false;
    return c_ == o.c_;
}

bool PadicScalar::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

std::optional<unsigned> PadicScalar::valuation() const {
    unsigned N = ring_->precision();
    unsigned best = N;
    for (const auto& v : c_) best = std::min(best, vp_int(v, Int(ring_->p()), N));
    if (best >= N) return std::nullopt;
    return best;
}

unsigned PadicScalar::valuation_or(unsigned cap) const {
    auto v = valuation();
    return v ? std::min(*v, cap) : cap;
}

PadicScalar PadicScalar::reduce_to(const RingPtr& other) const {
    require(ring_->same_structure(*other), errc::bad_argument, "ring structure mismatch");
    require(other->precision() <= ring_->precision(), errc::bad_argument, "cannot raise precision");
    PadicScalar s;
    s.ring_ = other;
    s.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        s.c_[i] = other->precision() == ring_->precision() ? c_[i] : c_[i] % other->p_pow_N();
    return s;
}

PadicScalar PadicScalar::inverse() const {
    require(is_unit(), errc::bad_argument, "inverse of non-unit");
    unsigned d = ring_->degree();
    const Int p(ring_->p());
    Poly a0(c_.begin(), c_.end());
    for (auto& v : a0) v %= p;
    trim(a0);
    PadicScalar inv = zero(ring_);
    if (d == 1) {
        inv.c_[0] = powmod(a0.empty() ? Int(0) : a0[0], p - 2, p);
    } else {
        Poly hbar(ring_->defining_poly());
        for (auto& v : hbar) v = mod_reduce(v, p);
        Int q = pow_int(p, d);
        Poly z = poly_powmod(a0, q - 2, hbar, p);
        for (size_t i = 0; i < z.size() && i < d; ++i) inv.c_[i] = z[i];
    }
    PadicScalar two(ring_, Int(2));
    unsigned k = 1;
    while (k < ring_->precision()) {
        inv = inv * (two - *this * inv);
        k *= 2;
    }
    return inv;
}

PadicScalar PadicScalar::divide_exact_p_pow(unsigned k) const {
    require(k <= ring_->precision(), errc::bad_argument, "shift exceeds precision");
    require(valuation_or(k) >= k, errc::bad_argument, "not divisible by p^k");
    PadicScalar s = *this;
    const Int& pk = ring_->p_pow(k);
    for (auto& v : s.c_) v /= pk;
    return s;
}

PadicScalar PadicScalar::times_p_pow(unsigned k) const {
    PadicScalar s = *this;
    const Int& pk = ring_->p_pow(std::min(k, ring_->precision()));
    for (auto& v : s.c_) v = v * pk % ring_->p_pow_N();
    return s;
}

PadicScalar PadicScalar::pow(Int e) const {
    if (e < 0) return inverse().pow(-e);
    PadicScalar r = one(ring_);
    PadicScalar b = *this;
    while (e > 0) {
        if ((e & 1) != 0) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

PadicScalar PadicScalar::frobenius_q() const {
    Int q = pow_int(Int(ring_->p()), ring_->degree());
    return pow(q);
}

bool PadicScalar::congruent(const PadicScalar& o, unsigned k) const {
    require(ring_->same_structure(*o.ring_), errc::bad_argument, "ring mismatch");
    unsigned kk = std::min({k, ring_->precision(), o.ring_->precision()});
    const Int pk = pow_int(Int(ring_->p()), kk);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (mod_reduce(c_[i] - o.c_[i], pk) != 0) return false;
    }
    return true;
}

PadicScalar teichmuller(const PadicScalar& a) {
    require(a.is_unit(), errc::bad_argument, "teichmuller of non-unit");
    PadicScalar x = a;
    for (unsigned i = 0; i <= a.ring()->precision(); ++i) {
        PadicScalar nx = x.frobenius_q();
        if (nx == x) break;
        x = nx;
    }
    return x;
}

PadicScalar cyclotomic_u(const RingPtr& ring) { return PadicScalar(ring, Int(1 + ring->p())); }

} // namespace iwa

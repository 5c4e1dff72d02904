#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "iwa/bigint.hpp"
#include "iwa/errors.hpp"

namespace iwa {

class CoeffRing;
using RingPtr = std::shared_ptr<const CoeffRing>;

// Valuation ring O/p^N of the unramified extension Z_p[zeta_m] at fixed precision.
// Elements are polynomials of degree < d in the class of x modulo a monic defining
// polynomial h that divides x^m - 1 and is irreducible mod p; d = ord of p mod m.
class CoeffRing : public std::enable_shared_from_this<CoeffRing> {
  public:
    std::uint64_t p() const { return p_; }
    std::uint64_t m() const { return m_; }
    unsigned degree() const { return d_; }
    unsigned precision() const { return N_; }
    const Int& p_pow_N() const { return pN_; }
    const Int& p_pow(unsigned k) const { return ppow_.at(k); }
    const std::vector<Int>& defining_poly() const { return h_; }

    bool same_structure(const CoeffRing& o) const { return p_ == o.p_ && m_ == o.m_ && d_ == o.d_; }

    friend RingPtr make_coeff_ring(std::uint64_t p, std::uint64_t m, unsigned N);

  private:
    CoeffRing() = default;
    std::uint64_t p_ = 0;
    std::uint64_t m_ = 1;
    unsigned d_ = 1;
    unsigned N_ = 1;
    Int pN_;
    std::vector<Int> ppow_;   // p^0 .. p^N
    std::vector<Int> h_;      // monic, length d+1; coefficients mod p^N
    std::vector<Int> zeta_;   // canonical primitive m-th root of unity, length d
    friend class PadicScalar;
};

RingPtr make_coeff_ring(std::uint64_t p, std::uint64_t m, unsigned N);

// One element of O/p^N. Immutable in practice: all operations return new values.
class PadicScalar {
  public:
    PadicScalar() = default;
    PadicScalar(RingPtr ring, Int value); // embed a rational integer
    static PadicScalar zero(RingPtr ring);
    static PadicScalar one(RingPtr ring);
    static PadicScalar from_coords(RingPtr ring, std::vector<Int> coords);
    static PadicScalar zeta(RingPtr ring); // canonical primitive m-th root

    const RingPtr& ring() const { return ring_; }
    const std::vector<Int>& coords() const { return c_; }

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator-() const;
    PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
    PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
    PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }
    bool operator==(const PadicScalar& o) const;
    bool operator!=(const PadicScalar& o) const { return !(*this == o); }

    bool is_zero() const;
    // Largest k with value in p^k O, or nullopt meaning ">= N" (zero at this precision).
    std::optional<unsigned> valuation() const;
    unsigned valuation_or(unsigned cap) const;
    bool is_unit() const { return valuation_or(1) == 0; }

    PadicScalar inverse() const;                         // requires unit
    PadicScalar divide_exact_p_pow(unsigned k) const;    // requires valuation >= k
    PadicScalar times_p_pow(unsigned k) const;
    PadicScalar pow(Int e) const;                        // negative e requires unit
    PadicScalar frobenius_q() const;                     // x -> x^q, q = p^d
    PadicScalar reduce_to(const RingPtr& other) const;   // same structure, other->N <= N

    // Congruence modulo p^k (k <= N).
    bool congruent(const PadicScalar& o, unsigned k) const;

  private:
    RingPtr ring_;
    std::vector<Int> c_;
};

// value + how many p-adic digits of it are meaningful
struct PrecScalar {
    PadicScalar value;
    unsigned prec = 0;
};

PadicScalar teichmuller(const PadicScalar& a);
PadicScalar cyclotomic_u(const RingPtr& ring); // 1 + p

// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

} // namespace iwa

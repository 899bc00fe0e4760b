#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace homalg {

/// Error type for all user-facing failures (dimension mismatches, bad input,
/// infeasible requests).  Internal invariant violations use it too.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

/// An exact field element: an arbitrary-precision rational over Q, or a
/// residue in [0, p) over F_p.  Which one is in force is decided by the
/// FieldSpec of the surrounding matrix/object, not by the scalar itself.
using Scalar = mpq_class;

/// Ground field selector: characteristic 0 means Q, a prime p means F_p.
struct FieldSpec {
    std::uint32_t characteristic = 0;

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec& o) const { return characteristic == o.characteristic; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    void validate() const {
        if (characteristic != 0 && !is_prime(characteristic))
            throw Error("field characteristic must be 0 or a prime, got " +
                        std::to_string(characteristic));
    }

    std::string to_string() const {
        return is_rational() ? "Q" : ("F_" + std::to_string(characteristic));
    }
};

/// Arithmetic in the field selected by a FieldSpec.  All results are kept
/// canonical: lowest terms with positive denominator over Q, residues in
/// [0, p) with denominator 1 over F_p.
class Field {
public:
    explicit Field(FieldSpec spec) : spec_(spec) { spec_.validate(); }
    Field() : Field(FieldSpec{0}) {}

    const FieldSpec& spec() const { return spec_; }
    bool is_rational() const { return spec_.is_rational(); }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    /// Canonicalize in place.  mpq_class keeps rationals reduced on its own;
    /// over F_p this reduces the residue.
    void normalize(Scalar& a) const {
        if (!spec_.is_rational()) {
            require(a.get_den() == 1, "F_p scalar with non-unit denominator");
            mpz_class p(spec_.characteristic);
            mpz_class r = a.get_num() % p;
            if (r < 0) r += p;
            a = Scalar(r);
        }
    }

    Scalar from_long(long v) const {
        Scalar s(v);
        normalize(s);
        return s;
    }

    /// Parse "a", "-a" or "a/b".  Over F_p a division means multiplication by
    /// the inverse residue.
    Scalar from_string(const std::string& text) const;

    Scalar add(const Scalar& a, const Scalar& b) const {
        Scalar r = a + b;
        normalize(r);
        return r;
    }
    Scalar sub(const Scalar& a, const Scalar& b) const {
        Scalar r = a - b;
        normalize(r);
        return r;
    }
    Scalar mul(const Scalar& a, const Scalar& b) const {
        Scalar r = a * b;
        normalize(r);
        return r;
    }
    Scalar neg(const Scalar& a) const {
        Scalar r = -a;
        normalize(r);
        return r;
    }
    Scalar inv(const Scalar& a) const {
        require(sgn(a) != 0, "division by zero");
        if (spec_.is_rational()) return Scalar(1) / a;
        mpz_class p(spec_.characteristic), r;
        int ok = mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
        require(ok != 0, "non-invertible residue");
        return Scalar(r);
    }
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

    /// Canonical text form, "n" or "n/d".
    static std::string to_string(const Scalar& a) { return a.get_str(); }

private:
    FieldSpec spec_;
};

}  // namespace homalg

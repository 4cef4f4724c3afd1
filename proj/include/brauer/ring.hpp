#pragma once

// Exact coefficient rings with a distinguished parameter delta:
// Z, Q, F_p (p prime) and Z/m (m >= 2).  Scalars are stored as exact
// rationals kept in the canonical form of the enclosing ring (plain
// integers for Z, residues in [0,m) for F_p and Z/m).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace brauer {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingKind { integers, rationals, prime_field, integers_mod };

struct ring_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Ring {
public:
    // Z or Q
    explicit Ring(RingKind kind, const Rat& delta = 0);
    // F_p or Z/m
    Ring(RingKind kind, const Int& modulus, const Rat& delta = 0);

    // Spec strings: "Z", "Q", "Fp:<p>", "Zmod:<m>"; delta as "k" or "p/q".
    static Ring parse(const std::string& ring_spec, const std::string& delta = "0");

    RingKind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }
    const Rat& delta() const { return delta_; }
    bool is_field() const { return kind_ == RingKind::rationals || kind_ == RingKind::prime_field; }

    // Canonical representative of a scalar in this ring.  Throws ring_error
    // if the value does not lie in the ring (a non-integer over Z, or a
    // fraction with non-invertible denominator over F_p / Z/m).
    Rat canon(const Rat& x) const;

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }

    Rat add(const Rat& a, const Rat& b) const { return canon(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return canon(a - b); }
    Rat neg(const Rat& a) const { return canon(-a); }
    Rat mul(const Rat& a, const Rat& b) const { return canon(a * b); }

    bool is_zero(const Rat& a) const { return canon(a) == 0; }
    bool eq(const Rat& a, const Rat& b) const { return canon(a) == canon(b); }

    bool is_unit(const Rat& a) const;
    Rat inverse(const Rat& a) const;  // throws ring_error if not a unit
    // Exact division a / b where b divides a; throws otherwise.
    Rat div_exact(const Rat& a, const Rat& b) const;

    Rat pow(const Rat& a, long e) const;

    std::string to_string(const Rat& a) const;
    Rat parse_scalar(const std::string& s) const;

    std::string spec_string() const;  // "Z", "Q", "Fp:5", "Zmod:6"

    bool operator==(const Ring& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_ && delta_ == o.delta_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    void validate() const;

    RingKind kind_;
    Int modulus_;  // 0 for Z and Q
    Rat delta_;
};

// Parses "k" or "p/q" into an exact rational; throws ring_error on junk.
Rat parse_rational(const std::string& s);

}  // namespace brauer

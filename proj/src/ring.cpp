#include "brauer/ring.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace brauer {

namespace {

Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Extended gcd: returns g = gcd(a,b) and x with a*x == g (mod b).
Int ext_gcd_coeff(Int a, Int b, const Int& modulus) {
    Int x0 = 1, x1 = 0;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    (void)modulus;
    return x0;
}

bool probably_prime(const Int& p) {
    if (p < 2) return false;
    return boost::multiprecision::miller_rabin_test(p, 32);
}

}  // namespace

Ring::Ring(RingKind kind, const Rat& delta) : kind_(kind), modulus_(0), delta_(0) {
    if (kind != RingKind::integers && kind != RingKind::rationals)
        throw ring_error("modulus required for this ring kind");
    validate();
    delta_ = canon(delta);
}

Ring::Ring(RingKind kind, const Int& modulus, const Rat& delta)
    : kind_(kind), modulus_(modulus), delta_(0) {
    if (kind != RingKind::prime_field && kind != RingKind::integers_mod)
        throw ring_error("modulus only valid for F_p and Z/m");
    validate();
    delta_ = canon(delta);
}

void Ring::validate() const {
    switch (kind_) {
        case RingKind::integers:
        case RingKind::rationals:
            break;
        case RingKind::prime_field:
            if (!probably_prime(modulus_))
                throw ring_error("prime-field modulus is not prime: " + modulus_.str());
            break;
        case RingKind::integers_mod:
            if (modulus_ < 2) throw ring_error("Z/m requires m >= 2");
            break;
    }
}

Ring Ring::parse(const std::string& ring_spec, const std::string& delta) {
    Rat d = parse_rational(delta);
    if (ring_spec == "Z") return Ring(RingKind::integers, d);
    if (ring_spec == "Q") return Ring(RingKind::rationals, d);
    auto colon = ring_spec.find(':');
    if (colon != std::string::npos) {
        std::string head = ring_spec.substr(0, colon);
        std::string tail = ring_spec.substr(colon + 1);
        Int m;
        try {
            m = Int(tail);
        } catch (const std::exception&) {
            throw ring_error("bad modulus in ring spec: " + ring_spec);
        }
        if (head == "Fp") return Ring(RingKind::prime_field, m, d);
        if (head == "Zmod") return Ring(RingKind::integers_mod, m, d);
    }
    throw ring_error("unknown ring spec: " + ring_spec + " (expected Z, Q, Fp:<p>, Zmod:<m>)");
}

Rat Ring::canon(const Rat& x) const {
    switch (kind_) {
        case RingKind::rationals:
            return x;
        case RingKind::integers:
            if (denominator(x) != 1) throw ring_error("not an integer: " + x.str());
            return x;
        case RingKind::prime_field:
        case RingKind::integers_mod: {
            Int num = mod_reduce(numerator(x), modulus_);
            Int den = mod_reduce(denominator(x), modulus_);
            if (den == 1) return Rat(num);
            Int g = gcd(den, modulus_);
            if (g != 1) throw ring_error("denominator not invertible mod " + modulus_.str());
            Int inv = mod_reduce(ext_gcd_coeff(den, modulus_, modulus_), modulus_);
            return Rat(mod_reduce(num * inv, modulus_));
        }
    }
    throw ring_error("bad ring kind");
}

bool Ring::is_unit(const Rat& a) const {
    Rat c = canon(a);
    switch (kind_) {
        case RingKind::rationals:
            return c != 0;
        case RingKind::integers:
            return c == 1 || c == -1;
        case RingKind::prime_field:
            return c != 0;
        case RingKind::integers_mod:
            return gcd(numerator(c), modulus_) == 1;
    }
    return false;
}

Rat Ring::inverse(const Rat& a) const {
    if (!is_unit(a)) throw ring_error("not a unit: " + to_string(a));
    Rat c = canon(a);
    if (kind_ == RingKind::rationals || kind_ == RingKind::integers) return canon(1 / c);
    Int inv = mod_reduce(ext_gcd_coeff(numerator(c), modulus_, modulus_), modulus_);
    return Rat(inv);
}

Rat Ring::div_exact(const Rat& a, const Rat& b) const {
    Rat cb = canon(b);
    if (is_zero(cb)) throw ring_error("division by zero");
    if (is_unit(cb)) return mul(a, inverse(cb));
    // Non-unit divisor: only meaningful over Z (and Z/m via lift).
    Rat ca = canon(a);
    Rat q = ca / cb;
    if (kind_ == RingKind::integers && denominator(q) != 1)
        throw ring_error("inexact division");
    if (kind_ == RingKind::integers_mod) {
        // Solve b*x = a in Z/m when gcd(b,m) divides a.
        Int bn = numerator(cb), an = numerator(ca);
        Int g = gcd(bn, modulus_);
        if (an % g != 0) throw ring_error("inexact division mod " + modulus_.str());
        Int m2 = modulus_ / g;
        Int inv = mod_reduce(ext_gcd_coeff(bn / g, m2, m2), m2);
        return Rat(mod_reduce((an / g) * inv, modulus_));
    }
    return canon(q);
}

Rat Ring::pow(const Rat& a, long e) const {
    Rat r = one(), base = canon(a);
    for (long i = 0; i < e; ++i) r = mul(r, base);
    return r;
}

std::string Ring::to_string(const Rat& a) const {
    Rat c = canon(a);
    if (denominator(c) == 1) return numerator(c).str();
    return numerator(c).str() + "/" + denominator(c).str();
}

Rat Ring::parse_scalar(const std::string& s) const { return canon(parse_rational(s)); }

std::string Ring::spec_string() const {
    switch (kind_) {
        case RingKind::integers: return "Z";
        case RingKind::rationals: return "Q";
        case RingKind::prime_field: return "Fp:" + modulus_.str();
        case RingKind::integers_mod: return "Zmod:" + modulus_.str();
    }
    return "?";
}

Rat parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ring_error("zero denominator: " + s);
        return Rat(num) / Rat(den);
    } catch (const ring_error&) {
        throw;
    } catch (const std::exception&) {
        throw ring_error("cannot parse rational: " + s);
    }
}

}  // namespace brauer

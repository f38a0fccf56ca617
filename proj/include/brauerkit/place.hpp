#pragma once

// A place of Q: the real place or a finite prime.

#include <compare>
#include <string>

#include "brauerkit/numeric.hpp"

namespace brauerkit {

class Place {
public:
    static Place real() { return Place(); }
    static Place finite(const Integer& p) {
        if (!is_prime(p)) throw ParseError("not a prime: " + p.str());
        Place v;
        v.real_ = false;
        v.p_ = p;
        return v;
    }

    bool is_real() const { return real_; }
    bool is_finite() const { return !real_; }
    const Integer& prime() const {
        if (real_) throw InternalError("prime() of the real place");
        return p_;
    }

    // The real place sorts before all finite places.
    friend bool operator==(const Place& a, const Place& b) {
        return a.real_ == b.real_ && a.p_ == b.p_;
    }
    friend bool operator<(const Place& a, const Place& b) {
        if (a.real_ != b.real_) return a.real_;
        return a.p_ < b.p_;
    }

    std::string str() const { return real_ ? "inf" : p_.str(); }

    static Place parse(const std::string& s) {
        if (s == "inf" || s == "real" || s == "oo") return real();
        return finite(parse_integer(s));
    }

private:
    Place() : real_(true), p_(0) {}
    bool real_;
    Integer p_;
};

}  // namespace brauerkit

#include "operadkit/rational.hpp"

#include <limits>
#include <ostream>

#include "operadkit/error.hpp"

namespace operadkit {
namespace {

using u128 = unsigned __int128;

u128 uabs(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    std::uint64_t x = a < 0 ? 0 - std::uint64_t(a) : std::uint64_t(a);
    std::uint64_t y = b < 0 ? 0 - std::uint64_t(b) : std::uint64_t(b);
    while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
    }
    return std::int64_t(x);
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

mpz_class to_mpz(__int128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(std::uint64_t(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(std::uint64_t(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpz_class to_mpz(std::int64_t v) { return to_mpz(__int128(v)); }

bool mpz_to_i64(const mpz_class& z, std::int64_t& out) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
    long v = z.get_si();
    if (v == std::numeric_limits<long>::min()) return false;
    out = v;
    return true;
}

}  // namespace

Rational::Rational(std::int64_t n) {
    if (n == std::numeric_limits<std::int64_t>::min()) assign_wide(n, 1);
    else num_ = n;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::Domain, "rational with zero denominator");
    assign_wide(num, den);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) {
        if (big_) *big_ = *other.big_;
        else big_ = std::make_unique<mpq_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    std::string ds = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    auto valid = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!valid(ns, true) || !valid(ds, false))
        throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
    if (ns[0] == '+') ns.erase(0, 1);
    mpz_class n(ns, 10), d(ds, 10);
    if (d == 0) throw Error(ErrorKind::Parse, "rational with zero denominator '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const {
    if (big_) return big_->get_den() == 1;
    return den_ == 1;
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(to_mpz(num_), to_mpz(den_));
    return q;
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::numerator_str() const {
    return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_str() const {
    return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

void Rational::assign_mpq(mpq_class q) {
    std::int64_t n = 0, d = 1;
    if (mpz_to_i64(q.get_num(), n) && mpz_to_i64(q.get_den(), d)) {
        num_ = n;
        den_ = d;
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    if (big_) *big_ = std::move(q);
    else big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::assign_wide(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(num), u128(den));
    if (g > 1) {
        num /= __int128(g);
        den /= __int128(g);
    }
    if (fits(num) && fits(den)) {
        num_ = std::int64_t(num);
        den_ = std::int64_t(den);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    assign_mpq(std::move(q));
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.big_) *r.big_ = -*r.big_;
    else r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == o.den_) {
            assign_wide(__int128(num_) + o.num_, den_);
        } else {
            assign_wide(__int128(num_) * o.den_ + __int128(o.num_) * den_,
                        __int128(den_) * o.den_);
        }
        return *this;
    }
    assign_mpq(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == o.den_) {
            assign_wide(__int128(num_) - o.num_, den_);
        } else {
            assign_wide(__int128(num_) * o.den_ - __int128(o.num_) * den_,
                        __int128(den_) * o.den_);
        }
        return *this;
    }
    assign_mpq(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        // cross-cancel so the products are already in lowest terms
        std::int64_t g1 = gcd64(num_, o.den_);
        std::int64_t g2 = gcd64(o.num_, den_);
        std::int64_t a = num_ / g1, d = o.den_ / g1;
        std::int64_t c = o.num_ / g2, b = den_ / g2;
        std::int64_t n = 0, m = 0;
        if (!__builtin_mul_overflow(a, c, &n) && !__builtin_mul_overflow(b, d, &m) &&
            n != std::numeric_limits<std::int64_t>::min()) {
            num_ = n;
            den_ = m;
            return *this;
        }
        assign_wide(__int128(a) * c, __int128(b) * d);
        return *this;
    }
    assign_mpq(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::Domain, "division by zero");
    if (!big_ && !o.big_) {
        Rational inv;
        inv.assign_wide(o.den_, o.num_);
        return *this *= inv;
    }
    assign_mpq(to_mpq() / o.to_mpq());
    return *this;
}

void Rational::sub_mul(const Rational& f, const Rational& o) {
    if (f.is_zero() || o.is_zero()) return;
    if (!big_ && !f.big_ && !o.big_ && den_ == 1 && f.den_ == 1 && o.den_ == 1) {
        std::int64_t p = 0, r = 0;
        if (!__builtin_mul_overflow(f.num_, o.num_, &p) &&
            !__builtin_sub_overflow(num_, p, &r) &&
            r != std::numeric_limits<std::int64_t>::min()) {
            num_ = r;
            return;
        }
    }
    *this -= f * o;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (!a.big_ || !b.big_) return false;  // canonical: big values never fit inline
    return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
        return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace operadkit

#include "ctrdesign/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "ctrdesign/errors.hpp"

namespace ctrdesign {

Rational::Rational(long num, long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    if (v_.get_den() == 0) throw ValidationError("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    return sgn() < 0 ? -*this : *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw ValidationError("zero raised to a negative power");
    mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), k);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), k);
    return Rational(out);  // canonical since base is canonical
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ValidationError("empty rational literal");

    bool neg = false;
    if (text.front() == '+' || text.front() == '-') {
        neg = text.front() == '-';
        text.remove_prefix(1);
        if (text.empty()) throw ValidationError("bare sign is not a rational");
    }

    auto fail = [&] { throw ValidationError("cannot parse rational literal"); };

    std::string_view mant = text;
    long exp10 = 0;
    if (auto epos = text.find_first_of("eE"); epos != std::string_view::npos) {
        mant = text.substr(0, epos);
        std::string_view es = text.substr(epos + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6) fail();
        for (char c : es) exp10 = exp10 * 10 + (c - '0');
        if (eneg) exp10 = -exp10;
    }

    mpz_class num, den(1);
    if (auto slash = mant.find('/'); slash != std::string_view::npos) {
        if (exp10 != 0) fail();  // no exponents on p/q forms
        std::string_view ns = mant.substr(0, slash), ds = mant.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds)) fail();
        num = mpz_class(std::string(ns));
        den = mpz_class(std::string(ds));
        if (den == 0) throw ValidationError("rational with zero denominator");
    } else if (auto dot = mant.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
        if (ip.empty() && fp.empty()) fail();
        if (!ip.empty() && !all_digits(ip)) fail();
        if (!fp.empty() && !all_digits(fp)) fail();
        std::string joined = std::string(ip) + std::string(fp);
        num = joined.empty() ? mpz_class(0) : mpz_class(joined);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    } else {
        if (!all_digits(mant)) fail();
        num = mpz_class(std::string(mant));
    }

    if (exp10 > 0) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
        num *= scale;
    } else if (exp10 < 0) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
        den *= scale;
    }
    if (neg) num = -num;

    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(|num|*scale/den), half away from zero
    mpz_class n = num() * scale;
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), den().get_mpz_t());
    if (2 * r >= den()) q += 1;
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = neg && q != 0 ? "-" : "";
    if (digits == 0) return out + s;
    out += s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

}  // namespace ctrdesign

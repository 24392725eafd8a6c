#include "divalg/rational.hpp"

#include <cctype>
#include <ostream>

namespace divalg {

Rational::Rational(long num, long den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw usage_error("empty rational literal");
    std::size_t i = 0;
    auto scan_signed_digits = [&]() {
        if (i < text.size() && text[i] == '-') ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i > start;
    };
    bool ok = scan_signed_digits();
    if (ok && i < text.size() && text[i] == '/') {
        ++i;
        ok = scan_signed_digits();
    }
    if (!ok || i != text.size())
        throw usage_error("malformed rational literal '" + std::string(text) +
                          "' (expected e.g. \"-7\" or \"3/2\")");

    const std::string s(text);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw usage_error("malformed rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw usage_error("zero denominator in rational literal '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

bool Rational::is_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(den().get_mpz_t()) != 0;
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(num().get_mpz_t(), 2) + mpz_sizeinbase(den().get_mpz_t(), 2);
}

Rational Rational::inverse() const {
    if (is_zero()) throw domain_error("division by zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class num_p, den_p;
    mpz_pow_ui(num_p.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den_p.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num_p, den_p));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace divalg

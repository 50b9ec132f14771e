#include "idp/kappa.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "idp/qarith.hpp"

namespace idp {

KappaSpec KappaSpec::even_qint(int ell) {
    return KappaSpec(Kind::EvenQInt, ell, qint(2 * ell));
}

KappaSpec KappaSpec::odd_qint(int ell) {
    return KappaSpec(Kind::OddQInt, ell, qint(2 * ell - 1));
}

KappaSpec KappaSpec::generic(const LaurentPoly& value) {
    if (!value.is_bar_invariant())
        throw std::invalid_argument("kappa must be bar-invariant: " + value.to_string());
    return KappaSpec(Kind::Generic, 0, value);
}

Parity KappaSpec::qint_parity() const {
    switch (kind_) {
        case Kind::EvenQInt: return Parity::Even;
        case Kind::OddQInt: return Parity::Odd;
        default: throw std::logic_error("qint_parity: generic kappa");
    }
}

std::string KappaSpec::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::EvenQInt: os << "[" << 2 * ell_ << "]"; break;
        case Kind::OddQInt: os << "[" << 2 * ell_ - 1 << "]"; break;
        case Kind::Generic: os << value_.to_string(); break;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    long integer() {
        skip_ws();
        const std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        const std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw std::invalid_argument("expected integer in: " + s);
        return std::stol(s.substr(start, i - start));
    }
};

// term := '[' int ']' | int ['*'? q-part] | q-part ;  q-part := 'q' ['^' int]
LaurentPoly parse_term(Cursor& c) {
    if (c.eat('[')) {
        const long n = c.integer();
        if (!c.eat(']')) throw std::invalid_argument("missing ']' in: " + c.s);
        return qint(static_cast<int>(n));
    }
    BigInt coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = c.integer();
        have_coeff = true;
        c.eat('*');
    }
    if (c.peek() == 'q') {
        c.eat('q');
        int e = 1;
        if (c.eat('^')) e = static_cast<int>(c.integer());
        return LaurentPoly::monomial(e, coeff);
    }
    if (!have_coeff) throw std::invalid_argument("expected term in: " + c.s);
    return LaurentPoly(coeff);
}

} // namespace

LaurentPoly parse_laurent(const std::string& text) {
    Cursor c{text};
    LaurentPoly acc;
    bool saw_term = false;
    bool expect_term = true;
    int sign = +1;
    while (!c.done()) {
        if (!expect_term) {
            if (c.eat('+')) {
                sign = +1;
            } else if (c.eat('-')) {
                sign = -1;
            } else {
                throw std::invalid_argument("expected '+' or '-' in: " + text);
            }
            expect_term = true;
            continue;
        }
        while (c.peek() == '-' || c.peek() == '+') {
            if (c.eat('-')) sign = -sign;
            c.eat('+');
        }
        LaurentPoly term = parse_term(c);
        acc += (sign < 0) ? -term : term;
        sign = +1;
        saw_term = true;
        expect_term = false;
    }
    if (!saw_term || expect_term)
        throw std::invalid_argument("malformed Laurent expression: " + text);
    return acc;
}

} // namespace idp

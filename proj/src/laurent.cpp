#include "zharm/laurent.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace zharm::laurent {

LaurentPoly LaurentPoly::constant(BigInt c) { return term(std::move(c), 0); }

LaurentPoly LaurentPoly::term(BigInt c, int exp) {
    LaurentPoly f;
    if (c != 0) f.coeffs_.emplace(exp, std::move(c));
    return f;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, BigInt c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = std::move(c);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    for (const auto& [e, c] : g.coeffs_) {
        auto [it, inserted] = coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) { return *this += -g; }

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly r;
    for (const auto& [ef, cf] : f.coeffs_)
        for (const auto& [eg, cg] : g.coeffs_) {
            auto [it, inserted] = r.coeffs_.try_emplace(ef + eg, BigInt(cf * cg));
            if (!inserted) {
                it->second += cf * cg;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

BigRat eval_int(const LaurentPoly& f, const BigInt& x) {
    if (x == 0) throw std::invalid_argument("eval_int: evaluation point must be nonzero");
    if (f.is_zero()) return BigRat(0);
    // Horner over the shifted ordinary polynomial, then divide by x^{-min}.
    const int shift = f.min_exp() < 0 ? -f.min_exp() : 0;
    BigInt acc = 0;
    int prev = f.max_exp() + shift;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const int e = it->first + shift;
        for (int i = 0; i < prev - e; ++i) acc *= x;
        acc += it->second;
        prev = e;
    }
    for (int i = 0; i < prev; ++i) acc *= x;
    if (shift == 0) return BigRat(acc);
    BigInt den = 1;
    for (int i = 0; i < shift; ++i) den *= x;
    if (den < 0) {  // cpp_rational requires a positive denominator
        acc = -acc;
        den = -den;
    }
    return BigRat(acc, den);
}

LaurentPoly cyclotomic_column(int k) {
    if (k < 2) throw std::invalid_argument("cyclotomic_column: k must be >= 2");
    LaurentPoly f;
    for (int i = 0; i < k; ++i) f.set_coeff(i, 1);
    return f;
}

namespace {

// Dense ascending coefficient vector of an ordinary polynomial.
std::vector<BigInt> dense_coeffs(const LaurentPoly& f) {
    std::vector<BigInt> v(static_cast<size_t>(f.max_exp()) + 1);
    for (const auto& [e, c] : f.terms()) v[static_cast<size_t>(e)] = c;
    return v;
}

// Fraction-free (Bareiss) determinant over the integers. Row swaps flip the
// sign; every interior division is exact by the Sylvester identity.
BigInt bareiss_det(std::vector<std::vector<BigInt>>& m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

BigInt resultant(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant: inputs must be nonzero");
    if (f.min_exp() < 0 || g.min_exp() < 0)
        throw std::invalid_argument("resultant: inputs must be ordinary polynomials");
    const auto fc = dense_coeffs(f);
    const auto gc = dense_coeffs(g);
    const size_t m = fc.size() - 1;  // deg f
    const size_t n = gc.size() - 1;  // deg g
    if (m == 0) {
        BigInt r = 1;
        for (size_t i = 0; i < n; ++i) r *= fc[0];
        return r;
    }
    if (n == 0) {
        BigInt r = 1;
        for (size_t i = 0; i < m; ++i) r *= gc[0];
        return r;
    }
    // Sylvester matrix: n shifted copies of f's coefficients (descending),
    // then m shifted copies of g's.
    std::vector<std::vector<BigInt>> syl(m + n, std::vector<BigInt>(m + n, BigInt(0)));
    for (size_t row = 0; row < n; ++row)
        for (size_t j = 0; j <= m; ++j) syl[row][row + j] = fc[m - j];
    for (size_t row = 0; row < m; ++row)
        for (size_t j = 0; j <= n; ++j) syl[n + row][row + j] = gc[n - j];
    return bareiss_det(syl);
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (f.is_zero()) return {};
    // Clear units so both operands are ordinary polynomials, divide there,
    // and shift the quotient back.
    const int mf = f.min_exp();
    const int mg = g.min_exp();
    LaurentPoly rem = f.shifted(-mf);
    const LaurentPoly gg = g.shifted(-mg);
    const int dg = gg.max_exp();
    const BigInt& glead = gg.coeff(dg);
    LaurentPoly q;
    while (!rem.is_zero() && rem.max_exp() >= dg) {
        const BigInt rlead = rem.coeff(rem.max_exp());
        if (rlead % glead != 0)
            throw InexactDivisionError("divide_exact: inexact division",
                                       rem.shifted(mf).terms());
        const LaurentPoly step = LaurentPoly::term(rlead / glead, rem.max_exp() - dg);
        q += step;
        rem -= step * gg;
    }
    if (!rem.is_zero())
        throw InexactDivisionError("divide_exact: inexact division", rem.shifted(mf).terms());
    return q.shifted(mf - mg);
}

UnitClass::UnitClass(const LaurentPoly& f) {
    if (f.is_zero()) return;
    LaurentPoly c = f.shifted(-f.min_exp());
    if (c.coeff(c.max_exp()) < 0) c = -c;
    canonical_ = std::move(c);
}

UnitClass normalize(const LaurentPoly& f) { return UnitClass(f); }

namespace {

struct Lexer {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // Unsigned decimal integer (whitespace inside digits is not allowed).
    BigInt integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("polynomial: expected integer at position " +
                                           std::to_string(start));
        return BigInt(std::string(s.substr(start, pos - start)));
    }
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) {
    Lexer lx{text};
    LaurentPoly poly;
    bool first = true;
    while (true) {
        if (lx.eof()) {
            if (first) throw ParseError("polynomial: empty input");
            break;
        }
        BigInt sign = 1;
        if (lx.consume('-'))
            sign = -1;
        else if (!first && !lx.consume('+'))
            throw ParseError("polynomial: expected '+' or '-' at position " +
                             std::to_string(lx.pos));
        first = false;

        BigInt coeff = 1;
        bool have_coeff = false;
        if (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coeff = lx.integer();
            have_coeff = true;
        }
        int exp = 0;
        if (!lx.eof() && (lx.peek() == 't' || (have_coeff && lx.peek() == '*'))) {
            if (have_coeff) lx.consume('*');
            if (!lx.consume('t'))
                throw ParseError("polynomial: expected 't' at position " + std::to_string(lx.pos));
            exp = 1;
            if (lx.consume('^')) {
                bool neg = lx.consume('-');
                BigInt e = lx.integer();
                if (e > 1000000) throw ParseError("polynomial: exponent out of range");
                exp = static_cast<int>(e);
                if (neg) exp = -exp;
            }
        } else if (!have_coeff) {
            throw ParseError("polynomial: expected term at position " + std::to_string(lx.pos));
        }
        poly += LaurentPoly::term(sign * coeff, exp);
    }
    return poly;
}

std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        const bool neg = c < 0;
        BigInt a = neg ? BigInt(-c) : c;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        if (a != 1 || e == 0) out += a.str();
        if (e != 0) {
            out += 't';
            if (e != 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
    }
    return out;
}

}  // namespace zharm::laurent

#include "zharm/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <string>

namespace zharm::braid {

BraidWord parse_braid(std::string_view text) {
    auto fail = [](const std::string& msg) { throw ParseError("braid: " + msg); };

    size_t colon = text.find(':');
    std::string_view list = text;
    int strands = -1;
    if (colon != std::string_view::npos) {
        std::string head(text.substr(0, colon));
        try {
            size_t used = 0;
            strands = std::stoi(head, &used);
            while (used < head.size() && std::isspace(static_cast<unsigned char>(head[used])))
                ++used;
            if (used != head.size()) fail("malformed strand count '" + head + "'");
        } catch (const std::logic_error&) {
            fail("malformed strand count '" + head + "'");
        }
        if (strands < 1) fail("strand count must be >= 1");
        list = text.substr(colon + 1);
    }

    std::vector<int> letters;
    size_t i = 0;
    while (i < list.size()) {
        char c = list[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        bool neg = false;
        if (c == '-' || c == '+') {
            neg = (c == '-');
            ++i;
        }
        size_t start = i;
        while (i < list.size() && std::isdigit(static_cast<unsigned char>(list[i]))) ++i;
        if (i == start) fail("malformed token at position " + std::to_string(i));
        int v = std::stoi(std::string(list.substr(start, i - start)));
        if (v == 0) fail("letter 0 is not a generator");
        letters.push_back(neg ? -v : v);
    }

    if (strands < 0) {
        // Bare list: infer n.
        int maxg = 0;
        for (int g : letters) maxg = std::max(maxg, std::abs(g));
        strands = maxg + 1;
    }
    for (int g : letters)
        if (std::abs(g) > strands - 1)
            fail("letter " + std::to_string(g) + " out of range for " +
                 std::to_string(strands) + " strands");
    return BraidWord{strands, std::move(letters)};
}

int closure_components(const BraidWord& b) {
    std::vector<int> perm(static_cast<size_t>(b.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int g : b.letters) {
        int i = std::abs(g) - 1;  // sign does not change the permutation
        std::swap(perm[i], perm[i + 1]);
    }
    int cycles = 0;
    std::vector<bool> seen(perm.size(), false);
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (size_t j = s; !seen[j]; j = static_cast<size_t>(perm[j])) seen[j] = true;
    }
    return cycles;
}

PolyMatrix PolyMatrix::identity(size_t n) {
    PolyMatrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    const size_t n = a.size();
    if (n != b.size()) throw std::invalid_argument("PolyMatrix: size mismatch");
    PolyMatrix r(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

namespace {

LaurentPoly cofactor_det(const PolyMatrix& m) {
    const size_t n = m.size();
    if (n == 0) return LaurentPoly::one();
    if (n == 1) return m.at(0, 0);
    LaurentPoly det;
    for (size_t r = 0; r < n; ++r) {
        if (m.at(r, 0).is_zero()) continue;
        PolyMatrix minor(n - 1);
        for (size_t i = 0, mi = 0; i < n; ++i) {
            if (i == r) continue;
            for (size_t j = 1; j < n; ++j) minor.at(mi, j - 1) = m.at(i, j);
            ++mi;
        }
        LaurentPoly term = m.at(r, 0) * cofactor_det(minor);
        if (r % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// Fraction-free elimination over the Laurent ring; interior divisions are
// exact by the Sylvester identity.
LaurentPoly bareiss_det(PolyMatrix m) {
    const size_t n = m.size();
    int sign = 1;
    LaurentPoly prev = LaurentPoly::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            size_t r = k + 1;
            while (r < n && m.at(r, k).is_zero()) ++r;
            if (r == n) return {};
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = laurent::divide_exact(
                    m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = {};
        }
        prev = m.at(k, k);
    }
    LaurentPoly det = m.at(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

}  // namespace

LaurentPoly determinant(const PolyMatrix& m) {
    return m.size() <= 4 ? cofactor_det(m) : bareiss_det(m);
}

PolyMatrix burau_generator(int n, int letter) {
    if (n < 2) throw std::invalid_argument("burau_generator: need n >= 2");
    const int i = std::abs(letter);
    if (i < 1 || i > n - 1) throw std::invalid_argument("burau_generator: letter out of range");
    PolyMatrix m = PolyMatrix::identity(static_cast<size_t>(n - 1));
    // Basis indices are 1-based e_1..e_{n-1}; column c holds the image of e_c.
    auto set = [&](int row, int col, LaurentPoly v) {
        m.at(static_cast<size_t>(row - 1), static_cast<size_t>(col - 1)) = std::move(v);
    };
    if (letter > 0) {
        if (i >= 2) set(i, i - 1, LaurentPoly::t());
        set(i, i, -LaurentPoly::t());
        if (i <= n - 2) set(i, i + 1, LaurentPoly::one());
    } else {
        const LaurentPoly tinv = LaurentPoly::term(1, -1);
        if (i >= 2) set(i, i - 1, LaurentPoly::one());
        set(i, i, -tinv);
        if (i <= n - 2) set(i, i + 1, tinv);
    }
    return m;
}

PolyMatrix burau_reduced(const BraidWord& b) {
    if (b.strands < 2) throw std::invalid_argument("burau_reduced: need n >= 2");
    PolyMatrix m = PolyMatrix::identity(static_cast<size_t>(b.strands - 1));
    for (int g : b.letters) m = m * burau_generator(b.strands, g);
    return m;
}

UnitClass alexander_from_braid(const BraidWord& b) {
    PolyMatrix m = burau_reduced(b);
    PolyMatrix diff = std::move(m);
    for (size_t i = 0; i < diff.size(); ++i) diff.at(i, i) -= LaurentPoly::one();
    LaurentPoly det = determinant(diff);
    if (det.is_zero()) return {};
    det = det.shifted(-det.min_exp());
    LaurentPoly q = laurent::divide_exact(det, laurent::cyclotomic_column(b.strands));
    return laurent::normalize(q);
}

UnitClass alexander_from_seifert(const SeifertMatrix& s) {
    const size_t n = s.entries.size();
    for (const auto& row : s.entries)
        if (row.size() != n) throw std::invalid_argument("SeifertMatrix must be square");
    PolyMatrix m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // (t*S - S^T)_{ij}
            m.at(i, j) = LaurentPoly::term(s.entries[i][j], 1) -
                         LaurentPoly::constant(s.entries[j][i]);
        }
    return laurent::normalize(determinant(m));
}

}  // namespace zharm::braid

#include "zharm/cover.hpp"

namespace zharm::cover {

using laurent::LaurentPoly;

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::NO_CRITERION: return "NO_CRITERION";
        case Conclusion::EXISTS_B1_POSITIVE: return "EXISTS_B1_POSITIVE";
        case Conclusion::EXISTS_QHS: return "EXISTS_QHS";
    }
    return "?";
}

BigInt link_determinant(const UnitClass& delta) {
    if (delta.is_zero()) return 0;
    // Canonical form has min exponent 0, so the value at -1 is integral.
    BigRat v = laurent::eval_int(delta.canonical(), BigInt(-1));
    BigInt num = boost::multiprecision::numerator(v);
    return num < 0 ? BigInt(-num) : num;
}

BigInt homology_order(const CoverQuery& q) {
    if (q.k < 2 || q.k > kMaxCoverDegree)
        throw std::invalid_argument("homology_order: k must be in [2, 64]");
    if (q.delta.is_zero()) return 0;
    BigInt r = laurent::resultant(laurent::cyclotomic_column(q.k), q.delta.canonical());
    return r < 0 ? BigInt(-r) : r;
}

BigInt homology_order(const UnitClass& delta, int k) {
    return homology_order(CoverQuery{delta, k});
}

CoverVerdict criterion(const UnitClass& delta, std::optional<int> components) {
    CoverVerdict v;
    v.determinant = link_determinant(delta);
    v.order2 = homology_order(delta, 2);
    v.order3 = homology_order(delta, 3);
    v.b1_s2_positive = (v.determinant == 0);
    v.qhs3 = (v.order3 != 0);
    if (components && *components == 1 && v.determinant == 0)
        throw DataError("criterion: determinant 0 reported for a knot (1 component); "
                        "a knot's determinant is never zero");
    if (v.determinant != 0)
        v.conclusion = Conclusion::NO_CRITERION;
    else
        v.conclusion = v.qhs3 ? Conclusion::EXISTS_QHS : Conclusion::EXISTS_B1_POSITIVE;
    return v;
}

UnitClass compose(const UnitClass& d1, const UnitClass& d2) {
    return laurent::normalize(d1.canonical() * d2.canonical());
}

UnitClass trefoil_delta() {
    return laurent::normalize(laurent::parse_poly("1-t+t^2"));
}

BigInt family_order(const UnitClass& deltaL, int n, int k) {
    if (n < 0) throw std::invalid_argument("family_order: n must be >= 0");
    UnitClass d = deltaL;
    const UnitClass trefoil = trefoil_delta();
    for (int i = 0; i < n; ++i) d = compose(d, trefoil);
    return homology_order(d, k);
}

}  // namespace zharm::cover

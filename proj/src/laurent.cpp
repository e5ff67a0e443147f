#include "rank2/laurent.hpp"

#include <algorithm>

#include "rank2/errors.hpp"
#include "rank2/ratfunc.hpp"

namespace rank2 {

LaurentFraction laurent_normalize(Polynomial num, long d1, long d2) {
    if (num.is_zero()) throw ZeroNumerator("laurent numerator is zero");
    const Monomial content = num.monomial_content();
    LaurentFraction lf;
    lf.num = num.divided_by_monomial(content);
    lf.d1 = d1 - content.e1;
    lf.d2 = d2 - content.e2;
    return lf;
}

LaurentFraction lf_one() { return {Polynomial::constant(1), 0, 0}; }

LaurentFraction lf_var(int index) {
    if (index != 1 && index != 2) throw IndexOutOfRange("variable index must be 1 or 2");
    LaurentFraction lf;
    lf.num = Polynomial::constant(1);
    lf.d1 = index == 1 ? -1 : 0;
    lf.d2 = index == 2 ? -1 : 0;
    return lf;
}

LaurentFraction lf_pow(const LaurentFraction& a, long e) {
    if (e < 0) throw PreconditionViolated("lf_pow exponent must be >= 0");
    if (e == 0) return lf_one();
    LaurentFraction lf;
    lf.num = a.num.pow(e);
    lf.d1 = a.d1 * e;
    lf.d2 = a.d2 * e;
    return lf;  // num stays coprime to x1, x2 since a.num is
}

LaurentFraction lf_add_one(const LaurentFraction& a) {
    const long s1 = std::max(a.d1, 0L);
    const long s2 = std::max(a.d2, 0L);
    Polynomial num = a.num.shifted(static_cast<int>(s1 - a.d1),
                                   static_cast<int>(s2 - a.d2));
    num += Polynomial::monomial({static_cast<int>(s1), static_cast<int>(s2)},
                                Rational(1));
    return laurent_normalize(std::move(num), s1, s2);
}

LaurentFraction lf_div(const LaurentFraction& a, const LaurentFraction& b) {
    Polynomial q = exact_div(a.num, b.num);
    return laurent_normalize(std::move(q), a.d1 - b.d1, a.d2 - b.d2);
}

std::string str(const LaurentFraction& a) { return to_ratfunc(a).str(); }

}  // namespace rank2

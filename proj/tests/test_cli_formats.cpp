#include <doctest.h>

#include "idp/kappa.hpp"
#include "idp/qarith.hpp"
#include "idp/textform.hpp"

using namespace idp;

TEST_CASE("laurent expression parser") {
    CHECK(parse_laurent("0").is_zero());
    CHECK(parse_laurent("q^2 + 1 + q^-2") == qint(3));
    CHECK(parse_laurent("[3]") == qint(3));
    CHECK(parse_laurent("-[4]") == -qint(4));
    CHECK(parse_laurent("2*q^4 + 1 + 2*q^-4") ==
          LaurentPoly::monomial(4, 2) + LaurentPoly::one() + LaurentPoly::monomial(-4, 2));
    CHECK(parse_laurent("2q^4+1+2q^-4") == parse_laurent("2*q^4 + 1 + 2*q^-4"));
    CHECK(parse_laurent("q") == LaurentPoly::q_power(1));
    CHECK(parse_laurent("- q + 3") == LaurentPoly(3) - LaurentPoly::q_power(1));
    CHECK_THROWS_AS(parse_laurent(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("q +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("[x]"), std::invalid_argument);
}

TEST_CASE("kappa spec") {
    CHECK(KappaSpec::even_qint(2).value() == qint(4));
    CHECK(KappaSpec::odd_qint(0).value() == qint(-1));
    CHECK(KappaSpec::even_qint(2).qint_parity() == Parity::Even);
    CHECK(KappaSpec::odd_qint(1).to_string() == "[1]");
    CHECK_THROWS_AS(KappaSpec::generic(LaurentPoly::q_power(2)), std::invalid_argument);
}

TEST_CASE("json round shapes") {
    const Json lp = to_json(qint(2));
    CHECK(lp.dump() == R"([[-1,"1"],[1,"1"]])");

    const RatFunc r(LaurentPoly::one(), qint(2));
    const Json rj = to_json(r);
    CHECK(rj["num"].dump() == R"([[1,"1"]])");
    CHECK(rj["den"].dump() == R"([[0,"1"],[2,"1"]])");

    PBWElement e;
    e.add_term({1, -2, 3}, RatFunc(qint(2)));
    const Json ej = to_json(e);
    CHECK(ej.size() == 1);
    CHECK(ej[0]["a"] == 1);
    CHECK(ej[0]["s"] == -2);
    CHECK(ej[0]["b"] == 3);
}

TEST_CASE("latex emission") {
    CHECK(to_latex(qint(2)) == "q + q^{-1}");
    CHECK(to_latex(RatFunc(LaurentPoly::one(), qint(2))) == "\\frac{q}{q^{2} + 1}");
    PBWElement e;
    e.add_term({2, -1, 1}, RatFunc(LaurentPoly::q_power(-1)));
    CHECK(to_latex(e) == "q^{-1}\\check{E}^{(2)} K^{-1} F");
    CHECK(to_latex(p_poly(3), "x") == "x^{3} + \\left(q^{-2} + q^{-4}\\right) x");
}

TEST_CASE("poly tables") {
    const std::string table = poly_table("p", 3);
    CHECK(table == "p_0 = 1\np_1 = x\np_2 = x^2\np_3 = x^3 + (q^-2 + q^-4)*x\n");
    CHECK_THROWS_AS(poly_table("nosuch", 3), std::invalid_argument);
}

TEST_CASE("idp table shape") {
    const std::string table = idp_table(kEvenEven, 1);
    CHECK(table == "dvev(1) =\n  (kappa^0) F + Ec\n  (kappa^1) K^-1\n");
}

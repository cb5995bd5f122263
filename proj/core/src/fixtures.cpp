#include "hgi/fixtures.hpp"

#include "hgi/division.hpp"

namespace hgi {

namespace {

using R = std::vector<int>;

MinorSpec m(R rows, R cols) { return {std::move(rows), std::move(cols)}; }

FixtureTerm t(int sign, std::vector<VarId> scalars, std::vector<MinorSpec> minors) {
    return {sign, std::move(scalars), std::move(minors)};
}

IdentityFixture fix(std::string name, int d, int n, MinorSpec g1, MinorSpec g2,
                    std::vector<FixtureTerm> reduction) {
    return {std::move(name), d, n, std::move(g1), std::move(g2), std::move(reduction)};
}

} // namespace

std::vector<IdentityFixture> printed_identity_fixtures() {
    std::vector<IdentityFixture> out;

    out.push_back(fix(
        "5x5 S([123|123],[345|345])", 5, 5, m({1, 2, 3}, {1, 2, 3}), m({3, 4, 5}, {3, 4, 5}),
        {
            t(+1, {{4, 5}, {5, 4}}, {m({1, 2, 3}, {1, 2, 3})}),
            t(+1, {}, {m({3, 5}, {4, 5}), m({1, 2, 4}, {1, 2, 3})}),
            t(-1, {}, {m({2, 5}, {4, 5}), m({1, 3, 4}, {1, 2, 3})}),
            t(+1, {}, {m({1, 5}, {4, 5}), m({2, 3, 4}, {1, 2, 3})}),
            t(-1, {}, {m({3, 4}, {4, 5}), m({1, 2, 5}, {1, 2, 3})}),
            t(+1, {}, {m({2, 4}, {4, 5}), m({1, 3, 5}, {1, 2, 3})}),
            t(-1, {}, {m({1, 4}, {4, 5}), m({2, 3, 5}, {1, 2, 3})}),
            t(-1, {}, {m({2, 3}, {4, 5}), m({1, 4, 5}, {1, 2, 3})}),
            t(+1, {}, {m({1, 3}, {4, 5}), m({2, 4, 5}, {1, 2, 3})}),
            t(-1, {}, {m({1, 2}, {4, 5}), m({3, 4, 5}, {1, 2, 3})}),
            t(+1, {}, {m({4, 5}, {1, 2}), m({1, 2, 3}, {3, 4, 5})}),
            t(-1, {}, {m({3, 5}, {1, 2}), m({1, 2, 4}, {3, 4, 5})}),
            t(+1, {}, {m({2, 5}, {1, 2}), m({1, 3, 4}, {3, 4, 5})}),
            t(-1, {}, {m({1, 5}, {1, 2}), m({2, 3, 4}, {3, 4, 5})}),
            t(+1, {}, {m({3, 4}, {1, 2}), m({1, 2, 5}, {3, 4, 5})}),
            t(-1, {}, {m({2, 4}, {1, 2}), m({1, 3, 5}, {3, 4, 5})}),
            t(+1, {}, {m({1, 4}, {1, 2}), m({2, 3, 5}, {3, 4, 5})}),
            t(+1, {}, {m({2, 3}, {1, 2}), m({1, 4, 5}, {3, 4, 5})}),
            t(-1, {}, {m({1, 3}, {1, 2}), m({2, 4, 5}, {3, 4, 5})}),
            t(-1, {{1, 2}, {2, 1}}, {m({3, 4, 5}, {3, 4, 5})}),
        }));

    out.push_back(fix(
        "3x4 S([12|12],[134])", 3, 4, m({1, 2}, {1, 2}), m({1, 2, 3}, {1, 3, 4}),
        {
            t(-1, {{2, 1}}, {m({1, 2, 3}, {2, 3, 4})}),
            t(+1, {{2, 4}, {3, 3}}, {m({1, 2}, {1, 2})}),
            t(+1, {{1, 3}, {2, 4}}, {m({2, 3}, {1, 2})}),
            t(-1, {{1, 4}, {2, 3}}, {m({2, 3}, {1, 2})}),
        }));

    out.push_back(fix(
        "3x4 S([13|12],[134])", 3, 4, m({1, 3}, {1, 2}), m({1, 2, 3}, {1, 3, 4}),
        {
            t(-1, {{3, 1}}, {m({1, 2, 3}, {2, 3, 4})}),
            t(+1, {{2, 4}, {3, 3}}, {m({1, 3}, {1, 2})}),
            t(+1, {{1, 3}, {3, 4}}, {m({2, 3}, {1, 2})}),
            t(-1, {{1, 4}, {3, 3}}, {m({2, 3}, {1, 2})}),
        }));

    out.push_back(fix(
        "3x4 S([13|34],[124])", 3, 4, m({1, 3}, {3, 4}), m({1, 2, 3}, {1, 2, 4}),
        {
            t(-1, {{1, 4}}, {m({1, 2, 3}, {1, 2, 3})}),
            t(+1, {{1, 1}, {3, 2}}, {m({1, 2}, {3, 4})}),
            t(+1, {{1, 2}, {2, 1}}, {m({1, 3}, {3, 4})}),
            t(-1, {{1, 2}, {3, 1}}, {m({1, 2}, {3, 4})}),
        }));

    out.push_back(fix(
        "3x4 S([23|34],[124])", 3, 4, m({2, 3}, {3, 4}), m({1, 2, 3}, {1, 2, 4}),
        {
            t(-1, {{2, 4}}, {m({1, 2, 3}, {1, 2, 3})}),
            t(+1, {{1, 2}, {2, 1}}, {m({2, 3}, {3, 4})}),
            t(+1, {{2, 1}, {3, 2}}, {m({1, 2}, {3, 4})}),
            t(-1, {{2, 2}, {3, 1}}, {m({1, 2}, {3, 4})}),
        }));

    out.push_back(fix(
        "4x4 S([14|34],[234|124])", 4, 4, m({1, 4}, {3, 4}), m({2, 3, 4}, {1, 2, 4}),
        {
            t(-1, {{1, 4}}, {m({2, 3, 4}, {1, 2, 3})}),
            t(+1, {}, {m({2, 4}, {1, 2}), m({1, 3}, {3, 4})}),
            t(-1, {}, {m({3, 4}, {1, 2}), m({1, 2}, {3, 4})}),
            t(+1, {{2, 2}, {3, 1}}, {m({1, 4}, {3, 4})}),
        }));

    out.push_back(fix(
        "4x4 S([24|34],[134|124])", 4, 4, m({2, 4}, {3, 4}), m({1, 3, 4}, {1, 2, 4}),
        {
            t(-1, {{2, 4}}, {m({1, 3, 4}, {1, 2, 3})}),
            t(+1, {}, {m({1, 4}, {1, 2}), m({2, 3}, {3, 4})}),
            t(+1, {}, {m({3, 4}, {1, 2}), m({1, 2}, {3, 4})}),
            t(+1, {{1, 2}, {3, 1}}, {m({2, 4}, {3, 4})}),
        }));

    out.push_back(fix(
        "4x4 S([34|34],[124|124])", 4, 4, m({3, 4}, {3, 4}), m({1, 2, 4}, {1, 2, 4}),
        {
            t(-1, {{3, 4}}, {m({1, 2, 4}, {1, 2, 3})}),
            t(-1, {}, {m({1, 4}, {1, 2}), m({2, 3}, {3, 4})}),
            t(+1, {}, {m({2, 4}, {1, 2}), m({1, 3}, {3, 4})}),
            t(+1, {{1, 2}, {2, 1}}, {m({3, 4}, {3, 4})}),
        }));

    out.push_back(fix(
        "4x4 S([34|34],[123|123])", 4, 4, m({3, 4}, {3, 4}), m({1, 2, 3}, {1, 2, 3}),
        {
            t(-1, {{3, 4}}, {m({1, 2, 4}, {1, 2, 3})}),
            t(+1, {{2, 3}}, {m({1, 3, 4}, {1, 2, 4})}),
            t(-1, {{1, 3}}, {m({2, 3, 4}, {1, 2, 4})}),
            t(+1, {}, {m({3, 4}, {1, 2}), m({1, 2}, {3, 4})}),
            t(+1, {{1, 2}, {2, 1}}, {m({3, 4}, {3, 4})}),
        }));

    out.push_back(fix(
        "4x4 S([12|12],[134|134])", 4, 4, m({1, 2}, {1, 2}), m({1, 3, 4}, {1, 3, 4}),
        {
            t(-1, {{1, 2}}, {m({2, 3, 4}, {1, 3, 4})}),
            t(-1, {{3, 1}}, {m({1, 2, 4}, {2, 3, 4})}),
            t(+1, {{4, 1}}, {m({1, 2, 3}, {2, 3, 4})}),
            t(+1, {}, {m({1, 2}, {3, 4}), m({3, 4}, {1, 2})}),
            t(+1, {{3, 4}, {4, 3}}, {m({1, 2}, {1, 2})}),
        }));

    out.push_back(fix(
        "4x4 S([13|12],[124|134])", 4, 4, m({1, 3}, {1, 2}), m({1, 2, 4}, {1, 3, 4}),
        {
            t(-1, {{3, 1}}, {m({1, 2, 4}, {2, 3, 4})}),
            t(+1, {}, {m({1, 4}, {3, 4}), m({2, 3}, {1, 2})}),
            t(+1, {}, {m({1, 2}, {3, 4}), m({3, 4}, {1, 2})}),
            t(+1, {{2, 4}, {4, 3}}, {m({1, 3}, {1, 2})}),
        }));

    out.push_back(fix(
        "4x4 S([14|12],[123|134])", 4, 4, m({1, 4}, {1, 2}), m({1, 2, 3}, {1, 3, 4}),
        {
            t(-1, {{4, 1}}, {m({1, 2, 3}, {2, 3, 4})}),
            t(+1, {}, {m({1, 3}, {3, 4}), m({2, 4}, {1, 2})}),
            t(-1, {}, {m({1, 2}, {3, 4}), m({3, 4}, {1, 2})}),
            t(+1, {{2, 4}, {3, 3}}, {m({1, 4}, {1, 2})}),
        }));

    out.push_back(fix(
        "4x4 S([12|12],[234|234])", 4, 4, m({1, 2}, {1, 2}), m({2, 3, 4}, {2, 3, 4}),
        {
            t(-1, {{1, 2}}, {m({2, 3, 4}, {1, 3, 4})}),
            t(+1, {}, {m({2, 4}, {3, 4}), m({1, 3}, {1, 2})}),
            t(-1, {}, {m({2, 3}, {3, 4}), m({1, 4}, {1, 2})}),
            t(+1, {{3, 4}, {4, 3}}, {m({1, 2}, {1, 2})}),
        }));

    out.push_back(fix(
        "4x4 S([23|23],[123|124])", 4, 4, m({2, 3}, {2, 3}), m({1, 2, 3}, {1, 2, 4}),
        {
            t(-1, {{3, 2}}, {m({1, 2, 3}, {1, 3, 4})}),
            t(+1, {}, {m({2, 3}, {1, 4}), m({1, 3}, {2, 3})}),
            t(+1, {{1, 4}, {3, 1}}, {m({2, 3}, {2, 3})}),
        }));

    out.push_back(fix(
        "4x4 S([12|23],[123|134])", 4, 4, m({1, 2}, {2, 3}), m({1, 2, 3}, {1, 3, 4}),
        {
            t(-1, {{1, 3}}, {m({1, 2, 3}, {1, 2, 4})}),
            t(+1, {}, {m({1, 2}, {1, 4}), m({1, 3}, {2, 3})}),
            t(+1, {{1, 4}, {3, 1}}, {m({1, 2}, {2, 3})}),
        }));

    out.push_back(fix(
        "4x4 S([23|23],[134|134])", 4, 4, m({2, 3}, {2, 3}), m({1, 3, 4}, {1, 3, 4}),
        {
            t(-1, {{2, 3}}, {m({1, 3, 4}, {1, 2, 4})}),
            t(-1, {{4, 2}}, {m({1, 2, 3}, {1, 3, 4})}),
            t(+1, {{4, 3}}, {m({1, 2, 3}, {1, 2, 4})}),
            t(+1, {}, {m({1, 2}, {1, 4}), m({3, 4}, {2, 3})}),
            t(+1, {}, {m({2, 3}, {1, 4}), m({1, 4}, {2, 3})}),
            t(-1, {}, {m({3, 4}, {1, 4}), m({1, 2}, {2, 3})}),
            t(+1, {{1, 4}, {4, 1}}, {m({2, 3}, {2, 3})}),
        }));

    out.push_back(fix(
        "4x4 S([13|23],[234|134])", 4, 4, m({1, 3}, {2, 3}), m({2, 3, 4}, {1, 3, 4}),
        {
            t(-1, {{1, 3}}, {m({2, 3, 4}, {1, 2, 4})}),
            t(+1, {}, {m({2, 3}, {1, 4}), m({1, 4}, {2, 3})}),
            t(+1, {}, {m({3, 4}, {1, 4}), m({1, 2}, {2, 3})}),
            t(+1, {{2, 4}, {4, 1}}, {m({1, 3}, {2, 3})}),
        }));

    out.push_back(fix(
        "4x4 S([23|23],[124|124])", 4, 4, m({2, 3}, {2, 3}), m({1, 2, 4}, {1, 2, 4}),
        {
            t(-1, {{2, 3}}, {m({1, 3, 4}, {1, 2, 4})}),
            t(-1, {{4, 2}}, {m({1, 2, 3}, {1, 3, 4})}),
            t(+1, {{1, 2}}, {m({2, 3, 4}, {1, 3, 4})}),
            t(+1, {}, {m({2, 3}, {1, 4}), m({1, 4}, {2, 3})}),
            t(+1, {{1, 4}, {4, 1}}, {m({2, 3}, {2, 3})}),
        }));

    out.push_back(fix(
        "4x4 S([24|23],[123|124])", 4, 4, m({2, 4}, {2, 3}), m({1, 2, 3}, {1, 2, 4}),
        {
            t(-1, {{4, 2}}, {m({1, 2, 3}, {1, 3, 4})}),
            t(+1, {}, {m({1, 2}, {1, 4}), m({3, 4}, {2, 3})}),
            t(+1, {}, {m({2, 3}, {1, 4}), m({1, 4}, {2, 3})}),
            t(+1, {{1, 4}, {3, 1}}, {m({2, 4}, {2, 3})}),
        }));

    return out;
}

Polynomial identity_defect(const IdentityFixture& fixdef) {
    Polynomial g1 = minor_polynomial(fixdef.g1, fixdef.d, fixdef.n);
    Polynomial g2 = minor_polynomial(fixdef.g2, fixdef.d, fixdef.n);
    Polynomial s = s_polynomial(g1, g2);

    Polynomial rhs = Polynomial::zero();
    for (const FixtureTerm& term : fixdef.reduction) {
        Polynomial prod = Polynomial::constant(Rational(term.sign));
        for (const VarId& v : term.scalars) prod = prod * Polynomial::variable(v);
        for (const MinorSpec& spec : term.minors) {
            prod = prod * minor_polynomial(spec, fixdef.d, fixdef.n);
        }
        rhs = rhs + prod;
    }
    return s - rhs;
}

bool verify_identity(const IdentityFixture& fixdef) {
    return identity_defect(fixdef).is_zero();
}

} // namespace hgi

#pragma once

#include "hgi/minor.hpp"
#include "hgi/polynomial.hpp"

#include <string>
#include <vector>

namespace hgi {

// One summand of a stated reduction: sign * product of variables * product of
// minors.
struct FixtureTerm {
    int sign = 1;
    std::vector<VarId> scalars;
    std::vector<MinorSpec> minors;
};

// A claimed identity S(g1, g2) = sum of terms on a d x n variable grid.
struct IdentityFixture {
    std::string name;
    int d = 0;
    int n = 0;
    MinorSpec g1;
    MinorSpec g2;
    std::vector<FixtureTerm> reduction;
};

// The shipped S-polynomial reduction identities, one per table row.
std::vector<IdentityFixture> printed_identity_fixtures();

// Exact symbolic check that the S-polynomial equals the stated combination.
bool verify_identity(const IdentityFixture& fix);

// The difference S(g1, g2) - combination; zero exactly when the fixture holds.
Polynomial identity_defect(const IdentityFixture& fix);

} // namespace hgi

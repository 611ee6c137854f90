#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpw/group.hpp"

using namespace qpw;

namespace {

CycNum z(long n, long k) { return CycNum::root_of_unity(n, k); }

GroupModel build(Family f, long n = 0) { return build_group({f, n}); }

std::vector<long> class_sizes(const GroupModel& g) {
    std::vector<long> out;
    for (const auto& c : g.classes) out.push_back(static_cast<long>(c.members.size()));
    return out;
}

// Expected character tables straight from the displayed tables.
std::vector<std::vector<CycNum>> expected_table(Family f, long n) {
    std::vector<std::vector<CycNum>> t;
    switch (f) {
        case Family::Cyclic: {
            for (long j = 0; j < n; ++j) {
                std::vector<CycNum> row;
                for (long i = 0; i < n; ++i) row.push_back(z(n, i * j));
                t.push_back(row);
            }
            break;
        }
        case Family::Dihedral: {
            if (n % 2 == 1) {
                long m = (n - 1) / 2;
                std::vector<CycNum> r0{1, 1}, r1{1, CycNum(-1)};
                for (long i = 1; i <= m; ++i) {
                    r0.push_back(CycNum(1));
                    r1.push_back(CycNum(1));
                }
                t.push_back(r0);
                t.push_back(r1);
                for (long j = 1; j <= m; ++j) {
                    std::vector<CycNum> row{CycNum(2), CycNum(0)};
                    for (long i = 1; i <= m; ++i) row.push_back(z(n, i * j) + z(n, n - i * j));
                    t.push_back(row);
                }
            } else {
                long m = n / 2;
                auto sgn = [](long k) { return CycNum(k % 2 == 0 ? 1 : -1); };
                std::vector<CycNum> r0{1, 1, 1, 1}, r0p{1, 1, CycNum(-1), CycNum(-1)};
                std::vector<CycNum> rm{1, sgn(m), 1, CycNum(-1)},
                    rmp{1, sgn(m), CycNum(-1), 1};
                for (long i = 1; i <= m - 1; ++i) {
                    r0.push_back(CycNum(1));
                    r0p.push_back(CycNum(1));
                    rm.push_back(sgn(i));
                    rmp.push_back(sgn(i));
                }
                t.push_back(r0);
                t.push_back(r0p);
                for (long j = 1; j <= m - 1; ++j) {
                    std::vector<CycNum> row{CycNum(2), sgn(j) * CycNum(2), CycNum(0), CycNum(0)};
                    for (long i = 1; i <= m - 1; ++i) row.push_back(z(n, i * j) + z(n, n - i * j));
                    t.push_back(row);
                }
                t.push_back(rm);
                t.push_back(rmp);
            }
            break;
        }
        case Family::Tetrahedral: {
            CycNum w = z(3, 1), w2 = z(3, 2);
            t = {{1, 1, 1, 1}, {1, 1, w, w2}, {1, 1, w2, w}, {3, CycNum(-1), 0, 0}};
            break;
        }
        case Family::Octahedral: {
            CycNum m1(-1);
            t = {{1, 1, 1, 1, 1},
                 {1, 1, 1, m1, m1},
                 {2, 2, m1, 0, 0},
                 {3, m1, 0, 1, m1},
                 {3, m1, 0, m1, 1}};
            break;
        }
        case Family::Icosahedral: {
            CycNum s = z(5, 2) + z(5, 3), tt = z(5, 1) + z(5, 4), m1(-1);
            t = {{1, 1, 1, 1, 1},
                 {3, 0, m1, -s, -tt},
                 {3, 0, m1, -tt, -s},
                 {4, 1, 0, m1, m1},
                 {5, m1, 1, 0, 0}};
            break;
        }
    }
    return t;
}

} // namespace

TEST_CASE("orders, classes, SO(3) membership") {
    struct Case {
        Family f;
        long n;
        long order;
        std::vector<long> sizes;
    };
    std::vector<Case> cases = {
        {Family::Cyclic, 3, 3, {1, 1, 1}},
        {Family::Dihedral, 6, 12, {1, 1, 3, 3, 2}},
        {Family::Dihedral, 7, 14, {1, 7, 2, 2, 2}},
        {Family::Tetrahedral, 0, 12, {1, 3, 4, 4}},
        {Family::Octahedral, 0, 24, {1, 3, 8, 6, 6}},
        {Family::Icosahedral, 0, 60, {1, 20, 15, 12, 12}},
    };
    for (const auto& c : cases) {
        CAPTURE(family_name(c.f));
        GroupModel g = build(c.f, c.n);
        CHECK(g.order() == c.order);
        CHECK(class_sizes(g) == c.sizes);
        // every element unitary with determinant 1 (det via triple product)
        for (const auto& m : g.elements) {
            CHECK(m * m.conj_transpose() == CMat::identity(3));
            CycNum det =
                m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
            CHECK(det == CycNum(1));
        }
    }
}

TEST_CASE("character tables match the published ones entry-exactly") {
    std::vector<GroupSpec> specs = {{Family::Tetrahedral, 0},
                                    {Family::Octahedral, 0},
                                    {Family::Icosahedral, 0}};
    for (long n = 3; n <= 9; ++n) specs.push_back({Family::Cyclic, n});
    for (long n = 4; n <= 10; ++n) specs.push_back({Family::Dihedral, n});
    for (const auto& spec : specs) {
        CAPTURE(family_name(spec.family)); CAPTURE(spec.n);
        GroupModel g = build_group(spec);
        auto expected = expected_table(spec.family, spec.n);
        REQUIRE(g.charTable.size() == expected.size());
        for (size_t i = 0; i < expected.size(); ++i) {
            REQUIRE(g.charTable[i].size() == expected[i].size());
            for (size_t c = 0; c < expected[i].size(); ++c) {
                CAPTURE(i); CAPTURE(c);
                CHECK(g.charTable[i][c] == expected[i][c]);
            }
        }
    }
}

TEST_CASE("spot characters from the tables") {
    GroupModel t = build(Family::Tetrahedral);
    CHECK(t.charTable[3][1] == CycNum(-1)); // V3 at class of sigma
    GroupModel i = build(Family::Icosahedral);
    CycNum s = z(5, 2) + z(5, 3);
    CHECK(i.charTable[1][3] == -s); // V1 at class of sigma
}

TEST_CASE("orthogonality relations hold exactly") {
    for (GroupSpec spec : std::vector<GroupSpec>{{Family::Dihedral, 6},
                                                 {Family::Dihedral, 7},
                                                 {Family::Tetrahedral, 0},
                                                 {Family::Octahedral, 0},
                                                 {Family::Icosahedral, 0},
                                                 {Family::Cyclic, 5}}) {
        GroupModel g = build_group(spec);
        long k = g.num_irreps();
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) {
                CycNum sum(0);
                for (long c = 0; c < k; ++c)
                    sum += CycNum(static_cast<long>(g.classes[c].members.size())) *
                           g.charTable[i][c] * g.charTable[j][c].conj();
                CHECK(sum == CycNum(i == j ? g.order() : 0));
            }
        // column orthogonality
        for (long c = 0; c < k; ++c)
            for (long d = 0; d < k; ++d) {
                CycNum sum(0);
                for (long i = 0; i < k; ++i)
                    sum += g.charTable[i][c] * g.charTable[i][d].conj();
                CycNum expect(0);
                if (c == d)
                    expect = CycNum(Rat(Int(g.order()),
                                        Int(static_cast<long>(g.classes[c].members.size()))));
                CHECK(sum == expect);
            }
    }
}

TEST_CASE("tensor multiplicities") {
    GroupModel t = build(Family::Tetrahedral);
    CHECK(tensor_multiplicity(t, 3, 3) == 2); // two loops at vertex 3
    CHECK(tensor_multiplicity(t, 0, 3) == 1);
    CHECK(tensor_multiplicity(t, 0, 1) == 0);
    GroupModel c4 = build(Family::Cyclic, 4);
    for (long i = 0; i < 4; ++i) CHECK(tensor_multiplicity(c4, i, i) == 1);
    // a_{ij} symmetric for every built group
    for (GroupSpec spec : std::vector<GroupSpec>{{Family::Dihedral, 6},
                                                 {Family::Dihedral, 7},
                                                 {Family::Octahedral, 0},
                                                 {Family::Icosahedral, 0}}) {
        GroupModel g = build_group(spec);
        for (long i = 0; i < g.num_irreps(); ++i)
            for (long j = 0; j < g.num_irreps(); ++j)
                CHECK(tensor_multiplicity(g, i, j) == tensor_multiplicity(g, j, i));
    }
}

TEST_CASE("unsupported parameters are rejected") {
    CHECK_THROWS_AS(build(Family::Cyclic, 1), UnsupportedParam);
    CHECK_THROWS_AS(build(Family::Cyclic, 21), UnsupportedParam);
    CHECK_THROWS_AS(build(Family::Dihedral, 25), UnsupportedParam);
}

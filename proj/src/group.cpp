#include "qpw/group.hpp"

#include <algorithm>
#include <numeric>

namespace qpw {

Family family_from_letter(const std::string& s) {
    if (s == "C") return Family::Cyclic;
    if (s == "D") return Family::Dihedral;
    if (s == "T") return Family::Tetrahedral;
    if (s == "O") return Family::Octahedral;
    if (s == "I") return Family::Icosahedral;
    throw UnsupportedParam("unknown family '" + s + "' (expected C|D|T|O|I)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "C";
        case Family::Dihedral: return "D";
        case Family::Tetrahedral: return "T";
        case Family::Octahedral: return "O";
        case Family::Icosahedral: return "I";
    }
    return "?";
}

namespace {

CycNum zeta(long n, long k) { return CycNum::root_of_unity(n, k); }

CMat mat3(std::initializer_list<CycNum> vals) {
    CMat m(3, 3);
    size_t i = 0;
    for (const auto& v : vals) { m(i / 3, i % 3) = v; ++i; }
    return m;
}

CMat mat1(CycNum v) {
    CMat m(1, 1);
    m(0, 0) = v;
    return m;
}

CMat diag(std::vector<CycNum> vals) {
    CMat m(vals.size(), vals.size());
    for (size_t i = 0; i < vals.size(); ++i) m(i, i) = vals[i];
    return m;
}

CMat swap2() {
    CMat m(2, 2);
    m(0, 1) = CycNum(1);
    m(1, 0) = CycNum(1);
    return m;
}

struct Fixture {
    std::vector<CMat> generators;
    std::vector<IrrepModel> irreps;
    // class representatives as generator words (indices into generators),
    // in the paper's column order
    std::vector<std::pair<std::string, std::vector<long>>> class_reps;
};

Fixture cyclic_fixture(long n) {
    Fixture f;
    CycNum e = zeta(n, 1);
    f.generators = {mat3({e, 0, 0, 0, zeta(n, n - 1), 0, 0, 0, 1})};
    for (long j = 0; j < n; ++j)
        f.irreps.push_back({std::to_string(j), 1, {mat1(zeta(n, j))}});
    for (long i = 0; i < n; ++i)
        f.class_reps.push_back({"s^" + std::to_string(i), std::vector<long>(i, 0)});
    return f;
}

Fixture dihedral_fixture(long n) {
    Fixture f;
    CycNum e = zeta(n, 1);
    CMat sigma = mat3({e, 0, 0, 0, zeta(n, n - 1), 0, 0, 0, 1});
    CMat tau = mat3({0, 1, 0, 1, 0, 0, 0, 0, CycNum(-1)});
    f.generators = {sigma, tau};

    auto two_dim = [&](long j) {
        return std::vector<CMat>{diag({zeta(n, j), zeta(n, n - j)}), swap2()};
    };
    if (n % 2 == 1) {
        long m = (n - 1) / 2;
        f.irreps.push_back({"0", 1, {mat1(CycNum(1)), mat1(CycNum(1))}});
        f.irreps.push_back({"0p", 1, {mat1(CycNum(1)), mat1(CycNum(-1))}});
        for (long j = 1; j <= m; ++j)
            f.irreps.push_back({std::to_string(j), 2, two_dim(j)});
        f.class_reps.push_back({"1", {}});
        f.class_reps.push_back({"t", {1}});
        for (long i = 1; i <= m; ++i)
            f.class_reps.push_back({"s^" + std::to_string(i), std::vector<long>(i, 0)});
    } else {
        long m = n / 2;
        CycNum minus(-1);
        f.irreps.push_back({"0", 1, {mat1(CycNum(1)), mat1(CycNum(1))}});
        f.irreps.push_back({"0p", 1, {mat1(CycNum(1)), mat1(minus)}});
        for (long j = 1; j <= m - 1; ++j)
            f.irreps.push_back({std::to_string(j), 2, two_dim(j)});
        f.irreps.push_back({"m", 1, {mat1(minus), mat1(CycNum(1))}});
        f.irreps.push_back({"mp", 1, {mat1(minus), mat1(minus)}});
        f.class_reps.push_back({"1", {}});
        f.class_reps.push_back({"s^m", std::vector<long>(m, 0)});
        f.class_reps.push_back({"t", {1}});
        f.class_reps.push_back({"ts", {1, 0}});
        for (long i = 1; i <= m - 1; ++i)
            f.class_reps.push_back({"s^" + std::to_string(i), std::vector<long>(i, 0)});
    }
    return f;
}

Fixture tetra_fixture() {
    Fixture f;
    CycNum w = zeta(3, 1), w2 = zeta(3, 2);
    CMat sigma = mat3({CycNum(-1), 0, 0, 0, CycNum(-1), 0, 0, 0, 1});
    CMat tau = mat3({0, 1, 0, 0, 0, 1, 1, 0, 0});
    f.generators = {sigma, tau};
    f.irreps.push_back({"0", 1, {mat1(CycNum(1)), mat1(CycNum(1))}});
    f.irreps.push_back({"1", 1, {mat1(CycNum(1)), mat1(w)}});
    f.irreps.push_back({"2", 1, {mat1(CycNum(1)), mat1(w2)}});
    f.irreps.push_back({"3", 3, {sigma, tau}});
    f.class_reps = {{"1", {}}, {"s", {0}}, {"t", {1}}, {"t^2", {1, 1}}};
    return f;
}

Fixture octa_fixture() {
    Fixture f;
    CycNum w = zeta(3, 1), w2 = zeta(3, 2);
    CMat sigma = mat3({0, CycNum(-1), 0, 1, 0, 0, 0, 0, 1});
    CMat tau = mat3({0, 1, 0, 0, 0, 1, 1, 0, 0});
    f.generators = {sigma, tau};
    CMat v2s = swap2();
    CMat v2t = diag({w, w2});
    f.irreps.push_back({"0", 1, {mat1(CycNum(1)), mat1(CycNum(1))}});
    f.irreps.push_back({"1", 1, {mat1(CycNum(-1)), mat1(CycNum(1))}});
    f.irreps.push_back({"2", 2, {v2s, v2t}});
    f.irreps.push_back({"3", 3, {sigma, tau}});
    f.irreps.push_back({"4", 3, {sigma.scaled(CycNum(-1)), tau}});
    f.class_reps = {{"1", {}}, {"s^2", {0, 0}}, {"t", {1}}, {"s", {0}},
                    {"sts^2", {0, 1, 0, 0}}};
    return f;
}

Fixture icosa_fixture() {
    Fixture f;
    CycNum e1 = zeta(5, 1), e2 = zeta(5, 2), e3 = zeta(5, 3), e4 = zeta(5, 4);
    CycNum s = e2 + e3; // (-1 - sqrt5)/2
    CycNum t = e1 + e4; // (-1 + sqrt5)/2
    CycNum sqrt5 = t - s;
    CycNum inv_sqrt5 = sqrt5.inverse();
    CMat sigma = mat3({1, 0, 0, 0, e1, 0, 0, 0, e4});
    CMat tau = mat3({1, 1, 1, CycNum(2), s, t, CycNum(2), t, s}).scaled(inv_sqrt5);
    f.generators = {sigma, tau};

    CMat v2s = mat3({1, 0, 0, 0, e2, 0, 0, 0, e3});
    CMat v3s = diag({e1, e2, e3, e4});
    CMat v3t(4, 4);
    {
        const CycNum one(1);
        CycNum vals[4][4] = {{one, t, -s, -one},
                             {t, -one, one, -s},
                             {-s, one, -one, t},
                             {-one, -s, t, one}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) v3t(i, j) = vals[i][j] * inv_sqrt5;
    }
    CMat v4s = diag({CycNum(1), e1, e2, e3, e4});
    CMat v4t(5, 5);
    {
        const CycNum one(1), six(6), two(2);
        CycNum vals[5][5] = {
            {-one, -six, -six, -six, -six},
            {-one, one - t, two * s, two * t, one - s},
            {-one, two * s, one - s, one - t, two * t},
            {-one, two * t, one - t, one - s, two * s},
            {-one, one - s, two * t, two * s, one - t}};
        CycNum fifth = CycNum(5).inverse();
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) v4t(i, j) = vals[i][j] * fifth;
    }
    f.irreps.push_back({"0", 1, {mat1(CycNum(1)), mat1(CycNum(1))}});
    f.irreps.push_back({"1", 3, {sigma, tau}});
    f.irreps.push_back({"2", 3, {v2s, tau}});
    f.irreps.push_back({"3", 4, {v3s, v3t}});
    f.irreps.push_back({"4", 5, {v4s, v4t}});
    f.class_reps = {{"1", {}}, {"st", {0, 1}}, {"t", {1}}, {"s", {0}},
                    {"s^2", {0, 0}}};
    return f;
}

} // namespace

CMat GroupModel::irrep_matrix(long i, long e) const {
    const IrrepModel& ir = irreps[i];
    CMat m = CMat::identity(ir.dim);
    for (long g : words[e]) m = m * ir.gen_matrices[g];
    return m;
}

CycNum GroupModel::character(long i, long e) const { return irrep_matrix(i, e).trace(); }

CycNum GroupModel::natural_character(long e) const { return elements[e].trace(); }

long GroupModel::element_index(const CMat& m) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == m) return static_cast<long>(i);
    throw Error("Internal", "element not in group");
}

long GroupModel::multiply(long a, long b) const {
    return element_index(elements[a] * elements[b]);
}

long GroupModel::inverse_of(long a) const {
    return element_index(elements[a].conj_transpose()); // unitary matrices
}

long GroupModel::class_of(long e) const {
    for (size_t c = 0; c < classes.size(); ++c)
        for (long m : classes[c].members)
            if (m == e) return static_cast<long>(c);
    throw Error("Internal", "element without class");
}

GroupModel build_group(const GroupSpec& spec) {
    Fixture fix;
    switch (spec.family) {
        case Family::Cyclic:
            if (spec.n < 2 || spec.n > 20) throw UnsupportedParam("cyclic order must be in [2,20]");
            fix = cyclic_fixture(spec.n);
            break;
        case Family::Dihedral:
            if (spec.n < 2 || spec.n > 20) throw UnsupportedParam("dihedral parameter must be in [2,20]");
            fix = dihedral_fixture(spec.n);
            break;
        case Family::Tetrahedral: fix = tetra_fixture(); break;
        case Family::Octahedral: fix = octa_fixture(); break;
        case Family::Icosahedral: fix = icosa_fixture(); break;
    }

    GroupModel g;
    g.spec = spec;
    g.generators = fix.generators;
    g.irreps = fix.irreps;

    // Closure under multiplication by generators; keep a generator word per
    // element so irreps extend to the whole group.
    std::map<CMat, long> index;
    g.elements.push_back(CMat::identity(3));
    g.words.push_back({});
    index[g.elements[0]] = 0;
    for (size_t head = 0; head < g.elements.size(); ++head) {
        for (size_t gi = 0; gi < fix.generators.size(); ++gi) {
            CMat next = g.elements[head] * fix.generators[gi];
            if (index.count(next)) continue;
            long id = static_cast<long>(g.elements.size());
            index[next] = id;
            std::vector<long> w = g.words[head];
            w.push_back(static_cast<long>(gi));
            g.elements.push_back(next);
            g.words.push_back(std::move(w));
        }
    }

    // Homomorphism check on every irrep: images must respect the full
    // multiplication table restricted to generators.
    for (size_t i = 0; i < g.irreps.size(); ++i) {
        std::vector<CMat> images(g.elements.size());
        for (size_t e = 0; e < g.elements.size(); ++e) images[e] = g.irrep_matrix(i, e);
        for (size_t e = 0; e < g.elements.size(); ++e)
            for (size_t gi = 0; gi < fix.generators.size(); ++gi) {
                long prod = index.at(g.elements[e] * fix.generators[gi]);
                if (!(images[e] * g.irreps[i].gen_matrices[gi] == images[prod]))
                    throw Error("Internal",
                                "irrep " + g.irreps[i].label + " is not a homomorphism");
            }
    }

    // Conjugacy classes by brute force.
    std::vector<long> class_id(g.elements.size(), -1);
    std::vector<std::vector<long>> classes;
    for (size_t e = 0; e < g.elements.size(); ++e) {
        if (class_id[e] >= 0) continue;
        long cid = static_cast<long>(classes.size());
        classes.push_back({});
        for (size_t h = 0; h < g.elements.size(); ++h) {
            CMat conj = g.elements[h] * g.elements[e] * g.elements[h].conj_transpose();
            long ci = index.at(conj);
            if (class_id[ci] < 0) {
                class_id[ci] = cid;
                classes[cid].push_back(ci);
            }
        }
    }

    // Order the classes by the paper's representative words.
    std::vector<bool> used(classes.size(), false);
    for (const auto& [word_label, word] : fix.class_reps) {
        CMat m = CMat::identity(3);
        for (long gi : word) m = m * fix.generators[gi];
        long e = index.at(m);
        long cid = class_id[e];
        if (used[cid])
            throw Error("Internal", "duplicate class representative " + word_label);
        used[cid] = true;
        ConjClass cc;
        cc.rep = e;
        cc.members = classes[cid];
        cc.rep_word = word_label;
        g.classes.push_back(cc);
    }
    if (g.classes.size() != classes.size())
        throw Error("Internal", "class representatives do not cover all classes");

    if (g.irreps.size() != g.classes.size())
        throw Error("Internal", "#irreps != #classes");
    long sq = 0;
    for (const auto& ir : g.irreps) sq += ir.dim * ir.dim;
    if (sq != g.order()) throw Error("Internal", "sum of dim^2 != |G|");

    for (size_t i = 0; i < g.irreps.size(); ++i) {
        std::vector<CycNum> row;
        for (const auto& cc : g.classes) row.push_back(g.character(i, cc.rep));
        g.charTable.push_back(std::move(row));
    }
    return g;
}

const std::vector<std::vector<CycNum>>& character_table(const GroupModel& model) {
    return model.charTable;
}

long tensor_multiplicity(const GroupModel& model, long i, long j) {
    // (1/|G|) sum_g chi_V(g) chi_i(g) conj(chi_j(g)), grouped by class.
    CycNum sum(0);
    for (size_t c = 0; c < model.classes.size(); ++c) {
        const auto& cc = model.classes[c];
        CycNum term = model.natural_character(cc.rep) * model.charTable[i][c] *
                      model.charTable[j][c].conj();
        sum += term * CycNum(static_cast<long>(cc.members.size()));
    }
    sum = sum * CycNum(Rat(Int(1), Int(model.order())));
    if (!sum.is_integer() || sum.rational() < 0)
        throw NonIntegerMultiplicity("a_{" + std::to_string(i) + "," + std::to_string(j) +
                                     "} = " + sum.str());
    return static_cast<long>(numerator(sum.rational()));
}

} // namespace qpw

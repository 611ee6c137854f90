#pragma once

#include "qpw/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpw {

enum class Family { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

Family family_from_letter(const std::string& s); // C|D|T|O|I
std::string family_name(Family f);

struct GroupSpec {
    Family family;
    long n = 0; // group order parameter; ignored for T, O, I
};

// One irreducible representation, given by matrices for the generators in
// the same order as GroupModel::generators.
struct IrrepModel {
    std::string label; // vertex id: "0", "0p", "1", ..., "m", "mp"
    long dim = 0;
    std::vector<CMat> gen_matrices;
};

struct ConjClass {
    long rep = 0;                // element index of the paper's representative
    std::vector<long> members;   // element indices
    std::string rep_word;        // generator word, e.g. "st^2" style "s","t"
};

class GroupModel {
public:
    GroupSpec spec;
    std::vector<CMat> elements;          // 3x3 matrices, elements[0] = identity
    std::vector<std::vector<long>> words; // generator-index word per element
    std::vector<CMat> generators;        // natural 3x3 generator matrices
    std::vector<ConjClass> classes;
    std::vector<IrrepModel> irreps;
    // charTable[i][c] = trace of irrep i at the representative of class c.
    std::vector<std::vector<CycNum>> charTable;

    long order() const { return static_cast<long>(elements.size()); }
    long num_classes() const { return static_cast<long>(classes.size()); }
    long num_irreps() const { return static_cast<long>(irreps.size()); }

    // Image of element e under irrep i (product of generator images along
    // the stored word).
    CMat irrep_matrix(long i, long e) const;
    CycNum character(long i, long e) const;
    // Natural character: trace of the 3x3 element matrix.
    CycNum natural_character(long e) const;

    long element_index(const CMat& m) const;
    long multiply(long a, long b) const;
    long inverse_of(long a) const;
    long class_of(long e) const;
};

GroupModel build_group(const GroupSpec& spec);

const std::vector<std::vector<CycNum>>& character_table(const GroupModel& model);

// a_{ij} = dim Hom(V_j, V (x) V_i), computed as an exact character inner
// product; throws NonIntegerMultiplicity if the result is not a nonnegative
// integer.
long tensor_multiplicity(const GroupModel& model, long i, long j);

} // namespace qpw

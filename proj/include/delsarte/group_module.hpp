#pragma once

#include <map>
#include <string>
#include <vector>

#include "delsarte/int_matrix.hpp"
#include "delsarte/quotient.hpp"
#include "delsarte/smith.hpp"

namespace delsarte {

// Element of the integral group ring of G; keys are canonical element
// indices, zero coefficients never stored.
using GroupRing = std::map<long, Int>;

GroupRing ring_one(const FiniteQuotient& q);
GroupRing ring_generator(const FiniteQuotient& q, int i);          // t_i as a ring element
GroupRing ring_generator_inverse(const FiniteQuotient& q, int i);  // t_i^{-1}
GroupRing ring_add(const GroupRing& a, const GroupRing& b);
GroupRing ring_sub(const GroupRing& a, const GroupRing& b);
GroupRing ring_mul(const FiniteQuotient& q, const GroupRing& a, const GroupRing& b);
// t_i - 1, the augmentation generator
GroupRing ring_tminus1(const FiniteQuotient& q, int i);

// Finitely presented module over the group ring, with its expansion to an
// integer relation matrix.  Columns are blocked by generator, then by the
// canonical enumeration of G; rows are the G-translates of the base
// relations in the same order.
struct ModulePresentation {
    FiniteQuotient quotient;
    std::vector<std::string> generator_names;
    // relations[r][g] is the coefficient of generator g in base relation r
    std::vector<std::vector<GroupRing>> relations;

    std::size_t generators() const { return generator_names.size(); }
    std::size_t expansion_rows() const { return relations.size() * quotient.element_count(); }
    std::size_t expansion_cols() const { return generators() * quotient.element_count(); }
    SparseIntMatrix expansion() const;
};

// The module carrying the surface invariants: generators a1,a2,a3,c1,c2,c3,
// relations tying the boundary classes a_i to the line classes c_j.  Its
// integral torsion is the torsion invariant, its rank determines rank K.
ModulePresentation alexander_module(const FiniteQuotient& q);

// The three-generator module c1,c2,c3 with the simplified relation set
// (the universal line module tensored down to this quotient).  Surjects onto
// the line submodule of the module above; equality can fail.
ModulePresentation line_module_simplified(const FiniteQuotient& q);

// Rank and integral torsion of the presented module, by Smith reduction of
// the expansion.
AbelianGroupStructure module_rank_torsion(const ModulePresentation& p);

// Filtration of the line submodule by the derived generators
//   level 4: c1, c2, c3
//   level 3: (t3-1)c1, (t3-1)c2, (t1-1)c3
//   level 2: (t1-1)(t3-1)c1, (t2-1)(t3-1)c2, (t3-1)(t1-1)c3
//   level 1: (t2 - t3^{-1}) (t2-1)(t3-1)c2
// computed either inside the full module or inside the simplified module.
enum class LineModuleKind { embedded, simplified };

AbelianGroupStructure filtration_subquotient(const FiniteQuotient& q, LineModuleKind kind,
                                             int level);

// Structure of the level submodule itself (level relative to zero).
AbelianGroupStructure filtration_level(const FiniteQuotient& q, LineModuleKind kind, int level);

}  // namespace delsarte

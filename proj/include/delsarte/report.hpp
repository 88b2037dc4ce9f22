#pragma once

#include <optional>
#include <string>

#include "delsarte/cyclic.hpp"
#include "delsarte/group_module.hpp"
#include "delsarte/pi1.hpp"
#include "delsarte/quotient.hpp"
#include "delsarte/torsion_bound.hpp"

#include "json.hpp"

namespace delsarte {

// Parsed quotient specification, one constructor per CLI form.
struct QuotientSpec {
    enum class Kind { matrix, fermat, diagonal, cyclic, exponent };
    Kind kind = Kind::matrix;
    std::string text;  // raw input echo

    static QuotientSpec matrix(const std::string& text);
    static QuotientSpec fermat(long m);
    static QuotientSpec diagonal(const std::array<long, 3>& m);
    static QuotientSpec cyclic(long m, const std::array<long, 4>& w);
    static QuotientSpec exponent(const std::string& text);

    FiniteQuotient build() const;
    std::string kind_name() const;

  private:
    long fermat_m_ = 0;
    std::array<long, 3> diag_{};
    long cyclic_m_ = 0;
    std::array<long, 4> cyclic_w_{};
};

// Full per-quotient result record.  Construction enforces the hard
// assertions: the two rank routes agree, the torsion length and exponent
// stay inside the structural bounds.
struct InvariantReport {
    QuotientSpec spec;
    FiniteQuotient quotient;
    SubgroupOrders orders;
    Classification cls;
    Pi1Result fundamental_group;
    long rank_formula = 0;
    long rank_snf = 0;
    AbelianGroupStructure module_structure;      // full module as abelian group
    AbelianGroupStructure torsion;               // = Tors of the full module
    AbelianGroupStructure tensored_structure;    // simplified line module
    bool tensored_matches = false;
    TorsionBoundParams best_bound;
    std::vector<TorsionBoundParams> all_bounds;  // filled only when requested
    long length_bound = 0;
    Int exponent_bound;
    bool generated_over_z = false;
    std::optional<CyclicVerification> cyclic_section;

    nlohmann::json to_json() const;
    std::string text_summary() const;
};

InvariantReport analyze(const QuotientSpec& spec, bool all_permutation_bounds = false);

nlohmann::json bound_to_json(const TorsionBoundParams& b);

}  // namespace delsarte

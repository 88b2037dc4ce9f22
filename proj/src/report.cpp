#include "delsarte/report.hpp"

#include <sstream>

namespace delsarte {

QuotientSpec QuotientSpec::matrix(const std::string& text) {
    QuotientSpec s;
    s.kind = Kind::matrix;
    s.text = text;
    return s;
}

QuotientSpec QuotientSpec::fermat(long m) {
    QuotientSpec s;
    s.kind = Kind::fermat;
    s.fermat_m_ = m;
    s.text = std::to_string(m);
    return s;
}

QuotientSpec QuotientSpec::diagonal(const std::array<long, 3>& m) {
    QuotientSpec s;
    s.kind = Kind::diagonal;
    s.diag_ = m;
    s.text = std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]);
    return s;
}

QuotientSpec QuotientSpec::cyclic(long m, const std::array<long, 4>& w) {
    QuotientSpec s;
    s.kind = Kind::cyclic;
    s.cyclic_m_ = m;
    s.cyclic_w_ = w;
    std::ostringstream os;
    os << m << ":" << w[0] << "," << w[1] << "," << w[2] << "," << w[3];
    s.text = os.str();
    return s;
}

QuotientSpec QuotientSpec::exponent(const std::string& text) {
    QuotientSpec s;
    s.kind = Kind::exponent;
    s.text = text;
    return s;
}

FiniteQuotient QuotientSpec::build() const {
    switch (kind) {
        case Kind::matrix: return FiniteQuotient::from_kernel_matrix(parse_matrix_text(text, 3));
        case Kind::fermat: return FiniteQuotient::fermat(fermat_m_);
        case Kind::diagonal: return FiniteQuotient::diagonal(diag_[0], diag_[1], diag_[2]);
        case Kind::cyclic: return FiniteQuotient::cyclic(cyclic_m_, cyclic_w_);
        case Kind::exponent:
            return FiniteQuotient::from_exponent_matrix(parse_matrix_text(text, 4));
    }
    throw internal_error("unknown spec kind");
}

std::string QuotientSpec::kind_name() const {
    switch (kind) {
        case Kind::matrix: return "matrix";
        case Kind::fermat: return "fermat";
        case Kind::diagonal: return "diagonal";
        case Kind::cyclic: return "cyclic";
        case Kind::exponent: return "exponent";
    }
    return "?";
}

namespace {

std::vector<long> factor_list(const AbelianGroupStructure& s) {
    std::vector<long> v;
    for (const Int& f : s.torsion_factors) v.push_back(to_long(f, "torsion factor"));
    return v;
}

}  // namespace

InvariantReport analyze(const QuotientSpec& spec, bool all_permutation_bounds) {
    InvariantReport r;
    r.spec = spec;
    r.quotient = spec.build();
    r.orders = subgroup_orders(r.quotient);
    r.cls = classify(r.quotient);
    r.fundamental_group = pi1(r.quotient);

    const long order = r.quotient.order_l();
    const int delta = r.orders.delta();

    long sum = 0;
    for (long g : r.orders.g_ij) sum += g;
    for (long g : r.orders.g_i) sum += g;
    r.rank_formula = sum - 3 - delta;

    r.module_structure = module_rank_torsion(alexander_module(r.quotient));
    r.torsion = AbelianGroupStructure{0, r.module_structure.torsion_factors};
    r.rank_snf = r.module_structure.free_rank - order + 1;
    if (r.rank_formula != r.rank_snf) {
        std::ostringstream os;
        os << "rank cross-check failed for " << r.quotient.canonical_text() << ": formula "
           << r.rank_formula << ", Smith " << r.rank_snf;
        throw internal_error(os.str());
    }

    r.length_bound = 6 + delta;
    Int m = r.quotient.exponent();
    r.exponent_bound = m * m * m / r.quotient.order();
    if (r.torsion.length() > r.length_bound)
        throw internal_error("torsion length exceeds the structural bound for " +
                             r.quotient.canonical_text());
    if (!r.torsion.torsion_factors.empty() &&
        !divides(r.torsion.torsion_factors.back(), r.exponent_bound))
        throw internal_error("torsion exponent exceeds the structural bound for " +
                             r.quotient.canonical_text());

    r.tensored_structure = module_rank_torsion(line_module_simplified(r.quotient));
    // the tensored module always has the rank of the line submodule; equal
    // torsion is the evidence that the two modules agree
    bool rank_ok = r.tensored_structure.free_rank == r.rank_snf - 3;
    r.tensored_matches =
        rank_ok && r.tensored_structure.torsion_factors == r.torsion.torsion_factors;

    r.best_bound = best_torsion_bound(r.quotient);
    if (all_permutation_bounds) r.all_bounds = all_torsion_bounds(r.quotient);

    r.generated_over_z = r.cls.special() && gcd_l(order, 6) == 1 &&
                         r.fundamental_group.order == 1 && r.torsion.is_trivial();

    if (r.quotient.is_cyclic_group())
        r.cyclic_section = verify_cyclic(r.quotient, r.module_structure);
    return r;
}

nlohmann::json bound_to_json(const TorsionBoundParams& b) {
    nlohmann::json j;
    j["permutation"] = b.permutation;
    j["m"] = b.m;
    j["n"] = b.n;
    j["n_pair"] = b.n_pair;
    j["nbar"] = b.nbar;
    j["p"] = b.p;
    j["pbar"] = b.pbar;
    j["qbar"] = b.qbar;
    j["sbar"] = b.sbar;
    auto layers = b.layers();
    j["layers"] = layers;
    return j;
}

nlohmann::json InvariantReport::to_json() const {
    nlohmann::json j;
    j["input"] = {{"constructor", spec.kind_name()},
                  {"given", spec.text},
                  {"gamma", quotient.canonical_text()}};
    j["group"] = {{"order", quotient.order_l()},
                  {"exponent", to_long(quotient.exponent(), "exponent")},
                  {"invariant_factors", factor_list(AbelianGroupStructure{0, quotient.group_factors()})}};
    j["delta"] = orders.delta();
    j["subgroup_orders"] = {{"g01", orders.g_ij[0]}, {"g02", orders.g_ij[1]},
                            {"g03", orders.g_ij[2]}, {"g12", orders.g_ij[3]},
                            {"g13", orders.g_ij[4]}, {"g23", orders.g_ij[5]},
                            {"g1", orders.g_i[0]},   {"g2", orders.g_i[1]},
                            {"g3", orders.g_i[2]},   {"g_eq", orders.g_eq}};
    j["classification"] = {
        {"fermat", cls.is_fermat},
        {"fermat_exponent", cls.is_fermat ? nlohmann::json(cls.fermat_m) : nlohmann::json()},
        {"unramified", cls.is_unramified},
        {"unramified_index",
         cls.is_unramified ? nlohmann::json(cls.unramified_index) : nlohmann::json()},
        {"cyclic", cls.is_cyclic},
        {"diagonal", cls.is_diagonal},
        {"diagonal_exponents",
         cls.is_diagonal ? nlohmann::json(cls.diagonal_exponents) : nlohmann::json()},
        {"diagonal_permutation",
         cls.is_diagonal ? nlohmann::json(cls.diagonal_permutation) : nlohmann::json()},
        {"special", cls.special()},
        {"height", to_long(cls.height, "height")}};
    j["pi1"] = {{"order", to_long(fundamental_group.order, "pi1 order")},
                {"invariant_factors", factor_list(fundamental_group.structure)}};
    j["rank_k"] = {{"formula", rank_formula}, {"snf", rank_snf}};
    j["torsion"] = factor_list(torsion);
    j["torsion_tensored"] = factor_list(tensored_structure);
    j["tensored_matches"] = tensored_matches;
    j["bounds"] = {{"best", bound_to_json(best_bound)},
                   {"length_max", length_bound},
                   {"exponent_divides", to_long(exponent_bound, "exponent bound")}};
    if (!all_bounds.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& b : all_bounds) arr.push_back(bound_to_json(b));
        j["bounds"]["permutations"] = arr;
    }
    j["generated_over_z"] = generated_over_z;
    if (cyclic_section) {
        const CyclicVerification& v = *cyclic_section;
        auto closed = closed_form_factors(v.data, 0);
        nlohmann::json f;
        for (int k = 0; k < 6; ++k) f["f" + std::to_string(k + 1)] = closed[k].str();
        j["cyclic"] = {{"m", v.data.m},
                       {"weights", v.data.canonical_weights()},
                       {"pair_gcds", v.data.pair_gcds},
                       {"delta", v.data.delta},
                       {"factors", f},
                       {"verification",
                        {{"fields", v.fields},
                         {"factors_match", v.factors_match},
                         {"degree_sums_match", v.degree_sums_match},
                         {"integer_torsion_empty", v.integer_torsion_empty},
                         {"degree_sum", v.degree_sum},
                         {"mismatches", v.mismatches}}}};
    } else {
        j["cyclic"] = nullptr;
    }
    return j;
}

std::string InvariantReport::text_summary() const {
    std::ostringstream os;
    os << "kernel          " << quotient.canonical_text() << "\n";
    os << "group           " << AbelianGroupStructure{0, quotient.group_factors()}.str()
       << "  (order " << quotient.order_l() << ", exponent "
       << quotient.exponent().get_str() << ")\n";
    os << "delta           " << orders.delta() << "\n";
    os << "height          " << cls.height.get_str() << "\n";
    os << "classes         ";
    bool any = false;
    if (cls.is_fermat) os << (any ? ", " : "") << "fermat(" << cls.fermat_m << ")", any = true;
    if (cls.is_unramified)
        os << (any ? ", " : "") << "unramified(t" << cls.unramified_index << ")", any = true;
    if (cls.is_cyclic) os << (any ? ", " : "") << "cyclic", any = true;
    if (cls.is_diagonal) {
        os << (any ? ", " : "") << "diagonal(" << cls.diagonal_exponents[0] << ","
           << cls.diagonal_exponents[1] << "," << cls.diagonal_exponents[2] << ")";
        any = true;
    }
    if (!any) os << "none";
    os << "\n";
    os << "pi1             " << fundamental_group.structure.str() << "\n";
    os << "rank K          " << rank_formula << "\n";
    os << "torsion T       " << torsion.str() << "\n";
    os << "torsion B'      " << AbelianGroupStructure{0, tensored_structure.torsion_factors}.str()
       << (tensored_matches ? "  (matches)" : "  (differs)") << "\n";
    auto layers = best_bound.layers();
    os << "best bound      perm(" << best_bound.permutation[0] << best_bound.permutation[1]
       << best_bound.permutation[2] << best_bound.permutation[3] << ")";
    for (const auto& layer : layers) {
        os << " [";
        for (std::size_t i = 0; i < layer.size(); ++i) os << (i ? "," : "") << layer[i];
        os << "]";
    }
    os << "\n";
    os << "generated/Z     " << (generated_over_z ? "yes" : "unknown") << "\n";
    if (cyclic_section)
        os << "cyclic check    " << (cyclic_section->ok() ? "pass" : "FAIL") << "\n";
    return os.str();
}

}  // namespace delsarte

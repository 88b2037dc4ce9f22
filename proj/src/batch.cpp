#include "delsarte/batch.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

#include "delsarte/report.hpp"

namespace delsarte {

std::uint64_t UnimodularSampler::next_word() {
    // splitmix64: tiny, stable across platforms, good enough for sampling
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long UnimodularSampler::below(long n) { return static_cast<long>(next_word() % n); }

IntMatrix UnimodularSampler::next(long bound, int ops) {
    IntMatrix m = IntMatrix::identity(3);
    for (int k = 0; k < ops; ++k) {
        long kind = below(6);
        if (kind < 4) {
            long i = below(3);
            long j = (i + 1 + below(2)) % 3;
            long c = below(2 * bound + 1) - bound;
            m.add_row(j, i, Int(c));
        } else if (kind == 4) {
            long i = below(3);
            long j = (i + 1 + below(2)) % 3;
            m.swap_rows(i, j);
        } else {
            m.negate_row(below(3));
        }
    }
    return m;
}

void batch_run(const BatchConfig& config, std::ostream& out) {
    if (config.count < 1) throw validation_error("batch count must be at least 1");
    if (config.bound < 1) throw validation_error("batch bound must be at least 1");
    for (long d : config.diag)
        if (d < 1) throw validation_error("batch diagonal entries must be positive");

    UnimodularSampler sampler(config.seed);
    IntMatrix d = IntMatrix::diagonal({Int(config.diag[0]), Int(config.diag[1]), Int(config.diag[2])});

    std::vector<std::string> specs(config.count);
    for (long i = 0; i < config.count; ++i)
        specs[i] = matrix_text(d * sampler.next(config.bound));

    std::vector<std::string> lines(config.count);
    std::vector<InvariantReport> reports(config.count);
    std::string failure;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < config.count; ++i) {
        try {
            reports[i] = analyze(QuotientSpec::matrix(specs[i]));
            lines[i] = reports[i].to_json().dump();
        } catch (const std::exception& e) {
#pragma omp critical
            if (failure.empty()) failure = e.what();
        }
    }
    if (!failure.empty()) throw internal_error("batch worker failed: " + failure);

    std::map<std::string, long> torsion_freq;
    long pi1_trivial = 0, monitor_length = 0, monitor_exponent = 0, tensored_match = 0;
    for (long i = 0; i < config.count; ++i) {
        const InvariantReport& r = reports[i];
        torsion_freq[r.torsion.str()] += 1;
        bool trivial_pi1 = r.fundamental_group.order == 1;
        pi1_trivial += trivial_pi1;
        tensored_match += r.tensored_matches;
        if (trivial_pi1) {
            // the two open hypotheses: monitored, never asserted
            if (r.torsion.length() > 3 + r.orders.delta()) ++monitor_length;
            if (!r.torsion.torsion_factors.empty() &&
                !divides(r.torsion.torsion_factors.back(), r.cls.height))
                ++monitor_exponent;
        }
        out << lines[i] << "\n";
    }
    nlohmann::json summary;
    summary["summary"] = {{"count", config.count},
                          {"pi1_trivial", pi1_trivial},
                          {"tensored_matches", tensored_match},
                          {"torsion_frequency", torsion_freq},
                          {"length_le_3_plus_delta_violations", monitor_length},
                          {"exponent_divides_height_violations", monitor_exponent}};
    out << summary.dump() << "\n";
}

}  // namespace delsarte

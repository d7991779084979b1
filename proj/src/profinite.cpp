#include "arithspin/profinite.hpp"

#include <algorithm>

#include "arithspin/errors.hpp"
#include "arithspin/qforms.hpp"

namespace arithspin::profinite {

namespace {

std::string label(const SpinGroupDescriptor& g) {
    return "(" + std::to_string(g.m()) + "," + std::to_string(g.n()) + ")";
}

CommensurabilityReport build_report(const euler::EulerResult& chi1, const euler::EulerResult& chi2) {
    const SpinGroupDescriptor& a = chi1.descriptor;
    const SpinGroupDescriptor& b = chi2.descriptor;
    CommensurabilityReport r{a, b, false, "", 0, 0, false, "", false, false, false, chi1, chi2};
    const auto genus = qforms::compare_genus_finite_places(a.m(), a.n(), b.m(), b.n());
    r.locally_equivalent = genus.equal;
    r.witness = genus.witness;
    r.witt_rational_first = qforms::witt_index_rational(qforms::DiagonalForm::b(a.m(), a.n()));
    r.witt_rational_second = qforms::witt_index_rational(qforms::DiagonalForm::b(b.m(), b.n()));
    r.congruence_kernel_trivial = r.witt_rational_first >= 2 && r.witt_rational_second >= 2;
    if (!r.locally_equivalent)
        r.conclusion = "not locally equivalent";
    else if (r.congruence_kernel_trivial)
        r.conclusion = "profinitely commensurable";
    else
        r.conclusion = "locally equivalent (commensurability conditional on congruence kernel)";
    r.dim_mod4_consistent = (a.dim_x() - b.dim_x()) % 4 == 0;
    r.delta_consistent = a.delta() == b.delta();
    r.sign_consistent = chi1.sign == chi2.sign;
    return r;
}

std::vector<std::string> violations_of(const CommensurabilityReport& r) {
    std::vector<std::string> out;
    if (!r.locally_equivalent) return out;
    const std::string pair = label(r.first) + "~" + label(r.second);
    if (!r.dim_mod4_consistent) out.push_back(pair + ": dim X differs mod 4");
    if (!r.delta_consistent) out.push_back(pair + ": fundamental rank differs");
    if (!r.sign_consistent) out.push_back(pair + ": sign of chi differs");
    return out;
}

}  // namespace

bool is_power_of_two_ratio(const Rational& r) {
    if (r.is_zero()) return false;
    const BigInt num = abs(r.num());
    const BigInt den = r.den();
    return mpz_popcount(num.get_mpz_t()) == 1 && mpz_popcount(den.get_mpz_t()) == 1;
}

CommensurabilityReport profinitely_commensurable(int m, int n, int m2, int n2) {
    const auto report = build_report(euler::chi_closed(m, n), euler::chi_closed(m2, n2));
    const auto bad = violations_of(report);
    if (!bad.empty()) throw InvariantViolation(bad.front());
    return report;
}

ClassSweep sweep_theorem_frank_dim(int d_max) {
    if (d_max < 3) throw std::invalid_argument("sweep: d_max must be >= 3");
    ClassSweep sweep;
    sweep.d_max = d_max;
    for (int d = 3; d <= d_max; ++d) {
        std::vector<euler::EulerResult> chis;
        for (int m = 1; m < d; ++m) chis.push_back(euler::chi_closed(m, d - m));

        std::vector<int> class_of(chis.size(), -1);
        std::vector<std::vector<std::size_t>> members;
        for (std::size_t i = 0; i < chis.size(); ++i) {
            for (std::size_t c = 0; c < members.size() && class_of[i] < 0; ++c) {
                const auto& rep = chis[members[c].front()].descriptor;
                const auto& g = chis[i].descriptor;
                if (qforms::genus_equal_finite_places(rep.m(), rep.n(), g.m(), g.n())) class_of[i] = static_cast<int>(c);
            }
            if (class_of[i] < 0) {
                class_of[i] = static_cast<int>(members.size());
                members.emplace_back();
            }
            members[static_cast<std::size_t>(class_of[i])].push_back(i);
        }
        for (const auto& cls : members) {
            std::vector<SpinGroupDescriptor> descs;
            for (auto i : cls) descs.push_back(chis[i].descriptor);
            sweep.classes.push_back(std::move(descs));
        }

        // Every pair with the same d is compared, so class membership and the
        // direct pairwise test are checked against each other.
        for (std::size_t i = 0; i < chis.size(); ++i) {
            for (std::size_t j = i + 1; j < chis.size(); ++j) {
                auto report = build_report(chis[i], chis[j]);
                if (report.locally_equivalent != (class_of[i] == class_of[j])) {
                    sweep.violations.push_back(label(report.first) + "~" + label(report.second) +
                                               ": local equivalence is not transitive");
                }
                if (!report.locally_equivalent) continue;
                for (auto& v : violations_of(report)) sweep.violations.push_back(std::move(v));
                if (report.first.delta() == 0 &&
                    !is_power_of_two_ratio(report.chi_first.value / report.chi_second.value)) {
                    sweep.non_power_of_two_ratios.push_back(label(report.first) + "/" + label(report.second));
                }
                sweep.pairs.push_back(std::move(report));
            }
        }
    }
    return sweep;
}

std::vector<CommensurabilityReport> sweep_euler_not_profinite(int d_max) {
    std::vector<CommensurabilityReport> out;
    for (auto& r : sweep_theorem_frank_dim(d_max).pairs) {
        if (!r.chi_first.value.is_zero() && !r.chi_second.value.is_zero() && r.chi_first.value != r.chi_second.value)
            out.push_back(std::move(r));
    }
    return out;
}

}  // namespace arithspin::profinite

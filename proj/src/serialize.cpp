#include "arithspin/serialize.hpp"

#include <sstream>

namespace arithspin::io {

namespace {

json descriptor_json(const ggroups::SpinGroupDescriptor& g) { return {{"m", g.m()}, {"n", g.n()}}; }

const char* kTableHeader = "m,n,d,dimX,delta,chi,chi_rational,sign,case";
const char* kSweepHeader =
    "d,m,n,m2,n2,locally_equivalent,witness,witt_rational_first,witt_rational_second,"
    "congruence_kernel_trivial,conclusion,dim_mod4_consistent,delta_consistent,sign_consistent,"
    "chi_first,chi_second";

}  // namespace

json l2_json(const euler::L2Profile& p) {
    json out;
    out["betti_degree"] = p.betti_degree ? json(*p.betti_degree) : json(nullptr);
    out["betti_value"] = p.betti_value.str();
    out["ns_range"] = p.ns_range ? json::array({p.ns_range->first, p.ns_range->second}) : json(nullptr);
    out["ns_value"] = p.ns_value;
    out["torsion_sign"] = p.torsion_sign;
    return out;
}

json chi_json(const euler::EulerResult& r) {
    const auto& g = r.descriptor;
    return {{"m", g.m()},
            {"n", g.n()},
            {"d", g.d()},
            {"dimX", g.dim_x()},
            {"delta", g.delta()},
            {"chi", r.factored},
            {"chi_rational", r.value.str()},
            {"sign", r.sign},
            {"case", euler::to_string(r.case_tag)},
            {"l2", l2_json(euler::l2_profile(g.m(), g.n()))}};
}

json chi_json(int m, int n) { return chi_json(euler::chi_closed(m, n)); }

json compare_json(const profinite::CommensurabilityReport& r) {
    json csp = {{"witt_rational", {r.witt_rational_first, r.witt_rational_second}},
                {"congruence_kernel_trivial", r.congruence_kernel_trivial}};
    return {{"first", descriptor_json(r.first)},
            {"second", descriptor_json(r.second)},
            {"locally_equivalent", r.locally_equivalent},
            {"witness", r.witness},
            {"csp_note", csp},
            {"conclusion", r.conclusion},
            {"dim_mod4_consistent", r.dim_mod4_consistent},
            {"delta_consistent", r.delta_consistent},
            {"sign_consistent", r.sign_consistent},
            {"chi", {chi_json(r.chi_first), chi_json(r.chi_second)}}};
}

json witt_json(const qforms::WittDecomposition& w) {
    return {{"witt", w.witt_index}, {"aniso_dim", w.anisotropic_dim}};
}

json srank_json(int m, int n, const euler::SArithmeticReport& r) {
    json local = json::object();
    for (const auto& [p, rank] : r.rank_local) local[std::to_string(p)] = rank;
    return {{"m", m},
            {"n", n},
            {"sign", r.sign},
            {"ep_measure_vanishes", r.ep_measure_vanishes},
            {"rank_real", r.rank_real},
            {"rank_local", local},
            {"rank_S", r.rank_s},
            {"rank_Q", r.rank_rational},
            {"rank_Q_sign", r.rank_rational_sign}};
}

std::vector<euler::EulerResult> chi_table(int d_max) {
    std::vector<euler::EulerResult> rows;
    for (int d = 3; d <= d_max; ++d)
        for (int m = 1; m < d; ++m) rows.push_back(euler::chi_closed(m, d - m));
    return rows;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string table_csv(const std::vector<euler::EulerResult>& rows) {
    std::ostringstream os;
    os << kTableHeader << '\n';
    for (const auto& r : rows) {
        const auto& g = r.descriptor;
        os << g.m() << ',' << g.n() << ',' << g.d() << ',' << g.dim_x() << ',' << g.delta() << ','
           << csv_field(r.factored) << ',' << r.value.str() << ',' << r.sign << ','
           << euler::to_string(r.case_tag) << '\n';
    }
    return os.str();
}

json table_json(const std::vector<euler::EulerResult>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(chi_json(r));
    return out;
}

std::string sweep_csv(const profinite::ClassSweep& sweep) {
    std::ostringstream os;
    os << kSweepHeader << '\n';
    auto b = [](bool v) { return v ? "true" : "false"; };
    for (const auto& r : sweep.pairs) {
        os << r.first.d() << ',' << r.first.m() << ',' << r.first.n() << ',' << r.second.m() << ','
           << r.second.n() << ',' << b(r.locally_equivalent) << ',' << csv_field(r.witness) << ','
           << r.witt_rational_first << ',' << r.witt_rational_second << ',' << b(r.congruence_kernel_trivial)
           << ',' << csv_field(r.conclusion) << ',' << b(r.dim_mod4_consistent) << ','
           << b(r.delta_consistent) << ',' << b(r.sign_consistent) << ',' << r.chi_first.value.str() << ','
           << r.chi_second.value.str() << '\n';
    }
    return os.str();
}

json sweep_json(const profinite::ClassSweep& sweep) {
    json classes = json::array();
    for (const auto& cls : sweep.classes) {
        json members = json::array();
        for (const auto& g : cls) members.push_back(descriptor_json(g));
        classes.push_back(members);
    }
    json pairs = json::array();
    for (const auto& r : sweep.pairs) pairs.push_back(compare_json(r));
    return {{"d_max", sweep.d_max},
            {"classes", classes},
            {"pairs", pairs},
            {"violations", sweep.violations},
            {"non_power_of_two_ratios", sweep.non_power_of_two_ratios}};
}

}  // namespace arithspin::io

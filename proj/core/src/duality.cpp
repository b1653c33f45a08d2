#include "swdual/duality.hpp"

#include "swdual/field_ops.hpp"

namespace swdual {

DualityReport check_main1_cell(int n, int r, const Field& f, const Caps& caps) {
    return with_field_ops(f, [&](const auto& k) { return main1_cell(k, n, r, caps); });
}

DualityReport check_thrall_cell(int n, int r, const Field& f, GroupKind kind, const Caps& caps,
                                PhiMethod method) {
    return with_field_ops(f,
                          [&](const auto& k) { return thrall_cell(k, n, r, kind, caps, method); });
}

DualityReport check_dims_cell(int n, int r, const Field& f, GroupKind kind, const Caps& caps,
                              PhiMethod method) {
    return with_field_ops(f,
                          [&](const auto& k) { return dims_cell(k, n, r, kind, caps, method); });
}

DualityReport check_formulas_cell(int n, int r, const Field& f, const Caps& caps) {
    return with_field_ops(f, [&](const auto& k) { return formulas_cell(k, n, r, caps); });
}

std::vector<DualityReport> tl_scan(long long p, int rmax, bool with_q, const Caps& caps) {
    if (rmax < 2) throw UsageError("scan upper bound must be at least 2");
    const Field fp = make_field(p, 1);
    const Field fq = rational_field();
    std::vector<DualityReport> out;
    for (int r = 2; r <= rmax; ++r) {
        try {
            out.push_back(with_field_ops(fp, [&](const auto& k) { return tl_fp_cell(k, r, caps); }));
            if (with_q)
                out.push_back(
                    with_field_ops(fq, [&](const auto& k) { return tl_q_cell(k, r, caps); }));
        } catch (const ResourceLimitError& e) {
            DualityReport marker = detail::new_report("tl", 2, r, fp, "");
            marker.verdicts["scan_truncated"] = Verdict::skipped(e.what());
            out.push_back(std::move(marker));
            break;
        }
    }
    return out;
}

} // namespace swdual

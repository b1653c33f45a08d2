// Acceptance gate: twelve end-to-end criteria, each printing exactly one
// PASS/FAIL line.  A criterion passes only if every assertion holds AND the
// run fits its wall-clock budget; the binary exits nonzero if any line
// fails.  Budgets are generous upper bounds for a release build on modest
// hardware — the checks themselves are exact, so time is the only
// environmental variable.

#include "swdual/duality.hpp"
#include "swdual/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace swdual;

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

std::string at(int n, int r, const Field& f) {
    return " at n=" + std::to_string(n) + " r=" + std::to_string(r) + " field=" + field_str(f);
}

long long factorial_ll(int r) {
    return to_long(big_factorial(static_cast<unsigned long>(r)), "r!");
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

void criterion_1_smallest_gap(const Caps& caps) {
    const DualityReport rep = check_main1_cell(2, 2, make_field(2, 1), caps);
    require(rep.dims.at("rho_image") == 2, "two-slot symmetric image must have dimension 2");
    require(rep.dims.at("endo_G") == 3, "two-slot commutant over F_2 must have dimension 3");
    require(rep.verdicts.at("injective").is_true(), "the map must be injective at n = r = 2");
    require(rep.verdicts.at("iso").is_false(), "the map must not be surjective over F_2");
}

void criterion_2_catalan_drop(const Caps& caps) {
    const Field f2 = make_field(2, 1);
    with_field_ops(f2, [&](const auto& k) {
        const int rho = rho_span(k, 2, 3, caps).dim();
        require(rho == 5, "three-slot symmetric image must have dimension 5");
        require(rho < 6, "three-slot image must drop below the group-algebra dimension 6");
        require(catalan_number(3) == 5, "catalan(3) must equal 5");
        const int endoG = endo_G_span(k, GroupKind::GL, 2, 3, caps).dim();
        require(rho != endoG, "image and commutant must differ at n=2 r=3 over F_2");
    });
}

void criterion_3_iso_above_threshold(const Caps& caps) {
    const std::vector<Field> fields = {make_field(2, 1), make_field(3, 1), make_field(2, 2),
                                       make_field(5, 1), rational_field()};
    for (int r = 1; r <= 3; ++r)
        for (int n = r + 1; n <= 4; ++n)
            for (const Field& f : fields) {
                const DualityReport rep = check_main1_cell(n, r, f, caps);
                require(rep.dims.at("endo_G") == factorial_ll(r),
                        "commutant dimension must equal r!" + at(n, r, f));
                require(rep.verdicts.at("iso").is_true(),
                        "map must be an isomorphism when n >= r+1" + at(n, r, f));
            }
}

void criterion_4_surjectivity_for_large_fields(const Caps& caps) {
    const std::vector<Field> fields = {make_field(3, 1), make_field(2, 2), make_field(5, 1)};
    for (const Field& f : fields)
        for (int n = 1; n <= 3; ++n)
            for (int r = 1; r <= 3 && r < f.cardinality; ++r)
                for (const GroupKind kind : {GroupKind::GL, GroupKind::SL}) {
                    const DualityReport rep = check_thrall_cell(n, r, f, kind, caps);
                    const std::string where = at(n, r, f) + " group=" + group_kind_str(kind);
                    require(rep.verdicts.at("phi_surjective").is_true(),
                            "group algebra must fill the commutant when q > r" + where);
                    require(rep.verdicts.at("rho_surjective").is_true(),
                            "symmetric algebra must fill the commutant when q > r" + where);
                    require(rep.dims.at("phi_image") == schur_dim(n, r),
                            "group-algebra image must have the binomial dimension" + where);
                    require(rep.dims.at("endo_Sr") == schur_dim(n, r),
                            "symmetric commutant must have the binomial dimension" + where);
                }
}

void criterion_5_small_field_obstruction(const Caps& caps) {
    const DualityReport rep = check_thrall_cell(2, 2, make_field(2, 1), GroupKind::GL, caps);
    require(rep.dims.at("endo_Sr") == 10, "symmetric commutant must have dimension 10");
    require(rep.dims.at("phi_image") <= 6,
            "group-algebra image cannot exceed the group-algebra dimension 6");
    require(rep.verdicts.at("phi_surjective").is_false(),
            "a 6-dimensional algebra cannot fill a 10-dimensional commutant");
}

void criterion_6_orbit_span_is_the_commutant(const Caps& caps) {
    const std::vector<Field> fields = {make_field(2, 1), make_field(3, 1), make_field(2, 2),
                                       rational_field()};
    for (const Field& f : fields)
        with_field_ops(f, [&](const auto& k) {
            for (int n = 1; n <= 3; ++n)
                for (int r = 1; r <= 3; ++r) {
                    const SchurIsoResult res = verify_schur_iso(k, n, r, caps);
                    require(res.verdict, "orbit span must equal the symmetric commutant" +
                                             at(n, r, f));
                    require(res.schur == schur_dim(n, r),
                            "dimension must match the binomial count" + at(n, r, f));
                }
        });
}

void criterion_7_double_centralizer(const Caps& caps) {
    const std::vector<Field> fields = {make_field(2, 1), make_field(3, 1), make_field(2, 2),
                                       rational_field()};
    for (const Field& f : fields)
        with_field_ops(f, [&](const auto& k) {
            for (int n = 1; n <= 3; ++n)
                for (int r = 1; r <= 3; ++r)
                    require(endo_schur_span(k, n, r, caps).equals_span(rho_span(k, n, r, caps)),
                            "commutant of the orbit span must be the symmetric image as a "
                            "subspace" + at(n, r, f));
        });
}

void criterion_8_hyperalgebra_fills_commutant(const Caps& caps) {
    const std::vector<Field> fields = {make_field(2, 1), make_field(3, 1), rational_field()};
    for (const Field& f : fields)
        with_field_ops(f, [&](const auto& k) {
            for (int n = 1; n <= 3; ++n)
                for (int r = 1; r <= 3; ++r) {
                    const auto full = psi_span(k, n, r, false, caps);
                    const auto primed = psi_span(k, n, r, true, caps);
                    const auto target = endo_Sr_span(k, n, r, caps);
                    require(full.equals_span(primed),
                            "diagonal generators must be redundant" + at(n, r, f));
                    require(full.equals_span(target),
                            "divided-power algebra must fill the symmetric commutant" +
                                at(n, r, f));
                }
        });
}

void criterion_9_nilpotency_and_integrality(const Caps& caps) {
    for (int n = 2; n <= 3; ++n)
        for (int r = 1; r <= 4; ++r) {
            // integral construction must succeed (exact divisibility) up to r+2
            for (int m = 0; m <= r + 2; ++m)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        if (i == j) continue;
                        const ZMat dp = divided_power(i, j, m, n, r, caps);
                        if (m > r)
                            require(dp.is_zero(),
                                    "divided power must vanish for m > r at m=" +
                                        std::to_string(m) + " n=" + std::to_string(n) +
                                        " r=" + std::to_string(r));
                    }
            for (int m = r + 1; m <= r + 2; ++m)
                for (int i = 1; i <= n; ++i)
                    require(binomial_diag(i, m, n, r, caps).is_zero(),
                            "diagonal binomial must vanish for m > r at m=" + std::to_string(m));
        }
}

void criterion_10_operator_identities(const Caps& caps) {
    const std::vector<Field> fields = {make_field(2, 1), make_field(3, 1), make_field(2, 2),
                                       make_field(5, 1)};
    for (const Field& f : fields)
        for (int n = 2; n <= 3; ++n)
            for (int r = 1; r <= 3; ++r) {
                const DualityReport rep = check_formulas_cell(n, r, f, caps);
                require(rep.verdicts.at("formula_a").is_true(),
                        "off-diagonal operator identity must hold for every t" + at(n, r, f));
                require(rep.verdicts.at("formula_b").is_true(),
                        "diagonal operator identity must hold for every t != -1" + at(n, r, f));
                const Verdict& v = rep.verdicts.at("vandermonde");
                if (f.cardinality >= r + 1)
                    require(v.is_true(),
                            "interpolation must recover the divided powers" + at(n, r, f));
                else
                    require(v.is_skipped(),
                            "interpolation must be reported as skipped when q < r+1" +
                                at(n, r, f));
            }
}

void criterion_11_catalan_scan(const Caps& caps) {
    const std::vector<DualityReport> cells = tl_scan(2, 6, /*with_q=*/true, caps);
    require(cells.size() == 10, "scan must produce an F_p and a Q cell for each r in 2..6");
    long long q_rho_at_6 = -1;
    for (const DualityReport& c : cells) {
        require(!c.verdicts.count("scan_truncated"), "scan must not truncate under default caps");
        if (c.field_q != 0) {
            require(c.verdicts.at("strict").is_true(),
                    "mod-2 commutant must strictly exceed the image at r=" + std::to_string(c.r));
        } else {
            require(c.verdicts.at("rho_eq_catalan").is_true(),
                    "characteristic-zero image must have Catalan dimension at r=" +
                        std::to_string(c.r));
            if (c.r == 6) q_rho_at_6 = c.dims.at("rho_image");
        }
    }
    require(q_rho_at_6 == 132, "characteristic-zero image at r=6 must have dimension 132");
}

void criterion_12_method_cross_checks(const Caps& caps) {
    struct G {
        GroupKind kind;
        Field f;
    };
    const std::vector<G> groups = {{GroupKind::GL, make_field(2, 1)},
                                   {GroupKind::SL, make_field(3, 1)},
                                   {GroupKind::GL, make_field(3, 1)},
                                   {GroupKind::SL, make_field(2, 2)},
                                   {GroupKind::GL, make_field(2, 2)}};
    for (const G& g : groups)
        with_field_ops(g.f, [&](const auto& k) {
            for (int r = 2; r <= 3; ++r) {
                const auto closure = phi_span_closure(k, g.kind, 2, r, caps);
                const auto enumerated = phi_span_enumerate(k, g.kind, 2, r, caps);
                require(closure.equals_span(enumerated),
                        "closure and enumeration must span the same algebra" +
                            at(2, r, g.f) + " group=" + group_kind_str(g.kind));
            }
        });
    // commutant from generators == commutant from the full element list
    for (const Field& f : {make_field(2, 1), make_field(3, 1)})
        with_field_ops(f, [&](const auto& k) {
            using KT = std::decay_t<decltype(k)>;
            for (int r = 2; r <= 3; ++r) {
                const long long D = tensor_dim(2, r, caps);
                GroupSpec spec{GroupKind::GL, 2, f};
                std::vector<Mat<KT>> all;
                for (const auto& g : group_elements(k, spec, caps))
                    all.push_back(tensor_power_operator(k, g, r, caps));
                const auto from_all = commutant(k, all, caps, static_cast<int>(D));
                const auto from_gens = endo_G_span(k, GroupKind::GL, 2, r, caps);
                require(from_gens.equals_span(from_all),
                        "generator commutant must equal the whole-group commutant" +
                            at(2, r, f));
            }
        });
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double budget_s;
        std::function<void(const Caps&)> body;
    };
    const Caps caps;
    const std::vector<Criterion> criteria = {
        {1, "two-slot image strictly inside the commutant over F_2", 1.0, criterion_1_smallest_gap},
        {2, "three-slot image drops to Catalan dimension 5 over F_2", 1.0, criterion_2_catalan_drop},
        {3, "isomorphism onto the commutant whenever n >= r+1", 120.0,
         criterion_3_iso_above_threshold},
        {4, "both surjectivity statements across the q > r grid, GL and SL", 300.0,
         criterion_4_surjectivity_for_large_fields},
        {5, "6-dimensional group algebra cannot fill the 10-dimensional commutant", 1.0,
         criterion_5_small_field_obstruction},
        {6, "orbit span equals the symmetric commutant with binomial dimension", 120.0,
         criterion_6_orbit_span_is_the_commutant},
        {7, "commutant of the orbit span is exactly the symmetric image", 120.0,
         criterion_7_double_centralizer},
        {8, "divided-power algebra fills the symmetric commutant, primed or not", 120.0,
         criterion_8_hyperalgebra_fills_commutant},
        {9, "divided powers vanish beyond the slot count, with exact integrality", 30.0,
         criterion_9_nilpotency_and_integrality},
        {10, "one-parameter operator identities and interpolation recovery", 60.0,
         criterion_10_operator_identities},
        {11, "strict mod-2 inclusions and Catalan dimensions out to six slots", 600.0,
         criterion_11_catalan_scan},
        {12, "generator-based spans agree with whole-group enumeration", 120.0,
         criterion_12_method_cross_checks},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body(caps);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && elapsed > c.budget_s)
            error = "exceeded time budget of " + std::to_string(c.budget_s) + "s";
        if (error.empty()) {
            std::printf("PASS criterion %2d: %s (%.2fs)\n", c.id, c.label, elapsed);
        } else {
            std::printf("FAIL criterion %2d: %s (%.2fs): %s\n", c.id, c.label, elapsed,
                        error.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}

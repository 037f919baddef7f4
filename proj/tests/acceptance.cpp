// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "test_support.hpp"

using namespace nmds;
using namespace testing;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome ok(bool pass, std::string detail = "") { return {pass, std::move(detail)}; }

XYSpec pool(const Field& f, Disc d) { return XYSpec(f, powers(f, 0, 3), powers(f, 4, 7), d); }

MonicPoly from_root_powers(const Field& f, std::vector<int> e) {
    std::vector<Rep> roots;
    for (int k : e) roots.push_back(f.exp(k));
    return poly_from_roots(f, roots);
}

Outcome a1() {
    const LinearCode code(text_matrix(gf2(), "1 0 0 0 1 0\n0 1 0 0 1 1\n0 0 1 0 0 1"));
    const auto p = ghw_profile(code);
    return ok(p == std::vector<std::size_t>{2, 4, 5}, "d = (" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
                                                          std::to_string(p[2]) + ")");
}

Outcome a2() {
    const LinearCode code(text_matrix(gf4(), "1 0 0 a^2 a^1 0\n0 1 0 a^1 a^1 0\n0 0 1 a^1 0 a^1"));
    const CodeReport rep = classify(code);
    return ok(rep.verdict == Verdict::AMDS_only && rep.d1 == 3 && rep.d2 == 4,
              std::string(to_string(rep.verdict)) + " d2 = " + std::to_string(rep.d2.value_or(0)));
}

Outcome a3() {
    const Field f = gf256();
    const Construction c = construct_mds(pool(f, Disc::Top));
    const bool match = c.matrix == power_matrix(f, fixtures::kGf256TopForward) &&
                       c.inverse_direction == power_matrix(f, fixtures::kGf256TopBackward) &&
                       f.format_rep(c.matrix(0, 1)) == "a^234";
    const bool mds = all_square_submatrices_nonsingular(c.matrix).all_nonsingular &&
                     all_square_submatrices_nonsingular(c.inverse_direction).all_nonsingular;
    return ok(match && mds, std::string("entries ") + (match ? "match" : "differ") + ", minors " + (mds ? "ok" : "singular"));
}

Outcome a4() {
    const Field f = gf16();
    const Construction c = construct_nmds(pool(f, Disc::Top));
    const bool match = c.matrix == text_matrix(f, fixtures::kGf16TopForward) &&
                       c.inverse_direction == text_matrix(f, fixtures::kGf16TopBackward) && c.matrix(2, 3) == 0;
    const bool nmds = is_nmds_matrix(c.matrix).holds() && is_nmds_matrix(c.inverse_direction).holds();
    const bool witness = c.conditions.witness == std::vector<std::size_t>{0, 1, 3, 7};
    return ok(match && nmds && witness, "witness {1,a,a^3,a^7}");
}

Outcome a5() {
    const Field f256 = gf256();
    const Construction mds = construct_mds(pool(f256, Disc::First));
    const bool m1 = mds.matrix == power_matrix(f256, fixtures::kGf256FirstForward) &&
                    mds.inverse_direction == power_matrix(f256, fixtures::kGf256FirstBackward) &&
                    classify_matrix(mds.matrix) == MatrixClass::MDS;
    const Field f16 = gf16();
    const Construction nmds = construct_nmds(pool(f16, Disc::First));
    const bool m2 = nmds.matrix == text_matrix(f16, fixtures::kGf16FirstForward) &&
                    nmds.inverse_direction == text_matrix(f16, fixtures::kGf16FirstBackward) &&
                    classify_matrix(nmds.matrix) == MatrixClass::NMDS;
    // indices into (1, a, ..., a^7): 1 + a^-1 + a^-2 + a^-7
    const bool witness = nmds.conditions.witness == std::vector<std::size_t>{0, 1, 2, 7};
    return ok(m1 && m2 && witness);
}

Outcome a6() {
    const Field f = gf16();
    const Construction c = construct_mds(pool(f, Disc::FirstAndLast));
    return ok(c.matrix == text_matrix(f, fixtures::kGf16TwoGapForward) &&
              c.inverse_direction == text_matrix(f, fixtures::kGf16TwoGapBackward) &&
              classify_matrix(c.matrix) == MatrixClass::MDS && classify_matrix(c.inverse_direction) == MatrixClass::MDS);
}

Outcome a7() {
    const Field f256 = gf256();
    const InvolutoryConstruction mds = construct_involutory(f256, powers(f256, 0, 5), f256.exp(1), Target::MDS);
    const bool big = mds.base.matrix == power_matrix(f256, fixtures::kGf256Involutory) &&
                     f256.format_rep(mds.base.matrix(0, 0)) == "a^113" &&
                     mds.base.matrix * mds.base.matrix == FieldMatrix::identity(f256, 6);
    const Field f16 = gf16();
    const InvolutoryConstruction nmds = construct_involutory(f16, powers(f16, 0, 3), 1, Target::NMDS);
    const bool small = nmds.base.matrix == text_matrix(f16, fixtures::kGf16Involutory) &&
                       nmds.base.matrix * nmds.base.matrix == FieldMatrix::identity(f16, 4);
    bool rejected = false;
    try {
        construct_involutory(f16, powers(f16, 0, 2), f16.exp(3), Target::MDS);
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::OddOrder;
    }
    const bool odd = !is_involutory(text_matrix(f16, fixtures::kGf16OddQuotient));
    return ok(big && small && rejected && odd);
}

Outcome a8() {
    const Field f = gf16();
    const MonicPoly b(f, {1, f.exp(1), 0, 0});
    bool pass = is_recursive_mds(b, 22, Method::Direct).holds && is_recursive_nmds(b, 10, Method::Direct).holds;
    for (auto roots : {std::vector<int>{0, 1, 2, 4}, std::vector<int>{0, 2, 3, 4}}) {
        const MonicPoly g = from_root_powers(f, roots);
        for (std::uint64_t m = 4; m <= 11; ++m) pass = pass && is_recursive_nmds(g, m, Method::Direct).holds;
    }
    pass = pass && is_recursive_mds(from_root_powers(f, {0, 2, 3, 5}), 4, Method::Direct).holds;
    return ok(pass);
}

Outcome a9() {
    std::mt19937_64 rng(9);
    std::size_t cases = 0, mismatches = 0;
    const Field fields[] = {gf16(), gf256()};
    while (cases < 1200) {
        const Field& f = fields[cases % 2];
        const std::size_t n = 1 + rng() % 6;
        std::vector<Rep> x;
        while (x.size() < n) {
            const Rep v = 1 + static_cast<Rep>(rng() % (f.order() - 1));
            if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
        }
        std::vector<std::uint32_t> gaps;
        switch (cases % 5) {
            case 0: break;
            case 1: gaps = {1}; break;
            case 2: gaps = {static_cast<std::uint32_t>(n - 1)}; break;
            case 3: gaps = {1, static_cast<std::uint32_t>(n)}; break;
            default: {
                const std::size_t s = 1 + rng() % 3;
                for (std::size_t i = 0; i < s; ++i) gaps.push_back(static_cast<std::uint32_t>(rng() % (n + s - 1)));
                std::sort(gaps.begin(), gaps.end());
                gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
            }
        }
        if (!gaps.empty() && gaps.back() >= n + gaps.size() - 1) continue;
        if (n == 1 && cases % 5 != 0 && cases % 5 != 4) continue;
        const auto spec = GVandSpec::from_discontinuities(f, x, gaps);
        mismatches += det_gvand_formula(spec).value != det(gvand(spec)).value();
        ++cases;
    }
    return ok(mismatches == 0, std::to_string(cases) + " specs, " + std::to_string(mismatches) + " mismatches");
}

Outcome a10() {
    std::mt19937_64 rng(10);
    std::size_t cases = 0, mismatches = 0, mds_count = 0, nmds_count = 0;
    const Field fields[] = {gf4(), Field::parse("GF(2^3;0xb)"), gf16(), Field::parse("GF(3^2;2,2,1)")};
    for (int t = 0; t < 240; ++t) {
        const Field& f = fields[t % 4];
        const std::size_t n = 1 + rng() % 5;
        FieldMatrix a = random_matrix(f, n, n, rng);
        if (t % 3 == 0) {
            // bias toward structured matrices so both classes show up
            std::vector<Rep> pool;
            while (pool.size() < 2 * n) {
                const Rep v = 1 + static_cast<Rep>(rng() % (f.order() - 1));
                if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
                if (pool.size() + 1 >= f.order()) break;
            }
            if (pool.size() == 2 * n && n >= 2) {
                try {
                    a = build_quotient(XYSpec(f, {pool.begin(), pool.begin() + n}, {pool.begin() + n, pool.end()}, Disc::Top)).forward;
                } catch (const Error&) {
                }
            }
        }
        const bool mds = is_mds_matrix(a).is_mds;
        const bool gen = is_nmds_matrix(a).holds();
        const bool par = is_nmds_matrix_parity(a).holds();
        const CodeReport rep = classify(standard_generator(a));
        const bool by_weights = rep.d1 == n && (!rep.d2 || *rep.d2 == n + 2);
        mismatches += mds != all_square_submatrices_nonsingular(a).all_nonsingular;
        mismatches += gen != par || gen != by_weights;
        mds_count += mds;
        nmds_count += gen;
        ++cases;
    }
    return ok(mismatches == 0, std::to_string(cases) + " matrices (" + std::to_string(mds_count) + " MDS, " +
                                   std::to_string(nmds_count) + " NMDS), " + std::to_string(mismatches) + " mismatches");
}

Outcome a11() {
    std::mt19937_64 rng(11);
    const Field f = gf16();
    std::size_t mismatches = 0;
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + rng() % 3;
        std::vector<Rep> a(n);
        for (auto& v : a) v = random_rep(f, rng);
        if (a[0] == 0) a[0] = 1;
        const MonicPoly g(f, a);
        const Rep c = 1 + static_cast<Rep>(rng() % (f.order() - 1));
        const auto before = scan_exponents(g, n, n + 6);
        const auto after = scan_exponents(scale_poly(g, c), n, n + 6);
        for (std::size_t i = 0; i < before.size(); ++i) mismatches += before[i].verdict != after[i].verdict;
    }
    return ok(mismatches == 0, "20 pairs, " + std::to_string(mismatches) + " mismatches");
}

Outcome a12() {
    const Field f = gf16();
    std::size_t checks = 0, mismatches = 0;
    for (Family fam : {Family::Ib, Family::Ic, Family::NewMds}) {
        for (std::size_t n = 2; n <= 4; ++n) {
            for (std::uint32_t k = 1; k < f.order() - 1; ++k) {
                for (std::uint64_t m = n; m <= n + 11; ++m) {
                    std::optional<ThetaConstruction> built;
                    try {
                        built = construct_theta(fam, f, f.exp(k), n, m);
                    } catch (const Error& e) {
                        if (e.kind() == ErrorKind::ExponentCollision) continue;
                        throw;
                    }
                    const ThetaConstruction& tc = *built;
                    const bool mds_d = is_recursive_mds(tc.g, m, Method::Direct).holds;
                    const bool mds_g = is_recursive_mds(tc.g, m, Method::GPrime, &tc.family).holds;
                    const bool nmds_d = is_recursive_nmds(tc.g, m, Method::Direct).holds;
                    const bool nmds_g = is_recursive_nmds(tc.g, m, Method::GPrime, &tc.family).holds;
                    mismatches += (mds_d != mds_g) + (nmds_d != nmds_g);
                    ++checks;
                }
            }
        }
    }
    return ok(mismatches == 0 && checks > 0, std::to_string(checks) + " constructions, " + std::to_string(mismatches) + " mismatches");
}

Outcome a13() {
    const Field f16 = gf16(), f256 = gf256();
    const MonicPoly b(f16, {1, f16.exp(1), 0, 0});
    const std::vector<FieldMatrix> all{
        power_matrix(f256, fixtures::kGf256TopForward),   power_matrix(f256, fixtures::kGf256TopBackward),
        power_matrix(f256, fixtures::kGf256FirstForward), power_matrix(f256, fixtures::kGf256FirstBackward),
        power_matrix(f256, fixtures::kGf256Involutory),   text_matrix(f16, fixtures::kGf16TopForward),
        text_matrix(f16, fixtures::kGf16TopBackward),     text_matrix(f16, fixtures::kGf16FirstForward),
        text_matrix(f16, fixtures::kGf16FirstBackward),   text_matrix(f16, fixtures::kGf16TwoGapForward),
        text_matrix(f16, fixtures::kGf16TwoGapBackward),  text_matrix(f16, fixtures::kGf16Involutory),
        text_matrix(f16, fixtures::kGf16OddQuotient),     mat_pow(companion(b), 22),
        mat_pow(companion(b), 10),
    };
    std::size_t mismatches = 0;
    for (const auto& a : all) mismatches += classify_matrix(a) != classify_matrix(a.transpose()) || !dual_transpose_check(a);
    return ok(mismatches == 0, std::to_string(all.size()) + " matrices, " + std::to_string(mismatches) + " mismatches");
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},   {"A5", a5},   {"A6", a6},   {"A7", a7},
        {"A8", a8}, {"A9", a9}, {"A10", a10}, {"A11", a11}, {"A12", a12}, {"A13", a13},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s (%.1f ms)%s%s\n", o.pass ? "PASS" : "FAIL", name, ms, o.detail.empty() ? "" : " ", o.detail.c_str());
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}

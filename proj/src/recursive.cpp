#include "nmds/recursive.hpp"

#include <algorithm>
#include <numeric>

#include "nmds/subsets.hpp"

namespace nmds {

MonicPoly::MonicPoly(Field field, std::vector<Rep> coeffs) : field_(std::move(field)), a_(std::move(coeffs)) {
    if (a_.empty()) raise(ErrorKind::InvalidArgument, "monic polynomial needs degree >= 1");
    for (auto v : a_)
        if (!field_.contains(v)) raise(ErrorKind::InvalidArgument, "coefficient outside the field");
}

Rep MonicPoly::eval(Rep x) const {
    Rep acc = 1;
    for (std::size_t i = a_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), a_[i]);
    return acc;
}

std::string MonicPoly::to_string() const {
    auto monomial = [](std::size_t e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return "x";
        return "x^" + std::to_string(e);
    };
    std::string out = monomial(a_.size());
    for (std::size_t e = a_.size(); e-- > 0;) {
        const Rep c = a_[e];
        if (c == 0) continue;
        out += " + ";
        if (e == 0)
            out += field_.format_rep(c);
        else if (c == 1)
            out += monomial(e);
        else
            out += field_.format_rep(c) + "*" + monomial(e);
    }
    return out;
}

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::Explicit: return "explicit";
        case Provenance::ThetaIb: return "theta_family_Ib";
        case Provenance::ThetaIc: return "theta_family_Ic";
        case Provenance::ThetaNewMds: return "theta_family_new_mds";
    }
    return "explicit";
}

namespace {

void require_distinct(const std::vector<Rep>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) raise(ErrorKind::RepeatedRoot, "roots must be distinct", {i, j});
}

void require_order_cap(std::size_t n, const Caps& caps) {
    if (n > caps.max_order)
        raise(ErrorKind::TooLarge, "order " + std::to_string(n) + " exceeds the classification cap " +
                                       std::to_string(caps.max_order));
}

}  // namespace

RootFamily RootFamily::explicit_roots(const Field& field, std::vector<Rep> lambdas) {
    if (lambdas.empty()) raise(ErrorKind::InvalidArgument, "root family needs n >= 1");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!field.contains(lambdas[i])) raise(ErrorKind::InvalidArgument, "root outside the field", {i});
        if (lambdas[i] == 0) raise(ErrorKind::InvalidArgument, "roots must be nonzero", {i});
    }
    require_distinct(lambdas);
    return {field, std::move(lambdas), Provenance::Explicit, std::nullopt, std::nullopt};
}

FieldMatrix companion(const MonicPoly& g) {
    const Field& f = g.field();
    const std::size_t n = g.degree();
    FieldMatrix c(f, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c.set(i, i + 1, 1);
    for (std::size_t j = 0; j < n; ++j) c.set(n - 1, j, f.neg(g.coeffs()[j]));
    return c;
}

MonicPoly poly_from_roots(const Field& f, const std::vector<Rep>& lambdas) {
    if (lambdas.empty()) raise(ErrorKind::InvalidArgument, "need at least one root");
    std::vector<Rep> c{1};  // low to high, leading coefficient included
    for (auto l : lambdas) {
        std::vector<Rep> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], c[i]);
            next[i] = f.sub(next[i], f.mul(l, c[i]));
        }
        c = std::move(next);
    }
    c.pop_back();
    return MonicPoly(f, std::move(c));
}

MonicPoly poly_from_roots(const RootFamily& fam) { return poly_from_roots(fam.field, fam.lambdas); }

std::vector<Rep> roots_in_field(const MonicPoly& g) {
    const std::uint64_t q = g.field().order();
    if (q > (std::uint64_t{1} << 20)) raise(ErrorKind::TooLarge, "root search limited to fields of at most 2^20 elements");
    std::vector<Rep> out;
    for (std::uint64_t v = 0; v < q && out.size() < g.degree(); ++v)
        if (g.eval(static_cast<Rep>(v)) == 0) out.push_back(static_cast<Rep>(v));
    return out;
}

Diagonalization diagonalize_companion(const MonicPoly& g, const RootFamily& fam) {
    const Field& f = g.field();
    const std::size_t n = g.degree();
    if (!(fam.field == f)) raise(ErrorKind::FieldMismatch, "root family lives in another field");
    if (fam.lambdas.size() != n) raise(ErrorKind::RootMismatch, "root count differs from the degree");
    for (std::size_t i = 0; i < n; ++i)
        if (g.eval(fam.lambdas[i]) != 0) raise(ErrorKind::RootMismatch, "lambda is not a root of g", {i});
    require_distinct(fam.lambdas);

    Diagonalization out{vand(f, fam.lambdas), FieldMatrix::diagonal(f, fam.lambdas)};
    const FieldMatrix c = companion(g);
    if (!(out.v * out.d * mat_inv(out.v) == c)) raise(ErrorKind::SelfCheckFailed, "C_g != V D V^-1");
    const FieldMatrix vt = out.v.transpose();
    if (!(mat_inv(vt) * out.d * vt == c.transpose())) raise(ErrorKind::SelfCheckFailed, "C_g^T != (V^T)^-1 D V^T");
    return out;
}

FieldMatrix gprime(const RootFamily& fam, std::uint64_t m) {
    const std::size_t n = fam.lambdas.size();
    if (m < n) raise(ErrorKind::ExponentTooSmall, "G' needs m >= n");
    const Field& f = fam.field;
    FieldMatrix out(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rep l = fam.lambdas[i];
        Rep p = 1;
        for (std::size_t e = 0; e < n; ++e, p = f.mul(p, l)) out.set(i, e, p);
        p = f.pow(l, static_cast<std::int64_t>(m));
        for (std::size_t e = 0; e < n; ++e, p = f.mul(p, l)) out.set(i, n + e, p);
    }
    return out;
}

std::string_view to_string(Method m) noexcept { return m == Method::Direct ? "direct" : "gprime"; }

namespace {

RootFamily roots_for(const MonicPoly& g, const RootFamily* fam) {
    if (fam) {
        for (std::size_t i = 0; i < fam->lambdas.size(); ++i)
            if (g.eval(fam->lambdas[i]) != 0) raise(ErrorKind::RootMismatch, "lambda is not a root of g", {i});
        if (fam->lambdas.size() != g.degree()) raise(ErrorKind::RootMismatch, "root count differs from the degree");
        require_distinct(fam->lambdas);
        return *fam;
    }
    auto roots = roots_in_field(g);
    if (roots.size() != g.degree())
        raise(ErrorKind::RootMismatch, "g does not split into distinct linear factors over the field");
    return {g.field(), std::move(roots), Provenance::Explicit, std::nullopt, std::nullopt};
}

// C_g^m for n >= 3 and m < n has the unit vector e_{m+1} as its first row,
// so [I | C_g^m] has a weight-2 codeword and is neither MDS nor NMDS.
bool unit_row_shortcut(const MonicPoly& g, std::uint64_t m) { return g.degree() >= 3 && m < g.degree(); }

}  // namespace

RecursiveCheck is_recursive_mds(const MonicPoly& g, std::uint64_t m, Method method, const RootFamily* fam,
                                const Caps& caps) {
    const std::size_t n = g.degree();
    require_order_cap(n, caps);
    RecursiveCheck out;
    if (method == Method::Direct) {
        if (unit_row_shortcut(g, m)) return out;
        const MdsCheck check = is_mds_matrix(mat_pow(companion(g), m), caps);
        out.holds = check.is_mds;
        out.witness = check.witness;
        return out;
    }
    const RootFamily roots = roots_for(g, fam);
    const FieldMatrix gp = gprime(roots, m);
    out.holds = for_each_subset(2 * n, n, [&](const std::vector<std::size_t>& cols) {
        if (column_rank(gp, cols) == n) return true;
        out.witness = cols;
        return false;
    });
    return out;
}

RecursiveCheck is_recursive_nmds(const MonicPoly& g, std::uint64_t m, Method method, const RootFamily* fam,
                                 const Caps& caps) {
    require_order_cap(g.degree(), caps);
    RecursiveCheck out;
    ThreeClauseCheck check;
    if (method == Method::Direct) {
        if (unit_row_shortcut(g, m)) return out;
        check = is_nmds_matrix(mat_pow(companion(g), m), caps);
    } else {
        const RootFamily roots = roots_for(g, fam);
        check = three_clause_check(gprime(roots, m), caps);
    }
    out.holds = check.holds();
    if (!check.clause_i)
        out.witness = check.witness_i;
    else if (!check.clause_iii)
        out.witness = check.witness_iii;
    else
        out.witness = check.witness_ii;
    out.clauses = std::move(check);
    return out;
}

MonicPoly scale_poly(const MonicPoly& g, Rep c) {
    const Field& f = g.field();
    if (c == 0) raise(ErrorKind::DivisionByZero, "scaling factor must be nonzero");
    const std::size_t n = g.degree();
    std::vector<Rep> a(g.coeffs());
    for (std::size_t i = 0; i < n; ++i) a[i] = f.mul(a[i], f.pow(c, static_cast<std::int64_t>(n - i)));
    return MonicPoly(f, std::move(a));
}

// ---------------------------------------------------------------------------

std::string_view to_string(ThetaVerdict v) noexcept {
    switch (v) {
        case ThetaVerdict::MdsEligible: return "mds_eligible";
        case ThetaVerdict::NmdsEligible: return "nmds_eligible";
        case ThetaVerdict::Ineligible: return "ineligible";
    }
    return "ineligible";
}

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::Ib: return "theta-ib";
        case Family::Ic: return "theta-ic";
        case Family::NewMds: return "new-mds";
    }
    return "theta-ib";
}

Family parse_family(std::string_view text) {
    if (text == "theta-ib") return Family::Ib;
    if (text == "theta-ic") return Family::Ic;
    if (text == "new-mds") return Family::NewMds;
    raise(ErrorKind::ParseError, "family must be theta-ib, theta-ic or new-mds (got '" + std::string(text) + "')");
}

namespace {

std::vector<std::uint64_t> root_exponents(Family family, std::size_t n) {
    std::vector<std::uint64_t> t;
    switch (family) {
        case Family::Ib:
            for (std::size_t i = 0; i + 1 < n; ++i) t.push_back(i);
            t.push_back(n);
            break;
        case Family::Ic:
            t.push_back(0);
            for (std::size_t i = 2; i <= n; ++i) t.push_back(i);
            break;
        case Family::NewMds:
            t.push_back(0);
            for (std::size_t i = 2; i + 1 <= n; ++i) t.push_back(i);
            t.push_back(n + 1);
            break;
    }
    return t;
}

Provenance provenance_of(Family family) {
    switch (family) {
        case Family::Ib: return Provenance::ThetaIb;
        case Family::Ic: return Provenance::ThetaIc;
        case Family::NewMds: return Provenance::ThetaNewMds;
    }
    return Provenance::Explicit;
}

SumMode mode_of(Family family) {
    switch (family) {
        case Family::Ib: return SumMode::Sum;
        case Family::Ic: return SumMode::InverseSum;
        case Family::NewMds: return SumMode::ProductForm;
    }
    return SumMode::Sum;
}

}  // namespace

ThetaConstruction construct_theta(Family family, const Field& f, Rep theta, std::size_t n, std::uint64_t m,
                                  bool verify, const Caps& caps) {
    if (n < 2) raise(ErrorKind::InvalidArgument, "theta families need n >= 2");
    if (!f.contains(theta) || theta == 0) raise(ErrorKind::InvalidArgument, "theta must be a nonzero field element");
    if (m < n) raise(ErrorKind::ExponentTooSmall, "m must be at least n");

    std::vector<std::uint64_t> e_set;
    for (std::uint64_t e = 0; e < n; ++e) e_set.push_back(e);
    for (std::uint64_t e = 0; e < n; ++e) e_set.push_back(m + e);

    // theta^r = theta^r' iff r = r' mod ord(theta).
    const std::uint64_t ord = f.multiplicative_order(theta);
    std::vector<std::pair<std::uint64_t, std::size_t>> residues;
    for (std::size_t i = 0; i < e_set.size(); ++i) residues.emplace_back(e_set[i] % ord, i);
    std::sort(residues.begin(), residues.end());
    for (std::size_t i = 1; i < residues.size(); ++i)
        if (residues[i].first == residues[i - 1].first) {
            auto a = residues[i - 1].second, b = residues[i].second;
            raise(ErrorKind::ExponentCollision,
                  "theta^" + std::to_string(e_set[std::min(a, b)]) + " = theta^" + std::to_string(e_set[std::max(a, b)]) +
                      " (ord(theta) = " + std::to_string(ord) + ")",
                  {std::min(a, b), std::max(a, b)});
        }

    std::vector<Rep> lambdas;
    for (auto t : root_exponents(family, n)) lambdas.push_back(f.pow(theta, static_cast<std::int64_t>(t)));
    require_distinct(lambdas);
    RootFamily fam{f, lambdas, provenance_of(family), theta, std::nullopt};

    std::vector<Rep> pool;
    for (auto e : e_set) pool.push_back(f.pow(theta, static_cast<std::int64_t>(e)));
    ConditionReport cond = check_subset_sums(f, pool, mode_of(family));

    ThetaVerdict verdict = ThetaVerdict::Ineligible;
    if (cond.mds_eligible)
        verdict = ThetaVerdict::MdsEligible;
    else if (family != Family::NewMds && cond.nmds_eligible)
        verdict = ThetaVerdict::NmdsEligible;

    ThetaConstruction out{std::move(fam), poly_from_roots(f, lambdas), m, std::move(e_set), std::move(cond), verdict,
                          std::nullopt};
    if (verify) {
        const MatrixClass cls = classify_matrix(mat_pow(companion(out.g), m), caps);
        const bool consistent = (verdict == ThetaVerdict::MdsEligible && cls == MatrixClass::MDS) ||
                                (verdict == ThetaVerdict::NmdsEligible && cls == MatrixClass::NMDS) ||
                                (verdict == ThetaVerdict::Ineligible && cls != MatrixClass::MDS);
        if (!consistent)
            raise(ErrorKind::SelfCheckFailed, "subset scan says " + std::string(to_string(verdict)) + " but C_g^m is " +
                                                  std::string(to_string(cls)));
        out.verified = cls;
    }
    return out;
}

ThetaConstruction construct_theta_Ib(const Field& f, Rep theta, std::size_t n, std::uint64_t m, bool verify,
                                     const Caps& caps) {
    return construct_theta(Family::Ib, f, theta, n, m, verify, caps);
}

ThetaConstruction construct_theta_Ic(const Field& f, Rep theta, std::size_t n, std::uint64_t m, bool verify,
                                     const Caps& caps) {
    return construct_theta(Family::Ic, f, theta, n, m, verify, caps);
}

ThetaConstruction construct_theta_new_mds(const Field& f, Rep theta, std::size_t n, std::uint64_t m, bool verify,
                                          const Caps& caps) {
    return construct_theta(Family::NewMds, f, theta, n, m, verify, caps);
}

std::vector<ScanEntry> scan_exponents(const MonicPoly& g, std::uint64_t m_lo, std::uint64_t m_hi, const Caps& caps,
                                      std::uint64_t max_exponent) {
    if (m_lo > m_hi) raise(ErrorKind::InvalidArgument, "empty exponent range");
    if (m_hi > max_exponent)
        raise(ErrorKind::TooLarge, "exponent " + std::to_string(m_hi) + " exceeds the scan cap " + std::to_string(max_exponent));
    require_order_cap(g.degree(), caps);
    const FieldMatrix c = companion(g);
    FieldMatrix power = mat_pow(c, m_lo);
    std::vector<ScanEntry> out;
    for (std::uint64_t m = m_lo;; ++m) {
        out.push_back({m, classify_matrix(power, caps)});
        if (m == m_hi) break;
        power = power * c;
    }
    return out;
}

std::vector<SearchHit> search_theta(Family family, const Field& f, std::size_t n, std::uint64_t m) {
    const ThetaVerdict wanted = family == Family::NewMds ? ThetaVerdict::MdsEligible : ThetaVerdict::NmdsEligible;
    std::vector<SearchHit> hits;
    const std::uint64_t q = f.order();
    for (std::uint64_t k = 1; k + 1 < q; ++k) {
        const Rep theta = f.exp(static_cast<std::int64_t>(k));
        try {
            ThetaConstruction tc = construct_theta(family, f, theta, n, m);
            if (tc.verdict == wanted) hits.push_back({k, theta, tc.verdict, tc.conditions.witness});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ExponentCollision) throw;
        }
    }
    return hits;
}

}  // namespace nmds

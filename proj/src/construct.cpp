#include "nmds/construct.hpp"

#include <algorithm>
#include <string>

namespace nmds {

std::string_view to_string(Disc d) noexcept {
    switch (d) {
        case Disc::Top: return "n-1";
        case Disc::First: return "1";
        case Disc::FirstAndLast: return "1,n";
    }
    return "n-1";
}

Disc parse_disc(std::string_view text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '{' && c != '}') t.push_back(c);
    if (t == "n-1") return Disc::Top;
    if (t == "1") return Disc::First;
    if (t == "1,n") return Disc::FirstAndLast;
    raise(ErrorKind::ParseError, "discontinuity set must be n-1, 1 or 1,n (got '" + std::string(text) + "')");
}

std::string_view to_string(SumMode m) noexcept {
    switch (m) {
        case SumMode::Sum: return "sum";
        case SumMode::InverseSum: return "inv_sum";
        case SumMode::ProductForm: return "product_form";
    }
    return "sum";
}

SumMode mode_for(Disc d) noexcept {
    switch (d) {
        case Disc::Top: return SumMode::Sum;
        case Disc::First: return SumMode::InverseSum;
        case Disc::FirstAndLast: return SumMode::ProductForm;
    }
    return SumMode::Sum;
}

std::string_view to_string(Target t) noexcept { return t == Target::MDS ? "mds" : "nmds"; }

Target parse_target(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "mds") return Target::MDS;
    if (t == "nmds") return Target::NMDS;
    raise(ErrorKind::ParseError, "target must be mds or nmds (got '" + std::string(text) + "')");
}

// ---------------------------------------------------------------------------

XYSpec::XYSpec(Field field, std::vector<Rep> x, std::vector<Rep> y, Disc disc)
    : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)), disc_(disc) {
    if (x_.size() != y_.size()) raise(ErrorKind::DimensionMismatch, "x and y must have the same length");
    if (x_.size() < 2) raise(ErrorKind::InvalidArgument, "constructions need n >= 2");
    const auto all = pool();
    for (auto v : all)
        if (!field_.contains(v)) raise(ErrorKind::InvalidArgument, "pool element outside the field");
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j]) raise(ErrorKind::InvalidArgument, "pool elements must be distinct", {i, j});
    const auto zeros = static_cast<std::size_t>(std::count(all.begin(), all.end(), Rep{0}));
    if (disc_ != Disc::Top && zeros > 0) {
        const auto at = static_cast<std::size_t>(std::find(all.begin(), all.end(), Rep{0}) - all.begin());
        raise(ErrorKind::InvalidArgument, "pool must be nonzero for I = {" + std::string(to_string(disc_)) + "}", {at});
    }
}

std::vector<std::uint32_t> XYSpec::gaps() const {
    const auto n = static_cast<std::uint32_t>(x_.size());
    switch (disc_) {
        case Disc::Top: return {n - 1};
        case Disc::First: return {1};
        case Disc::FirstAndLast: return {1, n};
    }
    return {};
}

std::vector<Rep> XYSpec::pool() const {
    std::vector<Rep> out(x_);
    out.insert(out.end(), y_.begin(), y_.end());
    return out;
}

// ---------------------------------------------------------------------------

ConditionReport check_subset_sums(const Field& f, const std::vector<Rep>& pool, SumMode mode) {
    if (pool.empty() || pool.size() % 2 != 0) raise(ErrorKind::InvalidArgument, "pool size must be even and positive");
    const std::size_t n = pool.size() / 2;
    std::vector<Rep> inverse(pool.size(), 0);
    if (mode != SumMode::Sum)
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (pool[i] == 0) raise(ErrorKind::DivisionByZero, "inverse-sum condition over a zero element", {i});
            inverse[i] = f.inv(pool[i]);
        }

    auto value = [&](Rep s, Rep t) -> Rep {
        switch (mode) {
            case SumMode::Sum: return s;
            case SumMode::InverseSum: return t;
            case SumMode::ProductForm: return f.sub(f.mul(s, t), 1);
        }
        return s;
    };

    ConditionReport rep;
    rep.mode = mode;
    std::vector<std::size_t> chosen;
    chosen.reserve(n);
    bool first_zero = false;
    bool last_zero = false;
    // Lexicographic DFS carrying prefix sums, so the first zero found is the
    // lexicographically smallest one.
    auto dfs = [&](auto&& self, std::size_t start, Rep s, Rep t) -> void {
        if (chosen.size() == n) {
            ++rep.subsets;
            const bool zero = value(s, t) == 0;
            if (zero) {
                ++rep.zero_count;
                if (!rep.witness) rep.witness = chosen;
                if (chosen.front() == 0 && chosen.back() == n - 1) first_zero = true;
                if (chosen.front() == n) last_zero = true;
            } else {
                ++rep.nonzero_count;
            }
            return;
        }
        const std::size_t need = n - chosen.size();
        for (std::size_t i = start; i + need <= pool.size(); ++i) {
            chosen.push_back(i);
            self(self, i + 1, f.add(s, pool[i]), mode == SumMode::Sum ? t : f.add(t, inverse[i]));
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, 0, 0);

    rep.designated_nonzero = !first_zero && !last_zero;
    rep.mds_eligible = rep.zero_count == 0;
    rep.nmds_eligible = rep.designated_nonzero && rep.zero_count > 0;
    return rep;
}

Quotient build_quotient(const XYSpec& spec) {
    const Field& f = spec.field();
    const auto v1 = gvand(GVandSpec::from_discontinuities(f, spec.x(), spec.gaps()));
    const auto v2 = gvand(GVandSpec::from_discontinuities(f, spec.y(), spec.gaps()));
    if (det(v1).is_zero()) raise(ErrorKind::SingularFactor, "V1 is singular");
    if (det(v2).is_zero()) raise(ErrorKind::SingularFactor, "V2 is singular");
    return {mat_inv(v1) * v2, mat_inv(v2) * v1};
}

namespace {

Construction assemble(const XYSpec& spec, ConditionReport conditions) {
    Quotient qt = build_quotient(spec);
    return {std::move(qt.forward), std::move(qt.backward), std::move(conditions), false};
}

void require_mutual_inverse(const Construction& c) {
    const auto id = FieldMatrix::identity(c.matrix.field(), c.matrix.rows());
    if (!(c.matrix * c.inverse_direction == id))
        raise(ErrorKind::SelfCheckFailed, "V1^-1 V2 and V2^-1 V1 are not mutual inverses");
}

}  // namespace

Construction construct_mds(const XYSpec& spec, bool verify, const Caps& caps) {
    auto cond = check_subset_sums(spec.field(), spec.pool(), mode_for(spec.disc()));
    if (!cond.mds_eligible)
        raise(ErrorKind::ConditionViolated,
              "subset condition vanishes on " + std::to_string(cond.zero_count) + " subsets", *cond.witness);
    Construction c = assemble(spec, std::move(cond));
    if (verify) {
        require_mutual_inverse(c);
        const MdsCheck check = is_mds_matrix(c.matrix, caps);
        if (!check.is_mds) raise(ErrorKind::SelfCheckFailed, "conditions held but the result is not MDS", check.witness);
        c.verified = true;
    }
    return c;
}

Construction construct_nmds(const XYSpec& spec, bool verify, const Caps& caps) {
    if (spec.disc() == Disc::FirstAndLast)
        raise(ErrorKind::InvalidArgument, "no NMDS construction for I = {1, n}");
    auto cond = check_subset_sums(spec.field(), spec.pool(), mode_for(spec.disc()));
    const std::size_t n = spec.n();
    if (!cond.designated_nonzero) {
        std::vector<std::size_t> designated(n);
        const bool first = cond.witness && cond.witness->front() == 0 && cond.witness->back() == n - 1;
        for (std::size_t i = 0; i < n; ++i) designated[i] = first ? i : n + i;
        raise(ErrorKind::ConditionViolated, "a designated subset has a zero condition value", designated);
    }
    if (cond.zero_count == 0)
        raise(ErrorKind::ConditionViolated, "no subset has a zero condition value; the pool is MDS-eligible");
    Construction c = assemble(spec, std::move(cond));
    if (verify) {
        require_mutual_inverse(c);
        const ThreeClauseCheck check = is_nmds_matrix(c.matrix, caps);
        if (!check.holds()) {
            const auto& w = !check.clause_i ? check.witness_i : check.witness_iii;
            raise(ErrorKind::SelfCheckFailed, "conditions held but the result is not NMDS", w);
        }
        c.verified = true;
    }
    return c;
}

Construction construct(const XYSpec& spec, Target target, bool verify, const Caps& caps) {
    return target == Target::MDS ? construct_mds(spec, verify, caps) : construct_nmds(spec, verify, caps);
}

InvolutoryConstruction construct_involutory(const Field& f, const std::vector<Rep>& x, Rep l, Target target,
                                            bool verify, const Caps& caps) {
    if (f.characteristic() != 2) raise(ErrorKind::NotCharTwo, "involutory construction needs characteristic 2");
    if (x.size() % 2 != 0) raise(ErrorKind::OddOrder, "involutory construction needs an even order");
    if (l == 0) raise(ErrorKind::InvalidArgument, "shift l must be nonzero");
    std::vector<Rep> y;
    y.reserve(x.size());
    for (auto v : x) y.push_back(f.add(l, v));
    const XYSpec spec(f, x, y, Disc::Top);
    Construction base = construct(spec, target, verify, caps);

    const bool involutory = is_involutory(base.matrix);
    const auto v1 = gvand(GVandSpec::from_discontinuities(f, spec.x(), spec.gaps()));
    const auto v2 = gvand(GVandSpec::from_discontinuities(f, spec.y(), spec.gaps()));
    const bool lower = is_lower_triangular(v2 * mat_inv(v1));
    if (!involutory) raise(ErrorKind::SelfCheckFailed, "result is not involutory");
    if (!lower) raise(ErrorKind::SelfCheckFailed, "V2 V1^-1 is not lower triangular");
    return {std::move(base), std::move(y), involutory, lower};
}

}  // namespace nmds

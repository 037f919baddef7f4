#include "nmds/vandermonde.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace nmds {

namespace {

std::vector<std::uint32_t> parse_index_set(std::string_view s) {
    std::vector<std::uint32_t> out;
    std::size_t start = 0;
    auto is_blank = [](std::string_view t) {
        return std::all_of(t.begin(), t.end(), [](char c) { return c == ' ' || c == '\t'; });
    };
    if (is_blank(s)) return out;
    while (true) {
        const auto comma = s.find(',', start);
        auto tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            raise(ErrorKind::ParseError, "bad index set '" + std::string(s) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

GVandSpec::GVandSpec(Field field, std::vector<Rep> x, std::vector<std::uint32_t> exponents)
    : field_(std::move(field)), x_(std::move(x)), exponents_(std::move(exponents)) {
    if (x_.empty()) raise(ErrorKind::InvalidArgument, "generalized Vandermonde needs n >= 1");
    if (exponents_.size() != x_.size()) raise(ErrorKind::DimensionMismatch, "|T| must equal the number of points");
    for (std::size_t i = 1; i < exponents_.size(); ++i)
        if (exponents_[i] <= exponents_[i - 1]) raise(ErrorKind::InvalidArgument, "exponents must be strictly increasing");
    for (auto v : x_)
        if (!field_.contains(v)) raise(ErrorKind::InvalidArgument, "point out of field range");
    std::size_t k = 0;
    for (std::uint32_t e = 0; e <= exponents_.back(); ++e) {
        if (k < exponents_.size() && exponents_[k] == e)
            ++k;
        else
            gaps_.push_back(e);
    }
}

GVandSpec GVandSpec::from_exponents(Field field, std::vector<Rep> x, std::vector<std::uint32_t> exponents) {
    return GVandSpec(std::move(field), std::move(x), std::move(exponents));
}

GVandSpec GVandSpec::from_discontinuities(Field field, std::vector<Rep> x, std::vector<std::uint32_t> gaps) {
    std::sort(gaps.begin(), gaps.end());
    if (std::adjacent_find(gaps.begin(), gaps.end()) != gaps.end())
        raise(ErrorKind::InvalidArgument, "discontinuity set has repeated entries");
    const std::size_t n = x.size();
    const std::size_t top = n + gaps.size() - 1;
    if (!gaps.empty() && gaps.back() >= top)
        raise(ErrorKind::InvalidArgument, "discontinuity " + std::to_string(gaps.back()) +
                                              " must be below the top exponent " + std::to_string(top));
    std::vector<std::uint32_t> exps;
    std::size_t g = 0;
    for (std::uint32_t e = 0; e <= top; ++e) {
        if (g < gaps.size() && gaps[g] == e)
            ++g;
        else
            exps.push_back(e);
    }
    return GVandSpec(std::move(field), std::move(x), std::move(exps));
}

GVandSpec GVandSpec::parse(const Field& field, std::string_view text) {
    const auto xpos = text.find("x=[");
    const auto xend = text.find(']', xpos == std::string_view::npos ? 0 : xpos);
    const auto ipos = text.find("I={");
    const auto iend = text.find('}', ipos == std::string_view::npos ? 0 : ipos);
    if (xpos == std::string_view::npos || xend == std::string_view::npos || ipos == std::string_view::npos ||
        iend == std::string_view::npos)
        raise(ErrorKind::ParseError, "expected 'x=[...]; I={...}'");
    auto x = parse_rep_list(field, text.substr(xpos + 3, xend - xpos - 3));
    auto gaps = parse_index_set(text.substr(ipos + 3, iend - ipos - 3));
    return from_discontinuities(field, std::move(x), std::move(gaps));
}

std::string GVandSpec::to_string() const {
    std::ostringstream os;
    os << "x=[";
    for (std::size_t i = 0; i < x_.size(); ++i) os << (i ? "," : "") << field_.format_rep(x_[i]);
    os << "]; I={";
    for (std::size_t i = 0; i < gaps_.size(); ++i) os << (i ? "," : "") << gaps_[i];
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------

FieldMatrix vand(const Field& field, std::span<const Rep> x) {
    std::vector<std::uint32_t> exps(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) exps[i] = static_cast<std::uint32_t>(i);
    return gvand(GVandSpec::from_exponents(field, {x.begin(), x.end()}, std::move(exps)));
}

FieldMatrix gvand(const GVandSpec& spec) {
    const Field& f = spec.field();
    const std::size_t n = spec.size();
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.pow(spec.x()[j], spec.exponents()[i]));
    return m;
}

std::vector<Rep> sigma_all(const Field& field, std::span<const Rep> x) {
    // sigma_d(x ∪ {y}) = sigma_d(x) + y * sigma_{d-1}(x)
    std::vector<Rep> s(x.size() + 1, 0);
    s[0] = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t d = i + 1; d >= 1; --d) s[d] = field.add(s[d], field.mul(x[i], s[d - 1]));
    return s;
}

Rep sigma(const Field& field, int d, std::span<const Rep> x) {
    if (d < 0 || static_cast<std::size_t>(d) > x.size())
        raise(ErrorKind::DegreeOutOfRange, "sigma degree " + std::to_string(d) + " outside [0, n]");
    std::vector<Rep> s(static_cast<std::size_t>(d) + 1, 0);
    s[0] = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = std::min<std::size_t>(i + 1, d); k >= 1; --k) s[k] = field.add(s[k], field.mul(x[i], s[k - 1]));
    return s[static_cast<std::size_t>(d)];
}

Rep vandermonde_product(const Field& field, std::span<const Rep> x) {
    Rep acc = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) acc = field.mul(acc, field.sub(x[j], x[i]));
    return acc;
}

Rep det_gvand_general(const GVandSpec& spec) {
    const Field& f = spec.field();
    const auto& x = spec.x();
    const Rep vp = vandermonde_product(f, x);
    if (vp == 0) return 0;
    const auto& gaps = spec.discontinuities();
    const std::size_t s = gaps.size();
    if (s == 0) return vp;
    const std::size_t n = x.size();
    const auto sig = sigma_all(f, x);
    auto sigma_at = [&](long d) -> Rep { return (d < 0 || d > static_cast<long>(n)) ? 0 : sig[static_cast<std::size_t>(d)]; };
    FieldMatrix S(f, s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            S.set(i, j, sigma_at(static_cast<long>(n) - static_cast<long>(gaps[i]) + static_cast<long>(j)));
    return f.mul(vp, det(S).value());
}

GVandDeterminant det_gvand_formula(const GVandSpec& spec) {
    const Field& f = spec.field();
    const auto& x = spec.x();
    const std::size_t n = x.size();
    const auto& gaps = spec.discontinuities();
    const Rep vp = vandermonde_product(f, x);

    auto route_for = [&]() {
        if (gaps.empty()) return GVandFormula::Plain;
        if (gaps.size() == 1 && gaps[0] == n - 1) return GVandFormula::SumCorollary;
        if (gaps.size() == 1 && gaps[0] == 1) return GVandFormula::InverseSumCorollary;
        if (n >= 2 && gaps.size() == 2 && gaps[0] == 1 && gaps[1] == n) return GVandFormula::TwoGapCorollary;
        return GVandFormula::General;
    };
    const GVandFormula route = route_for();
    if (vp == 0) return {0, route};

    auto sum = [&] {
        Rep acc = 0;
        for (auto v : x) acc = f.add(acc, v);
        return acc;
    };
    auto product = [&] {
        Rep acc = 1;
        for (auto v : x) acc = f.mul(acc, v);
        return acc;
    };
    auto inverse_sum = [&] {
        Rep acc = 0;
        for (auto v : x) {
            if (v == 0) raise(ErrorKind::DivisionByZero, "closed form needs every x_i nonzero");
            acc = f.add(acc, f.inv(v));
        }
        return acc;
    };

    switch (route) {
        case GVandFormula::Plain: return {vp, route};
        case GVandFormula::SumCorollary: return {f.mul(vp, sum()), route};
        case GVandFormula::InverseSumCorollary: {
            const Rep is = inverse_sum();
            return {f.mul(f.mul(product(), vp), is), route};
        }
        case GVandFormula::TwoGapCorollary: {
            const Rep factor = f.sub(f.mul(sum(), inverse_sum()), 1);
            return {f.mul(f.mul(vp, product()), factor), route};
        }
        case GVandFormula::General: return {det_gvand_general(spec), route};
    }
    return {det_gvand_general(spec), GVandFormula::General};
}

}  // namespace nmds

#include "nmds/codes.hpp"

#include <algorithm>

#include "nmds/subsets.hpp"

namespace nmds {

namespace {

void require_length_cap(std::size_t n, const Caps& caps) {
    if (n > caps.max_length)
        raise(ErrorKind::TooLarge,
              "code length " + std::to_string(n) + " exceeds the subset-search cap " + std::to_string(caps.max_length));
}

void require_square_within(const FieldMatrix& a, const Caps& caps) {
    if (!a.is_square()) raise(ErrorKind::NotSquare, "matrix classification needs a square matrix");
    if (a.rows() > caps.max_order)
        raise(ErrorKind::TooLarge,
              "order " + std::to_string(a.rows()) + " exceeds the classification cap " + std::to_string(caps.max_order));
}

std::vector<std::size_t> iota_set(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------

LinearCode::LinearCode(FieldMatrix generator) : g_(std::move(generator)) {
    if (g_.rows() > g_.cols()) raise(ErrorKind::InvalidArgument, "generator has more rows than columns");
    if (rank(g_) != g_.rows()) raise(ErrorKind::InvalidArgument, "generator rows are linearly dependent");
}

bool LinearCode::is_standard_form() const {
    for (std::size_t i = 0; i < g_.rows(); ++i)
        for (std::size_t j = 0; j < g_.rows(); ++j)
            if (g_(i, j) != (i == j ? 1U : 0U)) return false;
    return true;
}

LinearCode standard_generator(const FieldMatrix& a) {
    if (!a.is_square()) raise(ErrorKind::NotSquare, "standard generator needs a square matrix");
    return LinearCode(FieldMatrix::identity(a.field(), a.rows()).hconcat(a));
}

FieldMatrix parity_check(const LinearCode& code) {
    if (!code.is_standard_form()) raise(ErrorKind::NotStandardForm, "generator is not of the form [I | A]");
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (k == n) raise(ErrorKind::InvalidArgument, "an [n, n] code has no parity checks");
    const Field& f = code.field();
    FieldMatrix h(f, n - k, n);
    for (std::size_t i = 0; i < n - k; ++i) {
        for (std::size_t j = 0; j < k; ++j) h.set(i, j, f.neg(code.generator()(j, k + i)));
        h.set(i, k + i, 1);
    }
    return h;
}

FieldMatrix parity_check_any(const LinearCode& code) {
    if (code.dimension() == code.length()) raise(ErrorKind::InvalidArgument, "an [n, n] code has no parity checks");
    if (code.is_standard_form()) return parity_check(code);
    return *null_space(code.generator());
}

LinearCode dual_code(const LinearCode& code) { return LinearCode(parity_check_any(code)); }

// ---------------------------------------------------------------------------

Distance min_distance_by_enumeration(const LinearCode& code, const Caps& caps) {
    const Field& f = code.field();
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    const std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > caps.max_codewords)
            raise(ErrorKind::TooLarge, "q^k exceeds the codeword-enumeration cap " + std::to_string(caps.max_codewords));
    }
    const FieldMatrix& g = code.generator();
    std::vector<Rep> msg(k, 0);
    std::vector<Rep> word(n, 0);
    Distance best{n + 1, {}};
    // Odometer over messages; each digit change updates the codeword in O(n).
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t i = 0;
        while (true) {
            const Rep old = msg[i];
            const Rep next = static_cast<Rep>((old + 1) % q);
            const Rep delta = f.sub(next, old);
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, g(i, j)));
            msg[i] = next;
            if (next != 0) break;
            ++i;
        }
        const auto w = static_cast<std::size_t>(n - static_cast<std::size_t>(std::count(word.begin(), word.end(), Rep{0})));
        if (w < best.d) best = {w, word};
    }
    return best;
}

Distance min_distance_by_columns(const LinearCode& code, const Caps& caps) {
    const std::size_t n = code.length();
    require_length_cap(n, caps);
    if (code.dimension() == n) {
        std::vector<Rep> e(n, 0);
        e[0] = 1;
        return {1, e};
    }
    const FieldMatrix h = parity_check_any(code);
    for (std::size_t d = 1; d <= n; ++d) {
        std::vector<std::size_t> found;
        for_each_subset(n, d, [&](const std::vector<std::size_t>& cols) {
            if (column_rank(h, cols) < d) {
                found = cols;
                return false;
            }
            return true;
        });
        if (found.empty()) continue;
        const auto kernel = null_space(h.columns(found));
        std::vector<Rep> word(n, 0);
        for (std::size_t j = 0; j < found.size(); ++j) word[found[j]] = (*kernel)(0, j);
        return {d, word};
    }
    raise(ErrorKind::SelfCheckFailed, "no dependent column set found");
}

Distance min_distance(const LinearCode& code, const Caps& caps) {
    bool enumerable = true;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.dimension() && enumerable; ++i) {
        total *= code.field().order();
        enumerable = total <= caps.max_codewords;
    }
    if (!enumerable) return min_distance_by_columns(code, caps);
    const Distance enumerated = min_distance_by_enumeration(code, caps);
    if (code.length() <= caps.max_length) {
        const Distance by_columns = min_distance_by_columns(code, caps);
        if (by_columns.d != enumerated.d)
            raise(ErrorKind::SelfCheckFailed, "minimum-distance routes disagree: enumeration " +
                                                  std::to_string(enumerated.d) + ", columns " +
                                                  std::to_string(by_columns.d));
    }
    return enumerated;
}

// ---------------------------------------------------------------------------

Ghw ghw(const LinearCode& code, std::size_t r, const Caps& caps) {
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (r < 1 || r > k) raise(ErrorKind::RankOutOfRange, "r must satisfy 1 <= r <= k");
    require_length_cap(n, caps);
    if (k == n) {
        std::vector<std::size_t> cols = iota_set(r);
        return {r, cols};
    }
    const FieldMatrix h = parity_check_any(code);
    for (std::size_t size = r; size <= n; ++size) {
        Ghw hit;
        for_each_subset(n, size, [&](const std::vector<std::size_t>& cols) {
            if (size - column_rank(h, cols) >= r) {
                hit = {size, cols};
                return false;
            }
            return true;
        });
        if (hit.weight) return hit;
    }
    raise(ErrorKind::SelfCheckFailed, "generalized Hamming weight search exhausted");
}

bool ghw_rank_condition(const FieldMatrix& parity, std::size_t r, std::size_t delta) {
    const std::size_t n = parity.cols();
    if (delta == 0 || delta > n || r > delta) return false;
    const long floor_rank = static_cast<long>(delta) - static_cast<long>(r);
    const bool all_high = for_each_subset(n, delta - 1, [&](const std::vector<std::size_t>& cols) {
        return static_cast<long>(column_rank(parity, cols)) >= floor_rank;
    });
    if (!all_high) return false;
    const bool none_exact = for_each_subset(n, delta, [&](const std::vector<std::size_t>& cols) {
        return static_cast<long>(column_rank(parity, cols)) != floor_rank;
    });
    return !none_exact;
}

std::vector<std::size_t> ghw_profile(const LinearCode& code, const Caps& caps) {
    std::vector<std::size_t> out;
    for (std::size_t r = 1; r <= code.dimension(); ++r) out.push_back(ghw(code, r, caps).weight);
    return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::MDS: return "MDS";
        case Verdict::NMDS: return "NMDS";
        case Verdict::AMDS_only: return "AMDS_only";
        case Verdict::OTHER: return "OTHER";
    }
    return "OTHER";
}

std::string_view to_string(MatrixClass c) noexcept {
    switch (c) {
        case MatrixClass::MDS: return "MDS";
        case MatrixClass::NMDS: return "NMDS";
        case MatrixClass::Neither: return "neither";
    }
    return "neither";
}

CodeReport classify(const LinearCode& code, const Caps& caps, bool with_profile) {
    CodeReport rep;
    rep.n = code.length();
    rep.k = code.dimension();
    const Ghw first = ghw(code, 1, caps);
    rep.d1 = first.weight;
    rep.witnesses.push_back({"d1", first.columns});
    if (rep.k >= 2) {
        const Ghw second = ghw(code, 2, caps);
        rep.d2 = second.weight;
        rep.witnesses.push_back({"d2", second.columns});
    }
    if (with_profile) rep.dr_profile = ghw_profile(code, caps);

    const std::size_t redundancy = rep.n - rep.k;
    if (rep.d1 == redundancy + 1) {
        rep.verdict = Verdict::MDS;
    } else if (rep.d1 == redundancy) {
        const bool second_ok = !rep.d2 || *rep.d2 == redundancy + 2;
        rep.verdict = second_ok ? Verdict::NMDS : Verdict::AMDS_only;
    } else {
        rep.verdict = Verdict::OTHER;
    }
    return rep;
}

ThreeClauseCheck three_clause_check(const FieldMatrix& m, const Caps& caps) {
    const std::size_t rows = m.rows();
    const std::size_t n = m.cols();
    require_length_cap(n, caps);
    if (rank(m) != rows) raise(ErrorKind::InvalidArgument, "three-clause check needs a full-row-rank matrix");
    ThreeClauseCheck out;
    out.clause_i = rows == 0 || for_each_subset(n, rows - 1, [&](const std::vector<std::size_t>& cols) {
                       if (column_rank(m, cols) == cols.size()) return true;
                       out.witness_i = cols;
                       return false;
                   });
    out.clause_ii = !for_each_subset(n, rows, [&](const std::vector<std::size_t>& cols) {
        if (column_rank(m, cols) == cols.size()) return true;
        out.witness_ii = cols;
        return false;
    });
    out.clause_iii = for_each_subset(n, rows + 1, [&](const std::vector<std::size_t>& cols) {
        if (column_rank(m, cols) == rows) return true;
        out.witness_iii = cols;
        return false;
    });
    return out;
}

MdsCheck is_mds_matrix(const FieldMatrix& a, const Caps& caps) {
    require_square_within(a, caps);
    const FieldMatrix g = FieldMatrix::identity(a.field(), a.rows()).hconcat(a);
    MdsCheck out;
    out.is_mds = for_each_subset(g.cols(), a.rows(), [&](const std::vector<std::size_t>& cols) {
        if (column_rank(g, cols) == cols.size()) return true;
        out.witness = cols;
        return false;
    });
    return out;
}

ThreeClauseCheck is_nmds_matrix(const FieldMatrix& a, const Caps& caps) {
    require_square_within(a, caps);
    return three_clause_check(FieldMatrix::identity(a.field(), a.rows()).hconcat(a), caps);
}

ThreeClauseCheck is_nmds_matrix_parity(const FieldMatrix& a, const Caps& caps) {
    require_square_within(a, caps);
    return three_clause_check(parity_check(standard_generator(a)), caps);
}

MatrixClass classify_matrix(const FieldMatrix& a, const Caps& caps) {
    if (is_mds_matrix(a, caps).is_mds) return MatrixClass::MDS;
    if (is_nmds_matrix(a, caps).holds()) return MatrixClass::NMDS;
    return MatrixClass::Neither;
}

bool dual_transpose_check(const FieldMatrix& a, const Caps& caps) {
    require_square_within(a, caps);
    // [I | A^T] is equivalent to the dual of [I | A]; only MDS and NMDS are
    // preserved under duality, so weaker verdicts are compared as "neither".
    auto matrix_class = [](Verdict v) {
        return v == Verdict::MDS ? MatrixClass::MDS : v == Verdict::NMDS ? MatrixClass::NMDS : MatrixClass::Neither;
    };
    const CodeReport lhs = classify(standard_generator(a), caps);
    const CodeReport rhs = classify(standard_generator(a.transpose()), caps);
    if (matrix_class(lhs.verdict) != matrix_class(rhs.verdict)) return false;
    return matrix_class(lhs.verdict) == MatrixClass::Neither || (lhs.d1 == rhs.d1 && lhs.d2 == rhs.d2);
}

}  // namespace nmds

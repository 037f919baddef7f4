#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmds/gf.hpp"

namespace nmds {

/// Dense row-major matrix over a Field. Immutable apart from `set`.
class FieldMatrix {
public:
    FieldMatrix(Field field, std::size_t rows, std::size_t cols);
    FieldMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Rep> data);
    /// Rows given as nested lists of representatives.
    FieldMatrix(Field field, const std::vector<std::vector<Rep>>& rows);

    static FieldMatrix identity(const Field& field, std::size_t n);
    static FieldMatrix diagonal(const Field& field, std::span<const Rep> entries);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rep operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Rep at(std::size_t i, std::size_t j) const;
    FieldElement element(std::size_t i, std::size_t j) const { return FieldElement(field_, at(i, j)); }
    void set(std::size_t i, std::size_t j, Rep value);
    const std::vector<Rep>& data() const noexcept { return data_; }

    bool has_zero_entry() const noexcept;

    FieldMatrix transpose() const;
    FieldMatrix scaled(Rep c) const;
    /// Horizontal concatenation [*this | right].
    FieldMatrix hconcat(const FieldMatrix& right) const;
    /// Keeps the listed columns in the given order.
    FieldMatrix columns(std::span<const std::size_t> cols) const;

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rep> data_;
};

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_pow(const FieldMatrix& a, std::uint64_t e);

FieldElement det(const FieldMatrix& a);
std::size_t rank(const FieldMatrix& a);
/// Rank of the submatrix formed by the given columns.
std::size_t column_rank(const FieldMatrix& a, std::span<const std::size_t> cols);
/// Throws Singular when det(a) == 0.
FieldMatrix mat_inv(const FieldMatrix& a);
/// Basis of {v : a v = 0} as the rows of the returned matrix (nullopt when trivial).
std::optional<FieldMatrix> null_space(const FieldMatrix& a);
/// Row-reduced echelon form together with its pivot columns.
struct EchelonForm {
    FieldMatrix reduced;
    std::vector<std::size_t> pivots;
};
EchelonForm rref(const FieldMatrix& a);

/// Index sets must be strictly increasing and in range (IndexOutOfRange otherwise).
FieldMatrix submatrix(const FieldMatrix& a, std::span<const std::size_t> rowset, std::span<const std::size_t> colset);

bool is_involutory(const FieldMatrix& a);
bool is_lower_triangular(const FieldMatrix& a);

struct Minor {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

struct MinorScan {
    bool all_nonsingular = true;
    /// First singular minor: smallest order, then lexicographic rowset, then colset.
    std::optional<Minor> witness;
    /// Census mode only: singular minors counted per order (index t-1 for order t).
    std::vector<std::uint64_t> singular_per_order;
};

inline constexpr std::size_t kDefaultMinorCap = 8;

/// Every t x t minor (1 <= t <= n) of a square matrix is tested. Orders above
/// `cap` throw OrderTooLarge; raise the cap explicitly to go beyond.
MinorScan all_square_submatrices_nonsingular(const FieldMatrix& a, std::size_t cap = kDefaultMinorCap,
                                             bool census = false);

/// Text form: one row per line, whitespace-separated elements.
FieldMatrix parse_matrix_text(const Field& field, std::string_view text);
std::string format_matrix_text(const FieldMatrix& a, Notation notation = Notation::Power);

}  // namespace nmds

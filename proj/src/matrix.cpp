#include "nmds/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "nmds/subsets.hpp"

namespace nmds {

namespace {

void require_same_field(const FieldMatrix& a, const FieldMatrix& b) {
    if (!(a.field() == b.field())) raise(ErrorKind::FieldMismatch, "matrices belong to different fields");
}

// In-place elimination on a row-major scratch buffer. Returns the rank and,
// when requested, the determinant of the leading square part.
struct Eliminator {
    const Field& f;
    std::size_t rows;
    std::size_t cols;
    std::vector<Rep>& m;

    Rep& at(std::size_t i, std::size_t j) { return m[i * cols + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }

    // Forward elimination; reduced == true clears above pivots and normalises.
    std::vector<std::size_t> run(bool reduced, bool* odd_swaps = nullptr) {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        bool odd = false;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t piv = r;
            while (piv < rows && at(piv, c) == 0) ++piv;
            if (piv == rows) continue;
            if (piv != r) {
                swap_rows(piv, r);
                odd = !odd;
            }
            const Rep pinv = f.inv(at(r, c));
            if (reduced) {
                for (std::size_t j = c; j < cols; ++j) at(r, j) = f.mul(at(r, j), pinv);
            }
            for (std::size_t i = reduced ? 0 : r + 1; i < rows; ++i) {
                if (i == r || at(i, c) == 0) continue;
                const Rep factor = reduced ? at(i, c) : f.mul(at(i, c), pinv);
                for (std::size_t j = c; j < cols; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        if (odd_swaps) *odd_swaps = odd;
        return pivots;
    }
};

Rep det_scratch(const Field& f, std::size_t n, std::vector<Rep>& m) {
    Eliminator e{f, n, n, m};
    bool odd = false;
    const auto pivots = e.run(false, &odd);
    if (pivots.size() < n) return 0;
    Rep d = 1;
    for (std::size_t i = 0; i < n; ++i) d = f.mul(d, m[i * n + i]);
    return odd ? f.neg(d) : d;
}

void check_index_set(std::span<const std::size_t> set, std::size_t bound, const char* what) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] >= bound) raise(ErrorKind::IndexOutOfRange, std::string(what) + " index out of range");
        if (i > 0 && set[i] <= set[i - 1])
            raise(ErrorKind::IndexOutOfRange, std::string(what) + " indices must be strictly increasing");
    }
}

}  // namespace

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : FieldMatrix(std::move(field), rows, cols, std::vector<Rep>(rows * cols, 0)) {}

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Rep> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows_ == 0 || cols_ == 0) raise(ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
    if (data_.size() != rows_ * cols_) raise(ErrorKind::DimensionMismatch, "matrix data size mismatch");
    for (auto v : data_)
        if (!field_.contains(v)) raise(ErrorKind::InvalidArgument, "matrix entry out of field range");
}

FieldMatrix::FieldMatrix(Field field, const std::vector<std::vector<Rep>>& rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
    if (rows_ == 0 || cols_ == 0) raise(ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) raise(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (auto v : row) {
            if (!field_.contains(v)) raise(ErrorKind::InvalidArgument, "matrix entry out of field range");
            data_.push_back(v);
        }
    }
}

FieldMatrix FieldMatrix::identity(const Field& field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

FieldMatrix FieldMatrix::diagonal(const Field& field, std::span<const Rep> entries) {
    FieldMatrix m(field, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return m;
}

Rep FieldMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) raise(ErrorKind::IndexOutOfRange, "matrix index out of range");
    return data_[i * cols_ + j];
}

void FieldMatrix::set(std::size_t i, std::size_t j, Rep value) {
    if (i >= rows_ || j >= cols_) raise(ErrorKind::IndexOutOfRange, "matrix index out of range");
    if (!field_.contains(value)) raise(ErrorKind::InvalidArgument, "matrix entry out of field range");
    data_[i * cols_ + j] = value;
}

bool FieldMatrix::has_zero_entry() const noexcept {
    return std::find(data_.begin(), data_.end(), Rep{0}) != data_.end();
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

FieldMatrix FieldMatrix::scaled(Rep c) const {
    FieldMatrix out = *this;
    for (auto& v : out.data_) v = field_.mul(v, c);
    return out;
}

FieldMatrix FieldMatrix::hconcat(const FieldMatrix& right) const {
    require_same_field(*this, right);
    if (rows_ != right.rows_) raise(ErrorKind::DimensionMismatch, "hconcat needs equal row counts");
    FieldMatrix out(field_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.data_[i * out.cols_ + j] = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out.data_[i * out.cols_ + cols_ + j] = right(i, j);
    }
    return out;
}

FieldMatrix FieldMatrix::columns(std::span<const std::size_t> cols) const {
    if (cols.empty()) raise(ErrorKind::DimensionMismatch, "empty column selection");
    FieldMatrix out(field_, rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) raise(ErrorKind::IndexOutOfRange, "column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out.data_[i * cols.size() + j] = (*this)(i, cols[j]);
    }
    return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
}

// ---------------------------------------------------------------------------

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) raise(ErrorKind::DimensionMismatch, "inner dimensions differ");
    const Field& f = a.field();
    std::vector<Rep> out(a.rows() * b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rep aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out[i * b.cols() + j] = f.add(out[i * b.cols() + j], f.mul(aik, b(k, j)));
        }
    return FieldMatrix(f, a.rows(), b.cols(), std::move(out));
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) { return mat_mul(a, b); }

FieldMatrix mat_pow(const FieldMatrix& a, std::uint64_t e) {
    if (!a.is_square()) raise(ErrorKind::NotSquare, "matrix power needs a square matrix");
    FieldMatrix result = FieldMatrix::identity(a.field(), a.rows());
    FieldMatrix base = a;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

FieldElement det(const FieldMatrix& a) {
    if (!a.is_square()) raise(ErrorKind::NotSquare, "determinant needs a square matrix");
    std::vector<Rep> scratch = a.data();
    return FieldElement(a.field(), det_scratch(a.field(), a.rows(), scratch));
}

std::size_t rank(const FieldMatrix& a) {
    std::vector<Rep> scratch = a.data();
    Eliminator e{a.field(), a.rows(), a.cols(), scratch};
    return e.run(false).size();
}

std::size_t column_rank(const FieldMatrix& a, std::span<const std::size_t> cols) {
    if (cols.empty()) return 0;
    std::vector<Rep> scratch(a.rows() * cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) scratch[i * cols.size() + j] = a(i, cols[j]);
    Eliminator e{a.field(), a.rows(), cols.size(), scratch};
    return e.run(false).size();
}

EchelonForm rref(const FieldMatrix& a) {
    std::vector<Rep> scratch = a.data();
    Eliminator e{a.field(), a.rows(), a.cols(), scratch};
    auto pivots = e.run(true);
    return {FieldMatrix(a.field(), a.rows(), a.cols(), std::move(scratch)), std::move(pivots)};
}

FieldMatrix mat_inv(const FieldMatrix& a) {
    if (!a.is_square()) raise(ErrorKind::NotSquare, "inverse needs a square matrix");
    const std::size_t n = a.rows();
    const auto aug = rref(a.hconcat(FieldMatrix::identity(a.field(), n)));
    if (aug.pivots.size() < n || aug.pivots[n - 1] != n - 1) raise(ErrorKind::Singular, "matrix is singular");
    FieldMatrix out(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, aug.reduced(i, n + j));
    return out;
}

std::optional<FieldMatrix> null_space(const FieldMatrix& a) {
    const auto ech = rref(a);
    const Field& f = a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    if (free_cols.empty()) return std::nullopt;
    FieldMatrix basis(f, free_cols.size(), a.cols());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        basis.set(b, free_cols[b], 1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            basis.set(b, ech.pivots[r], f.neg(ech.reduced(r, free_cols[b])));
    }
    return basis;
}

FieldMatrix submatrix(const FieldMatrix& a, std::span<const std::size_t> rowset, std::span<const std::size_t> colset) {
    if (rowset.empty() || colset.empty()) raise(ErrorKind::IndexOutOfRange, "empty index set");
    check_index_set(rowset, a.rows(), "row");
    check_index_set(colset, a.cols(), "column");
    FieldMatrix out(a.field(), rowset.size(), colset.size());
    for (std::size_t i = 0; i < rowset.size(); ++i)
        for (std::size_t j = 0; j < colset.size(); ++j) out.set(i, j, a(rowset[i], colset[j]));
    return out;
}

bool is_involutory(const FieldMatrix& a) {
    if (!a.is_square()) raise(ErrorKind::NotSquare, "involution test needs a square matrix");
    return a * a == FieldMatrix::identity(a.field(), a.rows());
}

bool is_lower_triangular(const FieldMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != 0) return false;
    return true;
}

MinorScan all_square_submatrices_nonsingular(const FieldMatrix& a, std::size_t cap, bool census) {
    if (!a.is_square()) raise(ErrorKind::NotSquare, "minor scan needs a square matrix");
    const std::size_t n = a.rows();
    if (n > cap)
        raise(ErrorKind::OrderTooLarge,
              "order " + std::to_string(n) + " exceeds the minor-enumeration cap " + std::to_string(cap));
    const Field& f = a.field();
    MinorScan scan;
    if (census) scan.singular_per_order.assign(n, 0);
    std::vector<Rep> scratch;
    for (std::size_t t = 1; t <= n; ++t) {
        const bool finished = for_each_subset(n, t, [&](const std::vector<std::size_t>& rs) {
            return for_each_subset(n, t, [&](const std::vector<std::size_t>& cs) {
                scratch.resize(t * t);
                for (std::size_t i = 0; i < t; ++i)
                    for (std::size_t j = 0; j < t; ++j) scratch[i * t + j] = a(rs[i], cs[j]);
                if (det_scratch(f, t, scratch) != 0) return true;
                if (!scan.witness) scan.witness = Minor{rs, cs};
                scan.all_nonsingular = false;
                if (census) {
                    ++scan.singular_per_order[t - 1];
                    return true;
                }
                return false;
            });
        });
        if (!finished) break;
    }
    return scan;
}

// ---------------------------------------------------------------------------

FieldMatrix parse_matrix_text(const Field& field, std::string_view text) {
    std::vector<std::vector<Rep>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<Rep> row;
        std::string tok;
        while (ls >> tok) row.push_back(field.parse_rep(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) raise(ErrorKind::ParseError, "matrix text has no rows");
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) raise(ErrorKind::ParseError, "matrix rows have different lengths");
    return FieldMatrix(field, rows);
}

std::string format_matrix_text(const FieldMatrix& a, Notation notation) {
    std::vector<std::string> cells(a.rows() * a.cols());
    std::size_t width = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            cells[i * a.cols() + j] = a.field().format_rep(a(i, j), notation);
            width = std::max(width, cells[i * a.cols() + j].size());
        }
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& c = cells[i * a.cols() + j];
            out += c;
            if (j + 1 < a.cols()) out.append(width - c.size() + 1, ' ');
        }
        out += '\n';
    }
    return out;
}

}  // namespace nmds

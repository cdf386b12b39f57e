#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace diagsum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct CapacityError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct InternalError : Error {
    using Error::Error;
};

/// Square matrix of Bernoulli success probabilities p[j][r].
/// Immutable after construction: all entries in [0,1], n >= 2, and the total
/// entry sum is positive (the mean of the diagonal sum must be > 0).
class BernoulliMatrix {
public:
    BernoulliMatrix(std::size_t n, std::vector<double> entries);

    std::size_t size() const { return n_; }
    double operator()(std::size_t j, std::size_t r) const {
        return p_[j * n_ + r];
    }
    const std::vector<double>& entries() const { return p_; }

    double entry_sum() const;
    bool is_zero_one() const;

private:
    std::size_t n_;
    std::vector<double> p_;
};

/// Row/column surgery for the leave-out and injection sub-models.
/// `ones_rows` marks active rows whose summand is dropped while the row still
/// occupies a slot of the random bijection.
struct IndexSelection {
    std::vector<std::size_t> active_rows;  // sorted, distinct
    std::vector<std::size_t> active_cols;  // sorted, distinct
    std::vector<std::size_t> ones_rows;    // sorted subset of active_rows

    static IndexSelection full(std::size_t n);
    /// All rows/columns active, `rows` moved to ones_rows.
    static IndexSelection leave_out(std::size_t n, std::vector<std::size_t> rows);
    /// Rows `drop_rows` and columns `drop_cols` removed entirely;
    /// `ones` (disjoint from drop_rows) become ones_rows.
    static IndexSelection injection(std::size_t n, std::vector<std::size_t> drop_rows,
                                    std::vector<std::size_t> drop_cols,
                                    std::vector<std::size_t> ones = {});

    void validate(std::size_t n) const;  // throws ShapeError
    std::size_t size() const { return active_rows.size(); }
    std::size_t degree() const { return active_rows.size() - ones_rows.size(); }
};

/// Effective sub-matrix described by a selection: rows in ones_rows behave as
/// the constant-1 factor downstream (no summand, one matched column).
struct MatrixView {
    const BernoulliMatrix* matrix;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    std::vector<std::uint8_t> row_is_one;  // parallel to rows

    std::size_t size() const { return rows.size(); }
    std::size_t degree() const;
    double p(std::size_t i, std::size_t c) const {
        return (*matrix)(rows[i], cols[c]);
    }
};

MatrixView select(const BernoulliMatrix& m, const IndexSelection& sel);

enum class MatrixFormat { Csv, Json };

BernoulliMatrix load_matrix(const std::string& path, MatrixFormat format);
BernoulliMatrix parse_matrix_csv(const std::string& text);
BernoulliMatrix parse_matrix_json(const std::string& text);
void save_matrix(const BernoulliMatrix& m, const std::string& path, MatrixFormat format);
std::string format_matrix_csv(const BernoulliMatrix& m);
std::string format_matrix_json(const BernoulliMatrix& m);

BernoulliMatrix transpose(const BernoulliMatrix& m);

/// All entries equal to p (p in (0,1]; p = 0 would give mean 0).
BernoulliMatrix gen_constant(std::size_t n, double p);
/// Identity 0/1 matrix.
BernoulliMatrix gen_identity(std::size_t n);
/// Block 0/1 matrix of the matching model: entry (j,r) is 1 iff j and r fall
/// in the same block of the partitions given by a and b (sum a = sum b = n).
BernoulliMatrix gen_matching(const std::vector<std::size_t>& a,
                             const std::vector<std::size_t>& b);
/// i.i.d. uniform [0,1] entries scaled by `scale`; with column_monotone each
/// column is sorted so entries weakly decrease down the column.
BernoulliMatrix gen_random(std::size_t n, std::uint64_t seed,
                           bool column_monotone = false, double scale = 1.0);

}  // namespace diagsum

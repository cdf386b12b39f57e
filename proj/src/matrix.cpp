#include "diagsum/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "diagsum/rng.hpp"
#include "json.hpp"

namespace diagsum {

namespace {

void check_probability_entries(std::size_t n, const std::vector<double>& p) {
    if (n < 2) throw DomainError("matrix size must be at least 2");
    if (p.size() != n * n) throw ShapeError("entry count does not match n*n");
    double sum = 0.0;
    for (double x : p) {
        if (!std::isfinite(x) || x < 0.0 || x > 1.0)
            throw DomainError("matrix entry outside [0,1]");
        sum += x;
    }
    if (sum <= 0.0) throw DomainError("all-zero matrix: mean of the diagonal sum would be 0");
}

}  // namespace

BernoulliMatrix::BernoulliMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), p_(std::move(entries)) {
    check_probability_entries(n_, p_);
}

double BernoulliMatrix::entry_sum() const {
    double s = 0.0;
    for (double x : p_) s += x;
    return s;
}

bool BernoulliMatrix::is_zero_one() const {
    return std::all_of(p_.begin(), p_.end(),
                       [](double x) { return x == 0.0 || x == 1.0; });
}

IndexSelection IndexSelection::full(std::size_t n) {
    IndexSelection sel;
    sel.active_rows.resize(n);
    sel.active_cols.resize(n);
    for (std::size_t i = 0; i < n; ++i) sel.active_rows[i] = sel.active_cols[i] = i;
    return sel;
}

IndexSelection IndexSelection::leave_out(std::size_t n, std::vector<std::size_t> rows) {
    IndexSelection sel = full(n);
    std::sort(rows.begin(), rows.end());
    sel.ones_rows = std::move(rows);
    return sel;
}

IndexSelection IndexSelection::injection(std::size_t n, std::vector<std::size_t> drop_rows,
                                         std::vector<std::size_t> drop_cols,
                                         std::vector<std::size_t> ones) {
    std::sort(drop_rows.begin(), drop_rows.end());
    std::sort(drop_cols.begin(), drop_cols.end());
    IndexSelection sel;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::binary_search(drop_rows.begin(), drop_rows.end(), i))
            sel.active_rows.push_back(i);
        if (!std::binary_search(drop_cols.begin(), drop_cols.end(), i))
            sel.active_cols.push_back(i);
    }
    std::sort(ones.begin(), ones.end());
    sel.ones_rows = std::move(ones);
    return sel;
}

void IndexSelection::validate(std::size_t n) const {
    auto sorted_distinct_in_range = [n](const std::vector<std::size_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] >= n) return false;
            if (i > 0 && v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    if (!sorted_distinct_in_range(active_rows) || !sorted_distinct_in_range(active_cols) ||
        !sorted_distinct_in_range(ones_rows))
        throw ShapeError("selection indices must be sorted, distinct and within range");
    if (active_rows.size() != active_cols.size())
        throw ShapeError("selection must keep equally many rows and columns");
    if (active_rows.empty()) throw ShapeError("selection must keep at least one row");
    for (std::size_t r : ones_rows)
        if (!std::binary_search(active_rows.begin(), active_rows.end(), r))
            throw ShapeError("ones_rows must be a subset of active_rows");
}

std::size_t MatrixView::degree() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!row_is_one[i]) ++d;
    return d;
}

MatrixView select(const BernoulliMatrix& m, const IndexSelection& sel) {
    sel.validate(m.size());
    MatrixView v;
    v.matrix = &m;
    v.rows = sel.active_rows;
    v.cols = sel.active_cols;
    v.row_is_one.resize(v.rows.size(), 0);
    for (std::size_t i = 0; i < v.rows.size(); ++i)
        if (std::binary_search(sel.ones_rows.begin(), sel.ones_rows.end(), v.rows[i]))
            v.row_is_one[i] = 1;
    return v;
}

BernoulliMatrix parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                while (used < cell.size() &&
                       (std::isspace(static_cast<unsigned char>(cell[used])) || cell[used] == '\r'))
                    ++used;
                if (used != cell.size()) throw DomainError("non-numeric CSV cell: " + cell);
                row.push_back(v);
            } catch (const std::invalid_argument&) {
                throw DomainError("non-numeric CSV cell: " + cell);
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ShapeError("empty CSV matrix");
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw ShapeError("CSV matrix is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return BernoulliMatrix(n, std::move(flat));
}

BernoulliMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("p") || !j["p"].is_array()) throw ShapeError("JSON matrix must be {\"p\": [[...]]}");
    const auto& rows = j["p"];
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw ShapeError("JSON matrix is not square");
        for (const auto& cell : row) {
            if (!cell.is_number()) throw DomainError("non-numeric JSON matrix entry");
            flat.push_back(cell.get<double>());
        }
    }
    return BernoulliMatrix(n, std::move(flat));
}

BernoulliMatrix load_matrix(const std::string& path, MatrixFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return format == MatrixFormat::Csv ? parse_matrix_csv(buf.str())
                                       : parse_matrix_json(buf.str());
}

std::string format_matrix_csv(const BernoulliMatrix& m) {
    std::string out;
    char buf[64];
    const std::size_t n = m.size();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
            // %.17g round-trips doubles exactly
            std::snprintf(buf, sizeof buf, "%.17g", m(j, r));
            out += buf;
            out += (r + 1 < n) ? ',' : '\n';
        }
    }
    return out;
}

std::string format_matrix_json(const BernoulliMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    const std::size_t n = m.size();
    for (std::size_t j = 0; j < n; ++j) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t r = 0; r < n; ++r) row.push_back(m(j, r));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"p", rows}}.dump();
}

void save_matrix(const BernoulliMatrix& m, const std::string& path, MatrixFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << (format == MatrixFormat::Csv ? format_matrix_csv(m) : format_matrix_json(m));
}

BernoulliMatrix transpose(const BernoulliMatrix& m) {
    const std::size_t n = m.size();
    std::vector<double> q(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) q[r * n + j] = m(j, r);
    return BernoulliMatrix(n, std::move(q));
}

BernoulliMatrix gen_constant(std::size_t n, double p) {
    if (n < 2) throw DomainError("n must be at least 2");
    if (p <= 0.0 || p > 1.0) throw DomainError("constant entry must be in (0,1]");
    return BernoulliMatrix(n, std::vector<double>(n * n, p));
}

BernoulliMatrix gen_identity(std::size_t n) {
    if (n < 2) throw DomainError("n must be at least 2");
    std::vector<double> p(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) p[i * n + i] = 1.0;
    return BernoulliMatrix(n, std::move(p));
}

BernoulliMatrix gen_matching(const std::vector<std::size_t>& a,
                             const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) throw ShapeError("matching partitions must have equal length");
    std::size_t n = 0, nb = 0;
    for (std::size_t x : a) n += x;
    for (std::size_t x : b) nb += x;
    if (n != nb) throw ShapeError("matching partitions must have equal totals");
    if (n < 2) throw DomainError("matching model needs n >= 2");
    std::vector<double> p(n * n, 0.0);
    std::size_t row0 = 0, col0 = 0;
    for (std::size_t block = 0; block < a.size(); ++block) {
        for (std::size_t j = row0; j < row0 + a[block]; ++j)
            for (std::size_t r = col0; r < col0 + b[block]; ++r) p[j * n + r] = 1.0;
        row0 += a[block];
        col0 += b[block];
    }
    return BernoulliMatrix(n, std::move(p));
}

BernoulliMatrix gen_random(std::size_t n, std::uint64_t seed, bool column_monotone,
                           double scale) {
    if (n < 2) throw DomainError("n must be at least 2");
    if (scale <= 0.0 || scale > 1.0) throw DomainError("scale must be in (0,1]");
    Xoshiro256 rng(seed);
    std::vector<double> p(n * n);
    do {
        double sum = 0.0;
        for (auto& x : p) {
            x = rng.uniform01() * scale;
            sum += x;
        }
        if (sum > 0.0) break;  // all-zero draws are resampled
    } while (true);
    if (column_monotone) {
        std::vector<double> col(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t j = 0; j < n; ++j) col[j] = p[j * n + r];
            std::sort(col.begin(), col.end(), std::greater<>());
            for (std::size_t j = 0; j < n; ++j) p[j * n + r] = col[j];
        }
    }
    return BernoulliMatrix(n, std::move(p));
}

}  // namespace diagsum

#include "shalika/json_io.hpp"

#include <stdexcept>
#include <string>

namespace shalika {

using nlohmann::json;

namespace {

std::int64_t require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string("json: ") + what +
                                    " must be an integer");
    return j.get<std::int64_t>();
}

const json& require_field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw std::invalid_argument(std::string("json: missing field \"") + name +
                                    "\"");
    return j.at(name);
}

// Rows of residues; every entry must already lie in [0, p).
Matrix grid_from_json(PrimeField f, const json& rows, std::size_t nrows,
                      std::size_t ncols, const char* what) {
    if (!rows.is_array() || rows.size() != nrows)
        throw std::invalid_argument(std::string("json: ") + what +
                                    " must be an array of " +
                                    std::to_string(nrows) + " rows");
    Matrix m(f, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != ncols)
            throw std::invalid_argument(std::string("json: ") + what +
                                        " rows must have " +
                                        std::to_string(ncols) + " entries");
        for (std::size_t j = 0; j < ncols; ++j) {
            const std::int64_t v = require_int(row[j], "matrix entry");
            if (v < 0 || v >= static_cast<std::int64_t>(f.modulus()))
                throw std::invalid_argument("json: entry " + std::to_string(v) +
                                            " is not a residue mod " +
                                            std::to_string(f.modulus()));
            m.set(i, j, v);
        }
    }
    return m;
}

json grid_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

json to_json(const Matrix& m) {
    return json{{"p", m.field().modulus()},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", grid_to_json(m)}};
}

Matrix matrix_from_json(const json& j) {
    const std::int64_t p = require_int(require_field(j, "p"), "p");
    if (p < 2 || p >= (1 << 16))
        throw std::invalid_argument("json: p out of range");
    const PrimeField f(static_cast<std::uint32_t>(p));
    const std::int64_t rows = require_int(require_field(j, "rows"), "rows");
    const std::int64_t cols = require_int(require_field(j, "cols"), "cols");
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("json: negative matrix shape");
    return grid_from_json(f, require_field(j, "entries"), rows, cols, "entries");
}

json to_json(const Subspace& s) {
    return json{{"p", s.field().modulus()},
                {"ambient", s.ambient()},
                {"basis", grid_to_json(s.basis())}};
}

Subspace subspace_from_json(const json& j) {
    const std::int64_t p = require_int(require_field(j, "p"), "p");
    if (p < 2 || p >= (1 << 16))
        throw std::invalid_argument("json: p out of range");
    const PrimeField f(static_cast<std::uint32_t>(p));
    const std::int64_t ambient = require_int(require_field(j, "ambient"), "ambient");
    if (ambient < 0) throw std::invalid_argument("json: negative ambient dimension");
    const json& basis = require_field(j, "basis");
    if (!basis.is_array())
        throw std::invalid_argument("json: basis must be an array");
    const Matrix rows =
        grid_from_json(f, basis, basis.size(), ambient, "basis");
    const Subspace s = Subspace::span_rows(rows);
    if (s.basis() != rows)
        throw std::invalid_argument("json: basis rows are not RREF");
    return s;
}

json to_json(const Permutation& s) {
    json a = json::array();
    for (int v : s.images()) a.push_back(v);
    return a;
}

Permutation permutation_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("json: permutation must be an image array");
    std::vector<int> img;
    img.reserve(j.size());
    for (const auto& v : j)
        img.push_back(static_cast<int>(require_int(v, "permutation image")));
    return Permutation(std::move(img));
}

json to_json(const CosetLabel& label) { return json{{"k", label.k}, {"l", label.l}}; }

json to_json(const Decomposition& d) {
    return json{{"label", to_json(d.label)},
                {"s", to_json(d.s)},
                {"w", to_json(d.w)},
                {"p", to_json(d.p)}};
}

json to_json(const oracle::CertifyReport& r) {
    const PrimeField f(r.p);
    const std::size_t m = 2 * static_cast<std::size_t>(r.n);
    json classes = json::array();
    for (const auto& c : r.classes) {
        json reps = json::array();
        for (auto [k, l] : c.reps_found) reps.push_back(json{{"k", k}, {"l", l}});
        json jc{{"size", c.size},
                {"label", json{{"k", c.k}, {"l", c.l}}},
                {"representatives_found", std::move(reps)},
                {"classify_constant", c.classify_constant},
                {"expected_size", c.expected_size},
                {"size_ok", c.size_ok}};
        if (c.has_witness)
            jc["witness"] = to_json(Matrix::from_key(f, m, m, c.witness_code));
        classes.push_back(std::move(jc));
    }
    return json{{"n", r.n},
                {"p", r.p},
                {"r", r.r},
                {"group_order", r.group_order},
                {"elements_seen", r.elements_seen},
                {"expected_classes", r.expected_classes},
                {"classes", std::move(classes)},
                {"assertions",
                 json{{"class_count", r.class_count_ok},
                      {"unique_representatives", r.unique_reps_ok},
                      {"classify_constant_distinct", r.classify_ok},
                      {"orbit_stabilizer_sizes", r.sizes_ok},
                      {"partition_complete", r.partition_ok}}},
                {"passed", r.passed()},
                {"failure", r.failure}};
}

} // namespace shalika

#pragma once

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spectral/eigencode.hpp"
#include "spectral/errors.hpp"
#include "spectral/json_io.hpp"
#include "spectral/matrix.hpp"

namespace spectral {

/// Directory holding the bundled reference tables and fixture matrices.
/// Resolution order: SPECTRAL_CODES_DATA environment variable, the path baked
/// in at configure time, then "data" relative to the working directory.
inline std::string default_data_dir() {
    if (const char* env = std::getenv("SPECTRAL_CODES_DATA"); env && *env) return env;
#ifdef SPECTRAL_DATA_DIR
    return SPECTRAL_DATA_DIR;
#else
    return "data";
#endif
}

/// One cell of a reference table: absent from that table, printed as a dash,
/// or carrying a printed value.
struct PublishedCell {
    enum class State { Absent, Dash, Value };
    State state = State::Absent;
    double value = 0.0;

    bool has_value() const { return state == State::Value; }
    bool published() const { return state != State::Absent; }
};

/// One (table, n, sign) row of the reference tables.
struct PublishedRow {
    std::string table;   // "I", "II", "III" or "IV"
    int n = 0;
    EigenSign sign = EigenSign::Plus;
    PublishedCell k, mu, delta, density, det;
};

struct ReferenceTables {
    std::vector<PublishedRow> rows;

    const PublishedRow* find(const std::string& table, int n, EigenSign sign) const {
        for (const PublishedRow& r : rows)
            if (r.table == table && r.n == n && r.sign == sign) return &r;
        return nullptr;
    }
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

inline PublishedCell parse_cell(const std::string& field) {
    PublishedCell c;
    if (field.empty()) return c;
    if (field == "-") {
        c.state = PublishedCell::State::Dash;
        return c;
    }
    std::size_t pos = 0;
    c.value = std::stod(field, &pos);
    if (pos != field.size())
        throw DegenerateInput("reference table: malformed numeric field '" + field + "'");
    c.state = PublishedCell::State::Value;
    return c;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DegenerateInput("cannot open data file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace detail

/// Loads the reference tables CSV (header: table,n,sign,k,mu,delta,density,det;
/// one row per table/length/sign; "-" marks cells printed as dashes, empty
/// fields mark columns the table does not carry).
inline ReferenceTables load_reference_tables(const std::string& data_dir) {
    const std::string path = data_dir + "/reference_tables.csv";
    std::istringstream in(detail::read_text_file(path));

    std::string line;
    if (!std::getline(in, line))
        throw DegenerateInput("reference table file is empty: " + path);
    if (detail::split_csv_line(line) !=
        std::vector<std::string>{"table", "n", "sign", "k", "mu", "delta", "density", "det"})
        throw DegenerateInput("reference table header mismatch in " + path);

    ReferenceTables tables;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = detail::split_csv_line(line);
        if (f.size() != 8)
            throw DegenerateInput("reference table row with wrong field count in " + path);
        PublishedRow row;
        row.table = f[0];
        row.n = std::stoi(f[1]);
        if (f[2] == "plus")
            row.sign = EigenSign::Plus;
        else if (f[2] == "minus")
            row.sign = EigenSign::Minus;
        else
            throw DegenerateInput("reference table sign must be plus or minus");
        row.k = detail::parse_cell(f[3]);
        row.mu = detail::parse_cell(f[4]);
        row.delta = detail::parse_cell(f[5]);
        row.density = detail::parse_cell(f[6]);
        row.det = detail::parse_cell(f[7]);
        tables.rows.push_back(std::move(row));
    }
    return tables;
}

/// A pinned matrix fixture: printed-to-so-many-decimals reference data plus
/// the metadata needed to know which geometric checks apply to it.
struct MatrixFixture {
    std::string name;
    std::string group;          // "eq7-11", "examples" or "golay-appendix"
    TransformKind transform = TransformKind::Fourier;
    int n = 0;
    EigenSign sign = EigenSign::Plus;
    std::string role;           // "generator", "parity_check" or "eigenbasis"
    double entry_tolerance = 0.0;
    double residual_tolerance = 0.0;
    std::string note;
    RealMatrix matrix;
};

struct SequenceFixture {
    std::vector<double> values;
    bool expect_eigensequence = true;
    std::string note;
};

struct SequenceFixtureSet {
    std::string name;
    std::string group;
    TransformKind transform = TransformKind::Hartley;
    int n = 0;
    EigenSign sign = EigenSign::Plus;
    std::vector<SequenceFixture> sequences;
};

struct FixtureSet {
    std::vector<MatrixFixture> matrices;
    std::vector<SequenceFixtureSet> sequence_sets;

    const MatrixFixture& matrix(const std::string& name) const {
        for (const MatrixFixture& f : matrices)
            if (f.name == name) return f;
        throw DegenerateInput("unknown matrix fixture: " + name);
    }
};

namespace detail {

inline TransformKind transform_from_string(const std::string& s) {
    if (s == "dft") return TransformKind::Fourier;
    if (s == "dht") return TransformKind::Hartley;
    throw DegenerateInput("transform must be dft or dht, got '" + s + "'");
}

inline EigenSign sign_from_string(const std::string& s) {
    if (s == "plus") return EigenSign::Plus;
    if (s == "minus") return EigenSign::Minus;
    throw DegenerateInput("sign must be plus or minus, got '" + s + "'");
}

} // namespace detail

/// File names of the bundled matrix fixtures (under <data_dir>/fixtures/).
inline const std::vector<std::string>& matrix_fixture_files() {
    static const std::vector<std::string> files{
        "fourier4_plus_generator.json",
        "fourier4_plus_parity.json",
        "fourier4_minus_generator.json",
        "hartley4_plus_generator.json",
        "hartley4_minus_generator.json",
        "hartley4_plus_basis_variant.json",
        "hartley7_plus_eigenbasis.json",
        "hartley7_plus_systematic_generator.json",
        "hartley9_plus_generator.json",
        "hartley23_plus_eigenbasis.json",
    };
    return files;
}

inline FixtureSet load_fixtures(const std::string& data_dir) {
    FixtureSet set;
    for (const std::string& file : matrix_fixture_files()) {
        const std::string path = data_dir + "/fixtures/" + file;
        const nlohmann::json j = nlohmann::json::parse(detail::read_text_file(path));
        MatrixFixture f;
        f.name = j.at("name").get<std::string>();
        f.group = j.at("group").get<std::string>();
        f.transform = detail::transform_from_string(j.at("transform").get<std::string>());
        f.n = j.at("n").get<int>();
        f.sign = detail::sign_from_string(j.at("sign").get<std::string>());
        f.role = j.at("role").get<std::string>();
        f.entry_tolerance = j.at("entry_tolerance").get<double>();
        f.residual_tolerance = j.at("residual_tolerance").get<double>();
        f.note = j.value("note", std::string{});
        f.matrix = real_matrix_from_json(j.at("matrix"));
        set.matrices.push_back(std::move(f));
    }

    const std::string seq_path = data_dir + "/fixtures/hartley9_integer_sequences.json";
    const nlohmann::json j = nlohmann::json::parse(detail::read_text_file(seq_path));
    SequenceFixtureSet seqs;
    seqs.name = j.at("name").get<std::string>();
    seqs.group = j.at("group").get<std::string>();
    seqs.transform = detail::transform_from_string(j.at("transform").get<std::string>());
    seqs.n = j.at("n").get<int>();
    seqs.sign = detail::sign_from_string(j.at("sign").get<std::string>());
    for (const auto& s : j.at("sequences")) {
        SequenceFixture f;
        f.values = s.at("values").get<std::vector<double>>();
        f.expect_eigensequence = s.at("expect_eigensequence").get<bool>();
        f.note = s.value("note", std::string{});
        seqs.sequences.push_back(std::move(f));
    }
    set.sequence_sets.push_back(std::move(seqs));
    return set;
}

} // namespace spectral

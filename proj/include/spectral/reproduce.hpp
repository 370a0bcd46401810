#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spectral/eigencode.hpp"
#include "spectral/fixtures.hpp"
#include "spectral/format.hpp"
#include "spectral/json_io.hpp"
#include "spectral/lattice.hpp"

namespace spectral {

enum class Verdict {
    Match,
    Mismatch,
    ReferenceInternalInconsistency,
    NotPublished,
    SuspectedTypo,
};

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::ReferenceInternalInconsistency: return "REFERENCE_INTERNAL_INCONSISTENCY";
        case Verdict::NotPublished: return "NOT_PUBLISHED";
        case Verdict::SuspectedTypo: return "SUSPECTED_TYPO";
    }
    return "UNKNOWN";
}

/// Reference-table cells whose printed centre density is inconsistent with
/// the same reference's own packing density column (density = delta * V_k
/// identifies the recomputed value as the correct one). These are reported as
/// SUSPECTED_TYPO instead of MISMATCH.
struct CellRef {
    std::string_view table;
    int n;
    EigenSign sign;
    std::string_view parameter;
};

inline constexpr std::array<CellRef, 4> kSuspectedTypoCells{{
    {"IV", 15, EigenSign::Minus, "delta"},
    {"IV", 17, EigenSign::Minus, "delta"},
    {"IV", 18, EigenSign::Plus, "delta"},
    {"IV", 18, EigenSign::Minus, "delta"},
}};

inline bool is_suspected_typo_cell(const std::string& table, int n, EigenSign sign,
                                   const std::string& parameter) {
    for (const CellRef& c : kSuspectedTypoCells)
        if (c.table == table && c.n == n && c.sign == sign && c.parameter == parameter)
            return true;
    return false;
}

/// One compared cell of the reference tables.
struct DiscrepancyEntry {
    std::string table;
    int n = 0;
    EigenSign sign = EigenSign::Plus;
    std::string parameter;                    // "k", "mu", "delta", "density" or "det"
    std::optional<double> published;          // empty when printed as a dash
    std::optional<double> recomputed;
    std::optional<double> relative_error;
    Verdict verdict = Verdict::Match;
    std::string note;
};

struct DiscrepancyReport {
    TransformKind transform = TransformKind::Fourier;
    int n_min = 0;
    int n_max = 0;
    double tolerance = 0.0;
    std::vector<DiscrepancyEntry> entries;

    std::size_t count(Verdict v) const {
        std::size_t c = 0;
        for (const DiscrepancyEntry& e : entries)
            if (e.verdict == v) ++c;
        return c;
    }

    /// The report passes when nothing is an outright mismatch.
    bool passed() const { return count(Verdict::Mismatch) == 0; }

    /// Lengths with at least one dimension-inconsistent row.
    std::vector<int> flagged_lengths() const {
        std::set<int> s;
        for (const DiscrepancyEntry& e : entries)
            if (e.verdict == Verdict::ReferenceInternalInconsistency) s.insert(e.n);
        return {s.begin(), s.end()};
    }
};

/// Recomputed packing parameters for one transform length and sign.
struct RecomputedRow {
    int n = 0;
    EigenSign sign = EigenSign::Plus;
    int k = 0;
    bool has_lattice = false;   // false only when k = 0
    double mu = 0.0;
    double delta = 0.0;
    double density = 0.0;
    double det = 0.0;
};

namespace detail {

inline RecomputedRow recompute_row(TransformKind kind, int n, EigenSign sign,
                                   double rank_tol) {
    const CodeSpec spec{{kind, n, false}, sign};
    const EigencodeResult code = build_code(spec, rank_tol);
    RecomputedRow row;
    row.n = n;
    row.sign = sign;
    row.k = code.k;
    if (code.k > 0) {
        const LatticeReport r = analyze(LatticeBasis(code.generator));
        row.has_lattice = true;
        row.mu = r.mu;
        row.delta = r.delta;
        row.density = r.density;
        row.det = r.det_lambda;
    }
    return row;
}

} // namespace detail

/// Recomputes both eigenspace codes for every length in [n_min, n_max].
/// Lengths are independent, so they are evaluated in parallel; assembly order
/// (ascending n, plus before minus) is deterministic regardless of scheduling.
inline std::vector<RecomputedRow> recompute_rows(TransformKind kind, int n_min, int n_max,
                                                 double rank_tol = kDefaultRankTol) {
    if (n_min < 1 || n_min > n_max)
        throw DegenerateInput("recompute_rows: need 1 <= n_min <= n_max");

    std::vector<std::future<std::pair<RecomputedRow, RecomputedRow>>> futures;
    for (int n = n_min; n <= n_max; ++n)
        futures.push_back(std::async(std::launch::async, [kind, n, rank_tol] {
            return std::make_pair(detail::recompute_row(kind, n, EigenSign::Plus, rank_tol),
                                  detail::recompute_row(kind, n, EigenSign::Minus, rank_tol));
        }));

    std::vector<RecomputedRow> rows;
    for (auto& f : futures) {
        auto [plus, minus] = f.get();
        rows.push_back(std::move(plus));
        rows.push_back(std::move(minus));
    }
    return rows;
}

namespace detail {

inline double published_as_double(const PublishedCell& c) { return c.value; }

inline void compare_value_cell(DiscrepancyReport& report, const std::string& table, int n,
                               EigenSign sign, const std::string& parameter,
                               const PublishedCell& cell, double recomputed,
                               bool row_flagged, double tol) {
    if (!cell.published()) return;

    DiscrepancyEntry e;
    e.table = table;
    e.n = n;
    e.sign = sign;
    e.parameter = parameter;
    e.recomputed = recomputed;

    if (cell.state == PublishedCell::State::Dash) {
        e.verdict = Verdict::NotPublished;
        e.note = "not listed in the reference; recomputed value shown";
        report.entries.push_back(std::move(e));
        return;
    }

    e.published = cell.value;
    const double rel = std::abs(recomputed - cell.value) / std::abs(cell.value);
    e.relative_error = rel;

    if (row_flagged) {
        e.verdict = Verdict::ReferenceInternalInconsistency;
        e.note = "row dimension differs from the eigenspace multiplicity; the listed "
                 "packing values describe a different lattice (informational)";
    } else if (rel <= tol) {
        e.verdict = Verdict::Match;
    } else if (is_suspected_typo_cell(table, n, sign, parameter)) {
        e.verdict = Verdict::SuspectedTypo;
        e.note = "the companion density column agrees with the recomputed centre "
                 "density, so the listed figure appears misprinted";
    } else {
        e.verdict = Verdict::Mismatch;
    }
    report.entries.push_back(std::move(e));
}

inline void compare_row(DiscrepancyReport& report, const ReferenceTables& tables,
                        const std::string& table, const RecomputedRow& row, double tol) {
    const PublishedRow* pub = tables.find(table, row.n, row.sign);
    if (pub == nullptr) return;

    bool flagged = false;
    if (pub->k.has_value() &&
        static_cast<int>(std::lround(pub->k.value)) != row.k)
        flagged = true;

    if (pub->k.published()) {
        DiscrepancyEntry e;
        e.table = table;
        e.n = row.n;
        e.sign = row.sign;
        e.parameter = "k";
        e.recomputed = static_cast<double>(row.k);
        if (pub->k.has_value()) {
            e.published = pub->k.value;
            e.relative_error = std::abs(static_cast<double>(row.k) - pub->k.value) /
                               std::max(1.0, std::abs(pub->k.value));
            if (flagged) {
                e.verdict = Verdict::ReferenceInternalInconsistency;
                e.note = "listed dimension differs from the closed-form eigenspace "
                         "multiplicity; the recomputed value follows the multiplicity";
            } else {
                e.verdict = Verdict::Match;
            }
        } else {
            e.verdict = Verdict::NotPublished;
            e.note = "not listed in the reference; recomputed value shown";
        }
        report.entries.push_back(std::move(e));
    }

    compare_value_cell(report, table, row.n, row.sign, "mu", pub->mu, row.mu, flagged, tol);
    compare_value_cell(report, table, row.n, row.sign, "delta", pub->delta, row.delta,
                       flagged, tol);
    compare_value_cell(report, table, row.n, row.sign, "density", pub->density, row.density,
                       flagged, tol);
    compare_value_cell(report, table, row.n, row.sign, "det", pub->det, row.det, flagged,
                       tol);
}

} // namespace detail

/// Recomputes every code in the range and diffs the results against the
/// published reference tables ("I"/"II" for Fourier, "III"/"IV" for Hartley).
/// Every published cell in range receives exactly one entry.
inline DiscrepancyReport reproduce_tables(const ReferenceTables& tables, TransformKind kind,
                                          int n_min, int n_max, double tolerance = 2e-3) {
    if (!(tolerance > 0.0))
        throw DegenerateInput("reproduce_tables: tolerance must be positive");

    DiscrepancyReport report;
    report.transform = kind;
    report.n_min = n_min;
    report.n_max = n_max;
    report.tolerance = tolerance;

    const std::vector<RecomputedRow> rows = recompute_rows(kind, n_min, n_max);
    const std::array<std::string, 2> pair = kind == TransformKind::Fourier
                                                ? std::array<std::string, 2>{"I", "II"}
                                                : std::array<std::string, 2>{"III", "IV"};
    for (const std::string& table : pair)
        for (const RecomputedRow& row : rows)
            detail::compare_row(report, tables, table, row, tolerance);
    return report;
}

// ---------------------------------------------------------------------------
// Fixture verification
// ---------------------------------------------------------------------------

struct FixtureCheck {
    std::string fixture;
    std::string check;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string note;
};

struct FixtureReport {
    std::vector<FixtureCheck> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const FixtureCheck& c) { return c.passed; });
    }
};

namespace detail {

inline void push_check(FixtureReport& report, const std::string& fixture,
                       const std::string& check, double measured, double threshold,
                       std::string note = {}) {
    report.checks.push_back(
        {fixture, check, measured <= threshold, measured, threshold, std::move(note)});
}

/// Worst per-row eigen-residual of the fixture rows, measured against the
/// residual_tol * sqrt(n) * ||row||_inf threshold; reports the worst ratio
/// so a single check line summarises all rows.
inline void check_rows_eigen(FixtureReport& report, const MatrixFixture& f,
                             EigenSign sign, double residual_tol) {
    const CodeSpec spec{{f.transform, f.n, false}, sign};
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
        const EigensequenceCheck c = check_eigensequence(spec, f.matrix.row(i), residual_tol);
        worst_ratio = std::max(worst_ratio, c.residual / c.threshold);
    }
    push_check(report, f.name, "eigen_residual", worst_ratio, 1.0,
               "worst row residual over threshold, lambda sign " + to_string(sign));
}

inline void check_entrywise(FixtureReport& report, const MatrixFixture& f,
                            const RealMatrix& recomputed) {
    if (recomputed.rows() != f.matrix.rows() || recomputed.cols() != f.matrix.cols()) {
        report.checks.push_back({f.name, "entry_match", false, 0.0, f.entry_tolerance,
                                 "shape mismatch against the recomputed matrix"});
        return;
    }
    push_check(report, f.name, "entry_match", max_abs_diff(f.matrix, recomputed),
               f.entry_tolerance, "largest entry difference against the recomputed matrix");
}

inline void check_gram_det(FixtureReport& report, const MatrixFixture& f,
                           const RealMatrix& recomputed, double rel_tol) {
    const double a = det_spd(gram(f.matrix));
    const double b = det_spd(gram(recomputed));
    push_check(report, f.name, "gram_det", std::abs(a - b) / std::abs(b), rel_tol,
               "relative difference of Gram determinants");
}

/// Determinant of a small integer matrix by fraction-free elimination.
inline long long integer_det(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    long double det = 1.0L;
    std::vector<std::vector<long double>> a(n, std::vector<long double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long double>(m[i][j]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (a[p][c] == 0.0L) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const long double f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return static_cast<long long>(std::llround(static_cast<double>(det)));
}

/// Both bases generate the same lattice: the change-of-basis coefficients are
/// integers with determinant +/-1.
inline void check_unimodular_equivalence(FixtureReport& report, const MatrixFixture& f,
                                         const RealMatrix& other) {
    const RealMatrix l = cholesky(gram(other), 1e-14);
    const std::size_t k = other.rows();
    std::vector<std::vector<long long>> u(f.matrix.rows(), std::vector<long long>(k, 0));
    double worst = 0.0;
    for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
        std::vector<double> rhs(k, 0.0);
        for (std::size_t r = 0; r < k; ++r) {
            double s = 0.0;
            for (std::size_t j = 0; j < other.cols(); ++j) s += other(r, j) * f.matrix(i, j);
            rhs[r] = s;
        }
        const std::vector<double> coeff = cholesky_solve(l, rhs);
        for (std::size_t r = 0; r < k; ++r) {
            const double rounded = std::nearbyint(coeff[r]);
            worst = std::max(worst, std::abs(coeff[r] - rounded));
            u[i][r] = static_cast<long long>(rounded);
        }
    }
    push_check(report, f.name, "integer_coefficients", worst, 1e-6,
               "fixture rows as integer combinations of the recomputed generator");

    const bool square = f.matrix.rows() == k;
    const long long det = square ? integer_det(u) : 0;
    report.checks.push_back({f.name, "unimodular_transform", square && std::llabs(det) == 1,
                             static_cast<double>(det), 1.0,
                             "determinant of the integer change of basis must be +/-1"});
}

inline void verify_one_matrix(FixtureReport& report, const MatrixFixture& f) {
    const TransformKind kind = f.transform;
    const CodeSpec spec{{kind, f.n, false}, f.sign};

    if (f.name == "fourier4_plus_generator" || f.name == "fourier4_minus_generator" ||
        f.name == "hartley4_plus_generator" || f.name == "hartley4_minus_generator" ||
        f.name == "hartley9_plus_generator" ||
        f.name == "hartley7_plus_systematic_generator") {
        const EigencodeResult code = build_code(spec);
        check_rows_eigen(report, f, f.sign, f.residual_tolerance);
        check_entrywise(report, f, code.generator);
        if (f.name == "hartley9_plus_generator" ||
            f.name == "hartley7_plus_systematic_generator")
            check_gram_det(report, f, code.generator, 1e-3);
        if (f.name == "hartley4_plus_generator") {
            // This generator spans the checkerboard-slice lattice with minimal
            // squared norm 2 and covolume 2.
            const LatticeReport r = analyze(LatticeBasis(f.matrix));
            push_check(report, f.name, "lattice_mu", std::abs(r.mu - 2.0), 1e-9);
            push_check(report, f.name, "lattice_det", std::abs(r.det_lambda - 2.0), 1e-9);
        }
        return;
    }

    if (f.name == "fourier4_plus_parity") {
        const EigencodeResult code = build_code(spec);
        check_entrywise(report, f, code.parity_check);
        const RealMatrix product = code.generator * f.matrix.transposed();
        push_check(report, f.name, "annihilates_generator", product.max_abs(), 1e-8);
        return;
    }

    if (f.name == "hartley4_plus_basis_variant") {
        check_rows_eigen(report, f, f.sign, f.residual_tolerance);
        const EigencodeResult code = build_code(spec);
        check_unimodular_equivalence(report, f, code.generator);
        check_gram_det(report, f, code.generator, 1e-9);
        return;
    }

    if (f.name == "hartley7_plus_eigenbasis") {
        check_rows_eigen(report, f, EigenSign::Plus, f.residual_tolerance);
        // The same rows arise as the parity check of the sign-minus code.
        const EigencodeResult minus = build_code({{kind, f.n, false}, EigenSign::Minus});
        check_entrywise(report, f, minus.parity_check);
        check_gram_det(report, f, minus.parity_check, 1e-3);
        return;
    }

    if (f.name == "hartley23_plus_eigenbasis") {
        check_rows_eigen(report, f, EigenSign::Plus, f.residual_tolerance);
        const EigencodeResult minus = build_code({{kind, f.n, false}, EigenSign::Minus});
        check_entrywise(report, f, minus.parity_check);
        const RealMatrix product = f.matrix * minus.generator.transposed();
        push_check(report, f.name, "annihilates_minus_generator", product.max_abs(), 1e-2,
                   "fixture rows against the recomputed sign-minus generator");
        const EigencodeResult plus = build_code(spec);
        push_check(report, f.name, "spans_plus_eigenspace",
                   std::max(subspace_residual(f.matrix, plus.generator),
                            subspace_residual(plus.generator, f.matrix)),
                   1e-2, "mutual row-space projection residual");
        const std::size_t rank = stable_rank(to_complex(f.matrix), 1e-6);
        report.checks.push_back({f.name, "rank", rank == 12, static_cast<double>(rank), 12.0,
                                 "numerical rank of the fixture rows"});
        return;
    }

    report.checks.push_back(
        {f.name, "registered", false, 0.0, 0.0, "no verification recipe for this fixture"});
}

} // namespace detail

/// Runs the geometric checks for every fixture in the given group ("eq7-11",
/// "examples", "golay-appendix" or "all").
inline FixtureReport verify_fixtures(const FixtureSet& fixtures,
                                     const std::string& group = "all") {
    if (group != "all" && group != "eq7-11" && group != "examples" &&
        group != "golay-appendix")
        throw DegenerateInput("unknown fixture group: " + group);

    FixtureReport report;
    for (const MatrixFixture& f : fixtures.matrices) {
        if (group != "all" && f.group != group) continue;
        detail::verify_one_matrix(report, f);
    }
    for (const SequenceFixtureSet& set : fixtures.sequence_sets) {
        if (group != "all" && set.group != group) continue;
        const CodeSpec spec{{set.transform, set.n, false}, set.sign};
        for (std::size_t i = 0; i < set.sequences.size(); ++i) {
            const SequenceFixture& s = set.sequences[i];
            const EigensequenceCheck c = check_eigensequence(spec, s.values, 1e-8);
            std::ostringstream name;
            name << "sequence_" << i;
            std::ostringstream note;
            note << "residual " << format_sig(c.residual, 5) << ", expected "
                 << (s.expect_eigensequence ? "eigensequence" : "non-eigensequence");
            if (!s.note.empty()) note << "; " << s.note;
            report.checks.push_back({set.name, name.str(),
                                     c.is_eigensequence == s.expect_eigensequence,
                                     c.residual, c.threshold, note.str()});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Serialisation
// ---------------------------------------------------------------------------

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out += "\"";
    return out;
}

inline std::string opt_sig(const std::optional<double>& v, int precision) {
    return v ? format_sig(*v, precision) : std::string{};
}

} // namespace detail

inline OrderedJson report_to_json(const DiscrepancyReport& r, int precision = 5) {
    OrderedJson j;
    j["transform"] = to_string(r.transform);
    j["n_min"] = r.n_min;
    j["n_max"] = r.n_max;
    j["tolerance"] = r.tolerance;
    OrderedJson summary;
    summary["match"] = r.count(Verdict::Match);
    summary["mismatch"] = r.count(Verdict::Mismatch);
    summary["reference_internal_inconsistency"] =
        r.count(Verdict::ReferenceInternalInconsistency);
    summary["not_published"] = r.count(Verdict::NotPublished);
    summary["suspected_typo"] = r.count(Verdict::SuspectedTypo);
    summary["passed"] = r.passed();
    j["summary"] = std::move(summary);

    OrderedJson entries = OrderedJson::array();
    for (const DiscrepancyEntry& e : r.entries) {
        OrderedJson je;
        je["table"] = e.table;
        je["n"] = e.n;
        je["sign"] = to_string(e.sign);
        je["parameter"] = e.parameter;
        je["published"] = e.published ? OrderedJson(round_sig(*e.published, precision))
                                      : OrderedJson(nullptr);
        je["recomputed"] = e.recomputed ? OrderedJson(round_sig(*e.recomputed, precision))
                                        : OrderedJson(nullptr);
        je["relative_error"] = e.relative_error
                                   ? OrderedJson(round_sig(*e.relative_error, 3))
                                   : OrderedJson(nullptr);
        je["verdict"] = to_string(e.verdict);
        je["note"] = e.note;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline std::string report_to_csv(const DiscrepancyReport& r, int precision = 5) {
    std::ostringstream out;
    out << "table,n,sign,parameter,published,recomputed,relative_error,verdict,note\n";
    for (const DiscrepancyEntry& e : r.entries) {
        out << e.table << ',' << e.n << ',' << to_string(e.sign) << ',' << e.parameter << ','
            << detail::opt_sig(e.published, precision) << ','
            << detail::opt_sig(e.recomputed, precision) << ','
            << detail::opt_sig(e.relative_error, 3) << ',' << to_string(e.verdict) << ','
            << detail::csv_escape(e.note) << '\n';
    }
    return out.str();
}

inline std::string report_to_markdown(const DiscrepancyReport& r, int precision = 5) {
    std::ostringstream out;
    out << "| table | n | sign | parameter | published | recomputed | rel. error | verdict "
           "| note |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const DiscrepancyEntry& e : r.entries) {
        out << "| " << e.table << " | " << e.n << " | " << to_string(e.sign) << " | "
            << e.parameter << " | " << detail::opt_sig(e.published, precision) << " | "
            << detail::opt_sig(e.recomputed, precision) << " | "
            << detail::opt_sig(e.relative_error, 3) << " | " << to_string(e.verdict) << " | "
            << e.note << " |\n";
    }
    return out.str();
}

inline OrderedJson rows_to_json(const std::vector<RecomputedRow>& rows, int precision = 5) {
    OrderedJson arr = OrderedJson::array();
    for (const RecomputedRow& r : rows) {
        OrderedJson j;
        j["n"] = r.n;
        j["sign"] = to_string(r.sign);
        j["k"] = r.k;
        if (r.has_lattice) {
            j["mu"] = round_sig(r.mu, precision);
            j["delta"] = round_sig(r.delta, precision);
            j["density"] = round_sig(r.density, precision);
            j["det"] = round_sig(r.det, precision);
        } else {
            j["mu"] = nullptr;
            j["delta"] = nullptr;
            j["density"] = nullptr;
            j["det"] = nullptr;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::string rows_to_csv(const std::vector<RecomputedRow>& rows, int precision = 5) {
    std::ostringstream out;
    out << "n,sign,k,mu,delta,density,det\n";
    for (const RecomputedRow& r : rows) {
        out << r.n << ',' << to_string(r.sign) << ',' << r.k << ',';
        if (r.has_lattice)
            out << format_sig(r.mu, precision) << ',' << format_sig(r.delta, precision) << ','
                << format_sig(r.density, precision) << ',' << format_sig(r.det, precision);
        else
            out << ",,,";
        out << '\n';
    }
    return out.str();
}

inline std::string rows_to_markdown(const std::vector<RecomputedRow>& rows,
                                    int precision = 5) {
    std::ostringstream out;
    out << "| n | sign | k | mu | delta | density | det |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const RecomputedRow& r : rows) {
        out << "| " << r.n << " | " << to_string(r.sign) << " | " << r.k << " | ";
        if (r.has_lattice)
            out << format_sig(r.mu, precision) << " | " << format_sig(r.delta, precision)
                << " | " << format_sig(r.density, precision) << " | "
                << format_sig(r.det, precision) << " |\n";
        else
            out << "| | | |\n";
    }
    return out.str();
}

inline OrderedJson fixture_report_to_json(const FixtureReport& r, int precision = 5) {
    OrderedJson j;
    j["passed"] = r.all_passed();
    OrderedJson checks = OrderedJson::array();
    for (const FixtureCheck& c : r.checks) {
        OrderedJson jc;
        jc["fixture"] = c.fixture;
        jc["check"] = c.check;
        jc["passed"] = c.passed;
        jc["measured"] = round_sig(c.measured, precision);
        jc["threshold"] = round_sig(c.threshold, precision);
        jc["note"] = c.note;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    return j;
}

inline std::string fixture_report_to_text(const FixtureReport& r, int precision = 5) {
    std::ostringstream out;
    for (const FixtureCheck& c : r.checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.fixture << " :: " << c.check
            << "  (measured " << format_sig(c.measured, precision) << ", threshold "
            << format_sig(c.threshold, precision) << ")";
        if (!c.note.empty()) out << "  -- " << c.note;
        out << '\n';
    }
    out << (r.all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
    return out.str();
}

} // namespace spectral

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spectral/eigencode.hpp"

using namespace spectral;

namespace {

CodeSpec spec(TransformKind kind, int n, EigenSign sign, bool unitary = false) {
    return {{kind, n, unitary}, sign};
}

} // namespace

TEST_CASE("closed-form dimensions at known lengths", "[eigencode]") {
    REQUIRE(fourier_dimensions(4).plus == 2);
    REQUIRE(fourier_dimensions(4).minus == 1);
    REQUIRE(fourier_dimensions(12).plus == 4);
    REQUIRE(fourier_dimensions(12).minus == 3);
    REQUIRE(fourier_dimensions(14).minus == 4);
    REQUIRE(fourier_dimensions(16).plus == 5);
    REQUIRE(fourier_dimensions(16).minus == 4);

    REQUIRE(hartley_dimensions(4).plus == 3);
    REQUIRE(hartley_dimensions(4).minus == 1);
    REQUIRE(hartley_dimensions(7).plus == 4);
    REQUIRE(hartley_dimensions(7).minus == 3);
    REQUIRE(hartley_dimensions(14).plus == 7);
    REQUIRE(hartley_dimensions(14).minus == 7);
    REQUIRE(hartley_dimensions(23).plus == 12);
    REQUIRE(hartley_dimensions(23).minus == 11);
}

TEST_CASE("Hartley dimensions exhaust the space", "[eigencode]") {
    for (int n = 1; n <= 24; ++n) {
        const DimensionPair d = hartley_dimensions(n);
        REQUIRE(d.plus + d.minus == n);
        REQUIRE(d.minus >= 0);
    }
}

TEST_CASE("numerical rank agrees with the closed forms for every length", "[eigencode]") {
    for (int n = 3; n <= 24; ++n)
        for (TransformKind kind : {TransformKind::Fourier, TransformKind::Hartley})
            for (EigenSign sign : {EigenSign::Plus, EigenSign::Minus}) {
                const EigencodeResult code = build_code(spec(kind, n, sign));
                REQUIRE(code.k == expected_dimension(spec(kind, n, sign)));
                REQUIRE(code.generator.rows() == static_cast<std::size_t>(code.k));
                REQUIRE(code.parity_check.rows() == static_cast<std::size_t>(n - code.k));
                REQUIRE(code.systematic);
            }
}

TEST_CASE("length-4 Fourier codes reproduce the canonical matrices", "[eigencode]") {
    const EigencodeResult plus = build_code(spec(TransformKind::Fourier, 4, EigenSign::Plus));
    REQUIRE(plus.k == 2);
    REQUIRE(max_abs_diff(plus.generator, RealMatrix{{1, 0, 1, 0}, {2, 1, 0, 1}}) < 1e-9);
    REQUIRE(max_abs_diff(plus.parity_check, RealMatrix{{1, 0, -1, -2}, {0, 1, 0, -1}}) < 1e-9);
    REQUIRE(plus.pivot_columns == std::vector<std::size_t>{0, 1});

    const EigencodeResult minus = build_code(spec(TransformKind::Fourier, 4, EigenSign::Minus));
    REQUIRE(minus.k == 1);
    REQUIRE(max_abs_diff(minus.generator, RealMatrix{{-1, 1, 1, 1}}) < 1e-9);
}

TEST_CASE("length-4 Hartley codes reproduce the canonical matrices", "[eigencode]") {
    const EigencodeResult plus = build_code(spec(TransformKind::Hartley, 4, EigenSign::Plus));
    REQUIRE(plus.k == 3);
    REQUIRE(max_abs_diff(plus.generator,
                         RealMatrix{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}) < 1e-9);

    const EigencodeResult minus = build_code(spec(TransformKind::Hartley, 4, EigenSign::Minus));
    REQUIRE(minus.k == 1);
    REQUIRE(max_abs_diff(minus.generator, RealMatrix{{-1, 1, 1, 1}}) < 1e-9);
}

TEST_CASE("parity rows of the Hartley minus code span the plus eigenspace", "[eigencode]") {
    const EigencodeResult minus = build_code(spec(TransformKind::Hartley, 7, EigenSign::Minus));
    REQUIRE(minus.k == 3);
    REQUIRE(minus.parity_check.rows() == 4);
    // For the symmetric Hartley kernel the row space of [H] - lambda*I is the
    // orthogonal complement of its null space, i.e. the opposite eigenspace.
    for (std::size_t i = 0; i < minus.parity_check.rows(); ++i)
        REQUIRE(is_eigensequence(spec(TransformKind::Hartley, 7, EigenSign::Plus),
                                 minus.parity_check.row(i), 1e-8));
}

TEST_CASE("generator and parity check are dual for every build", "[eigencode]") {
    for (int n = 3; n <= 24; ++n)
        for (TransformKind kind : {TransformKind::Fourier, TransformKind::Hartley})
            for (EigenSign sign : {EigenSign::Plus, EigenSign::Minus}) {
                const EigencodeResult code = build_code(spec(kind, n, sign));
                if (code.k == 0 || code.k == n) continue;
                const RealMatrix product = code.generator * code.parity_check.transposed();
                REQUIRE(product.max_abs() <
                        1e-8 * std::max(1.0, code.generator.max_abs() *
                                                 code.parity_check.max_abs()));
            }
}

TEST_CASE("generator rows pass the eigen-residual test", "[eigencode]") {
    for (int n = 3; n <= 24; ++n)
        for (TransformKind kind : {TransformKind::Fourier, TransformKind::Hartley})
            for (EigenSign sign : {EigenSign::Plus, EigenSign::Minus}) {
                const CodeSpec s = spec(kind, n, sign);
                const EigencodeResult code = build_code(s);
                for (int i = 0; i < code.k; ++i)
                    REQUIRE(is_eigensequence(s, code.generator.row(static_cast<std::size_t>(i))));
            }
}

TEST_CASE("opposite Hartley eigenspaces are orthogonal", "[eigencode]") {
    for (int n = 3; n <= 24; ++n) {
        const EigencodeResult plus = build_code(spec(TransformKind::Hartley, n, EigenSign::Plus));
        const EigencodeResult minus =
            build_code(spec(TransformKind::Hartley, n, EigenSign::Minus));
        if (plus.k == 0 || minus.k == 0) continue;
        const RealMatrix cross = plus.generator * minus.generator.transposed();
        REQUIRE(cross.max_abs() <
                1e-8 * std::max(1.0, plus.generator.max_abs() * minus.generator.max_abs()));
    }
}

TEST_CASE("Hartley code rates stay within 3/(2n) of one half", "[eigencode]") {
    for (int n = 3; n <= 24; ++n) {
        const DimensionPair d = hartley_dimensions(n);
        const double half = 0.5;
        const double bound = 1.5 / static_cast<double>(n);
        REQUIRE(std::abs(static_cast<double>(d.plus) / n - half) <= bound + 1e-12);
        REQUIRE(std::abs(static_cast<double>(d.minus) / n - half) <= bound + 1e-12);
    }
}

TEST_CASE("unitary scaling leaves the code unchanged", "[eigencode]") {
    for (TransformKind kind : {TransformKind::Fourier, TransformKind::Hartley})
        for (EigenSign sign : {EigenSign::Plus, EigenSign::Minus}) {
            const EigencodeResult standard = build_code(spec(kind, 12, sign));
            const EigencodeResult unitary = build_code(spec(kind, 12, sign, true));
            REQUIRE(standard.k == unitary.k);
            // Shifting by lambda scales the whole matrix uniformly, so the
            // canonical bases agree entry for entry, not just up to span.
            REQUIRE(max_abs_diff(standard.generator, unitary.generator) < 1e-9);
            REQUIRE(max_abs_diff(standard.parity_check, unitary.parity_check) < 1e-9);
        }
}

TEST_CASE("eigensequence checks on the worked length-9 sequences", "[eigencode]") {
    const CodeSpec s = spec(TransformKind::Hartley, 9, EigenSign::Plus);
    const std::vector<double> comb{1, 0, 0, 1, 0, 0, 1, 0, 0};
    const std::vector<double> good{10, 1, 1, 7, 1, 1, 7, 1, 1};
    const std::vector<double> bad{10, 1, 1, 1, 1, 1, 1, 1, 1};

    REQUIRE(is_eigensequence(s, comb));
    REQUIRE(is_eigensequence(s, good));
    REQUIRE_FALSE(is_eigensequence(s, bad));

    const EigensequenceCheck report = check_eigensequence(s, bad);
    REQUIRE(report.lambda == Catch::Approx(3.0));
    // transform of the bad vector is [18, 9, ..., 9]; residual is |9 - 3|
    REQUIRE(report.residual == Catch::Approx(12.0).margin(1e-9));
}

TEST_CASE("eigensequence input validation", "[eigencode]") {
    const CodeSpec s = spec(TransformKind::Hartley, 9, EigenSign::Plus);
    const std::vector<double> short_vec{1, 2, 3};
    const std::vector<double> zero(9, 0.0);
    REQUIRE_THROWS_AS(check_eigensequence(s, short_vec), LengthMismatch);
    REQUIRE_THROWS_AS(check_eigensequence(s, zero), ZeroVector);
    const std::vector<double> ok(9, 1.0);
    REQUIRE_THROWS_AS(check_eigensequence(s, ok, 0.0), DegenerateInput);
}

TEST_CASE("integer eigensequence search finds the worked sequences", "[eigencode]") {
    const CodeSpec s = spec(TransformKind::Hartley, 9, EigenSign::Plus);
    const auto hits = find_integer_eigensequences(s, 8, 100000);
    REQUIRE_FALSE(hits.empty());

    const std::vector<long long> comb{1, 0, 0, 1, 0, 0, 1, 0, 0};
    const std::vector<long long> good{10, 1, 1, 7, 1, 1, 7, 1, 1};
    REQUIRE(std::find(hits.begin(), hits.end(), comb) != hits.end());
    REQUIRE(std::find(hits.begin(), hits.end(), good) != hits.end());

    // every hit actually is an integer eigensequence
    for (const auto& h : hits) {
        std::vector<double> x(h.begin(), h.end());
        REQUIRE(is_eigensequence(s, x));
    }
}

TEST_CASE("integer eigensequence search is deterministic", "[eigencode]") {
    const CodeSpec s = spec(TransformKind::Hartley, 9, EigenSign::Plus);
    const auto a = find_integer_eigensequences(s, 3, 500);
    const auto b = find_integer_eigensequences(s, 3, 500);
    REQUIRE(a == b);
}

TEST_CASE("integer eigensequence search in the large-k regime", "[eigencode]") {
    // k = 9 here, so the sphere-enumeration path runs. The period-4 comb has
    // small integer coordinates in the canonical basis and must be found.
    const CodeSpec s = spec(TransformKind::Hartley, 16, EigenSign::Plus);
    const auto hits = find_integer_eigensequences(s, 8, 100000);
    std::vector<long long> comb(16, 0);
    comb[0] = comb[4] = comb[8] = comb[12] = 1;
    REQUIRE(std::find(hits.begin(), hits.end(), comb) != hits.end());
    for (const auto& h : hits) {
        std::vector<double> x(h.begin(), h.end());
        REQUIRE(is_eigensequence(s, x));
    }
}

TEST_CASE("integer eigensequence search validates the bound", "[eigencode]") {
    const CodeSpec s = spec(TransformKind::Hartley, 9, EigenSign::Plus);
    REQUIRE_THROWS_AS(find_integer_eigensequences(s, 0), DegenerateInput);
}

TEST_CASE("trivial eigenspaces yield empty codes", "[eigencode]") {
    // Length 1: the transform is the scalar 1, so the minus space is empty.
    const EigencodeResult code = build_code(spec(TransformKind::Hartley, 1, EigenSign::Minus));
    REQUIRE(code.k == 0);
    REQUIRE(code.generator.rows() == 0);
    REQUIRE(code.parity_check.rows() == 1);
}

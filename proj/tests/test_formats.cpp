#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "spectral/eigencode.hpp"
#include "spectral/fixtures.hpp"
#include "spectral/format.hpp"
#include "spectral/json_io.hpp"
#include "spectral/lattice.hpp"

using namespace spectral;

#ifndef SPECTRAL_DATA_DIR
#define SPECTRAL_DATA_DIR "data"
#endif

TEST_CASE("significant-digit formatting", "[formats]") {
    REQUIRE(format_sig(0.123456789, 5) == "0.12346");
    REQUIRE(format_sig(2.0, 5) == "2");
    REQUIRE(format_sig(-1234567.0, 3) == "-1.23e+06");
    REQUIRE_THROWS_AS(format_sig(1.0, 0), DegenerateInput);
    REQUIRE_THROWS_AS(format_sig(1.0, 18), DegenerateInput);

    REQUIRE(round_sig(0.123456789, 5) == 0.12346);
    REQUIRE(round_sig(2.0, 3) == 2.0);
    // full precision round-trips exactly
    const double x = 3.8257787841229542;
    REQUIRE(round_sig(x, 17) == x);
}

TEST_CASE("real matrix JSON round trip", "[formats]") {
    const RealMatrix m{{1.5, -2.0}, {0.0, 3.25}};
    const OrderedJson j = matrix_to_json(m);
    REQUIRE(j.at("rows") == 2);
    REQUIRE(j.at("cols") == 2);
    REQUIRE(j.at("complex") == false);
    REQUIRE(j.at("data").size() == 4); // row-major, flat
    REQUIRE(j.at("data")[0] == 1.5);
    REQUIRE(j.at("data")[3] == 3.25);
    REQUIRE(real_matrix_from_json(j) == m);
}

TEST_CASE("complex matrix JSON round trip", "[formats]") {
    const ComplexMatrix m{{Complex{1, -1}, Complex{0, 2}},
                          {Complex{3, 0}, Complex{-4, 5}}};
    const OrderedJson j = matrix_to_json(m);
    REQUIRE(j.at("complex") == true);
    REQUIRE(j.at("data")[0] == OrderedJson::array({1.0, -1.0}));
    const ComplexMatrix back = complex_matrix_from_json(j);
    REQUIRE(max_abs_diff(back, m) == 0.0);
}

TEST_CASE("matrix JSON readers accept both entry spellings", "[formats]") {
    OrderedJson j;
    j["rows"] = 1;
    j["cols"] = 2;
    j["complex"] = false;
    j["data"] = OrderedJson::array({1.0, OrderedJson::array({2.0, 0.0})});
    const RealMatrix m = real_matrix_from_json(j);
    REQUIRE(m == RealMatrix{{1.0, 2.0}});
}

TEST_CASE("matrix JSON validation", "[formats]") {
    OrderedJson j;
    j["rows"] = 2;
    j["cols"] = 1;
    j["complex"] = false;
    j["data"] = OrderedJson::array({1.0});
    REQUIRE_THROWS_AS(real_matrix_from_json(j), LengthMismatch); // wrong data length

    j["data"] = OrderedJson::array({1.0, OrderedJson::array({0.0, 1.0})});
    REQUIRE_THROWS_AS(real_matrix_from_json(j), DegenerateInput); // imaginary part
}

TEST_CASE("code serialization carries the expected keys", "[formats]") {
    const EigencodeResult code =
        build_code({{TransformKind::Fourier, 4, false}, EigenSign::Plus});
    const OrderedJson j = code_to_json(code);
    REQUIRE(j.at("spec").at("transform") == "dft");
    REQUIRE(j.at("spec").at("n") == 4);
    REQUIRE(j.at("spec").at("unitary") == false);
    REQUIRE(j.at("spec").at("sign") == "plus");
    REQUIRE(j.at("k") == 2);
    REQUIRE(j.at("systematic") == true);
    REQUIRE(j.at("pivot_columns") == OrderedJson::array({0, 1}));
    REQUIRE(real_matrix_from_json(j.at("generator")) ==
            RealMatrix{{1, 0, 1, 0}, {2, 1, 0, 1}});
    REQUIRE(real_matrix_from_json(j.at("parity_check")) ==
            RealMatrix{{1, 0, -1, -2}, {0, 1, 0, -1}});
}

TEST_CASE("lattice report serialization rounds to the requested digits", "[formats]") {
    const LatticeReport r = analyze(LatticeBasis(RealMatrix{{1, 1, 0, 0},
                                                            {1, 0, 1, 0},
                                                            {1, 0, 0, 1}}));
    const OrderedJson j = lattice_report_to_json(r, 5);
    const std::set<std::string> expected{"k",     "mu",           "det_lambda",
                                         "delta", "density",      "shortest_coeffs",
                                         "shortest_vector", "kissing"};
    std::set<std::string> seen;
    for (auto it = j.begin(); it != j.end(); ++it) seen.insert(it.key());
    REQUIRE(seen == expected);
    REQUIRE(j.at("k") == 3);
    REQUIRE(j.at("mu") == 2.0);
    REQUIRE(j.at("det_lambda") == 2.0);
    REQUIRE(j.at("delta") == 0.17678);
    REQUIRE(j.at("kissing") == 12);
}

TEST_CASE("reference tables load completely", "[formats]") {
    const ReferenceTables tables = load_reference_tables(SPECTRAL_DATA_DIR);
    REQUIRE(tables.rows.size() == 156);

    std::size_t fourier = 0, hartley = 0;
    for (const PublishedRow& row : tables.rows) {
        if (row.table == "I" || row.table == "II") ++fourier;
        else ++hartley;
    }
    REQUIRE(fourier == 2 * 2 * 22); // two tables, both signs, lengths 3..24
    REQUIRE(hartley == 2 * 2 * 17); // two tables, both signs, lengths 3..18 and 23

    const PublishedRow* r = tables.find("I", 12, EigenSign::Plus);
    REQUIRE(r != nullptr);
    REQUIRE(r->k.has_value());
    REQUIRE(r->k.value == 4.0);
    REQUIRE(r->mu.value == 4.0);
    REQUIRE(r->density.has_value());

    const PublishedRow* h = tables.find("IV", 9, EigenSign::Plus);
    REQUIRE(h != nullptr);
    REQUIRE(h->det.value == Catch::Approx(47.233));
    REQUIRE(h->delta.has_value());

    // the length-23 rows publish the dimension but print dashes for the
    // numeric packing columns
    const PublishedRow* dash = tables.find("III", 23, EigenSign::Plus);
    REQUIRE(dash != nullptr);
    REQUIRE(dash->k.has_value());
    REQUIRE(dash->k.value == 12.0);
    REQUIRE(dash->mu.published());
    REQUIRE_FALSE(dash->mu.has_value());
    REQUIRE(dash->density.published());
    REQUIRE_FALSE(dash->density.has_value());

    REQUIRE(tables.find("I", 2, EigenSign::Plus) == nullptr);
}

TEST_CASE("matrix fixtures load with their tolerances", "[formats]") {
    const FixtureSet fixtures = load_fixtures(SPECTRAL_DATA_DIR);
    REQUIRE(fixtures.matrices.size() == 10);
    REQUIRE(fixtures.sequence_sets.size() == 1);

    const MatrixFixture& f4 = fixtures.matrix("fourier4_plus_generator");
    REQUIRE(f4.transform == TransformKind::Fourier);
    REQUIRE(f4.n == 4);
    REQUIRE(f4.sign == EigenSign::Plus);
    REQUIRE(f4.matrix == RealMatrix{{1, 0, 1, 0}, {2, 1, 0, 1}});
    REQUIRE(f4.entry_tolerance == 1e-9);
    REQUIRE(f4.residual_tolerance == 1e-8);

    const MatrixFixture& app = fixtures.matrix("hartley23_plus_eigenbasis");
    REQUIRE(app.n == 23);
    REQUIRE(app.matrix.rows() == 12);
    REQUIRE(app.matrix.cols() == 23);
    REQUIRE(app.group == "golay-appendix");

    const SequenceFixtureSet& seqs = fixtures.sequence_sets.front();
    REQUIRE(seqs.sequences.size() == 3);
    REQUIRE(seqs.sequences[0].values ==
            std::vector<double>{1, 0, 0, 1, 0, 0, 1, 0, 0});
    REQUIRE(seqs.sequences[0].expect_eigensequence);
    REQUIRE_FALSE(seqs.sequences[2].expect_eigensequence);

    REQUIRE_THROWS_AS(fixtures.matrix("no_such_fixture"), DegenerateInput);
}

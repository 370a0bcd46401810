#pragma once

#include <json.hpp>

#include <string>

#include "spectral/eigencode.hpp"
#include "spectral/errors.hpp"
#include "spectral/format.hpp"
#include "spectral/lattice.hpp"
#include "spectral/matrix.hpp"
#include "spectral/transforms.hpp"

namespace spectral {

using OrderedJson = nlohmann::ordered_json;

/// Matrix wire format: {"rows": R, "cols": C, "complex": bool, "data": [...]}
/// with row-major data. Complex entries are [re, im] pairs; real matrices use
/// bare numbers.
inline OrderedJson matrix_to_json(const RealMatrix& m) {
    OrderedJson j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["complex"] = false;
    OrderedJson data = OrderedJson::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) data.push_back(m(i, c));
    j["data"] = std::move(data);
    return j;
}

inline OrderedJson matrix_to_json(const ComplexMatrix& m) {
    OrderedJson j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["complex"] = true;
    OrderedJson data = OrderedJson::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            data.push_back(OrderedJson::array({m(i, c).real(), m(i, c).imag()}));
    j["data"] = std::move(data);
    return j;
}

namespace detail {

template <class Json>
void require_matrix_shape(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw DegenerateInput("matrix JSON must carry rows, cols and data");
    const std::size_t rows = j.at("rows").template get<std::size_t>();
    const std::size_t cols = j.at("cols").template get<std::size_t>();
    if (!j.at("data").is_array() || j.at("data").size() != rows * cols)
        throw LengthMismatch("matrix JSON data length does not match rows*cols");
}

template <class Json>
Complex entry_from_json(const Json& e) {
    if (e.is_number()) return Complex(e.template get<double>(), 0.0);
    if (e.is_array() && e.size() == 2)
        return Complex(e.at(0).template get<double>(), e.at(1).template get<double>());
    throw DegenerateInput("matrix JSON entries must be numbers or [re, im] pairs");
}

} // namespace detail

template <class Json>
ComplexMatrix complex_matrix_from_json(const Json& j) {
    detail::require_matrix_shape(j);
    ComplexMatrix m(j.at("rows").template get<std::size_t>(),
                    j.at("cols").template get<std::size_t>());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(i, c) = detail::entry_from_json(j.at("data").at(idx++));
    return m;
}

template <class Json>
RealMatrix real_matrix_from_json(const Json& j) {
    const ComplexMatrix m = complex_matrix_from_json(j);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(i, c).imag() != 0.0)
                throw DegenerateInput("expected a real matrix but found imaginary parts");
    RealMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) r(i, c) = m(i, c).real();
    return r;
}

inline OrderedJson transform_spec_to_json(const TransformSpec& t) {
    OrderedJson j;
    j["transform"] = to_string(t.kind);
    j["n"] = t.n;
    j["unitary"] = t.unitary;
    return j;
}

inline OrderedJson code_spec_to_json(const CodeSpec& s) {
    OrderedJson j = transform_spec_to_json(s.transform);
    j["sign"] = to_string(s.sign);
    return j;
}

inline OrderedJson code_to_json(const EigencodeResult& code) {
    OrderedJson j;
    j["spec"] = code_spec_to_json(code.spec);
    j["k"] = code.k;
    j["generator"] = matrix_to_json(code.generator);
    j["parity_check"] = matrix_to_json(code.parity_check);
    j["pivot_columns"] = code.pivot_columns;
    j["systematic"] = code.systematic;
    return j;
}

/// Lattice report wire format. Scalar fields are rounded to the display
/// precision; coefficient vectors stay exact integers.
inline OrderedJson lattice_report_to_json(const LatticeReport& r, int precision = 5) {
    OrderedJson j;
    j["k"] = r.k;
    j["mu"] = round_sig(r.mu, precision);
    j["det_lambda"] = round_sig(r.det_lambda, precision);
    j["delta"] = round_sig(r.delta, precision);
    j["density"] = round_sig(r.density, precision);
    j["shortest_coeffs"] = r.shortest_coeffs;
    OrderedJson vec = OrderedJson::array();
    for (double v : r.shortest_vector) vec.push_back(round_sig(v, precision));
    j["shortest_vector"] = std::move(vec);
    j["kissing"] = r.kissing;
    return j;
}

} // namespace spectral

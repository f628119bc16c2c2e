// matrix_text.hpp - Text serialization of numbers, vectors and matrices.
//
// Two number formats are used by the command-line tools:
//   * format_double: shortest decimal that round-trips to the same double,
//     used for CSV output so emitted files double as regression oracles.
//   * format_double17: up to 17 significant digits (printf %.17g), used for
//     matrix reports.

#ifndef PHWALK_MATRIX_TEXT_HPP
#define PHWALK_MATRIX_TEXT_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <string_view>

namespace phwalk {

std::string format_double(double x);
std::string format_double17(double x);

// "a+bi" form with the imaginary part dropped when zero; shortest round-trip
// digits on both parts.
std::string format_complex(std::complex<double> z);

// Accepts real tokens ("2", "-0.5", "1e-3"), pure imaginary tokens ("i",
// "-i", "2.5i") and full "a+bi" / "a-bi" tokens. Throws ParseError otherwise.
std::complex<double> parse_complex_token(std::string_view token);

// One matrix row per line, whitespace-separated tokens, '#' starts a comment.
// All rows must have the same number of columns. Throws ParseError on
// malformed or empty input.
Eigen::MatrixXcd parse_complex_matrix(std::string_view text);

// Rows separated by '\n', entries by single spaces, format_double17 entries.
std::string format_matrix(const Eigen::MatrixXd &m);

} // namespace phwalk

#endif

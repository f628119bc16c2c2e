// matrix_text.cpp - Number and matrix text serialization.

#include "phwalk/matrix_text.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

#include "phwalk/errors.hpp"

namespace phwalk {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_double17(double x) {
  char buf[64];
  int len = std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf, static_cast<size_t>(len));
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) {
    return format_double(z.real());
  }
  std::string out = format_double(z.real());
  if (!(z.imag() < 0.0)) {
    out += '+';
  }
  out += format_double(z.imag());
  out += 'i';
  return out;
}

namespace {

double parse_real(std::string_view text, std::string_view whole_token) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("malformed numeric token '" + std::string(whole_token) +
                     "'");
  }
  return value;
}

// Index of the sign that splits "a+bi" into parts, or npos. Signs at
// position 0 or directly after an exponent marker belong to a single number.
size_t split_position(std::string_view tok) {
  for (size_t i = tok.size(); i-- > 1;) {
    if ((tok[i] == '+' || tok[i] == '-') &&
        (tok[i - 1] != 'e' && tok[i - 1] != 'E')) {
      return i;
    }
  }
  return std::string_view::npos;
}

// Parses the imaginary half: "i" -> 1, "-i" -> -1, "2.5i" -> 2.5.
double parse_imag_part(std::string_view part, std::string_view whole_token) {
  part.remove_suffix(1); // trailing 'i'
  if (part.empty() || part == "+") {
    return 1.0;
  }
  if (part == "-") {
    return -1.0;
  }
  return parse_real(part, whole_token);
}

} // namespace

std::complex<double> parse_complex_token(std::string_view token) {
  if (token.empty()) {
    throw ParseError("empty numeric token");
  }
  if (token.back() != 'i') {
    return {parse_real(token, token), 0.0};
  }
  size_t split = split_position(token);
  if (split == std::string_view::npos) {
    return {0.0, parse_imag_part(token, token)};
  }
  double re = parse_real(token.substr(0, split), token);
  double im = parse_imag_part(token.substr(split), token);
  return {re, im};
}

Eigen::MatrixXcd parse_complex_matrix(std::string_view text) {
  std::vector<std::vector<std::complex<double>>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::vector<std::complex<double>> row;
    std::string tok;
    while (tokens >> tok) {
      try {
        row.push_back(parse_complex_token(tok));
      } catch (const ParseError &e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (row.empty()) {
      continue; // blank or comment-only line
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(rows.front().size()) +
                       " entries, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError("matrix text contains no rows");
  }
  Eigen::MatrixXcd m(rows.size(), rows.front().size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return m;
}

std::string format_matrix(const Eigen::MatrixXd &m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) {
        out += ' ';
      }
      out += format_double17(m(i, j));
    }
    out += '\n';
  }
  return out;
}

} // namespace phwalk

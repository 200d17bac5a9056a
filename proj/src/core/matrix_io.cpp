#include "geodiscord/core/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace geodiscord {
namespace {

// Length of the longest prefix of `s` that is a decimal floating literal
// (optional sign, digits, optional fraction, optional exponent).
std::size_t scan_real(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  }
  if (digits == 0) return 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    const std::size_t exp_start = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > exp_start) i = j;
  }
  return i;
}

double to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Complex parse_complex(std::string_view token) {
  const auto bad = [&] { return std::invalid_argument("malformed complex entry '" + std::string(token) + "'"); };
  const std::size_t first = scan_real(token);
  if (first == 0) throw bad();
  if (first == token.size()) return {to_double(token), 0.0};
  if (first + 1 == token.size() && token.back() == 'j') return {0.0, to_double(token.substr(0, first))};

  const std::string_view rest = token.substr(first);
  if (rest.front() != '+' && rest.front() != '-') throw bad();
  const std::size_t second = scan_real(rest);
  if (second == 0 || second + 1 != rest.size() || rest.back() != 'j') throw bad();
  return {to_double(token.substr(0, first)), to_double(rest.substr(0, second))};
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

ComplexMatrix parse_matrix(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  std::size_t cursor = 0;
  const auto next_nonblank = [&]() -> const std::string* {
    while (cursor < lines.size()) {
      const std::string& l = lines[cursor++];
      if (l.find_first_not_of(" \t\r") != std::string::npos) return &l;
    }
    return nullptr;
  };

  const std::string* header = next_nonblank();
  if (header == nullptr) throw ParseError(1, "empty matrix file");
  std::size_t dim = 0;
  {
    std::istringstream in(*header);
    std::string extra;
    if (!(in >> dim) || dim == 0 || (in >> extra)) throw ParseError(cursor, "first line must be a positive dimension");
  }

  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string* row = next_nonblank();
    if (row == nullptr) throw ParseError(cursor + 1, "expected " + std::to_string(dim) + " rows");
    std::istringstream in(*row);
    std::string token;
    std::size_t c = 0;
    while (in >> token) {
      if (c == dim) throw ParseError(cursor, "too many entries in row");
      try {
        m(r, c++) = parse_complex(token);
      } catch (const std::invalid_argument& e) {
        throw ParseError(cursor, e.what());
      }
    }
    if (c != dim) throw ParseError(cursor, "expected " + std::to_string(dim) + " entries, got " + std::to_string(c));
  }
  if (next_nonblank() != nullptr) throw ParseError(cursor, "trailing content after matrix");
  return m;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out = std::to_string(m.rows()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_complex(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace geodiscord

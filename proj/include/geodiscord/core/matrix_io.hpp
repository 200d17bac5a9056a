#pragma once

#include "geodiscord/core/matrix.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geodiscord {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Plain-text matrix format:
//
//   2
//   0.5+0.0j 0.0+0.0j
//   0.0+0.0j 0.5+0.0j
//
// First line is the dimension, then one line per row of whitespace separated
// entries written `re+imj`. Scientific notation is accepted, as are bare
// reals (`0.5`) and bare imaginaries (`-2e-3j`).

Complex parse_complex(std::string_view token);
std::string format_complex(Complex z);

ComplexMatrix parse_matrix(std::string_view text);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const ComplexMatrix& m);

}  // namespace geodiscord

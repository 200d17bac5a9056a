#include <doctest.h>

#include "geodiscord/core/matrix_io.hpp"

#include <filesystem>
#include <fstream>
#include <string>

using namespace geodiscord;

TEST_CASE("complex tokens") {
  CHECK(parse_complex("0.5") == Complex(0.5, 0.0));
  CHECK(parse_complex("-2e-3j") == Complex(0.0, -2e-3));
  CHECK(parse_complex("1.5-0.25j") == Complex(1.5, -0.25));
  CHECK(parse_complex("+1e2+3E-1j") == Complex(100.0, 0.3));
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+2jx"), std::invalid_argument);

  for (Complex z : {Complex(0.1, -0.7), Complex(1.0 / 3.0, 2e-300), Complex(-0.0, 5.0)}) {
    CHECK(parse_complex(format_complex(z)) == z);
  }
}

TEST_CASE("matrix text round trip") {
  ComplexMatrix m(2, 2, {0.5, Complex(0.1, -0.2), Complex(0.1, 0.2), 0.5});
  CHECK(parse_matrix(format_matrix(m)) == m);

  const auto parsed = parse_matrix("\n2\n0.5 0\n\n0 0.5+0j\n");  // blank lines are skipped
  CHECK(parsed(0, 0) == Complex(0.5));
  CHECK(parsed(1, 1) == Complex(0.5));
}

TEST_CASE("matrix parse errors carry line numbers") {
  const auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_matrix(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("x\n") == 1);
  CHECK(line_of("2\n1 0\n0\n") == 3);
  CHECK(line_of("2\n1 0\n0 oops\n") == 3);
  CHECK(line_of("2\n1 0 0\n0 1\n") == 2);
  CHECK(line_of("1\n1\n1\n") == 3);
}

TEST_CASE("matrix file") {
  const auto path = std::filesystem::temp_directory_path() / "geodiscord_io_test.txt";
  {
    std::ofstream out(path);
    out << "2\n1 0\n0 0\n";
  }
  const auto m = read_matrix_file(path);
  CHECK(m(0, 0) == Complex(1.0));
  std::filesystem::remove(path);
  CHECK_THROWS(read_matrix_file(path));
}
